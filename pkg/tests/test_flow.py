import random

import pytest
from hypothesis import given, settings, strategies as st

from pmaxsat.flow import (
    FlowError, Network, augment, build_residual, flow_of_value_k, flow_update, flow_value, max_flow,
    network_from_arcs, normalize_capacities, parse_dimacs_max, reachable, shortest_path, validate_flow,
)
from pmaxsat.harness import random_network
from pmaxsat.oracle import brute_capacitated_max_flow, brute_max_flow
from pmaxsat.vcmatch import hochbaum

single = Network(2, [(0, 1)], 0, 1)


def test_residual_of_empty_flow_is_the_network():
    net = Network(3, [(0, 1), (1, 2), (0, 2)], 0, 2)
    assert build_residual(net, net.empty_flow()) == [[1, 2], [2], []]


def test_saturated_arc_reverses():
    assert build_residual(single, (1,)) == [[], [0]]


def test_figure_max_flow_leaves_no_path(figure):
    net = hochbaum(figure)
    f = max_flow(net)
    assert flow_value(net, f) == 5
    assert net.t not in reachable(build_residual(net, f), net.s)


def test_shortest_path_basics():
    assert shortest_path([[]], 0, 0) == [0]
    assert shortest_path([[1], [], []], 0, 2) is None


def test_shortest_path_prefers_smaller_vertex():
    adj = [[5, 2], [], [1], [], [], [1]]
    assert shortest_path(adj, 0, 1) == [0, 2, 1]


def test_augment():
    assert augment(single, (0,)) == (1,)
    assert augment(single, (1,)) == (1,)


def test_figure_augments_one_at_a_time(figure):
    net = hochbaum(figure)
    f = net.empty_flow()
    for value in range(1, 6):
        f = augment(net, f)
        validate_flow(net, f)
        assert flow_value(net, f) == value
    assert augment(net, f) == f


def test_flow_of_value_k(figure):
    net = hochbaum(figure)
    assert flow_of_value_k(net, 0) == net.empty_flow()
    assert flow_value(net, flow_of_value_k(net, 3)) == 3
    assert flow_value(net, flow_of_value_k(net, 9)) == 5


def test_flow_update_fixed_points(figure):
    net = hochbaum(figure)
    f = flow_of_value_k(net, 2)
    assert flow_update(net, f, 0) == f
    top = max_flow(net)
    assert flow_update(net, top, 4) == top


def test_invalid_flow_is_rejected():
    with pytest.raises(FlowError):
        validate_flow(Network(3, [(0, 1), (1, 2)], 0, 2), (1, 0))
    with pytest.raises(FlowError):
        Network(2, [(0, 1), (1, 0)], 0, 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 8))
def test_flow_update_reaches_min_of_target_and_max(seed, k):
    rng = random.Random(seed)
    net = random_network(rng, rng.randint(2, 9))
    start = flow_of_value_k(net, rng.randint(0, 3))
    f = flow_update(net, start, k)
    validate_flow(net, f)
    assert flow_value(net, f) == min(flow_value(net, start) + k, brute_max_flow(net))


def test_capacity_two_arc():
    net, pieces = normalize_capacities(2, [(0, 1, 2)], 0, 1)
    assert net.n == 4 and len(net.arcs) == 4 and len(pieces[0]) == 2
    assert flow_value(net, max_flow(net)) == 2


def test_antiparallel_arcs_are_subdivided():
    net = network_from_arcs(3, [(0, 1), (1, 0), (1, 2)], 0, 2)
    assert net.n == 4
    assert flow_value(net, max_flow(net)) == 1


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_capacitated_networks_match_cut_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    arcs = [(u, v, rng.randint(1, 3)) for u in range(n) for v in range(n) if u != v and rng.random() < 0.4]
    net, _ = normalize_capacities(n, arcs, 0, n - 1)
    assert flow_value(net, max_flow(net)) == brute_capacitated_max_flow(n, arcs, 0, n - 1)


def test_parse_dimacs_max():
    n, arcs, s, t = parse_dimacs_max("p max 3 2\nn 1 s\nn 3 t\na 1 2 4\na 2 3\n")
    assert (n, arcs, s, t) == (3, [(0, 1, 4), (1, 2, 1)], 0, 2)
    with pytest.raises(FlowError):
        parse_dimacs_max("p max 2 1\na 1 2\n")
