import json

import pytest

from chromod.dyck import complete, enumerate_hess, is_abelian
from chromod.engine import expand
from chromod.network import (
    DIAG, VERT, NetworkError, a_coeff, build_network, endpoint_key, endpoint_polynomials,
    evaluate_network, is_manifestly_positive, max_clique_condition, network_expansion,
    network_json, numerators_nonnegative, start_point,
)
from chromod.qpoly import ONE, QPoly, QRat, q_int

H9 = (3, 5, 5, 6, 6, 6)

# point -> (a, denominator index) read off the drawn network
DRAWN = {(3, 5): (2, 2), (3, 4): (2, 3), (2, 4): (1, 3), (2, 3): (2, 4),
         (1, 3): (1, 4), (1, 2): (1, 5), (0, 1): (0, 6), (0, 2): (0, 5)}


def test_drawn_network_labels():
    net = build_network(H9)
    assert net.start == (3, 5)
    for p, (a, d) in DRAWN.items():
        diag = QRat(q_int(a), q_int(d))
        if p[0] > 0:
            assert net.edges[(p, DIAG)] == diag, p
        assert net.edges[(p, VERT)] == ONE - diag, p


def test_drawn_network_nodes():
    net = build_network(H9)
    assert net.nodes() == [(3, 5), (2, 4), (3, 4), (1, 3), (2, 3), (3, 3), (0, 2), (1, 2), (2, 2),
                           (0, 1), (1, 1), (0, 0)]
    assert net.endpoints == {(3, 3): (3, 3), (2, 2): (4, 2), (1, 1): (5, 1), (0, 0): (6,)}


def test_weights_sum_to_one():
    for n in range(1, 8):
        for h in enumerate_hess(n):
            if not is_abelian(h):
                continue
            net = build_network(h)
            for p in net.a_values:
                total = net.edges.get((p, DIAG), QRat(0)) + net.edges[(p, VERT)]
                assert total == ONE


def test_complete_is_degenerate():
    for n in range(1, 6):
        net = build_network(complete(n))
        assert net.start == (0, n)
        assert network_expansion(complete(n)) == {(n,): ONE}


def test_small_network():
    net = build_network((2, 3, 3))
    assert set(net.endpoints.items()) == {((1, 1), (2, 1)), ((0, 0), (3,))}
    q1 = QPoly([1, 1])
    assert network_expansion((2, 3, 3)) == {(3,): QRat(1, q1), (2, 1): QRat(QPoly([0, 1]), q1)}
    assert network_expansion((2, 3, 3)) == expand((2, 3, 3))


def test_matches_engine_n7():
    for n in range(1, 8):
        for h in enumerate_hess(n):
            if is_abelian(h):
                assert network_expansion(h) == expand(h), h


def test_evaluate_with_base():
    net = build_network(H9)
    assert evaluate_network(net, lambda key: ONE) == ONE


def test_helpers():
    assert endpoint_key(0, 5) == (5,)
    assert endpoint_key(2, 5) == (3, 2)
    assert endpoint_key(4, 5) == (4, 1)
    assert start_point(H9) == (3, 5)
    assert a_coeff(H9, 3, 4) == 2
    assert a_coeff(complete(4), 2, 3) == 2


def test_non_abelian_rejected():
    with pytest.raises(NetworkError):
        build_network((2, 4, 4, 5, 5))


def test_positivity_implication():
    witnesses = 0
    for n in range(1, 8):
        for h in enumerate_hess(n):
            if not is_abelian(h):
                continue
            if is_manifestly_positive(h):
                assert numerators_nonnegative(build_network(h))
            else:
                witnesses += 1
    assert is_manifestly_positive(complete(5))
    assert witnesses > 0


def test_endpoint_polynomials_are_polynomials():
    for n in range(2, 8):
        for h in enumerate_hess(n):
            if is_abelian(h):
                polys = endpoint_polynomials(h)
                assert all(isinstance(p, QPoly) for p in polys.values())


def test_exports():
    data = json.loads(network_json(H9))
    assert data["start"] == [3, 5]
    assert len(data["nodes"]) == 12
    dot = build_network(H9).to_dot()
    assert dot.startswith("digraph network {") and '"3,4" -> "3,3"' in dot
