from itertools import product as cartesian

import pytest
from hypothesis import given, settings, strategies as st

from coverlab.graphs import (
    complete_graph,
    complete_multipartite,
    cover_ideal,
    crown,
    crown_monomials,
    multipartite_monomials,
)
from coverlab.monomial import Monomial, MonomialIdeal, PreconditionError, colon, product
from coverlab.powers import (
    bracket_power,
    multipartite_chain_ideal,
    multipartite_symbolic_generators,
    power,
    symbolic_membership,
    symbolic_power,
)

from oracles import minimal_set, symbolic_member
from test_graphs import partitions

XY = MonomialIdeal(2, [(1, 0), (0, 1)])
TRIANGLE = cover_ideal(complete_graph(3))


def test_power_examples():
    assert power(XY, 2) == MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])
    assert power(TRIANGLE, 0).is_unit()
    J2 = power(cover_ideal(crown(3)), 2)
    assert all(6 <= sum(g) <= 8 for g in J2.gens)
    with pytest.raises(PreconditionError):
        power(XY, -1)


def test_power_is_iterated_product():
    J = cover_ideal(crown(3))
    assert power(J, 3) == product(product(J, J), J)


def test_bracket_power_examples():
    assert bracket_power(XY, 2) == MonomialIdeal(2, [(2, 0), (0, 2)])
    assert bracket_power(TRIANGLE, 2).gens == ((0, 2, 2), (2, 0, 2), (2, 2, 0))
    assert bracket_power(TRIANGLE, 1) == TRIANGLE
    with pytest.raises(PreconditionError):
        bracket_power(XY, 0)


def test_symbolic_power_examples():
    assert symbolic_power(TRIANGLE, 2).gens == ((1, 1, 1), (0, 2, 2), (2, 0, 2), (2, 2, 0))
    primes = [MonomialIdeal.variables(e, 3) for e in ((0, 1), (0, 2), (1, 2))]
    assert symbolic_power(TRIANGLE, 2) == power(primes[0], 2) & power(primes[1], 2) & power(primes[2], 2)
    assert symbolic_power(TRIANGLE, 1) == TRIANGLE
    J = cover_ideal(crown(3))
    assert symbolic_power(J, 2) == power(J, 2)
    assert symbolic_power(TRIANGLE, 0).is_unit()


def test_symbolic_power_rejects_bad_input():
    with pytest.raises(PreconditionError):
        symbolic_power(MonomialIdeal(2, [(2, 0)]), 2)
    with pytest.raises(PreconditionError):
        symbolic_power(TRIANGLE, -1)
    with pytest.raises(PreconditionError):
        symbolic_power(MonomialIdeal.unit(2), 1)


def test_symbolic_membership_examples():
    assert symbolic_membership(TRIANGLE, Monomial((1, 1, 1)), 2)
    assert symbolic_membership(TRIANGLE, Monomial((2, 2, 0)), 2)
    assert not symbolic_membership(TRIANGLE, Monomial((2, 2, 0)), 3)
    assert symbolic_membership(TRIANGLE, Monomial((0, 0, 0)), 0)


def test_multipartite_recursion_examples():
    assert multipartite_symbolic_generators((1, 1, 1), 2) == \
        MonomialIdeal(3, [(1, 1, 1), (0, 2, 2), (2, 0, 2), (2, 2, 0)])
    # frozen from the p-degree enumeration oracle
    assert multipartite_symbolic_generators((1, 1, 1), 3).gens == \
        ((1, 2, 2), (2, 1, 2), (2, 2, 1), (0, 3, 3), (3, 0, 3), (3, 3, 0))
    assert multipartite_symbolic_generators((2, 1, 1), 1) == cover_ideal(complete_multipartite((2, 1, 1)))


def test_symbolic_cube_of_triangle_by_enumeration():
    primes = [(0, 1), (0, 2), (1, 2)]
    members = [e for e in cartesian(range(7), repeat=3) if symbolic_member(primes, e, 3)]
    assert set(symbolic_power(TRIANGLE, 3).gens) == minimal_set(members)


def test_chain_ideal():
    assert multipartite_chain_ideal((2, 1), 2, 1) == MonomialIdeal(3, [(0, 0, 2), (1, 1, 1)])
    with pytest.raises(PreconditionError):
        multipartite_chain_ideal((2, 1), 1, 1)
    with pytest.raises(PreconditionError):
        multipartite_chain_ideal((2, 1), 2, 3)


# -- invariants ---------------------------------------------------------------

SQUAREFREE_6 = [cover_ideal(complete_multipartite(p)) for p in ((1, 1, 1), (2, 1, 1), (2, 2))] + \
    [cover_ideal(crown(3))]


@pytest.mark.parametrize("I", SQUAREFREE_6, ids=lambda I: f"{I.ambient}vars")
@pytest.mark.parametrize("s", [1, 2, 3])
def test_membership_agrees_with_generators(I, s):
    n = I.ambient
    bound = 2 * s
    if n > 4:
        bound = min(bound, 2)
    S = symbolic_power(I, s)
    for e in cartesian(range(bound + 1), repeat=n):
        u = Monomial(e)
        assert (u in S) == symbolic_membership(I, u, s)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SQUAREFREE_6), st.integers(1, 3),
       st.lists(st.integers(0, 6), min_size=6, max_size=6))
def test_membership_agrees_random(I, s, e):
    u = Monomial(tuple(min(x, 2 * s) for x in e[: I.ambient]))
    assert (u in symbolic_power(I, s)) == symbolic_membership(I, u, s)


@pytest.mark.parametrize("G", [crown(3), crown(4), complete_multipartite((2, 2))],
                         ids=["C3,3", "C4,4", "K2,2"])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_bipartite_powers_are_symbolic(G, s):
    J = cover_ideal(G)
    assert power(J, s) == symbolic_power(J, s)


PARTS_UP_TO_6 = [p for n in range(2, 7) for p in partitions(n) if len(p) >= 2]


@pytest.mark.parametrize("parts", PARTS_UP_TO_6)
@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_multipartite_recursion_matches_intersection(parts, s):
    # includes k = 2, where the recursion is checked empirically
    J = cover_ideal(complete_multipartite(parts))
    assert multipartite_symbolic_generators(parts, s) == symbolic_power(J, s)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("s", [2, 3])
def test_crown_colon_identities(n, s):
    c = crown_monomials(n)
    N = 2 * n
    J = cover_ideal(crown(n))
    Js, Jprev = power(J, s), power(J, s - 1)
    Mx = MonomialIdeal.principal(c.Mx)
    assert colon(Js, c.Mx) == Jprev
    assert colon(Js + Mx, c.My) == Jprev + Mx
    for i in range(1, n + 1):
        K = MonomialIdeal(N, [*Js.generators, c.Mx, c.My, *c.Mi[: i - 1]])
        assert colon(K, c.Mi[i - 1]) == MonomialIdeal(N, [c.x(i), c.y(i), c.Mi[i - 1] ** (s - 1)])


@pytest.mark.parametrize("parts", [(1, 1, 1), (2, 1, 1), (2, 2, 1)])
@pytest.mark.parametrize("s", [2, 3, 4])
def test_multipartite_colon_identities(parts, s):
    m = multipartite_monomials(parts)
    J = cover_ideal(complete_multipartite(parts))
    M = MonomialIdeal.principal(m.M)
    assert colon(symbolic_power(J, s), m.M) == symbolic_power(J, s - 2)
    assert symbolic_power(J, s) + M == bracket_power(J, s) + M
    for i in range(2, len(parts) + 1):
        lhs = colon(MonomialIdeal(m.n, [N ** s for N in m.Ni[: i - 1]]), m.Ni[i - 1] ** s)
        assert lhs == MonomialIdeal.principal(m.Mi[i - 1] ** s)
    assert colon(bracket_power(J, s), m.M) == bracket_power(J, s - 1)
