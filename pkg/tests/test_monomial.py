"""Monomial ideals: Hilbert functions, the dimension filtration, and local
cohomology of strongly stable quotients."""

import pytest
from hypothesis import given, settings, strategies as st

from seqcm.errors import CapacityError, NotStronglyStableError, UndefinedInputError
from seqcm.monomial import (
    MonomialIdeal,
    colon_saturate_variable,
    component_ideal,
    default_cohomology_window,
    dimension_filtration,
    hilbert_function,
    is_strongly_stable,
    krull_dimension,
    local_cohomology_strongly_stable,
    m_of,
    monomials_of_degree,
)
from seqcm.rings import Monomial


def count_outside(ideal, d):
    # Direct count of standard monomials in degree d.
    return sum(1 for u in monomials_of_degree(ideal.n, d)
               if not ideal.contains(u))


def test_minimal_generators():
    ideal = MonomialIdeal(2, [(1, 0), (2, 0), (1, 1)])
    assert [g.exponents for g in ideal.gens] == [(1, 0)]
    assert MonomialIdeal(2, [(0, 0), (1, 0)]).is_unit()
    assert MonomialIdeal.zero(3).is_zero()


def test_membership():
    ideal = MonomialIdeal(3, [(1, 1, 0), (0, 0, 2)])
    assert ideal.contains(Monomial((2, 1, 0)))
    assert not ideal.contains(Monomial((1, 0, 1)))
    assert ideal.contains_ideal(MonomialIdeal(3, [(1, 1, 1)]))


def test_monomials_of_degree():
    assert len(list(monomials_of_degree(3, 2))) == 6
    assert len(list(monomials_of_degree(4, 3))) == 20
    assert [u.exponents for u in monomials_of_degree(2, 0)] == [(0, 0)]


def test_m_of():
    assert m_of(Monomial((2, 0, 1))) == 3
    assert m_of(Monomial((0, 3, 0))) == 2
    with pytest.raises(UndefinedInputError):
        m_of(Monomial((0, 0)))


def test_strong_stability():
    assert is_strongly_stable(MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)])) == (True, None)
    ok, witness = is_strongly_stable(MonomialIdeal(2, [(1, 1)]))
    assert not ok
    assert witness == (Monomial((1, 1)), 2, 1)
    ok, witness = is_strongly_stable(MonomialIdeal(2, [(2, 0), (0, 2)]))
    assert not ok and witness[1:] == (2, 1)
    assert is_strongly_stable(MonomialIdeal.zero(2))[0]
    assert is_strongly_stable(MonomialIdeal.unit(2))[0]


def test_colon_saturate_variable():
    got = colon_saturate_variable(MonomialIdeal(2, [(2, 0), (1, 1)]), 2)
    assert [str(g) for g in got.gens] == ["x1"]
    got = colon_saturate_variable(MonomialIdeal(3, [(3, 0, 0), (1, 2, 0), (0, 1, 1)]), 3)
    assert sorted(str(g) for g in got.gens) == ["x1^3", "x2"]


def test_hilbert_frozen():
    h = hilbert_function(MonomialIdeal(2, [(2, 0), (1, 1)]), (0, 6))
    assert h.values == {0: 1, 1: 2, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1}
    assert h.value(50) == 1
    z = hilbert_function(MonomialIdeal.zero(2), (0, 5))
    assert z.value(9) == 10
    u = hilbert_function(MonomialIdeal.unit(2), (0, 3))
    assert u.values == {} and u.value(100) == 0


small_ideals = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
    min_size=0, max_size=4,
).map(lambda exps: MonomialIdeal(3, [e for e in exps if sum(e)]))


@given(small_ideals, st.integers(0, 7))
@settings(max_examples=60)
def test_hilbert_matches_direct_count(ideal, d):
    h = hilbert_function(ideal, (0, 8))
    assert h.value(d) == count_outside(ideal, d)


def test_hilbert_generator_cap():
    big = MonomialIdeal(3, [(a, b, c) for a in range(3) for b in range(3)
                            for c in range(3) if a + b + c == 4])
    with pytest.raises(CapacityError):
        hilbert_function(big, (0, 5), cap=3)


def test_krull_dimension():
    assert krull_dimension(MonomialIdeal(2, [(1, 1)])) == 1
    assert krull_dimension(MonomialIdeal.zero(3)) == 3
    assert krull_dimension(MonomialIdeal.unit(2)) == -1
    assert krull_dimension(MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == 0
    # Two disjoint edges: cover number 2.
    assert krull_dimension(MonomialIdeal(
        4, [(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)])) == 2


def test_component_ideal():
    got = component_ideal(MonomialIdeal(2, [(1, 0)]), 2)
    assert sorted(str(g) for g in got.gens) == ["x1*x2", "x1^2"]


def test_filtration_two_layers():
    filt = dimension_filtration(MonomialIdeal(2, [(2, 0), (1, 1)]))
    assert filt.dims() == [0, 1]
    assert [str(i) for i in filt.chain()] == ["(x1*x2, x1^2)", "(x1)", "(1)"]
    first, second = filt.layers
    assert (first.s, first.socle.values) == (2, {1: 1})
    assert (second.s, second.socle.values) == (1, {0: 1})


def test_filtration_primary_single_layer():
    filt = dimension_filtration(MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)]))
    assert filt.dims() == [0]
    assert filt.layers[0].socle.values == {0: 1, 1: 2, 2: 1}


def test_filtration_zero_ideal():
    filt = dimension_filtration(MonomialIdeal.zero(2))
    assert filt.dims() == [2]
    assert filt.layers[0].socle.values == {0: 1}
    assert [str(i) for i in filt.chain()] == ["(0)", "(1)"]


def test_filtration_rejects():
    with pytest.raises(UndefinedInputError):
        dimension_filtration(MonomialIdeal.unit(2))
    with pytest.raises(NotStronglyStableError):
        dimension_filtration(MonomialIdeal(2, [(1, 1)]))


def brute_socle(layer, n, d):
    # Monomials supported on x1..xs that entered the saturation at this step.
    total = 0
    for u in monomials_of_degree(n, d):
        if u.max_var > layer.s and u.degree > 0:
            continue
        if layer.next_ideal.contains(u) and not layer.ideal.contains(u):
            total += 1
    return total


def test_socle_against_enumeration():
    for gens in ([(2, 0), (1, 1)], [(2, 0), (1, 1), (0, 3)], [(3, 0), (2, 1)]):
        ideal = MonomialIdeal(2, gens)
        for layer in dimension_filtration(ideal).layers:
            lo, hi = layer.socle.window
            for d in range(lo, hi + 1):
                assert layer.socle.value(d) == brute_socle(layer, 2, d)


def test_telescoping_sum():
    ideal = MonomialIdeal(2, [(2, 0), (1, 1)])
    filt = dimension_filtration(ideal)
    window = (0, 8)
    h = hilbert_function(ideal, window)
    for d in range(window[0], window[1] + 1):
        total = sum(layer.hilbert_as_module(window).value(d)
                    for layer in filt.layers)
        assert total == h.value(d)


def test_local_cohomology_depth_zero_line():
    table = local_cohomology_strongly_stable(MonomialIdeal(2, [(2, 0)]))
    assert table.window == (-6, 2)
    assert table.indices() == [1]
    h1 = table.functions[1]
    assert h1.value(0) == 1
    assert all(h1.value(-j) == 2 for j in range(1, 7))
    assert h1.value(-40) == 2
    assert h1.value(1) == 0 and h1.value(30) == 0


def test_local_cohomology_polynomial_ring():
    table = local_cohomology_strongly_stable(MonomialIdeal.zero(2), (-5, 2))
    assert table.indices() == [2]
    h2 = table.functions[2]
    assert {d: h2.value(d) for d in range(-5, 0)} == {-5: 4, -4: 3, -3: 2, -2: 1, -1: 0}
    assert h2.value(-10) == 9


def test_local_cohomology_primary_is_h0():
    table = local_cohomology_strongly_stable(MonomialIdeal(2, [(2, 0), (1, 1), (0, 3)]))
    assert table.indices() == [0]
    assert table.functions[0].values == {0: 1, 1: 2, 2: 1}


def test_local_cohomology_rejects_non_stable():
    with pytest.raises(NotStronglyStableError):
        local_cohomology_strongly_stable(MonomialIdeal(2, [(1, 1)]))


def test_default_window():
    assert default_cohomology_window(MonomialIdeal(2, [(2, 0)])) == (-6, 2)
    assert default_cohomology_window(MonomialIdeal.zero(2)) == (-4, 0)
