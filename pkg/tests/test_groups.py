import pytest

from unisingular.errors import UnsupportedDimension
from unisingular.field import FieldSpec, FMatrix, FVector
from unisingular.groups import (
    MatGroup,
    QuadraticSpace,
    centralizer_algebra_dim,
    closure,
    derived_subgroup,
    find_irreducible_poly,
    generating_set,
    irreducible_cyclic_generator,
    is_irreducible,
    isometry_group,
    orbit,
    ord_mod,
    spin,
)


def test_ord_mod():
    assert ord_mod(3, 11) == 5
    assert ord_mod(3, 13) == 3
    assert ord_mod(2, 7) == 3
    assert ord_mod(3, 73) == 12


def test_find_irreducible_poly_degree2():
    # x^2 + x + 2 is the least irreducible polynomial over F_3 whose root
    # has multiplicative order 8
    poly = find_irreducible_poly(3, 2)
    assert len(poly) == 3 and poly[-1] == 1


def test_cyclic_generator_order_and_irreducibility():
    model = irreducible_cyclic_generator(3, 11)
    assert model.d == 5
    assert model.g.order() == 11
    assert is_irreducible([model.g])


def test_smallest_cyclic_generator_2_3():
    model = irreducible_cyclic_generator(2, 3)
    assert model.g.rows == ((0, 1), (1, 1))


def test_closure_and_group_order():
    spec = FieldSpec(3, 2)
    g = FMatrix(spec, [[0, 2], [1, 0]])  # order 4
    els = closure([g])
    assert len(els) == 4


def test_orbit_left_and_dual():
    model = irreducible_cyclic_generator(3, 11)
    grp = MatGroup(model.spec, [model.g])
    vec_orbit = orbit(grp, FVector(model.spec, (1, 0, 0, 0, 0)))
    assert len(vec_orbit) == 11
    dual = orbit(grp, (1, 0, 0, 0, 0), action="dual")
    assert len(dual) == 11


def test_centralizer_algebra_dim_of_cyclic_model():
    model = irreducible_cyclic_generator(3, 11)
    # the centralizer algebra is the field F_{3^5}, dimension 5 over F_3
    assert centralizer_algebra_dim([model.g]) == 5


def test_spin_finds_invariant_subspace():
    spec = FieldSpec(3, 2)
    g = FMatrix(spec, [[1, 1], [0, 1]])
    sub = spin([g], (1, 0), spec)
    assert sub.dim == 1
    assert not is_irreducible([g])


def test_isometry_group_minus_type():
    spec = FieldSpec(3, 4)
    space = QuadraticSpace(spec, [[2, 0, 0, 0], [0, 1, 0, 0],
                                  [0, 0, 1, 0], [0, 0, 0, 1]])
    full = isometry_group(space)
    assert len(full.elements()) == 1440
    for g in full.gens:
        for v in ((1, 0, 0, 0), (1, 1, 0, 0), (0, 1, 2, 1)):
            w = g.matvec(FVector(spec, v))
            assert space.q(w.coords) == space.q(v)


def test_isometry_group_dimension_guard():
    spec = FieldSpec(3, 5)
    space = QuadraticSpace(spec, [[1 if i == j else 0 for j in range(5)]
                                  for i in range(5)])
    with pytest.raises(UnsupportedDimension):
        isometry_group(space)


def test_derived_subgroup_of_isometry_group():
    spec = FieldSpec(3, 4)
    space = QuadraticSpace(spec, [[2, 0, 0, 0], [0, 1, 0, 0],
                                  [0, 0, 1, 0], [0, 0, 0, 1]])
    full = isometry_group(space)
    dg = derived_subgroup(full.elements())
    assert len(dg.elements()) == 360
    assert is_irreducible(dg)
    # perfect: the derived subgroup of a perfect group is itself
    dg2 = derived_subgroup(generating_set(dg.elements()))
    assert len(dg2.elements()) == 360


def test_generating_set_small():
    model = irreducible_cyclic_generator(3, 11)
    els = closure([model.g])
    gens = generating_set(els)
    assert len(closure(gens)) == 11
    assert len(gens) <= 2
