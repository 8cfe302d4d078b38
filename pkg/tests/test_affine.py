import itertools

import pytest

from unisingular.affine import (
    AffineGroup,
    LinearCharacter,
    cyclic_sweep_primes,
    eig1_monomial,
    induced_monomial,
    is_unisingular_monomial,
    permutation_model,
    triple_oracle_agreement,
)
from unisingular.cover import covers
from unisingular.errors import TrivialCharacter
from unisingular.field import (
    FieldSpec,
    FMatrix,
    Functional,
    FVector,
    Subspace,
    canonical_row,
    hyperplanes,
)
from unisingular.groups import MatGroup, irreducible_cyclic_generator, spin


def _cyclic_affine(r, p):
    model = irreducible_cyclic_generator(r, p)
    return model, AffineGroup(r, model.d, [model.g])


def test_trivial_character_rejected():
    spec = FieldSpec(3, 2)
    with pytest.raises(TrivialCharacter):
        LinearCharacter((0, 0), spec)


def test_monomial_rep_orbit_size():
    model, affine = _cyclic_affine(3, 11)
    phi = next(iter(hyperplanes(model.spec)))
    rep = induced_monomial(affine, LinearCharacter(phi))
    assert rep.m == 11
    assert rep.stabilizer_order == 1
    assert len(rep.stabilizer()) == 1


def test_eig1_cycle_product_rule():
    # identity permutation: diagonal matrix, eigenvalue 1 iff a zero exponent
    assert eig1_monomial((0, 1, 2), (1, 2, 0), 3)
    assert not eig1_monomial((0, 1, 2), (1, 2, 2), 3)
    # 3-cycle: eigenvalue 1 iff exponent sum vanishes
    assert eig1_monomial((1, 2, 0), (1, 2, 0), 3)
    assert not eig1_monomial((1, 2, 0), (1, 1, 0), 3)


def test_monomial_matches_brute_force_small():
    # (r, p) = (3, 13): d = 3, orbit size 13, small enough to check the
    # cycle rule against explicit element enumeration
    model, affine = _cyclic_affine(3, 13)
    phi = next(iter(hyperplanes(model.spec)))
    char = LinearCharacter(phi)
    rep = induced_monomial(affine, char)
    verdict = True
    for h in affine.h_elements():
        perm = rep.h_permutation(h)
        for a in range(3**3):
            coords = tuple((a // 3**k) % 3 for k in range(3))
            if not eig1_monomial(perm, rep.exponents(coords), 3):
                verdict = False
    assert is_unisingular_monomial(affine, char) == verdict


def test_permutation_model_structure():
    model, affine = _cyclic_affine(3, 11)
    phi = next(iter(hyperplanes(model.spec)))
    pm, v1, v2 = permutation_model(affine, LinearCharacter(phi))
    assert pm.nprime == 11
    assert pm.npoints == 33
    assert all(s == 3 for s in pm.a_orbit_sizes())
    assert v1 and v2
    assert pm.is_transitive()


def test_triple_oracle_agreement_samples():
    for (r, p) in ((3, 11), (3, 5), (2, 7), (5, 3)):
        total, positive, mismatches = triple_oracle_agreement(r, p)
        assert not mismatches
        if (r, p) == (3, 11):
            assert positive == total == 121
        if (r, p) in ((3, 5), (5, 3)):
            assert positive == 0


def test_sweep_prime_lists():
    assert cyclic_sweep_primes(3, 2187) == [5, 7, 11, 13, 1093]
    assert cyclic_sweep_primes(5, 2187) == [3, 13, 31]


def test_a6_monomial_unisingular():
    from unisingular.catalog import a6_on_f3_4
    from unisingular.groups import generating_set

    group, _ = a6_on_f3_4()
    gens = generating_set(group.elements())
    affine = AffineGroup(3, 4, gens)
    phi = next(iter(hyperplanes(affine.spec)))
    char = LinearCharacter(phi)
    rep = induced_monomial(affine, char)
    assert rep.m == 30
    assert rep.stabilizer_order == 12
    assert is_unisingular_monomial(affine, char)
    _, v1, v2 = permutation_model(affine, char)
    assert v1 and v2


# --- diagonal abelian groups: kernel-union criterion and rank bound ---


def _canonical_functionals(k):
    "All canonical nonzero rows of length k over F_3."
    seen = set()
    out = []
    for i in range(1, 3**k):
        row = tuple((i // 3**j) % 3 for j in range(k))
        c = canonical_row(row, 3)
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def _row_rank(rows, r=3):
    rows = [list(row) for row in rows]
    rank = 0
    ncols = len(rows[0])
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % r), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col] % r, r - 2, r)
        rows[rank] = [(x * inv) % r for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % r:
                f = rows[i][col]
                rows[i] = [(a - f * b) % r for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _covers_mask(row, k):
    mask = 0
    for i in range(3**k):
        v = tuple((i // 3**j) % 3 for j in range(k))
        if sum(a * b for a, b in zip(row, v)) % 3 == 0:
            mask |= 1 << i
    return mask


def test_kernel_union_criterion_matches_eig1():
    # diagonal action of A = F_3^k on l lines via functionals: element a has
    # eigenvalue 1 iff it lies in some kernel
    k, l = 2, 3
    funcs = _canonical_functionals(k)
    ident = tuple(range(l))
    for rows in itertools.combinations(funcs, l):
        union = set()
        for row in rows:
            for i in range(3**k):
                v = tuple((i // 3**j) % 3 for j in range(k))
                if sum(a * b for a, b in zip(row, v)) % 3 == 0:
                    union.add(v)
        for i in range(3**k):
            a = tuple((i // 3**j) % 3 for j in range(k))
            exps = tuple(sum(x * y for x, y in zip(row, a)) % 3
                         for row in rows)
            assert eig1_monomial(ident, exps, 3) == (a in union)


def test_rank_bound_exhaustive_l_le_4():
    # if l functionals of full rank k cover F_3^k then k <= l - 2;
    # exhaustive over multisets of canonical functionals, l <= 4, k <= 4
    for l in range(1, 5):
        for k in range(1, 5):
            funcs = _canonical_functionals(k)
            full = (1 << 3**k) - 1
            masks = {f: _covers_mask(f, k) for f in funcs}
            for rows in itertools.combinations_with_replacement(funcs, l):
                mask = 0
                for row in rows:
                    mask |= masks[row]
                if mask != full:
                    continue
                # covering with no common fixed vector forces low rank
                if _row_rank(rows) == k:
                    assert k <= l - 2, (k, l, rows)


def test_rank_bound_is_tight():
    # all four lines of F_3^2 cover it with rank 2 = l - 2
    funcs = _canonical_functionals(2)
    assert len(funcs) == 4
    mask = 0
    for f in funcs:
        mask |= _covers_mask(f, 2)
    assert mask == (1 << 9) - 1
    assert _row_rank(funcs) == 2


# --- restriction of covering to invariant subspaces ---


def _doubled_model(r, p):
    "The cyclic model acting diagonally on V + V."
    model = irreducible_cyclic_generator(r, p)
    d = model.d
    spec2 = FieldSpec(r, 2 * d)
    rows = [[0] * (2 * d) for _ in range(2 * d)]
    for i in range(d):
        for j in range(d):
            rows[i][j] = model.g.rows[i][j]
            rows[d + i][d + j] = model.g.rows[i][j]
    return model, spec2, FMatrix(spec2, rows)


def _restrict(gens, sub):
    "Matrices of the action on an invariant subspace in its basis."
    spec = sub.spec
    small = FieldSpec(spec.r, sub.dim)
    basis = [FVector(spec, b) for b in sub.basis]
    vec_list = [tuple(v) for v in sub.vectors()]
    coord = {}
    for digits in itertools.product(range(spec.r), repeat=sub.dim):
        v = [0] * spec.n
        for c, b in zip(digits, sub.basis):
            v = [(x + c * y) % spec.r for x, y in zip(v, b)]
        coord[tuple(v)] = digits
    out = []
    for g in gens:
        rows = [coord[g.matvec(b).coords] for b in basis]
        out.append(FMatrix(small, rows))
    return small, out


def test_restriction_property_doubled_2_7():
    model, spec2, gbig = _doubled_model(2, 7)
    from unisingular.cover import search_cover
    from unisingular.field import index_vec

    w = search_cover(2, 7)
    assert w is not None
    krows = [tuple(index_vec(model.spec, i).coords) for i in w.dual_orbit]
    # W = (covering kernel) + V2: a covered pair on V1 + V2
    ker = Functional(model.spec, tuple(index_vec(model.spec, w.normal).coords)).kernel()
    wbasis = [tuple(b) + (0,) * 3 for b in ker.basis]
    wbasis += [(0,) * 3 + tuple(b) for b in
               ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    big_w = Subspace(spec2, wbasis)
    grp = MatGroup(spec2, [gbig])
    assert covers(grp, big_w).covered
    # every proper invariant subspace found by spinning inherits the cover
    seen = set()
    found = 0
    for i in range(1, 2**6):
        coords = tuple((i >> j) & 1 for j in range(6))
        sub = spin([gbig], coords, spec2)
        if sub.basis in seen or sub.dim in (0, 6):
            continue
        seen.add(sub.basis)
        found += 1
        inter_vecs = [v for v in sub.vectors() if big_w.contains(v)]
        inter = Subspace(spec2, inter_vecs)
        if inter.dim == sub.dim or inter.dim == 0:
            continue
        small, rgens = _restrict([gbig], sub)
        small_w_vecs = []
        coord = {}
        for digits in itertools.product(range(2), repeat=sub.dim):
            v = [0] * 6
            for c, b in zip(digits, sub.basis):
                v = [(x + c * y) % 2 for x, y in zip(v, b)]
            coord[tuple(v)] = digits
        small_w = Subspace(small, [coord[tuple(v)] for v in inter_vecs])
        assert covers(MatGroup(small, rgens), small_w).covered
    assert found >= 2
