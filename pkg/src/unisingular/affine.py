"""Induced monomial representations of affine groups G = A x| H and the
three independent unisingularity oracles: subspace covering, cycle products
of monomial matrices, and fixed points of the permutation model.

A is the additive group of F_r^d, H a matrix group acting on it, and the
linear character lambda(a) = zeta^{phi(a)} is determined by the functional
phi.  All exponent arithmetic stays in Z/r; no roots of unity are ever
evaluated numerically.
"""

import numpy as np

from .errors import CapExceeded, TrivialCharacter
from .field import (
    FMatrix,
    FieldSpec,
    Functional,
    FVector,
    all_vector_array,
    canonical_row,
)
from .groups import MatGroup, closure, is_prime


class AffineGroup:
    """G = A x| H with A = F_r^d elementary abelian and H < GL_d(r)."""

    def __init__(self, r, d, h_gens, cap=1 << 20):
        self.r = r
        self.d = d
        self.spec = FieldSpec(r, d)
        self.h_gens = list(h_gens)
        self.cap = cap
        self._h_elements = None

    def h_elements(self):
        if self._h_elements is None:
            self._h_elements = closure(self.h_gens, self.cap)
        return self._h_elements

    def order(self):
        return self.spec.size * len(self.h_elements())

    def __repr__(self):
        return "AffineGroup(r=%d, d=%d, |H|=%s)" % (
            self.r, self.d,
            len(self._h_elements) if self._h_elements else "?")


class LinearCharacter:
    """lambda(a) = zeta^{phi(a)}; only the kernel functional matters."""

    def __init__(self, phi, spec=None):
        row = phi.row if hasattr(phi, "row") else tuple(phi)
        if not any(row):
            raise TrivialCharacter("phi must be nonzero")
        if not hasattr(phi, "row"):
            phi = Functional(spec, row)
        self.phi = phi

    def __repr__(self):
        return "LinearCharacter(phi=%r)" % (self.phi,)


def _dual_exact(row, hinv_cols, r):
    "phi o h^-1 as an exact (uncanonicalized) row."
    return tuple(sum(a * b for a, b in zip(row, col)) % r for col in hinv_cols)


def _cyclic_exact_orbit(start, h, r):
    "Exact dual orbit of a row under a single generator, by iteration."
    hinv = np.array(h.inverse().rows, dtype=np.int64)
    points = [start]
    x = np.array(start, dtype=np.int64)
    while True:
        x = (x @ hinv) % r
        t = tuple(int(v) for v in x)
        if t == start:
            return points
        points.append(t)


class MonomialRep:
    """The induced representation lambda^G as permutation-plus-exponent data.

    points: the exact dual H-orbit of phi (cosets of the stabilizer
    H_lambda under exact functional equality, not up to scalar).
    """

    def __init__(self, affine, char):
        self.affine = affine
        self.phi = char.phi
        r = affine.r
        elements = affine.h_elements()
        start = tuple(char.phi.row)
        if len(affine.h_gens) == 1:
            points = _cyclic_exact_orbit(start, affine.h_gens[0], r)
        else:
            inv_cols = {h: tuple(zip(*h.inverse().rows)) for h in affine.h_gens}
            seen = {start}
            points = [start]
            boundary = [start]
            while boundary:
                nxt = []
                for row in boundary:
                    for h in affine.h_gens:
                        y = _dual_exact(row, inv_cols[h], r)
                        if y not in seen:
                            seen.add(y)
                            points.append(y)
                            nxt.append(y)
                boundary = nxt
        self.points = points
        self.point_index = {row: i for i, row in enumerate(points)}
        self.m = len(points)
        if len(elements) % self.m:
            raise CapExceeded("orbit size does not divide |H| (H not closed?)")
        self.stabilizer_order = len(elements) // self.m
        self._is_cyclic_prime = (
            len(affine.h_gens) == 1 and is_prime(len(elements)))

    def stabilizer(self):
        "H_lambda: exact stabilizer of phi under the dual action."
        r = self.affine.r
        start = tuple(self.phi.row)
        return [h for h in self.affine.h_elements()
                if _dual_exact(start, tuple(zip(*h.inverse().rows)), r) == start]

    def h_permutation(self, h):
        "Permutation of points under the dual action of h."
        r = self.affine.r
        cols = tuple(zip(*h.inverse().rows))
        return tuple(self.point_index[_dual_exact(row, cols, r)]
                     for row in self.points)

    def exponents(self, a):
        "Exponent vector of the diagonal part for a in A: phi_i(a) per point."
        r = self.affine.r
        coords = a.coords if isinstance(a, FVector) else a
        return tuple(sum(x * y for x, y in zip(row, coords)) % r
                     for row in self.points)

    def element(self, a, h):
        "The monomial matrix of (a, h) as (permutation, exponents)."
        return self.h_permutation(h), self.exponents(a)


def induced_monomial(affine, char):
    return MonomialRep(affine, char)


def eig1_monomial(perm, exponents, r):
    """Cycle-product rule: 1 is an eigenvalue iff some cycle's exponent sum
    vanishes mod r (the cycle scalar is then 1 and 1 is among the
    cycle-length-th roots of it)."""
    n = len(perm)
    seen = [False] * n
    for i in range(n):
        if seen[i]:
            continue
        total = 0
        j = i
        while not seen[j]:
            seen[j] = True
            total += exponents[j]
            j = perm[j]
        if total % r == 0:
            return True
    return False


def _cycle_sum_rows(perm, points, r):
    "One summed functional row per cycle of perm."
    n = len(perm)
    seen = [False] * n
    rows = []
    d = len(points[0])
    for i in range(n):
        if seen[i]:
            continue
        acc = [0] * d
        j = i
        while not seen[j]:
            seen[j] = True
            acc = [(a + b) % r for a, b in zip(acc, points[j])]
            j = perm[j]
        rows.append(tuple(acc))
    return rows


def _all_covered_by(rows, r, d):
    "Does every vector of F_r^d satisfy row(v) = 0 for some row?"
    if any(not any(row) for row in rows):
        return True
    distinct = {canonical_row(row, r) for row in rows}
    if d > 1 and len(distinct) == (r**d - 1) // (r - 1):
        # the kernels exhaust every hyperplane, so they cover everything
        return True
    # float64 matmul hits BLAS and stays exact: entries are bounded by
    # d * (r-1)^2, far below 2^53
    vecs = all_vector_array(r, d).astype(np.float64)
    mat = np.array(sorted(distinct), dtype=np.float64).T
    prods = (vecs @ mat).astype(np.int32) % r
    return bool((prods == 0).any(axis=1).all())


def is_unisingular_monomial(affine, char):
    """True iff every element (a, h) of A x| H has eigenvalue 1 in lambda^G.

    Elements are grouped by h: for fixed h the cycle sums of the monomial
    matrix are fixed functionals of a, so the quantifier over a becomes one
    bulk covering check per h.  Cyclic prime-order H short-circuits: each
    h != 1 is a single m-cycle whose cycle sum is the full orbit sum.
    """
    rep = induced_monomial(affine, char)
    r, d = affine.r, affine.d
    if rep._is_cyclic_prime and rep.stabilizer_order == 1:
        # h = identity: diagonal elements, need every a annihilated somewhere
        if not _all_covered_by(rep.points, r, d):
            return False
        # h != 1: single cycle with summed functional = orbit sum
        total = tuple(sum(col) % r for col in zip(*rep.points))
        return not any(total) or _all_covered_by([total], r, d)
    for h in affine.h_elements():
        perm = rep.h_permutation(h)
        rows = _cycle_sum_rows(perm, rep.points, r)
        if not _all_covered_by(rows, r, d):
            return False
    return True


class PermModel:
    """The transitive action of G/K0 on r*n' points of Lemma-style blocks.

    Points are pairs (coset index of N_H(K), residue mod r); block Delta_i
    is A/K_i with K_i the i-th conjugate kernel, identified with Z/r via
    the functional psi_i.
    """

    def __init__(self, affine, char):
        r, d = affine.r, affine.d
        self.affine = affine
        self.phi = char.phi
        start = canonical_row(char.phi.row, r)
        if len(affine.h_gens) == 1:
            seen = set()
            canon_orbit = []
            for row in _cyclic_exact_orbit(tuple(char.phi.row),
                                           affine.h_gens[0], r):
                y = canonical_row(row, r)
                if y not in seen:
                    seen.add(y)
                    canon_orbit.append(y)
        else:
            seen = {start}
            canon_orbit = [start]
            boundary = [start]
            inv_cols = {h: tuple(zip(*h.inverse().rows)) for h in affine.h_gens}
            while boundary:
                nxt = []
                for row in boundary:
                    for h in affine.h_gens:
                        y = canonical_row(_dual_exact(row, inv_cols[h], r), r)
                        if y not in seen:
                            seen.add(y)
                            canon_orbit.append(y)
                            nxt.append(y)
                boundary = nxt
        self.psi = canon_orbit  # one canonical functional per conjugate kernel
        self.nprime = len(canon_orbit)
        self.psi_index = {row: i for i, row in enumerate(canon_orbit)}
        self.npoints = r * self.nprime
        # a preimage a0_i with psi_i(a0_i) = 1, for residue transport
        self.preimages = []
        for row in canon_orbit:
            lead = next(k for k, x in enumerate(row) if x)
            coords = [0] * d
            coords[lead] = pow(row[lead], r - 2, r)
            self.preimages.append(tuple(coords))

    def point(self, i, c):
        return i * self.affine.r + (c % self.affine.r)

    def a_permutation(self, a):
        "a in A translates each block: (i, c) -> (i, c + psi_i(a))."
        r = self.affine.r
        coords = a.coords if isinstance(a, FVector) else a
        perm = []
        for i, row in enumerate(self.psi):
            shift = sum(x * y for x, y in zip(row, coords)) % r
            for c in range(r):
                perm.append(self.point(i, c + shift))
        return tuple(perm)

    def h_permutation(self, h):
        "h maps block i to the block of psi_i o h^-1, scaling residues."
        r = self.affine.r
        cols = tuple(zip(*h.inverse().rows))
        hmat_rows = h.rows
        perm = [0] * self.npoints
        for i, row in enumerate(self.psi):
            target = _dual_exact(row, cols, r)
            tcanon = canonical_row(target, r)
            j = self.psi_index[tcanon]
            # residue transport: c = psi_i(a) maps to psi_j(h a)
            a0 = self.preimages[i]
            ha0 = tuple(sum(x * y for x, y in zip(rw, a0)) % r for rw in hmat_rows)
            t = sum(x * y for x, y in zip(self.psi[j], ha0)) % r
            for c in range(r):
                perm[self.point(i, c)] = self.point(j, (t * c) % r)
        return tuple(perm)

    def a_orbit_sizes(self):
        "Sizes of A-orbits: block i splits iff psi_i = 0 (never, phi != 0)."
        return [self.affine.r if any(row) else 1 for row in self.psi]

    def every_a_fixes_a_point(self):
        "Bulk check: every a in A has psi_i(a) = 0 for some block i."
        r, d = self.affine.r, self.affine.d
        return _all_covered_by(self.psi, r, d)

    def is_transitive(self):
        gens = [self.h_permutation(h) for h in self.affine.h_gens]
        spec = self.affine.spec
        for k in range(self.affine.d):
            coords = [0] * self.affine.d
            coords[k] = 1
            gens.append(self.a_permutation(FVector(spec, coords)))
        seen = {0}
        boundary = [0]
        while boundary:
            nxt = []
            for x in boundary:
                for g in gens:
                    y = g[x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            boundary = nxt
        return len(seen) == self.npoints


def permutation_model(affine, char):
    """Build the permutation model and both gg2-style verdicts.

    Returns (model, verdict1, verdict2): verdict1 = all A-orbits have size
    exactly r; verdict2 = every a in A fixes a point.
    """
    model = PermModel(affine, char)
    verdict1 = all(s == affine.r for s in model.a_orbit_sizes())
    verdict2 = model.every_a_fixes_a_point()
    return model, verdict1, verdict2


def cyclic_sweep_primes(r, bound):
    """Odd primes p != r whose cyclic model fits in the bound: the minimal
    faithful dimension d = ord_p(r) satisfies r^d <= bound."""
    from .groups import is_prime, ord_mod

    out = []
    d = 1
    while r ** (d + 1) <= bound:
        d += 1
    for p in range(3, r**d):
        if p == r or not is_prime(p):
            continue
        if r ** ord_mod(r, p) <= bound:
            out.append(p)
    return out


def triple_oracle_agreement(r, p):
    """Compare the three unisingularity oracles on every hyperplane kernel
    of the cyclic model for (r, p): subspace covering, monomial cycle
    products, and the permutation model.

    Returns (num_hyperplanes, num_positive, mismatches) where mismatches
    lists (normal_index, verdicts) for any disagreement.
    """
    from .cover import covers_cyclic_fast
    from .field import hyperplanes
    from .groups import irreducible_cyclic_generator

    model = irreducible_cyclic_generator(r, p)
    affine = AffineGroup(r, model.d, [model.g])
    total = positive = 0
    mismatches = []
    for phi in hyperplanes(model.spec):
        total += 1
        v_cover = covers_cyclic_fast(model, phi, with_witness=False).covered
        char = LinearCharacter(phi)
        v_mono = is_unisingular_monomial(affine, char)
        _, v1, v2 = permutation_model(affine, char)
        v_perm = v1 and v2
        if v_cover == v_mono == v_perm:
            if v_cover:
                positive += 1
        else:
            mismatches.append((phi.index(),
                               {"covering": v_cover, "monomial": v_mono,
                                "perm": v_perm}))
    return total, positive, mismatches


def p_restricted_check(perms, npoints, bound):
    """Orbits of the subgroup generated by the given permutations all have
    size at most bound."""
    seen = [False] * npoints
    for start in range(npoints):
        if seen[start]:
            continue
        size = 0
        stack = [start]
        seen[start] = True
        while stack:
            x = stack.pop()
            size += 1
            for g in perms:
                y = g[x]
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        if size > bound:
            return False
    return True
