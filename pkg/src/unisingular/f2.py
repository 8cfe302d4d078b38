"""Witness representations over F_2, with bit-packed matrices.

A GF(2) matrix of dimension n is a tuple of n integers; bit j of row i is
the entry (i, j).  Eigenvalue 1 of an element g is decided by the rank of
g - I; in ambient characteristic 2 only odd-order elements matter, so the
element streams carry group-theoretic order information where the source
structure provides it cheaply.
"""

import json

import numpy as np

from .errors import CapExceeded, MalformedWitness, UnsupportedShape
from .field import FieldSpec, FMatrix, all_vector_array, index_powers
from .groups import closure, irreducible_cyclic_generator, ord_mod

# -- bit-packed GF(2) matrix helpers ----------------------------------------

def gf2_identity(n):
    return tuple(1 << i for i in range(n))


def gf2_mul(a, b, n):
    out = []
    for row in a:
        acc = 0
        x = row
        while x:
            j = (x & -x).bit_length() - 1
            acc ^= b[j]
            x &= x - 1
        out.append(acc)
    return tuple(out)


def gf2_pow(a, e, n):
    result = gf2_identity(n)
    base = a
    while e:
        if e & 1:
            result = gf2_mul(result, base, n)
        base = gf2_mul(base, base, n)
        e >>= 1
    return result


def gf2_rank(rows):
    basis = {}
    rank = 0
    for row in rows:
        while row:
            piv = row.bit_length() - 1
            if piv in basis:
                row ^= basis[piv]
            else:
                basis[piv] = row
                rank += 1
                break
    return rank


def gf2_order(a, n, cap=1 << 20):
    ident = gf2_identity(n)
    g = a
    k = 1
    while g != ident:
        g = gf2_mul(g, a, n)
        k += 1
        if k > cap:
            raise CapExceeded("element order exceeds cap")
    return k


def gf2_has_eig1(g, n):
    ident = gf2_identity(n)
    diff = tuple(r ^ i for r, i in zip(g, ident))
    return gf2_rank(diff) < n


def gf2_invertible(g, n):
    return gf2_rank(g) == n


def gf2_to_fmatrix(g, n):
    spec = FieldSpec(2, n)
    rows = tuple(tuple((row >> j) & 1 for j in range(n)) for row in g)
    return FMatrix(spec, rows)


# -- representation container ------------------------------------------------

class F2Rep:
    """A matrix representation over F_2 with a streamable element source.

    elements() yields (matrix, order) pairs; order may be None when the
    source cannot supply it cheaply (it is then computed by powering).
    """

    def __init__(self, dim, gens, source, element_stream=None, group_order=None):
        self.dim = dim
        self.gens = [tuple(g) for g in gens]
        self.source = source
        self._element_stream = element_stream
        self.group_order = group_order
        for g in self.gens:
            if not gf2_invertible(g, dim):
                raise UnsupportedShape("generator not invertible over F2")

    def elements(self, odd_only=False):
        if self._element_stream is not None:
            yield from self._element_stream(odd_only)
            return
        for el in closure_gf2(self.gens, self.dim):
            order = gf2_order(el, self.dim)
            if odd_only and order % 2 == 0:
                continue
            yield el, order

    def to_json(self, checks=None):
        return {
            "dim": self.dim,
            "generators": [["%x" % row for row in g] for g in self.gens],
            "source": self.source,
            "checks": checks or {},
        }

    def dumps(self, checks=None):
        return json.dumps(self.to_json(checks))

    @classmethod
    def from_json(cls, obj):
        try:
            dim = int(obj["dim"])
            gens = [tuple(int(row, 16) for row in g) for g in obj["generators"]]
            source = str(obj.get("source", "json"))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedWitness(str(exc))
        return cls(dim, gens, source)


def closure_gf2(gens, n, cap=1 << 21):
    ident = gf2_identity(n)
    seen = {ident}
    order = [ident]
    boundary = [ident]
    while boundary:
        nxt = []
        for el in boundary:
            for g in gens:
                prod = gf2_mul(el, g, n)
                if prod not in seen:
                    seen.add(prod)
                    order.append(prod)
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise CapExceeded("closure exceeds cap")
        boundary = nxt
    return order


def is_unisingular_f2(rep, odd_only=True):
    """True iff every (odd-order, by default) element has eigenvalue 1."""
    for el, order in rep.elements(odd_only=odd_only):
        if odd_only:
            if order is None:
                order = gf2_order(el, rep.dim)
            if order % 2 == 0:
                continue
        if not gf2_has_eig1(el, rep.dim):
            return False
    return True


def centralizer_dim_f2(rep):
    "Dimension over F_2 of the joint centralizer algebra of the generators."
    from .groups import centralizer_algebra_dim

    return centralizer_algebra_dim([gf2_to_fmatrix(g, rep.dim) for g in rep.gens])


# -- the 2p-dimensional realization of A x| C_2p over F_2 --------------------

M3 = ((0, 1), (1, 1))     # order-3 action of A/K on the 2-dim F2 block
SWAP = ((0, 1), (1, 0))   # the inversion involution per block


def _block_matrix(blocks, p):
    """Assemble a 2p-dim bit-packed matrix from a map
    (block_row -> (block_col, 2x2 block))."""
    rows = []
    for i in range(p):
        col, blk = blocks[i]
        for br in range(2):
            acc = 0
            for bc in range(2):
                if blk[br][bc]:
                    acc |= 1 << (2 * col + bc)
            rows.append(acc)
    return tuple(rows)


def _m3_power(e):
    if e % 3 == 0:
        return ((1, 0), (0, 1))
    if e % 3 == 1:
        return M3
    return ((1, 1), (1, 0))


def f2_realize(p, phi=None):
    """The 2p-dimensional F_2 realization of lambda^G for
    G = F_3^d x| C_2p, with C_p acting irreducibly and the extra involution
    acting on A as inversion.

    One 2-dimensional block per C_p-conjugate of the kernel: A/K acts as the
    order-3 matrix [[0,1],[1,1]], the involution as the swap, and C_p
    permutes the blocks cyclically.  phi defaults to the least-index
    covering functional; a non-covering phi is allowed (the verdict is then
    computed, not asserted).
    """
    if p % 2 == 0 or p < 3:
        raise UnsupportedShape("p must be an odd prime")
    model = irreducible_cyclic_generator(3, p)
    d = model.d
    spec = model.spec
    if phi is None:
        from .cover import search_cover

        w = search_cover(3, p)
        if w is None:
            from .field import hyperplanes

            phi = hyperplanes(spec)[0]
        else:
            from .field import index_vec, Functional

            phi = Functional(spec, index_vec(spec, w.normal).coords)
    # exact dual orbit rows phi o g^-i, one per block
    ginv_cols = tuple(zip(*model.g.inverse().rows))
    orbit_rows = [tuple(phi.row)]
    for _ in range(p - 1):
        row = orbit_rows[-1]
        orbit_rows.append(tuple(
            sum(a * b for a, b in zip(row, col)) % 3 for col in ginv_cols))
    dim = 2 * p

    def a_matrix(coords):
        blocks = {}
        for i, row in enumerate(orbit_rows):
            e = sum(x * y for x, y in zip(row, coords)) % 3
            blocks[i] = (i, _m3_power(e))
        return _block_matrix(blocks, p)

    ident2 = ((1, 0), (0, 1))
    h_matrix = _block_matrix({i: ((i + 1) % p, ident2) for i in range(p)}, p)
    t_matrix = _block_matrix({i: (i, SWAP) for i in range(p)}, p)

    gens = [a_matrix(tuple(1 if k == j else 0 for k in range(d)))
            for j in range(d)]
    gens += [gf2_mul(t_matrix, h_matrix, dim)]  # generator of C_2p

    g_rows = [tuple(r) for r in model.g.rows]

    def stream(odd_only):
        """(a, c^j) pairs; odd-order elements are exactly those with c^j in
        the C_p part.  For j != 0 the order of (a, h^j) is exactly p: the
        p-th power collects the norm sum of a, which vanishes because the
        p-th cyclotomic polynomial annihilates every nontrivial power of g.
        """
        vecs = all_vector_array(3, d)
        # c = t*h generates C_2p; its even powers run through C_p = <h>
        h_powers = [gf2_identity(dim)]
        for _ in range(p - 1):
            h_powers.append(gf2_mul(h_powers[-1], h_matrix, dim))
        for j in range(p):
            base = h_powers[j]
            for v in vecs:
                am = a_matrix(tuple(int(x) for x in v))
                order = p if j else (1 if not v.any() else 3)
                yield gf2_mul(am, base, dim), order
        if odd_only:
            return
        for j in range(p):
            base = gf2_mul(t_matrix, h_powers[j], dim)
            for v in vecs:
                am = a_matrix(tuple(int(x) for x in v))
                yield gf2_mul(am, base, dim), None

    rep = F2Rep(dim, gens, "affine(3,%d,C%d)" % (d, 2 * p),
                element_stream=stream, group_order=(3**d) * 2 * p)
    rep.model = model
    rep.phi = phi
    rep.orbit_rows = orbit_rows
    return rep


# -- AGL_1(q) permutation witnesses ------------------------------------------

def agl1_witness(q):
    """The (q-1)-dimensional sum-zero F_2 submodule of AGL_1(q) acting on
    the affine line of F_q, q in {5, 7, 9}."""
    if q not in (5, 7, 9):
        raise UnsupportedShape("q must be one of 5, 7, 9")
    if q == 9:
        # F_9 = F_3[x]/(x^2+1); points indexed little-endian base 3
        elems = [(a, b) for b in range(3) for a in range(3)]
        index = {e: i for i, e in enumerate(elems)}

        def add(u, v):
            return ((u[0] + v[0]) % 3, (u[1] + v[1]) % 3)

        def mul(u, v):
            # (a + bx)(c + dx) with x^2 = -1
            a, b = u
            c, d = v
            return ((a * c - b * d) % 3, (a * d + b * c) % 3)

        one = (1, 0)
        # find a multiplicative generator (order 8)
        gen = None
        for cand in elems:
            if cand == (0, 0):
                continue
            x = cand
            k = 1
            while x != one:
                x = mul(x, cand)
                k += 1
            if k == 8:
                gen = cand
                break
        trans = [index[add(e, one)] for e in elems]
        scale = [index[mul(e, gen)] for e in elems]
        perms = [trans, scale]
        npoints = 9
    else:
        trans = [(i + 1) % q for i in range(q)]
        gen = next(g for g in range(2, q) if _mult_order(g, q) == q - 1)
        scale = [(i * gen) % q for i in range(q)]
        perms = [trans, scale]
        npoints = q

    gens = [_perm_to_sumzero_gf2(perm, npoints) for perm in perms]
    return F2Rep(npoints - 1, gens, "agl1(%d)" % q,
                 group_order=npoints * (npoints - 1))


def _mult_order(g, q):
    x = g % q
    k = 1
    while x != 1:
        x = (x * g) % q
        k += 1
    return k


def _perm_to_sumzero_gf2(perm, npoints):
    """Restrict the F_2 permutation matrix to the sum-zero submodule in the
    basis f_i = e_i + e_0 (i = 1..npoints-1)."""
    n = npoints - 1
    rows_full = []
    for i in range(1, npoints):
        # image of f_i = e_{perm(i)} + e_{perm(0)}
        vec = [0] * npoints
        vec[perm[i]] ^= 1
        vec[perm[0]] ^= 1
        # coordinates in the f-basis: drop coordinate 0
        rows_full.append(vec[1:])
    # row i = image of f_{i+1}, consistent with the row-action convention
    packed = []
    for irow in rows_full:
        acc = 0
        for j, bit in enumerate(irow):
            if bit:
                acc |= 1 << j
        packed.append(acc)
    return tuple(packed)


# -- wreath closure ----------------------------------------------------------

def wreath(rep, k):
    """G wr C_k acting on k cyclically permuted copies of the module.

    Implemented for F2Rep.  The element stream enumerates base-element
    tuples plus a shift, with element orders computed in the abstract
    wreath product from base-group data.
    """
    if not isinstance(rep, F2Rep):
        raise UnsupportedShape("wreath is implemented for F2Rep only")
    if k < 2:
        raise CapExceeded("k must be >= 2")
    n = rep.dim
    dim = n * k
    base = closure_gf2(rep.gens, n)
    if len(base) ** k * k > 1 << 24:
        raise CapExceeded("wreath element count exceeds budget")
    base_index = {el: i for i, el in enumerate(base)}
    mult = [[base_index[gf2_mul(a, b, n)] for b in base] for a in base]
    orders = [gf2_order(el, n) for el in base]

    def embed(el, block):
        "Place el in diagonal block position `block`."
        rows = [0] * dim
        for i in range(n):
            rows[block * n + i] = el[i] << (block * n)
        return rows

    def tuple_matrix(idxs, shift):
        "Block-monomial matrix: block row b holds base[idxs[b]] in column (b+shift)%k."
        rows = []
        for b in range(k):
            el = base[idxs[b]]
            col = (b + shift) % k
            for i in range(n):
                rows.append(el[i] << (col * n))
        return tuple(rows)

    def stream(odd_only):
        from itertools import product
        from math import gcd, lcm

        for idxs in product(range(len(base)), repeat=k):
            for shift in range(k):
                if shift == 0:
                    order = lcm(*(orders[i] for i in idxs))
                else:
                    m = k // gcd(k, shift)
                    step = gcd(k, shift)
                    order = 1
                    for start in range(step):
                        prod = None
                        b = start
                        for _ in range(m):
                            prod = idxs[b] if prod is None else mult[prod][idxs[b]]
                            b = (b + shift) % k
                        order = lcm(order, m * orders[prod])
                if odd_only and order % 2 == 0:
                    continue
                yield tuple_matrix(idxs, shift), order

    gens = []
    for g in rep.gens:
        idxs = [base_index[g]] + [0] * (k - 1)
        gens.append(tuple_matrix(idxs, 0))
    gens.append(tuple_matrix([0] * k, 1))
    return F2Rep(dim, gens, "wreath(%s, %d)" % (rep.source, k),
                 element_stream=stream,
                 group_order=len(base) ** k * k)
