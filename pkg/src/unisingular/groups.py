"""Matrix-group enumeration, orbits, cyclic irreducible subgroups of GL_d(r),
multiplicative-order arithmetic and centralizer-algebra computation."""

import numpy as np

from .errors import CapExceeded, NotCoprime, UnsupportedDimension
from .field import (
    FMatrix,
    FieldSpec,
    Functional,
    FVector,
    Subspace,
    canonical_row,
    is_prime,
    kernel,
)

DEFAULT_CLOSURE_CAP = 1 << 20


def ord_mod(r, p):
    "Smallest k >= 1 with r^k = 1 mod p."
    if p < 2:
        raise ValueError("p must be a prime, got %r" % (p,))
    from math import gcd

    if gcd(r, p) != 1:
        raise NotCoprime("gcd(%d, %d) != 1" % (r, p))
    k = 1
    x = r % p
    while x != 1:
        x = (x * r) % p
        k += 1
    return k


# -- polynomial helpers over F_r (little-endian coefficient tuples) ----------

def _poly_trim(c):
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def _poly_mulmod(a, b, f, r):
    "a*b mod f mod r, f monic."
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % r
    return _poly_divmod(res, f, r)


def _poly_divmod(a, f, r):
    "a mod f for monic f; returns remainder coefficients."
    a = list(a)
    d = len(f) - 1
    while len(_poly_trim(tuple(a))) >= len(f):
        a = list(_poly_trim(tuple(a)))
        shift = len(a) - len(f)
        lead = a[-1]
        for i, c in enumerate(f):
            a[shift + i] = (a[shift + i] - lead * c) % r
        a = a[:-1]
    a = list(_poly_trim(tuple(a)))
    return tuple(a + [0] * (d - len(a)))[:d] if d else ()


def _poly_powmod(a, e, f, r):
    res = _poly_divmod([1], f, r)
    base = _poly_divmod(a, f, r)
    while e:
        if e & 1:
            res = _poly_mulmod(res, base, f, r)
        base = _poly_mulmod(base, base, f, r)
        e >>= 1
    return res


def _poly_gcd(a, b, r):
    a = list(_poly_trim(tuple(a)))
    b = list(_poly_trim(tuple(b)))
    while b:
        lead_inv = pow(b[-1], r - 2, r)
        monic = tuple((x * lead_inv) % r for x in b)
        rem = _poly_divmod(a, monic, r)
        a, b = b, list(_poly_trim(tuple(rem)))
    return tuple(a)


def _is_irreducible(f, r):
    "Monic polynomial irreducibility over F_r via x^(r^d) = x and gcd tests."
    d = len(f) - 1
    if d < 1:
        return False
    x = (0, 1)
    xp = _poly_powmod(x, r**d, f, r)
    if _poly_trim(xp) != _poly_trim(_poly_divmod(x, f, r)):
        return False
    for q in _prime_factors(d):
        xq = _poly_powmod(x, r ** (d // q), f, r)
        diff = tuple((a - b) % r for a, b in
                     zip(xq + (0,) * len(f), _poly_divmod(x, f, r) + (0,) * len(f)))
        g = _poly_gcd(diff, f, r)
        if len(_poly_trim(g)) > 1:
            return False
    return True


def _prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def find_irreducible_poly(r, d):
    "First monic irreducible polynomial of degree d over F_r, by coefficient index."
    if d == 1:
        return (0, 1)
    for idx in range(r**d):
        coeffs = []
        t = idx
        for _ in range(d):
            coeffs.append(t % r)
            t //= r
        f = tuple(coeffs) + (1,)
        if _is_irreducible(f, r):
            return f
    raise RuntimeError("no irreducible polynomial found (unreachable)")


def _multiplication_matrix(elem, f, r):
    "Matrix of multiplication by elem on F_r[x]/(f), columns = images of basis."
    d = len(f) - 1
    spec = FieldSpec(r, d)
    cols = []
    for i in range(d):
        basis = tuple(1 if j == i else 0 for j in range(d))
        prod = _poly_mulmod(basis, elem, f, r)
        prod = tuple(prod) + (0,) * (d - len(prod))
        cols.append(prod[:d])
    return FMatrix(spec, tuple(zip(*cols)))


class CyclicModel:
    """An order-p matrix acting irreducibly on F_r^d, d = ord_p(r)."""

    def __init__(self, r, p, d, g, poly):
        self.r = r
        self.p = p
        self.d = d
        self.g = g
        self.poly = poly
        self.spec = g.spec

    def __repr__(self):
        return "CyclicModel(r=%d, p=%d, d=%d)" % (self.r, self.p, self.d)

    def powers(self):
        "g^0 .. g^(p-1)."
        out = [FMatrix.identity(self.spec)]
        for _ in range(self.p - 1):
            out.append(out[-1] @ self.g)
        return out


def irreducible_cyclic_generator(r, p, dim_cap=24):
    "Build CyclicModel(r, p) from the first irreducible polynomial of degree ord_p(r)."
    if not (is_prime(r) and is_prime(p)) or r == p:
        raise ValueError("r, p must be distinct primes")
    d = ord_mod(r, p)
    if d > dim_cap:
        raise CapExceeded("d = %d exceeds dimension cap %d" % (d, dim_cap))
    f = find_irreducible_poly(r, d)
    order = r**d - 1
    if order % p:
        raise RuntimeError("p does not divide r^d - 1 (unreachable for d = ord)")
    exp = order // p
    elem = None
    for idx in range(1, r**d):
        coeffs = []
        t = idx
        for _ in range(d):
            coeffs.append(t % r)
            t //= r
        cand = _poly_powmod(tuple(coeffs), exp, f, r)
        cand = tuple(cand) + (0,) * (d - len(cand))
        if _poly_trim(cand) != (1,):
            elem = cand[:d]
            break
    g = _multiplication_matrix(elem, f, r)
    return CyclicModel(r, p, d, g, f)


class MatGroup:
    """A matrix group given by generators, with optional cached enumeration."""

    def __init__(self, spec, gens, elements=None, cap=DEFAULT_CLOSURE_CAP):
        self.spec = spec
        self.gens = list(gens)
        self.cap = cap
        self._elements = list(elements) if elements is not None else None

    def elements(self):
        if self._elements is None:
            self._elements = closure(self.gens, self.cap)
        return self._elements

    def order(self):
        return len(self.elements())

    def __repr__(self):
        size = len(self._elements) if self._elements is not None else "?"
        return "MatGroup(gens=%d, order=%s)" % (len(self.gens), size)


def closure(gens, cap=DEFAULT_CLOSURE_CAP):
    """Breadth-first closure of <gens>; deterministic element order."""
    if not gens:
        return []
    spec = gens[0].spec
    ident = FMatrix.identity(spec, gens[0].nrows)
    seen = {ident}
    order = [ident]
    boundary = [ident]
    while boundary:
        new_boundary = []
        for el in boundary:
            for g in gens:
                prod = el @ g
                if prod not in seen:
                    seen.add(prod)
                    order.append(prod)
                    new_boundary.append(prod)
                    if len(seen) > cap:
                        raise CapExceeded("closure exceeds cap %d" % cap)
        boundary = new_boundary
    return order


def orbit(group, seed, action="left", cap=DEFAULT_CLOSURE_CAP):
    """Orbit of a vector (left action) or functional (dual action, canonicalized).

    Works from generators alone by closing the point set.
    """
    gens = group.gens if isinstance(group, MatGroup) else list(group)
    spec = gens[0].spec
    if action == "left":
        start = seed if isinstance(seed, FVector) else FVector(spec, seed)
        def act(g, x):
            return g.matvec(x)
    elif action == "dual":
        invs = {id(g): g.inverse() for g in gens}
        row0 = seed.row if isinstance(seed, Functional) else canonical_row(tuple(seed), spec.r)
        start = Functional(spec, row0)
        def act(g, x):
            ginv = invs[id(g)]
            r = spec.r
            new = tuple(sum(a * b for a, b in zip(x.row, col)) % r
                        for col in zip(*ginv.rows))
            return Functional(spec, new)
    else:
        raise ValueError("action must be 'left' or 'dual'")
    seen = {start}
    boundary = [start]
    while boundary:
        new_boundary = []
        for x in boundary:
            for g in gens:
                y = act(g, x)
                if y not in seen:
                    seen.add(y)
                    new_boundary.append(y)
                    if len(seen) > cap:
                        raise CapExceeded("orbit exceeds cap %d" % cap)
        boundary = new_boundary
    return seen


def generating_set(elements, cap=DEFAULT_CLOSURE_CAP):
    "Greedy small generating set for a group given by its element list."
    gens = []
    have = set()
    ident = None
    for el in elements:
        if ident is None:
            ident = FMatrix.identity(el.spec, el.nrows)
            have = {ident}
        if el not in have:
            gens.append(el)
            have = set(closure(gens, cap))
            if len(have) == len(elements):
                break
    return gens


def derived_subgroup(gens, cap=DEFAULT_CLOSURE_CAP):
    """Derived subgroup as a MatGroup with full element list.

    Starts from commutators of generator pairs and closes under conjugation
    by generators until normal; the result is then [G, G].
    """
    spec = gens[0].spec
    if len(gens) > 8:
        gens = generating_set(gens, cap)
    inv = {g: g.inverse() for g in gens}
    comms = []
    for a in gens:
        for b in gens:
            comms.append(inv[a] @ inv[b] @ a @ b)
    elements = closure(comms, cap)
    while True:
        elem_set = set(elements)
        new = []
        for g in gens:
            gi = inv[g]
            for x in elements:
                y = g @ x @ gi
                if y not in elem_set:
                    new.append(y)
        if not new:
            break
        comms.extend(new)
        elements = closure(comms, cap)
    return MatGroup(spec, comms, elements=elements, cap=cap)


class QuadraticSpace:
    """A quadratic form on F_r^n (r odd) with Gram matrix of its bilinear form."""

    def __init__(self, spec, gram):
        if spec.r == 2:
            raise UnsupportedDimension("quadratic spaces implemented for odd r only")
        self.spec = spec
        self.gram = FMatrix(spec, gram)
        if self.gram.rows != self.gram.transpose().rows:
            raise ValueError("gram matrix must be symmetric")
        self.inv2 = pow(2, spec.r - 2, spec.r)
        self.form_values = tuple((self.gram.rows[i][i] * self.inv2) % spec.r
                                 for i in range(spec.n))

    def bilinear(self, u, v):
        r = self.spec.r
        uc = u.coords if isinstance(u, FVector) else u
        vc = v.coords if isinstance(v, FVector) else v
        return sum(uc[i] * self.gram.rows[i][j] * vc[j]
                   for i in range(self.spec.n) for j in range(self.spec.n)) % r

    def q(self, v):
        return (self.bilinear(v, v) * self.inv2) % self.spec.r


def isometry_group(space, cap=DEFAULT_CLOSURE_CAP):
    """All matrices preserving the form, by backtracking on basis-vector images."""
    spec = space.spec
    if spec.n > 4 or spec.r != 3:
        raise UnsupportedDimension("isometry groups implemented for dim <= 4, r = 3")
    n, r = spec.n, spec.r
    vectors = [tuple((i // r**k) % r for k in range(n)) for i in range(r**n)]
    qvals = {v: space.q(v) for v in vectors}
    ident_rows = FMatrix.identity(spec).rows
    found = []

    def backtrack(images):
        i = len(images)
        if i == n:
            cols = images
            mat = FMatrix(spec, tuple(zip(*cols)))
            if mat.det() != 0:
                found.append(mat)
            return
        target_q = qvals[ident_rows[i]]
        for v in vectors:
            if qvals[v] != target_q:
                continue
            ok = True
            for j, w in enumerate(images):
                if space.bilinear(v, w) != space.bilinear(ident_rows[i], ident_rows[j]):
                    ok = False
                    break
            if ok:
                backtrack(images + [v])
                if len(found) > cap:
                    raise CapExceeded("isometry group exceeds cap")

    backtrack([])
    return MatGroup(spec, found, elements=found, cap=cap)


def nullity_mod(a, r):
    "Nullity (columns - rank) of an integer numpy matrix mod r."
    a = np.array(a, dtype=np.int64) % r
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        piv = None
        for i in range(rank, rows):
            if a[i, col] % r:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, col]), r - 2, r)) % r
        mask = (a[:, col] % r) != 0
        mask[rank] = False
        if mask.any():
            a[mask] = (a[mask] - np.outer(a[mask, col], a[rank])) % r
        rank += 1
        if rank == rows:
            break
    return cols - rank


def centralizer_algebra_dim(gens):
    """Dimension over F_r of {X : Xg = gX for all gens}."""
    spec = gens[0].spec
    n = gens[0].nrows
    r = spec.r
    blocks = []
    ident = np.eye(n, dtype=np.int64)
    for g in gens:
        gm = np.array(g.rows, dtype=np.int64)
        # vec(XG - GX) = (G^T kron I - I kron G) vec(X)
        blocks.append((np.kron(gm.T, ident) - np.kron(ident, gm)) % r)
    system = np.concatenate(blocks, axis=0)
    return nullity_mod(system, r)


def spin(gens, seed_row, spec):
    "Smallest gens-invariant subspace containing seed_row."
    sub = Subspace(spec, [seed_row])
    while True:
        new_rows = list(sub.basis)
        grew = False
        for g in gens:
            for row in sub.basis:
                img = g.matvec(FVector(spec, row)).coords
                if not sub.contains(img):
                    new_rows.append(img)
                    grew = True
        if not grew:
            return sub
        sub = Subspace(spec, new_rows)


def is_irreducible(gens, spec=None):
    """True iff no proper nonzero subspace is invariant under all gens.

    Decided by spinning one seed per 1-dimensional subspace: any invariant
    subspace contains a line, and that line spins inside it.
    """
    gens = gens.gens if isinstance(gens, MatGroup) else list(gens)
    spec = spec or gens[0].spec
    from .field import hyperplanes

    n = spec.n
    if n == 1:
        return True
    seen = set()
    for i in range(1, spec.size):
        coords = tuple((i // spec.r**k) % spec.r for k in range(n))
        line = canonical_row(coords, spec.r)
        if line in seen:
            continue
        seen.add(line)
        sub = spin(gens, line, spec)
        if sub.dim < n:
            return False
    return True
