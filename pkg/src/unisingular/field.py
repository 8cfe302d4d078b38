"""Exact dense linear algebra over a prime field F_r.

Vectors and matrices are immutable tuples of residues mod r, so they hash
and deduplicate cheaply during group enumeration.  Bulk enumeration of a
whole space goes through a cached numpy array of base-r digit rows whose
row order matches the integer vector encoding (vec_index).
"""

from functools import lru_cache

import numpy as np

from .errors import (
    CapExceeded,
    IndexOutOfRange,
    SingularMatrix,
)

DEFAULT_DIM_CAP = 24
DEFAULT_POINT_CAP = 1 << 26


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldSpec:
    """The space F_r^n with caps guarding exhaustive enumeration."""

    def __init__(self, r, n, dim_cap=DEFAULT_DIM_CAP, point_cap=DEFAULT_POINT_CAP):
        if not is_prime(r):
            raise ValueError("r must be prime, got %r" % (r,))
        if n < 1:
            raise ValueError("n must be >= 1, got %r" % (n,))
        if n > dim_cap:
            raise CapExceeded("dimension %d exceeds cap %d" % (n, dim_cap))
        if r**n > point_cap:
            raise CapExceeded("r^n = %d exceeds cap %d" % (r**n, point_cap))
        self.r = r
        self.n = n
        self.size = r**n

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.r, self.n) == (other.r, other.n)

    def __hash__(self):
        return hash((FieldSpec, self.r, self.n))

    def __repr__(self):
        return "FieldSpec(r=%d, n=%d)" % (self.r, self.n)

    def inv(self, x):
        x %= self.r
        if x == 0:
            raise ZeroDivisionError("no inverse of 0 mod %d" % self.r)
        return pow(x, self.r - 2, self.r)


class FVector:
    def __init__(self, spec, coords):
        coords = tuple(c % spec.r for c in coords)
        if len(coords) != spec.n:
            raise ValueError("expected %d coordinates, got %d" % (spec.n, len(coords)))
        self.spec = spec
        self.coords = coords

    def __eq__(self, other):
        return isinstance(other, FVector) and self.coords == other.coords and self.spec == other.spec

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "FVector%r" % (self.coords,)

    def is_zero(self):
        return not any(self.coords)

    def __add__(self, other):
        r = self.spec.r
        return FVector(self.spec, tuple((a + b) % r for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        r = self.spec.r
        return FVector(self.spec, tuple((-a) % r for a in self.coords))

    def scale(self, c):
        r = self.spec.r
        return FVector(self.spec, tuple((c * a) % r for a in self.coords))


def _mat_rows(rows, r):
    return tuple(tuple(x % r for x in row) for row in rows)


class FMatrix:
    """A dense n x m matrix over F_r, stored as a tuple of row tuples."""

    def __init__(self, spec, rows):
        self.spec = spec
        self.rows = _mat_rows(rows, spec.r)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, spec, n=None):
        n = spec.n if n is None else n
        return cls(spec, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __eq__(self, other):
        return isinstance(other, FMatrix) and self.rows == other.rows and self.spec == other.spec

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "FMatrix(%r)" % (self.rows,)

    def __matmul__(self, other):
        r = self.spec.r
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        bt = tuple(zip(*other.rows))
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) % r for col in bt)
            for row in self.rows
        )
        return FMatrix(self.spec, rows)

    def __add__(self, other):
        r = self.spec.r
        return FMatrix(self.spec, tuple(
            tuple((a + b) % r for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other):
        r = self.spec.r
        return FMatrix(self.spec, tuple(
            tuple((a - b) % r for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)))

    def matvec(self, v):
        r = self.spec.r
        coords = tuple(sum(a * b for a, b in zip(row, v.coords)) % r for row in self.rows)
        return FVector(self.spec, coords)

    def transpose(self):
        return FMatrix(self.spec, tuple(zip(*self.rows)))

    def is_square(self):
        return self.nrows == self.ncols

    def pow(self, k):
        if k < 0:
            return self.inverse().pow(-k)
        result = FMatrix.identity(self.spec, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def det(self):
        "Determinant by Gaussian elimination mod r."
        if not self.is_square():
            raise ValueError("determinant of non-square matrix")
        r = self.spec.r
        rows = [list(row) for row in self.rows]
        n = self.nrows
        d = 1
        for col in range(n):
            piv = next((i for i in range(col, n) if rows[i][col]), None)
            if piv is None:
                return 0
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                d = -d % r
            d = (d * rows[col][col]) % r
            inv = pow(rows[col][col], r - 2, r)
            rows[col] = [(x * inv) % r for x in rows[col]]
            for i in range(col + 1, n):
                f = rows[i][col]
                if f:
                    rows[i] = [(a - f * b) % r for a, b in zip(rows[i], rows[col])]
        return d % r

    def is_invertible(self):
        return self.is_square() and self.det() != 0

    def inverse(self):
        if not self.is_square():
            raise SingularMatrix("non-square matrix")
        r = self.spec.r
        n = self.nrows
        aug = [list(row) + [1 if i == j else 0 for j in range(n)]
               for i, row in enumerate(self.rows)]
        red, rank, pivots = _rref_rows(aug, r)
        # pivots must all land in the left block, else the matrix is singular
        if rank < n or any(p >= n for p in pivots):
            raise SingularMatrix("matrix is singular")
        return FMatrix(self.spec, tuple(tuple(row[n:]) for row in red))

    def order(self, cap=1 << 20):
        "Multiplicative order; raises CapExceeded past cap."
        ident = FMatrix.identity(self.spec, self.nrows)
        g = self
        k = 1
        while g != ident:
            g = g @ self
            k += 1
            if k > cap:
                raise CapExceeded("element order exceeds %d" % cap)
        return k


def _rref_rows(rows, r):
    "In-place-ish reduced row echelon form of a list of lists mod r."
    rows = [list(row) for row in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if rows[i][col] % r), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col] % r, r - 2, r)
        rows[rank] = [(x * inv) % r for x in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col] % r:
                f = rows[i][col] % r
                rows[i] = [(a - f * b) % r for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows, rank, pivots


def rref(m):
    "Reduced row-echelon form; returns (FMatrix, rank, pivot columns)."
    rows, rank, pivots = _rref_rows([list(row) for row in m.rows], m.spec.r)
    return FMatrix(m.spec, rows), rank, pivots


class Subspace:
    """A subspace of F_r^n given by a reduced row-echelon basis."""

    def __init__(self, spec, basis_rows):
        rows, rank, pivots = _rref_rows([list(r) for r in basis_rows], spec.r)
        self.spec = spec
        self.basis = tuple(tuple(row) for row in rows[:rank])
        self.dim = rank
        self.pivots = tuple(pivots)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis and self.spec == other.spec

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return "Subspace(dim=%d, basis=%r)" % (self.dim, self.basis)

    def contains(self, v):
        r = self.spec.r
        coords = list(v.coords if isinstance(v, FVector) else v)
        for row, piv in zip(self.basis, self.pivots):
            f = coords[piv] % r
            if f:
                coords = [(a - f * b) % r for a, b in zip(coords, row)]
        return not any(c % r for c in coords)

    def vectors(self):
        "All r^dim vectors, as coordinate tuples."
        r = self.spec.r
        n = self.spec.n
        out = []
        for idx in range(r**self.dim):
            digits = []
            t = idx
            for _ in range(self.dim):
                digits.append(t % r)
                t //= r
            v = [0] * n
            for c, row in zip(digits, self.basis):
                if c:
                    v = [(a + c * b) % r for a, b in zip(v, row)]
            out.append(tuple(v))
        return out


def kernel(m):
    "The solution space {v in F_r^k : m v = 0} for an n x k matrix m."
    r = m.spec.r
    k = m.ncols
    red, rank, pivots = _rref_rows([list(row) for row in m.rows], r)
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * k
        v[fc] = 1
        for row, piv in zip(red, pivots):
            v[piv] = (-row[fc]) % r
        basis.append(v)
    sub = Subspace.__new__(Subspace)
    sub.spec = m.spec
    rows, rank2, pivots2 = _rref_rows(basis, r) if basis else ([], 0, [])
    sub.basis = tuple(tuple(row) for row in rows[:rank2])
    sub.dim = rank2
    sub.pivots = tuple(pivots2)
    return sub


def has_eig1(g):
    "True iff 1 is an eigenvalue of the invertible square matrix g."
    if not g.is_square():
        raise SingularMatrix("non-square matrix")
    if g.det() == 0:
        raise SingularMatrix("matrix is singular")
    diff = g - FMatrix.identity(g.spec, g.nrows)
    _, rank, _ = rref(diff)
    return rank < g.nrows


def canonical_row(row, r):
    "Scale a nonzero residue row so its first nonzero entry is 1."
    lead = next((x for x in row if x % r), None)
    if lead is None:
        raise ValueError("zero row has no canonical form")
    inv = pow(lead % r, r - 2, r)
    return tuple((inv * x) % r for x in row)


class Functional:
    """A nonzero linear functional, canonical (first nonzero entry = 1)."""

    def __init__(self, spec, row):
        self.spec = spec
        self.row = canonical_row(tuple(x % spec.r for x in row), spec.r)

    def __eq__(self, other):
        return isinstance(other, Functional) and self.row == other.row and self.spec == other.spec

    def __hash__(self):
        return hash(self.row)

    def __repr__(self):
        return "Functional%r" % (self.row,)

    def __call__(self, v):
        coords = v.coords if isinstance(v, FVector) else v
        return sum(a * b for a, b in zip(self.row, coords)) % self.spec.r

    def kernel(self):
        return kernel(FMatrix(self.spec, (self.row,)))

    def index(self):
        return row_index(self.row, self.spec.r)


def row_index(coords, r):
    "Base-r little-endian integer encoding of a residue tuple."
    idx = 0
    for c in reversed(coords):
        idx = idx * r + (c % r)
    return idx


def vec_index(v):
    return row_index(v.coords, v.spec.r)


def index_vec(spec, i):
    if not 0 <= i < spec.size:
        raise IndexOutOfRange("index %d outside [0, %d)" % (i, spec.size))
    coords = []
    for _ in range(spec.n):
        coords.append(i % spec.r)
        i //= spec.r
    return FVector(spec, coords)


def hyperplanes(spec):
    """All (r^n - 1)/(r - 1) canonical functionals, sorted by row index."""
    r, n = spec.r, spec.n
    rows = []
    for lead in range(n):
        prefix = (0,) * lead + (1,)
        tail = n - lead - 1
        for idx in range(r**tail):
            digits = []
            t = idx
            for _ in range(tail):
                digits.append(t % r)
                t //= r
            rows.append(prefix + tuple(digits))
    rows.sort(key=lambda row: row_index(row, r))
    return [Functional(spec, row) for row in rows]


@lru_cache(maxsize=32)
def all_vector_array(r, n):
    """All r^n vectors of F_r^n as a numpy int8 array, row i = index_vec(i)."""
    if r**n > DEFAULT_POINT_CAP:
        raise CapExceeded("r^n = %d exceeds cap" % (r**n,))
    idx = np.arange(r**n, dtype=np.int64)
    cols = []
    for i in range(n):
        cols.append((idx // r**i) % r)
    return np.stack(cols, axis=1).astype(np.int8)


def index_powers(r, n):
    "numpy vector (1, r, r^2, ...) for turning digit rows into indices."
    return (r ** np.arange(n, dtype=np.int64))
