"""Seifert matrices, Alexander polynomials and mod-2 quadratic forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .braid import BraidWord, closure_summary, is_split
from .errors import NotAKnotError, SplitBraidError
from .linking import CROSS, linking_graph


@dataclass(frozen=True)
class SeifertData:
    matrix: tuple  # row-major tuple of tuples

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def intersection(self) -> tuple:
        S = self.matrix
        n = len(S)
        return tuple(tuple(S[i][j] - S[j][i] for j in range(n)) for i in range(n))

    def to_json(self) -> list:
        return [list(row) for row in self.matrix]


def seifert_matrix(w: BraidWord) -> SeifertData:
    """Seifert form on the brick basis.

    Diagonal -1. For linked bricks u < v only S[u][v] is nonzero: +1 for a
    same-column pair; for a cross-column pair, -1 when the left-column brick
    starts first and +1 otherwise. J = S - S^T then matches the crossing
    signs of the curves on the surface model.
    """
    if is_split(w):
        raise SplitBraidError("Seifert matrix requires a non-split braid")
    g = linking_graph(w)
    n = len(g)
    S = [[0] * n for _ in range(n)]
    for k in range(n):
        S[k][k] = -1
    for u, v, kind in g.edges:
        a, b = g.vertices[u], g.vertices[v]
        S[u][v] = -1 if kind == CROSS and a.top < b.top else 1
    return SeifertData(tuple(tuple(r) for r in S))


# ---------------------------------------------------------------- exact linear algebra

def det(M) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def interpolate(xs, ys) -> list:
    """Coefficients (low to high) of the polynomial through the points, exact."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    return coeffs


def poly_from_values(f, degree: int) -> list:
    xs = list(range(degree + 1))
    coeffs = interpolate(xs, [Fraction(f(x)) for x in xs])
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("non-integral interpolation")
        out.append(int(c))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------- Alexander polynomial

def alexander_coefficients(sd: SeifertData) -> list:
    """Coefficients of det(tS - S^T), low to high."""
    S = sd.matrix
    n = len(S)

    def at(t):
        return det([[t * S[i][j] - S[j][i] for j in range(n)] for i in range(n)])

    return poly_from_values(at, n)


def alexander_polynomial(sd: SeifertData) -> dict:
    """Symmetric Laurent polynomial {exponent: coefficient}; exponents may be half-integers."""
    n = sd.size
    coeffs = alexander_coefficients(sd)
    shift = Fraction(n, 2)
    return {Fraction(k) - shift: c for k, c in enumerate(coeffs) if c}


def poly_to_json(p: dict) -> dict:
    return {str(e if e.denominator != 1 else int(e)): c for e, c in sorted(p.items())}


def normalize(coeffs) -> tuple:
    """Representative of a polynomial up to units +-t^k."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    k = 0
    while k < len(c) and c[k] == 0:
        k += 1
    c = c[k:]
    if c and c[0] < 0:
        c = [-x for x in c]
    return tuple(c)


def burau_alexander(w: BraidWord) -> tuple:
    """Alexander polynomial from the reduced Burau representation, normalized.

    det(I - psi(w)) equals Delta(t) (1 + t + ... + t^{N-1}) up to units; the
    cyclotomic factor is divided out exactly.
    """
    N = w.strands
    if N == 1:
        return (1,)
    m = N - 1

    def value(t):
        M = [[int(i == j) for j in range(m)] for i in range(m)]
        for i in w.letters:
            c = i - 1
            # right-multiplication by the generator changes column c only
            for row in M:
                v = -t * row[c]
                if c > 0:
                    v += t * row[c - 1]
                if c < m - 1:
                    v += row[c + 1]
                row[c] = v
        return det([[int(i == j) - M[i][j] for j in range(m)] for i in range(m)])

    degree = len(w.letters) + m
    full = poly_from_values(value, degree)
    divisor = [1] * N
    quot = _poly_divide(full, divisor)
    return normalize(quot)


def _poly_divide(num, den) -> list:
    num = [Fraction(x) for x in num]
    out = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    for k in range(len(num) - len(den), -1, -1):
        q = num[k + len(den) - 1] / den[-1]
        out[k] = q
        for j, d in enumerate(den):
            num[k + j] -= q * d
    if any(num):
        raise ArithmeticError("cyclotomic factor does not divide")
    return [int(x) for x in out]


def determinant(sd: SeifertData) -> int:
    S = sd.matrix
    n = len(S)
    return abs(det([[S[i][j] + S[j][i] for j in range(n)] for i in range(n)]))


# ---------------------------------------------------------------- GF(2) forms

def q_value(sd: SeifertData, x) -> int:
    S = sd.matrix
    n = len(S)
    return sum(x[i] * S[i][j] * x[j] for i in range(n) if x[i] for j in range(n) if x[j]) % 2


def pairing(J, x, y) -> int:
    n = len(J)
    return sum(x[i] * J[i][j] * y[j] for i in range(n) if x[i] for j in range(n) if y[j])


def symplectic_basis(J) -> list:
    """Pairs (x, y) spanning a symplectic complement of the radical of J mod 2."""
    n = len(J)
    J2 = [[v % 2 for v in row] for row in J]
    pool = [[int(i == j) for j in range(n)] for i in range(n)]

    def form(a, b):
        return pairing(J2, a, b) % 2

    pairs = []
    while pool:
        x = pool.pop(0)
        k = next((k for k, y in enumerate(pool) if form(x, y)), None)
        if k is None:
            continue  # x lies in the radical of the remaining span
        y = pool.pop(k)
        pairs.append((x, y))
        new = []
        for z in pool:
            a, b = form(z, y), form(z, x)
            z = [(z[i] + a * x[i] + b * y[i]) % 2 for i in range(n)]
            new.append(z)
        pool = new
    return pairs


def arf_invariant(sd: SeifertData, components: int = 1) -> int:
    if components != 1:
        raise NotAKnotError(f"closure has {components} components")
    pairs = symplectic_basis(sd.intersection)
    if 2 * len(pairs) != sd.size:
        raise NotAKnotError("intersection form is degenerate mod 2")
    return sum(q_value(sd, x) * q_value(sd, y) for x, y in pairs) % 2


def arf_via_determinant(sd: SeifertData, components: int = 1) -> int:
    if components != 1:
        raise NotAKnotError(f"closure has {components} components")
    d = determinant(sd) % 8
    if d in (1, 7):
        return 0
    if d in (3, 5):
        return 1
    raise NotAKnotError(f"determinant {determinant(sd)} is even")


def arf_of_word(w: BraidWord) -> int:
    return arf_invariant(seifert_matrix(w), closure_summary(w).components)


# ---------------------------------------------------------------- framing bookkeeping

def twist_update(phi_x: int, algebraic_intersection: int, phi_a: int) -> int:
    return phi_x + algebraic_intersection * phi_a


def twist_homology(x, a, J) -> tuple:
    n = len(J)
    if len(x) != n or len(a) != n:
        raise ValueError(f"dimension mismatch: {len(x)}, {len(a)} vs form of size {n}")
    k = pairing(J, x, a)
    return tuple(xi + k * ai for xi, ai in zip(x, a))


@dataclass
class WindingAssignment:
    """Winding numbers known on the brick basis (all zero) and along recorded twists."""

    J: tuple
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.J)
        for i in range(n):
            self.values.setdefault(tuple(int(i == j) for j in range(n)), 0)

    def twist(self, x, a) -> tuple:
        x, a = tuple(x), tuple(a)
        if x not in self.values or a not in self.values:
            raise KeyError("winding number unknown for an input class")
        y = twist_homology(x, a, self.J)
        self.values[y] = twist_update(self.values[x], pairing(self.J, x, a), self.values[a])
        return y


def framing_form(J, x) -> int:
    """Quadratic form (phi + 1) mod 2 extended from basis values phi = 0."""
    n = len(J)
    base = sum(x) % 2
    cross = sum(x[i] * x[j] * J[i][j] for i in range(n) if x[i] for j in range(i + 1, n) if x[j])
    return (base + cross) % 2
