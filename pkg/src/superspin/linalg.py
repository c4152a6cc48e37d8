"""Sparse exact linear algebra over SqrtNumber scalars.

Vectors are dicts index -> SqrtNumber (no stored zeros), matrices are
row-major dicts of such dicts.  Everything here is deterministic: pivots are
smallest column first, eigenvalues are reported in ascending field order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exactnum import ONE, ZERO, SqrtNumber, rational, sqrt_rational

Vec = dict  # index -> SqrtNumber


def vec_is_zero(v: Vec) -> bool:
    return not v


def vec_scale(v: Vec, c: SqrtNumber) -> Vec:
    if not c:
        return {}
    return {i: c * x for i, x in v.items()}


def vec_add_scaled(u: Vec, v: Vec, c: SqrtNumber) -> Vec:
    """u + c*v, pruning exact zeros."""
    if not c:
        return dict(u)
    out = dict(u)
    for i, x in v.items():
        s = out.get(i)
        s = c * x if s is None else s + c * x
        if s:
            out[i] = s
        elif i in out:
            del out[i]
    return out


class Mat:
    """Sparse matrix over SqrtNumber (row-major)."""

    __slots__ = ("nrows", "ncols", "rows", "_cols")

    def __init__(self, nrows: int, ncols: int, rows: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, Vec] = rows if rows is not None else {}
        self._cols: dict[int, Vec] | None = None

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls(n, n, {i: {i: ONE} for i in range(n)})

    @classmethod
    def zero(cls, nrows: int, ncols: int | None = None) -> Mat:
        return cls(nrows, ncols if ncols is not None else nrows)

    @classmethod
    def scalar(cls, n: int, c: SqrtNumber) -> Mat:
        if not c:
            return cls.zero(n)
        return cls(n, n, {i: {i: c} for i in range(n)})

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries) -> Mat:
        rows: dict[int, Vec] = {}
        for (r, c), v in entries.items() if isinstance(entries, dict) else entries:
            if v:
                rows.setdefault(r, {})[c] = v
        return cls(nrows, ncols, rows)

    def entry(self, r: int, c: int) -> SqrtNumber:
        return self.rows.get(r, {}).get(c, ZERO)

    def cols(self) -> dict[int, Vec]:
        if self._cols is None:
            cols: dict[int, Vec] = {}
            for r, row in self.rows.items():
                for c, v in row.items():
                    cols.setdefault(c, {})[r] = v
            self._cols = cols
        return self._cols

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def is_zero(self) -> bool:
        return all(not row for row in self.rows.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        keys = set(self.rows) | set(other.rows)
        for r in keys:
            if self.rows.get(r, {}) != other.rows.get(r, {}):
                return False
        return True

    def __neg__(self) -> Mat:
        return Mat(
            self.nrows,
            self.ncols,
            {r: {c: -v for c, v in row.items()} for r, row in self.rows.items()},
        )

    def __add__(self, other: Mat) -> Mat:
        rows: dict[int, Vec] = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            tgt = rows.setdefault(r, {})
            for c, v in row.items():
                s = tgt.get(c)
                s = v if s is None else s + v
                if s:
                    tgt[c] = s
                elif c in tgt:
                    del tgt[c]
        return Mat(self.nrows, self.ncols, rows)

    def __sub__(self, other: Mat) -> Mat:
        return self + (-other)

    def scale(self, c: SqrtNumber) -> Mat:
        if not c:
            return Mat.zero(self.nrows, self.ncols)
        return Mat(
            self.nrows,
            self.ncols,
            {r: {col: c * v for col, v in row.items()} for r, row in self.rows.items()},
        )

    def __mul__(self, other: Mat) -> Mat:
        if not isinstance(other, Mat):
            return NotImplemented
        rows: dict[int, Vec] = {}
        orows = other.rows
        for r, row in self.rows.items():
            acc: Vec = {}
            for k, v in row.items():
                orow = orows.get(k)
                if not orow:
                    continue
                for c, w in orow.items():
                    s = acc.get(c)
                    s = v * w if s is None else s + v * w
                    if s:
                        acc[c] = s
                    elif c in acc:
                        del acc[c]
            if acc:
                rows[r] = acc
        return Mat(self.nrows, other.ncols, rows)

    def apply(self, v: Vec) -> Vec:
        cols = self.cols()
        out: Vec = {}
        for c, x in v.items():
            col = cols.get(c)
            if not col:
                continue
            for r, a in col.items():
                s = out.get(r)
                s = a * x if s is None else s + a * x
                if s:
                    out[r] = s
                elif r in out:
                    del out[r]
        return out

    def transpose(self) -> Mat:
        return Mat(self.ncols, self.nrows, {r: dict(c) for r, c in self.cols().items()})

    def max_abs_float(self) -> float:
        worst = 0.0
        for row in self.rows.values():
            for v in row.values():
                worst = max(worst, abs(float(v)))
        return worst

    def to_json(self) -> list:
        return [
            [self.entry(r, c).to_json() for c in range(self.ncols)]
            for r in range(self.nrows)
        ]

    @classmethod
    def from_json(cls, dense: list) -> Mat:
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        rows: dict[int, Vec] = {}
        for r, rowvals in enumerate(dense):
            for c, obj in enumerate(rowvals):
                v = SqrtNumber.from_json(obj)
                if v:
                    rows.setdefault(r, {})[c] = v
        return cls(nrows, ncols, rows)

    def __repr__(self) -> str:
        return f"Mat({self.nrows}x{self.ncols}, nnz={self.nnz()})"


class Echelon:
    """Incremental reduced row echelon, tracking combinations of the inputs."""

    def __init__(self):
        self.pivots: dict[int, tuple[Vec, Vec]] = {}  # pivot col -> (row, combo)
        self.count = 0  # inputs seen

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Vec) -> tuple[Vec, Vec]:
        """Return (remainder, combo) with vec = remainder + sum combo[i]*input_i."""
        rem = {i: v for i, v in vec.items() if v}
        combo: Vec = {}
        # rows are fully reduced, so one sorted pass clears every pivot column
        for p in sorted(set(rem) & set(self.pivots)):
            c = rem.get(p)
            if not c:
                continue
            row, rcombo = self.pivots[p]
            rem = vec_add_scaled(rem, row, -c)
            combo = vec_add_scaled(combo, rcombo, c)
        return rem, combo

    def add(self, vec: Vec) -> bool:
        """Insert a vector; True if it added a new direction."""
        idx = self.count
        self.count += 1
        rem, combo = self.reduce(vec)
        combo = vec_add_scaled({idx: ONE}, combo, -ONE) if combo else {idx: ONE}
        if not rem:
            return False
        p = min(rem)
        inv = rem[p].invert()
        rem = vec_scale(rem, inv)
        combo = vec_scale(combo, inv)
        # keep fully reduced form
        for q, (row, rcombo) in list(self.pivots.items()):
            c = row.get(p)
            if c:
                self.pivots[q] = (
                    vec_add_scaled(row, rem, -c),
                    vec_add_scaled(rcombo, combo, -c),
                )
        self.pivots[p] = (rem, combo)
        return True

    def contains(self, vec: Vec) -> bool:
        rem, _ = self.reduce(vec)
        return not rem

    def basis(self) -> list[Vec]:
        return [self.pivots[p][0] for p in sorted(self.pivots)]


def kernel(constraints: Iterable[Vec], ncols: int) -> list[Vec]:
    """Kernel basis of the linear map given by constraint rows over ncols unknowns."""
    ech = Echelon()
    for row in constraints:
        if row:
            ech.add(row)
    pivot_cols = sorted(ech.pivots)
    pivot_set = set(pivot_cols)
    out: list[Vec] = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v: Vec = {f: ONE}
        for p in pivot_cols:
            row, _ = ech.pivots[p]
            c = row.get(f)
            if c:
                v[p] = -c
        out.append(v)
    return out


def span_basis(vectors: Iterable[Vec]) -> list[Vec]:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.basis()


class Subspace:
    """A subspace of an ambient coordinate space, with exact coordinates."""

    def __init__(self, dim_ambient: int, basis: Sequence[Vec]):
        self.dim_ambient = dim_ambient
        self.basis: list[Vec] = []
        self._ech = Echelon()
        for v in basis:
            if self._ech.add(v):
                self.basis.append(v)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, [{i: ONE} for i in range(n)])

    def coords_of(self, vec: Vec) -> Vec | None:
        rem, combo = self._ech.reduce(vec)
        if rem:
            return None
        return combo

    def contains(self, vec: Vec) -> bool:
        return self.coords_of(vec) is not None

    def lift(self, coords: Vec) -> Vec:
        out: Vec = {}
        for j, c in coords.items():
            out = vec_add_scaled(out, self.basis[j], c)
        return out

    def restrict(self, m: Mat) -> Mat:
        """Matrix of m on this subspace; raises if not invariant."""
        rows: dict[int, Vec] = {}
        for j, b in enumerate(self.basis):
            w = m.apply(b)
            coords = self.coords_of(w)
            if coords is None:
                raise ValueError("subspace not invariant under operator")
            for i, c in coords.items():
                rows.setdefault(i, {})[j] = c
        return Mat(self.dim, self.dim, rows)

    def sub_lift(self, small: Subspace) -> Subspace:
        """Lift a subspace of this coordinate space into the ambient space."""
        return Subspace(self.dim_ambient, [self.lift(v) for v in small.basis])


def min_poly(m: Mat) -> list[SqrtNumber]:
    """Monic minimal polynomial coefficients, low degree first."""
    ech = Echelon()
    power = Mat.identity(m.nrows)
    powers = []
    while True:
        vec: Vec = {}
        for r, row in power.rows.items():
            for c, v in row.items():
                vec[r * m.ncols + c] = v
        if not ech.add(vec):
            _, combo = ech.reduce(vec)
            deg = len(powers)
            coeffs = [ZERO] * (deg + 1)
            coeffs[deg] = ONE
            for i, c in combo.items():
                coeffs[i] = coeffs[i] - c
            return coeffs
        powers.append(power)
        power = power * m


def _rational_roots(int_coeffs: list[int]) -> list[Fraction]:
    """All rational roots of an integer-coefficient polynomial."""

    def divisors(n: int) -> list[int]:
        n = abs(n)
        out = [d for d in range(1, n + 1) if n % d == 0]
        return out

    while int_coeffs and int_coeffs[-1] == 0:
        int_coeffs = int_coeffs[:-1]
    roots = []
    low = 0
    while low < len(int_coeffs) and int_coeffs[low] == 0:
        low += 1
    if low:
        roots.append(Fraction(0))
        int_coeffs = int_coeffs[low:]
    if len(int_coeffs) <= 1:
        return roots
    a0, an = int_coeffs[0], int_coeffs[-1]
    seen = set(roots)
    for p in divisors(a0):
        for q in divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in seen:
                    continue
                acc = Fraction(0)
                for c in reversed(int_coeffs):
                    acc = acc * cand + c
                if acc == 0:
                    seen.add(cand)
                    roots.append(cand)
    return roots


def _deflate(coeffs: list[SqrtNumber], root: SqrtNumber) -> list[SqrtNumber]:
    """Divide a monic polynomial by (x - root)."""
    deg = len(coeffs) - 1
    out = [ZERO] * deg
    acc = coeffs[deg]
    for i in range(deg - 1, -1, -1):
        out[i] = acc
        acc = coeffs[i] + acc * root
    return out


def poly_roots(coeffs: list[SqrtNumber]) -> tuple[list[SqrtNumber], bool]:
    """Roots of a monic polynomial within the multi-quadratic field.

    Finds rational roots first, then closes out a remaining rational quadratic
    with sqrt_rational.  Returns (sorted roots, fully_factored flag).
    """
    work = list(coeffs)
    roots: list[SqrtNumber] = []
    changed = True
    while len(work) > 1 and changed:
        changed = False
        if all(c.is_rational() for c in work):
            denom = 1
            for c in work:
                denom = denom * c.rational_value().denominator // _gcd_int(
                    denom, c.rational_value().denominator
                )
            ints = [int(c.rational_value() * denom) for c in work]
            for r in _rational_roots(ints):
                rr = rational(r)
                # deflate once per multiplicity
                while len(work) > 1:
                    acc = work[-1]
                    for i in range(len(work) - 2, -1, -1):
                        acc = work[i] + acc * rr
                    if acc:
                        break
                    roots.append(rr)
                    work = _deflate(work, rr)
                    changed = True
        if len(work) == 3:
            # monic quadratic x^2 + b x + c over the field
            b, c = work[1], work[0]
            disc = b * b - rational(4) * c
            root_disc = _field_sqrt(disc)
            if root_disc is not None:
                half = rational(Fraction(1, 2))
                r1 = (-b - root_disc) * half
                r2 = (-b + root_disc) * half
                roots.extend([r1, r2])
                work = [ONE]
                changed = True
        if len(work) == 2:
            roots.append(-work[0])
            work = [ONE]
            changed = True
    roots.sort()
    return roots, len(work) == 1


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _field_sqrt(u: SqrtNumber) -> SqrtNumber | None:
    """A square root of u inside the field, if one exists with <= 1 radical."""
    if u.is_zero():
        return ZERO
    if u.sign() < 0:
        return None
    if u.is_rational():
        return sqrt_rational(u.rational_value())
    terms = u.terms
    if len(terms) == 2 and 1 in terms:
        # u = a + b*sqrt(d); try (x + y*sqrt(d))^2
        (d,) = [k for k in terms if k != 1]
        a, b = terms[1], terms[d]
        # x^2 + d y^2 = a, 2xy = b  =>  x^2 solves t^2 - a t + d b^2/4 = 0
        disc = a * a - d * b * b
        if disc < 0:
            return None
        s = sqrt_rational(disc)
        if not s.is_rational():
            return None
        for x2 in ((a + s.rational_value()) / 2, (a - s.rational_value()) / 2):
            if x2 < 0:
                continue
            x = sqrt_rational(x2)
            if not x.is_rational() or not x:
                continue
            xr = x.rational_value()
            y = b / (2 * xr)
            cand = SqrtNumber.from_terms([(1, xr), (d, y)])
            if cand * cand == u:
                return cand if cand.sign() >= 0 else -cand
    return None


def poly_partial_factors(coeffs: list[SqrtNumber]) -> list[list[SqrtNumber]]:
    """Split a monic polynomial into pairwise-coprime monic factors.

    Rational roots come off as (x - r)^k factors; a rational-coefficient
    remainder of degree 2 or a biquadratic degree-4 one is split when the
    field allows; whatever resists stays as a single factor.
    """
    factors: list[list[SqrtNumber]] = []
    work = list(coeffs)
    roots: dict[SqrtNumber, int] = {}
    if all(c.is_rational() for c in work):
        denom = 1
        for c in work:
            d = c.rational_value().denominator
            denom = denom * d // _gcd_int(denom, d)
        ints = [int(c.rational_value() * denom) for c in work]
        for r in _rational_roots(ints):
            rr = rational(r)
            while len(work) > 1:
                acc = work[-1]
                for i in range(len(work) - 2, -1, -1):
                    acc = work[i] + acc * rr
                if acc:
                    break
                roots[rr] = roots.get(rr, 0) + 1
                work = _deflate(work, rr)
    for rr, mult in sorted(roots.items()):
        factor = [ONE]
        for _ in range(mult):
            factor = _poly_mul(factor, [-rr, ONE])
        factors.append(factor)
    if len(work) == 3:
        b, c = work[1], work[0]
        disc = b * b - rational(4) * c
        root_disc = _field_sqrt(disc)
        if root_disc is not None and root_disc:
            half = rational(Fraction(1, 2))
            r1 = (-b - root_disc) * half
            r2 = (-b + root_disc) * half
            factors.extend([[-r1, ONE], [-r2, ONE]])
            work = [ONE]
    if (
        len(work) == 5
        and all(cf.is_rational() for cf in work)
        and work[1].is_zero()
        and work[3].is_zero()
    ):
        # biquadratic x^4 + p x^2 + q: factor through y = x^2
        p, q = work[2], work[0]
        disc = p * p - rational(4) * q
        root_disc = _field_sqrt(disc)
        if root_disc is not None and root_disc:
            half = rational(Fraction(1, 2))
            y1 = (-p - root_disc) * half
            y2 = (-p + root_disc) * half
            factors.extend([[-y1, ZERO, ONE], [-y2, ZERO, ONE]])
            work = [ONE]
    if len(work) > 1:
        factors.append(work)
    return factors


def _poly_mul(a: list[SqrtNumber], b: list[SqrtNumber]) -> list[SqrtNumber]:
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def poly_apply(coeffs: list[SqrtNumber], m: Mat) -> Mat:
    """Evaluate a polynomial at a matrix (Horner)."""
    acc = Mat.scalar(m.nrows, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * m + Mat.scalar(m.nrows, c)
    return acc


def eigensplit(
    pieces: list[Subspace],
    operators: Iterable[Mat],
    require_full: bool = True,
) -> list[tuple[Subspace, list[SqrtNumber]]]:
    """Refine subspaces into joint eigenspaces of commuting operators.

    Returns (piece, eigenvalue tuple) pairs; eigenvalues are listed in operator
    order.  Raises if an operator fails to split and require_full is set.
    """
    labeled: list[tuple[Subspace, list[SqrtNumber]]] = [(p, []) for p in pieces]
    for op in operators:
        refined: list[tuple[Subspace, list[SqrtNumber]]] = []
        for piece, label in labeled:
            small = piece.restrict(op)
            mp = min_poly(small)
            roots, complete = poly_roots(mp)
            if not complete:
                if require_full:
                    raise ValueError("minimal polynomial did not split over the field")
                refined.append((piece, label + [None]))
                continue
            distinct: list[SqrtNumber] = []
            for lam in roots:
                if lam not in distinct:
                    distinct.append(lam)
            roots = distinct
            if len(roots) == 1:
                refined.append((piece, label + [roots[0]]))
                continue
            for lam in roots:
                shifted = small - Mat.scalar(small.nrows, lam)
                # rows of (small - lam) are the constraint functionals on v
                ker = kernel(list(shifted.rows.values()), small.nrows)
                if not ker:
                    continue
                sub = Subspace(piece.dim, ker)
                refined.append((piece.sub_lift(sub), label + [lam]))
        labeled = refined
    return labeled
