"""Concrete Z2-graded matrix algebras: classification and block decomposition.

A GradedMatrixAlgebra is a parity vector on the underlying space together
with parity-homogeneous generator matrices.  The two simple shapes are the
full graded matrix algebra on a (n, m)-space and the Q-type algebra of
[[A, B], [B, A]] matrices; every semisimple algebra splits into such blocks,
and the split is computed here by exact eigenspace refinement of central
elements, with block projectors assembled as Lagrange polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .exactnum import ONE, ZERO, SqrtNumber, rational
from .linalg import (
    Echelon,
    Mat,
    Subspace,
    Vec,
    kernel,
    min_poly,
    poly_roots,
    vec_add_scaled,
)


@dataclass
class GradedMatrixAlgebra:
    dim: int
    parity: tuple[int, ...]
    generators: list[tuple[str, Mat]]

    def __post_init__(self):
        self.parity = tuple(self.parity)
        if len(self.parity) != self.dim:
            raise ValueError("parity vector length must match dimension")
        for name, g in self.generators:
            if matrix_parity(g, self.parity) is None:
                raise ValueError(f"generator {name} is not parity-homogeneous")

    def generator_mats(self) -> list[Mat]:
        return [g for _, g in self.generators]

    def graded_dims(self) -> tuple[int, int]:
        even = sum(1 for p in self.parity if p == 0)
        return even, self.dim - even

    def to_json(self) -> dict:
        return {
            "schema": "superspin/1",
            "dim": self.dim,
            "parity": list(self.parity),
            "generators": [
                {"name": name, "matrix": g.to_json()} for name, g in self.generators
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> GradedMatrixAlgebra:
        return cls(
            obj["dim"],
            tuple(obj["parity"]),
            [(g["name"], Mat.from_json(g["matrix"])) for g in obj["generators"]],
        )


def matrix_parity(m: Mat, parity: Sequence[int]) -> int | None:
    """0/1 for homogeneous nonzero matrices, 0 for zero, None for mixed."""
    seen: set[int] = set()
    for r, row in m.rows.items():
        for c in row:
            seen.add((parity[r] + parity[c]) % 2)
    if not seen:
        return 0
    return seen.pop() if len(seen) == 1 else None


def theta(m: Mat, parity: Sequence[int]) -> Mat:
    """Parity automorphism: negate the odd component."""
    rows: dict[int, Vec] = {}
    for r, row in m.rows.items():
        for c, v in row.items():
            rows.setdefault(r, {})[c] = v if (parity[r] + parity[c]) % 2 == 0 else -v
    return Mat(m.nrows, m.ncols, rows)


def m_algebra(n: int, m: int) -> GradedMatrixAlgebra:
    """The full graded matrix algebra on a (n, m)-dimensional graded space."""
    dim = n + m
    parity = tuple([0] * n + [1] * m)
    gens = [
        (f"e_{r}_{c}", Mat(dim, dim, {r: {c: ONE}}))
        for r in range(dim)
        for c in range(dim)
    ]
    return GradedMatrixAlgebra(dim, parity, gens)


def q_algebra(n: int) -> GradedMatrixAlgebra:
    """The Q-type algebra of [[A, B], [B, A]] matrices on an (n, n)-space."""
    dim = 2 * n
    parity = tuple([0] * n + [1] * n)
    gens = []
    for r in range(n):
        for c in range(n):
            gens.append(
                (f"a_{r}_{c}", Mat(dim, dim, {r: {c: ONE}, n + r: {n + c: ONE}}))
            )
            gens.append(
                (f"b_{r}_{c}", Mat(dim, dim, {r: {n + c: ONE}, n + r: {c: ONE}}))
            )
    return GradedMatrixAlgebra(dim, parity, gens)


# -- solves ---------------------------------------------------------------------


def _entry_unknowns(parity: Sequence[int], x_parity: int) -> list[tuple[int, int]]:
    n = len(parity)
    return [
        (r, c)
        for r in range(n)
        for c in range(n)
        if (parity[r] + parity[c]) % 2 == x_parity
    ]


def commutant_matrices(
    gens: Iterable[Mat],
    parity: Sequence[int],
    x_parity: int,
    mode: str = "super",
) -> list[Mat]:
    """Homogeneous X with X G = s(G) G X for all generators.

    mode "super": s = (-1)^(p(X) p(G)); "plain": s = +1; "twisted": s = (-1)^p(G)
    (the even twisted centralizer condition x b = theta(b) x).
    """
    gens = list(gens)
    n = len(parity)
    unknowns = _entry_unknowns(parity, x_parity)
    pos = {rc: i for i, rc in enumerate(unknowns)}
    constraints: list[Vec] = []
    for g in gens:
        pg = matrix_parity(g, parity)
        if pg is None:
            raise ValueError("non-homogeneous generator")
        if mode == "super":
            s = -1 if (x_parity and pg) else 1
        elif mode == "plain":
            s = 1
        elif mode == "twisted":
            s = -1 if pg else 1
        else:
            raise ValueError(f"unknown mode {mode!r}")
        rows: dict[tuple[int, int], Vec] = {}
        gcols = g.cols()
        for (r, k) in unknowns:
            # X[r,k] contributes X[r,k]*G[k,c] to (XG)[r,c]
            for c, v in g.rows.get(k, {}).items():
                rows.setdefault((r, c), {})[pos[(r, k)]] = v
        for (k, c) in unknowns:
            # X[k,c] contributes -s*G[r,k]*X[k,c] to the constraint at (r,c)
            for r, v in gcols.get(k, {}).items():
                row = rows.setdefault((r, c), {})
                prev = row.get(pos[(k, c)], ZERO)
                val = prev - (v if s > 0 else -v)
                if val:
                    row[pos[(k, c)]] = val
                elif pos[(k, c)] in row:
                    del row[pos[(k, c)]]
        constraints.extend(v for v in rows.values() if v)
    sols = kernel(constraints, len(unknowns))
    out = []
    for sol in sols:
        entries = {unknowns[i]: v for i, v in sol.items()}
        out.append(Mat.from_entries(n, n, entries))
    return out


def supercommutant(a: GradedMatrixAlgebra) -> list[Mat]:
    """Basis of the supercommutant of the generators (even part then odd part)."""
    if a.dim > 1000:
        raise ValueError("dimension cap exceeded")
    gens = a.generator_mats()
    return commutant_matrices(gens, a.parity, 0, "super") + commutant_matrices(
        gens, a.parity, 1, "super"
    )


def classify_module(a: GradedMatrixAlgebra) -> dict:
    """Type of the module: M(r, s), Q(r), or reducible, via the supercommutant."""
    even = commutant_matrices(a.generator_mats(), a.parity, 0, "super")
    odd = commutant_matrices(a.generator_mats(), a.parity, 1, "super")
    total = len(even) + len(odd)
    r, s = a.graded_dims()
    if total == 1:
        return {"kind": "M", "params": (r, s), "supercommutant_dim": 1}
    if total == 2 and len(odd) == 1:
        j = odd[0]
        sq = j * j
        c = sq.entry(0, 0)
        if sq == Mat.scalar(a.dim, c) and c:
            assert r == s
            return {"kind": "Q", "params": r, "supercommutant_dim": 2}
    return {
        "kind": "reducible",
        "params": None,
        "supercommutant_dim": total,
        "supercommutant_dim_even": len(even),
        "supercommutant_dim_odd": len(odd),
    }


def span_closure(gens: Iterable[Mat], dim: int) -> list[Mat]:
    """Basis of the (possibly nonunital) span of all words in the generators."""
    gens = [g for g in gens if not g.is_zero()]

    def vecize(m: Mat) -> Vec:
        return {
            r * dim + c: v for r, row in m.rows.items() for c, v in row.items()
        }

    ech = Echelon()
    basis: list[Mat] = []
    queue: list[Mat] = []
    for g in gens:
        if ech.add(vecize(g)):
            basis.append(g)
            queue.append(g)
    while queue:
        m = queue.pop(0)
        for g in gens:
            prod = m * g
            if not prod.is_zero() and ech.add(vecize(prod)):
                basis.append(prod)
                queue.append(prod)
    return basis


def center_of_span(
    span: Sequence[Mat], gens: Sequence[Mat], parity: Sequence[int]
) -> tuple[list[Mat], list[Mat]]:
    """(even, odd) bases of the ordinary center, inside the given span."""
    even_idx: list[int] = []
    odd_idx: list[int] = []
    split_parts: list[tuple[Mat, Mat]] = []
    for b in span:
        ev_rows: dict[int, Vec] = {}
        od_rows: dict[int, Vec] = {}
        for r, row in b.rows.items():
            for c, v in row.items():
                tgt = ev_rows if (parity[r] + parity[c]) % 2 == 0 else od_rows
                tgt.setdefault(r, {})[c] = v
        split_parts.append(
            (Mat(b.nrows, b.ncols, ev_rows), Mat(b.nrows, b.ncols, od_rows))
        )
    homog: list[Mat] = []
    ech = Echelon()

    def vecize(m: Mat) -> Vec:
        return {
            r * m.ncols + c: v for r, row in m.rows.items() for c, v in row.items()
        }

    for ev, od in split_parts:
        for part in (ev, od):
            if not part.is_zero() and ech.add(vecize(part)):
                homog.append(part)
    pos = range(len(homog))
    constraints: list[Vec] = []
    for g in gens:
        rows: dict[tuple[int, int], Vec] = {}
        for i, b in enumerate(homog):
            comm = b * g - g * b
            for r, row in comm.rows.items():
                for c, v in row.items():
                    tgt = rows.setdefault((r, c), {})
                    prev = tgt.get(i, ZERO) + v
                    if prev:
                        tgt[i] = prev
                    elif i in tgt:
                        del tgt[i]
        constraints.extend(v for v in rows.values() if v)
    sols = kernel(constraints, len(homog))
    even_out, odd_out = [], []
    for sol in sols:
        m = Mat.zero(homog[0].nrows, homog[0].ncols) if homog else Mat.zero(0)
        for i, c in sol.items():
            m = m + homog[i].scale(c)
        p = matrix_parity(m, parity)
        (even_out if p == 0 else odd_out).append(m)
    return even_out, odd_out


@dataclass
class Block:
    btype: str  # "M" or "Q"
    params: tuple[int, int] | int
    dimension: int
    idempotent: Mat | None = None
    spectrum: list[tuple[int, ...]] | None = None
    partition: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        return {
            "type": self.btype,
            "params": list(self.params) if isinstance(self.params, tuple) else self.params,
            "dimension": self.dimension,
            "idempotent": self.idempotent.to_json() if self.idempotent else None,
            "spectrum": [list(a) for a in self.spectrum] if self.spectrum else None,
            "partition": list(self.partition) if self.partition else None,
        }


@dataclass
class BlockReport:
    algebra_dim: int
    blocks: list[Block] = field(default_factory=list)

    def sorted_blocks(self) -> list[Block]:
        return sorted(
            self.blocks,
            key=lambda b: (b.dimension, b.spectrum or [], str(b.params)),
        )

    def summary(self) -> list[tuple[str, object]]:
        return [(b.btype, b.params) for b in self.sorted_blocks()]

    def total_block_dim(self) -> int:
        return sum(b.dimension for b in self.blocks)

    def to_json(self) -> dict:
        return {
            "schema": "superspin/1",
            "algebra_dim": self.algebra_dim,
            "blocks": [b.to_json() for b in self.sorted_blocks()],
        }


def split_module_by_central(
    dim: int, central: Sequence[Mat]
) -> list[tuple[Subspace, Mat]]:
    """Joint eigenspaces of commuting operators, with Lagrange projectors."""
    pieces: list[tuple[Subspace, Mat]] = [(Subspace.full(dim), Mat.identity(dim))]
    for op in central:
        refined: list[tuple[Subspace, Mat]] = []
        for piece, proj in pieces:
            small = piece.restrict(op)
            roots, complete = poly_roots(min_poly(small))
            if not complete:
                raise ValueError("central element spectrum did not split over field")
            distinct: list[SqrtNumber] = []
            for lam in roots:
                if lam not in distinct:
                    distinct.append(lam)
            if len(distinct) == 1:
                refined.append((piece, proj))
                continue
            for lam in distinct:
                shifted = small - Mat.scalar(small.nrows, lam)
                ker = kernel(list(shifted.rows.values()), small.nrows)
                if not ker:
                    continue
                sub = piece.sub_lift(Subspace(piece.dim, ker))
                factor = Mat.identity(dim)
                for mu in distinct:
                    if mu == lam:
                        continue
                    scale = (lam - mu).invert()
                    factor = factor * (op - Mat.scalar(dim, mu)).scale(scale)
                refined.append((sub, proj * factor))
        pieces = refined
    return pieces


def decompose_semisimple(
    a: GradedMatrixAlgebra,
    spectrum_ops: Sequence[Mat] | None = None,
    check_semisimple: bool = False,
) -> BlockReport:
    """Split the span of the generators into simple graded blocks.

    Blocks are cut by eigenspaces of the even ordinary center; each block is
    labeled M or Q by whether the odd center vanishes on it, with parameters
    recovered from the block algebra's graded dimensions.
    """
    gens = a.generator_mats()
    span = span_closure(gens, a.dim)
    if check_semisimple and not _trace_form_nondegenerate(span):
        raise ValueError("input algebra is not semisimple (degenerate trace form)")
    even_center, odd_center = center_of_span(span, gens, a.parity)
    pieces = split_module_by_central(a.dim, even_center)
    if len(pieces) != len(even_center):
        raise ValueError(
            f"central split found {len(pieces)} pieces for {len(even_center)} "
            "central dimensions; non-semisimple or non-split input"
        )
    report = BlockReport(algebra_dim=sum(_parity_split_dims(span, a.parity)))
    for piece, proj in pieces:
        restricted = [piece.restrict(g) for g in gens]
        piece_parity = _restricted_parity(piece, a.parity)
        block_span = span_closure([g for g in restricted], piece.dim)
        ev_dim, od_dim = _parity_split_dims(block_span, piece_parity)
        alg_dim = ev_dim + od_dim
        has_odd_center = any(
            not _restrict_is_zero(piece, z) for z in odd_center
        )
        spectrum = None
        if spectrum_ops:
            spectrum = _joint_spectrum(piece, spectrum_ops)
        if has_odd_center:
            q = isqrt(alg_dim // 2)
            if 2 * q * q != alg_dim or ev_dim != q * q:
                raise ValueError("inconsistent Q-block dimensions")
            report.blocks.append(
                Block("Q", q, alg_dim, idempotent=proj, spectrum=spectrum)
            )
        else:
            t = isqrt(alg_dim)
            if t * t != alg_dim:
                raise ValueError("inconsistent M-block dimensions")
            # r + s = t, r^2 + s^2 = ev_dim
            disc = 2 * ev_dim - t * t
            u = isqrt(disc) if disc >= 0 else -1
            if u < 0 or u * u != disc or (t + u) % 2:
                raise ValueError("inconsistent M-block graded dimensions")
            r, s = (t + u) // 2, (t - u) // 2
            report.blocks.append(
                Block("M", (r, s), alg_dim, idempotent=proj, spectrum=spectrum)
            )
    return report


def _parity_split_dims(span: Sequence[Mat], parity: Sequence[int]) -> tuple[int, int]:
    ev, od = Echelon(), Echelon()
    for b in span:
        ev_vec: Vec = {}
        od_vec: Vec = {}
        for r, row in b.rows.items():
            for c, v in row.items():
                key = r * b.ncols + c
                if (parity[r] + parity[c]) % 2 == 0:
                    ev_vec[key] = v
                else:
                    od_vec[key] = v
        if ev_vec:
            ev.add(ev_vec)
        if od_vec:
            od.add(od_vec)
    return ev.rank, od.rank


def _restricted_parity(piece: Subspace, parity: Sequence[int]) -> tuple[int, ...]:
    out = []
    for b in piece.basis:
        ps = {parity[i] for i in b}
        if len(ps) != 1:
            raise ValueError("block subspace is not parity-homogeneous")
        out.append(ps.pop())
    return tuple(out)


def _restrict_is_zero(piece: Subspace, op: Mat) -> bool:
    return all(not op.apply(b) for b in piece.basis)


def _joint_spectrum(piece: Subspace, ops: Sequence[Mat]) -> list[tuple]:
    from .linalg import eigensplit

    labeled = eigensplit([piece], ops)
    out = {tuple(lab) for _, lab in labeled}
    return sorted(out)


def _trace_form_nondegenerate(span: Sequence[Mat]) -> bool:
    n = len(span)
    gram: list[Vec] = []
    for i in range(n):
        row: Vec = {}
        for j in range(n):
            prod = span[i] * span[j]
            tr = ZERO
            for r in range(prod.nrows):
                tr = tr + prod.entry(r, r)
            if tr:
                row[j] = tr
        gram.append(row)
    ech = Echelon()
    for row in gram:
        ech.add(row)
    return ech.rank == n


# -- constructions ----------------------------------------------------------------


def graded_tensor(
    a: GradedMatrixAlgebra, b: GradedMatrixAlgebra
) -> GradedMatrixAlgebra:
    """Graded tensor product with the Koszul sign on the right factor."""
    da, db = a.dim, b.dim
    dim = da * db
    parity = tuple(
        (a.parity[i] + b.parity[j]) % 2 for i in range(da) for j in range(db)
    )
    gens: list[tuple[str, Mat]] = []
    for name, ga in a.generators:
        rows: dict[int, Vec] = {}
        for r, row in ga.rows.items():
            for c, v in row.items():
                for j in range(db):
                    rows.setdefault(r * db + j, {})[c * db + j] = v
        gens.append((f"L:{name}", Mat(dim, dim, rows)))
    for name, gb in b.generators:
        pg = matrix_parity(gb, b.parity)
        rows = {}
        for r, row in gb.rows.items():
            for c, v in row.items():
                for i in range(da):
                    sign = -1 if (pg and a.parity[i]) else 1
                    rows.setdefault(i * db + r, {})[i * db + c] = (
                        v if sign > 0 else -v
                    )
        gens.append((f"R:{name}", Mat(dim, dim, rows)))
    return GradedMatrixAlgebra(dim, parity, gens)


def adjoin_epsilon(a: GradedMatrixAlgebra) -> GradedMatrixAlgebra:
    """Double the module and adjoin the grading-implementing involution.

    The result is regarded as an ungraded algebra (trivial parity): its module
    category plays the role of the graded modules of the input.
    """
    d = a.dim
    gens: list[tuple[str, Mat]] = []
    for name, g in a.generators:
        tg = theta(g, a.parity)
        rows: dict[int, Vec] = {}
        for r, row in g.rows.items():
            rows[r] = dict(row)
        for r, row in tg.rows.items():
            rows[d + r] = {d + c: v for c, v in row.items()}
        gens.append((name, Mat(2 * d, 2 * d, rows)))
    eps_rows = {i: {d + i: ONE} for i in range(d)}
    eps_rows.update({d + i: {i: ONE} for i in range(d)})
    gens.append(("epsilon", Mat(2 * d, 2 * d, eps_rows)))
    return GradedMatrixAlgebra(2 * d, tuple([0] * (2 * d)), gens)


def graded_centralizer(
    a: GradedMatrixAlgebra, b_generators: Sequence[Mat]
) -> dict:
    """Z(A, B): even ordinary plus even twisted centralizer inside span(A)."""
    gens = a.generator_mats()
    span = span_closure(gens, a.dim)
    span_ech = Echelon()

    def vecize(m: Mat) -> Vec:
        return {r * a.dim + c: v for r, row in m.rows.items() for c, v in row.items()}

    for m in span:
        span_ech.add(vecize(m))
    for bg in b_generators:
        if not span_ech.contains(vecize(bg)):
            raise ValueError("B generator outside span of A")
    basis: list[Mat] = []
    ech = Echelon()
    for mode in ("plain", "twisted"):
        constraints: list[Vec] = []
        for bg in b_generators:
            tb = bg if mode == "plain" else theta(bg, a.parity)
            rows: dict[tuple[int, int], Vec] = {}
            for i, m in enumerate(span):
                comm = m * bg - tb * m
                for r, row in comm.rows.items():
                    for c, v in row.items():
                        tgt = rows.setdefault((r, c), {})
                        prev = tgt.get(i, ZERO) + v
                        if prev:
                            tgt[i] = prev
                        elif i in tgt:
                            del tgt[i]
            constraints.extend(v for v in rows.values() if v)
        # evenness of the solution inside the span
        oddity: dict[tuple[int, int], Vec] = {}
        for i, m in enumerate(span):
            for r, row in m.rows.items():
                for c, v in row.items():
                    if (a.parity[r] + a.parity[c]) % 2 == 1:
                        tgt = oddity.setdefault((r, c), {})
                        prev = tgt.get(i, ZERO) + v
                        if prev:
                            tgt[i] = prev
                        elif i in tgt:
                            del tgt[i]
        constraints.extend(v for v in oddity.values() if v)
        for sol in kernel(constraints, len(span)):
            m = Mat.zero(a.dim)
            for i, c in sol.items():
                m = m + span[i].scale(c)
            if not m.is_zero() and ech.add(vecize(m)):
                basis.append(m)
    commutative = True
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            if x * y != y * x:
                commutative = False
                break
        if not commutative:
            break
    return {"basis": basis, "is_commutative": commutative}


# -- tensor identity adjudication ---------------------------------------------


def tensor_formula_adjudication() -> dict:
    """Classify small graded tensor products and record which index formula holds.

    The printed M(n,m) x M(n',m') rule has a repeated index; the corrected rule
    uses nm' + mn'.  The M(2,1) x M(1,1) instance separates the two.
    """
    q1, q2 = q_algebra(1), q_algebra(2)
    m11 = m_algebra(1, 1)
    m21 = m_algebra(2, 1)

    def block_of(t: GradedMatrixAlgebra) -> tuple[str, object]:
        rep = decompose_semisimple(t)
        if len(rep.blocks) != 1:
            raise ValueError("tensor of simple algebras should stay simple")
        b = rep.blocks[0]
        return (b.btype, b.params)

    results = {
        "Q1xQ1": block_of(graded_tensor(q1, q1)),
        "M11xQ2": block_of(graded_tensor(m11, q2)),
        "M11xM11": block_of(graded_tensor(m11, m11)),
        "M21xM11": block_of(graded_tensor(m21, m11)),
    }
    printed = (2 * 1 + 1 * 1, 2 * 1 + 2 * 1)  # (nn'+mm', nm'+nm') as printed
    corrected = (2 * 1 + 1 * 1, 2 * 1 + 1 * 1)  # nm' + mn'
    kind, params = results["M21xM11"]
    match = None
    if kind == "M":
        if set(params) == set(corrected):
            match = "corrected"
        elif set(params) == set(printed):
            match = "printed"
    return {
        "classifications": results,
        "printed_formula_params": printed,
        "corrected_formula_params": corrected,
        "selected_variant": match,
        "expected": {
            "Q1xQ1": ("M", (1, 1)),
            "M11xQ2": ("Q", 4),
            "M11xM11": ("M", (2, 2)),
        },
    }
