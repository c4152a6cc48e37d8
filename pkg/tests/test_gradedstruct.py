import pytest

from superspin import gradedstruct as gs
from superspin import spinalg as sa
from superspin.exactnum import MINUS_ONE, ONE
from superspin.linalg import Echelon, Mat


def regular_algebra(n):
    ctx = sa.context(n)
    N = len(ctx.perms)
    gens = []
    for g in range(1, n):
        rows = {}
        for p in range(N):
            s, q = ctx.left_mul_gen(g, p)
            rows.setdefault(q, {})[p] = ONE if s > 0 else MINUS_ONE
        gens.append((f"tau_{g}", Mat(N, N, rows)))
    return gs.GradedMatrixAlgebra(N, tuple(ctx.parity), gens)


def vecize(m):
    return {r * m.ncols + c: v for r, row in m.rows.items() for c, v in row.items()}


def test_homogeneity_enforced():
    bad = Mat(2, 2, {0: {0: ONE, 1: ONE}})
    with pytest.raises(ValueError):
        gs.GradedMatrixAlgebra(2, (0, 1), [("bad", bad)])


def test_supercommutant_examples():
    # Schur: the full graded matrix algebra has scalar supercommutant
    assert len(gs.supercommutant(gs.m_algebra(1, 1))) == 1
    # Q(1) on its standard module: dimension 2 with an odd square-scalar element
    sc = gs.supercommutant(gs.q_algebra(1))
    assert len(sc) == 2
    odd = [
        x
        for x in sc
        if gs.matrix_parity(x, (0, 1)) == 1
    ]
    assert len(odd) == 1
    sq = odd[0] * odd[0]
    assert sq == Mat.scalar(2, sq.entry(0, 0)) and sq.entry(0, 0)


def test_double_supercommutant():
    q1 = gs.q_algebra(1)
    prime = gs.supercommutant(q1)
    algp = gs.GradedMatrixAlgebra(
        q1.dim, q1.parity, [(f"x{i}", m) for i, m in enumerate(prime)]
    )
    second = gs.supercommutant(algp)
    e1, e2 = Echelon(), Echelon()
    for m in gs.span_closure(q1.generator_mats(), q1.dim):
        e1.add(vecize(m))
    for m in second:
        e2.add(vecize(m))
    assert e1.rank == e2.rank
    assert all(e1.contains(vecize(m)) for m in second)


def test_classify_module_examples():
    assert gs.classify_module(gs.m_algebra(2, 1))["kind"] == "M"
    assert gs.classify_module(gs.m_algebra(2, 1))["params"] == (2, 1)
    q = gs.classify_module(gs.q_algebra(2))
    assert q["kind"] == "Q" and q["params"] == 2
    # direct sum of two copies of the M(1,1) module is reducible with dim 4
    m11 = gs.m_algebra(1, 1)
    gens2 = []
    for name, g in m11.generators:
        rows = {r: dict(row) for r, row in g.rows.items()}
        for r, row in g.rows.items():
            rows[2 + r] = {2 + c: v for c, v in row.items()}
        gens2.append((name, Mat(4, 4, rows)))
    dsum = gs.GradedMatrixAlgebra(4, (0, 1, 0, 1), gens2)
    out = gs.classify_module(dsum)
    assert out["kind"] == "reducible" and out["supercommutant_dim"] == 4


def test_decompose_regular_representations():
    rep3 = gs.decompose_semisimple(regular_algebra(3))
    assert rep3.summary() == [("Q", 1), ("M", (1, 1))]
    assert rep3.total_block_dim() == 6
    rep4 = gs.decompose_semisimple(regular_algebra(4))
    assert rep4.summary() == [("Q", 2), ("M", (2, 2))]
    assert rep4.total_block_dim() == 24
    # idempotents are orthogonal and sum to the identity
    blocks = rep4.sorted_blocks()
    total = Mat.zero(24)
    for b in blocks:
        assert b.idempotent * b.idempotent == b.idempotent
        total = total + b.idempotent
    assert total == Mat.identity(24)
    assert (blocks[0].idempotent * blocks[1].idempotent).is_zero()


def test_decompose_single_block():
    rep = gs.decompose_semisimple(gs.m_algebra(1, 0))
    assert rep.summary() == [("M", (1, 0))]


def test_decompose_semisimplicity_check():
    # a nilpotent one-generator algebra fails the trace-form test
    nil = gs.GradedMatrixAlgebra(
        2, (0, 0), [("n", Mat(2, 2, {0: {1: ONE}}))]
    )
    with pytest.raises(ValueError):
        gs.decompose_semisimple(nil, check_semisimple=True)
    # the regular representation passes it
    gs.decompose_semisimple(regular_algebra(3), check_semisimple=True)


def test_graded_tensor_identities():
    adj = gs.tensor_formula_adjudication()
    assert adj["classifications"]["Q1xQ1"] == ("M", (1, 1))
    assert adj["classifications"]["M11xQ2"] == ("Q", 4)
    assert adj["classifications"]["M11xM11"] == ("M", (2, 2))
    assert adj["selected_variant"] == "corrected"


def test_graded_tensor_associative_up_to_blocks():
    a, b, c = gs.q_algebra(1), gs.m_algebra(1, 1), gs.q_algebra(1)
    left = gs.decompose_semisimple(gs.graded_tensor(gs.graded_tensor(a, b), c))
    right = gs.decompose_semisimple(gs.graded_tensor(a, gs.graded_tensor(b, c)))
    assert left.summary() == right.summary()


def test_adjoin_epsilon():
    # trivial grading: C[eps] = C + C
    trivial = gs.GradedMatrixAlgebra(1, (0,), [("one", Mat(1, 1, {0: {0: ONE}}))])
    assert len(gs.decompose_semisimple(gs.adjoin_epsilon(trivial)).blocks) == 2
    # Q(1)[eps] is the full 2x2 matrix algebra: a single block
    assert len(gs.decompose_semisimple(gs.adjoin_epsilon(gs.q_algebra(1))).blocks) == 1
    # simple-module count of A[eps] = 2 #M + #Q.  Over the real field the two
    # modules of an M pair can be conjugate-fused, so the count is read off
    # the center dimension (stable under scalar extension) rather than by
    # splitting central idempotents.
    for n in (3, 4):
        an = regular_algebra(n)
        base = gs.decompose_semisimple(an)
        m_count = sum(1 for b in base.blocks if b.btype == "M")
        q_count = sum(1 for b in base.blocks if b.btype == "Q")
        eps = gs.adjoin_epsilon(an)
        span = gs.span_closure(eps.generator_mats(), eps.dim)
        ev, od = gs.center_of_span(span, eps.generator_mats(), eps.parity)
        assert len(ev) + len(od) == 2 * m_count + q_count


def test_graded_centralizer():
    a3 = regular_algebra(3)
    z = gs.graded_centralizer(a3, a3.generator_mats())
    # graded center of the rank-3 algebra: dim 3 (= dim Z(A_0))
    assert len(z["basis"]) == 3 and z["is_commutative"]
    a4 = regular_algebra(4)
    z43 = gs.graded_centralizer(a4, a4.generator_mats()[:2])
    assert z43["is_commutative"]
    # Z(A,B) has the dimension of Z(A_0, B_0)
    spin_dim = len(sa.graded_centralizer_spin(4, 3)[0])
    assert len(z43["basis"]) == spin_dim
    outside = Mat(6, 6, {0: {0: ONE}})  # a matrix unit is not in the image
    with pytest.raises(ValueError):
        gs.graded_centralizer(a3, [outside])


def test_grading_independence_of_semisimplicity():
    # the nongraded simple-component count is the full center dimension; each
    # Q block contributes two nongraded components, each M block one.  (The
    # center dimension is stable under scalar extension, while an idempotent
    # split over the real field can fuse conjugate components, e.g. at n=4.)
    for n in (3, 4, 5):
        alg = regular_algebra(n)
        graded = gs.decompose_semisimple(alg)
        m_count = sum(1 for b in graded.blocks if b.btype == "M")
        q_count = sum(1 for b in graded.blocks if b.btype == "Q")
        span = gs.span_closure(alg.generator_mats(), alg.dim)
        ev, od = gs.center_of_span(span, alg.generator_mats(), alg.parity)
        assert len(ev) == m_count + q_count
        assert len(od) == q_count
        assert len(ev) + len(od) == m_count + 2 * q_count
        assert graded.total_block_dim() == alg.dim


def test_block_report_json():
    rep = gs.decompose_semisimple(regular_algebra(3))
    obj = rep.to_json()
    assert obj["schema"] == "superspin/1"
    assert len(obj["blocks"]) == 2
    assert obj["blocks"][0]["type"] == "Q"
    assert obj["blocks"][0]["idempotent"] is not None


def test_algebra_json_roundtrip():
    a = gs.q_algebra(1)
    obj = a.to_json()
    back = gs.GradedMatrixAlgebra.from_json(obj)
    assert back.dim == a.dim and back.parity == a.parity
    assert all(
        g1 == g2 for (_, g1), (_, g2) in zip(a.generators, back.generators)
    )
