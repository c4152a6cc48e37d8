import pytest

from superspin import seminormal as sn
from superspin import shiftedcomb as sc
from superspin.linalg import Mat
from superspin.shiftedcomb import StrictPartition, strict_partitions


def shapes_up_to(n):
    return [s for k in range(1, n + 1) for s in strict_partitions(k)]


def test_clifford_module_relations():
    for m in range(0, 10):
        dim, gens, parity = sn.clifford_module(m)
        assert len(gens) == m
        for i, e in enumerate(gens):
            assert e * e == Mat.identity(dim)
            for j in range(i + 1, m):
                assert (e * gens[j] + gens[j] * e).is_zero()
            for r, row in e.rows.items():
                for c in row:
                    assert (parity[r] + parity[c]) % 2 == 1


def test_build_and_verify_all_shapes():
    for shape in shapes_up_to(5):
        for builder in (sn.build_rep_plain, sn.build_rep_clifford_tensor):
            rep = builder(shape)
            report = sn.verify_relations(rep)
            assert all(r["status"] == "pass" for r in report), (shape, builder)
            assert rep.dim == len(rep.tableaux) * rep.block_dim


def test_variant_adjudication():
    rep = sn.build_rep_plain(StrictPartition((4, 2)))
    assert rep.build_report["case_iii_variant"] == "corrected"
    assert rep.build_report["variant_outcomes"]["printed"].startswith("fail")
    assert rep.build_report["variant_distinguishable"]
    rep31 = sn.build_rep_plain(StrictPartition((3, 1)))
    # with a zero member the two scalars coincide
    assert not rep31.build_report["variant_distinguishable"]
    assert rep31.build_report["variant_outcomes"]["printed"] == "pass"


def test_mutated_rep_fails():
    rep = sn.mutated_rep(sn.build_rep_plain(StrictPartition((3,))))
    report = sn.verify_relations(rep)
    failures = [r for r in report if r["status"] == "fail"]
    assert failures and failures[0]["defect_norm"] > 0


def test_spectrum_examples():
    assert sn.spectrum_of(sn.build_rep_plain(StrictPartition((3,)))) == [(0, 1, 3)]
    assert sn.spectrum_of(sn.build_rep_plain(StrictPartition((2, 1)))) == [(0, 1, 0)]
    assert sn.spectrum_of(sn.build_rep_plain(StrictPartition((3, 1)))) == [
        (0, 1, 0, 3),
        (0, 1, 3, 0),
    ]
    rep2 = sn.build_rep_clifford_tensor(StrictPartition((2,)))
    assert sn.spectrum_of(rep2) == [(0, 1)]


def test_spectrum_matches_tableaux():
    for shape in shapes_up_to(5):
        want = sorted(
            sc.spectrum_vector(t).a for t in sc.standard_tableaux(shape)
        )
        for builder in (sn.build_rep_plain, sn.build_rep_clifford_tensor):
            assert sn.spectrum_of(builder(shape)) == want


def test_classification_against_oracle():
    oracle = {}
    for n in (2, 3, 4, 5):
        for b in sn.regular_decompose("A", n).blocks:
            oracle[tuple(b.partition)] = (b.btype, b.params)
    for parts, want in oracle.items():
        cls = sn.classify_module_rep(
            sn.reference_irreducible(StrictPartition(parts))
        )
        assert (cls["kind"], cls["params"]) == want, parts


def test_fused_pair_over_real_field():
    # the shape (3) module is complex-type: its minimal field model is the
    # fused antipodal pair of the M(1,1) module, with dims twice the complex
    # module and supercommutant pattern (2, 2)
    irr = sn.reference_irreducible(StrictPartition((3,)))
    cls = sn.classify_module_rep(irr)
    assert irr.dim == 4
    assert cls == {
        "kind": "M",
        "params": (1, 1),
        "pattern": "antipodal_pair",
        "complex_count": 2,
        "supercommutant_dims": (2, 2),
    }


def test_q_module_ungraded_split():
    # the (2,1) module is Q(1): 1-dimensional ungraded pieces with tau_i = +-1
    from superspin.linalg import kernel

    irr = sn.reference_irreducible(StrictPartition((2, 1)))
    assert irr.dim == 2
    t1, t2 = irr.gens["tau_1"], irr.gens["tau_2"]
    assert t1 == t2  # forced by pi_3 = 0 on this module
    assert t1 * t1 == Mat.identity(2)
    for sign in (1, -1):
        shifted = t1 - Mat.identity(2).scale(
            Mat.identity(1).entry(0, 0) if sign > 0 else -Mat.identity(1).entry(0, 0)
        )
        assert kernel(list(shifted.rows.values()), 2), sign


def test_intertwiner_examples():
    rep = sn.build_rep_clifford_tensor(StrictPartition((3, 1)))
    P3 = sn.intertwiner_p(3, rep)
    w = rep.block_dim
    # maps each block into its transposed partner
    for t in range(2):
        touched = {
            r // w
            for c in range(t * w, (t + 1) * w)
            for r in P3.cols().get(c, {})
        }
        assert touched == {1 - t}
    pi3, pi4 = rep.pi(3), rep.pi(4)
    assert ((pi3 * pi3) * P3 - P3 * (pi4 * pi4)).is_zero()
    for i, si in [(1, 1), (2, 2), (3, 4), (4, 3)]:
        assert (P3 * rep.pi(i) - rep.pi(si) * P3).is_zero()
        assert (P3 * rep.p(i) - rep.p(si) * P3).is_zero()
    with pytest.raises(ValueError):
        sn.intertwiner_p(1, sn.build_rep_plain(StrictPartition((3, 1))))


def test_intertwiner_braid_well_defined():
    # the product of intertwiners along a reduced admissible word is
    # independent of the word: braid and far commutation hold as matrices
    rep = sn.build_rep_clifford_tensor(StrictPartition((3, 2)))
    ps = {i: sn.intertwiner_p(i, rep) for i in range(1, 5)}
    for i in range(1, 4):
        assert (ps[i] * ps[i + 1] * ps[i] - ps[i + 1] * ps[i] * ps[i + 1]).is_zero()
    for i in range(1, 5):
        for j in range(i + 2, 5):
            assert (ps[i] * ps[j] - ps[j] * ps[i]).is_zero()


def test_analyze_local_pair():
    rep3 = sn.build_rep_plain(StrictPartition((3,)))
    out = sn.analyze_local_pair(rep3, 1)
    assert len(out) == 1
    an = out[0]
    assert an.case == "fused" and an.delta == 0 and an.pair == (0, 1)
    assert an.ratio_action_matches
    rep31 = sn.build_rep_plain(StrictPartition((3, 1)))
    split3 = sn.analyze_local_pair(rep31, 3)
    assert all(a.case == "split" for a in split3)
    assert {a.partner_block for a in split3} == {0, 1}
    fused2 = sn.analyze_local_pair(rep31, 2)
    assert all(a.case == "fused" for a in fused2)
    assert {a.pair for a in fused2} == {(1, 3), (1, 0)}


def test_restrict_and_branch_examples():
    out = sn.restrict_and_branch(sn.build_rep_plain(StrictPartition((3,))))
    assert len(out) == 1
    assert out[0]["shape"].parts == (2,)
    assert out[0]["type"] == "Q" and out[0]["multiplicity"] >= 1
    out = sn.restrict_and_branch(sn.build_rep_plain(StrictPartition((3, 1))))
    assert {e["shape"].parts for e in out} == {(3,), (2, 1)}
    out = sn.restrict_and_branch(sn.build_rep_plain(StrictPartition((2,))))
    assert out[0]["shape"].parts == (1,) and out[0]["type"] == "M"
    with pytest.raises(ValueError):
        sn.restrict_and_branch(sn.build_rep_plain(StrictPartition((1,))))


def test_branching_supports_match_covers():
    for n in (3, 4, 5):
        for shape in strict_partitions(n):
            out = sn.restrict_and_branch(sn.build_rep_plain(shape))
            got = {e["shape"].parts for e in out}
            want = {c.parts for c in shape.covers()}
            assert got == want, shape
            assert all(e["multiplicity"] == 1 for e in out)


def test_branching_graph_from_reps_matches():
    for n in (2, 3, 4):
        g1 = sc.schur_branching_graph(n, source="combinatorial")
        g2 = sc.schur_branching_graph(n, source="from_reps")
        g2.validate()
        assert set(g1.vertices) == set(g2.vertices)
        assert g1.edges == g2.edges
        assert g1.orbit_edge_support() == g2.orbit_edge_support()


def test_regular_decompose_examples():
    rep3 = sn.regular_decompose("A", 3)
    assert [(b.btype, b.params) for b in rep3.sorted_blocks()] == [
        ("Q", 1),
        ("M", (1, 1)),
    ]
    assert [b.spectrum for b in rep3.sorted_blocks()] == [
        [(0, 1, 0)],
        [(0, 1, 3)],
    ]
    rep4 = sn.regular_decompose("A", 4)
    assert rep4.total_block_dim() == 24
    assert [(b.btype, b.params) for b in rep4.sorted_blocks()] == [
        ("Q", 2),
        ("M", (2, 2)),
    ]
    rep5 = sn.regular_decompose("A", 5)
    assert len(rep5.blocks) == 3 and rep5.total_block_dim() == 120
    repc3 = sn.regular_decompose("CA", 3)
    assert repc3.algebra_dim == 48
    assert [(b.btype, b.params) for b in repc3.sorted_blocks()] == [
        ("M", (2, 2)),
        ("Q", 4),
    ]
    with pytest.raises(ValueError):
        sn.regular_decompose("A", 6)
    with pytest.raises(ValueError):
        sn.regular_decompose("CA", 5)


def test_regular_idempotents():
    rep = sn.regular_decompose("A", 4)
    total = Mat.zero(24)
    for b in rep.blocks:
        assert b.idempotent * b.idempotent == b.idempotent
        total = total + b.idempotent
    assert total == Mat.identity(24)


def test_empirical_type_matches_conjecture():
    for n in range(2, 7):
        for shape in strict_partitions(n):
            assert sn.empirical_type(shape) == sc.conjectured_type(shape), shape


def test_graded_rep_json_roundtrip():
    rep = sn.build_rep_plain(StrictPartition((2, 1)))
    obj = rep.to_json()
    assert obj["schema"] == "superspin/1"
    back = sn.GradedRep.from_json(obj)
    assert back.dim == rep.dim
    assert back.parity == rep.parity
    for name in rep.generator_names():
        assert back.matrices[name] == rep.matrices[name]
    assert sn.spectrum_of(back) == sn.spectrum_of(rep)


def test_size_limits():
    with pytest.raises(ValueError):
        sn.build_rep_plain(StrictPartition((8,)))


def test_pi_anticommutation_in_matrices():
    rep = sn.build_rep_plain(StrictPartition((3, 1)))
    pis = [rep.pi(k) for k in range(1, 5)]
    for i in range(4):
        for j in range(i + 1, 4):
            assert (pis[i] * pis[j] + pis[j] * pis[i]).is_zero()


def test_large_instance_smoke():
    import time

    start = time.time()
    rep = sn.build_rep_plain(StrictPartition((4, 2, 1)))
    report = sn.verify_relations(rep)
    assert all(r["status"] == "pass" for r in report)
    assert time.time() - start < 300


@pytest.mark.skipif(
    not __import__("os").environ.get("SUPERSPIN_RUN_SLOW"),
    reason="tensor rank-7 smoke test takes minutes; set SUPERSPIN_RUN_SLOW=1",
)
def test_large_instance_tensor_smoke():
    import time

    start = time.time()
    rep = sn.build_rep_clifford_tensor(StrictPartition((4, 2, 1)))
    report = sn.verify_relations(rep)
    assert all(r["status"] == "pass" for r in report)
    assert time.time() - start < 300
