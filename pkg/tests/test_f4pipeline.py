import json

import pytest

from chowring import correspondence as corr
from chowring import f4pipeline as pipe


def test_labeled_rings_dimensions(x1, x4):
    assert x1.dim == 15 and x4.dim == 15
    assert x1.labels is not None and x4.labels is not None
    assert x1.class_by_label("h1^0") == x1.unit_class
    assert x4.class_by_label("g1^15") == x4.point_class


def test_label_solve_is_stable(x1):
    from chowring import weyl
    frozen = json.loads(pipe._data_text("labels_p1.json"))
    for lab, word in frozen.items():
        assert weyl.serialize(x1.class_by_label(lab).rep) == word


def test_build_r(x1, x4):
    r = pipe.build_r(1)
    assert r.terms == {(x1.class_by_label("h1^4"), x4.unit_class): 1,
                       (x1.unit_class, x4.class_by_label("g1^4")): 1}
    r_minus = pipe.build_r(-1)
    assert r_minus.terms[(x1.unit_class, x4.class_by_label("g1^4"))] == -1
    with pytest.raises(ValueError):
        pipe.build_r(2)


@pytest.mark.parametrize("eps", [1, -1])
def test_rho_congruences_match_fixtures(eps):
    fixtures = pipe.fixture_congruence("rho", eps)
    for i in range(8):
        assert corr.mod_reduce(pipe.build_rho(i, eps), 3) == fixtures[i]


@pytest.mark.parametrize("eps", [1, -1])
def test_rho_morphism_degree(eps):
    for i in range(8):
        assert pipe.build_rho(i, eps).total_codims() == (15,)


def test_idempotent_candidates_equal_for_both_eps():
    assert pipe.compute_idempotents(1) == pipe.compute_idempotents(-1)


def test_displayed_cycles_idempotent_orthogonal_complete(x1, x4):
    p, q = pipe.fixture_idempotents()
    for family, ring in ((p, x1), (q, x4)):
        cycles = list(family) + [corr.transpose(c) for c in family]
        for a in range(8):
            assert corr.is_idempotent(cycles[a], 0)
            for b in range(8):
                if a != b:
                    assert corr.compose(cycles[a], cycles[b]).is_zero()
        total = None
        for c in family:
            piece = c + corr.transpose(c)
            total = piece if total is None else total + piece
        assert total == corr.diagonal(ring)


def test_twist_support_ranks():
    p, q = pipe.fixture_idempotents()
    for i in range(4):
        assert pipe._support_ranks(p[i]) == {i: 1, i + 4: 1, i + 8: 1}
        assert pipe._support_ranks(q[i]) == {i: 1, i + 4: 1, i + 8: 1}
        assert pipe._support_ranks(corr.transpose(p[i])) == \
            {7 - i: 1, 11 - i: 1, 15 - i: 1}


def test_total_realization_rank_is_24(x1):
    p = pipe.fixture_idempotents()[0]
    total = 0
    for i in range(4):
        total += sum(pipe._support_ranks(p[i]).values())
        total += sum(pipe._support_ranks(corr.transpose(p[i])).values())
    assert total == 24


@pytest.mark.parametrize("eps", [1, -1])
def test_J_shape_and_inverse(eps, x1, x4):
    J = pipe.build_J(eps)
    assert len(J.terms) == 24
    assert all(abs(v) == 1 for v in J.terms.values())
    for (f, g), v in J.terms.items():
        fi, fs = pipe._parse_label(x1.label_of(f))
        gi, gs = pipe._parse_label(x4.label_of(g))
        assert fi == gi and fs + gs == 15
    Jt = corr.transpose(J)
    assert corr.congruent(corr.compose(Jt, J), corr.diagonal(x1), 3)
    assert corr.congruent(corr.compose(J, Jt), corr.diagonal(x4), 3)


def test_J_sign_pattern_symmetric(x1, x4):
    """The sign at (i, s) equals the sign at (i, 15-s); forced by J^t o J."""
    for eps in (1, -1):
        J = pipe.build_J(eps)
        signs = {}
        for (f, g), v in J.terms.items():
            fi, fs = pipe._parse_label(x1.label_of(f))
            signs[(fi, fs)] = v
        for (i, s), v in signs.items():
            assert signs[(i, 15 - s)] == v


def test_end_basis_fixed_pointwise(x1):
    """The three displayed basis cycles are fixed by p0 o (.) o p0."""
    p0 = pipe.fixture_idempotents()[0][0]
    lab = x1.class_by_label
    from chowring.correspondence import Correspondence
    basis = [
        Correspondence.from_pairs(x1, x1, [(lab("h1^0"), lab("h1^15"), 1)]),
        Correspondence.from_pairs(x1, x1, [(lab("h1^4"), lab("h1^11"), 1),
                                           (lab("h1^4"), lab("h2^11"), 1)]),
        Correspondence.from_pairs(x1, x1, [(lab("h1^8"), lab("h1^7"), 1),
                                           (lab("h1^8"), lab("h2^7"), 1)]),
    ]
    for alpha in basis:
        assert corr.compose(p0, corr.compose(alpha, p0)) == alpha
    # off-degree compositions of basis elements vanish
    assert corr.compose(basis[0], basis[2]).is_zero()
    assert p0 == basis[0] + basis[1] + basis[2]


def test_full_report_passes_and_is_deterministic():
    report1 = pipe.run_f4_verification("both")
    assert report1.passed
    assert len(report1.checks) == 21
    report2 = pipe.run_f4_verification("both")
    assert report1.to_json() == report2.to_json()
    assert report1.to_text() == report2.to_text()


def test_single_eps_report():
    report = pipe.run_f4_verification(1)
    assert report.passed
    names = [c.name for c in report.checks]
    assert "idempotent-eps-independence" not in names


def test_report_failure_carries_witness(x1):
    result = pipe.CheckResult("demo", False, "broken", witness={"got": "x"})
    report = pipe.VerificationReport([result])
    assert not report.passed
    assert "witness" in report.to_text()
    payload = json.loads(report.to_json())
    assert payload["checks"][0]["witness"] == {"got": "x"}
