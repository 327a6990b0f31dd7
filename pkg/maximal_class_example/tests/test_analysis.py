"""
Tests for fingerprints, s-bucket classification, the P1 predicate and
capability reports.
"""

import pytest
from sympy import QQ

from superschur.analysis import (
    MATCH_DISCLAIMER,
    P1_CANDIDATES,
    Fingerprint,
    capability_report,
    classify_maximal_class,
    fingerprint,
    fingerprint_changes,
    proposition_p1_predicate,
)
from superschur.catalog import abelian
from superschur.superalg import (
    LieSuperalgebra,
    NotCentralError,
    NotGradedError,
    PreconditionError,
    direct_sum,
)


def filiform_1_5() -> LieSuperalgebra:
    """(1|5) of maximal class: [a, α_k] = α_{k+1}."""
    odd = [f"α{k}" for k in range(1, 6)]
    table = {("a", odd[k]): {odd[k + 1]: 1} for k in range(4)}
    return LieSuperalgebra.from_table("F(1|5)", ["a"], odd, table)


class TestFingerprint:
    """Tests for the basis-change invariants."""

    def test_e22(self, catalog):
        assert fingerprint(catalog.build("E^{22}")) == Fingerprint(
            dims=(1, 4),
            derived_dims=(0, 3),
            nilpotency_class=4,
            center_dims=(0, 1),
            multiplier_dims=(2, 1),
            trivial_ls=True,
        )

    def test_not_nilpotent_class(self, catalog):
        assert fingerprint(catalog.build("L_{3,1}^{(1)}")).nilpotency_class is None

    @pytest.mark.parametrize("key", ["E^{22}", "(D^{15}+A_{1,1})^2", "L_{2,2}^{(11)}"])
    def test_invariant_under_basis_change(self, catalog, rng, key):
        assert fingerprint_changes(catalog.build(key), rng, trials=3) == []


class TestClassification:
    """Tests for s-bucket placement."""

    def test_e22_diverges(self, catalog):
        """E^{22} computes s = 8 while listed under s = 5."""
        result = classify_maximal_class(catalog.build("E^{22}"), key="E^{22}", catalog=catalog)
        assert result.s == 8
        assert result.bucket_members == ["(D^{15}+A_{1,1})^2", "(D^{15}+A_{1,1})^4"]
        assert result.fingerprint_matches == []
        assert len(result.notes) == 1
        assert "diverges" in result.notes[0]

    def test_l12_3_matches_itself(self, catalog):
        result = classify_maximal_class(catalog.build("L_{1,2}^{(3)}"), key="L_{1,2}^{(3)}", catalog=catalog)
        assert result.s == 2
        assert result.fingerprint_matches == ["L_{1,2}^{(3)}"]
        assert result.notes == []
        assert result.disclaimer == MATCH_DISCLAIMER

    def test_basis_change_keeps_placement(self, catalog, rng):
        from superschur.superalg import random_basis_change

        L = random_basis_change(catalog.build("(D^{15}+A_{1,1})^4"), rng)
        result = classify_maximal_class(L, catalog=catalog)
        assert result.s == 8
        assert "(D^{15}+A_{1,1})^4" in result.fingerprint_matches

    def test_outside_published_range(self, catalog):
        """H(1,0) has s = 0, below every bucket."""
        result = classify_maximal_class(catalog.build("H(1,0)"), catalog=catalog)
        assert result.s == 0
        assert result.bucket_members == []
        assert "outside" in result.notes[0]

    @pytest.mark.parametrize(
        "build,message",
        [
            (lambda c: abelian(2, 1), "non-abelian required"),
            (lambda c: c.build("L_{3,1}^{(1)}"), "not nilpotent"),
            (lambda c: c.build("H(0,1)"), "not maximal class"),
            (lambda c: filiform_1_5(), "m\\+n <= 5"),
            (
                lambda c: LieSuperalgebra.from_table("bad", ["a"], ["α", "β"], {("α", "β"): {"α": 1}}),
                "axioms violated",
            ),
        ],
    )
    def test_preconditions(self, catalog, build, message):
        with pytest.raises(PreconditionError, match=message):
            classify_maximal_class(build(catalog), catalog=catalog)


class TestP1Predicate:
    """dim L^2 = dim M(L) = m+n-2 with m+n <= 5."""

    @pytest.mark.parametrize("key", list(P1_CANDIDATES))
    def test_claimed_but_not_computed(self, catalog, key):
        entry = catalog.entry(key)
        verdict = proposition_p1_predicate(catalog.build(key), entry.claimed_multiplier_dim)
        assert verdict.claimed is True
        assert verdict.computed is False
        assert verdict.derived_dim == entry.claimed_multiplier_dim
        assert verdict.candidates == P1_CANDIDATES

    def test_without_claim(self, catalog):
        verdict = proposition_p1_predicate(catalog.build("H(1,0)"))
        assert verdict.claimed is None
        assert not verdict.computed
        assert verdict.candidates == ()

    def test_e22_satisfies_computed_predicate(self, catalog):
        """E^{22} has dim L^2 = dim M = 3 although it is not a listed candidate."""
        verdict = proposition_p1_predicate(catalog.build("E^{22}"), 6)
        assert verdict.computed is True
        assert verdict.claimed is False
        assert verdict.candidates == P1_CANDIDATES

    def test_not_nilpotent(self, catalog):
        verdict = proposition_p1_predicate(catalog.build("L_{3,1}^{(1)}"))
        assert not verdict.computed
        assert verdict.note == "not nilpotent"


class TestCapability:
    """Tests for epicenter evidence on central lines."""

    def test_heisenberg_exhaustive(self, catalog):
        """Z(H(1,0)) = <e3> is one-dimensional and its map is not injective."""
        report = capability_report(catalog.build("H(1,0)"))
        assert report.summary() == "no obstruction found (exhaustive)"
        (candidate,) = report.candidates
        assert candidate.label == "e3"
        assert candidate.parity == "even"
        assert not candidate.in_epicenter
        assert (candidate.source_dim, candidate.target_dim, candidate.kernel_dim) == (2, 1, 2)
        assert candidate.intersection_dim == 1
        assert candidate.dimension_law_holds

    def test_l22_9_not_capable(self, catalog):
        """<a> lies in the epicenter of L_{2,2}^{(9)}."""
        report = capability_report(catalog.build("L_{2,2}^{(9)}"))
        assert report.conclusion == "not capable"
        assert report.summary() == "not capable"
        assert report.center_dims == (2, 0)
        assert not report.exhaustive
        assert any(c.in_epicenter for c in report.candidates)

    def test_over_tested_candidates(self, catalog):
        """A two-dimensional center leaves the result non-exhaustive."""
        L = direct_sum(abelian(1, 0), catalog.build("H(1,0)"))
        report = capability_report(L)
        assert report.center_dims == (2, 0)
        assert report.summary() == "no obstruction found (over tested candidates)"

    def test_extra_candidate_deduplicated(self, catalog):
        H = catalog.build("H(1,0)")
        report = capability_report(H, extra_candidates=[H.basis_vector(2)])
        assert len(report.candidates) == 1

    def test_without_center(self, catalog):
        H = catalog.build("H(1,0)")
        report = capability_report(H, include_center=False)
        assert report.conclusion == "inconclusive"
        assert report.candidates == []
        report = capability_report(H, extra_candidates=[H.basis_vector(2)], include_center=False)
        assert report.summary() == "no obstruction found (over tested candidates)"

    def test_non_central_candidate(self, catalog):
        H = catalog.build("H(1,0)")
        with pytest.raises(NotCentralError, match=r"\[e1,e2\] = e3"):
            capability_report(H, extra_candidates=[H.basis_vector(0)])

    def test_zero_candidate(self, catalog):
        H = catalog.build("H(1,0)")
        with pytest.raises(PreconditionError, match="zero"):
            capability_report(H, extra_candidates=[(QQ(0), QQ(0), QQ(0))])

    def test_inhomogeneous_candidate(self, catalog):
        L = catalog.build("H(0,1)")
        with pytest.raises(NotGradedError, match="not homogeneous"):
            capability_report(L, extra_candidates=[(QQ(1), QQ(1))])
