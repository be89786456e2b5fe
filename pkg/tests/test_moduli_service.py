from itertools import product

import pytest

from libs.lab_config import LabConfig
from libs.moduli_service import (
    AlgebraKind,
    ReasonTag,
    Verdict,
    admits_simples,
    bundle_identity_holds,
    extended_dynkin_lower_bound,
    hilb_decomposition,
    hilb_dim_preprojective,
    hilb_smooth_preprojective,
    quotient_dim_preprojective,
    remark_quotient_bound,
    rep_dim_preprojective,
    report_preprojective,
    report_surface,
    surface_hilb_dim,
    surface_hilb_smooth,
    surface_rep_dim,
    violating_decomposition,
)
from libs.quiver_service import PreconditionError, classify, reverse_arrow, square_sum

from .conftest import loop_quiver
from .oracles import naive_admits_simples, reflection_orbit_roots


class TestSimplesCriterion:
    def test_few_loops_only_dimension_one(self):
        for loops in (0, 1):
            quiver = loop_quiver(loops)
            assert admits_simples(quiver, (1,))
            assert not any(admits_simples(quiver, (n,)) for n in range(2, 7))

    def test_two_or_more_loops_every_dimension(self):
        for loops in (2, 3):
            quiver = loop_quiver(loops)
            assert all(admits_simples(quiver, (n,)) for n in range(1, 7))

    @pytest.mark.parametrize("fixture, delta", [("atilde1", (1, 1)), ("dtilde4", (2, 1, 1, 1, 1))])
    def test_extended_dynkin_delta_but_not_twice(self, request, fixture, delta):
        quiver = request.getfixturevalue(fixture)
        assert admits_simples(quiver, delta)
        double = tuple(2 * x for x in delta)
        assert not admits_simples(quiver, double)
        certificate = violating_decomposition(quiver, double)
        assert certificate is not None
        assert certificate.p_total >= certificate.p_alpha
        assert tuple(map(sum, zip(*certificate.parts))) == double

    def test_dynkin_coordinate_vectors_only(self, a2):
        assert admits_simples(a2, (1, 0))
        assert admits_simples(a2, (0, 1))
        assert not admits_simples(a2, (1, 1))

    def test_disconnected_support(self, dtilde4):
        assert not admits_simples(dtilde4, (0, 1, 1, 0, 0))

    def test_zero_vector_rejected(self, a2):
        with pytest.raises(PreconditionError):
            admits_simples(a2, (0, 0))

    @pytest.mark.parametrize("fixture, bound", [("a2", 4), ("atilde1", 4), ("twoloop", 8), ("jordan", 8)])
    def test_matches_naive_decomposition_oracle(self, request, fixture, bound):
        quiver = request.getfixturevalue(fixture)
        box = (bound,) * quiver.vertex_count
        roots = reflection_orbit_roots(quiver, box)
        for alpha in product(range(bound + 1), repeat=quiver.vertex_count):
            if any(alpha) and sum(alpha) <= 8:
                assert admits_simples(quiver, alpha) == naive_admits_simples(quiver, alpha, roots), alpha


class TestPreprojectiveDimensions:
    def test_two_loop_values(self, twoloop):
        assert rep_dim_preprojective(twoloop, (2,)) == 13
        assert rep_dim_preprojective(twoloop, (1,)) == 4
        assert quotient_dim_preprojective(twoloop, (1,)) == 4
        assert hilb_dim_preprojective(twoloop, (2,)) == 11
        assert hilb_dim_preprojective(twoloop, (1,)) == 4

    def test_extended_dynkin_quotient(self, dtilde4):
        assert quotient_dim_preprojective(dtilde4, (2, 1, 1, 1, 1)) == 2

    def test_coordinate_vector(self, a2, point):
        assert rep_dim_preprojective(a2, (1, 0)) == 0
        assert quotient_dim_preprojective(a2, (0, 1)) == 0
        assert hilb_dim_preprojective(point, (1,)) == 0

    def test_without_simples_out_of_scope(self, jordan):
        assert rep_dim_preprojective(jordan, (2,)) is None
        assert hilb_dim_preprojective(jordan, (2,)) is None
        verdict = hilb_smooth_preprojective(jordan, (2,))
        assert verdict.verdict == Verdict.OUT_OF_SCOPE
        assert verdict.reason == ReasonTag.NO_SIMPLES

    @pytest.mark.parametrize(
        "fixture, alpha, verdict",
        [
            ("threeloop", (1,), Verdict.SMOOTH),
            ("twoloop", (1,), Verdict.SMOOTH),
            ("twoloop", (2,), Verdict.SINGULAR),
            ("twoloop", (3,), Verdict.SINGULAR),
            ("dtilde4", (2, 1, 1, 1, 1), Verdict.SINGULAR),
        ],
    )
    def test_hilb_smooth(self, request, fixture, alpha, verdict):
        quiver = request.getfixturevalue(fixture)
        result = hilb_smooth_preprojective(quiver, alpha)
        assert result.verdict == verdict
        assert result.reason == ReasonTag.PREPROJECTIVE_CRITERION

    @pytest.mark.parametrize("loops", [2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_table_bundle_identity(self, loops, n):
        quiver = loop_quiver(loops)
        alpha = (n,)
        expected = 1 + 2 * loops * n * n + n - 2 * n * n
        assert hilb_dim_preprojective(quiver, alpha) == expected
        assert expected == rep_dim_preprojective(quiver, alpha) + n - square_sum(alpha)

    def test_dtilde4_table_row(self, dtilde4):
        report = report_preprojective(dtilde4, (2, 1, 1, 1, 1))
        assert report.kind == AlgebraKind.PREPROJECTIVE
        assert report.p_value == 1
        assert report.rep_dim == 2 + 8 - 1
        assert report.hilb_dim == report.rep_dim + 6 - 8
        assert bundle_identity_holds(report)


class TestSurfaceDimensions:
    @pytest.mark.parametrize("genus, n, expected", [(2, 3, 28), (1, 2, 6), (2, 1, 4)])
    def test_rep_dim(self, genus, n, expected):
        assert surface_rep_dim(genus, n) == expected

    @pytest.mark.parametrize("genus, n, expected", [(2, 3, 22), (2, 1, 4), (3, 2, 19)])
    def test_hilb_dim(self, genus, n, expected):
        assert surface_hilb_dim(genus, n) == expected

    @pytest.mark.parametrize("genus", [2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_table(self, genus, n):
        assert surface_hilb_dim(genus, n) == (2 * genus - 2) * n * n + n + 1
        expected = Verdict.SMOOTH if n == 1 else Verdict.SINGULAR
        assert surface_hilb_smooth(genus, n).verdict == expected
        assert bundle_identity_holds(report_surface(genus, n))

    def test_large_case_singular(self):
        assert surface_hilb_smooth(5, 7).verdict == Verdict.SINGULAR

    def test_genus_one_out_of_scope(self):
        assert surface_hilb_dim(1, 3) is None
        verdict = surface_hilb_smooth(1, 3)
        assert verdict.verdict == Verdict.OUT_OF_SCOPE
        assert verdict.reason == ReasonTag.GENUS_OUT_OF_RANGE

    @pytest.mark.parametrize("genus, n", [(0, 1), (2, 0)])
    def test_invalid_arguments(self, genus, n):
        with pytest.raises(PreconditionError):
            surface_rep_dim(genus, n)


class TestDecompositionAndBounds:
    def test_hilb_decomposition_lists_every_vector(self, atilde1):
        reports = hilb_decomposition(atilde1, 2)
        assert [r.dim_vector for r in reports] == [(0, 2), (1, 1), (2, 0)]
        assert [r.admits_simples for r in reports] == [False, True, False]

    def test_quotient_bound_remark(self, twoloop, threeloop, dtilde4):
        for quiver in (twoloop, threeloop):
            assert all(remark_quotient_bound(quiver, (n,)) for n in range(1, 5))
        assert remark_quotient_bound(dtilde4, (2, 1, 1, 1, 1))

    def test_loop_witness(self, twoloop):
        witness = extended_dynkin_lower_bound(twoloop, (2,))
        assert witness.type_name == "~A_0"
        assert witness.delta == (1,)
        assert witness.subquiver.arrow_count == 1

    def test_whole_dtilde4(self, dtilde4):
        witness = extended_dynkin_lower_bound(dtilde4, (2, 1, 1, 1, 1))
        assert witness.type_name == "~D_4"
        assert witness.delta_in(dtilde4) == (2, 1, 1, 1, 1)

    def test_kronecker(self, atilde1):
        witness = extended_dynkin_lower_bound(atilde1, (1, 1))
        assert witness.type_name == "~A_1"

    def test_dynkin_has_none(self, a2):
        assert extended_dynkin_lower_bound(a2, (1, 1)) is None
        assert extended_dynkin_lower_bound(a2, (1, 0)) is None

    def test_arrow_bound_skips_large_subquivers(self, atilde1):
        assert extended_dynkin_lower_bound(atilde1, (1, 1), config=LabConfig(max_subquiver_arrows=1)) is None



class TestOrientation:
    @pytest.mark.parametrize("fixture, label", [("dtilde4", "a1"), ("dtilde4", "a3"), ("atilde1", "b"), ("a2", "a")])
    def test_reversing_an_arrow_changes_nothing(self, request, fixture, label):
        quiver = request.getfixturevalue(fixture)
        reversed_quiver = reverse_arrow(quiver, label)
        assert reversed_quiver != quiver
        assert classify(reversed_quiver) == classify(quiver)
        for alpha in product(range(3), repeat=quiver.vertex_count):
            if not any(alpha):
                continue
            assert admits_simples(reversed_quiver, alpha) == admits_simples(quiver, alpha), alpha
            assert rep_dim_preprojective(reversed_quiver, alpha) == rep_dim_preprojective(quiver, alpha), alpha
            assert hilb_dim_preprojective(reversed_quiver, alpha) == hilb_dim_preprojective(quiver, alpha), alpha
            assert quotient_dim_preprojective(reversed_quiver, alpha) == quotient_dim_preprojective(quiver, alpha)
