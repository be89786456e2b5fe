from itertools import product

import pytest

from libs.lab_config import LabConfig
from libs.local_model_service import SemisimpleType, SimpleFactor, is_cyclic_type
from libs.quiver_service import PreconditionError, Quiver, double_quiver, sym_form
from libs.moduli_service import rep_dim_preprojective, surface_rep_dim
from libs.rep_lab_service import (
    ConstructionError,
    CyclicStatus,
    QuiverMatrixRep,
    RelationError,
    RepLabInterface,
    RepParseError,
    SurfaceMatrixRep,
    build_extended_dynkin_cyclic,
    build_quiver_simple,
    build_semisimple,
    build_surface_simple,
    build_two_sided_point,
    check_preprojective,
    check_surface,
    cyclic_span,
    end_dim,
    expected_euler_characteristic,
    expected_tangent_dim,
    ext_profile,
    format_rep,
    fox_jacobian,
    has_cyclic_vector,
    hom_dim,
    is_simple,
    is_two_sided_point,
    lift_quiver_rep,
    load_rep,
    parse_rep,
    random_quiver_rep,
    simplicity_certificate,
    solve_commutator_equation,
    tangent_dim,
)
from libs.rep_lab_service import linalg
from libs.rep_lab_service.linalg import RationalSampler, SpanBuilder

from .conftest import loop_quiver

CONFIG = LabConfig(seed=11, trials=20)


def identity_rep(genus: int, n: int) -> SurfaceMatrixRep:
    return SurfaceMatrixRep(genus, [linalg.identity(n)] * (2 * genus))


def zero_rep(quiver: Quiver, alpha) -> QuiverMatrixRep:
    return QuiverMatrixRep(double_quiver(quiver), alpha, {})


@pytest.fixture(scope="module")
def simple_g2_n2() -> SurfaceMatrixRep:
    return build_surface_simple(2, 2, config=CONFIG)


def assert_identities(rep) -> None:
    end = end_dim(rep)
    assert tangent_dim(rep) == expected_tangent_dim(rep, end)
    profile = ext_profile(rep)
    assert profile.euler_characteristic == expected_euler_characteristic(rep)


class TestLinalg:
    def test_scalars(self):
        assert linalg.qq("3/6") == linalg.qq("1/2")
        assert linalg.format_scalar(linalg.qq("-4/2")) == "-2"
        with pytest.raises(ZeroDivisionError):
            linalg.qq("1/0")

    def test_rank_and_nullspace(self):
        mat = linalg.matrix([[1, 2], [2, 4]])
        assert linalg.rank(mat) == 1
        [kernel] = linalg.nullspace(mat)
        assert linalg.apply(mat, kernel) == [linalg.qq(0), linalg.qq(0)]
        assert linalg.rank(linalg.zeros(4, 0)) == 0

    def test_span_builder(self):
        span = SpanBuilder(3)
        assert span.add([linalg.qq(1), linalg.qq(1), linalg.qq(0)])
        assert not span.add([linalg.qq(2), linalg.qq(2), linalg.qq(0)])
        assert span.contains([linalg.qq(-1), linalg.qq(-1), linalg.qq(0)])
        assert len(span) == 1 and not span.is_full

    def test_sampler_is_seeded(self):
        assert RationalSampler(5).vector(6) == RationalSampler(5).vector(6)
        assert all(x != 0 for x in (RationalSampler(3, 2).scalar(nonzero=True) for _ in range(20)))

    def test_sampler_without_invertible_draw(self, monkeypatch):
        monkeypatch.setattr(linalg, "is_invertible", lambda mat: False)
        with pytest.raises(ConstructionError):
            RationalSampler(1).invertible(2, attempts=3)


class TestRelations:
    def test_zero_and_lifted_reps_satisfy_relation(self, twoloop, dtilde4):
        assert check_preprojective(zero_rep(twoloop, (2,)))
        lifted = lift_quiver_rep(dtilde4, (2, 1, 1, 1, 1), {"a1": [[1], [2]], "a2": [[0], [1]]})
        assert check_preprojective(lifted)

    def test_non_commuting_loop(self, fixtures_dir):
        rep = load_rep(fixtures_dir / "jordan_noncommuting.rep")
        assert not check_preprojective(rep)
        with pytest.raises(RelationError):
            tangent_dim(rep)

    def test_surface_identity_and_non_commuting(self, fixtures_dir):
        assert check_surface(identity_rep(3, 2))
        assert not check_surface(load_rep(fixtures_dir / "surface_noncommuting.rep"))

    def test_singular_generator_rejected(self):
        with pytest.raises(PreconditionError):
            SurfaceMatrixRep(1, [linalg.identity(2), linalg.zeros(2)])

    def test_lift_rejects_double(self, twoloop):
        with pytest.raises(PreconditionError):
            lift_quiver_rep(double_quiver(twoloop), (1,), {})


class TestEndAndHom:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_identity_rep(self, n):
        assert end_dim(identity_rep(2, n)) == n * n

    def test_simple_and_double(self, simple_g2_n2):
        assert end_dim(simple_g2_n2) == 1
        assert end_dim(build_semisimple([(simple_g2_n2, 2)])) == 4

    def test_hom_between_algebras_rejected(self, simple_g2_n2):
        with pytest.raises(PreconditionError):
            hom_dim(simple_g2_n2, identity_rep(3, 2))

    def test_hom_across_dimension_vectors(self, dtilde4):
        double = double_quiver(dtilde4)
        centre = QuiverMatrixRep(double, (1, 0, 0, 0, 0), {})
        rep, _ = build_extended_dynkin_cyclic()
        assert hom_dim(centre, rep) == 2
        assert hom_dim(rep, centre) == 1


class TestTangent:
    def test_zero_rep(self, twoloop):
        rep = zero_rep(twoloop, (2,))
        assert tangent_dim(rep) == 16
        profile = ext_profile(rep)
        assert (profile.h0, profile.h1, profile.h2, profile.tangent_dim) == (4, 16, 4, 16)
        assert profile.euler_characteristic == sym_form(twoloop, (2,), (2,))

    @pytest.mark.parametrize("fixture, alpha", [("a2", (1, 2)), ("dtilde4", (2, 1, 1, 1, 1)), ("atilde1", (2, 1))])
    def test_zero_rep_counts_double_arrows(self, request, fixture, alpha):
        quiver = request.getfixturevalue(fixture)
        expected = 2 * sum(alpha[quiver.index_of(a.tail)] * alpha[quiver.index_of(a.head)] for a in quiver.arrows)
        assert tangent_dim(zero_rep(quiver, alpha)) == expected

    @pytest.mark.parametrize("genus, n", [(1, 2), (2, 1), (2, 3)])
    def test_identity_surface(self, genus, n):
        assert tangent_dim(identity_rep(genus, n)) == 2 * genus * n * n

    def test_identity_profile(self):
        profile = ext_profile(identity_rep(2, 1))
        assert (profile.h0, profile.h1, profile.h2, profile.tangent_dim) == (1, 4, 1, 4)

    def test_simple_surface(self, simple_g2_n2):
        assert tangent_dim(simple_g2_n2) == 13
        profile = ext_profile(simple_g2_n2)
        assert (profile.h0, profile.h1, profile.h2, profile.tangent_dim) == (1, 10, 1, 13)
        assert profile.euler_characteristic == -8

    def test_simple_genus_three(self):
        rep = build_surface_simple(3, 2, config=CONFIG)
        assert tangent_dim(rep) == 21

    @pytest.mark.parametrize("genus, n, expected", [(2, 2, 14), (3, 3, 48)])
    def test_two_sided_points(self, genus, n, expected):
        rep, _ = build_two_sided_point(genus, n)
        assert end_dim(rep) == n
        assert tangent_dim(rep) == expected

    @pytest.mark.parametrize("genus", [2, 3])
    @pytest.mark.parametrize("n", [2, 3])
    def test_tangent_jump(self, genus, n):
        simple = build_surface_simple(genus, n, config=CONFIG)
        point, _ = build_two_sided_point(genus, n)
        assert tangent_dim(point) - tangent_dim(simple) == n - 1
        assert tangent_dim(simple) == surface_rep_dim(genus, n)

    def test_fox_jacobian_shape(self, simple_g2_n2):
        assert fox_jacobian(simple_g2_n2).shape == (4, 16)
        assert linalg.is_zero(fox_jacobian(identity_rep(2, 2)))

    def test_quiver_simple_matches_rep_dim(self, twoloop):
        rep = build_quiver_simple(twoloop, (2,), config=CONFIG)
        assert end_dim(rep) == 1
        assert tangent_dim(rep) == rep_dim_preprojective(twoloop, (2,)) == 13

    def test_extended_dynkin_cyclic(self):
        rep, vector = build_extended_dynkin_cyclic()
        assert check_preprojective(rep)
        assert end_dim(rep) == 6
        assert tangent_dim(rep) == 14
        assert cyclic_span(rep, vector)[0] == rep.size


ZERO_CASES = (
    [("twoloop", (n,)) for n in range(1, 6)]
    + [("threeloop", (n,)) for n in range(1, 5)]
    + [("jordan", (n,)) for n in range(1, 6)]
    + [("a2", alpha) for alpha in product(range(1, 4), repeat=2)]
    + [("atilde1", alpha) for alpha in product(range(1, 4), repeat=2)]
    + [("atilde2_cycle", alpha) for alpha in product(range(1, 3), repeat=3)]
    + [("dtilde4", alpha) for alpha in product(range(1, 3), repeat=5)]
)

SIMPLE_VECTORS = [("twoloop", (1,)), ("twoloop", (2,)), ("threeloop", (2,)), ("atilde1", (1, 1))]


def conjugate(rep: QuiverMatrixRep, sampler: RationalSampler) -> QuiverMatrixRep:
    """Isomorphic copy: base change by a random invertible matrix at every vertex"""
    changes = {v: sampler.invertible(rep.dim_at(v)) for v in rep.quiver.vertices}
    blocks = {}
    for arrow in rep.quiver.arrows:
        block = linalg.matrix(rep.blocks[arrow.label])
        moved = changes[arrow.head] * block * linalg.inverse(changes[arrow.tail])
        blocks[arrow.label] = linalg.entries(moved)
    return QuiverMatrixRep(rep.quiver, rep.alpha, blocks)


class TestTangentIdentities:
    @pytest.mark.parametrize("seed", range(10))
    @pytest.mark.parametrize(
        "fixture, alpha",
        [("twoloop", (2,)), ("a2", (1, 2)), ("atilde1", (2, 2)), ("dtilde4", (2, 1, 1, 1, 1)), ("jordan", (3,))],
    )
    def test_lifted_random_reps(self, request, seed, fixture, alpha):
        quiver = request.getfixturevalue(fixture)
        assert_identities(random_quiver_rep(quiver, alpha, seed=seed, config=CONFIG))

    @pytest.mark.parametrize("fixture, alpha", ZERO_CASES)
    def test_zero_reps(self, request, fixture, alpha):
        assert_identities(zero_rep(request.getfixturevalue(fixture), alpha))

    @pytest.mark.parametrize("seed", range(10))
    @pytest.mark.parametrize("fixture, alpha", SIMPLE_VECTORS)
    def test_quiver_simples(self, request, seed, fixture, alpha):
        simple = build_quiver_simple(request.getfixturevalue(fixture), alpha, seed=seed, config=CONFIG)
        assert end_dim(simple) == 1
        assert_identities(simple)

    @pytest.mark.parametrize("seed", range(8))
    @pytest.mark.parametrize("genus, n", [(2, 1), (2, 2), (3, 2)])
    def test_surface_simples(self, seed, genus, n):
        simple = build_surface_simple(genus, n, seed=seed, config=CONFIG)
        assert end_dim(simple) == 1
        assert_identities(simple)

    @pytest.mark.parametrize("seed", range(4))
    def test_semisimple_sums(self, twoloop, seed):
        simple = build_quiver_simple(twoloop, (1,), seed=seed, config=CONFIG)
        assert_identities(build_semisimple([(simple, 2)]))

    @pytest.mark.parametrize("genus", range(2, 12))
    @pytest.mark.parametrize("n", range(1, 6))
    def test_two_sided_points(self, genus, n):
        point, _ = build_two_sided_point(genus, n)
        assert end_dim(point) == n
        assert_identities(point)

    @pytest.mark.parametrize("genus, n", [(2, 1), (2, 2), (3, 2)])
    def test_surface_families(self, genus, n):
        simple = build_surface_simple(genus, n, config=CONFIG)
        for rep in (identity_rep(genus, n), build_semisimple([(simple, 2)])):
            assert_identities(rep)

    @pytest.mark.parametrize("seed", range(50))
    def test_extended_dynkin_conjugates(self, seed):
        rep, _ = build_extended_dynkin_cyclic()
        moved = conjugate(rep, RationalSampler(seed, CONFIG.rational_bound))
        assert check_preprojective(moved)
        assert end_dim(moved) == 6
        assert tangent_dim(moved) == 14
        assert_identities(moved)


class TestSimplicity:
    def test_one_dimensional(self):
        assert is_simple(identity_rep(2, 1))

    def test_identity_not_simple(self):
        certificate = simplicity_certificate(identity_rep(2, 2))
        assert not certificate.simple
        assert certificate.span_dim == 1

    def test_block_sum_not_simple(self, simple_g2_n2):
        assert is_simple(simple_g2_n2)
        assert not is_simple(build_semisimple([(simple_g2_n2, 2)]))


class TestCyclicity:
    def test_two_copies_of_a_plane(self, simple_g2_n2):
        double = build_semisimple([(simple_g2_n2, 2)])
        assert double.semisimple_parts == ((2, 2),)
        result = has_cyclic_vector(double, config=CONFIG)
        assert result.status == CyclicStatus.YES
        assert result.rounds <= double.size

    def test_three_copies_of_a_plane(self, simple_g2_n2):
        result = has_cyclic_vector(build_semisimple([(simple_g2_n2, 3)]), config=CONFIG)
        assert result.status == CyclicStatus.NO

    def test_simple_basis_vector(self, simple_g2_n2):
        result = has_cyclic_vector(simple_g2_n2, config=CONFIG)
        assert result.status == CyclicStatus.YES
        assert result.vector == ("1", "0")

    def test_identity_not_found(self):
        result = has_cyclic_vector(identity_rep(2, 2), trials=5, seed=3)
        assert result.status == CyclicStatus.NOT_FOUND
        assert result.trials == 5 and result.seed == 3

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("copies", [1, 2, 3, 4])
    def test_multiplicity_bound_matches_search(self, n, copies):
        simple = build_surface_simple(2, n, config=CONFIG)
        rep = build_semisimple([(simple, copies)])
        status = has_cyclic_vector(rep, config=CONFIG).status
        assert status != CyclicStatus.NOT_FOUND
        value = SemisimpleType(factors=(SimpleFactor(dim=(n,), multiplicity=copies),))
        assert is_cyclic_type(value) == (status == CyclicStatus.YES)

    def test_non_isomorphic_lines(self):
        first = build_surface_simple(2, 1, seed=1, config=CONFIG)
        second = build_surface_simple(2, 1, seed=2, config=CONFIG)
        assert hom_dim(first, second) == 0
        rep = build_semisimple([(first, 1), (second, 1)])
        assert rep.semisimple_parts == ((1, 1), (1, 1))
        assert has_cyclic_vector(rep, config=CONFIG).status == CyclicStatus.YES
        assert is_cyclic_type(SemisimpleType(factors=(SimpleFactor(dim=(1,), multiplicity=2, distinct=True),)))

    def test_two_sided_points(self, simple_g2_n2):
        rep, vector = build_two_sided_point(2, 2)
        assert is_two_sided_point(rep, vector)
        assert not is_two_sided_point(simple_g2_n2, [1, 0])
        line, start = build_two_sided_point(2, 1)
        assert is_two_sided_point(line, start)

    def test_two_sided_needs_generator(self):
        rep, _ = build_two_sided_point(2, 2)
        with pytest.raises(PreconditionError):
            is_two_sided_point(rep, [0, 1])


class TestBuilders:
    def test_commuting_solution(self):
        sampler = RationalSampler(4)
        x = sampler.invertible(2)
        y = solve_commutator_equation(x, linalg.identity(2), sampler)
        assert y is not None
        assert linalg.commutator(x, y) == linalg.identity(2)

    def test_identity_left_side(self):
        d = linalg.matrix([[2, 0], [0, "1/2"]])
        assert solve_commutator_equation(linalg.identity(2), d, RationalSampler(4)) is None

    def test_returned_solution_verifies(self):
        x = linalg.matrix([[1, 0], [0, 2]])
        d = linalg.matrix([[0, 1], [1, 0]])
        y = solve_commutator_equation(x, d, RationalSampler(9))
        if y is not None:
            assert linalg.commutator(x, y) == d

    def test_line_simple(self):
        rep = build_surface_simple(2, 1, config=CONFIG)
        assert rep.size == 1 and is_simple(rep)

    def test_surface_simple_is_reproducible(self):
        first = build_surface_simple(2, 2, config=CONFIG)
        second = build_surface_simple(2, 2, config=CONFIG)
        assert first.matrices == second.matrices
        assert first.provenance.seed == CONFIG.seed

    def test_genus_one_rejected(self):
        with pytest.raises(PreconditionError):
            build_surface_simple(1, 2, config=CONFIG)

    def test_retry_budget(self, monkeypatch):
        monkeypatch.setattr("libs.rep_lab_service.builders.is_simple", lambda rep: False)
        with pytest.raises(ConstructionError):
            build_quiver_simple(loop_quiver(2), (2,), config=LabConfig(quiver_retries=2))
        with pytest.raises(ConstructionError):
            build_surface_simple(2, 2, config=LabConfig(surface_retries=2))

    def test_quiver_simple_needs_simples(self, jordan):
        with pytest.raises(PreconditionError):
            build_quiver_simple(jordan, (2,), config=CONFIG)


class TestRepFiles:
    def test_zero_fixture(self, fixtures_dir):
        rep = load_rep(fixtures_dir / "twoloop_zero.rep")
        assert rep.alpha == (2,)
        assert RepLabInterface(CONFIG).profile(rep).h1 == 16

    def test_identity_fixture(self, fixtures_dir):
        rep = load_rep(fixtures_dir / "surface_identity.rep")
        assert rep.genus == 2 and rep.size == 1
        assert RepLabInterface(CONFIG).verify(rep)

    def test_dtilde4_fixture(self, fixtures_dir):
        rep = load_rep(fixtures_dir / "dtilde4_cyclic.rep")
        lab = RepLabInterface(CONFIG)
        assert lab.end_dim(rep) == 6
        assert lab.cyclic(rep).status == CyclicStatus.YES

    def test_surface_round_trip(self, simple_g2_n2):
        text = format_rep(simple_g2_n2)
        parsed = parse_rep(text)
        assert parsed.matrices == simple_g2_n2.matrices
        assert format_rep(parsed) == text

    def test_quiver_round_trip(self, tmp_path, fixtures_dir):
        (tmp_path / "dtilde4.quiver").write_text((fixtures_dir / "dtilde4.quiver").read_text())
        rep, _ = build_extended_dynkin_cyclic()
        text = format_rep(rep, quiver_path="dtilde4.quiver")
        parsed = parse_rep(text, base_dir=tmp_path)
        assert parsed.blocks == rep.blocks
        assert format_rep(parsed) == text

    def test_quiver_rep_needs_path(self):
        rep, _ = build_extended_dynkin_cyclic()
        with pytest.raises(ValueError):
            format_rep(rep)

    @pytest.mark.parametrize(
        "text, line",
        [
            ("surface g=1 n=2\nmatrix X1\n1 0\n", 2),
            ("surface g=1 n=1\nmatrix X1\n1\nmatrix Z1\n1\n", 4),
            ("surface g=1 n=1\nmatrix X1\n1/0\nmatrix Y1\n1\n", 3),
            ("surface g=1 n=2\nmatrix X1\n1 0 0\n0 1\nmatrix Y1\n1 0\n0 1\n", 3),
            ("torus\n", 1),
        ],
    )
    def test_parse_errors(self, text, line):
        with pytest.raises(RepParseError) as info:
            parse_rep(text)
        assert info.value.line_number == line

    def test_missing_generator(self):
        with pytest.raises(RepParseError):
            parse_rep("surface g=1 n=1\nmatrix X1\n1\n")
