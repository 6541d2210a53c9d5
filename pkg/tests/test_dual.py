"""Tests for carriers, dual structure constants and gradings."""

import random
from dataclasses import replace

import pytest

from chainr.builders import build_ech, build_fch, build_rch, build_rJ, build_rotation
from chainr.dual import (
    BLUE,
    RED,
    AdaptedBasis,
    ChainSpec,
    abelian_ideal_ok,
    analyze,
    assign_gradings,
    attachable_set,
    carrier,
    dual_jacobi_violations,
    dual_structure,
    grading_consistency,
    primitive_set,
    quasiprimitive_set,
    theta_orthogonal_complement,
    trace_orthogonal_complement,
)
from chainr.exceptions import InvalidInputError, UnrecognizedStructureError
from chainr.lie import RootVector, cartan_H, matrix_unit, root_eval, theta
from chainr.tensor import BiTensor, lie_tensor


class TestCarrier:
    """Carrier subalgebras of the chain tensors."""

    def test_rotated_chain_sl3(self):
        c = carrier(build_rch(3))
        assert c.dim == 4
        assert not c.contains_borel
        assert not c.contains_cartan
        assert sorted(c.root_units()) == [(1, 2), (1, 3), (2, 3)]
        assert c.contains(cartan_H(3, 1, 2))
        assert c.is_graded()

    def test_enlarged_chain_sl3(self):
        c = carrier(build_ech(3))
        assert c.dim == 6
        assert c.contains_borel
        assert c.negative_intersection_dim == 1
        assert c.contains(matrix_unit(3, 2, 1))

    def test_zero_tensor(self):
        assert carrier(BiTensor.zero(3)).dim == 0

    @pytest.mark.slow
    def test_sl11(self):
        assert carrier(build_fch(11)).dim == 60
        assert carrier(build_rch(11)).dim == 60
        enlarged = carrier(build_ech(11))
        assert enlarged.dim == 70
        assert enlarged.contains_borel
        assert enlarged.negative_intersection_dim == 5


class TestComplements:
    """Cartan complements used by the adapted basis."""

    def test_theta_orthogonal(self):
        (h,) = theta_orthogonal_complement(3, [1])
        assert root_eval(theta(3, 1), h) == 0
        assert h.trace() == 0

    def test_trace_orthogonal(self):
        complement = trace_orthogonal_complement(3, [cartan_H(3, 1, 2)])
        assert len(complement) == 1
        (h,) = complement
        assert sum(a * b for a, b in zip(h.diagonal(), cartan_H(3, 1, 2).diagonal())) == 0


class TestDualStructure:
    """Dual brackets read off the cobracket."""

    def test_colors(self):
        d = dual_structure(build_rch(3))
        assert len(d.labels) == 8
        assert len(d.blue()) == 4
        assert len(d.red()) == 4
        assert d.color["E_1_3"] == BLUE
        assert d.color["E_2_1"] == RED

    def test_bracket_is_antisymmetric(self):
        d = dual_structure(build_rch(3))
        for x, y in d.structure:
            assert d.bracket(y, x) == {z: -c for z, c in d.bracket(x, y).items()}
        assert d.bracket("E_1_3", "E_1_3") == {}

    def test_highest_root_dual_is_primitive(self):
        d = dual_structure(build_rch(3))
        assert "E_1_3*" in primitive_set(d)

    @pytest.mark.parametrize("builder", [build_rch, build_ech, build_rJ])
    def test_dual_jacobi(self, builder):
        d = dual_structure(builder(3))
        labels = d.labels
        triples = [
            (x, y, z)
            for i, x in enumerate(labels)
            for j, y in enumerate(labels[i + 1 :], start=i + 1)
            for z in labels[j + 1 :]
        ]
        assert dual_jacobi_violations(d, triples) == []

    @pytest.mark.parametrize("builder", [build_rch, build_ech, build_fch])
    def test_red_duals_form_abelian_ideal(self, builder):
        assert abelian_ideal_ok(dual_structure(builder(3)))

    def test_needs_skew_tensor(self):
        with pytest.raises(InvalidInputError):
            dual_structure(lie_tensor(matrix_unit(3, 1, 2), matrix_unit(3, 2, 3)))


class TestLargerDuals:
    """Ideal and Jacobi checks beyond sl(3)."""

    @pytest.mark.parametrize(
        "builder,n",
        [(build_rch, 5), (build_rch, 7), (build_fch, 5), (build_fch, 7), (build_ech, 5)],
    )
    def test_red_duals_form_abelian_ideal(self, builder, n):
        assert abelian_ideal_ok(dual_structure(builder(n)))

    @pytest.mark.parametrize(
        "builder,n,count", [(build_rch, 5, 400), (build_rch, 7, 200), (build_ech, 5, 400)]
    )
    def test_dual_jacobi_on_sampled_triples(self, builder, n, count):
        d = dual_structure(builder(n))
        rng = random.Random(n)
        triples = [tuple(rng.sample(d.labels, 3)) for _ in range(count)]
        assert dual_jacobi_violations(d, triples) == []

    def test_graded_basis_satisfies_jacobi(self):
        d = assign_gradings(build_rch(5), ChainSpec(n=5, kind="rch"))
        rng = random.Random(5)
        triples = [tuple(rng.sample(d.labels, 3)) for _ in range(400)]
        assert dual_jacobi_violations(d, triples) == []
        assert abelian_ideal_ok(d)


class TestAdaptedBasis:
    """Root combinations in the adapted basis."""

    def test_is_abstract(self):
        with pytest.raises(TypeError):
            AdaptedBasis(carrier(build_rch(3)), [], {}, set(), graded=True)

    def test_rotated_chain_combinations(self):
        combos = ChainSpec(n=5, kind="rch").root_combinations()
        assert combos == {"Ehat_1": matrix_unit(5, 2, 1) + matrix_unit(5, 4, 5)}
        assert ChainSpec(n=3, kind="rch").root_combinations() == {}
        assert ChainSpec(n=5, kind="rch", xi=(0, 1)).root_combinations() == {}
        assert ChainSpec(n=5, kind="fch").root_combinations() == {}

    def test_combination_replaces_its_lead_unit(self):
        d = assign_gradings(build_rch(5), ChainSpec(n=5, kind="rch"))
        assert "E_2_1" not in d.labels
        assert d.color["Ehat_1"] == RED
        assert d.color["E_4_5"] == BLUE
        # E_45 = Ê_1 − E_21 leaves no E_21 coordinate behind
        assert d.basis.coordinates(matrix_unit(5, 2, 1)) == {"Ehat_1": 1, "E_4_5": -1}
        assert d.basis.coordinates(matrix_unit(5, 4, 5)) == {"E_4_5": 1}

    def test_jordanian_combination_is_blue(self):
        d = assign_gradings(build_rJ(5), ChainSpec(n=5, kind="rJ"))
        assert d.color["Ehat_1"] == BLUE
        assert d.color["E_4_5"] == RED
        assert len(d.blue()) == d.basis.carrier.dim == 4


class TestGradings:
    """Blue/red gradings on the chain duals."""

    def test_rotated_chain_sl3(self):
        d = assign_gradings(build_rch(3), ChainSpec(n=3, kind="rch"))
        assert d.gradings is not None
        assert d.gradings["E_1_3"].is_zero()
        assert d.grading_group.rank == 0
        assert grading_consistency(d) == []
        assert attachable_set(d) == ["E_2_1*"]

    def test_chain_grades_sl5(self):
        d = assign_gradings(build_rch(5), ChainSpec(n=5, kind="rch"))
        g = d.gradings
        assert g["E_1_5"].is_zero()
        assert g["E_2_4"].is_zero()
        assert g["Hc_1"] == -theta(5, 1)
        assert g["Hc_2"] == -theta(5, 2)
        # extension pair E_12 ∧ E_25
        assert g["E_1_2"] == -RootVector.root(5, 2, 5)
        assert g["E_2_5"] == -RootVector.root(5, 1, 2)
        assert g["Ehat_1"] == RootVector.root(5, 2, 1)
        assert g["E_4_3"] == RootVector.root(5, 4, 3)
        assert g["Hp_1"].is_zero()

    def test_grading_group_sl5(self):
        group = assign_gradings(build_rch(5), ChainSpec(n=5, kind="rch")).grading_group
        assert group.rank == 1
        assert group.degree in (theta(5, 1), theta(5, 2))
        assert group.equivalent(theta(5, 1), theta(5, 2))
        assert group.equivalent(RootVector.root(5, 2, 1), RootVector.root(5, 4, 5))
        assert not group.equivalent(RootVector.root(5, 2, 1), RootVector.root(5, 4, 3))
        assert group.is_homogeneous(matrix_unit(5, 2, 1) + matrix_unit(5, 4, 5))
        assert not group.is_homogeneous(matrix_unit(5, 2, 1) + matrix_unit(5, 4, 3))

    @pytest.mark.parametrize("n", [3, 5, 7])
    @pytest.mark.parametrize("kind", ["fch", "rch"])
    def test_chains_are_additive(self, kind, n):
        d = assign_gradings(ChainSpec(n=n, kind=kind).build(), ChainSpec(n=n, kind=kind))
        assert grading_consistency(d) == []

    @pytest.mark.parametrize("kind", ["fch", "rch"])
    def test_wrong_grade_is_reported(self, kind):
        spec = ChainSpec(n=5, kind=kind)
        d = assign_gradings(spec.build(), spec)
        (x, _), result = next(
            (pair, result) for pair, result in d.structure.items() if set(result) - set(pair)
        )
        shifted = replace(d, gradings={**d.gradings, x: d.gradings[x] + RootVector.root(5, 1, 2)})
        violations = grading_consistency(shifted)
        assert violations
        assert all(x in (v.x, v.y, v.z) for v in violations)

    @pytest.mark.parametrize("kind", ["rotation", "rJ", "ech", "dj3"])
    def test_jordanian_kinds_sl3(self, kind):
        spec = ChainSpec(n=3, kind=kind)
        assert grading_consistency(assign_gradings(spec.build(), spec)) == []

    @pytest.mark.parametrize("kind", ["rotation", "rJ", "ech"])
    def test_jordanian_kinds_sl5(self, kind):
        spec = ChainSpec(n=5, kind=kind)
        assert grading_consistency(assign_gradings(spec.build(), spec)) == []

    def test_jordanian_cartan_dual(self):
        d = assign_gradings(build_rJ(3), ChainSpec(n=3, kind="rJ"))
        assert d.gradings["Hc_1"] == -RootVector.root(3, 2, 1)
        assert d.gradings["E_2_1"].is_zero()
        d5 = assign_gradings(build_rJ(5), ChainSpec(n=5, kind="rJ"))
        assert d5.gradings["Hc_1"] == -RootVector.root(5, 2, 1)
        assert d5.gradings["Ehat_1"].is_zero()

    def test_rotation_highest_root_dual(self):
        d = assign_gradings(build_rotation(3), ChainSpec(n=3, kind="rotation"))
        assert d.gradings["E_1_3"].is_zero()
        assert d.gradings["Hc_1"] == -theta(3, 1)

    def test_mismatched_tensor(self):
        with pytest.raises(UnrecognizedStructureError):
            assign_gradings(build_fch(3), ChainSpec(n=3, kind="rch"))

    def test_unknown_kind(self):
        with pytest.raises(UnrecognizedStructureError):
            ChainSpec(n=3, kind="spiral")

    def test_dj3_only_for_sl3(self):
        with pytest.raises(InvalidInputError):
            ChainSpec(n=5, kind="dj3").build()

    def test_grading_requires_assignment(self):
        with pytest.raises(InvalidInputError):
            grading_consistency(dual_structure(build_rch(3)))


class TestAnalyze:
    """The combined report."""

    def test_graded_kind(self):
        report = analyze(build_rch(3), ChainSpec(n=3, kind="rch"))
        assert report.carrier.dim == 4
        assert report.abelian_ideal_ok
        assert report.attachable == ["E_2_1*"]
        assert "E_1_3*" in report.primitive
        assert report.grading_violations == []

    def test_enlarged_chain_graded(self):
        report = analyze(build_ech(3), ChainSpec(n=3, kind="ech"))
        assert report.carrier.contains_borel
        assert report.grading_violations == []
        assert report.attachable == []
        assert report.diagram_agrees

    @pytest.mark.parametrize(
        "kind,expected",
        [
            ("rotation", {"E_1_2*", "E_2_3*", "Hp_1*"}),
            ("rJ", {"E_2_3*", "Hp_1*"}),
            ("ech", set()),
            ("dj3", set()),
        ],
    )
    def test_every_kind_sl3(self, kind, expected):
        spec = ChainSpec(n=3, kind=kind)
        report = analyze(spec.build(), spec)
        assert report.grading_violations == []
        assert set(report.attachable) == expected
        assert report.diagram_agrees

    def test_without_spec(self):
        report = analyze(build_rJ(3))
        assert report.grading_violations is None
        assert report.abelian_ideal_ok

    def test_spec_mismatch(self):
        with pytest.raises(UnrecognizedStructureError):
            analyze(build_rch(3), ChainSpec(n=3, kind="ech"))

    def test_rotated_chain_sl5(self):
        report = analyze(build_rch(5), ChainSpec(n=5, kind="rch"))
        assert report.abelian_ideal_ok
        assert "E_1_5*" in report.primitive
        assert report.grading_violations == []
        assert set(report.attachable) == {"Ehat_1*", "E_4_3*"}
        assert report.diagram_agrees

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_rotated_chain_attachable_count(self, n):
        report = analyze(build_rch(n), ChainSpec(n=n, kind="rch"))
        assert len(report.attachable) == (n - 1) // 2
        assert report.diagram_agrees
        assert set(report.primitive) <= set(report.quasiprimitive)

    @pytest.mark.parametrize("n", [3, 5])
    def test_full_chain_has_nothing_attachable(self, n):
        report = analyze(build_fch(n), ChainSpec(n=n, kind="fch"))
        assert report.attachable == []
        assert report.diagram_agrees

    def test_quasiprimitive_contains_primitive(self):
        d = assign_gradings(build_rch(5), ChainSpec(n=5, kind="rch"))
        assert set(primitive_set(d)) <= set(quasiprimitive_set(d))

    @pytest.mark.slow
    def test_rotated_chain_sl11(self):
        report = analyze(build_rch(11), ChainSpec(n=11, kind="rch"))
        assert report.grading_violations == []
        assert len(report.attachable) == 5
        assert report.diagram_agrees
