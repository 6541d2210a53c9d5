"""Tests for the command classes, their exit codes and the registry."""

import json
from fractions import Fraction
from io import StringIO
from unittest.mock import Mock, patch

import pytest
from rich.console import Console

from chainr.builders import EnlargementSolver, build_rch
from chainr.commands import (
    AnalyzeCommand,
    BaseCommand,
    BuildCommand,
    CommandRegistry,
    ExitCode,
    RootsCommand,
    SolveCommand,
    VerifyCommand,
    default_registry,
)
from chainr.commands.build import parse_params
from chainr.config import ChainrConfig
from chainr.container import SimpleContainer
from chainr.exceptions import InconsistentSystemError, InvalidInputError
from chainr.serialization import tensor_to_json, write_json


class FailingCommand(BaseCommand):
    """Raises whatever it is told to."""

    def execute(self, error: BaseException) -> int:
        raise error


@pytest.fixture
def container(tmp_path):
    """Container with a captured console and a config rooted in tmp_path."""
    c = SimpleContainer()
    c.register(Console, Console(file=StringIO(), width=120))
    c.register(ChainrConfig, ChainrConfig(tmp_path))
    c.register_factory(EnlargementSolver, EnlargementSolver)
    return c


def output_of(container: SimpleContainer) -> str:
    return container.get(Console).file.getvalue()


class TestBaseCommand:
    """Exit-code mapping and helpers."""

    @pytest.mark.parametrize(
        "error,code",
        [
            (InvalidInputError("bad n"), ExitCode.BAD_INPUT),
            (InconsistentSystemError("no solution", residual={"x": 1}), ExitCode.INCONSISTENT),
            (KeyboardInterrupt(), ExitCode.INTERRUPTED),
            (RuntimeError("boom"), 1),
        ],
    )
    def test_exit_codes(self, container, error, code):
        assert FailingCommand(container).run(error=error) == code

    def test_invalid_input_message(self, container):
        FailingCommand(container).run(error=InvalidInputError("n must be odd"))
        assert "Invalid input: n must be odd" in output_of(container)

    def test_default_name_and_description(self, container):
        command = FailingCommand(container)
        assert command.name == "failing"
        assert command.description == "Raises whatever it is told to."

    def test_without_container(self):
        command = RootsCommand()
        assert isinstance(command.console, Console)
        assert isinstance(command.solver, EnlargementSolver)

    def test_solver_shared_through_container(self, container):
        assert BuildCommand(container).solver is SolveCommand(container).solver

    def test_emit_json_to_file(self, container, tmp_path):
        path = tmp_path / "payload.json"
        RootsCommand(container).emit_json({"b": 1, "a": [1, 2]}, path)
        assert path.read_text() == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
        assert f"Wrote {path}" in output_of(container)

    def test_emit_json_unwritable(self, container, tmp_path):
        with pytest.raises(InvalidInputError, match="Cannot write"):
            RootsCommand(container).emit_json({}, tmp_path / "missing" / "x.json")


class TestBuildCommand:
    """``build``."""

    def test_parse_params(self):
        assert parse_params("1, -2/3,0") == (1, Fraction(-2, 3), 0)
        assert parse_params(None) is None
        assert parse_params("  ") is None
        with pytest.raises(InvalidInputError):
            parse_params("1,0.5")

    def test_writes_artifact(self, container, tmp_path):
        path = tmp_path / "rch3.json"
        code = BuildCommand(container).run(kind="rch", n=3, out=path)
        assert code == ExitCode.OK
        document = json.loads(path.read_text())
        assert document["provenance"]["kind"] == "rch"
        assert document["provenance"]["normalization_c"] == 1
        assert document["certificate"] is None
        assert "carrier dim 4" in output_of(container)

    def test_seed_is_reproducible(self, container, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        BuildCommand(container).run(kind="ech", n=3, seed=5, out=first)
        BuildCommand(container).run(kind="ech", n=3, seed=5, out=second)
        assert first.read_bytes() == second.read_bytes()
        header = json.loads(first.read_text())["provenance"]
        assert header["normalization_c"] is None
        assert len(header["xi"]) == len(header["zeta"]) == 1

    def test_printed_normalization_warns(self, container, tmp_path):
        path = tmp_path / "fch.json"
        code = BuildCommand(container).run(kind="fch", n=3, normalization=2, out=path)
        assert code == ExitCode.OK
        assert "printed scaling" in output_of(container)
        assert json.loads(path.read_text())["provenance"]["normalization_c"] == 2

    def test_dj3_needs_sl3(self, container, tmp_path):
        code = BuildCommand(container).run(kind="dj3", n=5, out=tmp_path / "x.json")
        assert code == ExitCode.BAD_INPUT

    def test_even_n(self, container, tmp_path):
        code = BuildCommand(container).run(kind="rch", n=4, out=tmp_path / "x.json")
        assert code == ExitCode.BAD_INPUT

    def test_config_normalization(self, tmp_path):
        (tmp_path / ".chainr").mkdir()
        (tmp_path / ".chainr" / "config.yaml").write_text("builders:\n  normalization: 2\n")
        c = SimpleContainer()
        c.register(Console, Console(file=StringIO()))
        c.register(ChainrConfig, ChainrConfig(tmp_path))
        path = tmp_path / "fch.json"
        BuildCommand(c).run(kind="fch", n=3, out=path)
        assert json.loads(path.read_text())["provenance"]["normalization_c"] == 2

    def test_config_seed(self, container, tmp_path):
        (tmp_path / ".chainr").mkdir()
        (tmp_path / ".chainr" / "config.yaml").write_text("sampling:\n  seed: 5\n")
        c = SimpleContainer()
        c.register(Console, Console(file=StringIO()))
        c.register(ChainrConfig, ChainrConfig(tmp_path))
        from_config, from_flag = tmp_path / "a.json", tmp_path / "b.json"
        BuildCommand(c).run(kind="ech", n=3, out=from_config)
        BuildCommand(container).run(kind="ech", n=3, seed=5, out=from_flag)
        assert from_config.read_bytes() == from_flag.read_bytes()

    def test_no_seed_keeps_unit_parameters(self, container, tmp_path):
        path = tmp_path / "rch.json"
        BuildCommand(container).run(kind="rch", n=5, out=path)
        assert json.loads(path.read_text())["provenance"]["xi"] is None


class TestVerifyCommand:
    """``verify``."""

    def test_solution(self, container, tmp_path):
        source = tmp_path / "r.json"
        write_json(source, tensor_to_json(build_rch(5)))
        report = tmp_path / "report.json"
        assert VerifyCommand(container).run(in_path=source, out=report) == ExitCode.OK
        assert json.loads(report.read_text())["holds"] is True
        assert "CYBE holds" in output_of(container)

    def test_failure(self, container, tmp_path):
        source = tmp_path / "r.json"
        write_json(source, tensor_to_json(build_rch(3, normalization=2)))
        report = tmp_path / "report.json"
        assert VerifyCommand(container).run(in_path=source, out=report) == ExitCode.CYBE_FAILED
        data = json.loads(report.read_text())
        assert data["holds"] is False
        assert data["residual_term_count"] > 0

    def test_preview_limit_from_config(self, tmp_path):
        (tmp_path / ".chainr").mkdir()
        (tmp_path / ".chainr" / "config.json").write_text('{"verify": {"preview_terms": 1}}')
        c = SimpleContainer()
        c.register(Console, Console(file=StringIO()))
        c.register(ChainrConfig, ChainrConfig(tmp_path))
        source = tmp_path / "r.json"
        write_json(source, tensor_to_json(build_rch(3, normalization=2)))
        report = tmp_path / "report.json"
        VerifyCommand(c).run(in_path=source, out=report)
        assert len(json.loads(report.read_text())["residual_preview"]) == 1

    def test_malformed_file(self, container, tmp_path):
        source = tmp_path / "r.json"
        source.write_text('{"n": 3, "terms": [{"left": {}}]}')
        assert VerifyCommand(container).run(in_path=source) == ExitCode.BAD_INPUT

    def test_missing_input(self, container):
        assert VerifyCommand(container).run() == ExitCode.BAD_INPUT


class TestSolveCommand:
    """``solve``."""

    def test_sl3(self, container, tmp_path):
        path = tmp_path / "solution.json"
        assert SolveCommand(container).run(n=3, out=path) == ExitCode.OK
        data = json.loads(path.read_text())
        assert data["normalization_c"] == "1"
        assert data["closed_form_agrees"] is True
        assert "satisfies the CYBE" in output_of(container)

    def test_even_n_without_flag(self, container):
        assert SolveCommand(container).run(n=4) == ExitCode.BAD_INPUT

    def test_inconsistent(self, container):
        solver = Mock(spec=EnlargementSolver)
        solver.solve.side_effect = InconsistentSystemError("sl(4) has no solution")
        container.register(EnlargementSolver, solver)
        assert SolveCommand(container).run(n=4, exploratory=True) == ExitCode.INCONSISTENT
        assert "Inconsistent system" in output_of(container)

    def test_uses_cached_solution(self, container, tmp_path):
        SolveCommand(container).run(n=3, out=tmp_path / "a.json")
        assert container.get(EnlargementSolver).cached_sizes() == [3]


class TestAnalyzeCommand:
    """``analyze``."""

    def test_build_artifact(self, container, tmp_path):
        artifact = tmp_path / "rch3.json"
        BuildCommand(container).run(kind="rch", n=3, out=artifact)
        report = tmp_path / "analysis.json"
        assert AnalyzeCommand(container).run(in_path=artifact, out=report) == ExitCode.OK
        data = json.loads(report.read_text())
        assert data["carrier_dim"] == 4
        assert data["attachable"] == ["E_2_1*"]
        assert "E_2_1*" in data["quasiprimitive"]

    def test_needs_provenance(self, container, tmp_path):
        source = tmp_path / "r.json"
        write_json(source, tensor_to_json(build_rch(3)))
        assert AnalyzeCommand(container).run(in_path=source) == ExitCode.BAD_INPUT
        assert "provenance" in output_of(container)


class TestRootsCommand:
    """``roots``."""

    def test_table_and_report(self, container, tmp_path):
        path = tmp_path / "d7.json"
        assert RootsCommand(container).run(series="D", rank=7, out=path) == ExitCode.OK
        assert json.loads(path.read_text())["type"] == "I"
        assert "type I" in output_of(container)

    def test_unsupported_series(self, container):
        assert RootsCommand(container).run(series="G", rank=2) == ExitCode.BAD_INPUT


class TestCommandRegistry:
    """Registration and lookup."""

    def test_default_registry(self):
        registry = default_registry()
        assert sorted(registry.list_commands()) == ["analyze", "build", "roots", "solve", "verify"]

    def test_register_and_create(self, container):
        registry = CommandRegistry()
        registry.register(FailingCommand)
        assert registry.get("failing") is FailingCommand
        assert isinstance(registry.create_command("failing", container), FailingCommand)
        assert registry.create_command("absent", container) is None

    def test_name_override_and_unregister(self):
        registry = CommandRegistry()
        registry.register(RootsCommand, name="classify")
        assert registry.list_commands() == ["classify"]
        registry.unregister("classify")
        assert registry.get_all() == {}

    def test_name_falls_back_to_class(self):
        registry = CommandRegistry()
        with patch.object(RootsCommand, "__init__", side_effect=RuntimeError("no")):
            registry.register(RootsCommand)
        assert registry.list_commands() == ["roots"]
