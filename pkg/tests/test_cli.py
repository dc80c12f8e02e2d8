"""
Tests for the staraut command line.
"""
import json
import os
from unittest.mock import patch

import pytest

from algebra.exact import RootOfUnity
from algebra.groups import FinAbGroup, trivial_character
from algebra.qforms import WeakQuadraticForm, WRQFDatum
from staraut import main

Z2 = json.dumps({"cyclic_orders": [2]})
Z3 = json.dumps({"cyclic_orders": [3]})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out), out


class TestQfCommand:
    """`qf` actions end to end."""

    def test_enumerate(self, capsys):
        """Test that Z2 carries four weak quadratic forms."""
        code, document, _ = run(capsys, "qf", "enumerate", "--group", Z2)

        assert code == 0
        assert document["passed"] is True
        assert document["count"] == 4
        assert len(document["forms"]) == 4

    def test_check_trivial_form(self, capsys):
        """Test the constant form."""
        form = json.dumps(WeakQuadraticForm.constant_one(FinAbGroup((2,))).to_json())
        code, document, _ = run(capsys, "qf", "check", "--form", form)

        assert code == 0
        assert document["weak_qform"] is True
        assert document["qform"] is True
        assert document["counterexample"] is None

    def test_check_failure_exits_one(self, capsys):
        """Test that an asymmetric table fails with a counterexample."""
        z3 = FinAbGroup((3,))
        values = [RootOfUnity.of(0), RootOfUnity.of(1, 3), RootOfUnity.of(0)]
        form = json.dumps(WeakQuadraticForm(z3, values).to_json())
        code, document, _ = run(capsys, "qf", "check", "--form", form)

        assert code == 1
        assert document["passed"] is False
        assert document["weak_qform"] is True
        assert document["qform"] is False
        assert document["counterexample"] is not None

    def test_symmetric_wrt(self, capsys):
        """Test the shifted symmetry check."""
        form = json.dumps(WeakQuadraticForm.constant_one(FinAbGroup((3,))).to_json())
        code, document, _ = run(capsys, "qf", "check", "--form", form, "--symmetric-wrt", "[1]")

        assert code == 0
        assert document["symmetric_wrt"] is True
        assert document["g0"] == [1]

    def test_classify_wrqf(self, capsys):
        """Test that both sides of the WRQF/WSQF correspondence agree on Z3."""
        code, document, _ = run(capsys, "qf", "classify", "--group", Z3, "--kind", "wrqf")

        assert code == 0
        assert document["count"] == document["counterpart_count"]

    def test_synonym(self, capsys):
        """Test that `forms` is an alias of `qf`."""
        code, document, _ = run(capsys, "forms", "enumerate", "--group", Z2, "--kind", "qf")

        assert code == 0
        assert document["count"] == 4


class TestOtherCommands:
    """One run per remaining command."""

    def test_ribbon_build(self, capsys):
        """Test that a trivial datum builds a coherent structure."""
        z3 = FinAbGroup((3,))
        datum = WRQFDatum(WeakQuadraticForm.constant_one(z3), trivial_character(z3), (0,))
        code, document, _ = run(capsys, "ribbon", "build", "--datum", json.dumps(datum.to_json()))

        assert code == 0
        assert all(document["checks"].values())
        assert {"pentagon", "hexagons", "twist", "ribbon"} <= set(document["checks"])

    def test_ribbon_build_rejects_bad_datum(self, capsys):
        """Test that eta != beta(-, g0) is a mathematical failure."""
        z3 = FinAbGroup((3,))
        q = WeakQuadraticForm(z3, [RootOfUnity.of(0), RootOfUnity.of(1, 3), RootOfUnity.of(1, 3)])
        datum = WRQFDatum(q, trivial_character(z3), (1,))
        code, document, _ = run(capsys, "ribbon", "build", "--datum", json.dumps(datum.to_json()))

        assert code == 1
        assert document["passed"] is False
        assert "error" in document

    def test_cocycle_from_qform(self, capsys):
        """Test that the cocycle built from a form has that form as its trace."""
        z3 = FinAbGroup((3,))
        q = WeakQuadraticForm(z3, [RootOfUnity.of(0), RootOfUnity.of(1, 3), RootOfUnity.of(1, 3)])
        code, document, _ = run(capsys, "cocycle", "from-qform", "--form", json.dumps(q.to_json()))

        assert code == 0
        assert all(document["checks"].values())

    def test_gvect_verify(self, capsys):
        """Test the graded identities on Z2."""
        code, document, _ = run(capsys, "gvect", "verify", "--group", Z2, "--max-dim", "1", "--samples", "2")

        assert code == 0
        assert document["seed"] == 0
        assert document["counterexample"] is None

    def test_chu_verify(self, capsys):
        """Test a small seeded Chu run."""
        code, document, _ = run(capsys, "chu", "verify", "--seed", "3", "--max-dim", "2", "--samples", "2")

        assert code == 0
        assert all(document["checks"].values())

    def test_prof_demo(self, capsys):
        """Test the profunctor report on Z2."""
        code, document, _ = run(capsys, "prof", "demo", "--category", "z2")

        assert code == 0
        assert document["category"] == "z2"
        assert document["coend_of_hom"] == 2


class TestErrorsAndOutput:
    """Exit codes, error documents and determinism."""

    def test_malformed_json(self, capsys):
        """Test that broken JSON exits 2 naming the field."""
        code, document, _ = run(capsys, "qf", "enumerate", "--group", "{\"cyclic_orders\": [2")

        assert code == 2
        assert document["passed"] is False
        assert document["error"]["error_type"] == "MalformedInputError"
        assert document["error"]["details"]["field"] == "group"

    def test_undecodable_file(self, capsys, tmp_path):
        """Test that a file that is not UTF-8 exits 2 naming the field."""
        path = tmp_path / "form.json"
        path.write_bytes(b"\xff\xfe{")
        code, document, _ = run(capsys, "qf", "check", "--form", str(path))

        assert code == 2
        assert document["error"]["error_type"] == "MalformedInputError"
        assert document["error"]["details"]["field"] == "form"

    def test_internal_error_has_own_exit_code(self, capsys):
        """Test that an unexpected exception exits 3 with a JSON document."""
        def broken(group, config):
            raise RuntimeError("table index out of range")

        with patch.dict("commands.qf_command.ENUMERATORS", {"wqf": broken}):
            code, document, _ = run(capsys, "qf", "enumerate", "--group", Z2)

        assert code == 3
        assert document["passed"] is False
        assert document["error"]["error_type"] == "InternalError"
        assert document["error"]["details"]["exception_type"] == "RuntimeError"

    def test_missing_action(self, capsys):
        """Test that argparse errors become JSON documents."""
        code, document, _ = run(capsys, "qf")

        assert code == 2
        assert document["error"]["details"]["field"] == "argv"

    def test_unknown_command(self, capsys):
        """Test an unknown subcommand."""
        code, document, _ = run(capsys, "knot", "invariants")
        assert code == 2

    def test_bound_exceeded(self, capsys):
        """Test that a too large dimension bound is a usage error."""
        code, document, _ = run(capsys, "chu", "verify", "--max-dim", "9")

        assert code == 2
        assert document["error"]["error_type"] == "BoundExceededError"

    def test_environment_bound(self, capsys):
        """Test STARAUT_MAX_GROUP_ORDER."""
        with patch.dict(os.environ, {"STARAUT_MAX_GROUP_ORDER": "2"}):
            code, document, _ = run(capsys, "qf", "enumerate", "--group", Z3)

        assert code == 2
        assert document["error"]["details"]["parameter"] == "max_enumeration_order"

    def test_output_file(self, capsys, tmp_path):
        """Test that --output writes the same document."""
        target = tmp_path / "result.json"
        code, _, out = run(capsys, "--output", str(target), "qf", "enumerate", "--group", Z2)

        assert code == 0
        assert target.read_text(encoding="utf-8") == out

    def test_output_file_on_error(self, capsys, tmp_path):
        """Test that error documents are written too."""
        target = tmp_path / "error.json"
        code, _, out = run(capsys, "--output", str(target), "qf", "enumerate", "--group", "[")

        assert code == 2
        assert json.loads(target.read_text(encoding="utf-8"))["passed"] is False

    def test_deterministic(self, capsys):
        """Test byte-identical output for identical input."""
        argv = ("qf", "classify", "--group", Z3, "--kind", "wsqf")
        _, _, first = run(capsys, *argv)
        _, _, second = run(capsys, *argv)
        assert first == second

    @pytest.mark.parametrize("argv", [
        ("chu", "verify", "--seed", "5", "--max-dim", "2", "--samples", "1"),
        ("gvect", "verify", "--group", Z2, "--seed", "5", "--max-dim", "1", "--samples", "1"),
    ])
    def test_seeded_runs_repeat(self, capsys, argv):
        """Test that seeded verifications repeat exactly."""
        _, _, first = run(capsys, *argv)
        _, _, second = run(capsys, *argv)
        assert first == second
