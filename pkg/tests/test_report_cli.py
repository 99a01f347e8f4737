import io
import os
from contextlib import redirect_stderr, redirect_stdout

import pytest

from murasugi.cli import load_config, main
from murasugi.report import (
    build_check_report,
    emit_report,
    emit_stream,
    parse_report,
    split_stream,
)

REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
MANIFEST = os.path.join(REPO, "demo", "manifest.txt")


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def strip_timing(text: str) -> str:
    return "\n".join(l for l in text.splitlines() if not l.startswith("time_ms:"))


class TestReportRoundTrip:
    @pytest.mark.parametrize(
        "kind,text,p",
        [
            ("poly", "t - 3 + t^-1", 2),
            ("poly", "3 - t - t^-1 + g*t - g + g^2*t^-1 - g^2", 3),
            ("braid", "2; 1 1", 3),
            ("braid", "2; 1 1 1 1", 2),
        ],
    )
    def test_lossless(self, kind, text, p):
        rep = build_check_report(kind, text, p)
        assert parse_report(emit_report(rep)) == rep

    def test_stream_split(self):
        reps = [
            emit_report(build_check_report("poly", "1", 3)),
            emit_report(build_check_report("poly", "t - 3 + t^-1", 2)),
        ]
        stream = emit_stream(reps)
        assert split_stream(stream) == reps

    def test_fields_are_canonical(self):
        rep = build_check_report("poly", "-g^2*t^-1 - g^2", 3)
        assert rep.murasugi == "1 + t"


class TestAlexCommand:
    def test_hopf(self):
        code, out, _ = run_cli("alex", "--braid", "2; 1 1")
        assert code == 0
        assert out.strip() == "1"

    def test_one_component_exit_4(self):
        code, _, err = run_cli("alex", "--braid", "2; 1 1 1")
        assert code == 4
        assert "component" in err

    def test_zero_linking_warns(self):
        code, out, err = run_cli("alex", "--braid", "2; 1 -1")
        assert code == 0
        assert out.strip() == "0"
        assert "linking number 0" in err

    def test_parse_error_exit_3(self):
        code, _, _ = run_cli("alex", "--braid", "nonsense")
        assert code == 3

    def test_presentation_file(self, tmp_path):
        f = tmp_path / "pres.txt"
        f.write_text("gens: a b\nab: a=x b=y\nrel: a b a^-1 b^-1\nrel:\n")
        code, out, _ = run_cli("alex", "--presentation", str(f))
        assert code == 0
        assert out.strip() == "1"


class TestMurasugiCommand:
    def test_hopf_projection(self):
        code, out, _ = run_cli("murasugi", "--braid", "2; 1 1", "--p", "3")
        assert code == 0
        assert out.strip() == "1"

    def test_t24_projection_records_augment(self):
        code, out, err = run_cli("murasugi", "--braid", "2; 1 1 1 1", "--p", "2")
        assert code == 0
        assert out.strip() == "1 + g*t"
        assert "augment: 1,1" in err

    def test_invalid_p_exit_5(self):
        code, _, _ = run_cli("murasugi", "--braid", "2; 1 1", "--p", "1")
        assert code == 5


class TestCheckCommand:
    def test_negative_certificate(self):
        code, out, _ = run_cli("check", "--p", "2", "--poly", "t - 3 + t^-1")
        assert code == 1
        assert "not-norm" in out and "B4: 5" in out

    def test_trivial_norm(self):
        code, out, _ = run_cli("check", "--p", "3", "--poly", "1")
        assert code == 0
        assert "witness 1" in out

    def test_realized_round_trip(self):
        code, out, _ = run_cli(
            "check", "--p", "3", "--poly", "3 - t - t^-1 + g*t - g + g^2*t^-1 - g^2"
        )
        assert code == 0

    def test_inconclusive_exit_2(self):
        code, _, _ = run_cli(
            "check", "--p", "3", "--max-coeff", "0", "--poly", "1"
        )
        assert code == 2

    def test_report_format_round_trips(self):
        code, out, _ = run_cli(
            "check", "--p", "2", "--poly", "t - 3 + t^-1", "--format", "report"
        )
        assert code == 1
        rep = parse_report(out)
        assert rep.verdict == "not-norm"
        assert rep.failed_check == "B4"
        assert rep.evidence == "5"

    def test_braid_pipeline(self):
        code, out, _ = run_cli(
            "check", "--braid", "2; 1 1", "--p", "3", "--format", "report"
        )
        assert code == 0
        rep = parse_report(out)
        assert rep.delta == "1" and rep.murasugi == "1" and rep.witness == "1"
        assert rep.linking_number == 1

    def test_zero_murasugi_is_input_error(self):
        code, _, err = run_cli("check", "--braid", "2; 1 -1", "--p", "2")
        assert code == 3
        assert "zero" in err

    def test_figures_written(self, tmp_path):
        figdir = tmp_path / "figs"
        code, _, err = run_cli(
            "check", "--p", "3", "--poly", "1", "--figures", str(figdir)
        )
        assert code == 0
        assert (figdir / "verdict_summary.png").stat().st_size > 0
        assert (figdir / "battery_matrix.png").stat().st_size > 0


class TestRealizeCommand:
    def test_expansion(self):
        code, out, _ = run_cli("realize", "--p", "3", "--a", "1 + g*t - g")
        assert code == 0
        assert out.strip() == "1 - 3*t + t^2 + g*t - g*t^2 - g^2 + g^2*t"

    def test_augmentation_violation_exit_6(self):
        code, _, err = run_cli("realize", "--p", "3", "--a", "g")
        assert code == 6
        assert "a(g,1) = 1" in err


class TestBatchCommand:
    def test_three_polys_summary(self, tmp_path):
        manifest = tmp_path / "m.txt"
        manifest.write_text(
            "poly | 2 | t - 3 + t^-1\n"
            "poly | 3 | 3 - t - t^-1 + g*t - g + g^2*t^-1 - g^2\n"
            "poly | 3 | 1\n"
        )
        code, out, _ = run_cli("batch", str(manifest))
        assert code == 0
        assert "summary: norm=2 not-norm=1 inconclusive=0 error=0" in out

    def test_continues_past_errors(self, tmp_path):
        manifest = tmp_path / "m.txt"
        manifest.write_text("poly | 2 | ++bad\npoly | 3 | 1\nnot a line\n")
        code, out, _ = run_cli("batch", str(manifest))
        assert code == 0
        assert "error: line 1" in out
        assert "summary: norm=1 not-norm=0 inconclusive=0 error=2" in out

    def test_demo_manifest_counts(self):
        code, out, _ = run_cli("batch", MANIFEST)
        assert code == 0
        assert "summary: norm=3 not-norm=3 inconclusive=1 error=0" in out

    def test_deterministic_with_parallelism(self):
        _, seq, _ = run_cli("batch", MANIFEST)
        _, par, _ = run_cli("batch", MANIFEST, "--jobs", "4")
        assert strip_timing(seq) == strip_timing(par)

    def test_exit_codes_match_summary(self, tmp_path):
        manifest = tmp_path / "m.txt"
        lines = [
            ("poly | 3 | 1", 0),
            ("poly | 2 | t - 3 + t^-1", 1),
        ]
        manifest.write_text("\n".join(l for l, _ in lines) + "\n")
        _, out, _ = run_cli("batch", str(manifest))
        records = split_stream(out)
        verdict_counts = {"norm": 0, "not-norm": 0}
        for rec in records[:-1]:
            rep = parse_report(rec)
            verdict_counts[rep.verdict] += 1
        for (line, expected_code) in lines:
            mode, p, payload = (s.strip() for s in line.split("|"))
            code, _, _ = run_cli("check", "--p", p, "--poly", payload)
            assert code == expected_code
        assert verdict_counts == {"norm": 1, "not-norm": 1}

    def test_figures_written(self, tmp_path):
        figdir = tmp_path / "figs"
        code, _, _ = run_cli("batch", MANIFEST, "--figures", str(figdir))
        assert code == 0
        assert (figdir / "verdict_summary.png").stat().st_size > 0
        assert (figdir / "battery_matrix.png").stat().st_size > 0


class TestConfig:
    def test_load_and_override(self, tmp_path):
        cfg = tmp_path / "murasugi.toml"
        cfg.write_text("# comment\nmax_coeff = 0\nformat = \"report\"\n")
        assert load_config(str(cfg)) == {"max_coeff": 0, "format": "report"}
        # config alone: empty box forces inconclusive
        code, out, _ = run_cli("--config", str(cfg), "check", "--p", "3", "--poly", "1")
        assert code == 2
        assert "verdict: inconclusive" in out
        # flag overrides config
        code, _, _ = run_cli(
            "--config", str(cfg), "check", "--p", "3", "--poly", "1", "--max-coeff", "3"
        )
        assert code == 0

    def test_unknown_key_rejected(self, tmp_path):
        cfg = tmp_path / "c.toml"
        cfg.write_text("mystery = 1\n")
        with pytest.raises(ValueError):
            load_config(str(cfg))


class TestRepeatability:
    def test_identical_invocations_byte_identical_mod_timing(self):
        _, a, _ = run_cli("check", "--p", "3", "--poly", "1", "--format", "report")
        _, b, _ = run_cli("check", "--p", "3", "--poly", "1", "--format", "report")
        assert strip_timing(a) == strip_timing(b)
