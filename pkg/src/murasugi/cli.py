"""Command-line surface: alex, murasugi, check, realize, batch.

Exit codes make the tool scriptable: 0 norm, 1 not-norm (obstructed),
2 inconclusive, 3 parse/input error, 4 wrong component count, 5 invalid p,
6 augmentation violation in realize.  Flags have config-file equivalents
(flat `key = value` lines in murasugi.toml, loaded from the working directory
or --config); explicit flags win.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .groupring import format_group_elem, parse_group_elem, project
from .laurent import PolyParseError, format_poly2
from .links import (
    BraidSyntaxError,
    ComponentCountError,
    PresentationError,
    analyze_closure,
    alexander_polynomial,
    braid_to_presentation,
    parse_braid,
    parse_presentation,
)
from .normdecide import SearchBounds, realize
from .report import (
    VERDICT_EXIT,
    PipelineError,
    build_check_report,
    emit_report,
    emit_stream,
)

EXIT_PARSE = 3
EXIT_COMPONENTS = 4
EXIT_BAD_P = 5
EXIT_AUGMENTATION = 6

CONFIG_KEYS = {
    "p": int,
    "max_coeff": int,
    "max_tdeg": int,
    "budget": int,
    "drop_relator": int,
    "format": str,
    "jobs": int,
    "figures": str,
}


def load_config(path: str) -> dict:
    """Flat `key = value` config; `#` comments and blank lines ignored."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"bad config line {raw.strip()!r}")
            key = key.strip()
            value = value.strip().strip("\"'")
            if key not in CONFIG_KEYS:
                raise ValueError(f"unknown config key {key!r}")
            out[key] = CONFIG_KEYS[key](value)
    return out


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="murasugi",
        description="Alexander/Murasugi polynomials and the equivariant-slice norm obstruction",
    )
    top.add_argument("--config", help="config file (flat key = value); default ./murasugi.toml")
    sub = top.add_subparsers(dest="command", required=True)

    def add_link_input(p, poly_too=False):
        p.add_argument("--braid", help='braid word "n; k1 k2 ..." (closure is taken)')
        p.add_argument("--presentation", help="presentation file (gens:/ab:/rel: lines)")
        if poly_too:
            p.add_argument("--poly", help="group-ring polynomial in g and t")
        p.add_argument("--drop-relator", type=int, default=None,
                       help="index of the relator to drop (default: last)")

    alex = sub.add_parser("alex", help="Alexander polynomial of a 2-component link")
    add_link_input(alex)
    alex.add_argument("--format", choices=("text", "report"), default=None)

    mur = sub.add_parser("murasugi", help="Murasugi polynomial: project the Alexander polynomial")
    add_link_input(mur)
    mur.add_argument("--p", type=int, default=None, help="period (>= 2)")
    mur.add_argument("--format", choices=("text", "report"), default=None)

    chk = sub.add_parser("check", help="decide the norm obstruction")
    add_link_input(chk, poly_too=True)
    chk.add_argument("--p", type=int, default=None)
    chk.add_argument("--max-coeff", type=int, default=None)
    chk.add_argument("--max-tdeg", type=int, default=None)
    chk.add_argument("--budget", type=int, default=None)
    chk.add_argument("--format", choices=("text", "report"), default=None)
    chk.add_argument("--figures", default=None, help="directory for summary figures")

    rea = sub.add_parser("realize", help="expand a witness a into a * conj(a)")
    rea.add_argument("--a", required=True, help="witness polynomial in g and t")
    rea.add_argument("--p", type=int, default=None)

    bat = sub.add_parser("batch", help="screen a manifest of inputs")
    bat.add_argument("manifest", help="file with `mode | p | payload` lines")
    bat.add_argument("--max-coeff", type=int, default=None)
    bat.add_argument("--max-tdeg", type=int, default=None)
    bat.add_argument("--budget", type=int, default=None)
    bat.add_argument("--jobs", type=int, default=None, help="parallel workers (default 1)")
    bat.add_argument("--figures", default=None, help="directory for summary figures")
    return top


def _merged(args, cfg, key, default=None):
    val = getattr(args, key, None)
    if val is not None:
        return val
    if key in cfg:
        return cfg[key]
    return default


def _bounds_from(args, cfg) -> SearchBounds:
    return SearchBounds(
        max_abs_coeff=_merged(args, cfg, "max_coeff", 3),
        max_t_degree=_merged(args, cfg, "max_tdeg", None),
        budget=_merged(args, cfg, "budget", 10_000_000),
    )


def _check_p(p) -> int:
    if p is None or p < 2:
        raise _CliError(EXIT_BAD_P, f"invalid period p={p}; need an integer >= 2")
    return p


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_link(args, cfg):
    """Returns (kind, text, presentation)."""
    braid = getattr(args, "braid", None)
    pres_file = getattr(args, "presentation", None)
    if braid and pres_file:
        raise _CliError(EXIT_PARSE, "give either --braid or --presentation, not both")
    if braid:
        b = parse_braid(braid)
        return "braid", braid, braid_to_presentation(b), analyze_closure(b)
    if pres_file:
        try:
            with open(pres_file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _CliError(EXIT_PARSE, f"cannot read {pres_file}: {exc}") from exc
        return "presentation", text, parse_presentation(text), None
    raise _CliError(EXIT_PARSE, "an input is required (--braid or --presentation)")


def _cmd_alex(args, cfg) -> int:
    kind, text, pres, info = _load_link(args, cfg)
    if info is not None and info.linking_number == 0:
        print("warning: linking number 0: outside the nontrivial-linking hypothesis",
              file=sys.stderr)
    delta = alexander_polynomial(pres, _merged(args, cfg, "drop_relator"))
    if _merged(args, cfg, "format", "text") == "report":
        print(f"input_kind: {kind}")
        print(f"input: {text if kind == 'braid' else args.presentation}")
        if info is not None:
            print(f"linking_number: {info.linking_number}")
        print(f"delta: {format_poly2(delta)}")
    else:
        print(format_poly2(delta))
    return 0


def _cmd_murasugi(args, cfg) -> int:
    p = _check_p(_merged(args, cfg, "p"))
    kind, text, pres, info = _load_link(args, cfg)
    if info is not None and info.linking_number == 0:
        print("warning: linking number 0: outside the nontrivial-linking hypothesis",
              file=sys.stderr)
    delta = alexander_polynomial(pres, _merged(args, cfg, "drop_relator"))
    elem = project(delta, p).canonical()
    if _merged(args, cfg, "format", "text") == "report":
        print(f"input_kind: {kind}")
        print(f"input: {text if kind == 'braid' else args.presentation}")
        print(f"p: {p}")
        if info is not None:
            print(f"linking_number: {info.linking_number}")
        print(f"delta: {format_poly2(delta)}")
        print(f"murasugi: {format_group_elem(elem)}")
        print("augment: " + ",".join(str(v) for v in elem.augment()))
    else:
        print(format_group_elem(elem))
        print(f"augment: {','.join(str(v) for v in elem.augment())}", file=sys.stderr)
    return 0


def _check_input_of(args) -> tuple[str, str]:
    given = [(k, getattr(args, k, None)) for k in ("braid", "presentation", "poly")]
    given = [(k, v) for k, v in given if v]
    if len(given) != 1:
        raise _CliError(EXIT_PARSE, "check needs exactly one of --braid/--presentation/--poly")
    kind, value = given[0]
    if kind == "presentation":
        try:
            with open(value, encoding="utf-8") as fh:
                return kind, fh.read()
        except OSError as exc:
            raise _CliError(EXIT_PARSE, f"cannot read {value}: {exc}") from exc
    return kind, value


def _cmd_check(args, cfg) -> int:
    p = _check_p(_merged(args, cfg, "p"))
    kind, text = _check_input_of(args)
    bounds = _bounds_from(args, cfg)
    rep = build_check_report(kind, text, p, bounds, _merged(args, cfg, "drop_relator"))
    fmt = _merged(args, cfg, "format", "text")
    if fmt == "report":
        sys.stdout.write(emit_report(rep))
    else:
        for warning in rep.warnings:
            print(f"warning: {warning}", file=sys.stderr)
        print(f"murasugi: {rep.murasugi}")
        print(f"verdict: {rep.verdict}" + (f" (witness {rep.witness})" if rep.witness else "")
              + (f" ({rep.failed_check}: {rep.evidence})" if rep.failed_check else ""))
    figures = _merged(args, cfg, "figures")
    if figures:
        from .plots import render_report_figure

        for path in render_report_figure(rep, figures):
            print(f"figure: {path}", file=sys.stderr)
    return VERDICT_EXIT[rep.verdict]


def _cmd_realize(args, cfg) -> int:
    p = _check_p(_merged(args, cfg, "p"))
    a = parse_group_elem(args.a, p)
    try:
        product = realize(a)
    except ValueError as exc:
        raise _CliError(EXIT_AUGMENTATION, str(exc)) from exc
    print(format_group_elem(product))
    return 0


def _batch_line(index: int, line: str, bounds: SearchBounds):
    parts = [part.strip() for part in line.split("|")]
    if len(parts) != 3:
        return index, None, f"line {index + 1}: expected `mode | p | payload`"
    mode, p_text, payload = parts
    if mode not in ("braid", "poly", "presentation"):
        return index, None, f"line {index + 1}: unknown mode {mode!r}"
    try:
        p = int(p_text)
    except ValueError:
        return index, None, f"line {index + 1}: bad p {p_text!r}"
    try:
        if mode == "presentation":
            with open(payload, encoding="utf-8") as fh:
                payload = fh.read()
        rep = build_check_report(mode, payload, p, bounds)
        return index, rep, None
    except Exception as exc:  # per-line errors are recorded, not fatal
        return index, None, f"line {index + 1}: {exc}"


def _cmd_batch(args, cfg) -> int:
    try:
        with open(args.manifest, encoding="utf-8") as fh:
            raw_lines = fh.read().splitlines()
    except OSError as exc:
        raise _CliError(EXIT_PARSE, f"cannot read {args.manifest}: {exc}") from exc
    bounds = _bounds_from(args, cfg)
    jobs = _merged(args, cfg, "jobs", 1)
    work = [
        (i, line)
        for i, line in enumerate(raw_lines)
        if line.strip() and not line.strip().startswith("#")
    ]
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda iw: _batch_line(iw[0], iw[1], bounds), work))
    else:
        results = [_batch_line(i, line, bounds) for i, line in work]
    results.sort(key=lambda r: r[0])

    counts = {"norm": 0, "not-norm": 0, "inconclusive": 0, "error": 0}
    chunks = []
    reports = []
    for index, rep, error in results:
        if rep is None:
            counts["error"] += 1
            chunks.append(f"error: {error}\n")
        else:
            counts[rep.verdict] += 1
            reports.append(rep)
            chunks.append(emit_report(rep))
    summary = (
        f"summary: norm={counts['norm']} not-norm={counts['not-norm']} "
        f"inconclusive={counts['inconclusive']} error={counts['error']}\n"
    )
    chunks.append(summary)
    sys.stdout.write(emit_stream(chunks))
    figures = _merged(args, cfg, "figures")
    if figures:
        from .plots import render_batch_figures

        for path in render_batch_figures(reports, counts, figures):
            print(f"figure: {path}", file=sys.stderr)
    return 0


_COMMANDS = {
    "alex": _cmd_alex,
    "murasugi": _cmd_murasugi,
    "check": _cmd_check,
    "realize": _cmd_realize,
    "batch": _cmd_batch,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = {}
        config_path = args.config or (
            "murasugi.toml" if os.path.exists("murasugi.toml") else None
        )
        if config_path:
            cfg = load_config(config_path)
        return _COMMANDS[args.command](args, cfg)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ComponentCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPONENTS
    except (BraidSyntaxError, PresentationError, PolyParseError, PipelineError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        message = str(exc)
        print(f"error: {message}", file=sys.stderr)
        if "period p" in message:
            return EXIT_BAD_P
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
