"""Command-line interface.

Every subcommand wraps one library call: read JSON (inline, file, or
stdin), run the operation, write JSON, a text summary, or SVG.  Exit codes
are 0 for success or a passing check, 1 for a mathematical failure (a
verification or certificate that comes back negative), and 2 for input
errors.  Identical invocations produce byte-identical output; the only
environment variable consulted is NO_COLOR, which disables the pass/fail
coloring of text summaries.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .angulation import (
    ArcFamily,
    CANONICAL_TAG,
    canonical_family,
    complete_in_window,
    is_maximal_in_window,
    parse_family,
    validate_noncrossing,
)
from .arcs import Arc, CategoryParams, Window, enumerate_arcs
from .k0 import k0_presentation, verify_theorem
from .quiver import quiver_window
from .render import RenderOptions, arc_diagram_svg, quiver_svg

EXIT_OK = 0
EXIT_MATH_FAIL = 1
EXIT_INPUT = 2


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="infgon",
        description="Arc model of the n-cluster categories of the infinity-gon.",
    )
    groups = parser.add_subparsers(dest="group", metavar="GROUP")
    groups.required = True

    arcs_cmd = groups.add_parser("arcs", help="validate and enumerate admissible arcs")
    arcs_sub = arcs_cmd.add_subparsers(dest="command", metavar="COMMAND")
    arcs_sub.required = True
    p = arcs_sub.add_parser("validate", help="check arcs for normalization and admissibility")
    _add_param_n(p, required=False)
    _add_payload_opts(p)
    _add_format_opt(p)
    p.set_defaults(handler=_cmd_arcs_validate)
    p = arcs_sub.add_parser("enumerate", help="list all admissible arcs inside a window")
    _add_param_n(p, required=True)
    p.add_argument("--window", nargs=2, type=int, required=True, metavar=("LO", "HI"))
    _add_format_opt(p)
    p.set_defaults(handler=_cmd_arcs_enumerate)

    quiver_cmd = groups.add_parser("quiver", help="inspect the translation quiver")
    quiver_sub = quiver_cmd.add_subparsers(dest="command", metavar="COMMAND")
    quiver_sub.required = True
    p = quiver_sub.add_parser("window", help="extract a finite window of one component")
    _add_quiver_opts(p)
    _add_format_opt(p)
    p.set_defaults(handler=_cmd_quiver_window)

    ang_cmd = groups.add_parser("angulation", help="non-crossing families and maximality")
    ang_sub = ang_cmd.add_subparsers(dest="command", metavar="COMMAND")
    ang_sub.required = True
    p = ang_sub.add_parser("check", help="non-crossing and window-maximality certificate")
    _add_param_n(p, required=False)
    _add_payload_opts(p)
    p.add_argument("--window", nargs=2, type=int, metavar=("LO", "HI"))
    _add_format_opt(p)
    p.set_defaults(handler=_cmd_angulation_check)
    p = ang_sub.add_parser("complete", help="greedily extend a family inside a window")
    _add_param_n(p, required=False)
    _add_payload_opts(p)
    p.add_argument("--window", nargs=2, type=int, metavar=("LO", "HI"))
    _add_format_opt(p)
    p.set_defaults(handler=_cmd_angulation_complete)

    family_cmd = groups.add_parser("family", help="built-in arc families")
    family_sub = family_cmd.add_subparsers(dest="command", metavar="COMMAND")
    family_sub.required = True
    p = family_sub.add_parser("canonical", help="the first m arcs of the staircase family")
    _add_param_n(p, required=True)
    p.add_argument("--m", type=int, required=True, help="number of arcs")
    _add_format_opt(p)
    p.set_defaults(handler=_cmd_family_canonical)

    k0_cmd = groups.add_parser("k0", help="Grothendieck group presentations")
    k0_sub = k0_cmd.add_subparsers(dest="command", metavar="COMMAND")
    k0_sub.required = True
    p = k0_sub.add_parser("present", help="present the quotient group of a family")
    _add_param_n(p, required=False)
    _add_payload_opts(p)
    p.add_argument("--canonical", type=int, metavar="M", help="use the canonical family of size M")
    _add_format_opt(p)
    p.set_defaults(handler=_cmd_k0_present)
    p = k0_sub.add_parser("verify", help="check a canonical truncation against the known answer")
    _add_param_n(p, required=True)
    p.add_argument("--m", type=int, required=True, help="truncation size (>= 2)")
    _add_format_opt(p)
    p.set_defaults(handler=_cmd_k0_verify)

    render_cmd = groups.add_parser("render", help="SVG figures")
    render_sub = render_cmd.add_subparsers(dest="command", metavar="COMMAND")
    render_sub.required = True
    p = render_sub.add_parser("arcs", help="draw an arc family over a window")
    _add_param_n(p, required=False)
    _add_payload_opts(p)
    p.add_argument("--canonical", type=int, metavar="M", help="use the canonical family of size M")
    p.add_argument("--window", nargs=2, type=int, required=True, metavar=("LO", "HI"))
    _add_render_opts(p)
    p.set_defaults(handler=_cmd_render_arcs)
    p = render_sub.add_parser("quiver", help="draw a quiver window")
    _add_quiver_opts(p)
    p.add_argument(
        "--highlight-canonical",
        type=int,
        metavar="M",
        help="highlight members of the canonical family of size M",
    )
    _add_render_opts(p)
    p.set_defaults(handler=_cmd_render_quiver)

    return parser


def _add_param_n(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument(
        "-n",
        type=int,
        required=required,
        help="model parameter n >= 1" + ("" if required else " (optional if the input carries it)"),
    )


def _add_payload_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", help="read JSON from a file")
    p.add_argument("--json", metavar="STR", help="inline JSON")


def _add_format_opt(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("-o", "--output", metavar="PATH", help="write to a file instead of stdout")


def _add_quiver_opts(p: argparse.ArgumentParser) -> None:
    _add_param_n(p, required=True)
    p.add_argument("--component", type=int, required=True, help="component index in 0..n-1")
    p.add_argument("--trange", nargs=2, type=int, required=True, metavar=("LO", "HI"))
    p.add_argument("--depth", type=int, required=True, help="largest row to include")
    p.add_argument(
        "--columns",
        nargs=2,
        type=int,
        metavar=("LO", "HI"),
        help="also restrict t+u to this band (diagonal crop)",
    )


def _add_render_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--width", type=int, default=900)
    p.add_argument("--height", type=int, default=360)
    p.add_argument("--no-labels", action="store_true")
    p.add_argument("-o", "--output", metavar="PATH", help="write the SVG to a file")


def _params(args: argparse.Namespace) -> CategoryParams | None:
    return CategoryParams(args.n) if args.n is not None else None


def _payload(args: argparse.Namespace) -> object:
    given = [x for x in (args.input, args.json) if x is not None]
    if len(given) > 1:
        raise ValueError("give at most one of --input and --json")
    if args.json is not None:
        return json.loads(args.json)
    if args.input is not None:
        return json.loads(Path(args.input).read_text(encoding="utf-8"))
    if sys.stdin.isatty():
        raise ValueError("no input: use --input PATH or --json STR (or pipe JSON to stdin)")
    return json.load(sys.stdin)


def _family_from_args(args: argparse.Namespace) -> ArcFamily:
    params = _params(args)
    canonical_m = getattr(args, "canonical", None)
    if canonical_m is not None:
        if args.input is not None or args.json is not None:
            raise ValueError("give either --canonical or explicit input, not both")
        if params is None:
            raise ValueError("--canonical needs -n")
        return canonical_family(params, canonical_m)
    return parse_family(_payload(args), params)


def _window_from_args(args: argparse.Namespace, family: ArcFamily | None = None) -> Window:
    if args.window is not None:
        return Window(args.window[0], args.window[1])
    if family is None or not family.arcs:
        raise ValueError("an explicit --window LO HI is required for this input")
    return Window(min(a.t for a in family.arcs), max(a.u for a in family.arcs))


def _emit(args: argparse.Namespace, text: str) -> None:
    output = getattr(args, "output", None)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_json(args: argparse.Namespace, obj: object) -> None:
    _emit(args, json.dumps(obj, indent=2) + "\n")


def _colored(verdict: bool, word_true: str = "PASS", word_false: str = "FAIL") -> str:
    word = word_true if verdict else word_false
    if os.environ.get("NO_COLOR") is None and sys.stdout.isatty():
        code = "32" if verdict else "31"
        return f"\x1b[{code}m{word}\x1b[0m"
    return word


def _cmd_arcs_validate(args: argparse.Namespace) -> int:
    params = _params(args)
    payload = _payload(args)
    family = parse_family(payload, params)  # raises with a diagnostic on bad arcs
    report = {
        "n": family.params.n,
        "count": len(family.arcs),
        "valid": True,
        "arcs": [a.to_json() for a in family.arcs],
    }
    if args.format == "text":
        _emit(args, f"{len(family.arcs)} arcs, all {family.params.n}-admissible\n")
    else:
        _emit_json(args, report)
    return EXIT_OK


def _cmd_arcs_enumerate(args: argparse.Namespace) -> int:
    params = CategoryParams(args.n)
    window = Window(args.window[0], args.window[1])
    arcs = enumerate_arcs(params, window)
    if args.format == "text":
        lines = [f"({a.t}, {a.u})" for a in arcs]
        _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    else:
        _emit_json(
            args,
            {
                "n": params.n,
                "window": [window.lo, window.hi],
                "count": len(arcs),
                "arcs": [a.to_json() for a in arcs],
            },
        )
    return EXIT_OK


def _quiver_from_args(args: argparse.Namespace):
    params = CategoryParams(args.n)
    t_range = Window(args.trange[0], args.trange[1])
    columns = Window(args.columns[0], args.columns[1]) if args.columns else None
    return quiver_window(params, args.component, t_range, args.depth, columns=columns)


def _cmd_quiver_window(args: argparse.Namespace) -> int:
    qw = _quiver_from_args(args)
    if args.format == "text":
        lines = [f"component {qw.component}: {len(qw.nodes)} nodes, {len(qw.arrows)} arrows"]
        lines += [f"({a.t}, {a.u})" for a in qw.nodes]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, qw.to_json_dict())
    return EXIT_OK


def _cmd_angulation_check(args: argparse.Namespace) -> int:
    family = _family_from_args(args)
    window = _window_from_args(args, family)
    report: dict[str, object] = {
        "n": family.params.n,
        "window": [window.lo, window.hi],
        "certificate": "window-local",
    }
    pair = validate_noncrossing(family)
    if pair is not None:
        report.update(
            {
                "noncrossing": False,
                "crossing_pair": [pair[0].to_json(), pair[1].to_json()],
                "window_maximal": None,
                "witness": None,
            }
        )
        passed = False
    else:
        witness = is_maximal_in_window(family, window)
        report.update(
            {
                "noncrossing": True,
                "crossing_pair": None,
                "window_maximal": witness is None,
                "witness": None if witness is None else witness.to_json(),
            }
        )
        passed = witness is None
    if args.format == "text":
        lines = [f"window-local certificate over [{window.lo}, {window.hi}]"]
        if pair is not None:
            lines.append(f"crossing: ({pair[0].t}, {pair[0].u}) x ({pair[1].t}, {pair[1].u})")
        elif not passed:
            w = report["witness"]
            lines.append(f"not maximal: arc ({w[0]}, {w[1]}) can be added")  # type: ignore[index]
        lines.append(f"result: {_colored(passed)}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, report)
    return EXIT_OK if passed else EXIT_MATH_FAIL


def _cmd_angulation_complete(args: argparse.Namespace) -> int:
    family = _family_from_args(args)
    window = _window_from_args(args, family)
    completed = complete_in_window(family, window)
    if args.format == "text":
        added = len(completed.arcs) - len(family.arcs)
        lines = [f"added {added} arcs inside [{window.lo}, {window.hi}]"]
        lines += [f"({a.t}, {a.u})" for a in completed.arcs]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, completed.to_json_dict())
    return EXIT_OK


def _cmd_family_canonical(args: argparse.Namespace) -> int:
    family = canonical_family(CategoryParams(args.n), args.m)
    if args.format == "text":
        _emit(args, "\n".join(f"({a.t}, {a.u})" for a in family.arcs) + "\n")
    else:
        _emit_json(args, family.to_json_dict())
    return EXIT_OK


def _is_symbolic_canonical(args: argparse.Namespace) -> int | None:
    """Truncation size when the requested family is the canonical one."""
    if getattr(args, "canonical", None) is not None:
        return args.canonical
    if args.json is not None:
        try:
            payload = json.loads(args.json)
        except json.JSONDecodeError:
            return None
        if isinstance(payload, dict) and payload.get("family") == CANONICAL_TAG:
            m = payload.get("m")
            return m if isinstance(m, int) else None
    return None


def _cmd_k0_present(args: argparse.Namespace) -> int:
    truncation = _is_symbolic_canonical(args)
    family = _family_from_args(args)
    pres = k0_presentation(family.params, family)
    report = pres.to_json_dict(truncation=truncation)
    report["label"] = (
        "canonical truncation" if truncation is not None else "upper-bound presentation"
    )
    if args.format == "text":
        lines = [
            f"generators={report['generators']} relations_used={report['relations_used']}",
            f"free_rank={report['free_rank']} torsion={report['invariant_factors']}",
            f"label: {report['label']}",
        ]
        for a, coords in zip(pres.basis.family.arcs, pres.classes):
            lines.append(f"class ({a.t}, {a.u}) -> {list(coords)}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, report)
    return EXIT_OK


def _cmd_k0_verify(args: argparse.Namespace) -> int:
    report = verify_theorem(CategoryParams(args.n), args.m)
    if args.format == "text":
        lines = [
            f"k0 verify: n={args.n} m={args.m}",
            f"free_rank={report.free_rank} torsion={list(report.invariant_factors)} "
            f"relations_used={report.relations_used}",
            "classes=" + str([c[0] if len(c) == 1 else list(c) for c in report.classes]),
        ]
        if report.first_violation:
            lines.append(f"violation: {report.first_violation}")
        lines.append(f"result: {_colored(report.passed)}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit_json(args, report.to_json_dict())
    return EXIT_OK if report.passed else EXIT_MATH_FAIL


def _render_options(args: argparse.Namespace, highlight: tuple[Arc, ...] = ()) -> RenderOptions:
    return RenderOptions(
        width=args.width,
        height=args.height,
        labels=not args.no_labels,
        highlight=highlight,
    )


def _cmd_render_arcs(args: argparse.Namespace) -> int:
    family = _family_from_args(args)
    window = Window(args.window[0], args.window[1])
    svg = arc_diagram_svg(family, window, _render_options(args))
    _emit(args, svg)
    return EXIT_OK


def _cmd_render_quiver(args: argparse.Namespace) -> int:
    qw = _quiver_from_args(args)
    highlight: tuple[Arc, ...] = ()
    if args.highlight_canonical is not None:
        fam = canonical_family(CategoryParams(args.n), args.highlight_canonical)
        node_set = set(qw.nodes)
        highlight = tuple(a for a in fam.arcs if a in node_set)
    svg = quiver_svg(qw, _render_options(args, highlight))
    _emit(args, svg)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
