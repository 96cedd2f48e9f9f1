"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 an internal consistency check
between independently computed equivalent properties failed.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import builders
from .coloring import is_balanced
from .complex import (
    SimplicialComplex,
    barycentric_subdivision,
    face_dimension_coloring,
    join_with_relabeling,
    sorted_label,
)
from .io import dumps, parse_token, read_any
from .permgroup import PermutationGroup
from .polytope import SimplePolytope, TheoremViolation
from .projectivity import pi_group, projectivity, verify_generation
from .report import analyze_complex, analyze_polytope, coloring_record, to_json, to_text

SEEDED = {"random_pure": 2, "random_sphere": 1}  # builder -> index of the seed parameter
ALIASES = {"c": "cycle", "sb": "simplex_boundary"}
_SOURCE = re.compile(r"(?P<name>[A-Za-z_]+?)(?P<params>\d+(?:,\d+)*)?")


class UsageError(ValueError):
    pass


def build_named(name: str, params: list[int], slow: bool = False):
    name = ALIASES.get(name, name)
    if name == "cell120" and not slow:
        raise UsageError("the 120-cell is gated behind --slow")
    if name in SEEDED and "PXK_SEED" in os.environ:
        i = SEEDED[name]
        if i < len(params):
            params = list(params)
            params[i] = int(os.environ["PXK_SEED"])
    return builders.make(name, *params)


def resolve(src: str, slow: bool = False):
    """A file path, or a builder shorthand such as ``cube3``, ``c3``,
    ``random_pure2,8,5`` or ``dodecahedron-dual``."""
    if Path(src).exists():
        return read_any(src)
    dual = src.endswith("-dual")
    stem = src[:-5] if dual else src
    if stem in builders.NAMES or stem in ALIASES:
        obj = build_named(stem, [], slow)
    else:
        m = _SOURCE.fullmatch(stem)
        if not m:
            raise UsageError(f"no such file or builder: {src}")
        params = [int(x) for x in m["params"].split(",")] if m["params"] else []
        obj = build_named(m["name"], params, slow)
    if dual:
        if not isinstance(obj, SimplePolytope):
            raise UsageError(f"{stem} is not a polytope")
        return obj.dual
    return obj


def parse_facet(text: str):
    text = text.strip()
    if text.startswith("["):
        return [parse_token(str(t)) if not isinstance(t, int) else t for t in json.loads(text)]
    return [parse_token(t) for t in re.split(r"[\s,]+", text) if t]


def _as_complex(obj) -> SimplicialComplex:
    return obj.dual if isinstance(obj, SimplePolytope) else obj


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _render(rep: dict, fmt: str) -> str:
    return to_json(rep) if fmt == "json" else to_text(rep)


def _analyze_one(src: str, base, fmt: str, slow: bool) -> str:
    obj = resolve(src, slow)
    if isinstance(obj, SimplePolytope):
        return _render(analyze_polytope(obj), fmt)
    return _render(analyze_complex(obj, parse_facet(base) if base else None), fmt)


def cmd_analyze(args) -> int:
    if args.jobs > 1 and len(args.files) > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            outs = list(ex.map(_analyze_one, args.files, [args.base] * len(args.files),
                               [args.format] * len(args.files), [args.slow] * len(args.files)))
    else:
        outs = [_analyze_one(f, args.base, args.format, args.slow) for f in args.files]
    sys.stdout.write("".join(outs))
    return 0


def cmd_polytope(args) -> int:
    obj = resolve(args.file, args.slow)
    if not isinstance(obj, SimplePolytope):
        raise UsageError(f"{args.file} is not a polytope")
    v = parse_token(args.vertex) if args.vertex else None
    if v is not None and v not in obj.incidence:
        v = args.vertex
    sys.stdout.write(_render(analyze_polytope(obj, v), args.format))
    return 0


def cmd_color(args) -> int:
    delta = _as_complex(resolve(args.file, args.slow))
    bal = is_balanced(delta)
    rep = {"balanced": bal.balanced, "method": bal.method, "colors": delta.dim + 1,
           "coloring": coloring_record(bal.coloring)}
    if args.format == "json":
        sys.stdout.write(json.dumps(rep, indent=2, sort_keys=True) + "\n")
    else:
        lines = [("balanced" if bal.balanced else "not balanced") + f" (by {bal.method})"]
        if bal.coloring:
            lines += [f"  {v}: {c}" for v, c in rep["coloring"].items()]
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_join(args) -> int:
    a = _as_complex(resolve(args.a, args.slow))
    b = _as_complex(resolve(args.b, args.slow))
    j, _ = join_with_relabeling(a, b)
    if args.analyze:
        sys.stdout.write(_render(analyze_complex(j), args.format))
    else:
        _emit(dumps(j, args.write_format), args.output)
    return 0


def cmd_sd(args) -> int:
    sd = barycentric_subdivision(_as_complex(resolve(args.file, args.slow)))
    if args.coloring:
        rep = coloring_record(face_dimension_coloring(sd))
        _emit(json.dumps(rep, indent=2) + "\n", args.output)
    else:
        _emit(dumps(sd, args.write_format), args.output)
    return 0


def cmd_gen(args) -> int:
    obj = build_named(args.name, args.params, args.slow)
    _emit(dumps(obj, args.write_format), args.output)
    return 0


def cmd_path(args) -> int:
    delta = _as_complex(resolve(args.file, args.slow))
    paths = [[parse_facet(json.dumps(f)) for f in json.loads(p)] for p in args.path]
    rows = []
    for p in paths:
        proj = projectivity(delta, p)
        if proj.source == proj.target:
            rows.append({"path": [sorted_label(f) for f in p], "closed": True,
                         "projectivity": str(proj.as_permutation())})
        else:
            rows.append({"path": [sorted_label(f) for f in p], "closed": False,
                         "projectivity": {str(k): str(v) for k, v in sorted(
                             proj.as_dict().items(), key=lambda kv: str(kv[0]))}})
    out: dict = {"paths": rows}
    if args.verify_generation:
        base = paths[0][0] if paths else (parse_facet(args.base) if args.base else 0)
        g: PermutationGroup = pi_group(delta, base)
        out["verify_generation"] = verify_generation(delta, base, paths)
        out["group_order"] = g.order
    if args.format == "json":
        sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    else:
        for r in rows:
            pj = r["projectivity"]
            if isinstance(pj, dict):
                pj = " ".join(f"{k}->{v}" for k, v in pj.items())
            sys.stdout.write(f"{' '.join(r['path'])}\n  {pj}\n")
        if "verify_generation" in out:
            sys.stdout.write(f"loops and odd faces generate the group (order {out['group_order']}): "
                             f"{out['verify_generation']}\n")
    return 0


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--slow", action="store_true", help="allow the 120-cell")
    writer = argparse.ArgumentParser(add_help=False)
    writer.add_argument("-o", "--output")
    writer.add_argument("--write-format", choices=("lines", "json"), default="lines")

    p = argparse.ArgumentParser(prog="pxk", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("analyze", parents=[common], help="full report for complexes or polytopes")
    s.add_argument("files", nargs="+")
    s.add_argument("--base", help="base facet, e.g. '1 2 4' or '[1,2,4]'")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("polytope", parents=[common], help="report for a simple polytope")
    s.add_argument("file")
    s.add_argument("--vertex")
    s.set_defaults(func=cmd_polytope)

    s = sub.add_parser("color", parents=[common], help="balancedness and a witness coloring")
    s.add_argument("file")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("join", parents=[common, writer], help="join of two complexes")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--analyze", action="store_true")
    s.set_defaults(func=cmd_join)

    s = sub.add_parser("sd", parents=[common, writer], help="barycentric subdivision")
    s.add_argument("file")
    s.add_argument("--coloring", action="store_true", help="print the face-dimension coloring")
    s.set_defaults(func=cmd_sd)

    s = sub.add_parser("gen", parents=[common, writer], help="write a named complex or polytope")
    s.add_argument("name", choices=builders.NAMES + tuple(ALIASES))
    s.add_argument("params", nargs="*", type=int)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("path", parents=[common], help="projectivity along facet paths")
    s.add_argument("file")
    s.add_argument("--path", action="append", required=True,
                   help="JSON list of facets, e.g. '[[1,2,4],[2,4,5]]'; repeatable")
    s.add_argument("--verify-generation", action="store_true")
    s.add_argument("--base")
    s.set_defaults(func=cmd_path)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as e:
        print(f"pxk: consistency check failed: {e}", file=sys.stderr)
        return 2
    except AssertionError as e:
        print(f"pxk: internal assertion failed: {e}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError) as e:
        print(f"pxk: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
