"""Reading and writing complex and polytope files.

Complex files are either one facet per line (whitespace-separated vertex
tokens, ``#`` starts a comment) or JSON ``{"facets": [[...], ...]}``.
Polytope files are JSON ``{"dim": d, "facets": [...], "vertices": {v: [...]}}``.
Tokens that look like integers are read as integers.
"""

from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path

from .complex import ComplexError, SimplicialComplex, build, format_vertex, sorted_vertices
from .polytope import SimplePolytope, load_polytope

_INT = re.compile(r"-?\d+")


def parse_token(tok: str):
    tok = tok.strip()
    if not tok:
        raise ComplexError("empty vertex token")
    if _INT.fullmatch(tok):
        return int(tok)
    if tok.startswith("[") and tok.endswith("]"):
        inner = tok[1:-1]
        return tuple(parse_token(t) for t in _split_top(inner)) if inner else ()
    return tok


def _split_top(s: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "["
        depth -= ch == "]"
        cur += ch
    out.append(cur)
    return out


def _json_token(t):
    if isinstance(t, bool) or t is None or isinstance(t, float):
        raise ComplexError(f"malformed vertex token {t!r}")
    if isinstance(t, list):
        return tuple(_json_token(x) for x in t)
    return t


def _to_json_token(v):
    if isinstance(v, tuple):
        return [_to_json_token(x) for x in v]
    return v


def parse_complex(text: str) -> SimplicialComplex:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ComplexError(f"invalid JSON: {e}") from e
        if not isinstance(data, dict) or not isinstance(data.get("facets"), list):
            raise ComplexError('JSON complex needs a "facets" list')
        return build([[_json_token(t) for t in f] for f in data["facets"]])
    facets = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            facets.append([parse_token(t) for t in line.split()])
    return build(facets)


def parse_polytope(text: str) -> SimplePolytope:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexError(f"invalid JSON: {e}") from e
    for key in ("dim", "vertices"):
        if key not in data:
            raise ComplexError(f'polytope file lacks "{key}"')
    inc = {v: [_json_token(f) for f in fs] for v, fs in data["vertices"].items()}
    return load_polytope(int(data["dim"]), inc, [_json_token(f) for f in data.get("facets", [])])


def parse_any(text: str):
    """Complex or polytope, depending on the presence of a ``vertices`` key."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ComplexError(f"invalid JSON: {e}") from e
        if isinstance(data, dict) and "vertices" in data:
            return parse_polytope(text)
    return parse_complex(text)


def read_any(path) -> SimplicialComplex | SimplePolytope:
    return parse_any(Path(path).read_text(encoding="utf-8"))


def complex_to_dict(delta: SimplicialComplex) -> dict:
    return {"facets": [[_to_json_token(v) for v in sorted_vertices(f)] for f in delta.facets]}


def polytope_to_dict(p: SimplePolytope) -> dict:
    return {
        "dim": p.dim,
        "facets": [_to_json_token(f) for f in p.facets],
        "vertices": {format_vertex(v): [_to_json_token(f) for f in sorted_vertices(p.incidence[v])]
                     for v in p.vertices},
    }


def dumps_complex(delta: SimplicialComplex, fmt: str = "lines") -> str:
    if fmt == "json":
        return json.dumps(complex_to_dict(delta)) + "\n"
    return "".join(" ".join(format_vertex(v) for v in sorted_vertices(f)) + "\n"
                   for f in delta.facets)


def dumps_polytope(p: SimplePolytope) -> str:
    return json.dumps(polytope_to_dict(p), indent=1) + "\n"


def dumps(obj, fmt: str = "lines") -> str:
    if isinstance(obj, SimplePolytope):
        return dumps_polytope(obj)
    return dumps_complex(obj, fmt)


def digest(obj) -> str:
    d = polytope_to_dict(obj) if isinstance(obj, SimplePolytope) else complex_to_dict(obj)
    blob = json.dumps(d, sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()
