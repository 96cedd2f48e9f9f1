"""Analysis reports: one serializable record per analyzed input."""

from __future__ import annotations

import json
from importlib import resources

from .coloring import is_balanced
from .complex import (
    ComplexError,
    SimplicialComplex,
    codim2_faces,
    format_vertex,
    is_locally_strongly_connected,
    is_strongly_connected,
    manifold_precheck,
    sorted_label,
    sorted_vertices,
)
from .io import digest
from .permgroup import PermutationGroup, classify_symmetric_product, describe
from .polytope import (
    SimplePolytope,
    TheoremViolation,
    coloring_theorem_check,
    cycle_space_check,
)
from .projectivity import odd_subgroup, pi_group, spanning_tree

SCHEMA_VERSION = "1"


def load_schema() -> dict:
    return json.loads(resources.files("pxk.schema").joinpath("report.schema.json").read_text())


def _vertex_list(s) -> list:
    return [format_vertex(v) for v in sorted_vertices(s)]


def group_record(g: PermutationGroup) -> dict:
    part = classify_symmetric_product(g)
    return {
        "order": g.order,
        "generators": [str(p) for p in g.generators],
        "partition": list(part) if part is not None else "not a product",
        "label": describe(g),
    }


def coloring_record(col: dict | None):
    if col is None:
        return None
    return {format_vertex(v): c for v, c in sorted(col.items(), key=lambda kv: format_vertex(kv[0]))}


def analyze_complex(delta: SimplicialComplex, base=None) -> dict:
    """Full report for a complex; ``base`` defaults to the least facet."""
    b = delta.facet_index(base if base is not None else 0)
    sc = is_strongly_connected(delta)
    lsc = is_locally_strongly_connected(delta)
    pre = manifold_precheck(delta)
    rep: dict = {
        "schema_version": SCHEMA_VERSION,
        "kind": "complex",
        "input_digest": digest(delta),
        "dimension": delta.dim,
        "n_facets": len(delta.facets),
        "n_vertices": len(delta.vertices),
        "pure": delta.is_pure,
        "strongly_connected": sc,
        "locally_strongly_connected": lsc,
        "partial_scope": not sc,
        "base_facet": _vertex_list(delta.facets[b]),
        "manifold_precheck": {"passes": pre.passes, "problems": list(pre.problems)},
        "parity_census": None,
        "pi": None,
        "odd_subgroup": None,
        "balanced": None,
        "polytope": None,
    }
    if not delta.is_pure:
        return rep
    faces = codim2_faces(delta)
    rep["parity_census"] = {
        "even": sum(c.parity == "even" for c in faces),
        "odd": sum(c.parity == "odd" for c in faces),
        "non_cycle": sum(not c.is_cycle for c in faces),
    }
    g = pi_group(delta, b)
    tree = spanning_tree(delta, b)
    rep["pi"] = group_record(g)
    rep["pi"]["spanning_tree"] = [[sorted_label(delta.facets[i]), sorted_label(delta.facets[j])]
                                  for i, j in tree.edges()]
    try:
        h = odd_subgroup(delta, b)
    except ComplexError as e:
        rep["odd_subgroup"] = {"order": None, "generators": [], "error": str(e)}
    else:
        rep["odd_subgroup"] = {"order": h.order, "generators": [str(p) for p in h.generators],
                               "error": None}
        if not h.is_subgroup(g):
            raise TheoremViolation("odd-face subgroup is not contained in the full group")
    bal = is_balanced(delta)
    rep["balanced"] = {"balanced": bal.balanced, "method": bal.method,
                       "coloring": coloring_record(bal.coloring)}
    if sc and lsc and bal.balanced != g.is_trivial():
        raise TheoremViolation("balancedness disagrees with triviality of the group")
    return rep


def analyze_polytope(p: SimplePolytope, vertex=None) -> dict:
    v = p.vertices[0] if vertex is None else vertex
    if v not in p.incidence:
        raise ComplexError(f"{v!r} is not a vertex")
    rep = analyze_complex(p.dual, p.incidence[v])
    rep["kind"] = "polytope"
    rep["input_digest"] = digest(p)
    ct = coloring_theorem_check(p)
    n = len(p.facets)
    cs = cycle_space_check(p)
    rep["polytope"] = {
        "dim": p.dim,
        "base_vertex": format_vertex(v),
        "f_vector": list(p.f_vector),
        "even": ct.even,
        "bipartite": ct.bipartite,
        "bipartition": [_vertex_list(s) for s in ct.bipartition] if ct.bipartition else None,
        "balanced_dual": ct.balanced,
        "gamma": ct.gamma,
        "s_bounds": {"lower": n - ct.gamma if ct.gamma is not None else None,
                     "upper": n - p.dim, "tight": ct.gamma_is_dim},
        "cycle_space": {"rank": cs.rank, "expected": cs.expected, "equal": cs.equal},
        "coloring_theorem_agrees": ct.agree,
    }
    return rep


def to_json(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=True) + "\n"


def to_text(rep: dict) -> str:
    po = rep["polytope"]
    if po:
        f = po["f_vector"]
        lines = [f"polytope (dim {po['dim']}): {f[-1]} facets, {f[0]} vertices  "
                 f"[{rep['input_digest'][:19]}]",
                 f"dual complex (dim {rep['dimension']}): {rep['n_facets']} facets"]
    else:
        lines = [f"complex (dim {rep['dimension']}): {rep['n_facets']} facets, "
                 f"{rep['n_vertices']} vertices  [{rep['input_digest'][:19]}]"]
    lines.append(f"strongly connected: {rep['strongly_connected']}, "
                 f"locally: {rep['locally_strongly_connected']}"
                 + ("  (component of base facet only)" if rep["partial_scope"] else ""))
    mp = rep["manifold_precheck"]
    lines.append("manifold precheck: " + ("pass" if mp["passes"] else "fail: " + "; ".join(mp["problems"])))
    lines.append("base facet: {" + ",".join(rep["base_facet"]) + "}")
    if rep["parity_census"]:
        pc = rep["parity_census"]
        lines.append(f"codim-2 faces: {pc['even']} even, {pc['odd']} odd, {pc['non_cycle']} non-cycle")
    if rep["pi"]:
        pi = rep["pi"]
        part = pi["partition"]
        part = part if isinstance(part, str) else "(" + ",".join(map(str, part)) + ")"
        lines.append(f"group of projectivities: order {pi['order']}, {pi['label']}, partition {part}")
        lines.append("  generators: " + (" ".join(pi["generators"]) or "none"))
    if rep["odd_subgroup"]:
        od = rep["odd_subgroup"]
        if od["error"]:
            lines.append(f"odd-face subgroup: unavailable ({od['error']})")
        else:
            lines.append(f"odd-face subgroup: order {od['order']}, generators "
                         + (" ".join(od["generators"]) or "none"))
    if rep["balanced"]:
        bl = rep["balanced"]
        lines.append(f"balanced: {bl['balanced']} (by {bl['method']})")
    if po:
        sb = po["s_bounds"]
        lines.append(f"f-vector: ({','.join(map(str, po['f_vector']))}), even: {po['even']}, "
                     f"bipartite graph: {po['bipartite']}, balanced dual: {po['balanced_dual']}")
        if po["bipartition"]:
            lines.append(f"  bipartition: {len(po['bipartition'][0])} + {len(po['bipartition'][1])}")
        gm = po["gamma"] if po["gamma"] is not None else "unknown (graph too large for exact search)"
        lo = sb["lower"] if sb["lower"] is not None else "?"
        lines.append(f"gamma: {gm}, s-bounds: ({lo},{sb['upper']},"
                     f"{'tight' if sb['tight'] else 'not tight'})")
        cs = po["cycle_space"]
        lines.append(f"cycle space: rank {cs['rank']} of expected {cs['expected']}")
    return "\n".join(lines) + "\n"
