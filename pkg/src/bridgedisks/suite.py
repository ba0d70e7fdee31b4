"""End-to-end verification of the class partition and the retraction on finite truncations.

Each check returns a :class:`CheckResult`; failures carry witnesses instead
of raising.  Nothing here reads the clock, so a report depends only on its
parameters.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .classifier import (
    ClassLabel,
    EdgeVerdict,
    Unclassifiable,
    antipodal,
    check_edge,
    claim_instances,
    classify,
    reference_vertex,
    retraction_image,
)
from .complex import (
    ComplexSlice,
    build_complex,
    enumerate_curves,
    enumerate_vertices,
    homology_ranks,
    merge_vertices,
    octahedron,
    twist_orbit,
)
from .curve import finger_move, reference_curve, tighten
from .intersection import geometric_intersection
from .layout import BridgeLayout, build_layout
from .oracle import (
    abelianization_consistent,
    equivariance_suite,
    reference_matrix_agreement,
)
from .tangle import DiskVertex, Side, compression_side

MAX_WITNESSES = 10
REFERENCE_RANGE = (1, 2, 3, 4)
OCTAHEDRON_RANGE = (2, 3, 4)


@dataclass
class CheckResult:
    id: str
    passed: bool
    detail: dict = field(default_factory=dict)
    witnesses: List[dict] = field(default_factory=list)
    unclassifiable: bool = False

    def to_json(self) -> dict:
        out = {"id": self.id, "status": "pass" if self.passed else "fail"}
        if self.detail:
            out["detail"] = self.detail
        if self.witnesses:
            out["witnesses"] = self.witnesses[:MAX_WITNESSES]
            out["witness_count"] = len(self.witnesses)
        return out


@dataclass
class Report:
    n: int
    params: dict
    checks: List[CheckResult]
    counts: dict

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def unclassifiable(self) -> bool:
        return any(c.unclassifiable for c in self.checks)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "params": self.params,
            "checks": [c.to_json() for c in self.checks],
            "counts": self.counts,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"


# ------------------------------------------------------------------ vertex sets


@lru_cache(maxsize=8)
def vertex_set(n: int, max_weight: int, twist_depth: int) -> Tuple[DiskVertex, ...]:
    layout = build_layout(n)
    return tuple(merge_vertices(enumerate_vertices(layout, max_weight), twist_orbit(layout, twist_depth)))


_SLICES: Dict[Tuple[int, int, int, int], ComplexSlice] = {}


def truncated_complex(n: int, max_weight: int, twist_depth: int, dim_cap: int, jobs: int = 1) -> ComplexSlice:
    key = (n, max_weight, twist_depth, dim_cap)
    if key not in _SLICES:
        _SLICES[key] = build_complex(vertex_set(n, max_weight, twist_depth), dim_cap, jobs=jobs)
    return _SLICES[key]


def _label_json(label: ClassLabel) -> list:
    return [label.i, label.side]


# ------------------------------------------------------------------ checks


def check_reference_matrix(ns: Sequence[int] = REFERENCE_RANGE) -> CheckResult:
    """V1: antipodal references meet twice, all other pairs are disjoint, engine = closed form."""
    witnesses = []
    for n in ns:
        layout = build_layout(n)
        for m in reference_matrix_agreement(n):
            witnesses.append(dict(m, n=n))
        for i in range(1, n + 1):
            for s in "+-":
                for j in range(1, n + 1):
                    for t in "+-":
                        got = geometric_intersection(reference_curve(layout, i, s), reference_curve(layout, j, t))
                        want = 2 if (i == j and s != t) else 0
                        if got != want:
                            witnesses.append({"n": n, "pair": [[i, s], [j, t]], "got": got, "want": want})
    return CheckResult("V1", not witnesses, {"n": list(ns)}, witnesses)


def check_reference_labels(ns: Sequence[int] = REFERENCE_RANGE) -> CheckResult:
    """V2: every reference disk lies in its own class."""
    witnesses = []
    for n in ns:
        for i in range(1, n + 1):
            for s in "+-":
                v = reference_vertex(n, ClassLabel(i, s))
                side = compression_side(v.curve)
                try:
                    got = classify(DiskVertex(v.curve, side))
                except Unclassifiable as exc:
                    witnesses.append({"n": n, "ref": [i, s], "error": str(exc)})
                    continue
                if got != ClassLabel(i, s) or side is not Side.of_sign(s):
                    witnesses.append({"n": n, "ref": [i, s], "got": _label_json(got), "side": side.value})
    return CheckResult("V2", not witnesses, {"n": list(ns)}, witnesses)


def check_partition(vertices: Sequence[DiskVertex], seed: int) -> Tuple[CheckResult, Dict[tuple, ClassLabel]]:
    """V3: every vertex gets exactly one label, and an isotopic non-taut copy gets the same one."""
    rng = random.Random(seed)
    labels: Dict[tuple, ClassLabel] = {}
    witnesses = []
    stuck = False
    for v in vertices:
        t = rng.randrange(v.curve.size)
        try:
            lab = classify(v)
        except Unclassifiable as exc:
            witnesses.append({"curve": v.to_json(), "error": str(exc)})
            stuck = True
            continue
        labels[v.key] = lab
        moved = finger_move(v.curve, t)
        if tighten(moved).key != v.key:
            witnesses.append({"curve": v.to_json(), "finger": t, "error": "tighten changed the class"})
            continue
        try:
            again = classify(DiskVertex(moved, compression_side(moved)))
        except Unclassifiable as exc:
            witnesses.append({"curve": v.to_json(), "finger": t, "error": str(exc)})
            stuck = True
            continue
        if again != lab:
            witnesses.append(
                {"curve": v.to_json(), "finger": t, "label": _label_json(lab), "relabel": _label_json(again)}
            )
    histogram: Dict[str, int] = {}
    for lab in labels.values():
        name = f"{lab.i}{lab.side}"
        histogram[name] = histogram.get(name, 0) + 1
    detail = {"vertices": len(vertices), "classes": dict(sorted(histogram.items()))}
    return CheckResult("V3", not witnesses, detail, witnesses, unclassifiable=stuck), labels


def check_no_antipodal_edge(cx: ComplexSlice) -> CheckResult:
    """V4: no edge of the truncated complex joins C_i^+ to C_i^-."""
    witnesses = []
    stuck = False
    for k, l in cx.edges:
        u, v = cx.vertices[k], cx.vertices[l]
        try:
            verdict = check_edge(u, v)
        except Unclassifiable as exc:
            witnesses.append({"edge": [k, l], "error": str(exc)})
            stuck = True
            continue
        if verdict is EdgeVerdict.VIOLATION:
            witnesses.append({"edge": [k, l], "u": u.to_json(), "v": v.to_json()})
    mixed = sum(1 for k, l in cx.edges if cx.vertices[k].side is not cx.vertices[l].side)
    return CheckResult("V4", not witnesses, {"edges": len(cx.edges), "above_below_edges": mixed}, witnesses, stuck)


def _claims_on(vertices: Sequence[DiskVertex]) -> Tuple[Dict[str, int], List[dict]]:
    hits: Dict[str, int] = {}
    witnesses = []
    for v in vertices:
        for inst in claim_instances(v):
            name = f"E{inst.index}->{inst.expected[0]}{inst.expected[1]}"
            hits[name] = hits.get(name, 0) + 1
            if not inst.holds:
                witnesses.append({"curve": v.to_json(), "claim": inst.to_json()})
    return dict(sorted(hits.items())), witnesses


def check_claims(vertices: Sequence[DiskVertex], extra_n: int = 3, extra_depth: int = 3) -> CheckResult:
    """V5: a curve disjoint from the earlier references and inside E_i is the expected reference.

    Run on the suite's own vertex set and on a twist orbit at ``extra_n``.
    """
    own, w1 = _claims_on(vertices)
    orbit = twist_orbit(build_layout(extra_n), extra_depth)
    other, w2 = _claims_on(orbit)
    detail = {"own": own, f"orbit_n{extra_n}_depth{extra_depth}": other, "orbit_vertices": len(orbit)}
    return CheckResult("V5", not (w1 or w2), detail, w1 + w2)


def check_n1_picture(max_weight: int = 12) -> CheckResult:
    """V6: at n = 1 the complex is two points."""
    layout = build_layout(1)
    vs = enumerate_vertices(layout, max_weight)
    cx = build_complex(vs, dim_cap=1)
    betti = homology_ranks(cx).reduced_betti
    meet = geometric_intersection(vs[0].curve, vs[1].curve) if len(vs) == 2 else None
    ok = len(vs) == 2 and meet == 2 and cx.components() == 2 and betti == (1,)
    detail = {
        "max_weight": max_weight,
        "vertices": len(vs),
        "intersection": meet,
        "components": cx.components(),
        "betti": list(betti),
    }
    return CheckResult("V6", ok, detail, [] if ok else [detail])


def check_octahedra(ns: Sequence[int] = OCTAHEDRON_RANGE) -> CheckResult:
    """V7: the reference disks span an (n-1)-sphere, integrally and mod 2."""
    witnesses = []
    detail = {}
    for n in ns:
        cx = octahedron(build_layout(n))
        h = homology_ranks(cx, n - 1)
        sphere = tuple([0] * (n - 1) + [1])
        antipodal_pairs = {
            (k, l)
            for k in range(len(cx.vertices))
            for l in range(k + 1, len(cx.vertices))
            if antipodal(classify(cx.vertices[k]), classify(cx.vertices[l]))
        }
        all_pairs = {(k, l) for k in range(len(cx.vertices)) for l in range(k + 1, len(cx.vertices))}
        top = len(cx.simplices[n - 1]) if cx.dimension >= n - 1 else 0
        ok = (
            top == 2 ** n
            and cx.dimension == n - 1
            and set(cx.edges) == all_pairs - antipodal_pairs
            and h.reduced_betti == sphere
            and h.reduced_betti_mod2 == sphere
            and h.consistent()
            and cx.boundary_squares_vanish()
        )
        detail[str(n)] = {"f_vector": cx.f_vector(), **h.to_json()}
        if not ok:
            witnesses.append({"n": n, **detail[str(n)]})
    return CheckResult("V7", not witnesses, detail, witnesses)


def check_retraction(cx: ComplexSlice, n: int) -> CheckResult:
    """V8: class labels send simplices to simplices, and fix the octahedron."""
    witnesses = []
    stuck = False
    checked = 0
    for k, simplices in enumerate(cx.simplices):
        for s in simplices:
            try:
                labels = sorted({classify(cx.vertices[v]) for v in s})
            except Unclassifiable as exc:
                witnesses.append({"simplex": list(s), "error": str(exc)})
                stuck = True
                continue
            checked += 1
            if any(antipodal(a, b) for a in labels for b in labels):
                witnesses.append({"simplex": list(s), "labels": [_label_json(x) for x in labels]})
    for i in range(1, n + 1):
        for sgn in "+-":
            v = reference_vertex(n, ClassLabel(i, sgn))
            if retraction_image(v).key != v.key:
                witnesses.append({"reference": [i, sgn], "error": "not fixed by the retraction"})
    detail = {"simplices": checked, "f_vector": cx.f_vector(), "truncated": cx.truncated}
    return CheckResult("V8", not witnesses, detail, witnesses, stuck)


def check_oracles(n: int, max_weight: int, vertices: Sequence[DiskVertex], seed: int) -> CheckResult:
    """V9: seeded equivariance trials and abelianized words on every enumerated curve."""
    witnesses = []
    detail = {}
    for m, trials in ((2, 500), (3, 200)):
        res = equivariance_suite(m, trials, seed)
        detail[f"trials_n{m}"] = trials
        for cx in res["counterexamples"]:
            witnesses.append(dict(cx, n=m))
    curves = {c.key: c for c in enumerate_curves(build_layout(n), max_weight)}
    for v in vertices:
        curves.setdefault(v.key, v.curve)
    bad = [c for _, c in sorted(curves.items()) if not abelianization_consistent(c)]
    detail["abelianized_curves"] = len(curves)
    witnesses.extend({"curve": c.to_json(), "error": "abelianization"} for c in bad)
    return CheckResult("V9", not witnesses, detail, witnesses)


def check_determinism(seed: int) -> CheckResult:
    """V10 (in-process part): seeded randomness and vertex ordering replay exactly.

    Byte identity of whole reports across processes and ``--jobs`` values is
    checked from outside by running the command twice.
    """
    first = json.dumps(equivariance_suite(2, 20, seed), sort_keys=True)
    second = json.dumps(equivariance_suite(2, 20, seed), sort_keys=True)
    layout = build_layout(2)
    a = merge_vertices(enumerate_vertices(layout, 6), twist_orbit(layout, 1))
    b = merge_vertices(list(reversed(twist_orbit(layout, 1))), enumerate_vertices(layout, 6))
    ok = first == second and [v.key for v in a] == [v.key for v in b]
    return CheckResult("V10", ok, {}, [] if ok else [{"error": "replay differs"}])


# ------------------------------------------------------------------ the suite


def verify_suite(
    layout: BridgeLayout,
    max_weight: int,
    twist_depth: int,
    seed: int = 0,
    *,
    dim_cap: Optional[int] = None,
    jobs: int = 1,
) -> Report:
    """Run V1-V10 on the truncation fixed by ``max_weight`` and ``twist_depth``."""
    if max_weight < 2 or twist_depth < 0:
        raise ValueError("max_weight must be >= 2 and twist_depth >= 0")
    n = layout.n
    dim_cap = n if dim_cap is None else dim_cap
    if dim_cap < 1:
        raise ValueError("dim_cap must be positive")
    vertices = vertex_set(n, max_weight, twist_depth)
    checks = [check_reference_matrix(), check_reference_labels()]
    v3, labels = check_partition(vertices, seed)
    checks.append(v3)
    cx = truncated_complex(n, max_weight, twist_depth, dim_cap, jobs)
    checks.append(check_no_antipodal_edge(cx))
    checks.append(check_claims(vertices))
    checks.append(check_n1_picture())
    checks.append(check_octahedra())
    checks.append(check_retraction(cx, n))
    checks.append(check_oracles(n, max_weight, vertices, seed))
    checks.append(check_determinism(seed))
    counts = {
        "vertices": len(vertices),
        "above": sum(1 for v in vertices if v.side is Side.ABOVE),
        "below": sum(1 for v in vertices if v.side is Side.BELOW),
        "edges": len(cx.edges),
        "f_vector": cx.f_vector(),
        "labelled": len(labels),
    }
    params = {"max_weight": max_weight, "twist_depth": twist_depth, "seed": seed, "dim_cap": dim_cap}
    return Report(n, params, checks, counts)
