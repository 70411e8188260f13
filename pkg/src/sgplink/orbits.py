"""Exhaustive ideal enumeration, mixed duality orbits, classification reports.

A normalized relative ideal is a stable boolean window over [0, F(S)] with
offset 0 set, so the set of all of them is finite and can be enumerated by
backtracking with stability propagation. Iterating the two duality maps
(S - . and K(S) - ., each followed by normalization) from a seed yields a
small closed orbit graph, the mixed-theory "dynamical system".
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import contains, semigroup_to_json
from .errors import CapExceeded, EnumerationLimitExceeded
from .ideals import (
    RelativeIdeal,
    format_ideal,
    ideal_to_json,
    normalize,
)
from .linkage import (
    canonical_liaison_class,
    k_dual,
    principal_liaison_class,
    s_dual,
)

STAR = "star"
KDUAL = "kdual"

_OPERATORS = {
    STAR: lambda I: normalize(s_dual(I)),
    KDUAL: lambda I: normalize(k_dual(I)),
}


@dataclass(frozen=True)
class OrbitGraph:
    nodes: tuple  # normalized RelativeIdeals, distinct windows, BFS order
    edges: tuple  # (from_index, to_index, operator_label)
    start: int


@dataclass(frozen=True)
class ClassificationReport:
    semigroup: object  # NumericalSemigroup
    ideal_count: int
    s_reflexive_count: int
    k_reflexive_count: int
    principal_class_histogram: dict  # class size -> count
    canonical_class_histogram: dict
    max_mixed_orbit: int
    max_mixed_orbit_seed: object  # a witness RelativeIdeal


def enumerate_normalized_ideals(S):
    """All stable windows over [0, F(S)] containing offset 0, sorted.

    Backtracks over offsets in increasing order; an offset reachable from
    an already-set offset by a positive member of S is forced.
    """
    F = S.frobenius
    if F < 0:
        return [RelativeIdeal(S, 0, ())]

    results = []
    window = [False] * (F + 1)
    window[0] = True

    def rec(o):
        if o > F:
            results.append(tuple(window))
            return
        forced = any(
            window[o2] and contains(S, o - o2)
            for o2 in range(o)
        )
        if forced:
            window[o] = True
            rec(o + 1)
            window[o] = False
        else:
            window[o] = False
            rec(o + 1)
            window[o] = True
            rec(o + 1)
            window[o] = False

    rec(1)
    results.sort()
    return [RelativeIdeal(S, 0, w) for w in results]


def mixed_orbit(seed, operators=(STAR, KDUAL), cap=10000):
    """Breadth-first closure of the selected duality maps from the seed.

    Nodes are keyed by window (ideals modulo translation); the graph is
    finite since windows over [0, F] are. The cap is a safety valve only.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    ops = [(name, _OPERATORS[name]) for name in (STAR, KDUAL) if name in operators]
    start = normalize(seed)
    nodes = [start]
    index = {start.window: 0}
    edges = []
    queue = [0]
    while queue:
        i = queue.pop(0)
        for name, op in ops:
            target = op(nodes[i])
            j = index.get(target.window)
            if j is None:
                if len(nodes) >= cap:
                    raise CapExceeded("orbit exceeded cap %d" % cap)
                j = len(nodes)
                index[target.window] = j
                nodes.append(target)
                queue.append(j)
            edges.append((i, j, name))
    return OrbitGraph(tuple(nodes), tuple(edges), 0)


def classify(S, limit=20, cap=10000):
    """Run both liaison theories and the mixed orbit over every ideal of S."""
    if S.frobenius > limit:
        raise EnumerationLimitExceeded(
            "F(S) = %d exceeds enumeration limit %d" % (S.frobenius, limit)
        )
    ideals = enumerate_normalized_ideals(S)
    p_hist = Counter()
    c_hist = Counter()
    s_refl = 0
    k_refl = 0
    best_size = 0
    best_seed = None
    for I in ideals:
        p = principal_liaison_class(I)
        c = canonical_liaison_class(I)
        s_refl += p.reflexive
        k_refl += c.reflexive
        p_hist[len(p.representatives)] += 1
        c_hist[len(c.representatives)] += 1
        orbit = mixed_orbit(I, cap=cap)
        if len(orbit.nodes) > best_size:
            best_size = len(orbit.nodes)
            best_seed = I
    return ClassificationReport(
        semigroup=S,
        ideal_count=len(ideals),
        s_reflexive_count=s_refl,
        k_reflexive_count=k_refl,
        principal_class_histogram=dict(sorted(p_hist.items())),
        canonical_class_histogram=dict(sorted(c_hist.items())),
        max_mixed_orbit=best_size,
        max_mixed_orbit_seed=best_seed,
    )


def orbit_to_dot(graph):
    lines = ["digraph orbit {"]
    for i, node in enumerate(graph.nodes):
        shape = ", shape=box" if i == graph.start else ""
        lines.append('  n%d [label="%s"%s];' % (i, format_ideal(node), shape))
    for a, b, label in graph.edges:
        lines.append('  n%d -> n%d [label="%s"];' % (a, b, label))
    lines.append("}")
    return "\n".join(lines)


def orbit_to_json(graph):
    return {
        "nodes": [ideal_to_json(n) for n in graph.nodes],
        "edges": [{"from": a, "to": b, "op": op} for a, b, op in graph.edges],
        "start": graph.start,
    }


def report_to_json(report):
    return {
        "semigroup": semigroup_to_json(report.semigroup),
        "ideal_count": report.ideal_count,
        "s_reflexive_count": report.s_reflexive_count,
        "k_reflexive_count": report.k_reflexive_count,
        "principal_class_histogram": {
            str(k): v for k, v in report.principal_class_histogram.items()
        },
        "canonical_class_histogram": {
            str(k): v for k, v in report.canonical_class_histogram.items()
        },
        "max_mixed_orbit": report.max_mixed_orbit,
        "max_mixed_orbit_seed": (
            ideal_to_json(report.max_mixed_orbit_seed)
            if report.max_mixed_orbit_seed is not None
            else None
        ),
    }


def report_to_text(report):
    S = report.semigroup
    rows = [
        ("semigroup", "<%s>" % ",".join(map(str, S.minimal_generators))),
        ("frobenius", str(S.frobenius)),
        ("ideal count", str(report.ideal_count)),
        ("S-reflexive", str(report.s_reflexive_count)),
        ("K-reflexive", str(report.k_reflexive_count)),
        ("principal class sizes", _fmt_hist(report.principal_class_histogram)),
        ("canonical class sizes", _fmt_hist(report.canonical_class_histogram)),
        ("largest mixed orbit", str(report.max_mixed_orbit)),
        (
            "orbit witness seed",
            format_ideal(report.max_mixed_orbit_seed)
            if report.max_mixed_orbit_seed is not None
            else "-",
        ),
    ]
    width = max(len(k) for k, _ in rows)
    return "\n".join("%-*s  %s" % (width, k, v) for k, v in rows)


def _fmt_hist(hist):
    return ", ".join("size %d: %d" % (k, v) for k, v in sorted(hist.items()))
