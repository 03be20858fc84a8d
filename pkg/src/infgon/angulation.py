"""Pairwise non-crossing arc families and window-relative maximality.

A maximal non-crossing family plays the role of a polygon division with
infinitely many marked points.  True maximality quantifies over all
integers, which is undecidable for raw input, so this module works with a
window-local surrogate: a family is certified maximal *inside a window*
when no admissible arc within that window can be added without a crossing.
That certificate is exhaustively checkable and is all the CLI ever claims.

Also here: the canonical staircase family used throughout the tests (its
members alternately widen to the right and to the left), and the end
behaviour vocabulary (fountains vs local finiteness).  Finite families are
always locally finite; the symbolic "canonical" tag is accepted and is
locally finite as well since each integer meets only finitely many of its
members.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arcs import (
    Arc,
    CategoryParams,
    Window,
    crosses,
    enumerate_arcs,
    require_admissible,
)

CANONICAL_TAG = "canonical"


@dataclass(frozen=True)
class ArcFamily:
    """An ordered, duplicate-free collection of admissible arcs.

    Construction validates every member, so a live ArcFamily never holds an
    inadmissible or unnormalized arc.  Order is preserved: it is the
    generator order for group presentations.
    """

    params: CategoryParams
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(self.arcs))
        seen: set[Arc] = set()
        for a in self.arcs:
            require_admissible(self.params, a)
            if a in seen:
                raise ValueError(f"duplicate arc ({a.t}, {a.u}) in family")
            seen.add(a)

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def __contains__(self, a: object) -> bool:
        return a in set(self.arcs)

    def to_json_dict(self) -> dict:
        return {"n": self.params.n, "arcs": [a.to_json() for a in self.arcs]}


def parse_family(payload: object, params: CategoryParams | None = None) -> ArcFamily:
    """Build an ArcFamily from wire-format JSON.

    Accepted shapes: a bare array of [t, u] pairs (needs `params`), an
    object {"n": ..., "arcs": [...]}, or the symbolic form
    {"n": ..., "family": "canonical", "m": ...}.  A parameter mismatch
    between `params` and an embedded "n" is an error, never silently
    resolved.
    """
    if isinstance(payload, list):
        if params is None:
            raise ValueError("bare arc array given but parameter n is unknown")
        return ArcFamily(params, tuple(Arc.from_json(item) for item in payload))
    if not isinstance(payload, dict):
        raise ValueError(f"family must be a JSON array or object, got {payload!r}")

    embedded = payload.get("n")
    if embedded is None:
        if params is None:
            raise ValueError("family object is missing field 'n' and no -n flag was given")
        n = params.n
    else:
        if isinstance(embedded, bool) or not isinstance(embedded, int):
            raise ValueError(f"field 'n' must be an integer, got {embedded!r}")
        if params is not None and params.n != embedded:
            raise ValueError(
                f"parameter mismatch: -n {params.n} vs field 'n' = {embedded}"
            )
        n = embedded
    p = CategoryParams(n)

    if CANONICAL_TAG == payload.get("family"):
        m = payload.get("m")
        if isinstance(m, bool) or not isinstance(m, int):
            raise ValueError(f"symbolic canonical family needs an integer field 'm', got {m!r}")
        return canonical_family(p, m)
    if "family" in payload:
        raise ValueError(f"unknown symbolic family tag {payload['family']!r}")
    if "arcs" not in payload:
        raise ValueError("family object needs an 'arcs' array or a symbolic 'family' tag")
    arcs_field = payload["arcs"]
    if not isinstance(arcs_field, list):
        raise ValueError(f"field 'arcs' must be an array, got {arcs_field!r}")
    return ArcFamily(p, tuple(Arc.from_json(item) for item in arcs_field))


def validate_noncrossing(f: ArcFamily) -> tuple[Arc, Arc] | None:
    """None when the family is pairwise non-crossing, else the first bad pair.

    "First" means lexicographically smallest, each pair ordered internally,
    independent of the family's member order.
    """
    worst: tuple[Arc, Arc] | None = None
    arcs = f.arcs
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if crosses(arcs[i], arcs[j]):
                pair = (min(arcs[i], arcs[j]), max(arcs[i], arcs[j]))
                if worst is None or pair < worst:
                    worst = pair
    return worst


def _require_noncrossing_inside(f: ArcFamily, w: Window) -> None:
    # precondition gate shared by the maximality and completion operations
    for a in f.arcs:
        if not w.contains_arc(a):
            raise ValueError(
                f"arc ({a.t}, {a.u}) lies outside the window [{w.lo}, {w.hi}]"
            )
    pair = validate_noncrossing(f)
    if pair is not None:
        (a, b) = pair
        raise ValueError(
            f"family is not non-crossing: ({a.t}, {a.u}) crosses ({b.t}, {b.u})"
        )


def is_maximal_in_window(f: ArcFamily, w: Window) -> Arc | None:
    """None when no admissible arc inside w can be added, else a witness.

    The witness is the lexicographically smallest addable arc.  This is the
    window-local certificate only; it says nothing about arcs outside w.
    Precondition violations (member outside w, or a crossing inside f)
    raise ValueError instead of returning a verdict.
    """
    _require_noncrossing_inside(f, w)
    members = set(f.arcs)
    for cand in enumerate_arcs(f.params, w):
        if cand in members:
            continue
        if all(not crosses(cand, a) for a in f.arcs):
            return cand
    return None


def complete_in_window(f: ArcFamily, w: Window) -> ArcFamily:
    """Greedily extend f to a family that is maximal inside the window.

    Candidates are tried in (t, u) order and kept when they cross nothing
    accepted so far, so the result is deterministic and idempotent.  The
    input arcs are preserved, in order, at the front.
    """
    _require_noncrossing_inside(f, w)
    kept = list(f.arcs)
    members = set(kept)
    for cand in enumerate_arcs(f.params, w):
        if cand in members:
            continue
        if all(not crosses(cand, a) for a in kept):
            kept.append(cand)
            members.add(cand)
    return ArcFamily(f.params, tuple(kept))


def canonical_family(params: CategoryParams, m: int) -> ArcFamily:
    """The first m arcs of the staircase family.

    Arc 1 is (1, n + 2); arc 2k is (1 - kn, 2 + kn); arc 2k + 1 is
    (1 - kn, 2 + (k + 1)n).  Consecutive members share an endpoint and the
    family is pairwise non-crossing and locally finite for every n.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError(f"family size m must be an integer >= 1, got {m!r}")
    n = params.n
    arcs: list[Arc] = []
    for i in range(1, m + 1):
        k = i // 2
        if i % 2 == 0:
            arcs.append(Arc(1 - k * n, 2 + k * n))
        else:
            arcs.append(Arc(1 - k * n, 2 + (k + 1) * n))
    return ArcFamily(params, tuple(arcs))


class EndKind(str, Enum):
    LOCALLY_FINITE = "locally_finite"
    LEFT_FOUNTAIN = "left_fountain"
    RIGHT_FOUNTAIN = "right_fountain"
    FOUNTAIN = "fountain"


@dataclass(frozen=True)
class EndBehavior:
    """End behaviour verdict; fountain kinds carry their base point."""

    kind: EndKind
    at: int | None = None

    def __post_init__(self) -> None:
        if self.kind is EndKind.LOCALLY_FINITE:
            if self.at is not None:
                raise ValueError("locally finite behaviour has no base point")
        elif self.at is None:
            raise ValueError(f"{self.kind.value} behaviour needs a base point")


def classify_ends(family: ArcFamily | str) -> EndBehavior:
    """End behaviour of a family.

    Every finite family is locally finite (each integer meets finitely many
    arcs).  The symbolic tag "canonical" stands for the full staircase
    family, which is locally finite too: any fixed integer is the left
    endpoint of at most two members and the right endpoint of at most two.
    Other symbolic tags are rejected.
    """
    if isinstance(family, ArcFamily):
        return EndBehavior(EndKind.LOCALLY_FINITE)
    if family == CANONICAL_TAG:
        return EndBehavior(EndKind.LOCALLY_FINITE)
    raise ValueError(f"unknown symbolic family tag {family!r}")
