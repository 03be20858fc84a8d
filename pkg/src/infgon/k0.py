"""Grothendieck group presentations of non-crossing arc families.

The split group on a family is free on its member arcs.  Every almost-split
triangle whose visible arcs all lie in the family folds into a higher-angle
relation; collecting these relation vectors and reducing the quotient by
Smith normal form yields invariant factors, a free rank, and an explicit
class for each generator.

For a finite truncation of the canonical staircase family these relations
are exactly the ones needed to collapse the group to Z.  For an arbitrary
user family the list may omit relations that only become visible in a
larger family, so the computed group surjects onto the true one; reports
for such input are labeled "upper-bound presentation" and never claim more.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .angulation import ArcFamily, canonical_family, validate_noncrossing
from .arcs import Arc, CategoryParams
from .intlinalg import Cokernel, IntMatrix, cokernel
from .quiver import ar_triangle, arrows_from


@dataclass(frozen=True)
class K0Basis:
    """A family viewed as an ordered free basis, with arc -> index lookup."""

    family: ArcFamily

    @cached_property
    def index(self) -> dict[Arc, int]:
        return {a: i for i, a in enumerate(self.family.arcs)}

    @property
    def size(self) -> int:
        return len(self.family.arcs)


@dataclass(frozen=True)
class RelationVector:
    """An integer relation on the basis, sign-normalized for dedup.

    The first nonzero coefficient is positive; a relation and its negation
    generate the same subgroup, so only the normal form is ever stored.
    """

    coefficients: tuple[int, ...]

    @classmethod
    def normalized(cls, coefficients: list[int] | tuple[int, ...]) -> "RelationVector":
        coeffs = tuple(coefficients)
        for x in coeffs:
            if x > 0:
                break
            if x < 0:
                coeffs = tuple(-y for y in coeffs)
                break
        return cls(coeffs)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coefficients)

    def evaluate(self, values: list[int] | tuple[int, ...]) -> int:
        if len(values) != len(self.coefficients):
            raise ValueError("value vector has the wrong length")
        return sum(c * x for c, x in zip(self.coefficients, values))


def ar_relations(params: CategoryParams, basis: K0Basis) -> list[RelationVector]:
    """Relation vectors from almost-split triangles visible in the family.

    Two shapes contribute, both derived from the triangle tau(end) ->
    middle -> end folded into an (n + 3)-angle:

      * end in the family, middle inside the family:
            (1 + (-1)^n) * e_end + (-1)^(n + 1) * sum(e_mid) = 0
      * start in the family, middle (= arrow targets of start) inside:
            (1 + (-1)^n) * e_start - sum(e_mid) = 0

    The start arc of the first shape and the end arc of the second need not
    belong to the family; they are spliced away and never appear in the
    vector.  For odd n the two shapes can emit the same vector, so results
    are deduplicated.  Order: all end-shape relations in generator order,
    then all start-shape relations in generator order.
    """
    g = basis.size
    index = basis.index
    diag = 1 + (-1) ** params.n  # 0 for odd n, 2 for even n
    mid_sign = (-1) ** (params.n + 1)  # +1 for odd n, -1 for even n

    out: list[RelationVector] = []
    seen: set[tuple[int, ...]] = set()

    def emit(vec: list[int]) -> None:
        rel = RelationVector.normalized(vec)
        if not rel.is_zero() and rel.coefficients not in seen:
            seen.add(rel.coefficients)
            out.append(rel)

    for j, end in enumerate(basis.family.arcs):
        middle = ar_triangle(params, end).middle
        if all(m in index for m in middle):
            vec = [0] * g
            vec[j] += diag
            for m in middle:
                vec[index[m]] += mid_sign
            emit(vec)

    for j, start in enumerate(basis.family.arcs):
        middle = arrows_from(params, start)
        if all(m in index for m in middle):
            vec = [0] * g
            vec[j] += diag
            for m in middle:
                vec[index[m]] -= 1
            emit(vec)

    return out


@dataclass(frozen=True)
class K0Presentation:
    """The reduced quotient of the split group by the visible relations."""

    basis: K0Basis
    relations: tuple[RelationVector, ...]
    invariant_factors: tuple[int, ...]
    free_rank: int
    classes: tuple[tuple[int, ...], ...]
    _cokernel: Cokernel = field(repr=False)
    _free_signs: tuple[int, ...] = field(repr=False)

    def class_of(self, a: Arc) -> tuple[int, ...]:
        return self.classes[self.basis.index[a]]

    def project(self, coefficients: list[int] | tuple[int, ...]) -> tuple[int, ...]:
        """Image of an arbitrary integer vector, in the oriented basis."""
        raw = self._cokernel.project(coefficients)
        torsion = len(self.invariant_factors)
        return raw[:torsion] + tuple(
            s * x for s, x in zip(self._free_signs, raw[torsion:])
        )

    def to_json_dict(self, truncation: int | None = None) -> dict:
        classes = {}
        for a, coords in zip(self.basis.family.arcs, self.classes):
            classes[f"[{a.t},{a.u}]"] = list(coords)
        return {
            "n": self.basis.family.params.n,
            "generators": self.basis.size,
            "invariant_factors": list(self.invariant_factors),
            "free_rank": self.free_rank,
            "classes": classes,
            "relations_used": len(self.relations),
            "truncation": truncation,
        }


def k0_presentation(params: CategoryParams, family: ArcFamily) -> K0Presentation:
    """Present the quotient group of a non-crossing family.

    Raises ValueError when the family crosses itself (the construction is
    only meaningful on non-crossing input).  The class map sends every
    relation vector to zero exactly; its free coordinates are oriented so
    that the first generator carrying a nonzero coordinate gets a positive
    one, which pins the sign convention for canonical families.
    """
    if params != family.params:
        raise ValueError(
            f"parameter mismatch: n = {params.n} vs family n = {family.params.n}"
        )
    pair = validate_noncrossing(family)
    if pair is not None:
        a, b = pair
        raise ValueError(
            f"family is not non-crossing: ({a.t}, {a.u}) crosses ({b.t}, {b.u})"
        )
    basis = K0Basis(family)
    relations = ar_relations(params, basis)
    matrix = IntMatrix.from_rows(
        [list(r.coefficients) for r in relations], cols=basis.size
    )
    coker = cokernel(matrix)

    raw_classes = [coker.project(_unit(basis.size, j)) for j in range(basis.size)]
    torsion = len(coker.invariant_factors)
    signs = []
    for slot in range(coker.free_rank):
        sign = 1
        for coords in raw_classes:
            x = coords[torsion + slot]
            if x:
                sign = 1 if x > 0 else -1
                break
        signs.append(sign)
    classes = tuple(
        coords[:torsion]
        + tuple(s * x for s, x in zip(signs, coords[torsion:]))
        for coords in raw_classes
    )
    return K0Presentation(
        basis=basis,
        relations=tuple(relations),
        invariant_factors=coker.invariant_factors,
        free_rank=coker.free_rank,
        classes=classes,
        _cokernel=coker,
        _free_signs=tuple(signs),
    )


def _unit(size: int, j: int) -> list[int]:
    vec = [0] * size
    vec[j] = 1
    return vec


def expected_canonical_class(params: CategoryParams, i: int) -> int:
    """The proven class of the i-th canonical arc when the group is Z.

    Even n: the i-th arc maps to i.  Odd n: arcs of even index map to 0 and
    arcs of odd index 2k + 1 map to (-1)^k.
    """
    if params.n % 2 == 0:
        return i
    if i % 2 == 0:
        return 0
    return (-1) ** ((i - 1) // 2)


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of checking one canonical truncation against the known answer."""

    params: CategoryParams
    truncation: int
    free_rank: int
    invariant_factors: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    relations_used: int
    passed: bool
    first_violation: str | None

    def to_json_dict(self) -> dict:
        fam = canonical_family(self.params, self.truncation)
        return {
            "n": self.params.n,
            "m": self.truncation,
            "passed": self.passed,
            "free_rank": self.free_rank,
            "invariant_factors": list(self.invariant_factors),
            "classes": {
                f"[{a.t},{a.u}]": list(c) for a, c in zip(fam.arcs, self.classes)
            },
            "relations_used": self.relations_used,
            "first_violation": self.first_violation,
        }


def verify_theorem(params: CategoryParams, m: int) -> TheoremReport:
    """Check that the canonical truncation of size m presents Z correctly.

    Expected: free rank 1, no torsion, the first generator at +1, and every
    generator class matching the even/odd formula.  The report carries the
    first violation found, if any; it never raises on a mathematical
    failure.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise ValueError(f"truncation m must be an integer >= 2, got {m!r}")
    family = canonical_family(params, m)
    pres = k0_presentation(params, family)

    violation: str | None = None
    if pres.free_rank != 1:
        violation = f"free rank is {pres.free_rank}, expected 1"
    elif pres.invariant_factors:
        violation = f"unexpected torsion {list(pres.invariant_factors)}"
    elif pres.classes[0] != (1,):
        violation = f"first generator has class {pres.classes[0]}, expected (1,)"
    else:
        for i in range(1, m + 1):
            want = expected_canonical_class(params, i)
            got = pres.classes[i - 1]
            if got != (want,):
                a = family.arcs[i - 1]
                violation = (
                    f"generator {i} = ({a.t}, {a.u}) has class {got[0]}, expected {want}"
                )
                break
    return TheoremReport(
        params=params,
        truncation=m,
        free_rank=pres.free_rank,
        invariant_factors=pres.invariant_factors,
        classes=pres.classes,
        relations_used=len(pres.relations),
        passed=violation is None,
        first_violation=violation,
    )
