"""Surface bracket polynomial and non-classicality certification.

A state of an n-crossing diagram, traced on the Carter surface, is a
collection of disjoint simple closed curves.  The surface bracket keeps
the curves that do not bound disks as formal homology-class symbols:

    <(F,K)> = sum over states of A^{c(s)} d^{|s(c)|} [s(c)]

with |s(c)| the number of disk-bounding curves and [s(c)] the multiset
of classes of the rest.  This is the un-reduced convention (a crossingless
unknot contributes d); collapsing every class symbol to d recovers
d * (reduced planar bracket).

Two sufficient criteria certify that no cancellation curve exists, i.e.
that the representation genus is the virtual genus and the diagram is
non-classical and non-trivial: the per-torus intersection criterion and
the mod-2 span criterion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .bracket import StateTables, gray_order
from .diagram import VirtualLinkDiagram, format_gauss_code
from .laurent import LOOP_VALUE, LaurentPoly
from .surface import (
    HomologyClass,
    SurfaceRep,
    build_carter_surface,
    is_disk_bounding,
    loop_homology,
)
from .symplectic import mod2_rank

#: Grouping key of the surface bracket: canonical multiset of nonzero
#: homology classes plus the count of null-homologous essential curves.
CurveClassKey = tuple[tuple[HomologyClass, ...], int]


@dataclass(frozen=True)
class SurfaceState:
    """One smoothing of every crossing, traced on the surface."""

    index: int
    monomial_exp: int  # c(s) = #alpha - #beta
    loops: tuple[tuple[int, ...], ...]  # refined-map dart cycles
    disk_bounding_count: int
    classes: tuple[HomologyClass, ...]  # canonical sorted multiset, nonzero only
    null_essential_count: int

    @property
    def key(self) -> CurveClassKey:
        return (self.classes, self.null_essential_count)

    @property
    def loop_count(self) -> int:
        return self.disk_bounding_count + len(self.classes) + self.null_essential_count


def _state_loops_refined(rep: SurfaceRep, tables: StateTables, state: int) -> list[tuple[int, ...]]:
    """Refined-map dart cycles of one state's curves."""
    refined = rep.refined
    out = []
    for loop in tables.trace(state):
        darts: list[int] = []
        k = len(loop)
        for i, (arc, forward) in enumerate(loop):
            darts.append(2 * arc if forward else 2 * arc + 1)
            arrive = 2 * arc + 1 if forward else 2 * arc
            next_arc, next_fwd = loop[(i + 1) % k]
            depart = 2 * next_arc if next_fwd else 2 * next_arc + 1
            ci, k_arr = refined.position_of[arrive]
            cj, k_dep = refined.position_of[depart]
            if ci != cj:
                raise AssertionError("state loop jumps between crossings")
            darts.append(refined.side_dart(ci, k_arr, k_dep))
        out.append(tuple(darts))
    return out


def _classify_state(rep: SurfaceRep, tables: StateTables, state: int) -> SurfaceState:
    loops = _state_loops_refined(rep, tables, state)
    disks = rep.free_loops
    classes = []
    null_essential = 0
    for loop in loops:
        if is_disk_bounding(rep, loop):
            disks += 1
            continue
        cls = loop_homology(rep, loop)
        if cls.is_zero():
            null_essential += 1
        else:
            classes.append(cls)
    beta = state.bit_count()
    return SurfaceState(
        index=state,
        monomial_exp=tables.n - 2 * beta,
        loops=tuple(loops),
        disk_bounding_count=disks,
        classes=tuple(sorted(classes)),
        null_essential_count=null_essential,
    )


def enumerate_surface_states(rep: SurfaceRep, order: str = "index") -> list[SurfaceState]:
    """All 2^n surface states; `order` is "index" or "gray" (same set)."""
    tables = StateTables(rep.diagram)
    indices = gray_order(tables.n) if order == "gray" else range(1 << tables.n)
    return [_classify_state(rep, tables, s) for s in indices]


@dataclass(frozen=True)
class SurfaceBracket:
    """Curve-class-keyed coefficients of the un-reduced surface bracket."""

    entries: dict[CurveClassKey, LaurentPoly]
    genus: int
    convention: str = "unreduced"

    def collapse(self) -> LaurentPoly:
        """Substitute d for every remaining curve symbol (consistency bridge).

        Equals d * (reduced planar bracket) of the diagram.
        """
        total = LaurentPoly.zero()
        for (classes, essential), coeff in self.entries.items():
            total = total + coeff * LOOP_VALUE ** (len(classes) + essential)
        return total

    def nonzero_classes(self) -> list[HomologyClass]:
        """Distinct nonzero classes over all nonzero-coefficient keys."""
        seen: dict[HomologyClass, None] = {}
        for (classes, _), coeff in self.entries.items():
            if not coeff.is_zero():
                for c in classes:
                    seen.setdefault(c, None)
        return list(seen)

    def to_json(self) -> dict:
        return {
            "convention": self.convention,
            "genus": self.genus,
            "entries": {
                format_curve_key(key): coeff.to_json()
                for key, coeff in sorted(self.entries.items(), key=lambda kv: format_curve_key(kv[0]))
            },
        }


def format_curve_key(key: CurveClassKey) -> str:
    classes, essential = key
    parts = "".join("(" + ",".join(str(x) for x in c.coords) + ")" for c in classes)
    return (parts or "trivial") + f"|essential={essential}"


def _bracket_chunk(payload, start: int, stop: int) -> dict:
    d = payload
    rep = build_carter_surface(d)
    tables = StateTables(d)
    acc: dict[CurveClassKey, dict[int, int]] = {}
    for state in range(start, stop):
        s = _classify_state(rep, tables, state)
        coeff = LaurentPoly.monomial(s.monomial_exp) * LOOP_VALUE**s.disk_bounding_count
        slot = acc.setdefault(s.key, {})
        for e, c in coeff.terms:
            slot[e] = slot.get(e, 0) + c
    return acc


def surface_bracket(rep: SurfaceRep, parallel: int = 1) -> SurfaceBracket:
    """Group all states by curve-class key and sum coefficients."""
    n = rep.diagram.n_crossings
    if parallel > 1 and n >= 6:
        from .parallel import map_state_ranges

        parts = map_state_ranges(_bracket_chunk, rep.diagram, 1 << n, parallel)
    else:
        parts = [_bracket_chunk(rep.diagram, 0, 1 << n)]
    entries: dict[CurveClassKey, LaurentPoly] = {}
    for part in parts:
        for key, terms in part.items():
            entries[key] = entries.get(key, LaurentPoly.zero()) + LaurentPoly(terms)
    entries = {k: v for k, v in entries.items() if not v.is_zero()}
    return SurfaceBracket(entries=entries, genus=rep.genus)


# -- criteria -------------------------------------------------------------


@dataclass(frozen=True)
class CriterionResult:
    name: str
    satisfied: bool
    witnesses: tuple = ()
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "satisfied": self.satisfied,
            "witnesses": [list(w) for w in self.witnesses],
            **{k: v for k, v in sorted(self.detail.items())},
        }


def _basis_transforms(g: int):
    """Symplectic coordinate relabelings tried by the per-torus criterion.

    Torus permutations combined with per-torus (m,l) -> (l,-m) swaps; the
    identity comes first so it is reported whenever it suffices.
    """
    for perm in permutations(range(g)):
        for swaps in range(1 << g):
            yield perm, swaps


def _apply_transform(c: HomologyClass, perm, swaps) -> HomologyClass:
    coords = []
    for k in perm:
        a, b = c.coords[2 * k], c.coords[2 * k + 1]
        if (swaps >> k) & 1:
            a, b = b, -a
        coords.extend((a, b))
    return HomologyClass(tuple(coords))


def per_torus_criterion(sb: SurfaceBracket, genus: int) -> CriterionResult:
    """For every torus summand, two curve classes with crossing projections.

    Satisfied when each k in 1..g has classes c_i, c_j from nonzero keys
    with |a_i b_j - a_j b_i| != 0 in the k-th coordinate pair; sufficient
    for the non-existence of a cancellation curve.
    """
    name = "per_torus"
    if genus < 1:
        raise ValueError("criterion requires genus >= 1")
    classes = sb.nonzero_classes()
    for perm, swaps in _basis_transforms(genus):
        transformed = [_apply_transform(c, perm, swaps) for c in classes]
        witnesses = []
        ok = True
        for k in range(genus):
            found = None
            for i in range(len(transformed)):
                for j in range(i + 1, len(transformed)):
                    ai, bi = transformed[i].coords[2 * k], transformed[i].coords[2 * k + 1]
                    aj, bj = transformed[j].coords[2 * k], transformed[j].coords[2 * k + 1]
                    val = ai * bj - aj * bi
                    if val:
                        found = (k + 1, classes[i].coords, classes[j].coords, val)
                        break
                if found:
                    break
            if found is None:
                ok = False
                break
            witnesses.append(found)
        if ok:
            basis = "standard" if (perm, swaps) == (tuple(range(genus)), 0) else f"perm={perm},swaps={swaps:b}"
            return CriterionResult(name, True, tuple(witnesses), {"basis": basis})
    return CriterionResult(name, False)


def mod2_span_criterion(sb: SurfaceBracket, genus: int) -> CriterionResult:
    """Classes of nonzero keys span H_1(F; Z/2)."""
    if genus < 1:
        raise ValueError("criterion requires genus >= 1")
    classes = sb.nonzero_classes()
    rank = mod2_rank([c.coords for c in classes])
    return CriterionResult("mod2_span", rank == 2 * genus, detail={"rank": rank, "required": 2 * genus})


# -- certificates ---------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Verdict that a diagram is non-classical and non-trivial, or Inconclusive.

    NonClassical(g) certifies that the genus-g representation admits no
    cancellation curve, hence g is the virtual genus and the diagram is
    neither trivial nor classical.  Inconclusive makes no claim: the
    criteria are sufficient, not necessary.
    """

    verdict: str  # "NonClassical" | "Inconclusive"
    genus: int
    criteria: tuple[CriterionResult, ...]
    diagram: str
    convention: str = "unreduced"

    def __str__(self) -> str:
        if self.verdict == "NonClassical":
            return f"NonClassical({self.genus})"
        return "Inconclusive"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "genus": self.genus,
            "criteria": [c.to_json() for c in self.criteria],
            "diagram": self.diagram,
            "convention": self.convention,
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


def certify(d: VirtualLinkDiagram, parallel: int = 1) -> Certificate:
    """Run the full pipeline: surface, surface bracket, both criteria."""
    rep = build_carter_surface(d)
    code = format_gauss_code(d)
    if rep.genus == 0:
        return Certificate("Inconclusive", 0, (), code)
    sb = surface_bracket(rep, parallel=parallel)
    results = (per_torus_criterion(sb, rep.genus), mod2_span_criterion(sb, rep.genus))
    verdict = "NonClassical" if any(r.satisfied for r in results) else "Inconclusive"
    return Certificate(verdict, rep.genus, results, code)


def family_report(n: int) -> Certificate:
    """Certificate for the n-twist member of the modified-Kishino family."""
    from .catalog import catalog_p_family

    return certify(catalog_p_family(n))
