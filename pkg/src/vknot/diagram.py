"""Virtual knot and link diagrams as signed Gauss codes.

A diagram is a cyclic word per component recording each classical
crossing visit as Over/Under together with the crossing sign.  Virtual
crossings are not stored: the signed Gauss code carries exactly the data
every computation here consumes, and non-planarity surfaces later as the
genus of the associated surface representation.

Grammar (bit-exact):  diagram := component (";" component)*;
component := pass+ | "U";  pass := ("O"|"U") integer ("+"|"-");
whitespace is ignored.  The sign is written on both passes of a crossing
and must agree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import permutations

OVER = "O"
UNDER = "U"


class SmoothingType(Enum):
    """The two planar resolutions of a classical crossing."""

    ALPHA = "A"
    BETA = "B"


class ParseError(ValueError):
    """Gauss-code text violates the grammar."""


class ValidationError(ValueError):
    """Syntactically valid code that does not describe a diagram."""


class UnknownCrossingError(KeyError):
    """Crossing id not present in the diagram."""


@dataclass(frozen=True)
class Pass:
    """One visit of a strand to a classical crossing."""

    crossing: int
    role: str  # OVER or UNDER

    def __str__(self) -> str:
        return f"{self.role}{self.crossing}"


class VirtualLinkDiagram:
    """Immutable virtual link diagram.

    `components` holds the cyclic pass sequences of components that meet
    classical crossings; `free_loops` counts zero-crossing unknot
    components; `signs` maps crossing id -> +1/-1.
    """

    __slots__ = ("components", "signs", "free_loops")

    def __init__(
        self,
        components: tuple[tuple[Pass, ...], ...],
        signs: dict[int, int],
        free_loops: int = 0,
    ):
        object.__setattr__(self, "components", tuple(tuple(c) for c in components))
        object.__setattr__(self, "signs", dict(signs))
        object.__setattr__(self, "free_loops", free_loops)
        self._validate()

    def __setattr__(self, *a):  # immutability guard
        raise AttributeError("VirtualLinkDiagram is immutable")

    def __reduce__(self):  # the guard breaks slot-based pickling
        return (VirtualLinkDiagram, (self.components, self.signs, self.free_loops))

    def _validate(self) -> None:
        seen: dict[int, list[str]] = {}
        for comp in self.components:
            if not comp:
                raise ValidationError("empty component; use the 'U' unknot marker")
            for p in comp:
                if p.role not in (OVER, UNDER):
                    raise ValidationError(f"bad role {p.role!r}")
                seen.setdefault(p.crossing, []).append(p.role)
        if set(seen) != set(self.signs):
            raise ValidationError("crossing ids of passes and signs disagree")
        for cid, roles in seen.items():
            if len(roles) != 2:
                raise ValidationError(f"crossing {cid} appears {len(roles)} times, expected 2")
            if sorted(roles) != [OVER, UNDER]:
                raise ValidationError(f"crossing {cid} needs one Over and one Under pass")
            if self.signs[cid] not in (1, -1):
                raise ValidationError(f"crossing {cid} has invalid sign")
        if self.free_loops < 0:
            raise ValidationError("negative free loop count")

    # -- queries ---------------------------------------------------------

    @property
    def crossing_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.signs))

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    @property
    def n_components(self) -> int:
        return len(self.components) + self.free_loops

    def positions(self, crossing: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """The (component index, position) of the Over pass and the Under pass."""
        over = under = None
        for ci, comp in enumerate(self.components):
            for pi, p in enumerate(comp):
                if p.crossing == crossing:
                    if p.role == OVER:
                        over = (ci, pi)
                    else:
                        under = (ci, pi)
        if over is None or under is None:
            raise UnknownCrossingError(crossing)
        return over, under

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VirtualLinkDiagram)
            and self.components == other.components
            and self.signs == other.signs
            and self.free_loops == other.free_loops
        )

    def __hash__(self) -> int:
        return hash((self.components, tuple(sorted(self.signs.items())), self.free_loops))

    def __repr__(self) -> str:
        return f"VirtualLinkDiagram({format_gauss_code(self)!r})"


_TOKEN = re.compile(r"\s*(?:([OU])(\d+)([+-])|(U)|(;))")


def parse_gauss_code(text: str) -> VirtualLinkDiagram:
    """Parse and validate a signed Gauss code."""
    pos = 0
    components: list[list[Pass]] = [[]]
    free = 0
    marker_in_current = False
    sign_of: dict[int, int] = {}
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected input at {text[pos:].strip()[:10]!r}")
        pos = m.end()
        if m.group(5):  # ';'
            components.append([])
            marker_in_current = False
        elif m.group(4):  # bare 'U' unknot marker
            if components[-1] or marker_in_current:
                raise ParseError("unknot marker 'U' must be a whole component")
            marker_in_current = True
            free += 1
        else:
            if marker_in_current:
                raise ParseError("unknot marker 'U' must be a whole component")
            role, cid_s, sign_s = m.group(1), m.group(2), m.group(3)
            cid = int(cid_s)
            sign = 1 if sign_s == "+" else -1
            if cid in sign_of and sign_of[cid] != sign:
                raise ValidationError(f"crossing {cid}: sign mismatch between its two passes")
            sign_of[cid] = sign
            components[-1].append(Pass(cid, role))
    if not components[-1] and not marker_in_current:
        if len(components) == 1 and free == 0:
            raise ParseError("empty diagram")
        raise ParseError("empty component")
    comps = tuple(tuple(c) for c in components if c)
    used = {p.crossing for comp in comps for p in comp}
    return VirtualLinkDiagram(comps, {c: sign_of[c] for c in used}, free)


def format_gauss_code(d: VirtualLinkDiagram) -> str:
    """Canonical text form; parse(format(d)) == d."""
    parts = []
    for comp in d.components:
        parts.append("".join(f"{p.role}{p.crossing}{'+' if d.signs[p.crossing] > 0 else '-'}" for p in comp))
    parts.extend("U" for _ in range(d.free_loops))
    return ";".join(parts)


# -- elementary moves ----------------------------------------------------


def _replace_crossing(d: VirtualLinkDiagram, cid: int, swap_roles: bool, flip_sign: bool) -> VirtualLinkDiagram:
    if cid not in d.signs:
        raise UnknownCrossingError(cid)
    comps = tuple(
        tuple(
            Pass(p.crossing, (UNDER if p.role == OVER else OVER) if swap_roles and p.crossing == cid else p.role)
            for p in comp
        )
        for comp in d.components
    )
    signs = dict(d.signs)
    if flip_sign:
        signs[cid] = -signs[cid]
    return VirtualLinkDiagram(comps, signs, d.free_loops)


def switch_crossing(d: VirtualLinkDiagram, cid: int) -> VirtualLinkDiagram:
    """Exchange the Over/Under passes of a crossing and negate its sign."""
    return _replace_crossing(d, cid, swap_roles=True, flip_sign=True)


def virtualize_crossing(d: VirtualLinkDiagram, cid: int) -> VirtualLinkDiagram:
    """Replace a crossing by the opposite crossing flanked by virtual crossings.

    On the signed Gauss code this negates the crossing sign and keeps the
    Over/Under roles: the flanking virtual crossings restore strand
    connectivity while mirroring the local embedding.  This encoding is the
    one satisfying the defining identity bracket(K_v) == bracket(K_s).
    """
    return _replace_crossing(d, cid, swap_roles=False, flip_sign=True)


def mirror(d: VirtualLinkDiagram) -> VirtualLinkDiagram:
    """Mirror image: all signs negated, all Over/Under roles exchanged."""
    comps = tuple(
        tuple(Pass(p.crossing, UNDER if p.role == OVER else OVER) for p in comp) for comp in d.components
    )
    return VirtualLinkDiagram(comps, {c: -s for c, s in d.signs.items()}, d.free_loops)


def writhe(d: VirtualLinkDiagram) -> int:
    """Sum of classical crossing signs."""
    return sum(d.signs.values())


def smooth_crossing(d: VirtualLinkDiagram, cid: int, smoothing: SmoothingType) -> VirtualLinkDiagram:
    """Remove a crossing and reconnect the strands for the given smoothing type.

    For a positive crossing the type-Alpha (A) smoothing is the oriented
    reconnection and type-Beta the disoriented one; a negative crossing
    exchanges the two.
    """
    if cid not in d.signs:
        raise UnknownCrossingError(cid)
    oriented = (smoothing == SmoothingType.ALPHA) == (d.signs[cid] > 0)
    (oc, oi), (uc, ui) = d.positions(cid)
    comps = [list(c) for c in d.components]
    free = d.free_loops
    reversed_part: list[Pass] = []
    if oc == uc:
        seq = comps[oc]
        i, j = sorted((oi, ui))
        inner = seq[i + 1 : j]
        outer = seq[j + 1 :] + seq[:i]
        if oriented:
            new = [outer, inner]
        else:
            reversed_part = inner
            new = [outer + list(reversed(inner))]
        del comps[oc]
        for part in new:
            if part:
                comps.append(part)
            else:
                free += 1
    else:
        s1, s2 = comps[oc], comps[uc]
        i, j = oi, ui
        rest2 = s2[j + 1 :] + s2[:j]
        if oriented:
            merged = s1[:i] + rest2 + s1[i + 1 :]
        else:
            reversed_part = rest2
            merged = s1[:i] + list(reversed(rest2)) + s1[i + 1 :]
        for k in sorted((oc, uc), reverse=True):
            del comps[k]
        if merged:
            comps.append(merged)
        else:
            free += 1
    signs = {c: s for c, s in d.signs.items() if c != cid}
    # Reversing a segment reverses the orientation of one strand through
    # every crossing met exactly once inside it, which negates that
    # crossing's sign; crossings met twice keep both strands reversed.
    for c, count in _pass_counts(reversed_part).items():
        if c != cid and count == 1:
            signs[c] = -signs[c]
    return VirtualLinkDiagram(tuple(tuple(c) for c in comps), signs, free)


def _pass_counts(passes: list[Pass]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for p in passes:
        counts[p.crossing] = counts.get(p.crossing, 0) + 1
    return counts


# -- canonical form ------------------------------------------------------


def canonical_code(d: VirtualLinkDiagram, max_components: int = 6) -> str | None:
    """Canonical Gauss code invariant under crossing relabelling, cyclic
    rotation of components, and component reordering.

    Brute-forces component orders and rotations; returns None beyond
    `max_components` pass-bearing components (callers fall back to not
    memoising).
    """
    comps = d.components
    if len(comps) > max_components:
        return None
    best: str | None = None
    for order in permutations(range(len(comps))):
        rotations = [range(len(comps[ci])) for ci in order]
        best = _scan_orders(d, order, rotations, best)
    suffix = ";U" * d.free_loops
    if best is None:
        return "U" + ";U" * (d.free_loops - 1) if d.free_loops else ""
    return best + suffix


def _scan_orders(d, order, rotations, best):
    from itertools import product

    for rots in product(*rotations):
        relabel: dict[int, int] = {}
        parts = []
        for ci, rot in zip(order, rots):
            comp = d.components[ci]
            seq = comp[rot:] + comp[:rot]
            toks = []
            for p in seq:
                if p.crossing not in relabel:
                    relabel[p.crossing] = len(relabel) + 1
                toks.append(f"{p.role}{relabel[p.crossing]}{'+' if d.signs[p.crossing] > 0 else '-'}")
            parts.append("".join(toks))
        cand = ";".join(parts)
        if best is None or cand < best:
            best = cand
    return best
