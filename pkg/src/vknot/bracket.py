"""Kauffman bracket state sums, writhe normalisation, and the Jones polynomial.

The bracket here is the planar (reduced) one: loops are counted
abstractly from the Gauss code, a crossingless one-component diagram
evaluates to 1, and each further loop contributes d = -A^2 - A^-2.  The
surface-level (un-reduced) convention lives in `vknot.analysis`.
"""

from __future__ import annotations

from .diagram import (
    OVER,
    SmoothingType,
    VirtualLinkDiagram,
    canonical_code,
    smooth_crossing,
    writhe,
)
from .laurent import LOOP_VALUE, LaurentPoly, laurent_divide_exact, try_divide_exact


class StateTables:
    """Flat arrays for fast state-by-state loop tracing.

    Arc ends are numbered 2*arc (tail, leaving a pass) and 2*arc + 1
    (head, arriving at the next pass).  For each crossing the A- and
    B-smoothings are stored as two pairs of arc-end joins.
    """

    def __init__(self, d: VirtualLinkDiagram):
        self.diagram = d
        self.crossings = list(d.crossing_ids)
        self.n = len(self.crossings)
        arc_of: dict[tuple[int, int], int] = {}
        n_arcs = 0
        for ci, comp in enumerate(d.components):
            for k in range(len(comp)):
                arc_of[(ci, k)] = n_arcs
                n_arcs += 1
        self.n_arcs = n_arcs

        def ends(ci: int, pi: int) -> tuple[int, int]:
            # (incoming head end, outgoing tail end) of the pass at (ci, pi)
            length = len(d.components[ci])
            a_in = arc_of[(ci, (pi - 1) % length)]
            a_out = arc_of[(ci, pi)]
            return 2 * a_in + 1, 2 * a_out

        # joins[c] = (A-joins, B-joins), each a 4-tuple (p, q, r, s) meaning p<->q, r<->s
        self.joins: list[tuple[tuple[int, int, int, int], tuple[int, int, int, int]]] = []
        for cid in self.crossings:
            (oc, oi), (uc, ui) = d.positions(cid)
            o_in, o_out = ends(oc, oi)
            u_in, u_out = ends(uc, ui)
            oriented = (o_in, u_out, u_in, o_out)
            disoriented = (o_in, u_in, o_out, u_out)
            if d.signs[cid] > 0:
                self.joins.append((oriented, disoriented))
            else:
                self.joins.append((disoriented, oriented))

    def smoothing_of_state(self, state: int) -> dict[int, SmoothingType]:
        return {
            cid: SmoothingType.BETA if (state >> k) & 1 else SmoothingType.ALPHA
            for k, cid in enumerate(self.crossings)
        }

    def trace(self, state: int) -> list[list[tuple[int, bool]]]:
        """Loops of one state as lists of (arc, forward) traversals.

        Bit k of `state` selects the B-smoothing of the k-th crossing.
        """
        partner = [0] * (2 * self.n_arcs)
        for k in range(self.n):
            p, q, r, s = self.joins[k][(state >> k) & 1]
            partner[p], partner[q] = q, p
            partner[r], partner[s] = s, r
        seen = [False] * (2 * self.n_arcs)
        loops: list[list[tuple[int, bool]]] = []
        for start in range(0, 2 * self.n_arcs, 2):
            if seen[start]:
                continue
            loop: list[tuple[int, bool]] = []
            end = start
            while not seen[end]:
                seen[end] = True
                seen[end ^ 1] = True
                # traverse the arc from this end to its other end
                loop.append((end >> 1, not end & 1))
                end = partner[end ^ 1]
            loops.append(loop)
        return loops

    def loop_count(self, state: int) -> int:
        partner = [0] * (2 * self.n_arcs)
        for k in range(self.n):
            p, q, r, s = self.joins[k][(state >> k) & 1]
            partner[p], partner[q] = q, p
            partner[r], partner[s] = s, r
        seen = bytearray(2 * self.n_arcs)
        count = 0
        for start in range(0, 2 * self.n_arcs, 2):
            if seen[start]:
                continue
            count += 1
            end = start
            while not seen[end]:
                seen[end] = True
                seen[end ^ 1] = True
                end = partner[end ^ 1]
        return count


def gray_order(n: int):
    """State indices in binary-reflected Gray-code order."""
    for i in range(1 << n):
        yield i ^ (i >> 1)


def _d_power(k: int, cache: dict[int, LaurentPoly] = {0: LaurentPoly.one()}) -> LaurentPoly:
    while k not in cache:
        m = max(cache)
        cache[m + 1] = cache[m] * LOOP_VALUE
    return cache[k]


def bracket_partial(d: VirtualLinkDiagram, start: int, stop: int) -> LaurentPoly:
    """State-sum contribution of the state range [start, stop)."""
    tables = StateTables(d)
    n = tables.n
    free = d.free_loops
    acc: dict[int, int] = {}
    for state in range(start, stop):
        beta = state.bit_count()
        c = n - 2 * beta
        loops = tables.loop_count(state) + free
        for e, coef in _d_power(max(loops - 1, 0)).terms:
            k = e + c
            acc[k] = acc.get(k, 0) + coef
    return LaurentPoly(acc)


def kauffman_bracket(d: VirtualLinkDiagram, parallel: int = 1) -> LaurentPoly:
    """Reduced Kauffman bracket: sum over all 2^n smoothings of
    A^(#alpha - #beta) * d^(loops - 1)."""
    n = d.n_crossings
    if n == 0 and d.n_components == 0:
        return LaurentPoly.one()
    if parallel > 1 and n >= 6:
        from .parallel import map_state_ranges

        parts = map_state_ranges(bracket_partial, d, 1 << n, parallel)
        total = LaurentPoly.zero()
        for p in parts:
            total = total + p
        return total
    return bracket_partial(d, 0, 1 << n)


def f_polynomial(d: VirtualLinkDiagram, parallel: int = 1) -> LaurentPoly:
    """Writhe-normalised bracket (-A)^(-3w) * <K>; invariant under all
    generalized Reidemeister moves."""
    w = writhe(d)
    norm = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)
    return norm * kauffman_bracket(d, parallel=parallel)


def jones(d: VirtualLinkDiagram, parallel: int = 1) -> LaurentPoly:
    """Jones polynomial in the bracket variable A; V_K(t) is read off by
    the substitution t = A^-4 (see jones_in_t)."""
    return f_polynomial(d, parallel=parallel)


def jones_in_t(p: LaurentPoly) -> LaurentPoly:
    """Convert an A-variable Jones value to the t variable via t = A^-4.

    Raises ValueError when an exponent is not a multiple of 4 (links and
    many virtual knots need fractional t powers).
    """
    terms = {}
    for e, c in p.terms:
        if e % 4:
            raise ValueError(f"exponent {e} not divisible by 4; no integer t-form")
        terms[-e // 4] = c
    return LaurentPoly(terms)


def jones_divisibility(v_in_t: LaurentPoly) -> LaurentPoly | None:
    """The Laurent polynomial W with 1 - V = W (1-t)(1-t^3), or None.

    Classical knots always admit such a W; failure for a virtual diagram
    is informative output.
    """
    one_minus_v = LaurentPoly.one() - v_in_t
    if one_minus_v.is_zero():
        return LaurentPoly.zero()
    factor = LaurentPoly({0: 1, 1: -1}) * LaurentPoly({0: 1, 3: -1})
    return try_divide_exact(one_minus_v, factor)


def bracket_by_recursion(d: VirtualLinkDiagram, _memo: dict | None = None) -> LaurentPoly:
    """Independent bracket evaluation by skein recursion on one crossing.

    Serves as an oracle for the state sum; memoised on canonical codes.
    """
    memo = _memo if _memo is not None else {}
    key = canonical_code(d)
    if key is not None and key in memo:
        return memo[key]
    if d.n_crossings == 0:
        result = _d_power(max(d.n_components - 1, 0)) if d.n_components else LaurentPoly.one()
    else:
        cid = d.crossing_ids[0]
        a_part = bracket_by_recursion(smooth_crossing(d, cid, SmoothingType.ALPHA), memo)
        b_part = bracket_by_recursion(smooth_crossing(d, cid, SmoothingType.BETA), memo)
        result = a_part.shift(1) + b_part.shift(-1)
    if key is not None:
        memo[key] = result
    return result


def state_monomial_multiset(d: VirtualLinkDiagram) -> dict[int, int]:
    """Multiset {exponent c(s): multiplicity} over all 2^n states."""
    n = d.n_crossings
    out: dict[int, int] = {}
    for state in range(1 << n):
        c = n - 2 * state.bit_count()
        out[c] = out.get(c, 0) + 1
    return out
