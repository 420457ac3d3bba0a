"""Carter surfaces of virtual diagrams as combinatorial maps.

A diagram's 4-valent graph, thickened using the rotation system at each
crossing and capped along its boundary circles, is a closed orientable
surface in which the diagram embeds.  This module builds that surface as
a combinatorial map (dart permutations), computes its genus, a homology
basis with the integer intersection form, homology classes of embedded
loops, and disk-bounding tests by cutting the surface open.

Conventions fixed here (validated by the classical => genus 0 tests):
counterclockwise dart order at a positive crossing is
(over-in, under-in, over-out, under-out); a negative crossing uses the
mirrored order (over-in, under-out, over-out, under-in).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .diagram import VirtualLinkDiagram
from .symplectic import SkewForm, SymplecticBasis, mod2_rank, symplectic_reduce


class LoopNotOnSurface(ValueError):
    """Dart sequence is not a closed walk on the surface."""


class LoopNotEmbedded(ValueError):
    """Loop repeats an edge or crosses itself; cutting is undefined."""


class BasisMismatch(ValueError):
    """Homology classes from different bases were combined."""


class IndexOutOfRange(IndexError):
    """Torus index outside 1..genus."""


class CombinatorialMap:
    """An orientable surface as dart permutations.

    `sigma` rotates the darts counterclockwise around their vertex,
    `alpha` is the fixed-point-free edge involution.  Vertices, edges and
    faces are the orbits of sigma, alpha and phi = sigma o alpha; each
    connected component contributes 2 - 2*genus to chi = V - E + F.
    """

    __slots__ = ("n_darts", "sigma", "alpha", "_cache")

    def __init__(self, sigma: Sequence[int], alpha: Sequence[int]):
        self.n_darts = len(sigma)
        self.sigma = tuple(sigma)
        self.alpha = tuple(alpha)
        if len(self.alpha) != self.n_darts:
            raise ValueError("sigma and alpha must act on the same darts")
        for d in range(self.n_darts):
            if self.alpha[d] == d or self.alpha[self.alpha[d]] != d:
                raise ValueError("alpha must be a fixed-point-free involution")
        if sorted(self.sigma) != list(range(self.n_darts)):
            raise ValueError("sigma must be a permutation of the darts")
        self._cache: dict = {}

    # -- orbit structure -------------------------------------------------

    def _orbits(self, perm: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n_darts
        out = []
        for start in range(self.n_darts):
            if seen[start]:
                continue
            orbit = []
            d = start
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = perm[d]
            out.append(tuple(orbit))
        return tuple(out)

    @property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        if "vertices" not in self._cache:
            self._cache["vertices"] = self._orbits(self.sigma)
        return self._cache["vertices"]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        if "edges" not in self._cache:
            self._cache["edges"] = tuple(
                (d, self.alpha[d]) for d in range(self.n_darts) if d < self.alpha[d]
            )
        return self._cache["edges"]

    def phi(self, d: int) -> int:
        """Face permutation sigma o alpha."""
        return self.sigma[self.alpha[d]]

    @property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        if "faces" not in self._cache:
            self._cache["faces"] = self._orbits([self.phi(d) for d in range(self.n_darts)])
        return self._cache["faces"]

    @property
    def vertex_of(self) -> tuple[int, ...]:
        if "vertex_of" not in self._cache:
            lut = [0] * self.n_darts
            for vi, orbit in enumerate(self.vertices):
                for d in orbit:
                    lut[d] = vi
            self._cache["vertex_of"] = tuple(lut)
        return self._cache["vertex_of"]

    @property
    def edge_of(self) -> tuple[int, ...]:
        if "edge_of" not in self._cache:
            lut = [0] * self.n_darts
            for ei, (d, e) in enumerate(self.edges):
                lut[d] = lut[e] = ei
            self._cache["edge_of"] = tuple(lut)
        return self._cache["edge_of"]

    @property
    def face_of(self) -> tuple[int, ...]:
        if "face_of" not in self._cache:
            lut = [0] * self.n_darts
            for fi, orbit in enumerate(self.faces):
                for d in orbit:
                    lut[d] = fi
            self._cache["face_of"] = tuple(lut)
        return self._cache["face_of"]

    @property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components as sorted tuples of vertex indices."""
        if "components" not in self._cache:
            parent = list(range(len(self.vertices)))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for d, e in self.edges:
                a, b = find(self.vertex_of[d]), find(self.vertex_of[e])
                if a != b:
                    parent[a] = b
            groups: dict[int, list[int]] = {}
            for v in range(len(self.vertices)):
                groups.setdefault(find(v), []).append(v)
            self._cache["components"] = tuple(tuple(sorted(g)) for g in groups.values())
        return self._cache["components"]

    def genus(self) -> int:
        """Total genus, summed over connected components."""
        total = 0
        for comp in self.components:
            vs = set(comp)
            v = len(vs)
            e = sum(1 for d, _ in self.edges if self.vertex_of[d] in vs)
            f = sum(1 for orbit in self.faces if self.vertex_of[orbit[0]] in vs)
            chi = v - e + f
            if chi % 2:
                raise AssertionError("odd Euler characteristic on an orientable map")
            total += (2 - chi) // 2
        return total

    def to_debug_json(self) -> dict:
        return {
            "darts": self.n_darts,
            "sigma": [list(v) for v in self.vertices],
            "alpha": [list(e) for e in self.edges],
            "faces": [list(f) for f in self.faces],
        }


# -- Carter surface of a diagram -----------------------------------------


def _arc_tables(d: VirtualLinkDiagram):
    """Arc indexing shared with the bracket state tables.

    Arc a of component ci leaves the pass at position a_local and arrives
    at position a_local+1; dart 2a sits at the departure crossing, dart
    2a+1 at the arrival crossing.
    """
    arc_of: dict[tuple[int, int], int] = {}
    n = 0
    for ci, comp in enumerate(d.components):
        for k in range(len(comp)):
            arc_of[(ci, k)] = n
            n += 1
    return arc_of, n


def _crossing_rotations(d: VirtualLinkDiagram, arc_of) -> dict[int, tuple[int, int, int, int]]:
    """Counterclockwise dart 4-tuples per crossing id."""
    rotations = {}
    for cid in d.crossing_ids:
        (oc, oi), (uc, ui) = d.positions(cid)
        o_in = 2 * arc_of[(oc, (oi - 1) % len(d.components[oc]))] + 1
        o_out = 2 * arc_of[(oc, oi)]
        u_in = 2 * arc_of[(uc, (ui - 1) % len(d.components[uc]))] + 1
        u_out = 2 * arc_of[(uc, ui)]
        if d.signs[cid] > 0:
            rotations[cid] = (o_in, u_in, o_out, u_out)
        else:
            rotations[cid] = (o_in, u_out, o_out, u_in)
    return rotations


class SurfaceRep:
    """A diagram together with its Carter surface.

    Zero-crossing unknot components live on their own genus-0 spheres and
    are tracked by `free_loops` rather than by map darts.
    """

    def __init__(self, diagram: VirtualLinkDiagram):
        self.diagram = diagram
        arc_of, n_arcs = _arc_tables(diagram)
        self.arc_of = arc_of
        self.n_arcs = n_arcs
        self.crossing_rotation = _crossing_rotations(diagram, arc_of)
        sigma = list(range(2 * n_arcs))
        for cyc in self.crossing_rotation.values():
            for k in range(4):
                sigma[cyc[k]] = cyc[(k + 1) % 4]
        alpha = [d ^ 1 for d in range(2 * n_arcs)]
        self.map = CombinatorialMap(sigma, alpha)
        self.free_loops = diagram.free_loops
        self.genus = self.map.genus()

    @cached_property
    def refined(self) -> "RefinedMap":
        return RefinedMap(self)

    @cached_property
    def homology(self) -> "MapHomology":
        return MapHomology(self.refined.map)

    def __repr__(self) -> str:
        return f"SurfaceRep(genus={self.genus}, crossings={self.diagram.n_crossings})"


def build_carter_surface(d: VirtualLinkDiagram) -> SurfaceRep:
    """Closed orientable surface representation of a diagram."""
    return SurfaceRep(d)


def genus(obj: "SurfaceRep | VirtualLinkDiagram") -> int:
    """Genus of a surface representation, or of a diagram's Carter surface."""
    if isinstance(obj, VirtualLinkDiagram):
        obj = build_carter_surface(obj)
    return obj.genus


# -- quadrilateral refinement --------------------------------------------


class RefinedMap:
    """The same surface with each 4-valent vertex opened into a quad cell.

    Every crossing vertex becomes four corner vertices joined by four side
    edges bounding a square face.  State loops, which turn at smoothed
    crossings rather than passing through graph vertices, become genuine
    edge cycles of this map: each smoothing arc is one of the four sides.
    The refinement keeps chi (per crossing: +3 vertices, +4 edges, +1
    face), hence represents the same surface.
    """

    def __init__(self, rep: SurfaceRep):
        self.rep = rep
        base = 2 * rep.n_arcs
        crossings = list(rep.diagram.crossing_ids)
        self.crossing_index = {cid: i for i, cid in enumerate(crossings)}
        n_darts = base + 8 * len(crossings)
        sigma = list(range(n_darts))
        alpha = [d ^ 1 if d < base else 0 for d in range(n_darts)]
        # position of each original dart within its crossing rotation
        self.position_of: dict[int, tuple[int, int]] = {}
        for cid in crossings:
            ci = self.crossing_index[cid]
            cyc = rep.crossing_rotation[cid]
            for k in range(4):
                self.position_of[cyc[k]] = (ci, k)
            for k in range(4):
                u = base + 8 * ci + 2 * k  # at corner k, toward corner k+1
                w = u + 1                  # at corner k+1, toward corner k
                alpha[u], alpha[w] = w, u
            for k in range(4):
                # ccw rotation at corner k: outward dart, side to k+1, side to k-1
                d_out = cyc[k]
                to_next = base + 8 * ci + 2 * k
                to_prev = base + 8 * ci + 2 * ((k - 1) % 4) + 1
                sigma[d_out] = to_next
                sigma[to_next] = to_prev
                sigma[to_prev] = d_out
        self.base = base
        self.map = CombinatorialMap(sigma, alpha)
        if self.map.genus() != rep.genus:
            raise AssertionError("refinement changed the surface genus")

    def side_dart(self, ci: int, k_from: int, k_to: int) -> int:
        """The side-edge dart leaving corner k_from toward adjacent corner k_to."""
        if k_to == (k_from + 1) % 4:
            return self.base + 8 * ci + 2 * k_from
        if k_to == (k_from - 1) % 4:
            return self.base + 8 * ci + 2 * k_to + 1
        raise LoopNotOnSurface(f"corners {k_from} and {k_to} are not adjacent")


# -- homology of a combinatorial map -------------------------------------


class MapHomology:
    """Tree-cotree homology of a combinatorial map.

    A spanning tree of the graph is contracted and a spanning tree of the
    dual (the cotree) is deleted, leaving a one-vertex map whose 2g loop
    edges generate H_1.  The cyclic dart order at that single vertex gives
    the intersection form by chord interleaving; capped-face relations
    express deleted edges in the loop-edge basis, so any edge cycle of the
    original map gets coordinates.
    """

    def __init__(self, m: CombinatorialMap):
        self.map = m
        self.loop_edges: list[int] = []          # global generator order
        self._edge_kind: dict[int, str] = {}     # "tree" | "loop" | index into _expr
        self._expr: dict[int, dict[int, int]] = {}  # cotree edge -> coords over loop indices
        blocks: list[list[list[int]]] = []
        for comp in m.components:
            blocks.append(self._process_component(set(comp)))
        dim = len(self.loop_edges)
        rows = [[0] * dim for _ in range(dim)]
        offset = 0
        for block in blocks:
            k = len(block)
            for i in range(k):
                for j in range(k):
                    rows[offset + i][offset + j] = block[i][j]
            offset += k
        self.form = SkewForm.from_rows(rows)
        self.basis: SymplecticBasis | None = symplectic_reduce(self.form) if dim else None
        self.genus = dim // 2
        self._tree_parent_dart: dict[int, int] = getattr(self, "_tree_parent_dart", {})

    # -- construction ----------------------------------------------------

    def _process_component(self, vs: set[int]) -> list[list[int]]:
        m = self.map
        comp_edges = [ei for ei, (d, _) in enumerate(m.edges) if m.vertex_of[d] in vs]

        # spanning tree by BFS over vertices
        if not hasattr(self, "_tree_parent_dart"):
            self._tree_parent_dart = {}
        root = min(vs)
        parent_dart: dict[int, int] = {}  # vertex -> dart pointing from parent to it
        tree: set[int] = set()
        order = [root]
        seen = {root}
        qi = 0
        while qi < len(order):
            v = order[qi]
            qi += 1
            for d in m.vertices[v]:
                w = m.vertex_of[m.alpha[d]]
                if w not in seen:
                    seen.add(w)
                    tree.add(m.edge_of[d])
                    parent_dart[w] = d
                    order.append(w)
        self._tree_parent_dart.update(parent_dart)

        # cotree: BFS spanning tree of the dual over faces, using non-tree edges
        comp_faces = sorted({m.face_of[m.edges[ei][0]] for ei in comp_edges}) or [
            fi for fi, orbit in enumerate(m.faces) if m.vertex_of[orbit[0]] in vs
        ]
        cotree: set[int] = set()
        face_parent: dict[int, int] = {}  # face -> cotree edge to its parent
        face_depth = {comp_faces[0]: 0}
        forder = [comp_faces[0]]
        qi = 0
        adj: dict[int, list[int]] = {}
        for ei in comp_edges:
            if ei in tree:
                continue
            d, e = m.edges[ei]
            adj.setdefault(m.face_of[d], []).append(ei)
            adj.setdefault(m.face_of[e], []).append(ei)
        while qi < len(forder):
            f = forder[qi]
            qi += 1
            for ei in adj.get(f, ()):
                d, e = m.edges[ei]
                g = m.face_of[e] if m.face_of[d] == f else m.face_of[d]
                if g not in face_depth and ei not in cotree:
                    cotree.add(ei)
                    face_parent[g] = ei
                    face_depth[g] = face_depth[f] + 1
                    forder.append(g)

        loops = [ei for ei in comp_edges if ei not in tree and ei not in cotree]
        local_index = {}
        for ei in loops:
            local_index[ei] = len(self.loop_edges)
            self.loop_edges.append(ei)
            self._edge_kind[ei] = "loop"
        for ei in tree:
            self._edge_kind[ei] = "tree"
        for ei in cotree:
            self._edge_kind[ei] = "cotree"

        # eliminate cotree edges via face-boundary relations, deepest faces first
        for f in sorted(face_depth, key=lambda x: -face_depth[x]):
            if f == comp_faces[0]:
                continue
            e_f = face_parent[f]
            boundary: dict[int, int] = {}
            for dart in m.faces[f]:
                ei = m.edge_of[dart]
                s = 1 if dart == min(m.edges[ei]) else -1
                boundary[ei] = boundary.get(ei, 0) + s
            c = boundary.pop(e_f, 0)
            if abs(c) != 1:
                raise AssertionError("cotree edge must appear once in its face boundary")
            coords: dict[int, int] = {}
            for ei, coeff in boundary.items():
                if not coeff:
                    continue
                for k, v in self._edge_coords(ei).items():
                    coords[k] = coords.get(k, 0) + coeff * v
            self._expr[e_f] = {k: -v // c for k, v in coords.items() if v}

        # one-vertex map: contract tree edges, delete cotree edges
        rot = {v: list(m.vertices[v]) for v in vs}
        vert = {d: m.vertex_of[d] for v in vs for d in m.vertices[v]}
        for w in order[1:]:
            d = parent_dart[w]
            p, q = d, m.alpha[d]
            u, v = vert[p], vert[q]
            lu, lv = rot[u], rot[v]
            j = lv.index(q)
            lv2 = lv[j + 1 :] + lv[:j]
            i = lu.index(p)
            rot[u] = lu[:i] + lv2 + lu[i + 1 :]
            del rot[v]
            for dd in rot[u]:
                vert[dd] = u
        (only_vertex,) = rot
        cyc = [d for d in rot[only_vertex] if m.edge_of[d] not in cotree]
        if len(cyc) != 2 * len(loops):
            raise AssertionError("one-vertex reduction dart count mismatch")
        pos = {d: i for i, d in enumerate(cyc)}
        n = len(cyc)

        block = [[0] * len(loops) for _ in range(len(loops))]
        for a in range(len(loops)):
            for b in range(len(loops)):
                if a == b:
                    continue
                pi, qi_ = min(m.edges[loops[a]]), max(m.edges[loops[a]])
                pj, qj = min(m.edges[loops[b]]), max(m.edges[loops[b]])
                span = (pos[pi] - pos[qi_]) % n
                rj_q = (pos[qj] - pos[qi_]) % n
                rj_p = (pos[pj] - pos[qi_]) % n
                q_in = 0 < rj_q < span
                p_in = 0 < rj_p < span
                if q_in and not p_in:
                    block[a][b] = 1
                elif p_in and not q_in:
                    block[a][b] = -1
        return block

    def _edge_coords(self, ei: int) -> dict[int, int]:
        kind = self._edge_kind[ei]
        if kind == "tree":
            return {}
        if kind == "loop":
            return {self.loop_edges.index(ei): 1}
        return self._expr[ei]

    # -- queries ---------------------------------------------------------

    def cycle_coords(self, darts: Iterable[int]) -> tuple[int, ...]:
        """Coordinates of a closed dart walk in the loop-edge basis."""
        m = self.map
        darts = list(darts)
        coords = [0] * len(self.loop_edges)
        prev = darts[-1] if darts else None
        for d in darts:
            if not 0 <= d < m.n_darts:
                raise LoopNotOnSurface(f"dart {d} not on the surface")
            if prev is not None and m.vertex_of[d] != m.vertex_of[m.alpha[prev]]:
                raise LoopNotOnSurface("dart sequence is not a closed walk")
            prev = d
            ei = m.edge_of[d]
            s = 1 if d == min(m.edges[ei]) else -1
            for k, v in self._edge_coords(ei).items():
                coords[k] += s * v
        return tuple(coords)

    def fundamental_cycles(self) -> list[tuple[int, ...]]:
        """One dart cycle per generator: the loop edge closed through the tree."""
        m = self.map
        out = []
        for ei in self.loop_edges:
            p, q = min(m.edges[ei]), max(m.edges[ei])
            u, v = m.vertex_of[p], m.vertex_of[q]
            out.append(tuple(self._tree_path(u) + [p] + [m.alpha[d] for d in reversed(self._tree_path(v))]))
        return out

    def _tree_path(self, v: int) -> list[int]:
        """Darts from the component root down to vertex v along the tree."""
        path = []
        while v in self._tree_parent_dart:
            d = self._tree_parent_dart[v]
            path.append(d)
            v = self.map.vertex_of[d]
        return list(reversed(path))


# -- homology classes -----------------------------------------------------


@dataclass(frozen=True, order=True)
class HomologyClass:
    """An element of H_1 in symplectic coordinates, canonicalized up to sign."""

    coords: tuple[int, ...]

    @classmethod
    def canonical(cls, coords: Sequence[int]) -> "HomologyClass":
        coords = tuple(int(c) for c in coords)
        for c in coords:
            if c:
                if c < 0:
                    coords = tuple(-x for x in coords)
                break
        return cls(coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def genus(self) -> int:
        return len(self.coords) // 2


def homology_basis(rep: SurfaceRep):
    """(fundamental basis cycles, intersection SkewForm, SymplecticBasis)."""
    h = rep.homology
    return h.fundamental_cycles(), h.form, h.basis


def loop_homology(rep: SurfaceRep, loop: Sequence[int]) -> HomologyClass:
    """Symplectic-coordinate homology class of an embedded loop (refined darts)."""
    h = rep.homology
    raw = h.cycle_coords(loop)
    if h.basis is None:
        return HomologyClass(())
    return HomologyClass.canonical(h.basis.to_symplectic(raw))


def intersection_number(c1: HomologyClass, c2: HomologyClass) -> int:
    """Symplectic pairing sum(a_k b'_k - b_k a'_k) in standard coordinates."""
    if len(c1.coords) != len(c2.coords):
        raise BasisMismatch("classes come from different bases")
    total = 0
    for k in range(0, len(c1.coords), 2):
        total += c1.coords[k] * c2.coords[k + 1] - c1.coords[k + 1] * c2.coords[k]
    return total


def project_to_torus(c: HomologyClass, k: int) -> tuple[int, int]:
    """The k-th (meridian, longitude) coordinate pair, 1-based."""
    if not 1 <= k <= c.genus:
        raise IndexOutOfRange(f"torus index {k} outside 1..{c.genus}")
    return c.coords[2 * k - 2], c.coords[2 * k - 1]


# -- cutting --------------------------------------------------------------


def cut_along_loop(rep: SurfaceRep, loop: Sequence[int]) -> list[tuple[int, int]]:
    """Cut the refined surface along an embedded loop of darts.

    Returns (Euler characteristic, boundary-circle count) per resulting
    component.  The loop is a closed dart walk using each edge at most
    once; cutting duplicates its edges, the two copies becoming free
    boundary, and the surface decomposes into the face-connectivity
    components across the remaining edges.
    """
    m = rep.refined.map
    return _cut_map(m, loop)


def _cut_map(m: CombinatorialMap, loop: Sequence[int]) -> list[tuple[int, int]]:
    loop = list(loop)
    if not loop:
        raise LoopNotOnSurface("empty loop")
    prev = loop[-1]
    for d in loop:
        if m.vertex_of[d] != m.vertex_of[m.alpha[prev]]:
            raise LoopNotOnSurface("dart sequence is not a closed walk")
        prev = d
    loop_edges = [m.edge_of[d] for d in loop]
    cut = set(loop_edges)
    if len(cut) != len(loop_edges):
        raise LoopNotEmbedded("loop repeats an edge")

    n_faces = len(m.faces)
    parent = list(range(n_faces))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ei, (d, e) in enumerate(m.edges):
        if ei not in cut:
            a, b = find(m.face_of[d]), find(m.face_of[e])
            if a != b:
                parent[a] = b

    # restrict to faces reachable from the loop (other surface components untouched)
    touched = {find(m.face_of[d]) for d in loop} | {find(m.face_of[m.alpha[d]]) for d in loop}
    pieces = sorted(touched)
    piece_index = {p: i for i, p in enumerate(pieces)}

    faces_in = [0] * len(pieces)
    for fi in range(n_faces):
        r = find(fi)
        if r in piece_index:
            faces_in[piece_index[r]] += 1

    edges_in = [0] * len(pieces)
    for ei, (d, e) in enumerate(m.edges):
        if ei in cut:
            for dart in (d, e):
                r = find(m.face_of[dart])
                edges_in[piece_index[r]] += 1
        else:
            r = find(m.face_of[d])
            if r in piece_index:
                edges_in[piece_index[r]] += 1

    # corners: the sector between dart g and sigma(g) at vertex(g) belongs to
    # the face of sigma(g); adjacent sectors stay glued across non-cut darts.
    cparent = list(range(m.n_darts))

    def cfind(x: int) -> int:
        while cparent[x] != x:
            cparent[x] = cparent[cparent[x]]
            x = cparent[x]
        return x

    for g in range(m.n_darts):
        nxt = m.sigma[g]
        if m.edge_of[nxt] not in cut:
            a, b = cfind(g), cfind(nxt)
            if a != b:
                cparent[a] = b
    corner_class_piece: dict[int, int] = {}
    for g in range(m.n_darts):
        r = find(m.face_of[m.sigma[g]])
        if r in piece_index:
            corner_class_piece[cfind(g)] = piece_index[r]
    verts_in = [0] * len(pieces)
    for pi in corner_class_piece.values():
        verts_in[pi] += 1

    # the two sides of the loop each contribute one boundary circle
    boundaries = [0] * len(pieces)
    left = {find(m.face_of[d]) for d in loop}
    right = {find(m.face_of[m.alpha[d]]) for d in loop}
    if len(left) != 1 or len(right) != 1:
        raise LoopNotEmbedded("loop crosses itself at a vertex")
    boundaries[piece_index[left.pop()]] += 1
    boundaries[piece_index[right.pop()]] += 1

    return [
        (verts_in[i] - edges_in[i] + faces_in[i], boundaries[i]) for i in range(len(pieces))
    ]


def is_disk_bounding(rep: SurfaceRep, loop: Sequence[int]) -> bool:
    """True iff cutting along the loop splits off a disk (chi = 1, one boundary)."""
    m = rep.refined.map
    key = frozenset(m.edge_of[d] for d in loop)
    cache = rep.__dict__.setdefault("_disk_cache", {})
    if key not in cache:
        cache[key] = any(chi == 1 and b == 1 for chi, b in _cut_map(m, loop))
    return cache[key]
