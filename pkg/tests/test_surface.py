"""Carter surfaces: combinatorial maps, genus, homology, cutting."""

import pytest

from vknot.analysis import enumerate_surface_states
from vknot.diagram import parse_gauss_code
from vknot.surface import (
    CombinatorialMap,
    HomologyClass,
    build_carter_surface,
    cut_along_loop,
    genus,
    homology_basis,
    intersection_number,
    is_disk_bounding,
    loop_homology,
    project_to_torus,
)
from vknot.symplectic import standard_form

CLASSICAL = [
    "U",
    "O1+U1+",
    "O1+U2+O3+U1+O2+U3+",
    "O1+U2+O3-U4-O2+U1+O4-U3-",
    "O1+U2+;U1+O2+",
    "O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+",
]
VIRTUAL = {
    "O1+O2+U1+U2+": 1,
    "O1+U2-O3+U4-O2-U1+O4-U3+": 2,
    "O1+U2-O5+U6-O3+U4-O2-U1+O6-U5+O4-U3+": 2,
}


def test_combinatorial_map_torus():
    # one vertex, two loops a, b with rotation (a, b, a~, b~): the torus
    m = CombinatorialMap(sigma=[1, 2, 3, 0], alpha=[2, 3, 0, 1])
    assert len(m.vertices) == 1
    assert len(m.edges) == 2
    assert len(m.faces) == 1
    assert m.genus() == 1


def test_combinatorial_map_sphere():
    # one vertex, one loop: the sphere (chi = 1 - 1 + 2)
    m = CombinatorialMap(sigma=[1, 0], alpha=[1, 0])
    assert m.genus() == 0


def test_classical_codes_have_genus_zero():
    for code in CLASSICAL:
        assert genus(parse_gauss_code(code)) == 0, code


def test_virtual_genera():
    for code, g in VIRTUAL.items():
        assert genus(parse_gauss_code(code)) == g, code


def test_refined_map_preserves_genus():
    for code in list(VIRTUAL) + CLASSICAL[1:]:
        rep = build_carter_surface(parse_gauss_code(code))
        assert rep.refined.map.genus() == rep.genus


def test_homology_basis_is_symplectic():
    for code, g in VIRTUAL.items():
        rep = build_carter_surface(parse_gauss_code(code))
        cycles, form, basis = homology_basis(rep)
        assert len(cycles) == 2 * g
        assert basis.genus == g
        assert form.is_unimodular()
        std = standard_form(g)
        for i, ci in enumerate(cycles):
            sym = basis.to_symplectic(rep.homology.cycle_coords(ci))
            for j, cj in enumerate(cycles):
                sym_j = basis.to_symplectic(rep.homology.cycle_coords(cj))
                assert std.pair(sym, sym_j) == form.entries[i][j]


def test_homology_class_canonical_and_order():
    a = HomologyClass.canonical((1, -2))
    b = HomologyClass.canonical((-1, 2))
    assert a == b
    assert a.coords == (1, -2)
    assert not a.is_zero()
    assert HomologyClass((0, 0)).is_zero()
    assert a.genus == 1


def test_intersection_number_standard():
    m = HomologyClass((1, 0, 0, 0))
    l = HomologyClass((0, 1, 0, 0))
    assert intersection_number(m, l) == 1
    assert intersection_number(l, m) == -1
    assert intersection_number(m, m) == 0
    assert project_to_torus(HomologyClass((3, -1, 2, 5)), 2) == (2, 5)


def _loops_of(code: str):
    rep = build_carter_surface(parse_gauss_code(code))
    states = enumerate_surface_states(rep)
    return rep, states


def test_virtual_trefoil_essential_loops():
    rep, states = _loops_of("O1+O2+U1+U2+")
    classes = set()
    for s in states:
        for loop in s.loops:
            if not is_disk_bounding(rep, loop):
                classes.add(loop_homology(rep, loop))
    assert classes  # the genus-1 representation carries essential state curves
    pairs = [c.coords for c in classes]
    assert any(
        abs(a1 * b2 - a2 * b1) == 2
        for a1, b1 in pairs
        for a2, b2 in pairs
    )


def test_cut_along_essential_loop_gives_annulus_pieces():
    rep, states = _loops_of("O1+O2+U1+U2+")
    for s in states:
        for loop in s.loops:
            pieces = cut_along_loop(rep, loop)
            # Euler characteristics of the pieces reassemble the torus
            assert sum(chi for chi, _ in pieces) == 0
            if is_disk_bounding(rep, loop):
                assert sorted(pieces) == [(0, 1), (1, 1)] or (1, 1) in pieces


def test_disk_bounding_on_sphere():
    rep, states = _loops_of("O1+U1+")
    for s in states:
        for loop in s.loops:
            assert is_disk_bounding(rep, loop)


def test_null_homologous_curves_on_kishino():
    rep, states = _loops_of("O1+U2-O3+U4-O2-U1+O4-U3+")
    for s in states:
        for loop in s.loops:
            if is_disk_bounding(rep, loop):
                assert loop_homology(rep, loop).is_zero()
