import itertools
import random
from fractions import Fraction

import pytest

from artinsigma import (EvenGraph, boundary_matrices, enumerate_cliques, flag_complex,
                        has_cone_vertex, is_d_acyclic, link, living_subgraph,
                        reduced_homology)
from artinsigma.homology import SimplicialComplex, integer_invariant_factors

from genutil import random_even_fc_graph


# --- independent oracles ----------------------------------------------------

def brute_force_cliques(g: EvenGraph, max_size: int):
    """Power-set filter, independent of the library's incremental search."""
    out = []
    for size in range(max_size + 1):
        for combo in itertools.combinations(g.vertices, size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                out.append(combo)
    return out


def reference_rank(matrix):
    """Plain Gaussian elimination over the rationals."""
    m = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    for j in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][j]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][j]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                c = m[i][j]
                m[i] = [a - c * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


# --- cliques, links, flag complexes ------------------------------------------

def test_enumerate_cliques_triangle():
    g = EvenGraph(["a", "b", "c"], [("a", "b", 2), ("b", "c", 2), ("a", "c", 2)])
    assert len(enumerate_cliques(g, 3)) == 8


def test_enumerate_cliques_edgeless():
    g = EvenGraph(["a", "b", "c", "d"])
    assert enumerate_cliques(g, 2) == ((), ("a",), ("b",), ("c",), ("d",))


def test_enumerate_cliques_complete_graph_matches_brute_force(d4d6):
    g, _ = d4d6
    assert len(enumerate_cliques(g, 4)) == 16
    for max_size in range(5):
        assert sorted(enumerate_cliques(g, max_size)) == sorted(brute_force_cliques(g, max_size))


def test_enumerate_cliques_random_matches_brute_force():
    rng = random.Random(21)
    for _ in range(25):
        g = random_even_fc_graph(rng, max_vertices=6)
        for max_size in (2, 3, len(g.vertices)):
            assert sorted(enumerate_cliques(g, max_size)) == sorted(brute_force_cliques(g, max_size))


def test_link_example1(example1):
    g, chi = example1
    living = living_subgraph(g, chi)
    lk_c = link(g, living, ["c"])
    assert lk_c.vertices == ("a", "d") and lk_c.edges() == (("a", "d"),)
    lk_ab = link(g, living, ["a", "b"])
    assert lk_ab.vertices == ("d",) and lk_ab.num_edges() == 0
    assert link(g, living, []) == living


def test_link_requires_containment(example1):
    g, _ = example1
    other = EvenGraph(["a", "z"], [("a", "z", 2)])
    with pytest.raises(ValueError):
        link(g, other, [])
    with pytest.raises(ValueError):
        link(g, g, ["b", "c"])  # not a clique


def test_flag_complex_square():
    g = EvenGraph(["a", "b", "c", "d"],
                  [("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("a", "d", 2)])
    c = flag_complex(g)
    assert len(c.simplices(0)) == 4 and len(c.simplices(1)) == 4
    assert not c.simplices(2)


def test_flag_complex_complete_graph():
    g = EvenGraph(["a", "b", "c", "d"],
                  [(u, v, 2) for u, v in itertools.combinations("abcd", 2)])
    c = flag_complex(g)
    assert [len(c.simplices(d)) for d in range(4)] == [4, 6, 4, 1]


def test_flag_complex_two_glued_triangles(d4d6):
    # remove the open label-4 edge from the complete graph: the cliques are
    # exactly the subsets avoiding {v, w} together
    g, chi = d4d6
    living = living_subgraph(g, chi, p=2)
    c = flag_complex(living)
    expected = sorted(c for size in range(1, 5)
                      for c in itertools.combinations("vwxy", size)
                      if not {"v", "w"} <= set(c))
    assert sorted(s for d in range(0, 4) for s in c.simplices(d)) == expected
    assert len(c.simplices(2)) == 2  # the triangles vxy and wxy


def test_flag_complex_of_empty_graph_is_empty():
    c = flag_complex(EvenGraph([]))
    assert c.is_empty()
    assert c.chain_rank(-1) == 1 and c.chain_rank(0) == 0


def test_boundary_single_edge():
    c = flag_complex(EvenGraph(["u", "v"], [("u", "v", 2)]))
    d0, d1 = boundary_matrices(c, 1)
    assert d0 == [[1, 1]]
    assert d1 == [[-1], [1]]


def test_boundary_empty_complex():
    c = flag_complex(EvenGraph([]))
    d0, d1 = boundary_matrices(c, 1)
    assert d0 == [[]] and d1 == []


def test_boundary_square_rank():
    g = EvenGraph(["a", "b", "c", "d"],
                  [("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("a", "d", 2)])
    c = flag_complex(g)
    d1 = boundary_matrices(c, 1)[1]
    assert reference_rank(d1) == 3


def test_boundary_composition_vanishes():
    rng = random.Random(22)
    for _ in range(20):
        g = random_even_fc_graph(rng)
        c = flag_complex(g)
        mats = boundary_matrices(c, c.dimension + 1)
        for d in range(1, len(mats)):
            lower, upper = mats[d - 1], mats[d]
            rows = c.chain_rank(d - 2)
            mid = c.chain_rank(d - 1)
            cols = c.chain_rank(d)
            for i in range(rows):
                for j in range(cols):
                    assert sum(lower[i][k] * upper[k][j] for k in range(mid)) == 0


# --- exact homology -----------------------------------------------------------

def test_integer_snf_against_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form

    rng = random.Random(23)
    for _ in range(25):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)]
        ours = integer_invariant_factors(m, nr, nc)
        theirs = smith_normal_form(sympy.Matrix(m))
        diag = [abs(theirs[i, i]) for i in range(min(nr, nc))]
        assert ours == [d for d in diag if d]


def test_integer_snf_divisibility_chain():
    rng = random.Random(24)
    for _ in range(25):
        nr, nc = rng.randint(1, 6), rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        factors = integer_invariant_factors(m, nr, nc)
        assert all(d > 0 for d in factors)
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert len(factors) == reference_rank(m)


def test_homology_square_circle():
    g = EvenGraph(["a", "b", "c", "d"],
                  [("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("a", "d", 2)])
    profile = reduced_homology(flag_complex(g), "Z", 2)
    assert profile.betti_at(0) == 0 and profile.betti_at(1) == 1 and profile.betti_at(2) == 0
    assert not profile.torsion[1]


def test_homology_two_points():
    g = EvenGraph(["a", "b"])
    for coeffs in ("Z", 0, 2, 3):
        profile = reduced_homology(flag_complex(g), coeffs, 1)
        assert profile.betti_at(-1) == 0
        assert profile.betti_at(0) == 1


def test_homology_empty_complex():
    profile = reduced_homology(flag_complex(EvenGraph([])), "Z", 0)
    assert profile.betti_at(-1) == 1 and profile.betti_at(0) == 0


def test_homology_torsion_projective_plane():
    # minimal 6-vertex triangulation; textbook: H0 = 0, H1 = Z/2 reduced
    faces = ["123", "134", "145", "156", "126", "235", "246", "245", "346", "356"]
    vertices = list("123456")
    c = SimplicialComplex(vertices, [tuple(f) for f in faces])
    z = reduced_homology(c, "Z", 2)
    assert z.betti_at(0) == 0 and z.betti_at(1) == 0 and z.betti_at(2) == 0
    assert z.torsion[1] == (2,)
    q = reduced_homology(c, 0, 2)
    assert q.betti_at(1) == 0 and q.betti_at(2) == 0
    f2 = reduced_homology(c, 2, 2)
    assert f2.betti_at(1) == 1 and f2.betti_at(2) == 1
    f3 = reduced_homology(c, 3, 2)
    assert f3.betti_at(1) == 0 and f3.betti_at(2) == 0


def test_field_betti_match_integer_betti_without_torsion():
    rng = random.Random(25)
    for _ in range(25):
        g = random_even_fc_graph(rng, max_vertices=6)
        c = flag_complex(g)
        top = max(c.dimension, 0)
        z = reduced_homology(c, "Z", top)
        if any(z.torsion[d] for d in z.torsion):
            continue
        for p in (0, 2, 3, 5):
            f = reduced_homology(c, p, top)
            assert all(f.betti_at(d) == z.betti_at(d) for d in range(-1, top + 1))


def test_homology_invariant_under_vertex_relabeling():
    rng = random.Random(26)
    for _ in range(15):
        g = random_even_fc_graph(rng, max_vertices=6)
        perm = list(g.vertices)
        rng.shuffle(perm)
        g2 = EvenGraph(perm, [(u, v, l) for (u, v), l in g.edge_items()])
        top = max(flag_complex(g).dimension, 0)
        a = reduced_homology(flag_complex(g), "Z", top)
        b = reduced_homology(flag_complex(g2), "Z", top)
        assert a.betti == b.betti and a.torsion == b.torsion


def test_cone_implies_acyclic():
    rng = random.Random(27)
    found = 0
    for _ in range(40):
        g = random_even_fc_graph(rng, max_vertices=5)
        if not g.vertices:
            continue
        # cone off with a fresh dominating vertex
        vs = list(g.vertices) + ["z"]
        edges = [(u, v, l) for (u, v), l in g.edge_items()]
        edges += [(v, "z", 2) for v in g.vertices]
        coned = EvenGraph(vs, edges)
        assert has_cone_vertex(coned)
        c = flag_complex(coned)
        for d in range(-1, c.dimension + 1):
            assert is_d_acyclic(c, d, "Z")
        found += 1
    assert found


def test_is_d_acyclic_degenerate_degrees(example1):
    empty = flag_complex(EvenGraph([]))
    assert not is_d_acyclic(empty, -1, "Z")
    assert is_d_acyclic(empty, -2, "Z")
    g, chi = example1
    path = living_subgraph(g, chi)
    assert is_d_acyclic(flag_complex(path), 0, "Z")


def test_has_cone_vertex():
    assert has_cone_vertex(EvenGraph(["a"]))
    assert not has_cone_vertex(EvenGraph([]))
    assert not has_cone_vertex(EvenGraph(["a", "b"]))
    assert has_cone_vertex(EvenGraph(["a", "b"], [("a", "b", 2)]))


def test_coefficient_spec_validation(example1):
    g, _ = example1
    c = flag_complex(g)
    with pytest.raises(ValueError):
        reduced_homology(c, 4, 1)  # composite characteristic
    with pytest.raises(ValueError):
        reduced_homology(c, "R", 1)
