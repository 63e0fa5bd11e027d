"""Characters of even Artin groups and the combinatorics they induce.

A character assigns a rational value to every generator; the value of an
edge is the sum of its endpoint values.  Everything downstream depends only
on which of these values vanish, so exact rationals capture every case and
positive rescaling never changes an answer.

A vertex is *dead* when its value is zero; an edge is *dead* when its label
exceeds 2 and its value is zero; a dead edge is *p-dead* for the primes p
dividing half its label.  Removing dead vertices and the interiors of dead
(or p-dead) edges yields the living subgraphs that all link conditions are
evaluated in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .graphs import EvenGraph, induced_subgraph
from .homology import _is_prime, enumerate_cliques


class CharacterError(ValueError):
    """Raised when a character document or domain is invalid."""


class Character:
    """Map from vertex ids to exact rational values."""

    def __init__(self, values: Mapping[str, Fraction | int | str]):
        parsed = {}
        for v, x in values.items():
            try:
                parsed[v] = Fraction(x)
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                raise CharacterError(f"value for {v!r} is not a rational: {x!r}") from exc
        self.values: dict[str, Fraction] = parsed

    def value(self, v: str) -> Fraction:
        return self.values[v]

    def edge_value(self, u: str, v: str) -> Fraction:
        return self.values[u] + self.values[v]

    @property
    def is_zero(self) -> bool:
        """The zero character is flagged: it has no sphere class."""
        return all(x == 0 for x in self.values.values())

    def scaled(self, c: Fraction | int) -> "Character":
        c = Fraction(c)
        return Character({v: x * c for v, x in self.values.items()})

    def negated(self) -> "Character":
        return self.scaled(-1)

    def restricted(self, vertices: Iterable[str]) -> "Character":
        return Character({v: self.values[v] for v in vertices})

    def primitive_integer_values(self) -> dict[str, int]:
        """The unique positive rescaling with coprime integer values.

        This is the vector of exponents for the cyclic-cover module
        structure: an integer-valued character acts through the generator
        of its image, so values are cleared of denominators and divided by
        their gcd.  The zero character maps to all zeros.
        """
        from math import gcd, lcm

        denom = lcm(*(x.denominator for x in self.values.values())) if self.values else 1
        ints = {v: int(x * denom) for v, x in self.values.items()}
        g = gcd(*ints.values()) if ints else 0
        if g == 0:
            return ints
        return {v: n // g for v, n in ints.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.values == other.values

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}: {x}" for v, x in sorted(self.values.items()))
        return f"Character({{{inner}}})"


def character_from_dict(doc: Mapping) -> Character:
    """Parse the JSON character document ``{"character": {"a": 1, "b": "-1/2"}}``."""
    if not isinstance(doc, Mapping) or "character" not in doc:
        raise CharacterError('character document must contain a "character" object')
    values = doc["character"]
    if not isinstance(values, Mapping):
        raise CharacterError('"character" must map vertex ids to rationals')
    for v, x in values.items():
        if not isinstance(x, (int, str)):
            raise CharacterError(f"value for {v!r} must be an integer or a 'p/q' string")
    return Character(values)


def character_to_dict(chi: Character) -> dict:
    return {"character": {v: str(x) for v, x in sorted(chi.values.items())}}


def _check_domain(g: EvenGraph, chi: Character) -> None:
    if set(chi.values) != set(g.vertices):
        missing = set(g.vertices) - set(chi.values)
        extra = set(chi.values) - set(g.vertices)
        raise CharacterError(
            f"character domain mismatch (missing {sorted(missing)}, extra {sorted(extra)})")


@dataclass(frozen=True)
class Classification:
    """Vanishing pattern of a character on a graph.

    ``p_dead_edges`` is supported exactly on ``relevant_primes``, the primes
    dividing half the label of some dead edge; the union over all primes of
    the p-dead edges is the set of dead edges.
    """

    dead_vertices: frozenset[str]
    dead_edges: frozenset[tuple[str, str]]
    p_dead_edges: dict[int, frozenset[tuple[str, str]]]
    relevant_primes: frozenset[int]


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def classify(g: EvenGraph, chi: Character) -> Classification:
    _check_domain(g, chi)
    dead_vertices = frozenset(v for v in g.vertices if chi.value(v) == 0)
    dead_edges = frozenset(
        e for e, label in g.edge_items() if label > 2 and chi.edge_value(*e) == 0)
    p_dead: dict[int, set[tuple[str, str]]] = {}
    for e in dead_edges:
        for p in _prime_factors(g.half_label(*e)):
            p_dead.setdefault(p, set()).add(e)
    return Classification(
        dead_vertices=dead_vertices,
        dead_edges=dead_edges,
        p_dead_edges={p: frozenset(es) for p, es in sorted(p_dead.items())},
        relevant_primes=frozenset(p_dead),
    )


def living_subgraph(g: EvenGraph, chi: Character, p: int | None = None) -> EvenGraph:
    """Living subgraph for a vanishing mode.

    ``p=None`` removes dead vertices and all open dead edges; ``p=0`` removes
    dead vertices only (no edge is 0-dead); a prime ``p`` removes dead
    vertices and the open p-dead edges.  Removed edges keep any endpoints
    that are themselves alive.
    """
    cls = classify(g, chi)
    if p is None:
        drop = cls.dead_edges
    elif p == 0:
        drop = frozenset()
    elif _is_prime(p):
        drop = cls.p_dead_edges.get(p, frozenset())
    else:
        raise ValueError(f"p must be None, 0 or a prime, got {p}")
    keep = [v for v in g.vertices if v not in cls.dead_vertices]
    drop = [e for e in drop if e[0] not in cls.dead_vertices and e[1] not in cls.dead_vertices]
    return induced_subgraph(g, keep, drop)


@dataclass(frozen=True)
class CenterValues:
    """Character values on the standard generators of a clique subgroup's center.

    A clique of an even FC graph generates a direct product of one dihedral
    group per label > 2 edge and one infinite cyclic group per leftover
    vertex; the center is generated by (uv)^l for each such edge (value
    l * (m_u + m_v)) and by each leftover vertex (value m_v).
    """

    entries: tuple[tuple[str, Fraction], ...]

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for _, x in self.entries)


def center_values(g: EvenGraph, chi: Character, delta: Iterable[str]) -> CenterValues:
    _check_domain(g, chi)
    delta = g.sort_vertices(delta)
    if not g.is_clique(delta):
        raise ValueError(f"{tuple(delta)} is not a clique")
    on_big_edge: set[str] = set()
    entries: list[tuple[str, Fraction]] = []
    for i, u in enumerate(delta):
        for v in delta[i + 1:]:
            if g.label(u, v) > 2:
                if u in on_big_edge or v in on_big_edge:
                    raise ValueError(
                        f"clique {tuple(delta)} has a vertex on two labels > 2 (FC violated)")
                on_big_edge.update((u, v))
                half = g.half_label(u, v)
                entries.append((f"({u}{v})^{half}", half * chi.edge_value(u, v)))
    for v in delta:
        if v not in on_big_edge:
            entries.append((v, chi.value(v)))
    return CenterValues(tuple(entries))


def dead_cliques(g: EvenGraph, chi: Character, max_size: int,
                 p: int | None = None) -> tuple[tuple[str, ...], ...]:
    """Cliques (including the empty one) supported entirely on dead material.

    A clique qualifies when each of its vertices is dead or lies on a dead
    edge of the clique; with ``p`` given, "dead edge" means p-dead (for
    ``p=0`` there are none, so only cliques of dead vertices qualify).

    In the global mode the result provably equals the set of cliques whose
    clique subgroup has its center killed by the character; this equality is
    re-checked on every call and a mismatch raises.
    """
    cls = classify(g, chi)
    if p is None:
        edges = cls.dead_edges
    elif p == 0:
        edges = frozenset()
    elif _is_prime(p):
        edges = cls.p_dead_edges.get(p, frozenset())
    else:
        raise ValueError(f"p must be None, 0 or a prime, got {p}")

    def qualifies(clique: tuple[str, ...]) -> bool:
        members = set(clique)
        for v in clique:
            if v in cls.dead_vertices:
                continue
            if any(v in e and e[0] in members and e[1] in members for e in edges):
                continue
            return False
        return True

    out = []
    for clique in enumerate_cliques(g, max_size):
        selected = qualifies(clique)
        if p is None and selected != center_values(g, chi, clique).is_zero:
            raise RuntimeError(
                f"dead-clique/center mismatch on {clique}: "
                f"combinatorial={selected}, center-kill={not selected}")
        if selected:
            out.append(clique)
    return tuple(out)


def is_dominating(g: EvenGraph, sub: EvenGraph) -> bool:
    """True when every vertex of g outside ``sub`` has a g-neighbor in ``sub``."""
    inside = set(sub.vertices)
    for v in inside:
        if not g.has_vertex(v):
            raise ValueError(f"vertex {v!r} of the subgraph is not in the graph")
    return all(any(w in inside for w in g.neighbors(v))
               for v in g.vertices if v not in inside)
