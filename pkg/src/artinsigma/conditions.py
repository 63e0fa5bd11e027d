"""Link conditions on living subgraphs, and the kernel free-rank formula.

The strong n-link condition asks, for every dead-supported clique D of size
at most n, that the flag complex of the link of D in the living subgraph be
(n - 1 - |D|)-acyclic over Z.  Its p-local variant uses p-dead cliques, the
p-living subgraph and field coefficients of characteristic p.  Both are
decided exactly.

The homotopic variant needs connectivity rather than acyclicity, which is
undecidable by homology alone in degrees >= 1; it is therefore three-valued,
with cone detection upgrading a witness to an exact "contractible" and a
homological failure downgrading it to an exact "fails".
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import Character, dead_cliques, living_subgraph
from .graphs import EvenGraph, describe_graph, is_connected
from .homology import (coeffs_label, flag_complex, has_cone_vertex, link,
                       reduced_homology)


class ZeroCharacterError(ValueError):
    """Link conditions are undefined for the zero character."""


@dataclass(frozen=True)
class LinkWitness:
    """One evaluated clique: what was required of its link and what happened."""

    clique: tuple[str, ...]
    required_degree: int
    link: str
    status: str               # "ok" | "fail" | "unknown"
    failing_degree: int | None
    via: str                  # "vacuous" | "cone" | "homology" | "nonempty" | "connectivity"


@dataclass(frozen=True)
class ConditionReport:
    holds: bool | None        # None encodes "unknown" (homotopic variant only)
    n: int
    coefficients: str
    mode: str
    variant: str
    witnesses: tuple[LinkWitness, ...]


def _require_nonzero(chi: Character) -> None:
    if chi.is_zero:
        raise ZeroCharacterError("the zero character has no sphere class")


def _first_nonvanishing(profile, d: int) -> int | None:
    for j in range(-1, d + 1):
        if not profile.trivial_at(j):
            return j
    return None


def _acyclicity_witness(clique, lk: EvenGraph, d: int, coeffs) -> LinkWitness:
    desc = describe_graph(lk)
    if d <= -2:
        return LinkWitness(clique, d, desc, "ok", None, "vacuous")
    if has_cone_vertex(lk):
        return LinkWitness(clique, d, desc, "ok", None, "cone")
    profile = reduced_homology(flag_complex(lk), coeffs, d)
    bad = _first_nonvanishing(profile, d)
    if bad is None:
        return LinkWitness(clique, d, desc, "ok", None, "homology")
    return LinkWitness(clique, d, desc, "fail", bad, "homology")


def _link_condition(g: EvenGraph, chi: Character, n: int, p: int | None,
                    coeffs, variant: str = "homological") -> ConditionReport:
    _require_nonzero(chi)
    living = living_subgraph(g, chi, p=p)
    witnesses = []
    for clique in dead_cliques(g, chi, max_size=n, p=p):
        d = n - 1 - len(clique)
        lk = link(g, living, clique)
        witnesses.append(_acyclicity_witness(clique, lk, d, coeffs))
    holds = all(w.status == "ok" for w in witnesses)
    mode = "dead" if p is None else f"{p}-dead"
    return ConditionReport(holds, n, coeffs_label(coeffs), mode, variant, tuple(witnesses))


def strong_n_link(g: EvenGraph, chi: Character, n: int) -> ConditionReport:
    """Strong n-link condition over Z (sufficient for membership in degree n)."""
    return _link_condition(g, chi, n, p=None, coeffs="Z")


def strong_p_n_link(g: EvenGraph, chi: Character, n: int, p: int) -> ConditionReport:
    """Strong p-n-link condition with field coefficients of characteristic p
    (p = 0 means the rationals)."""
    return _link_condition(g, chi, n, p=p, coeffs=p)


def strong_homotopic_n_link(g: EvenGraph, chi: Character, n: int) -> ConditionReport:
    """Three-valued homotopic variant: links must be (n-1-|D|)-connected.

    Degrees -1 (nonempty) and 0 (connected) are decided exactly, as are
    coned links (contractible) and homological failures (connectivity
    implies acyclicity).  Anything else stays unknown.
    """
    _require_nonzero(chi)
    living = living_subgraph(g, chi)
    witnesses = []
    for clique in dead_cliques(g, chi, max_size=n):
        d = n - 1 - len(clique)
        lk = link(g, living, clique)
        desc = describe_graph(lk)
        if d <= -2:
            w = LinkWitness(clique, d, desc, "ok", None, "vacuous")
        elif has_cone_vertex(lk):
            w = LinkWitness(clique, d, desc, "ok", None, "cone")
        elif d == -1:
            ok = bool(lk.vertices)
            w = LinkWitness(clique, d, desc, "ok" if ok else "fail",
                            None if ok else -1, "nonempty")
        elif d == 0:
            ok = is_connected(lk)
            w = LinkWitness(clique, d, desc, "ok" if ok else "fail",
                            None if ok else (0 if lk.vertices else -1), "connectivity")
        else:
            profile = reduced_homology(flag_complex(lk), "Z", d)
            bad = _first_nonvanishing(profile, d)
            if bad is not None:
                w = LinkWitness(clique, d, desc, "fail", bad, "homology")
            else:
                w = LinkWitness(clique, d, desc, "unknown", None, "homology")
        witnesses.append(w)
    if any(w.status == "fail" for w in witnesses):
        holds = False
    elif all(w.status == "ok" for w in witnesses):
        holds = True
    else:
        holds = None
    return ConditionReport(holds, n, "Z", "dead", "homotopic", tuple(witnesses))


def raag_n_link(g: EvenGraph, chi: Character, n: int) -> ConditionReport:
    """n-link condition for the all-labels-2 case.

    For these groups the condition ranges over cliques of dead vertices and
    links in the vertex-living subgraph; it must coincide with the strong
    n-link condition, which is re-verified on every call.
    """
    if any(label != 2 for _, label in g.edge_items()):
        raise ValueError("the n-link condition in this form needs all labels equal to 2")
    _require_nonzero(chi)
    living = living_subgraph(g, chi, p=0)
    witnesses = []
    for clique in dead_cliques(g, chi, max_size=n, p=0):
        d = n - 1 - len(clique)
        lk = link(g, living, clique)
        witnesses.append(_acyclicity_witness(clique, lk, d, "Z"))
    holds = all(w.status == "ok" for w in witnesses)
    strong = strong_n_link(g, chi, n)
    if strong.holds is not holds:
        raise RuntimeError(
            f"n-link condition ({holds}) disagrees with the strong condition "
            f"({strong.holds}) on an all-labels-2 graph")
    return ConditionReport(holds, n, "Z", "dead-vertices", "homological", tuple(witnesses))


def kernel_free_rank(g: EvenGraph, chi: Character, p: int, n: int) -> int:
    """Free rank of the degree-n kernel homology over F[t, t^-1].

    Closed form: the sum over p-dead-supported cliques D of size <= n of the
    reduced betti number in degree n - 1 - |D| of the flag complex of the
    link of D in the p-living subgraph, with coefficients of characteristic
    p.  Invariant under positive rescaling of the character.
    """
    living = living_subgraph(g, chi, p=p)
    total = 0
    for clique in dead_cliques(g, chi, max_size=n, p=p):
        d = n - 1 - len(clique)
        lk = link(g, living, clique)
        profile = reduced_homology(flag_complex(lk), p, max_degree=max(d, -1))
        total += profile.betti_at(d)
    return total


def finite_dimensional_through(g: EvenGraph, chi: Character, p: int, n: int) -> bool:
    """Whether kernel homology is finite dimensional in all degrees 0..n.

    Equivalent to the strong p-n-link condition: a degree has infinite
    dimension exactly when its module has positive free rank.
    """
    return all(kernel_free_rank(g, chi, p, k) == 0 for k in range(n + 1))
