"""Membership verdicts for homological Sigma invariants, with audit trails.

Four rules are evaluated in a fixed priority order:

* ``strong_link``        — the strong n-link condition is sufficient for
                           membership;
* ``p_local_obstruction``— if some characteristic p (zero or a relevant
                           prime) has p-living subgraph equal to the living
                           subgraph and its p-n-link condition fails, the
                           class is not a member (the kernel homology is
                           infinite dimensional over that field);
* ``sigma1_connectivity``— in degree 1, when every cycle of the label > 2
                           subgraph is odd, membership is decided exactly by
                           the living subgraph being connected and
                           dominating;
* ``dihedral_product``   — on complete graphs the group is a product of
                           dihedral and infinite cyclic factors and
                           membership has a closed form.

Sufficient rules that do not fire leave the verdict UNKNOWN rather than
overclaiming; fired rules can never disagree (that would be an
implementation bug, and is checked).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .characters import Character, classify, is_dominating, living_subgraph
from .conditions import (ConditionReport, ZeroCharacterError, strong_homotopic_n_link,
                         strong_n_link, strong_p_n_link)
from .graphs import EvenGraph, is_connected

IN = "IN"
NOT_IN = "NOT_IN"
UNKNOWN = "UNKNOWN"


class RuleConflictError(RuntimeError):
    """Two decision rules produced opposite verdicts on one instance."""


@dataclass(frozen=True)
class Justification:
    rule: str
    fired: bool
    status: str | None        # IN / NOT_IN when fired, else None
    detail: str


@dataclass(frozen=True)
class Verdict:
    question: str             # what is being decided
    status: str               # IN / NOT_IN / UNKNOWN
    degree: int
    justifications: tuple[Justification, ...]


def _witness_line(report: ConditionReport) -> str:
    for w in report.witnesses:
        if w.status == "fail":
            return (f"clique {'{' + ','.join(w.clique) + '}'} needs a "
                    f"{w.required_degree}-acyclic link but homology is nonzero "
                    f"in degree {w.failing_degree} (link: {w.link})")
    return "all link witnesses passed"


def sigma_verdict(g: EvenGraph, chi: Character, n: int) -> Verdict:
    """Decide membership of the character class in the degree-n homological
    Sigma invariant, or return UNKNOWN with the reasons no rule applied."""
    if chi.is_zero:
        raise ZeroCharacterError("the zero character has no sphere class")
    justifications: list[Justification] = []

    strong = strong_n_link(g, chi, n)
    if strong.holds:
        justifications.append(Justification(
            "strong_link", True, IN,
            f"strong {n}-link condition holds over Z "
            f"({len(strong.witnesses)} link(s) checked)"))
    else:
        justifications.append(Justification(
            "strong_link", False, None,
            f"strong {n}-link condition fails ({_witness_line(strong)}); "
            "the condition is only sufficient, so nothing follows"))

    cls = classify(g, chi)
    living = living_subgraph(g, chi)
    fired_p = None
    held = []
    unequal = []
    for p in [0, *sorted(cls.relevant_primes)]:
        if living_subgraph(g, chi, p=p) == living:
            report = strong_p_n_link(g, chi, n, p)
            if not report.holds:
                fired_p = (p, report)
                break
            held.append(p)
        else:
            unequal.append(p)
    if fired_p is not None:
        p, report = fired_p
        field = "Q" if p == 0 else f"F{p}"
        justifications.append(Justification(
            "p_local_obstruction", True, NOT_IN,
            f"the {p}-living subgraph equals the living subgraph and the strong "
            f"{p}-{n}-link condition fails ({_witness_line(report)}); kernel "
            f"homology over {field} is infinite dimensional in some degree <= {n}"))
    else:
        reasons = []
        if held:
            reasons.append(f"characteristic(s) {held} match the living subgraph "
                           "but their p-n-link conditions hold")
        if unequal:
            reasons.append(f"characteristic(s) {unequal} have a strictly larger living subgraph")
        justifications.append(Justification(
            "p_local_obstruction", False, None,
            "; ".join(reasons) if reasons else "no characteristic applies"))

    if n == 1 and odd_cycle_condition(g):
        member = is_connected(living) and is_dominating(g, living)
        justifications.append(Justification(
            "sigma1_connectivity", True, IN if member else NOT_IN,
            "every cycle of the label > 2 subgraph is odd, so degree-1 "
            "membership holds if and only if the living subgraph is connected "
            f"and dominating (connected={is_connected(living)}, "
            f"dominating={is_dominating(g, living)})"))
    else:
        why = ("degree is not 1" if n != 1
               else "the label > 2 subgraph contains an even cycle")
        justifications.append(Justification("sigma1_connectivity", False, None, why))

    if g.is_clique(g.vertices) and g.vertices:
        member = product_sigma_member(g, g.vertices, chi, n)
        t = sum(1 for _, label in g.edge_items() if label > 2)
        justifications.append(Justification(
            "dihedral_product", True, IN if member else NOT_IN,
            f"the graph is complete, so the group is a product of {t} even "
            f"dihedral factor(s) and infinite cyclic factors with a closed-form "
            f"answer in degree {n}"))
    else:
        justifications.append(Justification(
            "dihedral_product", False, None, "the graph is not complete"))

    fired = [j for j in justifications if j.fired]
    statuses = {j.status for j in fired}
    if IN in statuses and NOT_IN in statuses:
        raise RuleConflictError(
            f"conflicting rules on {g!r}, {chi!r}, n={n}: " +
            "; ".join(f"{j.rule}={j.status}" for j in fired))
    if fired:
        return Verdict("sigma-membership(Z)", fired[0].status, n, tuple(justifications))
    return Verdict("sigma-membership(Z)", UNKNOWN, n, tuple(justifications))


def fp_verdict(g: EvenGraph, chi: Character, n: int) -> Verdict:
    """Is the kernel of the character of finiteness type FP_n?

    Membership of a class and of its antipode coincide for these groups, so
    the kernel property is equivalent to plain membership in degree n.
    """
    base = sigma_verdict(g, chi, n)
    if base.status == UNKNOWN:
        symmetry = Justification(
            "kernel_symmetry", False, None,
            "the underlying membership status is unknown, so nothing transfers "
            "to the kernel")
    else:
        symmetry = Justification(
            "kernel_symmetry", True, base.status,
            "the kernel is FP_n exactly when both the class and its negative are "
            "members, and membership is invariant under negation here")
    return Verdict(f"kernel-FP_{n}", base.status, n, base.justifications + (symmetry,))


def homotopic_sigma_verdict(g: EvenGraph, chi: Character, n: int) -> Verdict:
    """Homotopic membership: IN only on an exact homotopic link certificate,
    otherwise UNKNOWN (the implication only runs one way)."""
    if chi.is_zero:
        raise ZeroCharacterError("the zero character has no sphere class")
    report = strong_homotopic_n_link(g, chi, n)
    if report.holds is True:
        j = Justification("homotopic_link", True, IN,
                          f"strong homotopic {n}-link condition holds exactly "
                          f"({len(report.witnesses)} link(s) checked)")
        return Verdict("sigma-membership(homotopy)", IN, n, (j,))
    why = ("some witness failed exactly" if report.holds is False
           else "some witness could not be decided beyond homology")
    j = Justification("homotopic_link", False, None,
                      f"strong homotopic {n}-link condition is not certified ({why})")
    return Verdict("sigma-membership(homotopy)", UNKNOWN, n, (j,))


def dihedral_sigma_member(label, m_x, m_y, n: int = 1) -> bool:
    """Membership for a single dihedral Artin group.

    Odd-type groups (odd label, or the string "odd") have full invariants;
    even-type groups with label >= 4 exclude exactly the classes of the
    character sending the generators to 1 and -1 and its negative, i.e. a
    class is a member iff the generator values do not cancel.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    if (m_x, m_y) == (0, 0):
        raise ValueError("the zero restriction has no sphere class")
    if label == "odd":
        return True
    if not isinstance(label, int) or label < 3:
        raise ValueError(f"label must be an integer >= 3 or 'odd', got {label!r}")
    if label % 2:
        return True
    return m_x + m_y != 0


def product_sigma_member(g: EvenGraph, delta: Sequence[str], chi: Character, m: int) -> bool:
    """Closed-form membership on a clique (a product of dihedral and infinite
    cyclic factors).

    With t the number of label > 2 edges inside the clique, non-membership in
    degree m requires m >= t and the character to vanish on the center of
    every factor: zero on each label > 2 edge and zero on each vertex not on
    such an edge.  Membership is the complement of that.
    """
    delta = g.sort_vertices(delta)
    if not g.is_clique(delta):
        raise ValueError(f"{tuple(delta)} is not a clique")
    values = {v: chi.value(v) for v in delta}
    if all(x == 0 for x in values.values()):
        raise ValueError("the restriction of the character to the clique is zero")
    big_edges = [(u, v) for i, u in enumerate(delta) for v in delta[i + 1:]
                 if g.label(u, v) > 2]
    t = len(big_edges)
    if m < t:
        return True
    if any(chi.edge_value(u, v) != 0 for u, v in big_edges):
        return True
    covered = {v for e in big_edges for v in e}
    return any(values[v] != 0 for v in delta if v not in covered)


def _big_label_subgraph(g: EvenGraph) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {v: set() for v in g.vertices}
    for (u, v), label in g.edge_items():
        if label > 2:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def _biconnected_blocks(adj: dict[str, set[str]]) -> list[set[frozenset[str]]]:
    """Edge sets of the biconnected blocks (standard lowpoint DFS)."""
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    blocks: list[set[frozenset[str]]] = []
    stack: list[frozenset[str]] = []
    counter = [0]

    def dfs(v: str, parent: str | None) -> None:
        disc[v] = low[v] = counter[0]
        counter[0] += 1
        for w in sorted(adj[v]):
            edge = frozenset((v, w))
            if w not in disc:
                stack.append(edge)
                dfs(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= disc[v]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.add(e)
                        if e == edge:
                            break
                    blocks.append(block)
            elif w != parent and disc[w] < disc[v]:
                stack.append(edge)
                low[v] = min(low[v], disc[w])

    for v in adj:
        if v not in disc and adj[v]:
            dfs(v, None)
    return blocks


def odd_cycle_condition(g: EvenGraph) -> bool:
    """No even cycle among the label > 2 edges.

    Decided by block decomposition: the condition holds iff every
    biconnected block of the label > 2 subgraph is a single edge or an odd
    cycle (any other block contains three independent paths between two
    vertices, two of which always close an even cycle).
    """
    adj = _big_label_subgraph(g)
    for block in _biconnected_blocks(adj):
        if len(block) == 1:
            continue
        vertices = {v for e in block for v in e}
        degree = {v: 0 for v in vertices}
        for e in block:
            for v in e:
                degree[v] += 1
        is_cycle = len(block) == len(vertices) and all(d == 2 for d in degree.values())
        if not is_cycle or len(block) % 2 == 0:
            return False
    return True
