"""Twisted chain complex of the cyclic cover, and kernel homology modules.

For an integer-valued character, the homology of its kernel with field
coefficients is the homology of a complex of free F[t, t^-1]-modules with
one generator per clique (the empty clique in degree 0, k-cliques in degree
k).  The differential sends a clique generator to the signed sum of its
facets, each weighted by

    b(v, X) = (t^(m_v) - 1) * prod over edges {v, w} inside X of
              (1 + t^(m_e) + ... + t^(m_e * (l - 1)))      with label 2l,

which vanishes exactly when v is dead or lies on a p-dead edge of X in
characteristic p.  Smith normal form over the principal ideal domain
F[t, t^-1] then yields the free rank and the invariant-factor torsion of
each homology module.

This is the independent oracle for the closed-form link formula: the two
routes are compared entry for entry by :func:`cross_check`, and a mismatch
is a hard error naming the instance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import Character, _check_domain
from .graphs import EvenGraph, describe_graph
from .homology import enumerate_cliques
from .laurent import (Field, LaurentMatrix, LaurentPoly, q_poly, smith_normal_form,
                      t_power_minus_one)


def _exponents(chi: Character) -> dict[str, int]:
    return chi.primitive_integer_values()


def coefficient_b(g: EvenGraph, chi: Character, x_clique, v: str, p: int = 0) -> LaurentPoly:
    """Differential weight of the facet of clique X obtained by removing v."""
    _check_domain(g, chi)
    field = Field(p)
    x_clique = g.sort_vertices(x_clique)
    if v not in x_clique:
        raise ValueError(f"{v!r} is not a vertex of the clique {x_clique}")
    if not g.is_clique(x_clique):
        raise ValueError(f"{x_clique} is not a clique")
    exps = _exponents(chi)
    return _coefficient_b(g, exps, x_clique, v, field)


def _coefficient_b(g: EvenGraph, exps: dict[str, int], x_clique, v: str,
                   field: Field) -> LaurentPoly:
    out = t_power_minus_one(field, exps[v])
    for w in x_clique:
        if w == v or out.is_zero():
            continue
        out = out * q_poly(g.half_label(v, w), exps[v] + exps[w], field)
    return out


class TwistedComplex:
    """Chain complex of free F[t, t^-1]-modules indexed by cliques.

    Degree n has one basis element per n-clique (degree 0: the empty
    clique).  Differentials are built once, their composites are verified to
    vanish, and Smith forms are memoized per degree.
    """

    def __init__(self, field: Field, bases: list[tuple[tuple[str, ...], ...]],
                 differentials: list[LaurentMatrix]):
        self.field = field
        self.bases = bases
        self._diff = differentials  # _diff[n] is D_n for n >= 1; _diff[0] unused
        self._snf_memo: dict[int, tuple[tuple[LaurentPoly, ...], int]] = {}

    @property
    def max_degree(self) -> int:
        return len(self.bases) - 1

    def basis(self, n: int) -> tuple[tuple[str, ...], ...]:
        if not 0 <= n <= self.max_degree:
            raise ValueError(f"degree {n} out of range 0..{self.max_degree}")
        return self.bases[n]

    def differential(self, n: int) -> LaurentMatrix:
        """D_n: degree n -> degree n-1 (the zero map for n = 0)."""
        if n == 0:
            return LaurentMatrix.zeros(self.field, 0, len(self.bases[0]))
        if not 1 <= n <= self.max_degree:
            raise ValueError(f"degree {n} out of range 0..{self.max_degree}")
        return self._diff[n]

    def snf(self, n: int) -> tuple[tuple[LaurentPoly, ...], int]:
        if n not in self._snf_memo:
            self._snf_memo[n] = smith_normal_form(self.differential(n))
        return self._snf_memo[n]

    def rank(self, n: int) -> int:
        return self.snf(n)[1]

    def to_dict(self) -> dict:
        """Matrix dump for external verification."""
        return {
            "characteristic": self.field.char,
            "bases": {str(n): [list(c) for c in b] for n, b in enumerate(self.bases)},
            "differentials": {str(n): self._diff[n].to_dict()
                              for n in range(1, self.max_degree + 1)},
        }


def build_salvetti_complex(g: EvenGraph, chi: Character, p: int = 0,
                           max_n: int | None = None) -> TwistedComplex:
    """Assemble the twisted complex through degree ``max_n``.

    Character values are first rescaled to a primitive integer vector (the
    exponents of the deck transformation).  The sign of the facet removing
    the i-th vertex of a clique is (-1)^i in the global vertex order.
    Composites of consecutive differentials are checked to vanish.
    """
    _check_domain(g, chi)
    field = Field(p)
    if max_n is None:
        max_n = len(g.vertices)
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    exps = _exponents(chi)

    grouped: dict[int, list[tuple[str, ...]]] = {}
    for c in enumerate_cliques(g, max_n):
        grouped.setdefault(len(c), []).append(c)
    bases = [tuple(grouped.get(n, ())) for n in range(max_n + 1)]

    diffs: list[LaurentMatrix] = [LaurentMatrix.zeros(field, 0, 0)]
    zero = LaurentPoly.zero(field)
    for n in range(1, max_n + 1):
        rows = bases[n - 1]
        cols = bases[n]
        row_of = {c: i for i, c in enumerate(rows)}
        entries = [[zero] * len(cols) for _ in rows]
        for j, x in enumerate(cols):
            for i, v in enumerate(x):
                facet = x[:i] + x[i + 1:]
                b = _coefficient_b(g, exps, x, v, field)
                if i % 2:
                    b = -b
                entries[row_of[facet]][j] = b
        diffs.append(LaurentMatrix(field, len(rows), len(cols), entries))

    for n in range(1, max_n):
        if not (diffs[n] * diffs[n + 1]).is_zero():
            raise RuntimeError(f"differential composite D_{n} D_{n + 1} is nonzero")
    return TwistedComplex(field, bases, diffs)


@dataclass(frozen=True)
class ModulePresentation:
    """Finitely generated module over F[t, t^-1]: free rank plus the
    divisibility chain of non-unit invariant factors."""

    free_rank: int
    torsion: tuple[LaurentPoly, ...]

    def describe(self) -> str:
        parts = []
        if self.free_rank:
            parts.append(f"R^{self.free_rank}" if self.free_rank > 1 else "R")
        parts.extend(f"R/({f})" for f in self.torsion)
        return " + ".join(parts) if parts else "0"


def homology_module(complex_: TwistedComplex, n: int) -> ModulePresentation:
    """Homology of the twisted complex in degree n, as a module presentation.

    Requires degrees n and n+1 to be built: the free rank is
    dim C_n - rank D_n - rank D_{n+1} and the torsion is the chain of
    non-unit invariant factors of D_{n+1}.
    """
    if not 0 <= n <= complex_.max_degree - 1:
        raise ValueError(
            f"degree {n} out of range: homology needs degrees n and n+1 "
            f"(complex built through {complex_.max_degree})")
    dim = len(complex_.basis(n))
    rank_out = complex_.rank(n) if n >= 1 else 0
    factors, rank_in = complex_.snf(n + 1)
    free_rank = dim - rank_out - rank_in
    torsion = tuple(f for f in factors if not f.is_unit())
    return ModulePresentation(free_rank, torsion)


class CrossCheckError(AssertionError):
    """The closed-form free rank and the chain-complex free rank disagree."""


@dataclass(frozen=True)
class CrossCheckReport:
    characteristic: int
    degree: int
    formula_rank: int
    oracle: ModulePresentation
    instance: str

    @property
    def matched(self) -> bool:
        return self.formula_rank == self.oracle.free_rank


def cross_check(g: EvenGraph, chi: Character, p: int, n: int,
                complex_: TwistedComplex | None = None) -> CrossCheckReport:
    """Compare the link-formula free rank with the chain-complex oracle.

    Torsion factors are reported but not validated against anything: there
    is no closed form for them.  A free-rank mismatch raises
    :class:`CrossCheckError` naming the instance; this is the central
    correctness gate of the library.
    """
    from .conditions import kernel_free_rank

    if complex_ is None:
        complex_ = build_salvetti_complex(g, chi, p, max_n=n + 1)
    formula = kernel_free_rank(g, chi, p, n)
    oracle = homology_module(complex_, n)
    instance = f"{describe_graph(g)}; chi={chi!r}; p={p}; n={n}"
    report = CrossCheckReport(p, n, formula, oracle, instance)
    if not report.matched:
        raise CrossCheckError(
            f"free-rank mismatch: link formula gives {formula}, "
            f"chain complex gives {oracle.free_rank} on [{instance}]")
    return report
