"""Exhaustive enumeration of quiver morphisms, lifts, and small quivers.

The search is plain backtracking with forward checking: edges of the domain
are assigned first, since an edge assignment forces both of its endpoint
vertices, and endpoint agreement is the only constraint there is.  Vertices
left untouched by every edge are filled in afterwards.  Enumeration order is
canonical (domain elements and candidate images both in canonical id order),
so results are deterministic and duplicate-free.

Budgets are explicit.  An exhausted budget raises BudgetExceeded instead of
silently truncating: enumeration results back every characterization check
in this package, and a partial answer would corrupt them.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import Quiver, QuiverMorphism, compose, sort_ids


@dataclass(frozen=True)
class SearchBudget:
    """Bounds on a search: candidate assignments tried, optional wall clock."""

    max_assignments: int = 10_000_000
    seconds: Optional[float] = None

    def __post_init__(self) -> None:
        if self.max_assignments <= 0:
            raise ValueError("max_assignments must be positive")
        if self.seconds is not None and self.seconds <= 0:
            raise ValueError("seconds must be positive")


class BudgetExceeded(RuntimeError):
    """The search was cut off before exhausting its space."""


def enumerate_homs(G: Quiver, H: Quiver, budget: SearchBudget | None = None) -> Iterator[QuiverMorphism]:
    """Yield every morphism G -> H exactly once, in canonical order."""
    budget = budget or SearchBudget()
    deadline = time.monotonic() + budget.seconds if budget.seconds else None
    spent = 0

    dom_edges = sort_ids(G.edges)
    dom_vertices = sort_ids(G.vertices)
    cod_edges = sort_ids(H.edges)
    cod_vertices = sort_ids(H.vertices)

    def spend() -> int:
        nonlocal spent
        spent += 1
        if spent > budget.max_assignments:
            raise BudgetExceeded(f"assignment budget {budget.max_assignments} exhausted")
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(f"time budget {budget.seconds}s exhausted")
        return spent

    def assign_edges(i: int, vmap: dict, emap: dict) -> Iterator[QuiverMorphism]:
        if i == len(dom_edges):
            free = [v for v in dom_vertices if v not in vmap]
            yield from assign_vertices(0, free, vmap, emap)
            return
        e = dom_edges[i]
        s, t = G.src[e], G.tgt[e]
        for f in cod_edges:
            spend()
            added = []
            consistent = True
            for gv, hv in ((s, H.src[f]), (t, H.tgt[f])):
                if gv in vmap:
                    if vmap[gv] != hv:
                        consistent = False
                        break
                else:
                    vmap[gv] = hv
                    added.append(gv)
            if consistent:
                emap[e] = f
                yield from assign_edges(i + 1, vmap, emap)
                del emap[e]
            for gv in added:
                del vmap[gv]

    def assign_vertices(i: int, free: list, vmap: dict, emap: dict) -> Iterator[QuiverMorphism]:
        if i == len(free):
            yield QuiverMorphism(G, H, dict(vmap), dict(emap))
            return
        v = free[i]
        for w in cod_vertices:
            spend()
            vmap[v] = w
            yield from assign_vertices(i + 1, free, vmap, emap)
            del vmap[v]

    return assign_edges(0, {}, {})


def count_homs(G: Quiver, H: Quiver, budget: SearchBudget | None = None) -> int:
    return sum(1 for _ in enumerate_homs(G, H, budget))


def find_lift(psi: QuiverMorphism, phi: QuiverMorphism,
              budget: SearchBudget | None = None) -> Optional[QuiverMorphism]:
    """First morphism m: cod(phi) -> cod(psi) with m . phi == psi, else None.

    Exhaustive within budget, so None is a proof that no lift exists.
    """
    if psi.dom != phi.dom:
        raise ValueError("find_lift: maps must share their domain")
    for candidate in enumerate_homs(phi.cod, psi.cod, budget):
        if compose(candidate, phi) == psi:
            return candidate
    return None


def find_colift(psi: QuiverMorphism, phi: QuiverMorphism,
                budget: SearchBudget | None = None) -> Optional[QuiverMorphism]:
    """First morphism m: dom(psi) -> dom(phi) with phi . m == psi, else None."""
    if psi.cod != phi.cod:
        raise ValueError("find_colift: maps must share their codomain")
    for candidate in enumerate_homs(psi.dom, phi.dom, budget):
        if compose(phi, candidate) == psi:
            return candidate
    return None


def is_injective_wrt(J: Quiver, phi: QuiverMorphism, budget: SearchBudget | None = None) -> bool:
    """Every map dom(phi) -> J extends along phi to a map cod(phi) -> J."""
    return all(find_lift(psi, phi, budget) is not None
               for psi in enumerate_homs(phi.dom, J, budget))


def is_projective_wrt(P: Quiver, phi: QuiverMorphism, budget: SearchBudget | None = None) -> bool:
    """Every map P -> cod(phi) factors through phi via some P -> dom(phi)."""
    return all(find_colift(psi, phi, budget) is not None
               for psi in enumerate_homs(P, phi.cod, budget))


def enumerate_quivers(vmax: int, emax: int) -> Iterator[Quiver]:
    """All quivers on canonical names v1..vk, e1..em, every endpoint choice.

    For fixed k >= 1 and m there are k^(2m) of them; k = 0 forces m = 0.
    """
    if vmax < 0 or emax < 0:
        raise ValueError("bounds must be nonnegative")
    for k in range(vmax + 1):
        vertices = [f"v{i}" for i in range(1, k + 1)]
        for m in range((emax if k else 0) + 1):
            edges = [f"e{i}" for i in range(1, m + 1)]
            for endpoints in itertools.product(itertools.product(vertices, repeat=2), repeat=m):
                arrows = [(e, s, t) for e, (s, t) in zip(edges, endpoints)]
                yield Quiver.build(vertices, arrows)
