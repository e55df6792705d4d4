"""The four one-parameter quivers and their universal (co)lifting maps.

For a finite set S of ids:

* ``build_I(S)`` — independent vertices: S itself, no edges;
* ``build_M(S)`` — independent edges: one disjoint arrow (0,s) -> (1,s) per s;
* ``build_K(S)`` — full quiver: vertices S, exactly one edge (s,t) per ordered pair;
* ``build_B(S)`` — bouquet: a single vertex "1" carrying one loop per s.

Morphisms out of I(S) and M(S) are freely determined by a vertex or edge
assignment; morphisms into K(S) and B(S) are cofreely determined by one.
The lift/colift functions construct the unique morphism with the prescribed
component.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .core import Id, Quiver, QuiverMorphism, tid

BOUQUET_VERTEX = "1"


def build_I(S: Iterable[Id]) -> Quiver:
    return Quiver.build(S)


def build_M(S: Iterable[Id]) -> Quiver:
    items = list(S)
    vertices = [tid(j, s) for s in items for j in (0, 1)]
    arrows = [(s, tid(0, s), tid(1, s)) for s in items]
    return Quiver.build(vertices, arrows)


def build_K(S: Iterable[Id]) -> Quiver:
    items = list(S)
    arrows = [(tid(s, t), s, t) for s in items for t in items]
    return Quiver.build(items, arrows)


def build_B(S: Iterable[Id]) -> Quiver:
    arrows = [(s, BOUQUET_VERTEX, BOUQUET_VERTEX) for s in S]
    return Quiver.build([BOUQUET_VERTEX], arrows)


def lift_I(phi: Mapping, G: Quiver) -> QuiverMorphism:
    """The unique morphism I(S) -> G with vertex component phi (S = keys)."""
    if not set(phi.values()) <= G.vertices:
        raise ValueError("lift_I: assignment must land in the codomain vertices")
    return QuiverMorphism(build_I(phi.keys()), G, dict(phi), {})


def lift_M(psi: Mapping, G: Quiver) -> QuiverMorphism:
    """The unique morphism M(S) -> G with edge component psi (S = keys)."""
    if not set(psi.values()) <= G.edges:
        raise ValueError("lift_M: assignment must land in the codomain edges")
    vmap = {}
    for s, e in psi.items():
        vmap[tid(0, s)] = G.src[e]
        vmap[tid(1, s)] = G.tgt[e]
    return QuiverMorphism(build_M(psi.keys()), G, vmap, dict(psi))


def colift_K(chi: Mapping, G: Quiver, S: Iterable[Id]) -> QuiverMorphism:
    """The unique morphism G -> K(S) with vertex component chi."""
    cod = build_K(S)
    if set(chi) != set(G.vertices):
        raise ValueError("colift_K: assignment must be total on the domain vertices")
    if not set(chi.values()) <= cod.vertices:
        raise ValueError("colift_K: assignment must land in S")
    emap = {e: tid(chi[G.src[e]], chi[G.tgt[e]]) for e in G.edges}
    return QuiverMorphism(G, cod, dict(chi), emap)


def colift_B(xi: Mapping, G: Quiver, S: Iterable[Id]) -> QuiverMorphism:
    """The unique morphism G -> B(S) with edge component xi.

    Exists whenever xi does, i.e. whenever E(G) is empty or S is not: the
    vertex component is the constant map onto the bouquet's one vertex.
    """
    cod = build_B(S)
    if set(xi) != set(G.edges):
        raise ValueError("colift_B: assignment must be total on the domain edges")
    if not set(xi.values()) <= cod.edges:
        raise ValueError("colift_B: assignment must land in S")
    vmap = {v: BOUQUET_VERTEX for v in G.vertices}
    return QuiverMorphism(G, cod, vmap, dict(xi))
