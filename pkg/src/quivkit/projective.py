"""Independent vertices, the explosion of a quiver into disjoint arrows, its
covering map, lifting through onto maps, and coessential maps.
"""

from __future__ import annotations

from .core import (CheckReport, Quiver, QuiverMorphism, compose, invert,
                   is_epi, is_iso, min_id, sort_ids)
from .limits import copair, coproduct
from .reflections import build_I, build_M, lift_I, lift_M


def independent_vertices(G: Quiver) -> frozenset:
    """Vertices that are neither a source nor a target of any edge."""
    touched = set(G.src.values()) | set(G.tgt.values())
    return frozenset(G.vertices - touched)


def explosion(G: Quiver) -> Quiver:
    """Disjoint union of G's independent vertices with its edges pulled
    apart into pairwise disjoint arrows.

    Elements keep the disjoint-union tags: (0, u) for an independent vertex
    u, (1, (0, e)) -> (1, (1, e)) for the arrow carrying edge e as (1, e).
    """
    return coproduct(build_I(independent_vertices(G)), build_M(G.edges)).quiver


def covering_map(G: Quiver) -> QuiverMorphism:
    """The canonical projection explosion(G) -> G.

    Independent vertices return to themselves and each arrow returns to the
    edge it carries; it is the unique morphism restricting to those two
    assignments.  Always onto, and bijective on edges.
    """
    independents = lift_I({v: v for v in independent_vertices(G)}, G)
    arrows = lift_M({e: e for e in G.edges}, G)
    return copair(independents, arrows)


def is_epi_projective(P: Quiver) -> bool:
    """True when the covering map of P is an isomorphism, i.e. P is a
    disjoint union of isolated vertices and pairwise disjoint arrows."""
    return is_iso(covering_map(P))


def lift_along_epi(psi: QuiverMorphism, phi: QuiverMorphism) -> QuiverMorphism:
    """Factor psi: P -> H through an onto map phi: G -> H as phi . m == psi.

    P must be epi-projective.  P is split through the inverse of its covering
    map; each isolated vertex and each arrow of P then picks the least
    phi-preimage of its psi-image, and the choices glue back along the
    splitting.
    """
    if psi.cod != phi.cod:
        raise ValueError("lift_along_epi: maps must share their codomain")
    if not is_epi(phi):
        raise ValueError("lift_along_epi: map to lift through is not epic")
    P, G = psi.dom, phi.dom
    projection = covering_map(P)
    if not is_iso(projection):
        raise ValueError("lift_along_epi: domain of the map to lift is not epi-projective")
    split = invert(projection)
    alpha = {}
    for s in sort_ids(independent_vertices(P)):
        target = psi.vmap[s]
        alpha[s] = min_id([v for v in G.vertices if phi.vmap[v] == target])
    beta = {}
    for t in sort_ids(P.edges):
        target = psi.emap[t]
        beta[t] = min_id([e for e in G.edges if phi.emap[e] == target])
    glue = copair(lift_I(alpha, G), lift_M(beta, G))
    return compose(glue, split)


def is_epi_coessential(phi: QuiverMorphism) -> CheckReport:
    """Decide whether an onto map admits no shrinking of its domain.

    Three criteria: the edge component is bijective; independent vertices
    land on independent vertices; every independent vertex of the codomain
    has exactly one independent preimage.  The report names the first
    violated criterion and its witness.
    """
    if not is_epi(phi):
        raise ValueError("is_epi_coessential: map is not epic")
    G, H = phi.dom, phi.cod
    seen: dict = {}
    for e in sort_ids(G.edges):
        f = phi.emap[e]
        if f in seen:
            return CheckReport.failed(
                f"edges {seen[f]} and {e} both map to {f}", witness=(seen[f], e))
        seen[f] = e
    dom_independent = independent_vertices(G)
    cod_independent = independent_vertices(H)
    for v in sort_ids(dom_independent):
        if phi.vmap[v] not in cod_independent:
            return CheckReport.failed(
                f"independent vertex {v} lands on the non-independent {phi.vmap[v]}",
                witness=v)
    for w in sort_ids(cod_independent):
        preimages = sort_ids(v for v in dom_independent if phi.vmap[v] == w)
        if len(preimages) != 1:
            return CheckReport.failed(
                f"independent vertex {w} has {len(preimages)} independent preimages",
                witness=w)
    return CheckReport.passed()


def cover(G: Quiver) -> tuple:
    """(explosion(G), covering_map(G)): an epi-projective quiver mapped onto
    G by an epic, coessential projection."""
    return explosion(G), covering_map(G)
