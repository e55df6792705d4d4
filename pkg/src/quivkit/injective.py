"""Loaded quivers, extensions along one-to-one maps, essential embeddings,
and the loading construction that completes a quiver into its smallest
loaded extension.
"""

from __future__ import annotations

from .core import (CheckReport, Id, Quiver, QuiverMorphism, is_mono, min_id,
                   sort_ids, tid)
from .reflections import BOUQUET_VERTEX, build_B


def edges_between(J: Quiver, v: Id, w: Id) -> frozenset:
    """All edges of J with source v and target w."""
    if v not in J.vertices:
        raise ValueError(f"unknown vertex: {v}")
    if w not in J.vertices:
        raise ValueError(f"unknown vertex: {w}")
    return frozenset(e for e in J.edges if J.src[e] == v and J.tgt[e] == w)


def is_loaded(J: Quiver) -> bool:
    """True when every ordered vertex pair (v, w) carries at least one edge."""
    present = {(J.src[e], J.tgt[e]) for e in J.edges}
    return all((v, w) in present for v in J.vertices for w in J.vertices)


def is_mono_injective(J: Quiver) -> bool:
    """Loaded with at least one vertex: every map into J extends along monos."""
    return bool(J.vertices) and is_loaded(J)


def extend_along_mono(phi: QuiverMorphism, psi: QuiverMorphism) -> QuiverMorphism:
    """Extend psi: D -> J through a mono phi: D -> C to all of C.

    On the image of phi the extension is forced by psi.  Every vertex outside
    the image goes to the least vertex of J, and every edge outside the image
    goes to the least edge of J between the images of its endpoints; J loaded
    and nonempty guarantees such an edge exists.  The result m satisfies
    m . phi == psi exactly.
    """
    if phi.dom != psi.dom:
        raise ValueError("extend_along_mono: maps must share their domain")
    if not is_mono(phi):
        raise ValueError("extend_along_mono: map to extend through is not monic")
    J = psi.cod
    if not is_mono_injective(J):
        raise ValueError("extend_along_mono: codomain is not loaded with a vertex")
    D, C = phi.dom, phi.cod
    vertex_preimage = {phi.vmap[x]: x for x in D.vertices}
    edge_preimage = {phi.emap[y]: y for y in D.edges}
    sink = min_id(J.vertices)
    vhat = {v: psi.vmap[vertex_preimage[v]] if v in vertex_preimage else sink
            for v in C.vertices}
    ehat = {}
    for e in C.edges:
        if e in edge_preimage:
            ehat[e] = psi.emap[edge_preimage[e]]
        else:
            ehat[e] = min_id(edges_between(J, vhat[C.src[e]], vhat[C.tgt[e]]))
    return QuiverMorphism(C, J, vhat, ehat)


def is_mono_essential(phi: QuiverMorphism) -> CheckReport:
    """Decide whether a mono admits no collapsing of its codomain.

    Empty-domain case: the codomain may have at most one vertex and at most
    one edge.  Otherwise three criteria: no new vertices; over vertex pairs
    already spanned by the domain, the codomain's parallel edges are exactly
    the image; over unspanned pairs, at most one edge.  The report names the
    first violated criterion and the witnessing vertex or pair.
    """
    if not is_mono(phi):
        raise ValueError("is_mono_essential: map is not monic")
    D, C = phi.dom, phi.cod
    if not D.vertices:
        failures = []
        if len(C.vertices) > 1:
            failures.append(f"codomain has {len(C.vertices)} vertices; at most one allowed")
        if len(C.edges) > 1:
            failures.append(f"codomain has {len(C.edges)} edges; at most one allowed")
        return CheckReport(not failures, tuple(failures))
    image_vertices = set(phi.vmap.values())
    if image_vertices != set(C.vertices):
        extra = min_id(C.vertices - image_vertices)
        return CheckReport.failed(f"vertex {extra} is outside the image", witness=extra)
    for v in sort_ids(D.vertices):
        for w in sort_ids(D.vertices):
            fibre = edges_between(D, v, w)
            cod_fibre = edges_between(C, phi.vmap[v], phi.vmap[w])
            if fibre:
                if {phi.emap[e] for e in fibre} != cod_fibre:
                    return CheckReport.failed(
                        f"extra parallel edge over the spanned pair ({v}, {w})",
                        witness=(v, w))
            elif len(cod_fibre) > 1:
                return CheckReport.failed(
                    f"{len(cod_fibre)} parallel edges over the unspanned pair ({v}, {w})",
                    witness=(v, w))
    return CheckReport.passed()


def loading(D: Quiver) -> Quiver:
    """D with one fresh edge added for every ordered vertex pair lacking one.

    Existing edges are kept as (0, e); each pair (v, w) with no edge gains
    (1, v, w) from v to w.  The result is always loaded.
    """
    present = {(D.src[e], D.tgt[e]) for e in D.edges}
    arrows = [(tid(0, e), D.src[e], D.tgt[e]) for e in D.edges]
    for v in sort_ids(D.vertices):
        for w in sort_ids(D.vertices):
            if (v, w) not in present:
                arrows.append((tid(1, v, w), v, w))
    return Quiver.build(D.vertices, arrows)


def envelope(D: Quiver) -> tuple:
    """Least loaded extension of D: a pair (E, j) with j: D -> E.

    E is loaded with at least one vertex, and j is monic and essential.  For
    a quiver with vertices this is the loading with its canonical embedding;
    the empty quiver embeds into the one-loop bouquet instead.
    """
    if D.vertices:
        L = loading(D)
        j = QuiverMorphism(D, L,
                           {v: v for v in D.vertices},
                           {e: tid(0, e) for e in D.edges})
        return L, j
    one_loop = build_B({BOUQUET_VERTEX})
    return one_loop, QuiverMorphism(D, one_loop, {}, {})
