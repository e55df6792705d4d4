"""Binary products and coproducts, equalizers, coequalizers, and the data
behind them: subquivers and quiver congruences.

Quotients pick the canonical-minimum member of each class as its
representative, so every construction here is deterministic and its output
can be compared structurally against golden values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .core import (CheckReport, Id, Quiver, QuiverMorphism, id_key, min_id,
                   sort_ids, tid)

ENUMERATION_LIMIT = 6  # set-partition / power-set enumeration guard


class _UnionFind:
    """Path-halving union-find over a fixed universe of ids."""

    def __init__(self, universe: Iterable[Id]):
        self.parent = {x: x for x in universe}

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def classes(self) -> tuple:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return tuple(frozenset(g) for g in groups.values())


def _canonical_classes(classes: Iterable[frozenset]) -> tuple:
    return tuple(sorted((frozenset(c) for c in classes),
                        key=lambda c: id_key(min_id(c))))


@dataclass(frozen=True)
class QuiverCongruence:
    """Compatible pair of partitions of a quiver's vertices and edges.

    Compatibility means equivalent edges have equivalent sources and
    equivalent targets, which is exactly what makes the quotient's endpoint
    maps well defined.  Classes are stored in canonical order, so equality
    of congruences is structural.
    """

    base: Quiver
    vertex_classes: tuple
    edge_classes: tuple

    def __post_init__(self) -> None:
        vcs = _canonical_classes(self.vertex_classes)
        ecs = _canonical_classes(self.edge_classes)
        object.__setattr__(self, "vertex_classes", vcs)
        object.__setattr__(self, "edge_classes", ecs)
        object.__setattr__(self, "_vrep", {x: min_id(c) for c in vcs for x in c})
        object.__setattr__(self, "_erep", {x: min_id(c) for c in ecs for x in c})

    __hash__ = None

    def vertex_rep(self, v) -> Id:
        return self._vrep[v]

    def edge_rep(self, e) -> Id:
        return self._erep[e]

    def __repr__(self) -> str:
        return (f"QuiverCongruence({len(self.vertex_classes)} vertex classes, "
                f"{len(self.edge_classes)} edge classes)")


def validate_congruence(c: QuiverCongruence) -> CheckReport:
    """Partitions must cover exactly the base sets and be compatible."""
    failures = []
    for name, classes, universe in (("vertex", c.vertex_classes, c.base.vertices),
                                    ("edge", c.edge_classes, c.base.edges)):
        seen: list = []
        for cls in classes:
            if not cls:
                failures.append(f"empty {name} class")
            seen.extend(cls)
        if len(seen) != len(set(seen)):
            failures.append(f"overlapping {name} classes")
        if set(seen) != set(universe):
            failures.append(f"{name} classes do not partition the base set")
    base = c.base
    for cls in c.edge_classes:
        members = sort_ids(cls)
        head = members[0]
        for other in members[1:]:
            if c.vertex_rep(base.src[head]) != c.vertex_rep(base.src[other]):
                failures.append(f"incompatible sources in class of {head}")
                break
            if c.vertex_rep(base.tgt[head]) != c.vertex_rep(base.tgt[other]):
                failures.append(f"incompatible targets in class of {head}")
                break
    return CheckReport(not failures, tuple(failures))


@dataclass(frozen=True)
class Subquiver:
    """Subsets of a quiver's vertices and edges, closed under endpoints."""

    base: Quiver
    vertices: frozenset
    edges: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(self.edges))

    __hash__ = None

    def as_quiver(self) -> Quiver:
        return Quiver(self.vertices, self.edges,
                      {e: self.base.src[e] for e in self.edges},
                      {e: self.base.tgt[e] for e in self.edges})

    def inclusion(self) -> QuiverMorphism:
        return QuiverMorphism(self.as_quiver(), self.base,
                              {v: v for v in self.vertices},
                              {e: e for e in self.edges})


def validate_subquiver(s: Subquiver) -> CheckReport:
    failures = []
    if not s.vertices <= s.base.vertices:
        failures.append("vertices not drawn from the base quiver")
    if not s.edges <= s.base.edges:
        failures.append("edges not drawn from the base quiver")
    for e in sort_ids(s.edges & s.base.edges):
        if s.base.src[e] not in s.vertices or s.base.tgt[e] not in s.vertices:
            failures.append(f"edge {e} has an endpoint outside the subquiver")
    return CheckReport(not failures, tuple(failures))


class Product(NamedTuple):
    quiver: Quiver
    onto_left: QuiverMorphism
    onto_right: QuiverMorphism


class Coproduct(NamedTuple):
    quiver: Quiver
    from_left: QuiverMorphism
    from_right: QuiverMorphism


def product(G: Quiver, H: Quiver) -> Product:
    """Tensor-style product: paired vertices, paired edges, paired endpoints."""
    vertices = [tid(v, w) for v in G.vertices for w in H.vertices]
    arrows = [(tid(e, f), tid(G.src[e], H.src[f]), tid(G.tgt[e], H.tgt[f]))
              for e in G.edges for f in H.edges]
    P = Quiver.build(vertices, arrows)
    onto_left = QuiverMorphism(P, G,
                               {x: x.parts[0] for x in P.vertices},
                               {x: x.parts[0] for x in P.edges})
    onto_right = QuiverMorphism(P, H,
                                {x: x.parts[1] for x in P.vertices},
                                {x: x.parts[1] for x in P.edges})
    return Product(P, onto_left, onto_right)


def coproduct(G: Quiver, H: Quiver) -> Coproduct:
    """Disjoint union, left elements tagged (0, x) and right tagged (1, x)."""
    vertices = [tid(0, v) for v in G.vertices] + [tid(1, v) for v in H.vertices]
    arrows = [(tid(0, e), tid(0, G.src[e]), tid(0, G.tgt[e])) for e in G.edges] \
        + [(tid(1, e), tid(1, H.src[e]), tid(1, H.tgt[e])) for e in H.edges]
    C = Quiver.build(vertices, arrows)
    from_left = QuiverMorphism(G, C,
                               {v: tid(0, v) for v in G.vertices},
                               {e: tid(0, e) for e in G.edges})
    from_right = QuiverMorphism(H, C,
                                {v: tid(1, v) for v in H.vertices},
                                {e: tid(1, e) for e in H.edges})
    return Coproduct(C, from_left, from_right)


def copair(f: QuiverMorphism, g: QuiverMorphism) -> QuiverMorphism:
    """Mediating morphism coproduct(dom f, dom g) -> Z for f: A -> Z, g: B -> Z."""
    if f.cod != g.cod:
        raise ValueError("copair: maps must share their codomain")
    cp = coproduct(f.dom, g.dom)
    vmap = {tid(0, v): f.vmap[v] for v in f.dom.vertices}
    vmap.update({tid(1, v): g.vmap[v] for v in g.dom.vertices})
    emap = {tid(0, e): f.emap[e] for e in f.dom.edges}
    emap.update({tid(1, e): g.emap[e] for e in g.dom.edges})
    return QuiverMorphism(cp.quiver, f.cod, vmap, emap)


def equalizer(f: QuiverMorphism, g: QuiverMorphism) -> tuple:
    """Subquiver of the shared domain where both maps agree, plus inclusion.

    Agreement on an edge forces agreement on its endpoints, so the result is
    closed automatically.
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("equalizer: maps must be parallel")
    vertices = frozenset(v for v in f.dom.vertices if f.vmap[v] == g.vmap[v])
    edges = frozenset(e for e in f.dom.edges if f.emap[e] == g.emap[e])
    sub = Subquiver(f.dom, vertices, edges)
    return sub, sub.inclusion()


def congruence_closure(base: Quiver, vpairs: Iterable[tuple] = (),
                       epairs: Iterable[tuple] = ()) -> QuiverCongruence:
    """Smallest congruence containing the given vertex and edge pairs.

    Merging two edges forces their sources and targets together; vertex
    merges force nothing further, so one propagation pass over the generating
    edge pairs reaches the fixpoint.
    """
    vuf = _UnionFind(base.vertices)
    euf = _UnionFind(base.edges)
    for a, b in vpairs:
        if a not in base.vertices or b not in base.vertices:
            raise ValueError(f"unknown vertex pair ({a}, {b})")
        vuf.union(a, b)
    for e, f in epairs:
        if e not in base.edges or f not in base.edges:
            raise ValueError(f"unknown edge pair ({e}, {f})")
        euf.union(e, f)
        vuf.union(base.src[e], base.src[f])
        vuf.union(base.tgt[e], base.tgt[f])
    return QuiverCongruence(base, vuf.classes(), euf.classes())


def quotient(c: QuiverCongruence) -> tuple:
    """Quotient quiver (classes named by their least member) plus projection."""
    base = c.base
    vertices = [min_id(cls) for cls in c.vertex_classes]
    arrows = []
    for cls in c.edge_classes:
        rep = min_id(cls)
        arrows.append((rep, c.vertex_rep(base.src[rep]), c.vertex_rep(base.tgt[rep])))
    Q = Quiver.build(vertices, arrows)
    proj = QuiverMorphism(base, Q,
                          {v: c.vertex_rep(v) for v in base.vertices},
                          {e: c.edge_rep(e) for e in base.edges})
    return Q, proj


def coequalizer(f: QuiverMorphism, g: QuiverMorphism) -> tuple:
    """Quotient of the shared codomain by the closure of pointwise pairs."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ValueError("coequalizer: maps must be parallel")
    vpairs = [(f.vmap[v], g.vmap[v]) for v in f.dom.vertices]
    epairs = [(f.emap[e], g.emap[e]) for e in f.dom.edges]
    return quotient(congruence_closure(f.cod, vpairs, epairs))


def _set_partitions(items: list) -> Iterator[list]:
    """All partitions of items into blocks, in a deterministic order."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]
        yield [[first]] + partition


def _subsets(items: list) -> Iterator[tuple]:
    return itertools.chain.from_iterable(
        itertools.combinations(items, r) for r in range(len(items) + 1))


def _check_enumeration_size(base: Quiver, limit: int) -> None:
    if len(base.vertices) > limit or len(base.edges) > limit:
        raise ValueError(
            f"quiver too large to enumerate over (limit {limit} per element kind)")


def enumerate_congruences(base: Quiver, limit: int = ENUMERATION_LIMIT) -> Iterator[QuiverCongruence]:
    """Every compatible congruence on a small quiver, each exactly once.

    For each edge partition the induced endpoint merges give the finest
    compatible vertex partition; the rest are exactly its coarsenings.
    """
    _check_enumeration_size(base, limit)
    edge_ids = sort_ids(base.edges)
    for eparts in _set_partitions(edge_ids):
        vuf = _UnionFind(base.vertices)
        for block in eparts:
            head = block[0]
            for other in block[1:]:
                vuf.union(base.src[head], base.src[other])
                vuf.union(base.tgt[head], base.tgt[other])
        forced = sorted(vuf.classes(), key=lambda c: id_key(min_id(c)))
        for grouping in _set_partitions(list(range(len(forced)))):
            vclasses = tuple(frozenset().union(*(forced[i] for i in group))
                             for group in grouping)
            yield QuiverCongruence(base, vclasses,
                                   tuple(frozenset(b) for b in eparts))


def enumerate_subquivers(base: Quiver, limit: int = ENUMERATION_LIMIT) -> Iterator[Subquiver]:
    """Every endpoint-closed pair of subsets of a small quiver."""
    _check_enumeration_size(base, limit)
    for vsub in _subsets(sort_ids(base.vertices)):
        vset = frozenset(vsub)
        allowed = [e for e in sort_ids(base.edges)
                   if base.src[e] in vset and base.tgt[e] in vset]
        for esub in _subsets(allowed):
            yield Subquiver(base, vset, frozenset(esub))
