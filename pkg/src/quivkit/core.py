"""Finite directed multigraphs (quivers) and their structure-preserving maps.

A quiver is a finite vertex set and a finite edge set together with total
source and target maps; loops and parallel edges are allowed.  A morphism is
a pair of maps, one on vertices and one on edges, that commutes with source
and target.  All values here are immutable: constructions elsewhere in the
package return fresh quivers and never mutate their inputs, so everything is
safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Iterable, Mapping, Union


@dataclass(frozen=True)
class TaggedId:
    """Structured identifier: a nonempty tuple of small naturals and ids.

    Constructed elements are named by tuples, e.g. the endpoints (0, s) and
    (1, s) of an independent arrow, a loop-filling edge (1, v, w), disjoint
    union tags (0, x) / (1, x), and ordered pairs (s, t).  Equality and the
    canonical ordering are structural.
    """

    parts: tuple

    def __post_init__(self) -> None:
        if not isinstance(self.parts, tuple) or not self.parts:
            raise ValueError("TaggedId requires a nonempty tuple of parts")
        for part in self.parts:
            if isinstance(part, bool):
                raise ValueError(f"invalid TaggedId part: {part!r}")
            if isinstance(part, int):
                if part < 0:
                    raise ValueError(f"TaggedId tags must be naturals: {part!r}")
            elif isinstance(part, str):
                if not part:
                    raise ValueError("TaggedId parts must be nonempty strings")
            elif not isinstance(part, TaggedId):
                raise ValueError(f"invalid TaggedId part: {part!r}")

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return "tid" + str(self)


Id = Union[str, TaggedId]


def tid(*parts: "int | Id") -> TaggedId:
    """Shorthand constructor: tid(0, "e") == TaggedId((0, "e"))."""
    return TaggedId(tuple(parts))


def _part_key(part) -> tuple:
    if isinstance(part, int):
        return (0, part)
    if isinstance(part, str):
        return (1, part)
    return (2, tuple(_part_key(p) for p in part.parts))


def id_key(x: Id) -> tuple:
    """Sort key realizing the canonical total order on ids.

    Strings come first (lexicographically), then tagged ids ordered
    structurally with naturals before strings before nested tags.  The order
    is deterministic and stable across runs; every "choose any" step in the
    package picks the minimum under this order.
    """
    if isinstance(x, str):
        return (0, x)
    if isinstance(x, TaggedId):
        return (1, tuple(_part_key(p) for p in x.parts))
    raise TypeError(f"not an id: {x!r}")


def sort_ids(ids: Iterable[Id]) -> list:
    return sorted(ids, key=id_key)


def min_id(ids: Iterable[Id]) -> Id:
    """Canonical minimum of a nonempty collection of ids."""
    return min(ids, key=id_key)


@dataclass(frozen=True)
class CheckReport:
    """Verdict of a decision procedure plus failure messages and a witness."""

    ok: bool
    failures: tuple = ()
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "CheckReport":
        return cls(True)

    @classmethod
    def failed(cls, *failures: str, witness: Any = None) -> "CheckReport":
        return cls(False, tuple(failures), witness)


@dataclass(frozen=True)
class Quiver:
    """Finite quiver: vertex and edge sets with total source/target maps.

    The constructor freezes its arguments but does not enforce
    well-formedness; malformed quivers can be represented so that
    validate_quiver can report on them.  Equality is structural (same id
    sets, same endpoint maps); isomorphism is a separate question answered
    by homomorphism search.
    """

    vertices: frozenset
    edges: frozenset
    src: Mapping
    tgt: Mapping

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(self, "src", MappingProxyType(dict(self.src)))
        object.__setattr__(self, "tgt", MappingProxyType(dict(self.tgt)))

    __hash__ = None  # structural equality only

    @classmethod
    def build(cls, vertices: Iterable[Id], arrows: Iterable[tuple] = ()) -> "Quiver":
        """Build from vertex ids and (edge, source, target) triples."""
        src = {}
        tgt = {}
        for e, s, t in arrows:
            src[e] = s
            tgt[e] = t
        return cls(frozenset(vertices), frozenset(src), src, tgt)

    def arrows(self) -> list:
        """Edges as (id, source, target) triples in canonical order."""
        return [(e, self.src[e], self.tgt[e]) for e in sort_ids(self.edges)]

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class QuiverMorphism:
    """Vertex map plus edge map between quivers, commuting with endpoints."""

    dom: Quiver
    cod: Quiver
    vmap: Mapping
    emap: Mapping

    def __post_init__(self) -> None:
        object.__setattr__(self, "vmap", MappingProxyType(dict(self.vmap)))
        object.__setattr__(self, "emap", MappingProxyType(dict(self.emap)))

    __hash__ = None

    def __repr__(self) -> str:
        return f"QuiverMorphism({self.dom!r} -> {self.cod!r})"


def validate_quiver(q: Quiver) -> CheckReport:
    """Check that src/tgt are defined on exactly the edge set and land in V."""
    failures = []
    for e in sort_ids(q.edges):
        for name, table in (("src", q.src), ("tgt", q.tgt)):
            if e not in table:
                failures.append(f"{name} undefined for edge {e}")
            elif table[e] not in q.vertices:
                failures.append(f"{name}({e}) = {table[e]} is not a vertex")
    for name, table in (("src", q.src), ("tgt", q.tgt)):
        for e in sort_ids(set(table) - q.edges):
            failures.append(f"{name} defined on unknown edge {e}")
    return CheckReport(not failures, tuple(failures))


def validate_morphism(m: QuiverMorphism) -> CheckReport:
    """Check totality of both components and both commuting squares.

    Failures are reported in canonical edge order, so the first entry names
    the first violating edge and which square fails there.
    """
    failures = []
    d, c = m.dom, m.cod
    for v in sort_ids(d.vertices):
        if v not in m.vmap:
            failures.append(f"vertex map undefined at {v}")
        elif m.vmap[v] not in c.vertices:
            failures.append(f"vertex map sends {v} outside the codomain")
    for v in sort_ids(set(m.vmap) - d.vertices):
        failures.append(f"vertex map defined on unknown vertex {v}")
    for e in sort_ids(d.edges):
        if e not in m.emap:
            failures.append(f"edge map undefined at {e}")
            continue
        image = m.emap[e]
        if image not in c.edges:
            failures.append(f"edge map sends {e} outside the codomain")
            continue
        if m.vmap.get(d.src.get(e)) != c.src.get(image):
            failures.append(f"source square fails at edge {e}")
        if m.vmap.get(d.tgt.get(e)) != c.tgt.get(image):
            failures.append(f"target square fails at edge {e}")
    for e in sort_ids(set(m.emap) - d.edges):
        failures.append(f"edge map defined on unknown edge {e}")
    return CheckReport(not failures, tuple(failures))


def identity(q: Quiver) -> QuiverMorphism:
    return QuiverMorphism(q, q, {v: v for v in q.vertices}, {e: e for e in q.edges})


def compose(g: QuiverMorphism, f: QuiverMorphism) -> QuiverMorphism:
    """Componentwise composite g after f; requires cod(f) == dom(g)."""
    if f.cod != g.dom:
        raise ValueError("compose: codomain of the inner map must equal the domain of the outer map")
    vmap = {v: g.vmap[f.vmap[v]] for v in f.dom.vertices}
    emap = {e: g.emap[f.emap[e]] for e in f.dom.edges}
    return QuiverMorphism(f.dom, g.cod, vmap, emap)


def is_mono(m: QuiverMorphism) -> bool:
    """One-to-one on vertices and on edges."""
    return (len(set(m.vmap.values())) == len(m.vmap)
            and len(set(m.emap.values())) == len(m.emap))


def is_epi(m: QuiverMorphism) -> bool:
    """Onto on vertices and on edges."""
    return (set(m.vmap.values()) == set(m.cod.vertices)
            and set(m.emap.values()) == set(m.cod.edges))


def is_iso(m: QuiverMorphism) -> bool:
    """Bijective on vertices and on edges."""
    return (len(m.vmap) == len(m.cod.vertices) == len(set(m.vmap.values()))
            and len(m.emap) == len(m.cod.edges) == len(set(m.emap.values())))


def invert(m: QuiverMorphism) -> QuiverMorphism:
    if not is_iso(m):
        raise ValueError("invert: morphism is not an isomorphism")
    return QuiverMorphism(
        m.cod,
        m.dom,
        {w: v for v, w in m.vmap.items()},
        {f: e for e, f in m.emap.items()},
    )
