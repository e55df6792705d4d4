"""Brute-force cross-checks behind the characterization theorems.

Each suite here pits a direct decision procedure against an exhaustive
search that knows nothing about it: essential maps against every quotient of
the codomain, coessential maps against every subquiver of the domain, the
loaded/disjoint-arrow characterizations against raw lifting searches, the
hom-counting laws against full enumeration, and the four universal
constructions against their mediating-morphism bijections.  Everything runs
at exhaustive small scale, where the search spaces are still honest.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, List

from .core import (Quiver, QuiverMorphism, compose, is_epi, is_mono,
                   validate_morphism)
from .homsearch import enumerate_homs, enumerate_quivers, count_homs
from .injective import envelope, is_loaded, is_mono_essential, is_mono_injective
from .limits import (coequalizer, coproduct, enumerate_congruences,
                     enumerate_subquivers, equalizer, product, quotient)
from .projective import cover, is_epi_coessential, is_epi_projective
from .reflections import build_B, build_I, build_K, build_M
from .homsearch import is_injective_wrt, is_projective_wrt


@dataclass(frozen=True)
class SuiteResult:
    name: str
    instances: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        detail = "" if self.ok else f" [{len(self.failures)} failures; first: {self.failures[0]}]"
        return f"{status}  {self.name}  ({self.instances} instances){detail}"


def subquiver_inclusions(C: Quiver) -> Iterator[QuiverMorphism]:
    """Every mono into C, up to renaming its domain."""
    for sub in enumerate_subquivers(C):
        yield sub.inclusion()


def quotient_projections(G: Quiver) -> Iterator[QuiverMorphism]:
    """Every epi out of G, up to renaming its codomain."""
    for c in enumerate_congruences(G):
        yield quotient(c)[1]


def essential_by_quotients(phi: QuiverMorphism) -> bool:
    """Oracle: phi is essential iff no congruence of its codomain merges
    anything while staying one-to-one in restriction to the image."""
    for c in enumerate_congruences(phi.cod):
        _, proj = quotient(c)
        if is_mono(compose(proj, phi)) and not is_mono(proj):
            return False
    return True


def coessential_by_subquivers(phi: QuiverMorphism) -> bool:
    """Oracle: phi is coessential iff no proper subquiver of its domain
    still covers the codomain through phi."""
    for sub in enumerate_subquivers(phi.dom):
        inc = sub.inclusion()
        if is_epi(compose(phi, inc)) and not is_epi(inc):
            return False
    return True


def mono_injective_by_lifting(J: Quiver, vmax: int = 2, emax: int = 1) -> bool:
    """Oracle: J extends maps along every small mono."""
    for C in enumerate_quivers(vmax, emax):
        for inc in subquiver_inclusions(C):
            if not is_injective_wrt(J, inc):
                return False
    return True


def epi_projective_by_lifting(P: Quiver, vmax: int = 2, emax: int = 1) -> bool:
    """Oracle: P lifts maps through every small epi."""
    for G in enumerate_quivers(vmax, emax):
        for proj in quotient_projections(G):
            if not is_projective_wrt(P, proj):
                return False
    return True


def verify_envelopes(vmax: int = 3, emax: int = 3) -> SuiteResult:
    """Every small quiver: its envelope is loaded with a vertex, and the
    embedding is a valid, monic, essential map."""
    failures: List[str] = []
    instances = 0
    for D in enumerate_quivers(vmax, emax):
        instances += 1
        loaded_extension, embedding = envelope(D)
        if not validate_morphism(embedding).ok:
            failures.append(f"invalid embedding for {D!r}")
        elif not is_loaded(loaded_extension):
            failures.append(f"envelope not loaded for {D!r}")
        elif not is_mono_injective(loaded_extension):
            failures.append(f"envelope not mono-injective for {D!r}")
        elif not is_mono(embedding):
            failures.append(f"embedding not monic for {D!r}")
        elif not is_mono_essential(embedding).ok:
            failures.append(f"embedding not essential for {D!r}")
    return SuiteResult("envelope construction", instances, tuple(failures))


def verify_covers(vmax: int = 3, emax: int = 3) -> SuiteResult:
    """Every small quiver: its cover is epi-projective and the projection is
    a valid epi, bijective on edges and coessential."""
    failures: List[str] = []
    instances = 0
    for G in enumerate_quivers(vmax, emax):
        instances += 1
        exploded, projection = cover(G)
        if not validate_morphism(projection).ok:
            failures.append(f"invalid projection for {G!r}")
        elif not is_epi(projection):
            failures.append(f"projection not epic for {G!r}")
        elif len(set(projection.emap.values())) != len(projection.emap) == len(G.edges):
            failures.append(f"projection not edge-bijective for {G!r}")
        elif not is_epi_projective(exploded):
            failures.append(f"cover not epi-projective for {G!r}")
        elif not is_epi_coessential(projection).ok:
            failures.append(f"projection not coessential for {G!r}")
    return SuiteResult("cover construction", instances, tuple(failures))


def verify_essential_characterization(vmax: int = 3, emax: int = 3) -> SuiteResult:
    """is_mono_essential against the quotient-witness oracle, over every
    subquiver inclusion of every small codomain."""
    failures: List[str] = []
    instances = 0
    for C in enumerate_quivers(vmax, emax):
        projections = []
        for c in enumerate_congruences(C):
            _, proj = quotient(c)
            projections.append((proj, is_mono(proj)))
        for sub in enumerate_subquivers(C):
            inc = sub.inclusion()
            instances += 1
            predicted = is_mono_essential(inc).ok
            actual = all(proj_mono or not is_mono(compose(proj, inc))
                         for proj, proj_mono in projections)
            if predicted != actual:
                failures.append(
                    f"disagreement on {sorted(map(str, sub.vertices))}/"
                    f"{sorted(map(str, sub.edges))} inside {C!r}:"
                    f" characterized={predicted} oracle={actual}")
    return SuiteResult("essential maps vs quotient witnesses", instances, tuple(failures))


def verify_coessential_characterization(vmax: int = 3, emax: int = 3) -> SuiteResult:
    """is_epi_coessential against the subquiver-witness oracle, over every
    congruence projection of every small domain."""
    failures: List[str] = []
    instances = 0
    for G in enumerate_quivers(vmax, emax):
        inclusions = [(sub.inclusion(),) for sub in enumerate_subquivers(G)]
        inclusions = [(inc, is_epi(inc)) for (inc,) in inclusions]
        for proj in quotient_projections(G):
            instances += 1
            predicted = is_epi_coessential(proj).ok
            actual = all(inc_epi or not is_epi(compose(proj, inc))
                         for inc, inc_epi in inclusions)
            if predicted != actual:
                failures.append(
                    f"disagreement on projection of {G!r}:"
                    f" characterized={predicted} oracle={actual}")
    return SuiteResult("coessential maps vs subquiver witnesses", instances, tuple(failures))


def verify_injective_lifting(object_vmax: int = 2, object_emax: int = 2,
                             probe_vmax: int = 2, probe_emax: int = 1) -> SuiteResult:
    """is_mono_injective against exhaustive lift searches at micro scale."""
    failures: List[str] = []
    instances = 0
    for J in enumerate_quivers(object_vmax, object_emax):
        instances += 1
        predicted = is_mono_injective(J)
        actual = mono_injective_by_lifting(J, probe_vmax, probe_emax)
        if predicted != actual:
            failures.append(f"disagreement on {J!r}: characterized={predicted} oracle={actual}")
    return SuiteResult("mono-injectivity vs lift search", instances, tuple(failures))


def verify_projective_lifting(object_vmax: int = 2, object_emax: int = 1,
                              probe_vmax: int = 2, probe_emax: int = 1) -> SuiteResult:
    """is_epi_projective against exhaustive colift searches at micro scale."""
    failures: List[str] = []
    instances = 0
    for P in enumerate_quivers(object_vmax, object_emax):
        instances += 1
        predicted = is_epi_projective(P)
        actual = epi_projective_by_lifting(P, probe_vmax, probe_emax)
        if predicted != actual:
            failures.append(f"disagreement on {P!r}: characterized={predicted} oracle={actual}")
    return SuiteResult("epi-projectivity vs colift search", instances, tuple(failures))


def random_quiver(rng: random.Random, vmax: int = 3, emax: int = 3) -> Quiver:
    k = rng.randint(0, vmax)
    m = rng.randint(0, emax) if k else 0
    vertices = [f"v{i}" for i in range(1, k + 1)]
    arrows = [(f"e{i}", rng.choice(vertices), rng.choice(vertices))
              for i in range(1, m + 1)]
    return Quiver.build(vertices, arrows)


def verify_counting_laws(trials: int = 20, seed: int = 1187) -> SuiteResult:
    """Hom counts into/out of the four one-parameter quivers match the
    closed-form exponents, degenerate empty-bouquet branch included."""
    rng = random.Random(seed)
    failures: List[str] = []
    instances = 0
    for trial in range(trials):
        S = frozenset(f"s{i}" for i in range(1, rng.randint(0, 3) + 1))
        G = random_quiver(rng)
        nv, ne, ns = len(G.vertices), len(G.edges), len(S)
        expected_bouquet = ns ** ne if S else (1 if ne == 0 else 0)
        checks = [
            ("independent vertices", count_homs(build_I(S), G), nv ** ns),
            ("independent edges", count_homs(build_M(S), G), ne ** ns),
            ("full quiver", count_homs(G, build_K(S)), ns ** nv),
            ("bouquet", count_homs(G, build_B(S)), expected_bouquet),
        ]
        for label, got, want in checks:
            instances += 1
            if got != want:
                failures.append(f"trial {trial} {label}: counted {got}, formula {want}")
    return SuiteResult("hom-counting laws", instances, tuple(failures))


def _morphism_key(m: QuiverMorphism) -> tuple:
    from .core import id_key
    return (tuple(sorted(m.vmap.items(), key=lambda kv: id_key(kv[0]))),
            tuple(sorted(m.emap.items(), key=lambda kv: id_key(kv[0]))))


def _bijection_failure(candidates, image_keys, expected_keys) -> str | None:
    if len(image_keys) != len(candidates):
        return "two mediating morphisms induce the same data (uniqueness fails)"
    if image_keys != expected_keys:
        return "some cone/cocone has no mediating morphism (existence fails)"
    return None


def verify_universal_properties(probe_vmax: int = 2, probe_emax: int = 1) -> SuiteResult:
    """Each construction's mediating-morphism rule is a bijection on hom sets.

    Legs range over quivers with at most 2 vertices and 2 edges (at most 1
    edge on the second leg); probe tips/tops over quivers with at most 2
    vertices and 1 edge.
    """
    failures: List[str] = []
    instances = 0
    probes = list(enumerate_quivers(probe_vmax, probe_emax))
    lefts = list(enumerate_quivers(2, 2))
    rights = list(enumerate_quivers(2, 1))

    for G, H in itertools.product(lefts, rights):
        prod = product(G, H)
        cop = coproduct(G, H)
        for C in probes:
            instances += 2
            into_product = list(enumerate_homs(C, prod.quiver))
            pair_keys = {(_morphism_key(compose(prod.onto_left, u)),
                          _morphism_key(compose(prod.onto_right, u)))
                         for u in into_product}
            expected = {(_morphism_key(a), _morphism_key(b))
                        for a in enumerate_homs(C, G)
                        for b in enumerate_homs(C, H)}
            problem = _bijection_failure(into_product, pair_keys, expected)
            if problem:
                failures.append(f"product of {G!r} and {H!r} probed by {C!r}: {problem}")

            out_of_coproduct = list(enumerate_homs(cop.quiver, C))
            pair_keys = {(_morphism_key(compose(u, cop.from_left)),
                          _morphism_key(compose(u, cop.from_right)))
                         for u in out_of_coproduct}
            expected = {(_morphism_key(a), _morphism_key(b))
                        for a in enumerate_homs(G, C)
                        for b in enumerate_homs(H, C)}
            problem = _bijection_failure(out_of_coproduct, pair_keys, expected)
            if problem:
                failures.append(f"coproduct of {G!r} and {H!r} probed by {C!r}: {problem}")

        parallel = list(enumerate_homs(G, H))
        for f, g in itertools.product(parallel, repeat=2):
            _, inc = equalizer(f, g)
            coq, coproj = coequalizer(f, g)
            for C in probes:
                instances += 2
                into_eq = list(enumerate_homs(C, inc.dom))
                keys = {_morphism_key(compose(inc, u)) for u in into_eq}
                expected = {_morphism_key(a) for a in enumerate_homs(C, G)
                            if compose(f, a) == compose(g, a)}
                problem = _bijection_failure(into_eq, keys, expected)
                if problem:
                    failures.append(f"equalizer of maps {G!r} => {H!r} probed by {C!r}: {problem}")

                out_of_coq = list(enumerate_homs(coq, C))
                keys = {_morphism_key(compose(u, coproj)) for u in out_of_coq}
                expected = {_morphism_key(b) for b in enumerate_homs(H, C)
                            if compose(b, f) == compose(b, g)}
                problem = _bijection_failure(out_of_coq, keys, expected)
                if problem:
                    failures.append(f"coequalizer of maps {G!r} => {H!r} probed by {C!r}: {problem}")
    return SuiteResult("universal properties", instances, tuple(failures))


def verify_all(vmax: int = 3, emax: int = 3) -> List[SuiteResult]:
    """The full battery, as run by the command-line verify-theorems."""
    return [
        verify_envelopes(vmax, emax),
        verify_covers(vmax, emax),
        verify_essential_characterization(vmax, emax),
        verify_coessential_characterization(vmax, emax),
        verify_injective_lifting(),
        verify_projective_lifting(),
        verify_counting_laws(),
        verify_universal_properties(),
    ]
