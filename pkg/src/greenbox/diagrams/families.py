"""
The diagram monoid families.

Twelve families share one multiplication kernel: the partition monoid and
its planar submonoid, rook-Brauer and Motzkin, Brauer and Temperley-Lieb,
rook and planar rook, the symmetric group and its (trivial) planar version,
and the two transformation monoids.  Each family carries a membership
predicate, a constructive enumerator (not a filter over all set
partitions), and a monoid generating set used by the cell engine's Cayley
closures.

Short names follow the command-line flags: t, pt, p, pp, robr, mo, br,
tl, ro, pro, sym, psym.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Callable, Iterator

from .diagram import (
    PartitionDiagram,
    identity_diagram,
    is_planar,
    make_diagram,
    one_line_to_diagram,
    perm_diagram,
)


# ----------------------------------------------------------------------
# Structural predicates.

def _block_sizes_at_most(a: PartitionDiagram, k: int) -> bool:
    return all(len(b) <= k for b in a.blocks)


def _is_matching(a: PartitionDiagram) -> bool:
    return all(len(b) == 2 for b in a.blocks)


def _is_partial_injection(a: PartitionDiagram) -> bool:
    for b in a.blocks:
        if len(b) > 2:
            return False
        if len(b) == 2 and not (b[0] < a.nbot <= b[1]):
            return False
    return True


def _is_permutation(a: PartitionDiagram) -> bool:
    return _is_matching(a) and _is_partial_injection(a)


def _is_transformation(a: PartitionDiagram) -> bool:
    n = a.nbot
    return all(sum(1 for x in b if x >= n) == 1 for b in a.blocks)


# ----------------------------------------------------------------------
# Constructive enumerators.  Points are listed in the planar boundary
# order where convenient; each enumerator yields every member once.

def _cycle_order(n: int) -> list[int]:
    """Boundary order: b0..b(n-1), t(n-1)..t0 (labels n..2n-1 reversed)."""
    return list(range(n)) + [n + j for j in range(n - 1, -1, -1)]


def _noncrossing_matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for i in range(1, len(points), 2):
        inside = points[1:i]
        outside = points[i + 1:]
        for m1 in _noncrossing_matchings(inside):
            for m2 in _noncrossing_matchings(outside):
                yield [(first, points[i])] + m1 + m2


def _all_matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1:]
        for m in _all_matchings(rest):
            yield [(first, points[i])] + m


def _noncrossing_partial_matchings(points: list[int]
                                   ) -> Iterator[list[tuple[int, ...]]]:
    if not points:
        yield []
        return
    first = points[0]
    for rest in _noncrossing_partial_matchings(points[1:]):
        yield [(first,)] + rest
    for i in range(1, len(points)):
        inside = points[1:i]
        outside = points[i + 1:]
        for m1 in _noncrossing_partial_matchings(inside):
            for m2 in _noncrossing_partial_matchings(outside):
                yield [(first, points[i])] + m1 + m2


def _all_partial_matchings(points: list[int]) -> Iterator[list[tuple[int, ...]]]:
    if not points:
        yield []
        return
    first = points[0]
    for rest in _all_partial_matchings(points[1:]):
        yield [(first,)] + rest
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1:]
        for m in _all_partial_matchings(rest):
            yield [(first, points[i])] + m


def _set_partitions(points: list[int]) -> Iterator[list[list[int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]
        yield [[first]] + partition


def _noncrossing_partitions(points: list[int]) -> Iterator[list[list[int]]]:
    if not points:
        yield []
        return
    first = points[0]
    rest = points[1:]
    # Choose the block of `first`; the gaps between chosen points are
    # partitioned independently, which is exactly noncrossingness.
    for k in range(len(rest) + 1):
        for chosen in combinations(range(len(rest)), k):
            segments = []
            prev = -1
            for idx in chosen:
                segments.append(rest[prev + 1:idx])
                prev = idx
            segments.append(rest[prev + 1:])
            parts: list[list[list[list[int]]]] = []
            for seg in segments:
                parts.append(list(_noncrossing_partitions(seg)))
            block = [first] + [rest[i] for i in chosen]

            def combine(i: int, acc: list[list[int]]):
                if i == len(parts):
                    yield [block] + acc
                    return
                for choice in parts[i]:
                    yield from combine(i + 1, acc + choice)

            yield from combine(0, [])


def _enum_symmetric(n: int) -> Iterator[PartitionDiagram]:
    for w in permutations(range(n)):
        yield perm_diagram(w)


def _enum_planar_symmetric(n: int) -> Iterator[PartitionDiagram]:
    yield identity_diagram(n)


def _enum_transformation(n: int) -> Iterator[PartitionDiagram]:
    for w in product(range(1, n + 1), repeat=n):
        yield one_line_to_diagram(w)


def _enum_planar_transformation(n: int) -> Iterator[PartitionDiagram]:
    for w in combinations_with_replacement(range(1, n + 1), n):
        yield one_line_to_diagram(w)


def _enum_tl(n: int) -> Iterator[PartitionDiagram]:
    for m in _noncrossing_matchings(_cycle_order(n)):
        yield PartitionDiagram(n, n, m)


def _enum_brauer(n: int) -> Iterator[PartitionDiagram]:
    for m in _all_matchings(list(range(2 * n))):
        yield PartitionDiagram(n, n, m)


def _enum_motzkin(n: int) -> Iterator[PartitionDiagram]:
    for m in _noncrossing_partial_matchings(_cycle_order(n)):
        yield PartitionDiagram(n, n, m)


def _enum_rook_brauer(n: int) -> Iterator[PartitionDiagram]:
    for m in _all_partial_matchings(list(range(2 * n))):
        yield PartitionDiagram(n, n, m)


def _enum_rook(n: int) -> Iterator[PartitionDiagram]:
    for k in range(n + 1):
        for dom in combinations(range(n), k):
            for img in combinations(range(n), k):
                for w in permutations(img):
                    blocks = [(d, n + i) for d, i in zip(dom, w)]
                    blocks += [(x,) for x in range(n) if x not in dom]
                    blocks += [(n + x,) for x in range(n) if x not in img]
                    yield PartitionDiagram(n, n, blocks)


def _enum_planar_rook(n: int) -> Iterator[PartitionDiagram]:
    for k in range(n + 1):
        for dom in combinations(range(n), k):
            for img in combinations(range(n), k):
                blocks = [(d, n + i) for d, i in zip(dom, img)]
                blocks += [(x,) for x in range(n) if x not in dom]
                blocks += [(n + x,) for x in range(n) if x not in img]
                yield PartitionDiagram(n, n, blocks)


def _enum_partition(n: int) -> Iterator[PartitionDiagram]:
    for p in _set_partitions(list(range(2 * n))):
        yield PartitionDiagram(n, n, p)


def _enum_planar_partition(n: int) -> Iterator[PartitionDiagram]:
    for p in _noncrossing_partitions(_cycle_order(n)):
        yield PartitionDiagram(n, n, p)


# ----------------------------------------------------------------------
# Generator diagrams.

def _gen_s(n: int, i: int) -> PartitionDiagram:
    w = list(range(n))
    w[i], w[i + 1] = w[i + 1], w[i]
    return perm_diagram(w)


def _gen_e(n: int, i: int) -> PartitionDiagram:
    blocks = [(i, i + 1), (n + i, n + i + 1)]
    blocks += [(x, n + x) for x in range(n) if x not in (i, i + 1)]
    return PartitionDiagram(n, n, blocks)


def _gen_cut(n: int, j: int) -> PartitionDiagram:
    blocks = [(j,), (n + j,)]
    blocks += [(x, n + x) for x in range(n) if x != j]
    return PartitionDiagram(n, n, blocks)


def _gen_fuse(n: int, i: int) -> PartitionDiagram:
    blocks = [(i, i + 1, n + i, n + i + 1)]
    blocks += [(x, n + x) for x in range(n) if x not in (i, i + 1)]
    return PartitionDiagram(n, n, blocks)


def _gen_lhook(n: int, i: int) -> PartitionDiagram:
    blocks = [(i + 1, n + i), (i,), (n + i + 1,)]
    blocks += [(x, n + x) for x in range(n) if x not in (i, i + 1)]
    return PartitionDiagram(n, n, blocks)


def _gen_rhook(n: int, i: int) -> PartitionDiagram:
    blocks = [(i, n + i + 1), (i + 1,), (n + i,)]
    blocks += [(x, n + x) for x in range(n) if x not in (i, i + 1)]
    return PartitionDiagram(n, n, blocks)


def _gen_merge(n: int) -> PartitionDiagram:
    w = [1] * 2 + list(range(3, n + 1))
    return one_line_to_diagram(w)


def _gen_down(n: int, i: int) -> PartitionDiagram:
    w = list(range(1, n + 1))
    w[i + 1] = i + 1
    return one_line_to_diagram(w)


def _gen_up(n: int, i: int) -> PartitionDiagram:
    w = list(range(1, n + 1))
    w[i] = i + 2
    return one_line_to_diagram(w)


def _adjacent(n: int):
    return range(n - 1)


def _gens_symmetric(n):
    return [_gen_s(n, i) for i in _adjacent(n)]


def _gens_planar_symmetric(n):
    return []


def _gens_transformation(n):
    gens = [_gen_s(n, i) for i in _adjacent(n)]
    if n >= 2:
        gens.append(_gen_merge(n))
    return gens


def _gens_planar_transformation(n):
    return [_gen_down(n, i) for i in _adjacent(n)] + \
           [_gen_up(n, i) for i in _adjacent(n)]


def _gens_tl(n):
    return [_gen_e(n, i) for i in _adjacent(n)]


def _gens_brauer(n):
    return [_gen_s(n, i) for i in _adjacent(n)] + \
           [_gen_e(n, i) for i in _adjacent(n)]


def _gens_rook(n):
    return [_gen_s(n, i) for i in _adjacent(n)] + \
           ([_gen_cut(n, 0)] if n >= 1 else [])


def _gens_planar_rook(n):
    gens = [_gen_lhook(n, i) for i in _adjacent(n)] + \
           [_gen_rhook(n, i) for i in _adjacent(n)]
    if n >= 1:
        gens.append(_gen_cut(n, 0))
    return gens


def _gens_motzkin(n):
    gens = [_gen_e(n, i) for i in _adjacent(n)] + \
           [_gen_lhook(n, i) for i in _adjacent(n)] + \
           [_gen_rhook(n, i) for i in _adjacent(n)]
    if n >= 1:
        gens.append(_gen_cut(n, 0))
    return gens


def _gens_rook_brauer(n):
    gens = [_gen_s(n, i) for i in _adjacent(n)] + \
           [_gen_e(n, i) for i in _adjacent(n)]
    if n >= 1:
        gens.append(_gen_cut(n, 0))
    return gens


def _gens_partition(n):
    gens = [_gen_s(n, i) for i in _adjacent(n)] + \
           [_gen_fuse(n, i) for i in _adjacent(n)]
    if n >= 1:
        gens.append(_gen_cut(n, 0))
    return gens


def _gens_planar_partition(n):
    return [_gen_fuse(n, i) for i in _adjacent(n)] + \
           [_gen_cut(n, j) for j in range(n)]


# ----------------------------------------------------------------------
# The registry.

@dataclass(frozen=True)
class DiagramFamily:
    key: str
    name: str
    planar: bool
    symmetric_group_sandwich: bool  # sandwiched algebras are K[S_lam]
    has_star: bool                  # closed under the antiinvolution
    enum_bound: int
    predicate: Callable[[PartitionDiagram], bool] = field(repr=False)
    enumerator: Callable[[int], Iterator[PartitionDiagram]] = field(repr=False)
    generator_fn: Callable[[int], list[PartitionDiagram]] = field(repr=False)

    def contains(self, a: PartitionDiagram) -> bool:
        return a.nbot == a.ntop and self.predicate(a)

    def generators(self, n: int) -> list[PartitionDiagram]:
        return self.generator_fn(n)


FAMILIES: dict[str, DiagramFamily] = {}


def _register(key, name, planar, sym_sandwich, has_star, bound, pred, enum, gens):
    FAMILIES[key] = DiagramFamily(
        key=key, name=name, planar=planar,
        symmetric_group_sandwich=sym_sandwich, has_star=has_star,
        enum_bound=bound, predicate=pred, enumerator=enum, generator_fn=gens)


_register("t", "full transformation monoid", False, True, False, 6,
          _is_transformation, _enum_transformation, _gens_transformation)
_register("pt", "planar transformation monoid", True, False, False, 8,
          lambda a: _is_transformation(a) and is_planar(a),
          _enum_planar_transformation, _gens_planar_transformation)
_register("p", "partition monoid", False, True, True, 4,
          lambda a: True, _enum_partition, _gens_partition)
_register("pp", "planar partition monoid", True, False, True, 5,
          is_planar, _enum_planar_partition, _gens_planar_partition)
_register("robr", "rook-Brauer monoid", False, True, True, 6,
          lambda a: _block_sizes_at_most(a, 2),
          _enum_rook_brauer, _gens_rook_brauer)
_register("mo", "Motzkin monoid", True, False, True, 8,
          lambda a: _block_sizes_at_most(a, 2) and is_planar(a),
          _enum_motzkin, _gens_motzkin)
_register("br", "Brauer monoid", False, True, True, 6,
          _is_matching, _enum_brauer, _gens_brauer)
_register("tl", "Temperley-Lieb monoid", True, False, True, 8,
          lambda a: _is_matching(a) and is_planar(a),
          _enum_tl, _gens_tl)
_register("ro", "rook monoid", False, True, True, 8,
          _is_partial_injection, _enum_rook, _gens_rook)
_register("pro", "planar rook monoid", True, False, True, 8,
          lambda a: _is_partial_injection(a) and is_planar(a),
          _enum_planar_rook, _gens_planar_rook)
_register("sym", "symmetric group", False, True, True, 7,
          _is_permutation, _enum_symmetric, _gens_symmetric)
_register("psym", "planar symmetric group", True, False, True, 12,
          lambda a: _is_permutation(a) and is_planar(a),
          _enum_planar_symmetric, _gens_planar_symmetric)


def family(key: str) -> DiagramFamily:
    try:
        return FAMILIES[key]
    except KeyError:
        raise ValueError(f"unknown family {key!r}; valid: {sorted(FAMILIES)}")


def in_family(a: PartitionDiagram, key: str) -> bool:
    return family(key).contains(a)


_ENUM_CACHE: dict[tuple[str, int], tuple[PartitionDiagram, ...]] = {}


def enumerate_family(key: str, n: int) -> tuple[PartitionDiagram, ...]:
    """All members, each exactly once, in canonical order."""
    fam = family(key)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > fam.enum_bound:
        raise ValueError(
            f"n={n} exceeds enumeration bound {fam.enum_bound} for "
            f"{fam.name}")
    hit = _ENUM_CACHE.get((key, n))
    if hit is None:
        hit = tuple(sorted(set(fam.enumerator(n))))
        _ENUM_CACHE[(key, n)] = hit
    return hit
