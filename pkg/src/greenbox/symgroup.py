"""
Symmetric-group combinatorics.

Partitions with the dominance orientation fixed by the dihedral/type-A
examples (the single-row partition is minimal), p-restricted partitions,
Robinson-Schensted insertion and the type A cell combinatorics it induces,
characters by the Murnaghan-Nakayama rule, central idempotents of Q[S_m],
and the right regular representation.  Group elements are 0-indexed
one-line tuples; composition (u * v) applies v first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Perm = tuple[int, ...]


# ----------------------------------------------------------------------
# Partitions.

def partitions(size: int) -> Iterator[Partition]:
    """All partitions of `size`, parts weakly decreasing."""
    def rec(remaining: int, maxpart: int, acc: list[int]):
        if remaining == 0:
            yield tuple(acc)
            return
        for part in range(min(remaining, maxpart), 0, -1):
            acc.append(part)
            yield from rec(remaining - part, part, acc)
            acc.pop()
    if size == 0:
        yield ()
        return
    yield from rec(size, size, [])


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    out = []
    for col in range(shape[0]):
        out.append(sum(1 for part in shape if part > col))
    return tuple(out)


def is_p_restricted(shape: Partition, p) -> bool:
    """Consecutive column lengths differ by less than p (empty columns
    count as length zero); everything is restricted for p = infinity."""
    if p == float("inf") or p is None:
        return True
    cols = conjugate(shape) + (0,)
    return all(cols[i] - cols[i + 1] < p for i in range(len(cols) - 1))


def p_restricted_partitions(size: int, p) -> list[Partition]:
    """The p-restricted partitions of `size`, listed along the dominance
    order with the single-row partition first."""
    out = [s for s in partitions(size) if is_p_restricted(s, p)]
    out.sort(key=lambda s: _psums(s), reverse=True)
    return out


def _psums(shape: Partition) -> tuple[int, ...]:
    acc, out = 0, []
    for part in shape:
        acc += part
        out.append(acc)
    return tuple(out)


def dominance_leq(a: Partition, b: Partition) -> bool:
    """a <=_d b in the orientation where the row partition is minimal:
    (3) <_d (2,1) <_d (1,1,1)."""
    if sum(a) != sum(b):
        raise ValueError("dominance compares partitions of equal size")
    pa, pb = _psums(a), _psums(b)
    k = max(len(pa), len(pb))
    total = sum(a)
    pa = pa + (total,) * (k - len(pa))
    pb = pb + (total,) * (k - len(pb))
    return all(y <= x for x, y in zip(pa, pb))


def hook_dimension(shape: Partition) -> int:
    """Number of standard tableaux, by the hook length formula."""
    if not shape:
        return 1
    cols = conjugate(shape)
    prod = 1
    for i, row in enumerate(shape):
        for j in range(row):
            prod *= row - j + cols[j] - i - 1
    return factorial(sum(shape)) // prod


# ----------------------------------------------------------------------
# Permutations.

def compose(u: Perm, v: Perm) -> Perm:
    """(u * v)(i) = u[v[i]] (apply v first)."""
    return tuple(u[x] for x in v)

def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x] = i
    return tuple(out)


def cycle_type(w: Perm) -> Partition:
    seen = [False] * len(w)
    parts = []
    for i in range(len(w)):
        if not seen[i]:
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = w[j]
                length += 1
            parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def all_perms(m: int) -> list[Perm]:
    """Canonical (lexicographic) order of S_m."""
    return list(permutations(range(m)))


# ----------------------------------------------------------------------
# Robinson-Schensted.

Tableau = tuple[tuple[int, ...], ...]


def rsk(word: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row insertion; returns the pair (P, Q) of standard tableaux for a
    permutation word.

    >>> rsk((2, 3, 1))
    (((1, 3), (2,)), ((1, 2), (3,)))
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(word, start=1):
        x = value
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            current = p_rows[row]
            bump = None
            for i, y in enumerate(current):
                if y > x:
                    bump = i
                    break
            if bump is None:
                current.append(x)
                q_rows[row].append(step)
                break
            current[bump], x = x, current[bump]
            row += 1
    P = tuple(tuple(r) for r in p_rows)
    Q = tuple(tuple(r) for r in q_rows)
    return P, Q


def inverse_rsk(P: Tableau, Q: Tableau) -> tuple[int, ...]:
    """Recover the word with rsk(word) == (P, Q)."""
    p_rows = [list(r) for r in P]
    q_rows = [list(r) for r in Q]
    n = sum(len(r) for r in p_rows)
    word: list[int] = []
    for step in range(n, 0, -1):
        row = next(i for i, r in enumerate(q_rows) if r and r[-1] == step)
        q_rows[row].pop()
        x = p_rows[row].pop()
        for r in range(row - 1, -1, -1):
            target = max(i for i, y in enumerate(p_rows[r]) if y < x)
            p_rows[r][target], x = x, p_rows[r][target]
        word.append(x)
    word.reverse()
    return tuple(word)


def tableau_shape(t: Tableau) -> Partition:
    return tuple(len(r) for r in t)


def typeA_cells(m: int) -> dict:
    """Left/right/two-sided cell partition of S_m via RSK.

    Left cells are the fibers of Q, right cells the fibers of P, and
    two-sided cells the fibers of the common shape.  Returns a dict with
    the cell lists and the standard-tableau counts per shape.
    """
    if m > 7:
        raise ValueError("typeA_cells supports m <= 7")
    left: dict[Tableau, list[Perm]] = {}
    right: dict[Tableau, list[Perm]] = {}
    twosided: dict[Partition, list[Perm]] = {}
    for w in permutations(range(1, m + 1)):
        P, Q = rsk(w)
        zero_based = tuple(x - 1 for x in w)
        left.setdefault(Q, []).append(zero_based)
        right.setdefault(P, []).append(zero_based)
        twosided.setdefault(tableau_shape(P), []).append(zero_based)
    f = {shape: hook_dimension(shape) for shape in twosided}
    return {
        "left": left,
        "right": right,
        "twosided": twosided,
        "f": f,
    }


# ----------------------------------------------------------------------
# Characters (Murnaghan-Nakayama).

@lru_cache(maxsize=None)
def _mn(shape: Partition, cycle: Partition) -> int:
    if not cycle:
        return 1 if not shape else 0
    k = cycle[0]
    rest = cycle[1:]
    ell = len(shape)
    beta = [shape[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in beta_set:
            continue
        height = sum(1 for x in beta if c < x < b)
        newbeta = sorted((x for x in beta if x != b), reverse=True)
        newbeta.append(c)
        newbeta.sort(reverse=True)
        newshape = tuple(x - (ell - 1 - i) for i, x in enumerate(newbeta))
        newshape = tuple(x for x in newshape if x > 0)
        total += (-1) ** height * _mn(newshape, rest)
    return total


def mn_character(shape: Partition, cycle: Partition) -> int:
    """Character value of the simple S_m-module labelled by `shape` on the
    class of `cycle`, by border-strip recursion."""
    shape = tuple(shape)
    cycle = tuple(sorted(cycle, reverse=True))
    if sum(shape) != sum(cycle):
        raise ValueError("shape and cycle type must have equal size")
    return _mn(shape, cycle)


def character_table(m: int) -> dict:
    """Rows = partitions of m (dominance order, row partition first),
    columns = cycle types in the same order."""
    shapes = p_restricted_partitions(m, float("inf"))
    return {
        "shapes": shapes,
        "values": [[mn_character(s, c) for c in shapes] for s in shapes],
    }


# ----------------------------------------------------------------------
# Group algebra of S_m over Q.

GroupAlgebraElem = dict[Perm, Fraction]


def ga_mul(x: GroupAlgebraElem, y: GroupAlgebraElem) -> GroupAlgebraElem:
    out: GroupAlgebraElem = {}
    for g, cg in x.items():
        for h, ch in y.items():
            k = compose(g, h)
            c = out.get(k, Fraction(0)) + cg * ch
            if c:
                out[k] = c
            elif k in out:
                del out[k]
    return out


def ga_scale(x: GroupAlgebraElem, c) -> GroupAlgebraElem:
    c = Fraction(c)
    return {g: c * v for g, v in x.items() if c * v}


def ga_add(x: GroupAlgebraElem, y: GroupAlgebraElem) -> GroupAlgebraElem:
    out = dict(x)
    for g, c in y.items():
        s = out.get(g, Fraction(0)) + c
        if s:
            out[g] = s
        elif g in out:
            del out[g]
    return out


def central_idempotent(shape: Partition, m: int) -> GroupAlgebraElem:
    """e_chi = (chi(1)/m!) sum_g chi(g^{-1}) g, the central idempotent of
    Q[S_m] projecting onto the chi-isotypic component."""
    if m > 6:
        raise ValueError("central_idempotent supports m <= 6")
    if sum(shape) != m:
        raise ValueError("shape must be a partition of m")
    dim = hook_dimension(shape)
    scale = Fraction(dim, factorial(m))
    out: GroupAlgebraElem = {}
    for g in permutations(range(m)):
        val = mn_character(shape, cycle_type(g))
        if val:
            out[g] = scale * val
    return out


def regular_representation(x: GroupAlgebraElem, m: int) -> list[list[Fraction]]:
    """Matrix of right multiplication by x on Q[S_m]: row i, column j holds
    the coefficient of perm_j in perm_i * x, permutations in canonical
    order."""
    if m > 6:
        raise ValueError("regular_representation supports m <= 6")
    perms = all_perms(m)
    index = {g: i for i, g in enumerate(perms)}
    size = len(perms)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i, g in enumerate(perms):
        row = rows[i]
        for h, c in x.items():
            row[index[compose(g, h)]] += c
    return rows
