"""
Partition diagrams: the universal carrier for diagram monoids.

A diagram on n strands is a set partition of 2n boundary points, n on the
bottom (labels 0..n-1) and n on the top (labels n..2n-1).  Multiplication
is vertical gluing: in ``a * b`` the diagram ``a`` sits on top of ``b``,
so for transformations the product is the composite "apply b, then a".
Connected components trapped in the middle layer are counted and reported;
the diagram algebras evaluate each of them (loops, intervals, isolated
dots alike) to the loop parameter.

Rectangular diagrams (different numbers of bottom and top points) are
allowed; they show up as the top/bottom halves of factorizations and as
the glued middles of sandwich pairings.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from typing import Iterable, Sequence


class PartitionDiagram:
    """Immutable, interned set-partition diagram.

    ``blocks`` is the canonical form: each block a sorted tuple of labels,
    blocks sorted by their least label.  Bottom points are 0..nbot-1, top
    points are nbot..nbot+ntop-1.
    """

    __slots__ = ("nbot", "ntop", "blocks", "_hash", "__weakref__")
    _cache = weakref.WeakValueDictionary()

    def __new__(cls, nbot: int, ntop: int, blocks: Iterable[Iterable[int]]):
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        key = (nbot, ntop, canon)
        hit = cls._cache.get(key)
        if hit is not None:
            return hit
        self = object.__new__(cls)
        object.__setattr__(self, "nbot", nbot)
        object.__setattr__(self, "ntop", ntop)
        object.__setattr__(self, "blocks", canon)
        object.__setattr__(self, "_hash", hash(key))
        cls._cache[key] = self
        return self

    def __setattr__(self, name, value):
        raise AttributeError("PartitionDiagram is immutable")

    @property
    def n(self) -> int:
        """Strand count for square diagrams."""
        if self.nbot != self.ntop:
            raise ValueError("rectangular diagram has no single strand count")
        return self.nbot

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other or (
            isinstance(other, PartitionDiagram)
            and self.nbot == other.nbot and self.ntop == other.ntop
            and self.blocks == other.blocks)

    def __lt__(self, other):
        return (self.nbot, self.ntop, self.blocks) < \
            (other.nbot, other.ntop, other.blocks)

    def is_bottom(self, label: int) -> bool:
        return label < self.nbot

    def __repr__(self):
        return f"PartitionDiagram.parse({diagram_to_text(self)!r})"

    def __str__(self):
        return diagram_to_text(self)

    @staticmethod
    def parse(text: str) -> "PartitionDiagram":
        return text_to_diagram(text)


def make_diagram(n: int, blocks: Iterable[Iterable[int]],
                 ntop: int | None = None) -> PartitionDiagram:
    """Validated diagram constructor.

    Labels 0..n-1 are bottom points and n..n+ntop-1 are top points
    (ntop defaults to n).  Raises ValueError on overlaps, gaps or
    out-of-range labels.
    """
    ntop = n if ntop is None else ntop
    total = n + ntop
    seen = [False] * total
    material = []
    for b in blocks:
        bb = [int(x) for x in b]
        if not bb:
            raise ValueError("empty block")
        for x in bb:
            if not 0 <= x < total:
                raise ValueError(f"label {x} out of range for {total} points")
            if seen[x]:
                raise ValueError(f"label {x} appears in two blocks")
            seen[x] = True
        material.append(bb)
    if not all(seen):
        missing = [i for i, s in enumerate(seen) if not s]
        raise ValueError(f"labels not covered: {missing}")
    return PartitionDiagram(n, ntop, material)


def identity_diagram(n: int) -> PartitionDiagram:
    return PartitionDiagram(n, n, [(i, n + i) for i in range(n)])


def perm_diagram(word: Sequence[int]) -> PartitionDiagram:
    """Permutation diagram for a 0-indexed one-line word: i -> word[i]."""
    n = len(word)
    return PartitionDiagram(n, n, [(i, n + word[i]) for i in range(n)])


def multiply(a: PartitionDiagram, b: PartitionDiagram
             ) -> tuple[int, PartitionDiagram]:
    """Glue ``a`` on top of ``b``.

    Returns (closedCount, product) where closedCount is the number of
    connected components contained entirely in the middle layer, of any
    size, including isolated dots and straight intervals.
    """
    if a.nbot != b.ntop:
        raise ValueError(
            f"cannot glue: top of second factor has {b.ntop} points, "
            f"bottom of first has {a.nbot}")
    nbot, mid, ntop = b.nbot, a.nbot, a.ntop
    total = nbot + mid + ntop
    parent = list(range(total))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    # b occupies labels 0..nbot-1 (bottom) and nbot..nbot+mid-1 (middle).
    for block in b.blocks:
        it = iter(block)
        r = find(next(it))
        for x in it:
            rx = find(x)
            if rx != r:
                parent[rx] = r
    # a: its bottom j is middle nbot+j, its top j is nbot+mid+j.
    for block in a.blocks:
        it = iter(block)
        first = next(it)
        r = find(first + nbot if first < a.nbot else first + nbot + mid - a.nbot)
        for x in it:
            y = x + nbot if x < a.nbot else x + nbot + mid - a.nbot
            ry = find(y)
            if ry != r:
                parent[ry] = r

    groups: dict[int, list[int]] = {}
    for x in range(nbot):
        groups.setdefault(find(x), []).append(x)
    for x in range(nbot + mid, total):
        groups.setdefault(find(x), []).append(x - mid)
    boundary_roots = set(groups)
    middle_roots = {find(x) for x in range(nbot, nbot + mid)}
    closed = len(middle_roots - boundary_roots)
    product = PartitionDiagram(nbot, ntop, groups.values())
    return closed, product


def star(a: PartitionDiagram) -> PartitionDiagram:
    """The diagrammatic antiinvolution: exchange top and bottom rows."""
    nb, nt = a.nbot, a.ntop
    return PartitionDiagram(
        nt, nb,
        [[x + nt if x < nb else x - nb for x in block] for block in a.blocks])


def through_strands(a: PartitionDiagram) -> int:
    """Number of blocks meeting both the bottom and the top row."""
    count = 0
    for block in a.blocks:
        if block[0] < a.nbot and block[-1] >= a.nbot:
            count += 1
    return count


def _boundary_positions(a: PartitionDiagram) -> dict[int, int]:
    """Positions along the rectangle boundary, read bottom-left to
    bottom-right, then top-right to top-left."""
    pos = {}
    for i in range(a.nbot):
        pos[i] = i
    for j in range(a.ntop):
        pos[a.nbot + j] = a.nbot + (a.ntop - 1 - j)
    return pos


def is_planar(a: PartitionDiagram) -> bool:
    """True iff the partition is noncrossing for the boundary cycle."""
    pos = _boundary_positions(a)
    blocks = [sorted(pos[x] for x in block) for block in a.blocks]
    blocks = [b for b in blocks if len(b) > 1]
    for i in range(len(blocks)):
        bi = blocks[i]
        for j in range(i + 1, len(blocks)):
            bj = blocks[j]
            if bi[-1] < bj[0] or bj[-1] < bi[0]:
                continue
            merged = sorted([(p, 0) for p in bi] + [(p, 1) for p in bj])
            transitions = 0
            last = None
            for _, which in merged:
                if which != last:
                    transitions += 1
                    last = which
            if transitions >= 4:
                return False
    return True


@dataclass(frozen=True)
class Factorization:
    """a = top o middle o bottom with `lam` through strands.

    ``bottom`` maps n points to lam slots (no cups, splits or end dots),
    ``top`` maps lam slots to n points (no caps, merges or start dots),
    and ``middle`` is a permutation of the slots, the identity for planar
    families.  Slot i of the bottom is the through-block with the i-th
    smallest bottom label; slot j of the top is the through-block with the
    j-th smallest top label; middle[i] = j links them.
    """
    top: PartitionDiagram
    middle: tuple[int, ...]
    bottom: PartitionDiagram
    lam: int

    def middle_diagram(self) -> PartitionDiagram:
        return perm_diagram(self.middle)

    def recompose(self) -> tuple[int, PartitionDiagram]:
        c1, sb = multiply(self.middle_diagram(), self.bottom)
        c2, tsb = multiply(self.top, sb)
        return c1 + c2, tsb


def factorize(a: PartitionDiagram) -> Factorization:
    """The unique top/middle/bottom splitting of a square diagram."""
    n = a.n
    through = [b for b in a.blocks
               if b[0] < a.nbot and b[-1] >= a.nbot]
    lam = len(through)
    by_bottom = sorted(through, key=lambda b: b[0])
    by_top = sorted(through, key=lambda b: min(x for x in b if x >= a.nbot))
    top_rank = {b: j for j, b in enumerate(by_top)}
    middle = tuple(top_rank[b] for b in by_bottom)

    bottom_blocks = []
    top_blocks = []
    for i, b in enumerate(by_bottom):
        bottom_blocks.append([x for x in b if x < n] + [n + i])
    for j, b in enumerate(by_top):
        top_blocks.append([j] + [x - n + lam for x in b if x >= n])
    for b in a.blocks:
        if b[-1] < n:
            bottom_blocks.append(list(b))
        elif b[0] >= n:
            top_blocks.append([x - n + lam for x in b])
    beta = PartitionDiagram(n, lam, bottom_blocks)
    tau = PartitionDiagram(lam, n, top_blocks)
    return Factorization(top=tau, middle=middle, bottom=beta, lam=lam)


def one_line_to_diagram(word: Sequence[int]) -> PartitionDiagram:
    """Transformation diagram for a 1-indexed one-line word (i j k ...)."""
    n = len(word)
    fibers: dict[int, list[int]] = {}
    for i, v in enumerate(word):
        if not 1 <= v <= n:
            raise ValueError(f"one-line entry {v} out of range 1..{n}")
        fibers.setdefault(v - 1, []).append(i)
    blocks = []
    for j in range(n):
        blocks.append(fibers.get(j, []) + [n + j])
    return PartitionDiagram(n, n, blocks)


def diagram_to_one_line(a: PartitionDiagram) -> tuple[int, ...]:
    """Inverse of one_line_to_diagram; raises if not a transformation."""
    n = a.n
    word = [0] * n
    for block in a.blocks:
        tops = [x for x in block if x >= n]
        if len(tops) != 1:
            raise ValueError("diagram is not a transformation")
        j = tops[0] - n
        for x in block:
            if x < n:
                word[x] = j + 1
    if 0 in word:
        raise ValueError("diagram is not a transformation")
    return tuple(word)


# ----------------------------------------------------------------------
# Text and JSON formats.

def _label_str(a: PartitionDiagram, x: int) -> str:
    return f"b{x}" if x < a.nbot else f"t{x - a.nbot}"


def diagram_to_text(a: PartitionDiagram) -> str:
    """Render as ``n=4; [b0 b1 | t0 t1 | b2 t2 | b3 t3]``."""
    inner = " | ".join(" ".join(_label_str(a, x) for x in block)
                       for block in a.blocks)
    head = f"n={a.nbot}" if a.nbot == a.ntop else f"n={a.nbot}:{a.ntop}"
    return f"{head}; [{inner}]"


def text_to_diagram(text: str) -> PartitionDiagram:
    head, _, body = text.partition(";")
    head = head.strip()
    if not head.startswith("n="):
        raise ValueError(f"malformed diagram text {text!r}")
    size = head[2:]
    if ":" in size:
        nbot, ntop = (int(s) for s in size.split(":"))
    else:
        nbot = ntop = int(size)
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"malformed diagram text {text!r}")
    blocks = []
    inner = body[1:-1].strip()
    if inner:
        for part in inner.split("|"):
            block = []
            for tok in part.split():
                if tok[0] == "b":
                    block.append(int(tok[1:]))
                elif tok[0] == "t":
                    block.append(nbot + int(tok[1:]))
                else:
                    raise ValueError(f"bad label {tok!r}")
            blocks.append(block)
    d = make_diagram(nbot, blocks, ntop)
    return d


def diagram_to_labels(a: PartitionDiagram) -> list[list[str]]:
    """JSON-friendly array-of-arrays of label strings."""
    return [[_label_str(a, x) for x in block] for block in a.blocks]


def labels_to_diagram(n: int, blocks: Sequence[Sequence[str]],
                      ntop: int | None = None) -> PartitionDiagram:
    ntop = n if ntop is None else ntop
    out = []
    for block in blocks:
        row = []
        for tok in block:
            if tok[0] == "b":
                row.append(int(tok[1:]))
            elif tok[0] == "t":
                row.append(n + int(tok[1:]))
            else:
                raise ValueError(f"bad label {tok!r}")
        out.append(row)
    return make_diagram(n, out, ntop)
