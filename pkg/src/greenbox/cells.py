"""
The generic cell engine for based pairs.

A based pair is an algebra with a distinguished basis; the cell preorders
compare basis elements through the supports of products:

    a <=_l b  iff  b appears in c*a for some basis element c,

and dually on the right; two-sided combines both.  Cells are the strongly
connected components, the J-order is the condensation DAG (the unit's cell
is the unique bottom), and the ideal of "higher order terms" at a J-cell
is spanned by everything strictly above it.

When the structure constants are nonnegative and a generating set is
known, reachability along generator edges coincides with the full-basis
preorder, which keeps transformation monoids with tens of thousands of
elements tractable.  With cancellation this shortcut is unsound, so it is
refused unless the nonnegativity flag is set.

Coefficients stay symbolic (polynomials in the loop parameter, Laurent
polynomials in v); a based algebra carries a `specialize` hook mapping
them into the working field, which is where idempotency eigenvalues are
tested against zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

GENERATOR_BOUND = 60000
FULL_BASIS_BOUND = 5000


def _value_is_zero(v) -> bool:
    if hasattr(v, "is_zero"):
        return v.is_zero()
    return v == 0


@dataclass
class BasedAlgebra:
    """A finite basis with a structure-constant multiplication oracle.

    ``mul(i, j)`` returns the product of basis elements i and j as a tuple
    of (coefficient, basis index) pairs with nonzero symbolic coefficients.
    ``specialize`` maps a symbolic coefficient into the working field (for
    example evaluating the loop parameter at a rational); idempotency is
    decided after specialization.
    """
    size: int
    mul: Callable[[int, int], tuple]
    ring: str = "Q"
    nonneg: bool = False
    generators: Optional[Sequence[int]] = None
    star: Optional[Sequence[int]] = None
    unit: Optional[int] = None
    labels: Optional[Sequence[str]] = None
    specialize: Callable = lambda c: c

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def support(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(k for _, k in self.mul(i, j))


def _tarjan_scc(n: int, adj: list[list[int]]) -> list[int]:
    """Iterative Tarjan; returns the component id per node (ids arbitrary)."""
    index = [0] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    visited = [False] * n
    stack: list[int] = []
    counter = 1
    ncomp = 0
    for root in range(n):
        if visited[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                visited[v] = True
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            neighbors = adj[v]
            while pi < len(neighbors):
                w = neighbors[pi]
                pi += 1
                if not visited[w]:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            if work:
                u, _ = work[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
    return comp


@dataclass
class CellStructure:
    """The full L/R/J/H partition of a based pair, with the J-order and
    strict-idempotency annotations."""
    alg: BasedAlgebra
    jcells: list[tuple[int, ...]]
    above: list[frozenset[int]]          # per J-cell: strictly above cells
    left_cells: list[list[tuple[int, ...]]]
    right_cells: list[list[tuple[int, ...]]]
    hgrid: list[list[list[tuple[int, ...]]]]
    elem_j: list[int]
    elem_left: list[int]                 # column in the egg-box
    elem_right: list[int]                # row in the egg-box
    idempotent_elems: list[dict[int, object]]  # per J: elem -> eigenvalue
    hidem: list[list[list[bool]]]
    jidem: list[bool]

    @property
    def num_jcells(self) -> int:
        return len(self.jcells)

    def j_of(self, i: int) -> int:
        return self.elem_j[i]

    def bottom_jcells(self) -> list[int]:
        covered = set()
        for j in range(self.num_jcells):
            covered |= self.above[j]
        return [j for j in range(self.num_jcells) if j not in covered]

    def top_jcells(self) -> list[int]:
        return [j for j in range(self.num_jcells) if not self.above[j]]

    def strict_idempotents(self, j: int, row: int, col: int
                           ) -> list[tuple[int, object]]:
        """Strict pseudo-idempotents of the H-cell (row, col) in J-cell j,
        as (basis index, eigenvalue) pairs."""
        out = []
        for e in self.hgrid[j][row][col]:
            s = self.idempotent_elems[j].get(e)
            if s is not None:
                out.append((e, s))
        return out


def compute_cells(alg: BasedAlgebra) -> CellStructure:
    """Cells, J-order, egg-box layout and idempotency of a based pair."""
    n = alg.size
    use_generators = alg.generators is not None
    if use_generators and not alg.nonneg:
        raise ValueError(
            "generator closure requires nonnegative structure constants")
    if use_generators:
        if n > GENERATOR_BOUND:
            raise ValueError(f"basis size {n} exceeds bound {GENERATOR_BOUND}")
        multipliers = list(alg.generators)
    else:
        if n > FULL_BASIS_BOUND:
            raise ValueError(f"basis size {n} exceeds bound {FULL_BASIS_BOUND}")
        multipliers = list(range(n))

    left_adj: list[list[int]] = [[] for _ in range(n)]
    right_adj: list[list[int]] = [[] for _ in range(n)]
    for x in range(n):
        lset = set()
        rset = set()
        for c in multipliers:
            for _, k in alg.mul(c, x):
                if k != x:
                    lset.add(k)
            for _, k in alg.mul(x, c):
                if k != x:
                    rset.add(k)
        left_adj[x] = sorted(lset)
        right_adj[x] = sorted(rset)

    lcomp = _tarjan_scc(n, left_adj)
    rcomp = _tarjan_scc(n, right_adj)
    both_adj = [sorted(set(left_adj[x]) | set(right_adj[x])) for x in range(n)]
    jcomp = _tarjan_scc(n, both_adj)

    members: dict[int, list[int]] = {}
    for x in range(n):
        members.setdefault(jcomp[x], []).append(x)

    # Condensation DAG and reachability ("strictly above").
    succ: dict[int, set[int]] = {c: set() for c in members}
    for x in range(n):
        for y in both_adj[x]:
            if jcomp[x] != jcomp[y]:
                succ[jcomp[x]].add(jcomp[y])
    reach: dict[int, frozenset[int]] = {}

    def reach_of(c: int) -> frozenset[int]:
        if c in reach:
            return reach[c]
        acc: set[int] = set()
        stack = [c]
        seen = {c}
        while stack:
            u = stack.pop()
            for v in succ[u]:
                if v not in seen:
                    seen.add(v)
                    acc.add(v)
                    stack.append(v)
        acc |= set().union(*(reach.get(v, frozenset()) for v in acc)) if acc else set()
        result = frozenset(acc)
        reach[c] = result
        return result

    for c in members:
        reach_of(c)

    # Depth = longest chain from a bottom cell, for a bottom-to-top listing.
    depth: dict[int, int] = {}

    def depth_of(c: int) -> int:
        if c in depth:
            return depth[c]
        preds = [d for d in members if c in reach[d] and c != d]
        depth[c] = 1 + max((depth_of(d) for d in preds), default=-1)
        return depth[c]

    order = sorted(members, key=lambda c: (depth_of(c), min(members[c])))
    cell_index = {c: i for i, c in enumerate(order)}

    jcells = [tuple(sorted(members[c])) for c in order]
    above = [frozenset(cell_index[d] for d in reach[c]) for c in order]

    elem_j = [0] * n
    for ji, cell in enumerate(jcells):
        for x in cell:
            elem_j[x] = ji

    left_cells: list[list[tuple[int, ...]]] = []
    right_cells: list[list[tuple[int, ...]]] = []
    hgrid: list[list[list[tuple[int, ...]]]] = []
    elem_left = [0] * n
    elem_right = [0] * n
    for ji, cell in enumerate(jcells):
        lgroups: dict[int, list[int]] = {}
        rgroups: dict[int, list[int]] = {}
        for x in cell:
            lgroups.setdefault(lcomp[x], []).append(x)
            rgroups.setdefault(rcomp[x], []).append(x)
        lcells = sorted((tuple(sorted(g)) for g in lgroups.values()))
        rcells = sorted((tuple(sorted(g)) for g in rgroups.values()))
        left_cells.append(lcells)
        right_cells.append(rcells)
        lindex = {x: i for i, g in enumerate(lcells) for x in g}
        rindex = {x: i for i, g in enumerate(rcells) for x in g}
        for x in cell:
            elem_left[x] = lindex[x]
            elem_right[x] = rindex[x]
        grid = [[[] for _ in lcells] for _ in rcells]
        for x in cell:
            grid[rindex[x]][lindex[x]].append(x)
        hgrid.append([[tuple(sorted(h)) for h in row] for row in grid])

    cs = CellStructure(
        alg=alg, jcells=jcells, above=above, left_cells=left_cells,
        right_cells=right_cells, hgrid=hgrid, elem_j=elem_j,
        elem_left=elem_left, elem_right=elem_right,
        idempotent_elems=[], hidem=[], jidem=[])
    _annotate_idempotents(cs)
    return cs


def _annotate_idempotents(cs: CellStructure) -> None:
    alg = cs.alg
    for ji, cell in enumerate(cs.jcells):
        found: dict[int, object] = {}
        for e in cell:
            square = {k: c for c, k in alg.mul(e, e)}
            terms = higher_ideal_reduce(square, cs, ji, mode="in-cell")
            if len(terms) == 1 and e in terms:
                s = terms[e]
                if not _value_is_zero(alg.specialize(s)):
                    found[e] = s
        cs.idempotent_elems.append(found)
        grid_flags = [[any(e in found for e in h) for h in row]
                      for row in cs.hgrid[ji]]
        cs.hidem.append(grid_flags)
        cs.jidem.append(bool(found))


def higher_ideal_reduce(x: dict[int, object], cs: CellStructure, j: int,
                        mode: str = "mod-ideal") -> dict[int, object]:
    """Reduce a sparse vector modulo the ideal of higher order terms at
    J-cell j.

    mode "mod-ideal": drop components in cells strictly above j.
    mode "in-cell":   keep only components inside j itself.
    """
    if mode not in ("mod-ideal", "in-cell"):
        raise ValueError(f"unknown reduction mode {mode!r}")
    above = cs.above[j]
    out = {}
    for k, c in x.items():
        kj = cs.elem_j[k]
        if kj in above:
            continue
        if mode == "in-cell" and kj != j:
            continue
        out[k] = c
    return out


@dataclass
class SandwichReport:
    ok: bool
    messages: list[str] = field(default_factory=list)
    per_jcell: list[dict] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def verify_sandwich_pair(cs: CellStructure) -> SandwichReport:
    """Check the numerical sandwich-pair conditions: within each J-cell all
    left cells are of one size, all right cells of one size, all H-cells of
    one size, and |J| = #L * |H| * #R.  With a star, left and right cells
    must correspond and J-cells must be square."""
    report = SandwichReport(ok=True)
    for ji, cell in enumerate(cs.jcells):
        lsizes = {len(g) for g in cs.left_cells[ji]}
        rsizes = {len(g) for g in cs.right_cells[ji]}
        hsizes = {len(h) for row in cs.hgrid[ji] for h in row}
        nl, nr = len(cs.left_cells[ji]), len(cs.right_cells[ji])
        hsize = next(iter(hsizes)) if len(hsizes) == 1 else None
        entry = {
            "jcell": ji, "size": len(cell), "num_left": nl, "num_right": nr,
            "left_sizes": sorted(lsizes), "right_sizes": sorted(rsizes),
            "h_sizes": sorted(hsizes), "idempotent": cs.jidem[ji],
        }
        ok_here = len(lsizes) == 1 and len(rsizes) == 1 and len(hsizes) == 1
        if ok_here and len(cell) != nl * hsize * nr:
            ok_here = False
            report.messages.append(
                f"J-cell {ji}: |J|={len(cell)} != #L*|H|*#R="
                f"{nl}*{hsize}*{nr}")
        if not ok_here and not report.messages:
            report.messages.append(
                f"J-cell {ji}: unequal cell sizes "
                f"(H sizes {sorted(hsizes)})")
        entry["ok"] = ok_here
        report.per_jcell.append(entry)
        report.ok = report.ok and ok_here
    if cs.alg.star is not None:
        star = cs.alg.star
        for ji in range(cs.num_jcells):
            if len(cs.left_cells[ji]) != len(cs.right_cells[ji]):
                report.ok = False
                report.messages.append(f"J-cell {ji} is not square")
                continue
            rights = {g for g in cs.right_cells[ji]}
            for g in cs.left_cells[ji]:
                image = tuple(sorted(star[x] for x in g))
                if image not in rights:
                    report.ok = False
                    report.messages.append(
                        f"star does not map a left cell of J-cell {ji} "
                        f"onto a right cell")
                    break
    tops = cs.top_jcells()
    if len(tops) != 1:
        report.ok = False
        report.messages.append(f"J-order has {len(tops)} maximal cells")
    return report


def is_admissible_monoid(cs: CellStructure) -> bool:
    """Every J-cell idempotent, or with H-cells of size one."""
    for ji in range(cs.num_jcells):
        if cs.jidem[ji]:
            continue
        if any(len(h) != 1 for row in cs.hgrid[ji] for h in row):
            return False
    return True


def eggbox(cs: CellStructure, j: int, key=None) -> dict:
    """Egg-box data of one J-cell: rows are right cells, columns left
    cells, entries carry the H-cell size and idempotency mark."""
    grid = cs.hgrid[j]
    return {
        "key": key if key is not None else j,
        "order_rank": j,
        "num_left": len(cs.left_cells[j]),
        "num_right": len(cs.right_cells[j]),
        "h_size": len(grid[0][0]) if grid and grid[0] else 0,
        "h_sizes": [[len(h) for h in row] for row in grid],
        "idempotent_grid": [[1 if flag else 0 for flag in row]
                            for row in cs.hidem[j]],
        "idempotent": cs.jidem[j],
        "size": len(cs.jcells[j]),
    }


def eggbox_ascii(cs: CellStructure, j: int) -> str:
    """Terminal rendering: one bracket per H-cell, '*' marks strict
    idempotency."""
    rows = []
    for r, row in enumerate(cs.hgrid[j]):
        cells = []
        for c, h in enumerate(row):
            mark = "*" if cs.hidem[j][r][c] else " "
            cells.append(f"[{len(h)}{mark}]")
        rows.append(" ".join(cells))
    return "\n".join(rows)


def jorder_dot(cs: CellStructure, names: Optional[Sequence[str]] = None) -> str:
    """DOT digraph of the J-order (edges point from lower to higher)."""
    lines = ["digraph jorder {"]
    for ji in range(cs.num_jcells):
        label = names[ji] if names else f"J{ji}"
        shape = "doubleoctagon" if cs.jidem[ji] else "box"
        lines.append(f'  j{ji} [label="{label}" shape={shape}];')
    for ji in range(cs.num_jcells):
        covers = set(cs.above[ji])
        for via in cs.above[ji]:
            covers -= cs.above[via]
        for target in sorted(covers):
            lines.append(f"  j{ji} -> j{target};")
    lines.append("}")
    return "\n".join(lines)


# ----------------------------------------------------------------------
# Based algebras for the diagram families and for plain groups.

def diagram_based_algebra(family_key: str, n: int, delta="generic"
                          ) -> BasedAlgebra:
    """The based pair of a diagram algebra.

    The multiplication oracle keeps the loop-parameter coefficient
    symbolic (a power of d per closed middle component), so the cell
    partition is the monoid one; `delta` only enters when idempotency
    eigenvalues are tested, via `specialize`.
    """
    from fractions import Fraction as F

    from .diagrams import enumerate_family, family, multiply, star as dstar
    from .exact import IntPoly

    fam = family(family_key)
    basis = enumerate_family(family_key, n)
    index = {d: i for i, d in enumerate(basis)}
    gens = [index[g] for g in fam.generators(n)]

    cache: dict[tuple[int, int], tuple] = {}

    def mul(i: int, j: int):
        key = (i, j)
        hit = cache.get(key)
        if hit is None:
            closed, prod = multiply(basis[i], basis[j])
            hit = ((IntPoly.monomial(closed), index[prod]),)
            cache[key] = hit
        return hit

    if delta == "generic":
        specialize = lambda c: c
    else:
        q = F(delta)
        specialize = lambda c, _q=q: c.eval_fraction(_q)

    star_perm = None
    if fam.has_star:
        star_perm = tuple(index[dstar(d)] for d in basis)

    from .diagrams import identity_diagram
    return BasedAlgebra(
        size=len(basis), mul=mul, ring="Z[d]", nonneg=True,
        generators=gens, star=star_perm,
        unit=index[identity_diagram(n)],
        labels=[str(d) for d in basis],
        specialize=specialize)


def group_based_algebra(elements, op, inverse=None) -> BasedAlgebra:
    """The based pair of a finite group on its element basis."""
    elements = list(elements)
    index = {g: i for i, g in enumerate(elements)}

    def mul(i, j):
        return ((Fraction(1), index[op(elements[i], elements[j])]),)

    star = None
    if inverse is not None:
        star = tuple(index[inverse(g)] for g in elements)
    unit = None
    for i, g in enumerate(elements):
        if all(op(g, h) == h for h in elements):
            unit = i
            break
    return BasedAlgebra(size=len(elements), mul=mul, ring="Q",
                        nonneg=True, generators=None, star=star, unit=unit,
                        labels=[str(g) for g in elements])
