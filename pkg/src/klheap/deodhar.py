"""Mask enumeration and the defect statistic.

A mask on a word a = (i_1, ..., i_r) is a 0/1 vector sigma; it selects
the subword product pi(sigma) = prod of s_{i_j} over positions with
sigma_j = 1.  Position j is a defect when the letter i_j is a right
descent of the product of the masked prefix strictly before j, i.e.
applying s_{i_j} there would shorten the prefix product.  Defects split
into zero-defects and one-defects according to the mask bit at the
position itself.

The generating function P_x(a) = sum of q^(#defects) over masks with
product x is assembled for every x at once by a depth-first walk over
mask bits that applies and un-applies one transposition per step, so
the work per mask edge is constant.  A from-scratch re-evaluation per
mask is kept alongside as a reference implementation and the tests check
the two agree.

Critical zeros live on the heap embedding: for a zero-defect j they are
the latest mask-zero positions on the two upward diagonals leaving the
point of j.  The defect graph joins zero-defects whose critical triples
share a position.
"""

from __future__ import annotations

import multiprocessing
from fractions import Fraction
from typing import NamedTuple

from .errors import ConsistencyError, InputError, ResourceLimitError
from .heap import HeapEmbedding, build_heap
from .perm import Perm, Word, apply_word, identity, is_reduced, length
from .qpoly import QPoly, ZERO, poly_add, poly_shift

Mask = tuple[int, ...]

#: Words longer than this would need more than 2^40 mask evaluations.
MAX_MASK_WORD = 40


class DefectRecord(NamedTuple):
    word: Word
    mask: Mask
    #: Product of the masked subword.
    product: Perm
    defects: frozenset[int]
    zero_defects: frozenset[int]
    one_defects: frozenset[int]


class CriticalZeros(NamedTuple):
    #: Latest mask-zero position on the up-left diagonal.
    left: int
    #: Latest mask-zero position on the up-right diagonal.
    right: int
    #: The zero-defect position itself.
    pos: int


class DefectGraph(NamedTuple):
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


def _check_mask(a: Word, mask: Mask) -> None:
    if len(mask) != len(a):
        raise InputError(f"mask length {len(mask)} != word length {len(a)}")
    for j, bit in enumerate(mask, start=1):
        if bit not in (0, 1):
            raise InputError(f"mask entry {bit!r} at position {j} is not 0 or 1")


def _ambient(a: Word, n: int | None) -> int:
    need = max(a, default=0) + 1
    if n is None:
        return need
    if n < need:
        raise InputError(f"rank {n} too small for word letters up to {need - 1}")
    return n


def defect_set(a: Word, mask: Mask, n: int | None = None) -> DefectRecord:
    """Walk the mask once, recording defects and the subword product."""
    n = _ambient(a, n)
    _check_mask(a, mask)
    p = list(identity(n))
    defects = []
    for j, (i, bit) in enumerate(zip(a, mask), start=1):
        if p[i - 1] > p[i]:
            defects.append(j)
        if bit:
            p[i - 1], p[i] = p[i], p[i - 1]
    dset = frozenset(defects)
    return DefectRecord(
        word=tuple(a),
        mask=tuple(mask),
        product=tuple(p),
        defects=dset,
        zero_defects=frozenset(j for j in dset if mask[j - 1] == 0),
        one_defects=frozenset(j for j in dset if mask[j - 1] == 1),
    )


def _check_table_word(a: Word) -> None:
    if len(a) > MAX_MASK_WORD:
        raise ResourceLimitError(
            f"word length {len(a)} exceeds the mask enumeration limit {MAX_MASK_WORD}"
        )
    if not is_reduced(a):
        raise InputError(f"word {a} is not reduced")


def _table_dfs(a: Word, n: int, prefix: Mask = ()) -> dict[Perm, QPoly]:
    r = len(a)
    p = list(identity(n))
    counts: dict[Perm, dict[int, int]] = {}

    def rec(j: int, d: int) -> None:
        if j == r:
            by_deg = counts.setdefault(tuple(p), {})
            by_deg[d] = by_deg.get(d, 0) + 1
            return
        i = a[j]
        if p[i - 1] > p[i]:
            d += 1
        rec(j + 1, d)
        p[i - 1], p[i] = p[i], p[i - 1]
        rec(j + 1, d)
        p[i - 1], p[i] = p[i], p[i - 1]

    def rec_fixed(j: int, d: int) -> None:
        if j == len(prefix):
            rec(j, d)
            return
        i = a[j]
        if p[i - 1] > p[i]:
            d += 1
        if prefix[j]:
            p[i - 1], p[i] = p[i], p[i - 1]
            rec_fixed(j + 1, d)
            p[i - 1], p[i] = p[i], p[i - 1]
        else:
            rec_fixed(j + 1, d)

    rec_fixed(0, 0)
    out: dict[Perm, QPoly] = {}
    for x, by_deg in counts.items():
        poly = [0] * (max(by_deg) + 1)
        for d, c in by_deg.items():
            poly[d] = c
        out[x] = tuple(poly)
    return out


def _prefix_task(args: tuple[Word, int, Mask]) -> dict[Perm, QPoly]:
    a, n, prefix = args
    return _table_dfs(a, n, prefix)


def merge_tables(tables: list[dict[Perm, QPoly]]) -> dict[Perm, QPoly]:
    """Pointwise polynomial sum of mask tables (disjoint mask sets)."""
    out: dict[Perm, QPoly] = {}
    for table in tables:
        for x, poly in table.items():
            out[x] = poly_add(out.get(x, ZERO), poly)
    return out


def deodhar_table(a: Word, n: int | None = None, *, jobs: int = 1) -> dict[Perm, QPoly]:
    """P_x(a) for every subword product x of the reduced word a.

    With jobs > 1 the mask space is split by leading bit patterns and the
    partial tables are merged in a fixed order, so results are identical
    to the single-process run.
    """
    _check_table_word(a)
    n = _ambient(a, n)
    r = len(a)
    if jobs > 1 and r >= 10:
        t = min(max(jobs - 1, 2).bit_length() + 1, r - 4, 8)
        prefixes = [
            tuple((m >> (t - 1 - b)) & 1 for b in range(t)) for m in range(1 << t)
        ]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_prefix_task, [(tuple(a), n, pre) for pre in prefixes])
        return merge_tables(parts)
    return _table_dfs(tuple(a), n)


def deodhar_table_naive(a: Word, n: int | None = None) -> dict[Perm, QPoly]:
    """Reference implementation: every mask evaluated from scratch."""
    _check_table_word(a)
    n = _ambient(a, n)
    r = len(a)
    counts: dict[Perm, dict[int, int]] = {}
    for m in range(1 << r):
        mask = tuple((m >> (r - 1 - j)) & 1 for j in range(r))
        rec = defect_set(a, mask, n)
        by_deg = counts.setdefault(rec.product, {})
        d = len(rec.defects)
        by_deg[d] = by_deg.get(d, 0) + 1
    out: dict[Perm, QPoly] = {}
    for x, by_deg in counts.items():
        poly = [0] * (max(by_deg) + 1)
        for d, c in by_deg.items():
            poly[d] = c
        out[x] = tuple(poly)
    return out


def deodhar_poly(a: Word, x: Perm, n: int | None = None) -> QPoly:
    """P_x(a): defect generating function over masks with product x."""
    n = _ambient(a, n)
    if len(x) != n:
        raise InputError(f"rank mismatch: |x| = {len(x)}, word needs rank {n}")
    return deodhar_table(a, n).get(tuple(x), ZERO)


def delta(a: Word, mask: Mask) -> Fraction:
    """(l(w) - l(x) - 1)/2 - #defects for the masked subword product x."""
    _check_table_word(a)
    rec = defect_set(a, mask)
    w = apply_word(a)
    if rec.product == w:
        raise InputError("mask evaluates to the full word's permutation")
    return Fraction(len(a) - length(rec.product) - 1, 2) - len(rec.defects)


def _diagonal_zero(
    h: HeapEmbedding, mask: Mask, j: int, side: int
) -> int | None:
    # Latest mask-zero position strictly before j on the upward diagonal
    # leaving pt(j) in direction (side, -1), side in {-1, +1}.
    c0, l0 = h.points[j - 1]
    best = None
    for t in range(j - 1, 0, -1):
        if mask[t - 1] != 0:
            continue
        c, l = h.points[t - 1]
        off = l0 - l
        if off >= 1 and c - c0 == side * off:
            best = t
            break
    return best


def critical_zeros(a: Word, mask: Mask, j: int) -> CriticalZeros:
    """The two latest mask-zero positions on the upward diagonals of a
    zero-defect j, together with j itself."""
    h = build_heap(a)
    rec = defect_set(a, mask)
    if j not in rec.zero_defects:
        raise InputError(f"position {j} is not a zero-defect of the mask")
    left = _diagonal_zero(h, mask, j, -1)
    right = _diagonal_zero(h, mask, j, +1)
    if left is None or right is None:
        side = "left" if left is None else "right"
        raise ConsistencyError(
            f"no {side} critical zero above position {j} for mask {mask}"
        )
    return CriticalZeros(left=left, right=right, pos=j)


def defect_graph(a: Word, mask: Mask) -> DefectGraph:
    """Zero-defects joined when their critical triples share a position."""
    rec = defect_set(a, mask)
    vertices = tuple(sorted(rec.zero_defects))
    triples = {j: set(critical_zeros(a, mask, j)) for j in vertices}
    edges = []
    for idx, u in enumerate(vertices):
        for v in vertices[idx + 1 :]:
            if triples[u] & triples[v]:
                edges.append((u, v))
    return DefectGraph(vertices=vertices, edges=tuple(edges))


def is_forest(g: DefectGraph) -> bool:
    parent = {v: v for v in g.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def recursion_check(a: Word, s: int) -> bool:
    """Verify P_x(a) = q^c P_x(a') + q^(1-c) P_{xs}(a') with a' = a minus
    its last letter s, where c = 1 exactly when xs < x."""
    if not a:
        raise InputError("word is empty")
    if a[-1] != s:
        raise InputError(f"last letter of {a} is {a[-1]}, not {s}")
    _check_table_word(a)
    n = _ambient(a, None)
    full = deodhar_table(a, n)
    sub = deodhar_table(a[:-1], n)
    keys = set(full)
    for y in sub:
        keys.add(y)
        ys = list(y)
        ys[s - 1], ys[s] = ys[s], ys[s - 1]
        keys.add(tuple(ys))
    for x in keys:
        xs = list(x)
        xs[s - 1], xs[s] = xs[s], xs[s - 1]
        xs = tuple(xs)
        c = 1 if x[s - 1] > x[s] else 0
        rhs = poly_add(
            poly_shift(sub.get(x, ZERO), c),
            poly_shift(sub.get(xs, ZERO), 1 - c),
        )
        if full.get(x, ZERO) != rhs:
            return False
    return True


def parse_mask(text: str) -> Mask:
    """Parse "(1,0,1)" into (1, 0, 1)."""
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise InputError(f"mask {text!r} must be parenthesized, like (1,0,1)")
    body = stripped[1:-1].strip()
    if not body:
        return ()
    bits = []
    for pos, part in enumerate(body.split(","), start=1):
        part = part.strip()
        if part not in ("0", "1"):
            raise InputError(f"mask entry {part!r} at position {pos} is not 0 or 1")
        bits.append(int(part))
    return tuple(bits)


def format_mask(mask: Mask) -> str:
    return "(" + ",".join(str(b) for b in mask) + ")"
