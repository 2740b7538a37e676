"""Planar heap embeddings of 321-avoiding reduced words.

Each word position j is embedded at a lattice point (column, level) with
column = the generator index of the letter.  Levels respect the word
order: whenever j < k and the letters at j and k do not commute, the
level of j is strictly smaller.  Renderings draw level 0 on top, so
larger levels hang further down.

Construction is in two stages.  First each letter drops as far up as it
can: its base level is one more than the largest base level among
earlier non-commuting letters (0 if there are none).  Letters then group
into components via the relation "adjacent columns and adjacent base
levels", and each component is shifted uniformly downward as far as the
order constraints against already-placed components allow, so that the
components abut.  Components are placed in dependency order: a component
containing a later non-commuting partner of some letter is placed before
that letter's component.

The embedding is independent of the choice of reduced word (all reduced
words of a 321-avoiding permutation are related by commutations), which
the test suite checks directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, NamedTuple

from .errors import ConsistencyError, InputError
from .perm import Word, lateral_convexity_check

Point = tuple[int, int]


@dataclass(frozen=True)
class HeapEmbedding:
    word: Word
    #: (column, level) for each word position, in word order.
    points: tuple[Point, ...]
    #: Coalescing classes as sorted tuples of 1-based word positions,
    #: ordered by first member.
    components: tuple[tuple[int, ...], ...]

    def point(self, j: int) -> Point:
        """The embedded point of 1-based word position j."""
        return self.points[j - 1]


class ConePositions(NamedTuple):
    #: All word positions whose point lies in the cone (apex included).
    positions: frozenset[int]
    #: The subset on the cone boundary, |column offset| = |level offset|.
    boundary: frozenset[int]


def _check_heap_word(a: Word) -> None:
    # lateral_convexity_check raises InputError itself on non-reduced input
    if not lateral_convexity_check(a):
        raise InputError(f"heap undefined: word {a} is not 321-avoiding")


def level_raw(a: Word) -> tuple[int, ...]:
    """Literal left-to-right levels: one more than the last non-commuting
    predecessor's level, or 0 if every earlier letter commutes."""
    _check_heap_word(a)
    levels: list[int] = []
    for j, i in enumerate(a):
        lvl = 0
        for m in range(j - 1, -1, -1):
            if abs(a[m] - i) <= 1:
                lvl = levels[m] + 1
                break
        levels.append(lvl)
    return tuple(levels)


def _drop_levels(a: Word) -> list[int]:
    # Longest-chain heights: the canonical word-independent base embedding.
    levels: list[int] = []
    for j, i in enumerate(a):
        lvl = 0
        for m in range(j):
            if abs(a[m] - i) <= 1:
                lvl = max(lvl, levels[m] + 1)
        levels.append(lvl)
    return levels


def build_heap(a: Word) -> HeapEmbedding:
    """The coalesced heap embedding of a 321-avoiding reduced word."""
    _check_heap_word(a)
    r = len(a)
    base = _drop_levels(a)

    # Components: transitive closure of adjacent column + adjacent level.
    parent = list(range(r))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(r):
        for k in range(j + 1, r):
            if abs(a[j] - a[k]) == 1 and abs(base[j] - base[k]) == 1:
                parent[find(j)] = find(k)

    members: dict[int, list[int]] = {}
    for j in range(r):
        members.setdefault(find(j), []).append(j)
    comps = sorted(members.values(), key=lambda c: c[0])
    comp_of = {j: ci for ci, comp in enumerate(comps) for j in comp}

    # Dependency edges: for a non-commuting pair j < k in different
    # components, the component of k is placed first (position j may only
    # hang down toward already-placed later material).
    succs: list[set[int]] = [set() for _ in comps]
    indeg = [0] * len(comps)
    for j in range(r):
        for k in range(j + 1, r):
            if abs(a[j] - a[k]) <= 1 and comp_of[j] != comp_of[k]:
                if comp_of[j] not in succs[comp_of[k]]:
                    succs[comp_of[k]].add(comp_of[j])
                    indeg[comp_of[j]] += 1

    order: list[int] = []
    ready = sorted(ci for ci in range(len(comps)) if indeg[ci] == 0)
    while ready:
        ci = ready.pop(0)
        order.append(ci)
        for nxt in succs[ci]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                # keep the ready pool ordered by first word position
                ready.append(nxt)
                ready.sort(key=lambda c: comps[c][0])
    if len(order) != len(comps):
        raise ConsistencyError(f"component dependency cycle for word {a}")

    level = [0] * r
    placed: list[int] = []
    for ci in order:
        comp = comps[ci]
        shift = None
        for j in comp:
            for k in placed:
                if j < k and abs(a[j] - a[k]) <= 1:
                    room = level[k] - 1 - base[j]
                    shift = room if shift is None else min(shift, room)
        if shift is None:
            shift = 0
        if shift < 0:
            raise ConsistencyError(f"negative coalescing shift for word {a}")
        for j in comp:
            level[j] = base[j] + shift
        placed.extend(comp)

    for j in range(r):
        for k in range(j + 1, r):
            if abs(a[j] - a[k]) <= 1 and level[j] >= level[k]:
                raise ConsistencyError(f"level order violated at {j + 1},{k + 1} for {a}")

    return HeapEmbedding(
        word=tuple(a),
        points=tuple((a[j], level[j]) for j in range(r)),
        components=tuple(tuple(j + 1 for j in comp) for comp in comps),
    )


def cone_points(h: HeapEmbedding, j: int, direction: Literal["lower", "upper"]) -> ConePositions:
    """Word positions inside the lower or upper cone of position j.

    The lower cone of an apex (c, l) holds the points (c + off, l - d)
    with |off| <= d (levels at most l); the upper cone mirrors it to
    levels at least l.  Boundary points satisfy |off| = d, the apex
    among them.
    """
    if not 1 <= j <= len(h.word):
        raise InputError(f"position {j} out of range for word of length {len(h.word)}")
    if direction not in ("lower", "upper"):
        raise InputError(f"direction must be 'lower' or 'upper', got {direction!r}")
    c0, l0 = h.points[j - 1]
    inside = set()
    boundary = set()
    for t, (c, l) in enumerate(h.points, start=1):
        d = l0 - l if direction == "lower" else l - l0
        if d >= 0 and abs(c - c0) <= d:
            inside.add(t)
            if abs(c - c0) == d:
                boundary.add(t)
    return ConePositions(frozenset(inside), frozenset(boundary))


def render_ascii(h: HeapEmbedding, mask: tuple[int, ...] | None = None) -> str:
    """Deterministic monospace rendering; level 0 on the first row.

    Without a mask every point is ``o``.  With a mask, positions kept by
    the mask print ``o``, zeroed positions ``.``, and defects print ``#``
    (mask bit 1) or ``*`` (mask bit 0).
    """
    if not h.word:
        return ""
    symbols = ["o"] * len(h.word)
    if mask is not None:
        from .deodhar import defect_set  # local import; deodhar imports heap

        record = defect_set(h.word, mask)
        for j, bit in enumerate(mask, start=1):
            if j in record.one_defects:
                symbols[j - 1] = "#"
            elif j in record.zero_defects:
                symbols[j - 1] = "*"
            elif bit == 0:
                symbols[j - 1] = "."
    cols = [c for c, _ in h.points]
    lo, hi = min(cols), max(cols)
    depth = max(l for _, l in h.points)
    header = " ".join(str(c % 10) for c in range(lo, hi + 1))
    rows = [header]
    for lvl in range(depth + 1):
        row = [" "] * (2 * (hi - lo) + 1)
        for (c, l), sym in zip(h.points, symbols):
            if l == lvl:
                row[2 * (c - lo)] = sym
        rows.append("".join(row).rstrip())
    return "\n".join(rows)


def heap_json(h: HeapEmbedding) -> dict:
    """JSON object form of the embedding."""
    return {
        "word": list(h.word),
        "points": [[c, l] for c, l in h.points],
        "components": [list(comp) for comp in h.components],
    }
