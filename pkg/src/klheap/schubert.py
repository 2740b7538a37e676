"""Maximal singular locus from the heap, with a Bruhat-order oracle.

A singular triple on the heap of a reduced word is a lower diamond
corner k together with positions j and l strictly up-left and up-right
of it on the two diagonals, such that the upward cones of j and l meet
inside the heap.  Zeroing the all-ones mask exactly at such a triple
gives a permutation of codimension three in the ambient element, and the
distinct products obtained this way are exactly the maximal elements of
the singular locus.

The oracle recomputes that set from first principles: maximal elements,
under Bruhat order, among the x whose table polynomial differs from 1.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import InputError
from .heap import build_heap, cone_points
from .perm import (
    Perm,
    Word,
    apply_word,
    bruhat_leq,
    contains_pattern,
    is_hexagon_avoiding,
    length,
    validate_perm,
)
from .deodhar import defect_set
from .hecke import kl_table


class SingularTriple(NamedTuple):
    #: Up-left diagonal position.
    left: int
    #: The diamond corner of largest level.
    bottom: int
    #: Up-right diagonal position.
    right: int


def _check_singular_word(a: Word, n: int | None = None) -> Perm:
    w = apply_word(a, n)  # raises on malformed words
    if not is_hexagon_avoiding(w):
        raise InputError(f"word evaluates to a hexagon-containing permutation: {w}")
    return w


def singular_triples(a: Word) -> tuple[SingularTriple, ...]:
    """All singular triples of the heap of a, sorted by corner."""
    _check_singular_word(a)
    h = build_heap(a)  # rejects non-321-avoiding words
    r = len(a)
    cones = [cone_points(h, j, "lower").positions for j in range(1, r + 1)]
    up_left: list[list[int]] = [[] for _ in range(r + 1)]
    up_right: list[list[int]] = [[] for _ in range(r + 1)]
    for k in range(1, r + 1):
        ck, lk = h.points[k - 1]
        for t in range(1, r + 1):
            c, l = h.points[t - 1]
            d = lk - l
            if d >= 1:
                if c - ck == -d:
                    up_left[k].append(t)
                elif c - ck == d:
                    up_right[k].append(t)
    triples = []
    for k in range(1, r + 1):
        for j in up_left[k]:
            for l in up_right[k]:
                if cones[j - 1] & cones[l - 1]:
                    triples.append(SingularTriple(left=j, bottom=k, right=l))
    triples.sort(key=lambda t: (t.bottom, t.left, t.right))
    return tuple(triples)


def max_singular_locus(a: Word, n: int | None = None) -> tuple[Perm, ...]:
    """Products of the all-ones mask zeroed at each singular triple,
    deduplicated and sorted by (length, one-line)."""
    _check_singular_word(a, n)
    triples = singular_triples(a)
    r = len(a)
    seen = set()
    for t in triples:
        mask = tuple(0 if j in t else 1 for j in range(1, r + 1))
        seen.add(defect_set(a, mask, n).product)
    return tuple(sorted(seen, key=lambda x: (length(x), x)))


def max_singular_locus_oracle(w: Perm) -> tuple[Perm, ...]:
    """Bruhat-maximal x with table polynomial different from 1."""
    w = tuple(w)
    validate_perm(w)
    rough = [x for x, p in kl_table(w).items() if p != (1,)]
    maximal = [
        x
        for x in rough
        if not any(y != x and bruhat_leq(x, y) for y in rough)
    ]
    return tuple(sorted(maximal, key=lambda x: (length(x), x)))


def is_smooth(w: Perm) -> bool:
    """Pattern criterion: no occurrence of 3412 or 4231."""
    w = tuple(w)
    validate_perm(w)
    return not contains_pattern(w, (3, 4, 1, 2)) and not contains_pattern(
        w, (4, 2, 3, 1)
    )


def codim_check(a: Word, n: int | None = None) -> bool:
    """Whether every maximal singular element sits in codimension 3."""
    w = apply_word(a, n)
    lw = length(w)
    return all(lw - length(y) == 3 for y in max_singular_locus(a, n))
