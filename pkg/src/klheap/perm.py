"""Permutations of {1, ..., n} in one-line notation.

Conventions used throughout the package:

- A permutation ``p`` is a tuple ``(p(1), ..., p(n))`` of the integers
  ``1..n``; ``p[i - 1]`` is the image of ``i``.
- ``s_i`` is the adjacent transposition swapping ``i`` and ``i + 1``.
  Generator indices are 1-based, so ``s_i`` exists for ``1 <= i < n``.
- A word is a tuple of generator indices.  Words act by *right*
  multiplication read left to right, so ``apply_word((2, 1))`` is the
  permutation ``s_2 s_1``.
- Text forms: permutations are comma-separated (``"3,4,5,1,2"``), words
  are space-separated (``"2 1 3 2 4 3"``).
"""

from __future__ import annotations

from collections.abc import Iterator
from math import comb

from .errors import InputError

Perm = tuple[int, ...]
Word = tuple[int, ...]

#: A reduced word for the hexagon element u; the four obstruction patterns
#: are u, u*s_4, s_4*u and s_4*u*s_4 written in one-line notation.
HEXAGON_WORD: Word = (3, 2, 1, 5, 4, 3, 2, 6, 5, 4, 3, 7, 6, 5)

HEXAGON_PATTERNS: tuple[Perm, ...] = (
    (4, 6, 7, 1, 8, 2, 3, 5),
    (4, 6, 7, 8, 1, 2, 3, 5),
    (5, 6, 7, 1, 8, 2, 3, 4),
    (5, 6, 7, 8, 1, 2, 3, 4),
)


def identity(n: int) -> Perm:
    """The identity permutation of S_n.

    >>> identity(4)
    (1, 2, 3, 4)
    """
    return tuple(range(1, n + 1))


def validate_perm(p: Perm) -> None:
    """Raise InputError unless ``p`` is a permutation of 1..len(p)."""
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InputError(f"not a permutation of 1..{len(p)}: {p}")


def compose(p: Perm, q: Perm) -> Perm:
    """The product ``p q``, i.e. the map ``i -> p(q(i))``.

    >>> compose((1, 3, 2), (2, 1, 3))
    (3, 1, 2)
    >>> compose((2, 1), (1, 2, 3))
    Traceback (most recent call last):
        ...
    klheap.errors.InputError: rank mismatch: |p| = 2, |q| = 3
    """
    if len(p) != len(q):
        raise InputError(f"rank mismatch: |p| = {len(p)}, |q| = {len(q)}")
    return tuple(p[v - 1] for v in q)


def inverse(p: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((3, 1, 2))
    (2, 3, 1)
    """
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def length(p: Perm) -> int:
    """Coxeter length = number of inversions.

    >>> length((3, 4, 5, 1, 2))
    6
    """
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def apply_gen(p: Perm, i: int) -> Perm:
    """Right multiplication ``p s_i`` (swaps positions i and i+1).

    >>> apply_gen((1, 2, 3), 1)
    (2, 1, 3)
    """
    if not 1 <= i < len(p):
        raise InputError(f"generator s_{i} out of range for n = {len(p)}")
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def apply_word(a: Word, n: int | None = None) -> Perm:
    """Evaluate a word by right multiplication, left to right.

    The ambient rank defaults to ``max(a) + 1``; pass ``n`` to embed the
    result in a larger symmetric group.

    >>> apply_word((2, 1, 3, 2, 4, 3))
    (3, 4, 5, 1, 2)
    >>> apply_word((), 3)
    (1, 2, 3)
    """
    if a and min(a) < 1:
        raise InputError(f"generator indices must be >= 1: {a}")
    need = (max(a) + 1) if a else 1
    if n is None:
        n = need
    elif n < need:
        raise InputError(f"rank {n} too small for word with letter s_{need - 1}")
    p = list(range(1, n + 1))
    for i in a:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def is_reduced(a: Word) -> bool:
    """True iff the word is a reduced expression.

    >>> is_reduced((1, 2, 1))
    True
    >>> is_reduced((1, 1))
    False
    """
    return length(apply_word(a)) == len(a)


def right_descents(p: Perm) -> list[int]:
    """Indices i with ``p s_i < p``, ascending."""
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def canonical_reduced_word(p: Perm) -> Word:
    """A deterministic reduced word for ``p``.

    Repeatedly strips the smallest right descent, then reverses the
    collected letters.

    >>> canonical_reduced_word((3, 4, 5, 1, 2))
    (2, 3, 4, 1, 2, 3)
    >>> canonical_reduced_word((1, 2, 3))
    ()
    """
    x = list(p)
    letters = []
    while True:
        for i in range(1, len(x)):
            if x[i - 1] > x[i]:
                x[i - 1], x[i] = x[i], x[i - 1]
                letters.append(i)
                break
        else:
            return tuple(reversed(letters))


def bruhat_leq(x: Perm, w: Perm) -> bool:
    """Bruhat-Chevalley order via the rank-matrix criterion.

    ``x <= w`` iff for every i the sorted prefix ``x(1..i)`` is entrywise
    at most the sorted prefix ``w(1..i)``.

    >>> bruhat_leq((1, 2, 3, 4, 5), (3, 4, 5, 1, 2))
    True
    >>> bruhat_leq((2, 1), (1, 2))
    False
    """
    if len(x) != len(w):
        raise InputError(f"rank mismatch: |x| = {len(x)}, |w| = {len(w)}")
    xs: list[int] = []
    ws: list[int] = []
    for i in range(len(x) - 1):
        xs.append(x[i])
        xs.sort()
        ws.append(w[i])
        ws.sort()
        if any(a > b for a, b in zip(xs, ws)):
            return False
    return True


def contains_pattern(w: Perm, p: Perm) -> bool:
    """True iff some subsequence of ``w`` is order-isomorphic to ``p``.

    >>> contains_pattern((3, 4, 5, 1, 2), (3, 2, 1))
    False
    >>> contains_pattern((4, 2, 3, 1), (3, 2, 1))
    True
    """
    n, k = len(w), len(p)
    if k > n:
        raise InputError(f"pattern of length {k} longer than host of length {n}")
    if k == 0:
        return True
    # For each pattern position, the tightest already-matched bounds.
    lower = [-1] * k
    upper = [-1] * k
    for t in range(k):
        for s in range(t):
            if p[s] < p[t] and (lower[t] < 0 or p[s] > p[lower[t]]):
                lower[t] = s
            if p[s] > p[t] and (upper[t] < 0 or p[s] < p[upper[t]]):
                upper[t] = s
    vals = [0] * k

    def match(t: int, start: int) -> bool:
        if t == k:
            return True
        lo = vals[lower[t]] if lower[t] >= 0 else 0
        hi = vals[upper[t]] if upper[t] >= 0 else n + 1
        for h in range(start, n - (k - t) + 1):
            v = w[h]
            if lo < v < hi:
                vals[t] = v
                if match(t + 1, h + 1):
                    return True
        return False

    return match(0, 0)


def is_321_avoiding(w: Perm) -> bool:
    """True iff ``w`` has no decreasing subsequence of length 3.

    >>> is_321_avoiding((3, 4, 5, 1, 2))
    True
    >>> is_321_avoiding((3, 2, 1))
    False
    """
    # max1 = largest value seen; max2 = largest value seen that has some
    # larger value before it.  A value below max2 completes a 321.
    max1 = 0
    max2 = 0
    for v in w:
        if v < max2:
            return False
        if v < max1:
            if v > max2:
                max2 = v
        else:
            max1 = v
    return True


def is_hexagon_avoiding(w: Perm) -> bool:
    """True iff ``w`` contains none of the four hexagon patterns."""
    if len(w) < 8:
        return True
    return not any(contains_pattern(w, pat) for pat in HEXAGON_PATTERNS)


def is_321_hexagon_avoiding(w: Perm) -> bool:
    """True iff ``w`` avoids [3,2,1] and all four hexagon patterns.

    >>> is_321_hexagon_avoiding((3, 4, 5, 1, 2))
    True
    >>> is_321_hexagon_avoiding((4, 6, 7, 1, 8, 2, 3, 5))
    False
    """
    return is_321_avoiding(w) and is_hexagon_avoiding(w)


def lateral_convexity_check(a: Word) -> bool:
    """True iff every two equal letters are separated by both neighbours.

    For each pair of consecutive occurrences of ``s_i`` there must be an
    occurrence of ``s_{i-1}`` and one of ``s_{i+1}`` strictly between
    them.  Equivalent to 321-avoidance of the underlying permutation.

    >>> lateral_convexity_check((1, 2, 1))
    False
    >>> lateral_convexity_check((2, 1, 3, 2, 4, 3))
    True
    """
    if not is_reduced(a):
        raise InputError(f"word is not reduced: {a}")
    last_seen: dict[int, int] = {}
    for j, i in enumerate(a):
        if i in last_seen:
            between = a[last_seen[i] + 1 : j]
            if i - 1 not in between or i + 1 not in between:
                return False
        last_seen[i] = j
    return True


def all_below(w: Perm) -> set[Perm]:
    """The Bruhat interval [e, w] as a set.

    Built by accumulating products of subwords of the canonical reduced
    word: after each letter the running set is closed under appending it.

    >>> sorted(all_below((2, 1, 3)))
    [(1, 2, 3), (2, 1, 3)]
    """
    n = len(w)
    below: set[Perm] = {identity(n)}
    for i in canonical_reduced_word(w):
        below |= {apply_gen(x, i) for x in below}
    return below


def all_321_avoiding(n: int, first: int | None = None) -> Iterator[Perm]:
    """Yield the 321-avoiding permutations of S_n in lexicographic order.

    A value may be placed iff it exceeds every earlier value (a new
    left-to-right maximum) or exceeds the last placed non-maximum, which
    keeps the non-maxima increasing.  ``first`` restricts to permutations
    with the given first value (used to partition parallel work).
    """
    out = [0] * n
    used = [False] * (n + 1)

    def rec(pos: int, max_so_far: int, last_non_max: int) -> Iterator[Perm]:
        if pos == n:
            yield tuple(out)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if v > max_so_far:
                nxt = (v, last_non_max)
            elif v > last_non_max:
                nxt = (max_so_far, v)
            else:
                continue
            used[v] = True
            out[pos] = v
            yield from rec(pos + 1, *nxt)
            used[v] = False

    if first is None:
        yield from rec(0, 0, 0)
    elif 1 <= first <= n:
        used[first] = True
        out[0] = first
        yield from rec(1, first, 0)


def catalan(n: int) -> int:
    """The n-th Catalan number (the count of 321-avoiding permutations).

    >>> [catalan(n) for n in range(1, 7)]
    [1, 2, 5, 14, 42, 132]
    """
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# Text forms


def parse_perm(s: str) -> Perm:
    """Parse comma-separated one-line notation.

    >>> parse_perm("3,4,5,1,2")
    (3, 4, 5, 1, 2)
    """
    parts = s.split(",")
    vals = []
    for pos, part in enumerate(parts, start=1):
        try:
            vals.append(int(part.strip()))
        except ValueError:
            raise InputError(
                f"invalid permutation {s!r}: entry {pos} ({part.strip()!r}) is not an integer"
            ) from None
    p = tuple(vals)
    validate_perm(p)
    return p


def format_perm(p: Perm) -> str:
    """Inverse of parse_perm.

    >>> format_perm((3, 4, 5, 1, 2))
    '3,4,5,1,2'
    """
    return ",".join(str(v) for v in p)


def parse_word(s: str) -> Word:
    """Parse a space-separated generator word; empty input is the empty word.

    >>> parse_word("2 1 3 2 4 3")
    (2, 1, 3, 2, 4, 3)
    >>> parse_word("")
    ()
    """
    parts = s.split()
    word = []
    for pos, part in enumerate(parts, start=1):
        try:
            v = int(part)
        except ValueError:
            raise InputError(
                f"invalid word {s!r}: letter {pos} ({part!r}) is not an integer"
            ) from None
        if v < 1:
            raise InputError(f"invalid word {s!r}: letter {pos} must be >= 1")
        word.append(v)
    return tuple(word)


def format_word(a: Word) -> str:
    """Inverse of parse_word.

    >>> format_word((2, 1, 3, 2, 4, 3))
    '2 1 3 2 4 3'
    """
    return " ".join(str(i) for i in a)
