"""Cross-checking battery behind the verify command.

Runs every structural identity the package promises on a population of
permutations: exhaustively through rank 6, sampled above that.  Failures
come back as human-readable strings; an empty list means the battery
passed.
"""

from __future__ import annotations

import itertools
import random

from .errors import ResourceLimitError
from . import deodhar, hecke, heap, qpoly, schubert
from .perm import (
    apply_word,
    bruhat_leq,
    canonical_reduced_word,
    all_321_avoiding,
    identity,
    is_321_avoiding,
    is_hexagon_avoiding,
    is_reduced,
    length,
)

#: Words longer than this skip the mask-exhaustive checks.
EXHAUSTIVE_WORD_LIMIT = 18
#: Words up to this length compare the fast mask walk against the
#: from-scratch one and sweep every mask for defect-graph checks.
FULL_MASK_LIMIT = 12


def _check_perm(w, failures):
    a = canonical_reduced_word(w)
    if not is_reduced(a) or apply_word(a, len(w)) != w or len(a) != length(w):
        failures.append(f"canonical word of {w} broken: {a}")
    if not bruhat_leq(identity(len(w)), w) or not bruhat_leq(w, w):
        failures.append(f"bruhat reflexivity/bottom failed at {w}")


def _check_kl(w, failures):
    table = hecke.kl_table(w)
    hex_avoiding = is_hexagon_avoiding(w) and is_321_avoiding(w)
    lw = length(w)
    binom = (1,)
    for _ in range(lw):
        binom = qpoly.poly_mul(binom, (1, 1))
    if (hecke.poincare_ih(w) == binom) != hex_avoiding:
        failures.append(f"poincare criterion disagrees with patterns at {w}")
    if hecke.is_tight(w) != hex_avoiding:
        failures.append(f"tightness disagrees with patterns at {w}")
    if len(w) <= 5:
        elem = hecke._c_prime(w)
        if hecke.bar_element(elem) != elem:
            failures.append(f"canonical element of {w} not bar-invariant")
    return table, hex_avoiding


def _check_word(w, table, hex_avoiding, failures, rng=None):
    a = canonical_reduced_word(w)
    r = len(a)
    if r == 0 or r > EXHAUSTIVE_WORD_LIMIT:
        return
    masks_table = deodhar.deodhar_table(a, len(w))
    total = sum(qpoly.poly_eval(p, 1) for p in masks_table.values())
    if total != 2**r:
        failures.append(f"mask count of {a} is {total}, want {2 ** r}")
    if not deodhar.recursion_check(a, a[-1]):
        failures.append(f"one-letter recursion fails for {a}")
    if r <= FULL_MASK_LIMIT and masks_table != deodhar.deodhar_table_naive(a, len(w)):
        failures.append(f"fast and naive mask tables disagree for {a}")
    if hex_avoiding:
        for x, p in table.items():
            if masks_table.get(x, qpoly.ZERO) != p:
                failures.append(f"mask polynomial != table polynomial at {x}, {w}")
                break
    if not is_321_avoiding(w):
        return
    h = heap.build_heap(a)  # internal order checks raise on violation
    if sorted(j for comp in h.components for j in comp) != list(range(1, r + 1)):
        failures.append(f"components of {a} do not partition positions")
    if r <= FULL_MASK_LIMIT:
        mask_pool = itertools.product((0, 1), repeat=r)
    else:
        rng = rng or random.Random(0)
        mask_pool = [
            tuple(rng.randrange(2) for _ in range(r)) for _ in range(256)
        ]
    for mask in mask_pool:
        rec = deodhar.defect_set(a, mask, len(w))
        if rec.product == w:
            continue
        lhs = deodhar.delta(a, mask) >= 0
        rhs = sum(1 for b in mask if b == 0) >= 2 * len(rec.zero_defects) + 1
        if lhs != rhs:
            failures.append(f"defect bound fails for {a}, mask {mask}")
        g = deodhar.defect_graph(a, mask)  # also exercises critical zeros
        if not deodhar.is_forest(g):
            failures.append(f"defect graph not a forest for {a}, mask {mask}")


def _check_schubert(w, table, failures):
    if not (is_321_avoiding(w) and is_hexagon_avoiding(w)):
        return
    a = canonical_reduced_word(w)
    locus = schubert.max_singular_locus(a, len(w))
    if locus != schubert.max_singular_locus_oracle(w):
        failures.append(f"singular locus disagrees with oracle at {w}")
    if schubert.is_smooth(w) != (len(locus) == 0):
        failures.append(f"smoothness pattern test disagrees with locus at {w}")


def _sample_population(n, sample, seed):
    rng = random.Random(seed)
    perms = set()
    for _ in range(sample - sample // 2):
        p = list(range(1, n + 1))
        rng.shuffle(p)
        perms.add(tuple(p))
    # reservoir over the 321-avoiding family for the other half
    reservoir: list = []
    for idx, w in enumerate(all_321_avoiding(n)):
        if len(reservoir) < sample // 2:
            reservoir.append(w)
        else:
            j = rng.randrange(idx + 1)
            if j < sample // 2:
                reservoir[j] = w
    perms.update(reservoir)
    return sorted(perms), rng


def verify_battery(n: int, sample: int | None = None, seed: int = 0) -> dict:
    """Run every cross-check over rank-n permutations.

    Exhaustive for n <= 6; larger ranks must pass a sample size.
    """
    if n < 1:
        raise ResourceLimitError(f"rank must be positive, got {n}")
    if n >= 7 and sample is None:
        raise ResourceLimitError(
            f"exhaustive battery is limited to rank 6; pass a sample size for rank {n}"
        )
    rng = None
    if sample is None:
        population = [tuple(p) for p in itertools.permutations(range(1, n + 1))]
    else:
        population, rng = _sample_population(n, sample, seed)
    failures: list[str] = []
    for w in population:
        _check_perm(w, failures)
        table, hex_avoiding = _check_kl(w, failures)
        _check_word(w, table, hex_avoiding, failures, rng)
        _check_schubert(w, table, failures)
    return {
        "rank": n,
        "population": len(population),
        "exhaustive": sample is None,
        "failures": failures,
    }
