"""Exact polynomial arithmetic in q and in v = q^(1/2).

Two representations:

- ``QPoly``: a tuple of integer coefficients, index d holding the
  coefficient of q^d, normalized so the last entry is nonzero (the zero
  polynomial is the empty tuple).
- ``HalfLaurent``: a dict mapping integer exponents of v to nonzero
  integer coefficients; exponents may be negative.

``poly_add``, ``poly_mul``, ``degree`` and ``coeff_at`` accept either
representation (but do not mix them in one call).  All arithmetic is
exact; Python integers never overflow.
"""

from __future__ import annotations

from .errors import ConsistencyError, InputError

QPoly = tuple[int, ...]
HalfLaurent = dict[int, int]

ZERO: QPoly = ()
ONE: QPoly = (1,)

#: Degree of the zero polynomial.
MINUS_INFINITY = float("-inf")


def qnorm(coeffs) -> QPoly:
    """Normalize a coefficient sequence into a QPoly (strip trailing zeros).

    >>> qnorm([1, 2, 0])
    (1, 2)
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def hl_norm(h: HalfLaurent) -> HalfLaurent:
    """Drop zero coefficients from a HalfLaurent."""
    return {e: c for e, c in h.items() if c != 0}


def poly_add(a, b):
    """Sum of two QPolys or two HalfLaurents.

    >>> poly_add((1, 1), (0, 1))
    (1, 2)
    >>> poly_add({-1: 1}, {-1: -1, 2: 3})
    {2: 3}
    """
    if isinstance(a, dict) and isinstance(b, dict):
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return hl_norm(out)
    if isinstance(a, dict) or isinstance(b, dict):
        raise TypeError("cannot mix QPoly and HalfLaurent operands")
    n = max(len(a), len(b))
    return qnorm((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_mul(a, b):
    """Product of two QPolys or two HalfLaurents.

    >>> poly_mul((1, 1), (1, 1))
    (1, 2, 1)
    >>> poly_mul({-1: 1}, {1: 1, -1: 1}) == {0: 1, -2: 1}
    True
    """
    if isinstance(a, dict) and isinstance(b, dict):
        out: HalfLaurent = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return hl_norm(out)
    if isinstance(a, dict) or isinstance(b, dict):
        raise TypeError("cannot mix QPoly and HalfLaurent operands")
    if not a or not b:
        return ZERO
    out_c = [0] * (len(a) + len(b) - 1)
    for i, c1 in enumerate(a):
        if c1:
            for j, c2 in enumerate(b):
                out_c[i + j] += c1 * c2
    return qnorm(out_c)


def degree(p):
    """Degree, with MINUS_INFINITY for the zero polynomial.

    >>> degree((1, 0, 3))
    2
    >>> degree(())
    -inf
    """
    if isinstance(p, dict):
        return max(p) if p else MINUS_INFINITY
    return len(p) - 1 if p else MINUS_INFINITY


def coeff_at(p, d: int) -> int:
    """Coefficient of q^d (QPoly) or v^d (HalfLaurent).

    >>> coeff_at((1, 2), 1)
    2
    >>> coeff_at({-3: 1}, -3)
    1
    """
    if isinstance(p, dict):
        return p.get(d, 0)
    return p[d] if 0 <= d < len(p) else 0


def poly_shift(p: QPoly, k: int) -> QPoly:
    """Multiply a QPoly by q^k (k >= 0).

    >>> poly_shift((1, 1), 2)
    (0, 0, 1, 1)
    """
    return (0,) * k + p if p else ZERO


def poly_eval(p: QPoly, x: int) -> int:
    """Evaluate at an integer point.

    >>> poly_eval((1, 2), 1)
    3
    """
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def bar(h: HalfLaurent) -> HalfLaurent:
    """The involution v -> v^(-1) (exponent negation).

    >>> bar({1: 1}) == {-1: 1}
    True
    >>> bar({0: 3}) == {0: 3}
    True
    """
    return {-e: c for e, c in h.items()}


def hl_from_qpoly(p: QPoly, shift: int = 0) -> HalfLaurent:
    """A QPoly as a HalfLaurent: q^d becomes v^(2d + shift)."""
    return {2 * d + shift: c for d, c in enumerate(p) if c != 0}


def hl_to_qpoly(h: HalfLaurent, shift: int = 0) -> QPoly:
    """Convert v^(e + shift) terms back to q; exponents must be even and >= 0."""
    out: dict[int, int] = {}
    for e, c in h.items():
        e += shift
        if e < 0 or e % 2:
            raise ConsistencyError(f"not a polynomial in q: v-exponent {e} (coeff {c})")
        out[e // 2] = c
    if not out:
        return ZERO
    coeffs = [0] * (max(out) + 1)
    for d, c in out.items():
        coeffs[d] = c
    return qnorm(coeffs)


def q_fibonacci(n: int) -> QPoly:
    """The q-Fibonacci family F_n = F_{n-1} + q F_{n-2}, F_0 = F_1 = 1.

    >>> q_fibonacci(3)
    (1, 2)
    >>> q_fibonacci(-2)
    ()
    """
    if n < 0:
        return ZERO
    prev, cur = ONE, ONE  # F_0, F_1
    for _ in range(n):
        prev, cur = cur, poly_add(cur, poly_shift(prev, 1))
    return prev


# ---------------------------------------------------------------------------
# Power series in z with QPoly coefficients

ZSeries = tuple[QPoly, ...]


def zpoly_mul(a: ZSeries, b: ZSeries) -> ZSeries:
    """Product of two z-polynomials with QPoly coefficients."""
    if not a or not b:
        return ()
    out: list[QPoly] = [ZERO] * (len(a) + len(b) - 1)
    for i, p in enumerate(a):
        for j, q in enumerate(b):
            out[i + j] = poly_add(out[i + j], poly_mul(p, q))
    return tuple(out)


def rational_series_coeff(num: ZSeries, den: ZSeries, k: int) -> QPoly:
    """Coefficient of z^k in the power series num/den, by long division.

    The constant term of the denominator must be a unit (+-1).

    >>> rational_series_coeff(((1,),), ((1,), (-1,)), 5)  # 1/(1-z)
    (1,)
    """
    if not den or den[0] not in ((1,), (-1,)):
        raise InputError(
            f"denominator constant term {den[0] if den else ZERO} is not invertible"
        )
    sign = den[0][0]
    series: list[QPoly] = []
    for m in range(k + 1):
        acc = num[m] if m < len(num) else ZERO
        for i in range(1, min(m, len(den) - 1) + 1):
            prod = poly_mul(den[i], series[m - i])
            acc = poly_add(acc, tuple(-c for c in prod))
        series.append(acc if sign == 1 else tuple(-c for c in acc))
    return series[k]


#: Generating function whose z^m coefficient is the Kazhdan-Lusztig
#: polynomial P_{e,v} for the 3-by-m diamond heap family.
G_E_NUM: ZSeries = ((-1,), ZERO, (0, 0, 1), (0, 0, 0, 1))
G_E_DEN: ZSeries = zpoly_mul(
    ((1,), (0, 1), (0, 0, 1)),
    ((-1,), (1, 1), (0, 1, 1), (0, 0, 1), (0, 0, 0, 0, -1)),
)


# ---------------------------------------------------------------------------
# Text and JSON forms


def poly_text(p: QPoly) -> str:
    """Pretty-print with ascending powers.

    >>> poly_text((1, 2))
    '1+2q'
    >>> poly_text((0, -1, 0, 3))
    '-q+3q^3'
    >>> poly_text(())
    '0'
    """
    if not p:
        return "0"
    parts = []
    for d, c in enumerate(p):
        if c == 0:
            continue
        if d == 0:
            term = str(c)
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            term = ("-" if c < 0 else "") + mag + ("q" if d == 1 else f"q^{d}")
        if parts and not term.startswith("-"):
            parts.append("+")
        parts.append(term)
    return "".join(parts)


def poly_json(p: QPoly) -> dict:
    """JSON object form {"coeffs": [...]}."""
    return {"coeffs": list(p)}


def poly_from_json(obj: dict) -> QPoly:
    """Inverse of poly_json."""
    try:
        return qnorm(int(c) for c in obj["coeffs"])
    except (KeyError, TypeError, ValueError):
        raise InputError(f"not a polynomial object: {obj!r}") from None


def hl_json(h: HalfLaurent) -> dict:
    """JSON object form {"v_exps": {exp: coeff}} with sorted string keys."""
    return {"v_exps": {str(e): h[e] for e in sorted(h)}}
