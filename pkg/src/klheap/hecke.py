"""Hecke algebra over Z[v, v^-1] (v^2 = q) and the canonical basis.

Elements are sparse dicts mapping one-line permutations to Laurent
polynomials in v.  Only right multiplication by generators is needed:

    T_x T_s = T_{xs}                     if l(xs) > l(x)
    T_x T_s = (q-1) T_x + q T_{xs}       otherwise

The canonical basis element of w is computed by the usual recursion on a
right descent s of w, subtracting mu-correction terms read off the
already-known table of w s:

    C'_w = C'_{ws} C'_s - sum_z mu(z, ws) C'_z   over z with zs < z.

Expanding C'_w = v^{-l(w)} sum_{x <= w} P_x(q) T_x yields the table of
polynomials P_x attached to w; every table is checked on construction
(P_w = 1, exponents even and nonnegative, strict degree bound below
(l(w) - l(x))/2).  The bar involution is only applied by the test
battery, since expanding inverse basis elements is exponential in the
rank; the structural checks here run on every table build.

Tables are memoized by one-line notation for the life of the process;
the CLI persists them to a cache file.
"""

from __future__ import annotations

from .errors import ConsistencyError, InputError
from .perm import (
    Perm,
    canonical_reduced_word,
    identity,
    inverse,
    length,
    validate_perm,
)
from .qpoly import (
    HalfLaurent,
    QPoly,
    bar,
    coeff_at,
    degree,
    hl_from_qpoly,
    hl_norm,
    hl_to_qpoly,
    poly_add,
    poly_mul,
)

Element = dict[Perm, HalfLaurent]

_Q: HalfLaurent = {2: 1}
_Q_MINUS_1: HalfLaurent = {2: 1, 0: -1}
_Q_INV: HalfLaurent = {-2: 1}
_Q_INV_MINUS_1: HalfLaurent = {-2: 1, 0: -1}
_V_INV: HalfLaurent = {-1: 1}


def t_identity(n: int) -> Element:
    return {identity(n): {0: 1}}


def _elem_norm(h: Element) -> Element:
    return {x: c for x, c in ((x, hl_norm(c)) for x, c in h.items()) if c}


def elem_add(h1: Element, h2: Element) -> Element:
    out = dict(h1)
    for x, c in h2.items():
        out[x] = poly_add(out.get(x, {}), c)
    return _elem_norm(out)


def elem_scale(h: Element, scalar: HalfLaurent) -> Element:
    return _elem_norm({x: poly_mul(c, scalar) for x, c in h.items()})


def t_mul_gen(h: Element, i: int) -> Element:
    """Right multiplication by T_{s_i}."""
    out: Element = {}

    def acc(x: Perm, c: HalfLaurent) -> None:
        out[x] = poly_add(out.get(x, {}), c)

    for x, c in h.items():
        if i < 1 or i >= len(x):
            raise InputError(f"generator {i} out of range for rank {len(x)}")
        xs = list(x)
        xs[i - 1], xs[i] = xs[i], xs[i - 1]
        xs = tuple(xs)
        if x[i - 1] < x[i]:
            acc(xs, c)
        else:
            acc(x, poly_mul(c, _Q_MINUS_1))
            acc(xs, poly_mul(c, _Q))
    return _elem_norm(out)


def _t_mul_gen_inv(h: Element, i: int) -> Element:
    # T_x T_s^{-1} = T_{xs} when xs < x, else q^{-1} T_{xs} + (q^{-1}-1) T_x.
    out: Element = {}

    def acc(x: Perm, c: HalfLaurent) -> None:
        out[x] = poly_add(out.get(x, {}), c)

    for x, c in h.items():
        xs = list(x)
        xs[i - 1], xs[i] = xs[i], xs[i - 1]
        xs = tuple(xs)
        if x[i - 1] > x[i]:
            acc(xs, c)
        else:
            acc(xs, poly_mul(c, _Q_INV))
            acc(x, poly_mul(c, _Q_INV_MINUS_1))
    return _elem_norm(out)


_TINV: dict[Perm, Element] = {}


def _t_inv(y: Perm) -> Element:
    """T_y^{-1}, expanded in the T basis."""
    if y in _TINV:
        return _TINV[y]
    inv = inverse(y)
    for s in range(1, len(y)):
        if inv[s - 1] > inv[s]:
            break
    else:
        return {y: {0: 1}}
    # y = s (sy) with sy shorter; peel on the left so only right
    # multiplications are ever needed: T_y^{-1} = T_{sy}^{-1} T_s^{-1}.
    sy = list(y)
    sy[inv[s] - 1], sy[inv[s - 1] - 1] = s, s + 1
    result = _t_mul_gen_inv(_t_inv(tuple(sy)), s)
    _TINV[y] = result
    return result


def bar_element(h: Element) -> Element:
    """The bar involution: v -> v^{-1}, T_x -> (T_{x^{-1}})^{-1}."""
    out: Element = {}
    for x, c in h.items():
        out = elem_add(out, elem_scale(_t_inv(inverse(x)), bar(c)))
    return out


def c_prime_s(i: int, n: int) -> Element:
    """v^{-1} (T_e + T_{s_i}) in rank n."""
    if not 1 <= i <= n - 1:
        raise InputError(f"generator {i} out of range for rank {n}")
    e = identity(n)
    s = list(e)
    s[i - 1], s[i] = s[i], s[i - 1]
    return {e: {-1: 1}, tuple(s): {-1: 1}}


_CP: dict[Perm, Element] = {}
_KL: dict[Perm, dict[Perm, QPoly]] = {}


def _mu(p: QPoly, l_diff: int) -> int:
    # Coefficient of q^{(l_diff - 1)/2}; zero when that is not an integer.
    if l_diff % 2 == 0:
        return 0
    return coeff_at(p, (l_diff - 1) // 2)


def _c_prime(w: Perm) -> Element:
    if w in _CP:
        return _CP[w]
    if w in _KL:
        lw = length(w)
        elem = {x: hl_from_qpoly(p, -lw) for x, p in _KL[w].items()}
        _CP[w] = elem
        return elem
    for s in range(1, len(w)):
        if w[s - 1] > w[s]:
            break
    else:
        elem = t_identity(len(w))
        _CP[w] = elem
        return elem
    u = list(w)
    u[s - 1], u[s] = u[s], u[s - 1]
    u = tuple(u)
    table_u = kl_table(u)
    lu = length(u)
    elem = _c_prime(u)
    elem = elem_scale(elem_add(elem, t_mul_gen(elem, s)), _V_INV)
    for z, p in table_u.items():
        if z[s - 1] > z[s]:
            m = _mu(p, lu - length(z))
            if m:
                elem = elem_add(elem, elem_scale(_c_prime(z), {0: -m}))
    _CP[w] = elem
    return elem


def kl_table(w: Perm) -> dict[Perm, QPoly]:
    """The polynomial table of w: x -> P_x for every x below w.

    Raises ConsistencyError if the computed basis element fails any of
    the structural checks (unit top coefficient, integral nonnegative
    exponents, degree bound).
    """
    w = tuple(w)
    validate_perm(w)
    if w in _KL:
        return dict(_KL[w])
    elem = _c_prime(w)
    lw = length(w)
    table: dict[Perm, QPoly] = {}
    for x, c in elem.items():
        p = hl_to_qpoly(c, lw)
        lx = length(x)
        if x == w:
            if p != (1,):
                raise ConsistencyError(f"top polynomial of {w} is {p}, not 1")
        elif 2 * degree(p) > lw - lx - 1:
            raise ConsistencyError(
                f"degree bound violated at x={x}, w={w}: {p} with "
                f"lengths {lx}, {lw}"
            )
        table[x] = p
    _KL[w] = table
    return dict(table)


def seed_kl_table(w: Perm, table: dict[Perm, QPoly]) -> None:
    """Install an externally stored table (cache load)."""
    _KL[tuple(w)] = dict(table)


def all_cached_tables() -> dict[Perm, dict[Perm, QPoly]]:
    """Snapshot of every table memoized so far."""
    return {w: dict(t) for w, t in _KL.items()}


def clear_caches() -> None:
    _TINV.clear()
    _CP.clear()
    _KL.clear()


def is_tight(w: Perm) -> bool:
    """Whether the product of C'_s over a reduced word of w is C'_w."""
    w = tuple(w)
    validate_perm(w)
    h = t_identity(len(w))
    for i in canonical_reduced_word(w):
        h = elem_scale(elem_add(h, t_mul_gen(h, i)), _V_INV)
    return h == _c_prime(w)


def poincare_ih(w: Perm) -> QPoly:
    """sum over x <= w of q^{l(x)} P_x(q)."""
    total: QPoly = ()
    for x, p in kl_table(w).items():
        total = poly_add(total, poly_mul(p, (0,) * length(x) + (1,)))
    return total
