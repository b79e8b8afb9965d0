"""Named graph families and exact closed forms for their distances.

Vertex numbering used by :func:`build` (fixed so that witnesses printed in
reports are reproducible):

* path ``P_n``: ``0 - 1 - ... - n-1``.
* cycle ``C_n``: ``0 - 1 - ... - n-1 - 0``.
* star ``K_{1,n-1}``: centre ``0``, leaves ``1..n-1``.
* lollipop ``L(n, g)``: cycle on ``0..g-1``; the path ``g, g+1, ..., n-1``
  hangs off vertex ``0``, so ``n-1`` is the pendant vertex.
* dumbbell ``C(m1, m2, n)``: first cycle on ``0..m1-1`` attached at ``0``.
  With ``k = n + 2 - m1 - m2 >= 2`` the second cycle is ``m1..m1+m2-1``,
  attached at ``m1``, and the path interior ``m1+m2..n-1`` runs from ``0``
  to ``m1``.  With ``k = 1`` the second cycle is ``0, m1, ..., m1+m2-2``.
* forked lollipop ``F(n, g)``: ``L(n-2, g)`` with two extra leaves
  ``n-2, n-1`` on its pendant vertex ``n-3``.

All formulas are evaluated over Python integers; every division asserts it is
exact, so a wrong parity branch fails loudly instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import MAX_ORDER, Graph, GraphError

PATH = "path"
CYCLE = "cycle"
STAR = "star"
LOLLIPOP = "lollipop"
DUMBBELL = "dumbbell"
FORKED = "forked"

KINDS = (PATH, CYCLE, STAR, LOLLIPOP, DUMBBELL, FORKED)


class FamilyParameterError(GraphError):
    pass


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        _validate(self.kind, self.params)

    @property
    def order(self) -> int:
        return self.params[-1] if self.kind == DUMBBELL else self.params[0]

    def label(self) -> str:
        p = self.params
        if self.kind == PATH:
            return f"P_{p[0]}"
        if self.kind == CYCLE:
            return f"C_{p[0]}"
        if self.kind == STAR:
            return f"K_1,{p[0] - 1}"
        if self.kind == LOLLIPOP:
            return f"L_{p[0]},{p[1]}"
        if self.kind == DUMBBELL:
            return f"C^{p[2]}_{p[0]},{p[1]}"
        return f"F_{p[0]},{p[1]}"


def _validate(kind: str, p: tuple[int, ...]) -> None:
    def need(cond: bool, what: str) -> None:
        if not cond:
            raise FamilyParameterError(f"{kind}{p}: {what}")

    if kind in (PATH, CYCLE, STAR):
        need(len(p) == 1, "expects one parameter n")
        lo = {PATH: 1, CYCLE: 3, STAR: 2}[kind]
        need(p[0] >= lo, f"n >= {lo} required")
    elif kind == LOLLIPOP:
        need(len(p) == 2, "expects parameters n, g")
        n, g = p
        need(3 <= g, "g >= 3 required")
        need(g <= n, "g <= n required")
    elif kind == DUMBBELL:
        need(len(p) == 3, "expects parameters m1, m2, n")
        m1, m2, n = p
        need(m1 >= 3 and m2 >= 3, "m1, m2 >= 3 required")
        need(n >= m1 + m2 - 1, "n >= m1 + m2 - 1 required")
    elif kind == FORKED:
        need(len(p) == 2, "expects parameters n, g")
        n, g = p
        need(g >= 3, "g >= 3 required")
        need(n >= g + 3, "n >= g + 3 required")
    else:
        raise FamilyParameterError(f"unknown family {kind!r}; expected one of {', '.join(KINDS)}")


def path(n: int) -> FamilySpec:
    return FamilySpec(PATH, (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec(CYCLE, (n,))


def star(n: int) -> FamilySpec:
    return FamilySpec(STAR, (n,))


def lollipop(n: int, g: int) -> FamilySpec:
    return FamilySpec(LOLLIPOP, (n, g))


def dumbbell(m1: int, m2: int, n: int) -> FamilySpec:
    return FamilySpec(DUMBBELL, (m1, m2, n))


def forked(n: int, g: int) -> FamilySpec:
    return FamilySpec(FORKED, (n, g))


def _cycle_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(vertices[i], vertices[(i + 1) % len(vertices)]) for i in range(len(vertices))]


def build(spec: FamilySpec) -> Graph:
    if spec.order > MAX_ORDER:
        raise FamilyParameterError(f"{spec.label()}: graphs are limited to {MAX_ORDER} vertices")
    p = spec.params
    if spec.kind == PATH:
        n = p[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if spec.kind == CYCLE:
        n = p[0]
        return Graph.from_edges(n, _cycle_edges(list(range(n))))
    if spec.kind == STAR:
        n = p[0]
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if spec.kind == LOLLIPOP:
        n, g = p
        edges = _cycle_edges(list(range(g)))
        edges += [(0 if i == g else i - 1, i) for i in range(g, n)]
        return Graph.from_edges(n, edges)
    if spec.kind == DUMBBELL:
        m1, m2, n = p
        k = n + 2 - m1 - m2
        edges = _cycle_edges(list(range(m1)))
        if k == 1:
            edges += _cycle_edges([0] + list(range(m1, m1 + m2 - 1)))
        else:
            edges += _cycle_edges(list(range(m1, m1 + m2)))
            chain = [0] + list(range(m1 + m2, n)) + [m1]
            edges += list(zip(chain, chain[1:]))
        return Graph.from_edges(n, edges)
    n, g = p
    base = build(lollipop(n - 2, g))
    return Graph.from_edges(n, base.edges() + [(n - 3, n - 2), (n - 3, n - 1)])


# -- closed forms ----------------------------------------------------------------


def formula_path_vertex_distance(n: int, i: int) -> int:
    """Distance of ``v_i`` (1-based) in ``P_n``."""
    if not 1 <= i <= n:
        raise FamilyParameterError(f"vertex index {i} outside 1..{n}")
    return _exact_div(i * (i - 1), 2) + _exact_div((n - i) * (n - i + 1), 2)


def formula_wiener_path(n: int) -> int:
    if n < 1:
        raise FamilyParameterError("n >= 1 required")
    return comb(n + 1, 3)


def formula_cycle_vertex_distance(n: int) -> int:
    if n < 3:
        raise FamilyParameterError("n >= 3 required")
    if n % 2 == 0:
        return _exact_div(n * n, 4)
    return _exact_div(n * n - 1, 4)


def formula_wiener_cycle(n: int) -> int:
    if n < 3:
        raise FamilyParameterError("n >= 3 required")
    if n % 2 == 0:
        return _exact_div(n**3, 8)
    return _exact_div(n * (n * n - 1), 8)


def formula_wiener_lollipop(n: int, g: int) -> int:
    if not 3 <= g <= n:
        raise FamilyParameterError("3 <= g <= n required")
    # scaled by 24 to clear the 1/6, 1/8 and 1/12 denominators
    tail = 4 * (n * n + n * g + 3 * g - 1) - 2 * g * g
    if g % 2 == 0:
        return _exact_div(3 * g**3 + (n - g) * tail, 24)
    return _exact_div(3 * g * (g * g - 1) + (n - g) * (tail - 6), 24)


def formula_lollipop_pendant_distance(n: int, g: int) -> int:
    if not 3 <= g < n:
        raise FamilyParameterError("3 <= g < n required")
    along = _exact_div((n - g) * (n + g - 1), 2)
    if g % 2 == 0:
        return _exact_div(g * g, 4) + along
    return _exact_div(g * g - 1, 4) + along


def formula_wiener_dumbbell(m1: int, m2: int, n: int) -> int:
    if m1 < 3 or m2 < 3 or n < m1 + m2 - 1:
        raise FamilyParameterError("m1, m2 >= 3 and n >= m1 + m2 - 1 required")
    k = n + 2 - m1 - m2
    if k == 1:
        return _wiener_dumbbell_shared(m1, m2)
    common = (
        m1**3 + m2**3 + 2 * m1 * m1 * m2 + 2 * m1 * m2 * m2
        + 2 * m1 * m1 * k + 2 * m2 * m2 * k + 4 * m1 * k * k + 4 * m2 * k * k + 8 * m1 * m2 * k
        - 4 * m1 * m1 - 4 * m2 * m2 - 8 * m1 * m2 - 12 * m1 * k - 12 * m2 * k - 8 * k * k
    )
    e1, e2 = m1 % 2 == 0, m2 % 2 == 0
    # each branch: (linear tail inside the 1/8 bracket, numerator over 24 of the k-only term)
    if e1 and e2:
        inner = common + 8 * m1 + 8 * m2 - 8
        extra = 4 * (k**3 + 11 * k)
    elif e1:
        inner = common + 6 * m1 + 7 * m2 - 4
        extra = 2 * (2 * k**3 + 19 * k)
    elif e2:
        inner = common + 7 * m1 + 6 * m2 - 4
        extra = 2 * (2 * k**3 + 19 * k)
    else:
        inner = common + 5 * m1 + 5 * m2
        extra = 4 * (k**3 + 8 * k)
    return _exact_div(3 * inner + extra, 24)


def _wiener_dumbbell_shared(m1: int, m2: int) -> int:
    """Two cycles glued at a single vertex (no connecting path)."""
    base = m1**3 + m2**3 + 2 * m1 * m1 * m2 + 2 * m1 * m2 * m2 - 2 * m1 * m1 - 2 * m2 * m2
    e1, e2 = m1 % 2 == 0, m2 % 2 == 0
    if e1 and e2:
        return _exact_div(base, 8)
    if e1:
        return _exact_div(base - 2 * m1 - m2 + 2, 8)
    if e2:
        return _exact_div(base - m1 - 2 * m2 + 2, 8)
    return _exact_div(base - 3 * m1 - 3 * m2 + 4, 8)


_LNK_SPECIAL = {
    # k: (even-n coefficients, odd-n coefficients) of n^2, n, 1 next to n^3, all over 8
    1: ((-1, 6, -8), (-1, 7, -7)),
    2: ((-2, 20, -32), (-2, 19, -34)),
    3: ((-3, 38, -88), (-3, 39, -85)),
}


def formula_wiener_Lnk_special(n: int, k: int) -> int:
    """``W(L_{n,n-k})`` for ``k`` in 1..3 as cubic polynomials in ``n``."""
    if k not in _LNK_SPECIAL:
        raise FamilyParameterError("k must be 1, 2 or 3")
    if n < k + 3:
        raise FamilyParameterError(f"n >= {k + 3} required")
    a, b, c = _LNK_SPECIAL[k][n % 2]
    return _exact_div(n**3 + a * n * n + b * n + c, 8)


def formula_wiener_forked_any(n: int, g: int) -> int:
    """``W(F(n, g))`` by splitting at the vertex carrying the two extra leaves."""
    _validate(FORKED, (n, g))
    # the cherry K_{1,2} has W = 4 and its centre has distance sum 2
    return formula_wiener_lollipop(n - 2, g) + 4 + 2 * (n - 3) + 2 * formula_lollipop_pendant_distance(n - 2, g)


def formula_wiener_forked(n: int) -> int:
    """``W(F(n, n-4))``: ``L_{n-2,n-4}`` with two leaves on its pendant vertex."""
    if n < 7:
        raise FamilyParameterError("n >= 7 required")
    if n % 2 == 0:
        return _exact_div(n**3 - 4 * n * n + 56 * n - 152, 8)
    return _exact_div(n**3 - 4 * n * n + 55 * n - 156, 8)
