"""Automorphism groups of elliptic curves and their fixed-point counts.

Fixed points are counted two independent ways:

* norm arithmetic: an automorphism g of order coprime to the
  characteristic has exactly N(1 - g) fixed points, with the norm taken
  in the endomorphism order (Gaussian integers for j = 1728, Eisenstein
  integers for j = 0, a maximal quaternion order for the supersingular
  cases).  Unit groups are modeled inside a rational quaternion algebra
  (a, b | Q), which covers all four orders at once.

* brute force: explicit Weierstrass curves over small prime fields with
  explicit coordinate maps; points over an extension field are
  enumerated and the fixed ones counted.  With the extension chosen
  large enough that ker(1 - g) is rational, this is the geometric count.

When the characteristic divides the order of g the map 1 - g can be
inseparable and the fixed-point count is the separable degree; those
cases are resolved by a small rule table (validated by the brute-force
oracle) rather than computed from the norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gf import GF

# ---------------------------------------------------------------------------
# quaternion algebra (a, b | Q): i^2 = a, j^2 = b, ij = k = -ji


def quat_mul(x, y, a, b):
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        x0 * y0 + a * x1 * y1 + b * x2 * y2 - a * b * x3 * y3,
        x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
        x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


def quat_norm(x, a, b):
    x0, x1, x2, x3 = x
    return x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3


QUAT_ONE = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))


def _closure(generators, a, b):
    """Multiplicative closure of a set of quaternions (a finite group)."""
    elems = {QUAT_ONE}
    frontier = [QUAT_ONE]
    gens = [tuple(Fraction(c) for c in g) for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = quat_mul(x, g, a, b)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(elems)


def _element_order(x, a, b):
    n = 1
    y = x
    while y != QUAT_ONE:
        y = quat_mul(y, x, a, b)
        n += 1
        if n > 100:
            raise RuntimeError("element of unexpected order")
    return n


# ---------------------------------------------------------------------------
# curve classes

GENERIC = "generic"
J1728 = "1728"
J0 = "0"
SPECIAL = "special"


@dataclass(frozen=True)
class CurveClass:
    """Coarse class of an elliptic curve: characteristic and j-class.

    char 0 stands for any characteristic > 3 (j in {generic, 1728, 0});
    char 2 and 3 use j in {generic, special}.  In characteristic 2 the
    special class (j = 0) is exactly the supersingular one and the
    generic class is ordinary; same in characteristic 3.
    """

    char: int
    j: str

    def __post_init__(self):
        if self.char == 0:
            if self.j not in (GENERIC, J1728, J0):
                raise ValueError("char > 3 classes are generic, 1728 or 0")
        elif self.char in (2, 3):
            if self.j not in (GENERIC, SPECIAL):
                raise ValueError("char 2/3 classes are generic or special")
        else:
            raise ValueError("char must be 0 (meaning > 3), 2 or 3")

    @property
    def supersingular(self):
        return self.char in (2, 3) and self.j == SPECIAL

    @property
    def ordinary(self):
        return self.char in (2, 3) and self.j == GENERIC


# quaternion algebra parameters and unit-group generators per class
def _group_data(c: CurveClass):
    half = Fraction(1, 2)
    i = (0, 1, 0, 0)
    if c.char == 0:
        if c.j == GENERIC:
            return (-1, -1), [(-1, 0, 0, 0)]
        if c.j == J1728:
            return (-1, -1), [i]
        # Eisenstein: w = (-1 + j)/2 of order 3; -w has order 6
        return (-1, -3), [(half, 0, -half, 0)]
    if c.char == 3:
        if c.j == GENERIC:
            return (-1, -3), [(-1, 0, 0, 0)]
        return (-1, -3), [i, (-half, 0, half, 0)]
    if c.j == GENERIC:
        return (-1, -1), [(-1, 0, 0, 0)]
    # Hurwitz units: Q8 extended by w = (-1 + i + j + k)/2
    return (-1, -1), [i, (0, 0, 1, 0), (-half, half, half, half)]


_STRUCTURE = {
    (0, GENERIC): "Z/2",
    (0, J1728): "Z/4",
    (0, J0): "Z/6",
    (3, GENERIC): "Z/2",
    (3, SPECIAL): "Z/3:Z/4",
    (2, GENERIC): "Z/2",
    (2, SPECIAL): "Q8:Z/3",
}


def aut_group(c: CurveClass):
    """(order, structure tag) of Aut(E) for a curve of the given class."""
    (a, b), gens = _group_data(c)
    return len(_closure(gens, a, b)), _STRUCTURE[(c.char, c.j)]


def unit_elements(c: CurveClass):
    """The unit group of the endomorphism order, as quaternions."""
    (a, b), gens = _group_data(c)
    return _closure(gens, a, b), a, b


def element_orders(c: CurveClass):
    elems, a, b = unit_elements(c)
    return sorted({_element_order(x, a, b) for x in elems})


# separable degrees for the inseparable cases, cross-validated by the
# brute-force oracle (see tests): data, not a p-divisible-group computation.
_WILD_RULES = {
    (2, GENERIC, 2): 2,
    (2, SPECIAL, 2): 1,
    (2, SPECIAL, 4): 1,
    (3, SPECIAL, 3): 1,
}


def fixed_count(c: CurveClass, order: int) -> int:
    """Number of fixed points of an automorphism of the given order.

    Tame orders via N(1 - g) in the endomorphism order (the value is
    independent of which primitive element is chosen: conjugates have
    equal norms, and this is asserted).  Wild orders via the rule table;
    beyond it, if N(1 - g) is coprime to the characteristic then 1 - g
    is separable and the norm is still the count.
    """
    elems, a, b = unit_elements(c)
    of_order = [x for x in elems if _element_order(x, a, b) == order]
    if not of_order:
        raise ValueError(f"no automorphism of order {order} in class {c}")
    norms = set()
    for g in of_order:
        n = quat_norm(tuple(o - gi for o, gi in zip(QUAT_ONE, g)), a, b)
        norms.add(n)
    assert len(norms) == 1, "norm must not depend on the primitive element"
    n = norms.pop()
    assert n.denominator == 1
    n = int(n)
    p = c.char
    if p == 0 or order % p != 0:
        return n
    if (p, c.j, order) in _WILD_RULES:
        return _WILD_RULES[(p, c.j, order)]
    if n % p != 0:
        # 1 - g has degree prime to p, hence is separable
        return n
    raise ValueError(f"inseparable case (char {p}, order {order}) not in the rule table")


# ---------------------------------------------------------------------------
# explicit curves and automorphism maps


@dataclass(frozen=True)
class Weierstrass:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_p."""

    p: int
    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    a6: int = 0


@dataclass(frozen=True)
class AutMap:
    """Coordinate map (x, y) -> (X, Y) with polynomial entries.

    X and Y are dicts {(ex, ey, ew): coefficient mod p}; `w` is an
    auxiliary algebraic constant with prime-field defining polynomial
    `sym_poly` (coefficient list, low degree first), e.g. (1, 1, 1) for
    w^2 + w + 1 = 0.  Maps are affine in (x, y) and fix the point at
    infinity.
    """

    X: tuple
    Y: tuple
    sym_poly: tuple = ()

    @staticmethod
    def make(xterms, yterms, sym_poly=()):
        return AutMap(tuple(sorted(xterms.items())), tuple(sorted(yterms.items())), tuple(sym_poly))


def _resolve_w(fld: GF, sym_poly):
    if not sym_poly:
        return fld.zero
    w = fld.find_root(sym_poly)
    if w is None:
        raise ValueError("extension field does not contain the map's coefficients")
    return w


def _map_as_bivariate(terms, fld, w):
    """Collapse the w-powers to field constants: dict {(ex, ey): element}."""
    out = {}
    for (ex, ey, ew), coef in terms:
        val = fld.mul(fld.from_int(coef), fld.pow(w, ew))
        key = (ex, ey)
        out[key] = fld.add(out.get(key, fld.zero), val)
    return {k: v for k, v in out.items() if v != fld.zero}


def _poly2_mul(a, b, fld):
    out = {}
    for (e1, f1), c1 in a.items():
        for (e2, f2), c2 in b.items():
            key = (e1 + e2, f1 + f2)
            out[key] = fld.add(out.get(key, fld.zero), fld.mul(c1, c2))
    return {k: v for k, v in out.items() if v != fld.zero}


def _poly2_add(a, b, fld):
    out = dict(a)
    for k, v in b.items():
        out[k] = fld.add(out.get(k, fld.zero), v)
    return {k: v for k, v in out.items() if v != fld.zero}


def _poly2_scale(a, c, fld):
    return {k: fld.mul(v, c) for k, v in a.items() if fld.mul(v, c) != fld.zero}


def _poly2_pow(a, n, fld):
    out = {(0, 0): fld.one}
    for _ in range(n):
        out = _poly2_mul(out, a, fld)
    return out


def _weierstrass_poly(curve, X, Y, fld):
    """W(X, Y) = Y^2 + a1 XY + a3 Y - X^3 - a2 X^2 - a4 X - a6."""
    w = _poly2_pow(Y, 2, fld)
    if curve.a1:
        xy = _poly2_mul(X, Y, fld)
        w = _poly2_add(w, _poly2_scale(xy, fld.from_int(curve.a1), fld), fld)
    if curve.a3:
        w = _poly2_add(w, _poly2_scale(Y, fld.from_int(curve.a3), fld), fld)
    w = _poly2_add(w, _poly2_scale(_poly2_pow(X, 3, fld), fld.from_int(-1), fld), fld)
    for coef, power in ((curve.a2, 2), (curve.a4, 1)):
        if coef:
            w = _poly2_add(w, _poly2_scale(_poly2_pow(X, power, fld), fld.from_int(-coef), fld), fld)
    if curve.a6:
        w = _poly2_add(w, {(0, 0): fld.from_int(-curve.a6)}, fld)
    return w


def check_preserves(curve: Weierstrass, aut: AutMap) -> bool:
    """Symbolic check that the map carries the curve to itself:
    W(X(x,y), Y(x,y)) must equal c * W(x, y) for a nonzero constant c."""
    deg = max(1, len(aut.sym_poly) - 1)
    fld = GF(curve.p, deg)
    w = _resolve_w(fld, aut.sym_poly)
    X = _map_as_bivariate(aut.X, fld, w)
    Y = _map_as_bivariate(aut.Y, fld, w)
    lhs = _weierstrass_poly(curve, X, Y, fld)
    x_id = {(1, 0): fld.one}
    y_id = {(0, 1): fld.one}
    rhs = _weierstrass_poly(curve, x_id, y_id, fld)
    cy2 = lhs.get((0, 2))
    if cy2 is None:
        return False
    scaled = _poly2_scale(rhs, cy2, fld)  # rhs has y^2 coefficient 1
    return scaled == lhs


def _y_solutions(curve, fld, x, tables):
    """All y with (x, y) on the curve, over the given field."""
    p = curve.p
    x2 = fld.mul(x, x)
    x3 = fld.mul(x2, x)
    rhs = x3
    if curve.a2:
        rhs = fld.add(rhs, fld.mul(fld.from_int(curve.a2), x2))
    if curve.a4:
        rhs = fld.add(rhs, fld.mul(fld.from_int(curve.a4), x))
    if curve.a6:
        rhs = fld.add(rhs, fld.from_int(curve.a6))
    c = fld.add(fld.mul(fld.from_int(curve.a1), x), fld.from_int(curve.a3))
    if p == 2:
        if c == fld.zero:
            # y^2 = rhs: Frobenius is bijective
            return [fld.pow(rhs, fld.q // 2)]
        # y = c z, z^2 + z = rhs / c^2
        u = fld.mul(rhs, fld.inv(fld.mul(c, c)))
        return [fld.mul(c, z) for z in tables.get(u, ())]
    # odd characteristic: y^2 + c y = rhs, complete the square
    inv2 = fld.inv(fld.from_int(2))
    half_c = fld.mul(c, inv2)
    disc = fld.add(rhs, fld.mul(half_c, half_c))
    return [fld.sub(s, half_c) for s in tables.get(disc, ())]


def _solution_tables(curve, fld):
    if curve.p == 2:
        table = {}
        for z in fld.elements():
            v = fld.add(fld.mul(z, z), z)
            table.setdefault(v, []).append(z)
        return table
    table = {}
    for s in fld.elements():
        table.setdefault(fld.mul(s, s), [])
    for s in fld.elements():
        table[fld.mul(s, s)].append(s)
    return table


_FIELD_CAP = 1 << 20


def brute_force_count(curve: Weierstrass, aut: AutMap, ext_degree: int = 12) -> int:
    """Count points fixed by the map over the degree-ext_degree extension
    (including the point at infinity).

    The map is first checked symbolically to preserve the curve.  When
    ext_degree makes ker(1 - g) rational this is the geometric
    fixed-point count.
    """
    if ext_degree < 1 or curve.p**ext_degree > _FIELD_CAP:
        raise ValueError("extension field too large for enumeration")
    if not check_preserves(curve, aut):
        raise ValueError("map does not preserve the curve")
    fld = GF(curve.p, ext_degree)
    w = _resolve_w(fld, aut.sym_poly)
    xmap = _map_as_bivariate(aut.X, fld, w)
    ymap = _map_as_bivariate(aut.Y, fld, w)

    def ev(poly, xv, yv):
        acc = fld.zero
        for (ex, ey), cf in poly.items():
            acc = fld.add(acc, fld.mul(cf, fld.mul(fld.pow(xv, ex), fld.pow(yv, ey))))
        return acc

    tables = _solution_tables(curve, fld)
    count = 1  # point at infinity
    for x in fld.elements():
        for y in _y_solutions(curve, fld, x, tables):
            if ev(xmap, x, y) == x and ev(ymap, x, y) == y:
                count += 1
    return count


# ---------------------------------------------------------------------------
# the classification rows with representative curves


@dataclass(frozen=True)
class TableRow:
    cls: CurveClass
    order: int
    expected: int  # |E^g| from the classification
    curve: Weierstrass
    aut: AutMap
    ext_degree: int  # sufficient extension: all of ker(1 - g) is rational


def _rows():
    rows = []
    # characteristic > 3, realized over F_13 (both i and a cube root of
    # unity exist: 5^2 = -1, 3^3 = 1)
    c = Weierstrass(13, a4=1, a6=1)
    neg = AutMap.make({(1, 0, 0): 1}, {(0, 1, 0): 12})
    rows.append(TableRow(CurveClass(0, GENERIC), 2, 4, c, neg, 2))
    c = Weierstrass(13, a4=1)
    rows.append(TableRow(CurveClass(0, J1728), 2, 4, c, neg, 2))
    rows.append(TableRow(CurveClass(0, J1728), 4, 2, c, AutMap.make({(1, 0, 0): 12}, {(0, 1, 0): 5}), 2))
    c = Weierstrass(13, a6=1)
    rows.append(TableRow(CurveClass(0, J0), 2, 4, c, neg, 2))
    rows.append(TableRow(CurveClass(0, J0), 3, 3, c, AutMap.make({(1, 0, 0): 3}, {(0, 1, 0): 1}), 2))
    rows.append(TableRow(CurveClass(0, J0), 6, 1, c, AutMap.make({(1, 0, 0): 3}, {(0, 1, 0): 12}), 2))
    # characteristic 3: ordinary rep y^2 = x^3 + x^2 + 1 (j = 2 != 0),
    # supersingular rep y^2 = x^3 - x
    c = Weierstrass(3, a2=1, a6=1)
    neg3 = AutMap.make({(1, 0, 0): 1}, {(0, 1, 0): 2})
    rows.append(TableRow(CurveClass(3, GENERIC), 2, 4, c, neg3, 2))
    c = Weierstrass(3, a4=2)
    rows.append(TableRow(CurveClass(3, SPECIAL), 2, 4, c, neg3, 2))
    rows.append(TableRow(CurveClass(3, SPECIAL), 3, 1, c, AutMap.make({(1, 0, 0): 1, (0, 0, 0): 1}, {(0, 1, 0): 1}), 2))
    rows.append(
        TableRow(CurveClass(3, SPECIAL), 4, 2, c, AutMap.make({(1, 0, 0): 2}, {(0, 1, 1): 2}, sym_poly=(1, 0, 1)), 2)
    )
    # characteristic 2: ordinary rep y^2 + xy = x^3 + 1, supersingular
    # rep y^2 + y = x^3 (w is a cube root of unity, w^2 + w + 1 = 0)
    c = Weierstrass(2, a1=1, a6=1)
    rows.append(TableRow(CurveClass(2, GENERIC), 2, 2, c, AutMap.make({(1, 0, 0): 1}, {(0, 1, 0): 1, (1, 0, 0): 1}), 2))
    c = Weierstrass(2, a3=1)
    w3 = (1, 1, 1)
    rows.append(TableRow(CurveClass(2, SPECIAL), 2, 1, c, AutMap.make({(1, 0, 0): 1}, {(0, 1, 0): 1, (0, 0, 0): 1}), 2))
    rows.append(TableRow(CurveClass(2, SPECIAL), 3, 3, c, AutMap.make({(1, 0, 1): 1}, {(0, 1, 0): 1}, sym_poly=w3), 2))
    rows.append(
        TableRow(
            CurveClass(2, SPECIAL),
            4,
            1,
            c,
            AutMap.make({(1, 0, 0): 1, (0, 0, 0): 1}, {(0, 1, 0): 1, (1, 0, 0): 1, (0, 0, 1): 1}, sym_poly=w3),
            2,
        )
    )
    return rows


TABLE_ROWS = tuple(_rows())


def classification_report(ext_degree: int | None = None):
    """All classification rows with the norm-engine and brute-force
    columns computed side by side; `match` flags exact agreement."""
    out = []
    for row in TABLE_ROWS:
        norm_val = fixed_count(row.cls, row.order)
        oracle = brute_force_count(row.curve, row.aut, ext_degree or row.ext_degree)
        out.append(
            {
                "char": "p>3" if row.cls.char == 0 else str(row.cls.char),
                "j": row.cls.j,
                "group": aut_group(row.cls)[1],
                "order": row.order,
                "expected": row.expected,
                "norm_engine": norm_val,
                "point_oracle": oracle,
                "match": norm_val == row.expected == oracle,
            }
        )
    return out
