"""Exact symbolic verification of the quartic del Pezzo surfaces that arise
as images of bielliptic maps in characteristic 2, of their printed
automorphism families, and of the induced actions on the two pencils of
conics.

Everything is polynomial arithmetic over F2 in the projective coordinates
x0..x4, the pencil parameters a, b, and the group parameters.  Invertible
parameters (lam, mu and their second-generation copies) are handled by
adjoining formal inverses with the rewrite rule lam * ilam -> 1, applied
monomial by monomial; this keeps all computation inside a polynomial ring.

The three surfaces (D1 for classical, D2 for ordinary, D3 for
supersingular covers) are intersections of two quadrics g1, g2.  A
coordinate map preserves the surface iff the pullback of each g_i lands
back in the span of g1, g2: since a linear substitution keeps quadrics
quadric and the degree-2 part of the ideal is exactly <g1, g2>, this is
a finite linear-algebra check over the parameter ring, solved by
matching the 15 quadratic monomial coefficients (verify_preserves).

The induced action on a pencil of conics is computed by pulling back the
generic member a*A_i + b*B_i and solving for the image parameters
(a' : b'); because the basis forms A_i, B_i have constant coefficients
this is again plain F2 linear algebra with polynomial right-hand sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

NAMES = (
    "x0", "x1", "x2", "x3", "x4",
    "a", "b",
    "lam", "ilam", "mu", "imu", "alpha", "beta",
    "lam2", "ilam2", "mu2", "imu2", "alpha2", "beta2",
)
NVARS = len(NAMES)
_IDX = {n: i for i, n in enumerate(NAMES)}
X_VARS = tuple(range(5))
INV_PAIRS = ((_IDX["lam"], _IDX["ilam"]), (_IDX["mu"], _IDX["imu"]),
             (_IDX["lam2"], _IDX["ilam2"]), (_IDX["mu2"], _IDX["imu2"]))

NOT_PRESERVED = "NOT_PRESERVED"


def reduce_monomial(mon):
    """Canonical form of one monomial: cancel each formal-inverse pair."""
    mon = list(mon)
    for i, j in INV_PAIRS:
        m = min(mon[i], mon[j])
        if m:
            mon[i] -= m
            mon[j] -= m
    return tuple(mon)


@dataclass(frozen=True)
class ParamPoly:
    """Polynomial over F2 in the fixed variable list, canonically reduced.

    Monomials are exponent tuples; a monomial is present iff its
    coefficient is 1.
    """

    monomials: frozenset

    @staticmethod
    def from_monomials(mons):
        acc = set()
        for m in mons:
            m = reduce_monomial(m)
            if m in acc:
                acc.discard(m)
            else:
                acc.add(m)
        return ParamPoly(frozenset(acc))

    def __add__(self, other):
        return ParamPoly(self.monomials ^ other.monomials)

    def __mul__(self, other):
        acc = set()
        for m1 in self.monomials:
            for m2 in other.monomials:
                m = reduce_monomial(tuple(e1 + e2 for e1, e2 in zip(m1, m2)))
                if m in acc:
                    acc.discard(m)
                else:
                    acc.add(m)
        return ParamPoly(frozenset(acc))

    def __pow__(self, n):
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self):
        return not self.monomials

    def x_degrees(self):
        return {sum(m[i] for i in X_VARS) for m in self.monomials}

    def is_param_free(self):
        return all(all(m[i] == 0 for i in range(5, NVARS)) for m in self.monomials)

    def is_unit(self):
        """A unit of the ring: a single monomial in the invertible
        parameters only."""
        if len(self.monomials) != 1:
            return False
        (m,) = self.monomials
        allowed = {i for pair in INV_PAIRS for i in pair}
        return all(e == 0 or i in allowed for i, e in enumerate(m))

    def unit_inverse(self):
        if not self.is_unit():
            raise ValueError("not a unit")
        (m,) = self.monomials
        inv = list(m)
        for i, j in INV_PAIRS:
            inv[i], inv[j] = m[j], m[i]
        return ParamPoly(frozenset({tuple(inv)}))

    def coefficient_of(self, var_index):
        """Coefficient of the degree-1 part in one variable (the monomials
        with exponent exactly 1 there, with that variable removed)."""
        out = set()
        for m in self.monomials:
            if m[var_index] == 1:
                mm = list(m)
                mm[var_index] = 0
                out.add(tuple(mm))
        return ParamPoly(frozenset(out))

    def __str__(self):
        if not self.monomials:
            return "0"
        parts = []
        for m in sorted(self.monomials, key=lambda t: (sum(t), t), reverse=True):
            factors = [f"{NAMES[i]}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)


ZERO = ParamPoly(frozenset())
ONE = ParamPoly(frozenset({(0,) * NVARS}))


def var(name):
    mon = [0] * NVARS
    mon[_IDX[name]] = 1
    return ParamPoly(frozenset({tuple(mon)}))


X0, X1, X2, X3, X4 = (var(f"x{i}") for i in range(5))
A, B = var("a"), var("b")
LAM, ILAM, MU, IMU = var("lam"), var("ilam"), var("mu"), var("imu")
ALPHA, BETA = var("alpha"), var("beta")
LAM2, ILAM2, MU2, IMU2 = var("lam2"), var("ilam2"), var("mu2"), var("imu2")
ALPHA2, BETA2 = var("alpha2"), var("beta2")


def substitute(poly, mapping):
    """Substitute ParamPoly values for variables (by name)."""
    idx_map = {_IDX[k]: v for k, v in mapping.items()}
    out = ZERO
    for m in poly.monomials:
        term = ONE
        for i, e in enumerate(m):
            if not e:
                continue
            base = idx_map.get(i)
            if base is None:
                mon = [0] * NVARS
                mon[i] = e
                base_p = ParamPoly(frozenset({reduce_monomial(tuple(mon))}))
                term = term * base_p
            else:
                term = term * base**e
        out = out + term
    return out


# ---------------------------------------------------------------------------
# surfaces, maps, pencils


@dataclass(frozen=True)
class QuadricPair:
    g1: ParamPoly
    g2: ParamPoly

    def __post_init__(self):
        for g in (self.g1, self.g2):
            if g.x_degrees() != {2} or not g.is_param_free():
                raise ValueError("defining quadrics must be parameter-free of degree 2")
        if self.g1 == self.g2:
            raise ValueError("quadrics must be linearly independent")


@dataclass(frozen=True)
class ProjMap:
    coords: tuple  # five ParamPoly, linear in x

    def __post_init__(self):
        if len(self.coords) != 5:
            raise ValueError("five coordinates required")
        for c in self.coords:
            if c.x_degrees() - {1}:
                raise ValueError("coordinates must be homogeneous linear in x")

    def matrix(self):
        return [[self.coords[i].coefficient_of(j) for j in X_VARS] for i in range(5)]

    def det(self):
        m = self.matrix()
        total = ZERO
        for perm in permutations(range(5)):  # char 2: no signs
            term = ONE
            for i in range(5):
                term = term * m[i][perm[i]]
                if term.is_zero():
                    break
            total = total + term
        return total

    def is_invertible(self):
        return self.det().is_unit()


def identity_map():
    return ProjMap((X0, X1, X2, X3, X4))


def proj_equal(m1: ProjMap, m2: ProjMap) -> bool:
    """Equality of projective maps: coordinates proportional by a common
    factor (cross-multiplication test)."""
    c1, c2 = m1.coords, m2.coords
    for i in range(5):
        for j in range(i + 1, 5):
            if c1[i] * c2[j] != c1[j] * c2[i]:
                return False
    # rule out the degenerate all-zero pairing
    return any(not (a.is_zero() and b.is_zero()) for a, b in zip(c1, c2))


@dataclass(frozen=True)
class Pencil:
    """A pencil of conics cut by a * A_i + b * B_i = 0 (i = 1, 2), with
    constant-coefficient linear forms A_i, B_i."""

    forms: tuple  # ((A1, B1), (A2, B2))

    def __post_init__(self):
        for pair in self.forms:
            for f in pair:
                if f.x_degrees() - {1} or not f.is_param_free():
                    raise ValueError("pencil basis forms must be linear and parameter-free")

    def member(self, i):
        a_part, b_part = self.forms[i]
        return A * a_part + B * b_part


def surface(kind: str) -> QuadricPair:
    """Defining quadric pair: D1 (classical cover image), D2 (ordinary,
    e = 1), D3 (supersingular, e = 0)."""
    g1 = X0 * X0 + X1 * X2
    if kind == "D1":
        return QuadricPair(g1, X0 * X0 + X3 * X4)
    if kind == "D2":
        return QuadricPair(g1, X1 * X3 + X4 * (X0 + X2 + X4))
    if kind == "D3":
        return QuadricPair(g1, X1 * X3 + X4 * (X2 + X4))
    raise ValueError(f"unknown surface {kind!r}")


def pencils(kind: str):
    """The two pencils of conics on the surface."""
    if kind == "D1":
        return (
            Pencil(((X2, X3), (X4, X1))),
            Pencil(((X2, X4), (X3, X1))),
        )
    if kind in ("D2", "D3"):
        e0 = X0 if kind == "D2" else ZERO
        core = e0 + X2 + X4
        return (
            Pencil(((X3, core), (X4, X1))),
            Pencil(((core, X1), (X3, X4))),
        )
    raise ValueError(f"unknown surface {kind!r}")


def aut_d1(lam=LAM, mu=MU):
    """Torus action on D1 (lam and mu must be units)."""
    return ProjMap((X0, lam * X1, lam.unit_inverse() * X2, mu * X3, mu.unit_inverse() * X4))


def aut_d2(alpha=ALPHA, beta=BETA):
    """Additive two-parameter family on D2."""
    a, b = alpha, beta
    return ProjMap(
        (
            X0 + a * X1,
            X1,
            a * a * X1 + X2,
            b * X0 + (a * b + a * a * b + b * b) * X1 + b * X2 + X3 + (a + a * a) * X4,
            b * X1 + X4,
        )
    )


def aut_d3_additive(alpha=ALPHA, beta=BETA):
    """Additive two-parameter family on D3."""
    a, b = alpha, beta
    return ProjMap(
        (
            X0 + a * X1,
            X1,
            a * a * X1 + X2,
            (a * a * b + b * b) * X1 + b * X2 + X3 + a * a * X4,
            b * X1 + X4,
        )
    )


def aut_d3_torus(lam=LAM):
    """One-parameter torus on D3 (lam must be a unit)."""
    il = lam.unit_inverse()
    return ProjMap((X0, il * X1, lam * X2, lam**3 * X3, lam * X4))


def aut(kind: str, **params):
    """Printed generator families by surface kind.

    D1 takes lam, mu; D2 takes alpha, beta; D3 takes alpha, beta or lam.
    Omitted parameters default to the symbolic generators.
    """
    if kind == "D1":
        allowed = {"lam", "mu"}
    elif kind == "D2":
        allowed = {"alpha", "beta"}
    elif kind == "D3":
        allowed = {"alpha", "beta", "lam"}
    else:
        raise ValueError(f"unknown surface {kind!r}")
    if set(params) - allowed:
        raise ValueError(f"surface {kind} takes parameters {sorted(allowed)}")
    if kind == "D1":
        return aut_d1(params.get("lam", LAM), params.get("mu", MU))
    if kind == "D2":
        return aut_d2(params.get("alpha", ALPHA), params.get("beta", BETA))
    if "lam" in params:
        if "alpha" in params or "beta" in params:
            raise ValueError("D3 takes either (alpha, beta) or lam, not both")
        return aut_d3_torus(params["lam"])
    if params:
        return aut_d3_additive(params.get("alpha", ALPHA), params.get("beta", BETA))
    raise ValueError("D3 needs lam (torus) or alpha/beta (additive)")


# ---------------------------------------------------------------------------
# verification


def pullback(poly, m: ProjMap):
    return substitute(poly, {f"x{i}": m.coords[i] for i in range(5)})


def _x_coefficients(poly):
    """Split a polynomial by its x-monomial part: {x-exponent-tuple:
    parameter-polynomial coefficient}."""
    out = {}
    for mon in poly.monomials:
        xpart = tuple(mon[i] for i in X_VARS)
        rest = list(mon)
        for i in X_VARS:
            rest[i] = 0
        key = xpart
        cur = out.get(key, ZERO)
        out[key] = cur + ParamPoly(frozenset({tuple(rest)}))
    return {k: v for k, v in out.items() if not v.is_zero()}


def verify_preserves(m: ProjMap, kind: str):
    """Check that the map carries the surface into itself.

    The pullback of each defining quadric is a quadric again, so it must
    be c1 * g1 + c2 * g2 for parameter-ring constants c_ij; these are
    solved by coefficient matching over the 15 quadratic monomials.
    Returns (True, ((c11, c12), (c21, c22))) or (False, None).
    """
    if not m.is_invertible():
        raise ValueError("map is not invertible")
    quad = surface(kind)
    basis = [_x_coefficients(quad.g1), _x_coefficients(quad.g2)]
    support = sorted(set(basis[0]) | set(basis[1]))
    pivot1 = next(k for k in support if k in basis[0] and k not in basis[1])
    pivot2 = next(k for k in support if k in basis[1] and k not in basis[0])
    certificate = []
    for g in (quad.g1, quad.g2):
        pulled = _x_coefficients(pullback(g, m))
        c1 = pulled.get(pivot1, ZERO)
        c2 = pulled.get(pivot2, ZERO)
        for key in set(support) | set(pulled):
            want = ZERO
            if key in basis[0]:
                want = want + c1
            if key in basis[1]:
                want = want + c2
            if pulled.get(key, ZERO) != want:
                return (False, None)
        certificate.append((c1, c2))
    return (True, tuple(certificate))


def pencil_action(m: ProjMap, pencil: Pencil):
    """Induced projective action on the pencil base.

    Pulls back the generic member a*A_i + b*B_i and solves for (a':b')
    such that the pulled-back pair spans the member at (a':b'); returns
    the 2x2 parameter matrix sending (a, b) to (a', b'), normalized, or
    NOT_PRESERVED when no consistent solution exists.
    """
    (a1, b1), (a2, b2) = pencil.forms
    cols = [_form_vector(f) for f in (a1, b1, a2, b2)]
    rows = []
    for i in range(2):
        pulled = pullback(pencil.member(i), m)
        vec = _form_vector(pulled)
        sol = _solve_f2(cols, vec)
        if sol is None:
            return NOT_PRESERVED
        w1, w2, w3, w4 = sol
        # [w1 w2; w3 w4] = (s, t)^T (a', b') must have rank one
        if w1 * w4 + w2 * w3 != ZERO:
            return NOT_PRESERVED
        for pair in ((w1, w2), (w3, w4)):
            if not (pair[0].is_zero() and pair[1].is_zero()):
                rows.append(pair)
    if not rows:
        return NOT_PRESERVED
    for (p1, q1), (p2, q2) in zip(rows, rows[1:]):
        if p1 * q2 != p2 * q1:
            return NOT_PRESERVED
    aprime, bprime = rows[0]
    mat = (
        (aprime.coefficient_of(_IDX["a"]), aprime.coefficient_of(_IDX["b"])),
        (bprime.coefficient_of(_IDX["a"]), bprime.coefficient_of(_IDX["b"])),
    )
    # the solution must be linear in (a, b): anything else is inconsistent
    rebuilt_a = A * mat[0][0] + B * mat[0][1]
    rebuilt_b = A * mat[1][0] + B * mat[1][1]
    if rebuilt_a != aprime or rebuilt_b != bprime:
        return NOT_PRESERVED
    return normalize_action(mat)


def _form_vector(poly):
    """A linear form as its five x-coordinates (parameter coefficients)."""
    coeffs = _x_coefficients(poly)
    vec = []
    for i in range(5):
        key = tuple(1 if j == i else 0 for j in range(5))
        vec.append(coeffs.get(key, ZERO))
    return vec


def _solve_f2(cols, target):
    """Solve sum_j w_j * cols[j] = target where the columns are
    constant (0/1) vectors and the target has ParamPoly entries.
    Returns the unique solution or None (inconsistent or underdetermined
    columns are rejected)."""
    nrows = len(target)
    ncols = len(cols)
    mat = [[ONE if not cols[j][i].is_zero() else ZERO for j in range(ncols)] for i in range(nrows)]
    for j in range(ncols):
        for i in range(nrows):
            if cols[j][i] not in (ZERO, ONE):
                raise ValueError("pencil basis forms must have constant coefficients")
    rhs = list(target)
    piv_rows = []
    used = [False] * nrows
    for j in range(ncols):
        piv = next((i for i in range(nrows) if not used[i] and mat[i][j] == ONE), None)
        if piv is None:
            return None  # underdetermined column
        used[piv] = True
        piv_rows.append((piv, j))
        for i in range(nrows):
            if i != piv and mat[i][j] == ONE:
                for jj in range(ncols):
                    mat[i][jj] = mat[i][jj] + mat[piv][jj]
                rhs[i] = rhs[i] + rhs[piv]
    for i in range(nrows):
        if not used[i] and not rhs[i].is_zero():
            return None  # inconsistent
    sol = [ZERO] * ncols
    for piv, j in piv_rows:
        sol[j] = rhs[piv]
    return sol


def normalize_action(mat):
    """Scale a projective 2x2 parameter matrix by a unit so that each
    invertible-parameter pair occurs with nonnegative minimal degree."""
    monos = [m for row in mat for entry in row for m in entry.monomials]
    if not monos:
        return mat
    scale = [0] * NVARS
    for i, j in INV_PAIRS:
        d = min(m[i] - m[j] for m in monos)
        if d < 0:
            scale[i] = -d
        elif d > 0:
            scale[j] = d
    if not any(scale):
        return mat
    unit = ParamPoly(frozenset({tuple(scale)}))
    return tuple(tuple(entry * unit for entry in row) for row in mat)


def action_equal(m1, m2) -> bool:
    """Projective equality of 2x2 actions."""
    if m1 == NOT_PRESERVED or m2 == NOT_PRESERVED:
        return m1 == m2
    e1 = [m1[0][0], m1[0][1], m1[1][0], m1[1][1]]
    e2 = [m2[0][0], m2[0][1], m2[1][0], m2[1][1]]
    for i in range(4):
        for j in range(i + 1, 4):
            if e1[i] * e2[j] != e1[j] * e2[i]:
                return False
    return True


IDENTITY_ACTION = ((ONE, ZERO), (ZERO, ONE))


def compose(m1: ProjMap, m2: ProjMap) -> ProjMap:
    """The map applying m2 first, then m1 (coordinatewise substitution)."""
    coords = tuple(pullback(c, m2) for c in m1.coords)
    return ProjMap(coords)


def recover_params(m: ProjMap, kind: str):
    """Match a map against the printed family of the given kind and
    return its parameters, or None if it is not in the family."""
    if kind == "D1":
        c = m.coords
        scale = c[0].coefficient_of(0)
        if not scale.is_unit():
            return None
        inv = scale.unit_inverse()
        lam, mu = inv * c[1].coefficient_of(1), inv * c[3].coefficient_of(3)
        if not (lam.is_unit() and mu.is_unit()):
            return None
        if proj_equal(m, aut_d1(lam, mu)):
            return {"lam": lam, "mu": mu}
        return None
    if kind in ("D2", "D3-additive"):
        c = m.coords
        unit = c[1].coefficient_of(1)
        if not unit.is_unit():
            return None
        inv = unit.unit_inverse()
        alpha = inv * c[0].coefficient_of(1)
        beta = inv * c[4].coefficient_of(1)
        family = aut_d2 if kind == "D2" else aut_d3_additive
        if proj_equal(m, family(alpha, beta)):
            return {"alpha": alpha, "beta": beta}
        return None
    if kind == "D3-torus":
        c = m.coords
        scale = c[0].coefficient_of(0)
        if not scale.is_unit():
            return None
        lam = scale.unit_inverse() * c[2].coefficient_of(2)
        if not lam.is_unit():
            return None
        if proj_equal(m, aut_d3_torus(lam)):
            return {"lam": lam}
        return None
    raise ValueError(f"unknown family {kind!r}")
