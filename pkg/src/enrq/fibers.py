"""Genus-one fiber types: incidence models, Euler numbers, 2-connectedness,
and tame automorphism actions with their fixed-locus Euler characteristics.

Fiber types are named by Kodaira symbols ("I1", "I5", "II", "III", "IV",
"I0*", "IV*", "III*", "II*"); `dynkin_label` translates to the affine
Dynkin names (A~0*, A~4, D~4, E~8, ...).  A fiber is modeled by its
rational components with multiplicities plus its singular points, each
point carrying the incident branches per component and a local
intersection multiplicity (2 for the tangency of type III).

The Euler characteristic of such a configuration is

    e = 2 * (#components) - sum over points p of (branches(p) - 1),

since every component normalizes to P1 (e = 2) and gluing b branches at
a point drops the count by b - 1.  This reproduces the classical values
e(I_n) = n, e(II) = 2, ..., e(II*) = 10 from the incidence data alone.

A tame automorphism of finite order that fixes every component acts on
each component either as the identity or with exactly two fixed points
("slots").  Enumerating the admissible combinations mechanizes the
fixed-point bookkeeping for fibers: e(F^g) always equals e(F) for
reducible fibers, except for the two-component cycle I2 where swapping
the two nodes (possible only for even order) gives e(F^g) = 4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"

_IN_RE = re.compile(r"^I(\d+)$")
_INSTAR_RE = re.compile(r"^I(\d+)\*$")


@dataclass(frozen=True)
class Point:
    id: str
    branches: tuple  # ((component_id, count), ...)
    local_mult: int = 1

    def total_branches(self):
        return sum(c for _, c in self.branches)

    def signature(self):
        return (tuple(sorted(self.branches)), self.local_mult)


@dataclass(frozen=True)
class FiberModel:
    """Components with multiplicities plus singular-point incidences."""

    components: tuple  # ((id, multiplicity), ...)
    points: tuple  # (Point, ...)

    def __post_init__(self):
        ids = [c for c, _ in self.components]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate component id")
        if any(m < 1 for _, m in self.components):
            raise ValueError("multiplicities must be positive")
        idset = set(ids)
        for p in self.points:
            for cid, cnt in p.branches:
                if cid not in idset or cnt < 1:
                    raise ValueError(f"bad branch data at point {p.id}")
        if self.reducible():
            mult = dict(self.components)
            pair = self.pairwise_intersections()
            for ci, mi in self.components:
                f_dot = -2 * mi + sum(
                    mj * pair.get(frozenset((ci, cj)), 0) for cj, mj in self.components if cj != ci
                )
                if f_dot != 0:
                    raise ValueError(f"fiber condition F.C = 0 fails on component {ci}")

    def reducible(self):
        return len(self.components) > 1

    def multiplicity(self, cid):
        return dict(self.components)[cid]

    def pairwise_intersections(self):
        """C_i.C_j for i != j, from shared points: local_mult * b_i * b_j."""
        pair = {}
        for p in self.points:
            for (c1, b1), (c2, b2) in permutations(p.branches, 2):
                if c1 < c2:
                    key = frozenset((c1, c2))
                    pair[key] = pair.get(key, 0) + p.local_mult * b1 * b2
        return pair

    def component_gram(self):
        """Component intersection matrix with C_i^2 = -2 on the diagonal."""
        ids = [c for c, _ in self.components]
        pair = self.pairwise_intersections()
        n = len(ids)
        g = [[-2 if i == j else pair.get(frozenset((ids[i], ids[j])), 0) for j in range(n)] for i in range(n)]
        return g

    def points_on(self, cid):
        return [p for p in self.points if any(c == cid for c, _ in p.branches)]

    def branch_count(self, point, cid):
        return sum(cnt for c, cnt in point.branches if c == cid)

    def to_json(self):
        return {
            "components": [{"id": c, "mult": m} for c, m in self.components],
            "points": [
                {
                    "id": p.id,
                    "branches": [{"component": c, "count": k} for c, k in p.branches],
                    "local_mult": p.local_mult,
                }
                for p in self.points
            ],
        }

    @classmethod
    def from_json(cls, data):
        comps = tuple((d["id"], int(d["mult"])) for d in data["components"])
        pts = tuple(
            Point(
                d["id"],
                tuple((b["component"], int(b["count"])) for b in d["branches"]),
                int(d.get("local_mult", 1)),
            )
            for d in data["points"]
        )
        return cls(comps, pts)


def euler(model: FiberModel) -> int:
    """Euler characteristic from the incidence model (see module docstring)."""
    return 2 * len(model.components) - sum(p.total_branches() - 1 for p in model.points)


# ---------------------------------------------------------------------------
# catalog


def _chain_points(ids):
    return [Point(f"p_{a}_{b}", ((a, 1), (b, 1))) for a, b in zip(ids, ids[1:])]


def _model_In(n):
    if n == 1:
        return FiberModel((("c0", 1),), (Point("node", (("c0", 2),)),))
    comps = tuple((f"c{i}", 1) for i in range(n))
    pts = tuple(Point(f"p{i}", ((f"c{i}", 1), (f"c{(i + 1) % n}", 1))) for i in range(n))
    return FiberModel(comps, pts)


def _model_II():
    return FiberModel((("c0", 1),), (Point("cusp", (("c0", 1),)),))


def _model_III():
    return FiberModel((("c0", 1), ("c1", 1)), (Point("tac", (("c0", 1), ("c1", 1)), local_mult=2),))


def _model_IV():
    comps = (("c0", 1), ("c1", 1), ("c2", 1))
    return FiberModel(comps, (Point("triple", (("c0", 1), ("c1", 1), ("c2", 1))),))


def _model_Instar(n):
    chain = [f"z{i}" for i in range(n + 1)]
    comps = [(c, 2) for c in chain] + [(f"t{i}", 1) for i in range(4)]
    pts = _chain_points(chain)
    pts += [Point(f"q{i}", ((f"t{i}", 1), (chain[0], 1))) for i in (0, 1)]
    pts += [Point(f"q{i}", ((f"t{i}", 1), (chain[-1], 1))) for i in (2, 3)]
    return FiberModel(tuple(comps), tuple(pts))


def _model_IVstar():
    comps = [("z", 3)]
    pts = []
    for i in range(3):
        comps += [(f"m{i}", 2), (f"o{i}", 1)]
        pts += [Point(f"zm{i}", (("z", 1), (f"m{i}", 1))), Point(f"mo{i}", ((f"m{i}", 1), (f"o{i}", 1)))]
    return FiberModel(tuple(comps), tuple(pts))


def _model_IIIstar():
    # chain o0(1)-m0(2)-n0(3)-c(4)-n1(3)-m1(2)-o1(1), branch b(2) at c
    comps = (("o0", 1), ("m0", 2), ("n0", 3), ("c", 4), ("n1", 3), ("m1", 2), ("o1", 1), ("b", 2))
    chain = ["o0", "m0", "n0", "c", "n1", "m1", "o1"]
    pts = _chain_points(chain) + [Point("cb", (("c", 1), ("b", 1)))]
    return FiberModel(comps, tuple(pts))


def _model_IIstar():
    # chain a0(1)-a1(2)-a2(3)-a3(4)-a4(5)-c(6)-d(4)-e(2), branch b(3) at c
    comps = (("a0", 1), ("a1", 2), ("a2", 3), ("a3", 4), ("a4", 5), ("c", 6), ("d", 4), ("e", 2), ("b", 3))
    chain = ["a0", "a1", "a2", "a3", "a4", "c", "d", "e"]
    pts = _chain_points(chain) + [Point("cb", (("c", 1), ("b", 1)))]
    return FiberModel(comps, tuple(pts))


@dataclass(frozen=True)
class CatalogEntry:
    tag: str
    model: FiberModel
    m: int  # number of components
    euler_tame: int
    kind: str  # multiplicative | additive


def parse_tag(tag: str):
    """Split a Kodaira symbol into (family, n); n is None for fixed types."""
    m = _IN_RE.match(tag)
    if m:
        return ("In", int(m.group(1)))
    m = _INSTAR_RE.match(tag)
    if m:
        return ("In*", int(m.group(1)))
    if tag in ("II", "III", "IV", "IV*", "III*", "II*", "SMOOTH"):
        return (tag, None)
    raise ValueError(f"unknown fiber tag {tag!r}")


def dynkin_label(tag: str) -> str:
    """Affine Dynkin name of a Kodaira fiber type (A~0* for I1, etc.)."""
    family, n = parse_tag(tag)
    if family == "In":
        return "A~0*" if n == 1 else f"A~{n - 1}"
    if family == "In*":
        return f"D~{n + 4}"
    return {"II": "A~0**", "III": "A~1*", "IV": "A~2*", "IV*": "E~6", "III*": "E~7", "II*": "E~8", "SMOOTH": "smooth"}[family]


def from_dynkin(label: str) -> str:
    """Kodaira symbol for an affine Dynkin name such as 'D~8' or 'A~2*'."""
    fixed = {"A~0*": "I1", "A~0**": "II", "A~1*": "III", "A~2*": "IV", "E~6": "IV*", "E~7": "III*", "E~8": "II*"}
    if label in fixed:
        return fixed[label]
    m = re.match(r"^A~(\d+)$", label)
    if m:
        return f"I{int(m.group(1)) + 1}"
    m = re.match(r"^D~(\d+)$", label)
    if m:
        n = int(m.group(1)) - 4
        if n < 0:
            raise ValueError(f"no fiber type {label}")
        return f"I{n}*"
    raise ValueError(f"unknown Dynkin label {label!r}")


def catalog(tag: str) -> CatalogEntry:
    """Canonical incidence model and invariants for a singular fiber type."""
    family, n = parse_tag(tag)
    if family == "SMOOTH":
        raise ValueError("smooth fibers have no incidence model")
    if family == "In":
        if n < 1:
            raise ValueError("I_n needs n >= 1")
        model, kind = _model_In(n), MULTIPLICATIVE
    elif family == "In*":
        model, kind = _model_Instar(n), ADDITIVE
    else:
        model = {"II": _model_II, "III": _model_III, "IV": _model_IV, "IV*": _model_IVstar, "III*": _model_IIIstar, "II*": _model_IIstar}[family]()
        kind = ADDITIVE
    return CatalogEntry(tag, model, len(model.components), euler(model), kind)


def is_additive(tag: str) -> bool:
    return catalog(tag).kind == ADDITIVE


def standard_tags(max_n: int = 9):
    """All singular fiber tags with I_n / I_n* parameters up to max_n."""
    tags = [f"I{n}" for n in range(1, max_n + 1)]
    tags += ["II", "III", "IV"]
    tags += [f"I{n}*" for n in range(0, max_n + 1)]
    tags += ["IV*", "III*", "II*"]
    return tags


# ---------------------------------------------------------------------------
# two-connectedness


def two_connected_min(model: FiberModel) -> int:
    """Minimum of D1.D2 over decompositions F = D1 + D2 into nonzero
    effective subdivisors (0 <= a_i <= mult_i componentwise).

    Exhaustive over the prod(mult_i + 1) - 2 proper decompositions; the
    value >= 2 is the numerical 2-connectedness of fibers.
    """
    if not model.reducible():
        raise ValueError("2-connectedness split needs a reducible model")
    mults = np.array([m for _, m in model.components], dtype=np.int64)
    gram = np.array(model.component_gram(), dtype=np.int64)
    grids = np.meshgrid(*[np.arange(m + 1) for m in mults], indexing="ij")
    a = np.stack([g.ravel() for g in grids], axis=1)
    proper = (a.sum(axis=1) > 0) & ((mults - a).sum(axis=1) > 0)
    a = a[proper]
    vals = np.einsum("ki,ij,kj->k", a, gram, mults[None, :] - a)
    return int(vals.min())


# ---------------------------------------------------------------------------
# tame actions fixing the components


@dataclass(frozen=True)
class ComponentAction:
    """IDENTITY, or TAME with exactly two fixed slots on the component.

    For a tame action, `fixed_branches` lists (point_id, k) for each
    fixed singular point of which k incident branch slots are fixed, and
    `free_slots` counts fixed points at smooth anonymous positions;
    slots total exactly 2.  Branches not fixed at a fixed point are
    permuted in cycles of length > 1 (which forces even order when two
    branches at a node are swapped).
    """

    kind: str  # "identity" | "tame"
    fixed_branches: tuple = ()
    free_slots: int = 0


@dataclass(frozen=True)
class FiberAction:
    """A tame automorphism germ on a fiber: no component is permuted."""

    order: int
    point_perm: tuple  # sorted ((point_id, image_id), ...)
    components: tuple  # sorted ((component_id, ComponentAction), ...)

    def perm(self):
        return dict(self.point_perm)

    def component_map(self):
        return dict(self.components)


def _cycle_lengths(perm):
    seen = set()
    for start in perm:
        if start in seen:
            continue
        ln = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            ln += 1
        yield ln


def _can_split_into_cycles(count, order):
    """Can `count` slots be permuted with no fixed slot, in cycles whose
    lengths divide `order`?"""
    if count == 0:
        return True
    divs = [d for d in range(2, order + 1) if order % d == 0]
    reachable = {0}
    for _ in range(count):
        reachable |= {r + d for r in reachable for d in divs if r + d <= count}
    return count in reachable


def _point_perms(model: FiberModel, order: int):
    """Incidence-preserving permutations of the singular points with all
    cycle lengths dividing the automorphism order."""
    groups = {}
    for p in model.points:
        groups.setdefault(p.signature(), []).append(p.id)
    group_perms = []
    for ids in groups.values():
        ids = sorted(ids)
        ok = []
        for img in permutations(ids):
            perm = dict(zip(ids, img))
            if all(ln == 1 or (ln <= order and order % ln == 0) for ln in _cycle_lengths(perm)):
                ok.append(perm)
        group_perms.append(ok)
    for combo in product(*group_perms):
        perm = {}
        for d in combo:
            perm.update(d)
        yield perm


def _component_options(model, cid, perm, order):
    pts = model.points_on(cid)
    moved = [p for p in pts if perm[p.id] != p.id]
    fixed = [p for p in pts if perm[p.id] == p.id]
    options = []
    if not moved:
        options.append(ComponentAction("identity"))
    # tame: choose how many branch slots stay fixed at each fixed point
    per_point = []
    for p in fixed:
        b = model.branch_count(p, cid)
        ks = [k for k in range(b, -1, -1) if _can_split_into_cycles(b - k, order)]
        per_point.append([(p.id, k) for k in ks])
    for combo in product(*per_point):
        k_total = sum(k for _, k in combo)
        if k_total <= 2:
            fixed_branches = tuple((pid, k) for pid, k in combo if k > 0)
            options.append(ComponentAction("tame", fixed_branches, 2 - k_total))
    return options


def admissible_actions(model: FiberModel, order: int):
    """All admissible tame actions of the given order on the fiber.

    The automorphism fixes every component; each component acts as the
    identity or with exactly two fixed slots; singular-point permutations
    preserve incidence, and any cycle (of points, or of branches at a
    fixed node) must have length dividing the order.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    actions = []
    comp_ids = [c for c, _ in model.components]
    for perm in _point_perms(model, order):
        opts = [_component_options(model, cid, perm, order) for cid in comp_ids]
        if any(not o for o in opts):
            continue
        perm_t = tuple(sorted(perm.items()))
        for combo in product(*opts):
            actions.append(FiberAction(order, perm_t, tuple(zip(comp_ids, combo))))
    return actions


def _check_admissible(model, action):
    perm = action.perm()
    if sorted(perm) != sorted(p.id for p in model.points) or sorted(perm.values()) != sorted(perm):
        raise ValueError("point permutation must permute the singular points")
    pt = {p.id: p for p in model.points}
    for pid, img in perm.items():
        if pt[pid].signature() != pt[img].signature():
            raise ValueError("point permutation must preserve incidence")
    for ln in _cycle_lengths(perm):
        if ln > 1 and action.order % ln != 0:
            raise ValueError("point cycle length must divide the order")
    comp = action.component_map()
    if sorted(comp) != sorted(c for c, _ in model.components):
        raise ValueError("component map must cover all components")
    for cid, ca in comp.items():
        pts = model.points_on(cid)
        if ca.kind == "identity":
            if any(perm[p.id] != p.id for p in pts):
                raise ValueError(f"identity component {cid} has a moved point")
        elif ca.kind == "tame":
            fb = dict(ca.fixed_branches)
            total = sum(fb.values()) + ca.free_slots
            if total != 2 or ca.free_slots < 0:
                raise ValueError("a tame component has exactly 2 fixed slots")
            for p in pts:
                k = fb.get(p.id, 0)
                if k and perm[p.id] != p.id:
                    raise ValueError("fixed slot at a moved point")
                if perm[p.id] == p.id:
                    b = model.branch_count(p, cid)
                    if k > b or not _can_split_into_cycles(b - k, action.order):
                        raise ValueError("branch slots at a fixed point cannot move this way")
            for pid in fb:
                if pid not in {p.id for p in pts}:
                    raise ValueError("fixed slot at a point off the component")
        else:
            raise ValueError(f"unknown component action {ca.kind!r}")


def fixed_euler(model: FiberModel, action: FiberAction) -> int:
    """Euler characteristic of the fixed locus of an admissible action.

    euler() of the union of identity components (with their retained
    singular points) plus the isolated fixed points: fixed singular
    points off that subcurve, and the tame components' free slots.
    """
    _check_admissible(model, action)
    perm = action.perm()
    comp = action.component_map()
    id_comps = {c for c, ca in comp.items() if ca.kind == "identity"}
    sub_e = 2 * len(id_comps)
    isolated = 0
    for p in model.points:
        b_id = sum(cnt for c, cnt in p.branches if c in id_comps)
        if b_id >= 1:
            sub_e -= b_id - 1
        elif perm[p.id] == p.id:
            isolated += 1
    isolated += sum(ca.free_slots for ca in comp.values() if ca.kind == "tame")
    return sub_e + isolated


def lefschetz_check(tag: str, order: int):
    """Fixed-locus Euler numbers over all admissible actions of one order.

    For a reducible type other than I2 the value set must be {e(F)}; for
    I2 it is {2} at odd order and {2, 4} at even order.  Irreducible
    singular types (I1, II) are reported without a constancy claim.
    """
    entry = catalog(tag)
    actions = admissible_actions(entry.model, order)
    values = sorted({fixed_euler(entry.model, a) for a in actions})
    if not entry.model.reducible():
        expected, ok = None, True
    elif tag == "I2":
        expected = [2] if order % 2 else [2, 4]
        ok = values == expected
    else:
        expected = [entry.euler_tame]
        ok = values == expected
    return {
        "tag": tag,
        "dynkin": dynkin_label(tag),
        "order": order,
        "euler": entry.euler_tame,
        "values": values,
        "expected": expected,
        "ok": ok,
        "actions": len(actions),
    }
