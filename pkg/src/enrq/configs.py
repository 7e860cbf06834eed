"""Enumeration and filtering of singular-fiber configurations of genus-one
pencils on Enriques surfaces: the Euler budget e(S) = 12, the Shioda-Tate
room sum(m_D - 1) <= 8, extremality, the numerically-trivial bielliptic
filters, and the shared-eight-components overlay arithmetic.

Overlay search normalization.  `shared_eight_search` looks for two
additive nine-component fibers F, F' (one per pencil) sharing eight
components C1..C8, with one extra curve each (C9 in F, C10 in F').
Realizing the two affine diagrams pins every pairwise intersection
except u = C9.C10, which ranges over {0, ..., 4}.  A branch counts as
satisfiable when

  * F.F' = 4  (simple fibers are numerically twice the half-fibers,
    so F.F' = 2F1 . 2F2 = 4 with F1.F2 = 1);
  * the lattice spanned by the ten curves together with both half-fiber
    classes F/2 and F'/2 is unimodular, i.e. these classes account for
    the whole rank-10 lattice of the surface (the integral sharpening
    of the fact that the half-fibers and the eight shared curves span
    the lattice rationally); and
  * the eight shared curves form a connected configuration (they are
    the locus contracted by a single bielliptic map, and a reducible
    fiber stays connected after removing its one non-shared component
    exactly when that connector is an end component).

The last two conditions are the normalization pinned by the anchor
requirement that the D~8 + D~8 case come out unsatisfiable: the product
constraint alone admits a D~8 + D~8 overlay through two extra tail
curves meeting twice (which fails unimodular closure, discriminant -4)
and another through middle-component connectors (unimodular, but with
the shared curves falling apart into two 4-star pieces, and forcing a
primitive multiplicative cycle class, i.e. a forbidden multiplicative
half-fiber in characteristic 2).  The branch summaries report every
product-4 overlay together with which condition rejected it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import ecaut, fibers
from .lattice import exact_det

GENERIC = "generic"
CHAR2_CLASSICAL = "char2_classical"
CHAR2_ORDINARY = "char2_ordinary"
CHAR2_SUPERSINGULAR = "char2_supersingular"
MODES = (GENERIC, CHAR2_CLASSICAL, CHAR2_ORDINARY, CHAR2_SUPERSINGULAR)

# half-fibers are multiplicative (or smooth) in these modes, additive
# (or a supersingular elliptic curve) in the char-2 classical and
# supersingular ones
_DOUBLE_MULTIPLICATIVE = (GENERIC, CHAR2_ORDINARY)


@dataclass(frozen=True)
class FiberEntry:
    """One singular fiber of a pencil: type, simple/double marker
    (None when unspecified), and a wild ramification term."""

    tag: str
    double: bool | None = None
    wild: int = 0


@dataclass(frozen=True)
class Configuration:
    """Multiset of singular fibers of one genus-one pencil."""

    entries: tuple
    char_mode: str = CHAR2_SUPERSINGULAR

    def __post_init__(self):
        if self.char_mode not in MODES:
            raise ValueError(f"unknown char mode {self.char_mode!r}")
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        for e in entries:
            ent = fibers.catalog(e.tag)
            if e.wild < 0:
                raise ValueError("wild term must be >= 0")
            if e.wild > 0:
                if self.char_mode == GENERIC:
                    raise ValueError("wild ramification needs characteristic 2")
                if ent.kind != fibers.ADDITIVE:
                    raise ValueError("only additive fibers carry a wild term")
            if e.double:
                if self.char_mode in _DOUBLE_MULTIPLICATIVE and ent.kind != fibers.MULTIPLICATIVE:
                    raise ValueError("half-fibers must be multiplicative in this mode")
                if self.char_mode not in _DOUBLE_MULTIPLICATIVE and ent.kind != fibers.ADDITIVE:
                    raise ValueError("half-fibers must be additive in this mode")
        if self.shioda_tate_sum() > 8:
            raise ValueError("sum(m_D - 1) exceeds the Shioda-Tate room 8")

    def shioda_tate_sum(self):
        return sum(fibers.catalog(e.tag).m - 1 for e in self.entries)

    def euler_total(self):
        return sum(fibers.catalog(e.tag).euler_tame + e.wild for e in self.entries)

    def is_extremal(self):
        return self.shioda_tate_sum() == 8

    def tags(self):
        return tuple(e.tag for e in self.entries)

    def sorted_tags(self):
        return tuple(sorted(self.tags()))

    def label(self):
        return " + ".join(fibers.dynkin_label(e.tag) + (f" (wild {e.wild})" if e.wild else "") for e in self.entries)

    def to_json(self):
        return {
            "entries": [{"tag": e.tag, "double": e.double, "wild": e.wild} for e in self.entries],
            "char_mode": self.char_mode,
        }


# additive types that fit in the Shioda-Tate room
def _additive_tags():
    tags = ["II", "III", "IV"] + [f"I{n}*" for n in range(0, 5)] + ["IV*", "III*", "II*"]
    return tags


def enumerate_pairs():
    """All unordered pairs of additive types with m1 + m2 = 10 and tame
    Euler numbers summing to the budget e(S) = 12 (no wild term)."""
    out = []
    tags = _additive_tags()
    for t1, t2 in combinations_with_replacement(sorted(tags), 2):
        e1, e2 = fibers.catalog(t1), fibers.catalog(t2)
        if e1.m + e2.m == 10 and e1.euler_tame + e2.euler_tame == 12:
            out.append(Configuration((FiberEntry(t1), FiberEntry(t2))))
    return out


# the pairs realizable as singular fibers of an extremal rational
# genus-one fibration in characteristic 2 (classification constants;
# numerically consistent pairs outside this list are reported as such)
REALIZABLE_PAIRS = (
    ("I0*", "I0*"),
    ("I4*", "II"),
    ("IV*", "IV"),
    ("III*", "III"),
    ("II*", "II"),
)


def realizable_filter(pairs):
    """Split numerically consistent pairs into the realizable ones and the
    rejects (consistent arithmetic, no extremal rational model)."""
    allow = {tuple(sorted(p)) for p in REALIZABLE_PAIRS}
    realizable, rejected = [], []
    for cfg in pairs:
        if cfg.sorted_tags() in allow:
            realizable.append(cfg)
        else:
            rejected.append((cfg, "numerically consistent, not realizable on an extremal rational fibration"))
    return {"realizable": realizable, "rejected": rejected}


def odd_order_smooth_case(order: int):
    """Pencil configurations when an odd-order automorphism fixes a smooth
    (supersingular) member and one further fiber.

    The smooth member carries fixed_count(char 2 supersingular, order)
    fixed points, so the other fixed fiber needs fixed-locus Euler number
    12 minus that; only order 3 admits solutions, since the automorphism
    group of a supersingular curve in characteristic 2 has no elements of
    odd order > 3.
    """
    if order % 2 == 0 or order < 3:
        raise ValueError("order must be odd and >= 3")
    ss = ecaut.CurveClass(2, ecaut.SPECIAL)
    if order not in ecaut.element_orders(ss):
        return []
    target = 12 - ecaut.fixed_count(ss, order)
    configs = []
    for tag in fibers.standard_tags(9):
        ent = fibers.catalog(tag)
        if ent.euler_tame != target or ent.m - 1 > 8:
            continue
        if ent.kind == fibers.MULTIPLICATIVE:
            # no wild term on multiplicative fibers: the leftover Euler
            # budget is carried by one moved orbit of `order` fibers
            leftover = 12 - ent.euler_tame
            if leftover % order:
                continue
            each = leftover // order
            movers = [t for t in fibers.standard_tags(9) if fibers.catalog(t).euler_tame == each and fibers.catalog(t).m == 1]
            if not movers:
                continue
            entries = (FiberEntry(tag, double=False),) + tuple(FiberEntry(movers[0], double=False) for _ in range(order))
            configs.append(Configuration(entries))
        else:
            configs.append(Configuration((FiberEntry(tag, double=False, wild=12 - ent.euler_tame),)))
    return configs


def bielliptic_pair_check(tags, shared_components: int, connector_mults):
    """Necessary conditions for the bielliptic involution of a pair of
    pencils to be numerically trivial.

    `tags` lists the reducible fiber types carrying the shared
    components, `shared_components` the declared number of common
    (-2)-curves, `connector_mults` the multiplicity of the one
    non-shared component per fiber.  The connector C satisfies
    m * (C.F2) = 2 against the other half-fiber, so m must be 1 or 2;
    multiplicative fibers with more than two components are excluded.
    """
    tags = tuple(tags)
    if not tags:
        raise ValueError("need at least one fiber type")
    if isinstance(connector_mults, int):
        connector_mults = (connector_mults,) * len(tags)
    connector_mults = tuple(connector_mults)
    if len(connector_mults) != len(tags):
        raise ValueError("one connector multiplicity per fiber")
    reasons = []
    total = sum(fibers.catalog(t).m - 1 for t in tags)
    if total != 8:
        reasons.append(f"extremality deficit: sum(m-1) = {total} != 8")
    if shared_components != 8:
        reasons.append(f"extremality deficit: {shared_components} shared components != 8")
    for t, m in zip(tags, connector_mults):
        if m not in (1, 2):
            reasons.append(f"connector multiplicity {m} on {t}: m*(C.F2) = 2 forces m in {{1, 2}}")
        if fibers.catalog(t).kind == fibers.MULTIPLICATIVE and fibers.catalog(t).m > 2:
            reasons.append(f"{t}: multiplicative with more than two components")
    return (not reasons, reasons)


# ---------------------------------------------------------------------------
# shared-eight-components overlay search


def _diagram(tag):
    ent = fibers.catalog(tag)
    ids = [c for c, _ in ent.model.components]
    mult = dict(ent.model.components)
    pair = ent.model.pairwise_intersections()
    weight = {}
    for a, b in combinations_with_replacement(ids, 2):
        if a != b:
            w = pair.get(frozenset((a, b)), 0)
            if w:
                weight[(a, b)] = weight[(b, a)] = w
    return ids, mult, weight


def _weight_profile(node, nodes, weight):
    return tuple(sorted(weight.get((node, o), 0) for o in nodes if o != node))


def _isomorphisms(nodes1, weight1, nodes2, weight2):
    """All weighted-graph isomorphisms nodes2 -> nodes1 (deterministic
    backtracking in sorted node order)."""
    nodes1, nodes2 = sorted(nodes1), sorted(nodes2)
    if len(nodes1) != len(nodes2):
        return
    prof1 = {n: _weight_profile(n, nodes1, weight1) for n in nodes1}
    prof2 = {n: _weight_profile(n, nodes2, weight2) for n in nodes2}
    assign = {}
    used = set()

    def rec(i):
        if i == len(nodes2):
            yield dict(assign)
            return
        n2 = nodes2[i]
        for n1 in nodes1:
            if n1 in used or prof1[n1] != prof2[n2]:
                continue
            if any(weight2.get((n2, m2), 0) != weight1.get((n1, assign[m2]), 0) for m2 in assign):
                continue
            assign[n2] = n1
            used.add(n1)
            yield from rec(i + 1)
            del assign[n2]
            used.discard(n1)

    yield from rec(0)


def _mod2_rank(v1, v2):
    a = tuple(x % 2 for x in v1)
    b = tuple(x % 2 for x in v2)
    nz = [v for v in (a, b) if any(v)]
    if not nz:
        return 0
    if len(nz) == 2 and nz[0] != nz[1]:
        return 2
    return 1


def _connected(nodes, weight):
    if not nodes:
        return True
    seen = {nodes[0]}
    frontier = [nodes[0]]
    while frontier:
        nxt = []
        for a in frontier:
            for b in nodes:
                if b not in seen and weight.get((a, b), 0):
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return len(seen) == len(nodes)


def shared_eight_search(t1: str, t2: str):
    """Exhaustive overlay search for two nine-component additive fibers
    sharing eight components (see the module docstring for the pinned
    normalization).  Returns satisfiability plus the first witness in a
    fixed search order, and a per-branch summary."""
    for t in (t1, t2):
        ent = fibers.catalog(t)
        if ent.kind != fibers.ADDITIVE or ent.m != 9:
            raise ValueError(f"{t}: need an additive fiber with nine components")
    ids1, mult1, w1 = _diagram(t1)
    ids2, mult2, w2 = _diagram(t2)
    branches = []
    witness = None
    for c1 in ids1:
        r1 = [n for n in ids1 if n != c1]
        for c2 in ids2:
            r2 = [n for n in ids2 if n != c2]
            isos = list(_isomorphisms(r1, w1, r2, w2))
            branch = {"connector1": c1, "connector2": c2, "isomorphisms": len(isos), "hits": []}
            shared_conn = _connected(sorted(r1), w1)
            for iso in isos:
                shared = sorted(r1)
                inv = {v: k for k, v in iso.items()}  # shared node -> diagram-2 node
                n = 10
                for u in range(0, 5):
                    gram = [[0] * n for _ in range(n)]
                    for k in range(n):
                        gram[k][k] = -2
                    for a in range(8):
                        for b in range(a + 1, 8):
                            v = w1.get((shared[a], shared[b]), 0)
                            gram[a][b] = gram[b][a] = v
                    for a in range(8):
                        gram[a][8] = gram[8][a] = w1.get((shared[a], c1), 0)
                        gram[a][9] = gram[9][a] = w2.get((inv[shared[a]], c2), 0)
                    gram[8][9] = gram[9][8] = u
                    f1 = [mult1[s] for s in shared] + [mult1[c1], 0]
                    f2 = [mult2[inv[s]] for s in shared] + [0, mult2[c2]]
                    gf1 = [sum(gram[i][j] * f1[j] for j in range(n)) for i in range(n)]
                    gf2 = [sum(gram[i][j] * f2[j] for j in range(n)) for i in range(n)]
                    assert all(gf1[k] == 0 for k in range(9)), "fiber condition violated in F"
                    assert all(gf2[k] == 0 for k in range(8)) and gf2[9] == 0, "fiber condition violated in F'"
                    product = sum(gf1[k] * f2[k] for k in range(n))
                    if product != 4:
                        continue
                    # half-fiber classes F/2, F'/2 must pair integrally
                    if gf1[9] % 2 or gf2[8] % 2:
                        continue
                    det = exact_det(gram)
                    rank = _mod2_rank(f1, f2)
                    closure = det // 4**rank
                    if closure * 4**rank != det:
                        continue
                    unimodular = abs(closure) == 1
                    if not unimodular:
                        reason = f"closure discriminant {closure} != +-1"
                    elif not shared_conn:
                        reason = "shared configuration disconnected"
                    else:
                        reason = None
                    hit = {
                        "u": u,
                        "product": product,
                        "overlay_det": det,
                        "closure_disc": closure,
                        "unimodular": unimodular,
                        "shared_connected": shared_conn,
                        "rejected": reason,
                    }
                    branch["hits"].append(hit)
                    if reason is None and witness is None:
                        witness = {
                            "connector1": c1,
                            "connector1_mult": mult1[c1],
                            "connector2": c2,
                            "connector2_mult": mult2[c2],
                            "shared": shared,
                            "iso": {k: iso[k] for k in sorted(iso)},
                            "u": u,
                            "gram": gram,
                            "fiber1_mult": f1,
                            "fiber2_mult": f2,
                            "product": product,
                            "overlay_det": det,
                            "closure_disc": closure,
                        }
            if branch["isomorphisms"]:
                branches.append(branch)
    return {
        "t1": t1,
        "t2": t2,
        "normalization": "F.F' = 4, unimodular closure of <curves, F/2, F'/2>, connected shared configuration",
        "satisfiable": witness is not None,
        "witness": witness,
        "branches": branches,
    }
