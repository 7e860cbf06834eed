"""Batch driver: every verification suite as a subcommand, deterministic
reports in markdown, CSV or JSON.

Exit status is 0 when every assertion in the selected suite passes, 1 on
an assertion failure (a partial report is still written), 2 on usage
errors.  Report bodies contain no timestamps; when writing to a file, a
sidecar <out>.meta.json records the invocation and time.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass

from . import configs, delpezzo, ecaut, fibers, lattice, tables
from .report import Report

SUITES = (
    "lattice-selfcheck",
    "fibers-euler",
    "fibers-2conn",
    "lefschetz",
    "configs-enumerate",
    "configs-shared8",
    "ecaut-tables",
    "delpezzo-verify",
    "tables-consistency",
    "all",
)


@dataclass
class RunConfig:
    suite: str = "all"
    fmt: str = "markdown"
    out: str | None = None
    bound: int = 6
    cap: int = 100
    ext_degree: int = 0  # 0: per-row sufficient degrees
    char_mode: str = configs.CHAR2_SUPERSINGULAR
    order: int = 0  # 0: the tame orders 2, 3, 5, 7

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.fmt not in ("markdown", "csv", "json"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.bound < 1 or self.cap < 1 or self.ext_degree < 0:
            raise ValueError("bounds must be positive")
        if self.char_mode not in configs.MODES:
            raise ValueError(f"unknown char mode {self.char_mode!r}")


def _random_vector(rng):
    return tuple(rng.randint(-5, 5) for _ in range(10))


def _random_root(rng):
    # random small root: reflect a basis root by a few random basis roots
    base = [lattice.BASIS[i] for i in range(2, 10)]
    r = base[rng.randrange(8)]
    for _ in range(rng.randrange(4)):
        r = lattice.reflect(base[rng.randrange(8)], r)
    return r


def suite_lattice_selfcheck(report, cfg):
    s = report.new_suite("lattice-selfcheck")
    det = lattice.gram_determinant()
    s.add("Gram determinant", det in (1, -1), f"det = {det}")
    sig = lattice.gram_signature()
    s.add("signature by congruence reduction", sig == (1, 9, 0), f"inertia = {sig}")
    rng = random.Random(20260809)
    ok_inv = ok_iso = True
    for _ in range(1000):
        r = _random_root(rng)
        x, y = _random_vector(rng), _random_vector(rng)
        if lattice.reflect(r, lattice.reflect(r, x)) != x:
            ok_inv = False
        if lattice.inner(lattice.reflect(r, x), lattice.reflect(r, y)) != lattice.inner(x, y):
            ok_iso = False
    s.add("reflections are involutions (1000 randomized)", ok_inv)
    s.add("reflections are isometries (1000 randomized)", ok_iso)
    found = lattice.search_sequences(10, cfg.bound, cap=1)
    ok = bool(found) and lattice.validate_sequence(found[0].vectors)
    s.add(f"isotropic 10-sequence within bound {cfg.bound}", ok,
          "; ".join(str(v) for v in found[0].vectors) if found else "none found")


def suite_fibers_euler(report, cfg):
    s = report.new_suite("fibers-euler")
    oracle = {f"I{n}": n for n in range(1, 10)}
    oracle.update({f"I{n}*": n + 6 for n in range(0, 10)})
    oracle.update({"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10})
    for tag in fibers.standard_tags(9):
        ent = fibers.catalog(tag)
        s.add(
            f"e({tag}) [{fibers.dynkin_label(tag)}]",
            ent.euler_tame == oracle[tag],
            f"derived {ent.euler_tame}, table {oracle[tag]}, m = {ent.m}, {ent.kind}",
        )


def suite_fibers_2conn(report, cfg):
    s = report.new_suite("fibers-2conn")
    for tag in fibers.standard_tags(9):
        ent = fibers.catalog(tag)
        if not ent.model.reducible():
            continue
        val = fibers.two_connected_min(ent.model)
        s.add(f"2-connectedness of {tag}", val >= 2, f"min D1.D2 = {val}")


def suite_lefschetz(report, cfg):
    s = report.new_suite("lefschetz")
    orders = [cfg.order] if cfg.order else [2, 3, 5, 7]
    for order in orders:
        for tag in fibers.standard_tags(9):
            ent = fibers.catalog(tag)
            res = fibers.lefschetz_check(tag, order)
            if ent.model.reducible():
                s.add(
                    f"{tag} order {order}: fixed-locus values {res['values']}",
                    res["ok"],
                    f"e(F) = {res['euler']}, {res['actions']} admissible actions",
                )
            else:
                s.add(
                    f"{tag} order {order}: fixed-locus values {res['values']}",
                    None,
                    f"irreducible singular fiber, e(F) = {res['euler']}",
                )


def suite_configs_enumerate(report, cfg):
    s = report.new_suite("configs-enumerate")
    pairs = configs.enumerate_pairs()
    s.add("numerically consistent additive pairs", len(pairs) == 7, f"{len(pairs)} pairs")
    res = configs.realizable_filter(pairs)
    s.add("realizable pairs", len(res["realizable"]) == 5,
          "; ".join(c.label() for c in res["realizable"]))
    s.add("rejected pairs", len(res["rejected"]) == 2,
          "; ".join(f"{c.label()} ({why})" for c, why in res["rejected"]))
    realizable = {c.sorted_tags() for c in res["realizable"]}
    for c in pairs:
        msum = sum(fibers.catalog(t).m for t in c.tags())
        flag = "realizable" if c.sorted_tags() in realizable else "numerically consistent only"
        s.add(f"pair {c.label()}", c.euler_total() == 12 and msum == 10,
              f"m-sum {msum}, e-sum {c.euler_total()}, {flag}")
    odd3 = configs.odd_order_smooth_case(3)
    s.add("order-3 smooth-member configurations", len(odd3) == 3,
          "; ".join(c.label() for c in odd3))
    s.add("wild singletons: alternative reading", None,
          "the wild term 3 may instead be carried by three moved nodal fibers; both satisfy the Euler budget")
    s.add("order-5 smooth-member configurations", configs.odd_order_smooth_case(5) == [],
          "no odd order > 3 in the supersingular automorphism group")


def suite_configs_shared8(report, cfg):
    s = report.new_suite("configs-shared8")
    expected = {("I4*", "I4*"): False, ("I4*", "II*"): True, ("II*", "II*"): True}
    for (t1, t2), want in expected.items():
        res = configs.shared_eight_search(t1, t2)
        hits = sum(len(br["hits"]) for br in res["branches"])
        detail = f"{hits} product-4 overlays"
        if res["witness"]:
            w = res["witness"]
            detail += (
                f"; witness: connectors {w['connector1']} (mult {w['connector1_mult']})"
                f" / {w['connector2']} (mult {w['connector2_mult']}), C9.C10 = {w['u']},"
                f" closure disc {w['closure_disc']}"
            )
        else:
            reasons = sorted({h["rejected"] for br in res["branches"] for h in br["hits"]})
            detail += f"; all rejected: {reasons}"
        s.add(f"{t1} + {t2} overlay", res["satisfiable"] == want, detail)
    s.add("normalization", None, configs.shared_eight_search("I4*", "I4*")["normalization"])


def suite_ecaut_tables(report, cfg):
    s = report.new_suite("ecaut-tables")
    rows = ecaut.classification_report(cfg.ext_degree or None)
    for r in rows:
        s.add(
            f"char {r['char']}, j {r['j']}, {r['group']}, order {r['order']}",
            r["match"],
            f"expected {r['expected']}, norm engine {r['norm_engine']}, point oracle {r['point_oracle']}",
        )


def suite_delpezzo_verify(report, cfg):
    s = report.new_suite("delpezzo-verify")
    families = [
        ("D1", delpezzo.aut_d1(), "torus (lam, mu)"),
        ("D2", delpezzo.aut_d2(), "additive (alpha, beta)"),
        ("D3", delpezzo.aut_d3_additive(), "additive (alpha, beta)"),
        ("D3", delpezzo.aut_d3_torus(), "torus (lam)"),
    ]
    for kind, m, label in families:
        ok, cert = delpezzo.verify_preserves(m, kind)
        detail = ""
        if cert:
            detail = "certificate rows " + "; ".join(f"({c1}, {c2})" for c1, c2 in (tuple(map(str, row)) for row in cert))
        s.add(f"{kind} {label} preserves the quadric pair", ok, detail)
    ok, _ = delpezzo.verify_preserves(delpezzo.aut_d2(), "D3")
    s.add("negative control: D2 family on D3 fails", not ok)
    for kind, m, label in families:
        for i, pencil in enumerate(delpezzo.pencils(kind), start=1):
            act = delpezzo.pencil_action(m, pencil)
            if act == delpezzo.NOT_PRESERVED:
                s.add(f"{kind} {label} on pencil {i}", False, "not preserved")
            else:
                mat = [[str(e) for e in row] for row in act]
                s.add(f"{kind} {label} on pencil {i}", True, f"(a : b) -> ({mat[0][0]}a + {mat[0][1]}b : {mat[1][0]}a + {mat[1][1]}b)")
    tor = delpezzo.pencil_action(delpezzo.aut_d3_torus(), delpezzo.pencils("D3")[0])
    nontrivial = not delpezzo.action_equal(tor, delpezzo.IDENTITY_ACTION)
    s.add("D3 torus acts nontrivially on the pencil base for lam != 1", nontrivial,
          "action is (a : b) -> (lam^2 a : b), trivial exactly at lam = 1")
    comp = delpezzo.compose(delpezzo.aut_d1(delpezzo.LAM, delpezzo.MU), delpezzo.aut_d1(delpezzo.LAM2, delpezzo.MU2))
    rec = delpezzo.recover_params(comp, "D1")
    s.add("D1 torus multiplicativity", rec is not None and str(rec["lam"]) == "lam*lam2" and str(rec["mu"]) == "mu*mu2",
          f"recovered ({rec['lam']}, {rec['mu']})" if rec else "no family match")
    sq = delpezzo.compose(delpezzo.aut_d2(), delpezzo.aut_d2())
    s.add("D2 additive family is 2-torsion", delpezzo.proj_equal(sq, delpezzo.identity_map()))


def suite_tables_consistency(report, cfg):
    s = report.new_suite("tables-consistency")
    for label, ok, detail in tables.consistency_check():
        s.add(label, ok, detail)
    for name, flag in tables.figures_unavailable():
        s.add(name, None, flag)


_SUITE_FUNCS = {
    "lattice-selfcheck": suite_lattice_selfcheck,
    "fibers-euler": suite_fibers_euler,
    "fibers-2conn": suite_fibers_2conn,
    "lefschetz": suite_lefschetz,
    "configs-enumerate": suite_configs_enumerate,
    "configs-shared8": suite_configs_shared8,
    "ecaut-tables": suite_ecaut_tables,
    "delpezzo-verify": suite_delpezzo_verify,
    "tables-consistency": suite_tables_consistency,
}


def run(cfg: RunConfig):
    """Execute the configured suite(s); returns (exit_status, report)."""
    report = Report()
    names = list(_SUITE_FUNCS) if cfg.suite == "all" else [cfg.suite]
    for name in names:
        _SUITE_FUNCS[name](report, cfg)
    body = report.render(cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(body)
        meta = {"argv": {"suite": cfg.suite, "format": cfg.fmt, "bound": cfg.bound, "cap": cfg.cap,
                         "ext_degree": cfg.ext_degree, "char_mode": cfg.char_mode, "order": cfg.order},
                "generated_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())}
        with open(cfg.out + ".meta.json", "w", encoding="utf-8") as fh:
            json.dump(meta, fh, indent=2)
            fh.write("\n")
    else:
        sys.stdout.write(body)
    return (0 if report.passed() else 1), report


def main(argv=None):
    parser = argparse.ArgumentParser(prog="enrq", description="verification suites for the Enriques char-2 toolkit")
    parser.add_argument("--suite", choices=SUITES, default="all")
    parser.add_argument("--format", dest="fmt", choices=("markdown", "csv", "json"), default="markdown")
    parser.add_argument("--out", default=None, help="write the report body to this path")
    parser.add_argument("--bound", type=int, default=6, help="coordinate bound for the lattice search")
    parser.add_argument("--cap", type=int, default=100, help="result cap for the lattice search")
    parser.add_argument("--ext-degree", type=int, default=0, help="override extension degree for point counting (0: per-row)")
    parser.add_argument("--char-mode", choices=configs.MODES, default=configs.CHAR2_SUPERSINGULAR)
    parser.add_argument("--order", type=int, default=0, help="restrict the lefschetz suite to one order (0: 2,3,5,7)")
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.suite, args.fmt, args.out, args.bound, args.cap,
                        args.ext_degree, args.char_mode, args.order)
    except ValueError as exc:
        parser.error(str(exc))
    status, _ = run(cfg)
    return status


if __name__ == "__main__":
    sys.exit(main())
