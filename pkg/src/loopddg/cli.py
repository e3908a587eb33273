"""Command-line interface: ``loopddg construct | verify | switch | catalog``.

Exit codes: 0 verified, 1 refuted (input is not an LDDG), 2 invalid input,
3 verification failure of a construction (a bug if it ever happens).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import constructions as C
from .forms import KINDS, standard_polarity
from .gf import GF
from .graph import GraphFormatError, LoopedGraph, Partition, PartitionMismatch, complement
from .lddg import (
    Improper,
    LddgParams,
    NotAutomorphism,
    NotInvolution,
    NotLddg,
    NotRegular,
    UnequalClassSizes,
    certificate,
    complement_params,
    dual_seidel_switch,
    find_canonical_partition,
    switch_counts,
)
from .projgeom import Subspace

EXIT_OK, EXIT_REFUTED, EXIT_INVALID, EXIT_FAILED = 0, 1, 2, 3

CSV_HEADER = ["family", "kind", "q", "m", "dim", "v", "k", "l1", "l2", "classes", "n", "L", "Nstar", "spectrum", "verified"]


class UsageError(ValueError):
    pass


# -- parsing helpers ----------------------------------------------------------


def parse_int_list(text: str) -> list[int]:
    """``"2,3"``, ``"3..5"``, ``"2,4..5"`` -> sorted distinct integers; ``""`` -> []."""
    out: set[int] = set()
    for part in filter(None, (p.strip() for p in text.split(","))):
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.update(range(int(lo), int(hi) + 1))
        else:
            out.add(int(part))
    return sorted(out)


def parse_vector(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in re.split(r"[,\s]+", text.strip()) if x)


def parse_permutation(text: str, v: int) -> list[int]:
    """A JSON array ``[1,0,2]``, a path to a file holding one, or 0-based cycles ``(0 1)(2 3)``."""
    s = text.strip()
    if not s.startswith(("[", "(")) and Path(s).is_file():
        s = Path(s).read_text().strip()
    if s.startswith("["):
        try:
            perm = [int(x) for x in json.loads(s)]
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad permutation array: {exc}") from None
        if len(perm) != v:
            raise UsageError(f"permutation has length {len(perm)}, graph has {v} vertices")
        return perm
    if s in ("", "()", "id"):
        return list(range(v))
    if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)+", s):
        raise UsageError(f"cannot parse permutation {text!r}")
    perm = list(range(v))
    seen: set[int] = set()
    for cyc in re.findall(r"\(([^)]*)\)", s):
        pts = [int(x) for x in re.split(r"[\s,]+", cyc.strip())]
        if any(x >= v for x in pts) or seen & set(pts) or len(set(pts)) != len(pts):
            raise UsageError(f"cycle ({cyc}) repeats a point or leaves the vertex range")
        seen.update(pts)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return perm


def _kind_and_variant(kind: str, variant: Optional[str], m: int) -> tuple[str, str]:
    if "-" in kind:
        kind, variant = kind.split("-", 1)
    if kind not in KINDS:
        raise UsageError(f"unknown polarity kind {kind!r}")
    if kind == "orthogonal" and m % 2 == 0:
        return kind, variant or "plus"
    if variant not in (None, "none"):
        raise UsageError("--variant only applies to orthogonal polarities with m even")
    return kind, "none"


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _write_json(path: Path, obj: dict) -> None:
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


# -- construct ----------------------------------------------------------------


def _family1_config(a) -> C.Family1Config:
    kind, variant = _kind_and_variant(a.kind, a.variant, a.m)
    z = standard_polarity(kind, a.m, GF(a.q), variant)
    if a.pi:
        vecs = [parse_vector(r) for r in a.pi.split(";")]
        pi = Subspace.from_vectors(vecs, a.m, z.field)
    else:
        if a.pi_dim is None:
            raise UsageError("family1 needs --pi-dim or --pi")
        special = {"contain": True, "avoid": False, None: None}[a.special]
        if special is not None and not (kind == "pseudo" and a.m % 2 == 0):
            raise UsageError("--special only applies to pseudo-polarities with m even")
        pi = C.isotropic_subspace(z, a.pi_dim + 1, special)
    return C.Family1Config(z, pi)


def _family2_config(a) -> C.Family2Config:
    kind, variant = _kind_and_variant(a.kind, a.variant, a.m)
    z = standard_polarity(kind, a.m, GF(a.q), variant)
    if a.x_star is None:
        return C.default_family2_config(z)
    named = dict(C.family2_xstar_choices(z))
    if a.x_star in named:
        return C.Family2Config(z, named[a.x_star], a.x_star)
    if not re.fullmatch(r"[\d,\s]+", a.x_star):
        raise UsageError(f"--x-star must be one of {sorted(named)} or a coordinate vector")
    return C.Family2Config(z, parse_vector(a.x_star))


def _expected(a) -> tuple[LoopedGraph, Partition, LddgParams, int, dict]:
    """Build the requested graph; return it with its closed-form parameters and loop count."""
    if a.family == "family1":
        cfg = _family1_config(a)
        g, p = C.build_family1(cfg)
        exp, loops = C.expected_family1_params(cfg), C.expected_family1_loops(cfg)
        info = {"kind": cfg.zeta.label, "q": cfg.q, "m": cfg.m, "dim": cfg.dim_label,
                "pi": [list(b) for b in cfg.pi.basis]}
    elif a.family == "family2":
        cfg = _family2_config(a)
        g, p = C.build_family2(cfg)
        exp, loops = C.family2_params(cfg.q, cfg.m), C.expected_family2_loops(cfg)
        info = {"kind": cfg.zeta.label, "q": cfg.q, "m": cfg.m, "dim": cfg.dim_label, "x_star": list(cfg.x_star)}
    elif a.family == "design":
        M = C.fano_incidence() if a.incidence is None else np.array(_read_json(a.incidence))
        if a.complement_design:
            M = 1 - M
        m, l1, l2 = C.check_symmetric_design(M)
        g, p = C.build_symmetric_design_lddg(M, a.n)
        exp, loops = C.symmetric_design_params(m, l1, l2, a.n), a.n * int(np.trace(M))
        info = {"design": [m, l1, l2], "n": a.n}
    else:
        g, p = C.build_trivial_union(a.m1, a.m2, a.n)
        exp, loops = C.trivial_union_params(a.m1, a.m2, a.n), a.m1 * a.n
        info = {"m1": a.m1, "m2": a.m2, "n": a.n}
    info["family"] = a.family
    if a.complement:
        g, exp, loops = complement(g), complement_params(exp), g.v - loops
        info["complement"] = True
    return g, p, exp, loops, info


def _expectation_checks(cert: dict, exp: LddgParams, loops: int) -> None:
    got = cert.get("params")
    cert["expected"] = {"params": list(exp.tuple()), "L": loops}
    cert["checks"]["params_match_closed_form"] = got is not None and tuple(
        got[k] for k in ("v", "k", "lambda1", "lambda2", "m", "n")) == exp.tuple()
    cert["checks"]["loops_match_closed_form"] = got is not None and got["L"] == loops
    cert["passed"] = cert.get("refutation") is None and all(cert["checks"].values())


def cmd_construct(a) -> int:
    g, p, exp, loops, info = _expected(a)
    cert = certificate(g, p, exact=not a.no_exact)
    _expectation_checks(cert, exp, loops)
    cert["construction"] = info
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_json(out / "graph.json", g.to_json())
    _write_json(out / "partition.json", p.to_json())
    _write_json(out / "certificate.json", cert)
    _summary(cert)
    return EXIT_OK if cert["passed"] else EXIT_FAILED


def _summary(cert: dict, stream=None) -> None:
    stream = stream or sys.stdout
    if "params" in cert:
        prm = cert["params"]
        tup = ",".join(str(prm[k]) for k in ("v", "k", "lambda1", "lambda2", "m", "n"))
        print(f"({tup}) L={prm['L']} N*={prm['n_star']} spectrum: {cert.get('spectrum', '-')}", file=stream)
    failed = [k for k, ok in cert.get("checks", {}).items() if not ok]
    if cert.get("refutation"):
        print(f"refuted: {cert['refutation']}", file=stream)
    print("PASSED" if cert["passed"] else f"FAILED {' '.join(failed)}", file=stream)


# -- verify -------------------------------------------------------------------


def _load_graph(path: str) -> LoopedGraph:
    return LoopedGraph.from_json(_read_json(path))


def _certify(g: LoopedGraph, p: Optional[Partition], exact: bool = True) -> dict:
    """Certificate for g; without p the canonical partition is searched for first."""
    if p is None:
        try:
            found = find_canonical_partition(g)
        except NotRegular as exc:
            return {"passed": False, "checks": {}, "refutation": {"reason": str(exc)}}
        if isinstance(found, Improper):
            return {"passed": False, "checks": {}, "refutation": {
                "reason": "all distinct pairs have the same number of common neighbours",
                "improper": {"v": found.v, "k": found.k, "lambda": found.lam}}}
        if isinstance(found, NotLddg):
            return {"passed": False, "checks": {}, "refutation": {"reason": found.reason}}
        p = found[0]
    cert = certificate(g, p, exact=exact)
    cert["partition"] = p.to_json()["classes"]
    return cert


def cmd_verify(a) -> int:
    g = _load_graph(a.graph)
    p = Partition.from_json(_read_json(a.partition)) if a.partition else None
    cert = _certify(g, p, exact=not a.no_exact)
    text = json.dumps(cert, indent=2, sort_keys=True)
    if a.out:
        Path(a.out).write_text(text + "\n")
    else:
        print(text)
    _summary(cert, sys.stderr)
    return EXIT_OK if cert["passed"] else EXIT_REFUTED


# -- switch -------------------------------------------------------------------


def cmd_switch(a) -> int:
    g = _load_graph(a.graph)
    p = Partition.from_json(_read_json(a.partition)) if a.partition else None
    theta = parse_permutation(a.perm, g.v)
    counts = switch_counts(g, theta)
    h = dual_seidel_switch(g, theta)
    before = _certify(g, p, exact=not a.no_exact)
    after = None
    if before["passed"]:
        # the class partition of Γ carries over to Γ_θ
        q = Partition(tuple(map(tuple, before["partition"])))
        after = certificate(h, q, exact=not a.no_exact)
        after["partition"] = before["partition"]
        if not after["passed"]:
            after = _certify(h, None, exact=not a.no_exact)
    if after is None:
        after = _certify(h, None, exact=not a.no_exact)
    same = before["passed"] and after["passed"] and all(
        before["params"][k] == after["params"][k] for k in ("v", "k", "lambda1", "lambda2", "m", "n"))
    report = {
        "theta": theta,
        "N": counts.N,
        "A1": counts.A1,
        "A2": counts.A2,
        "predicted_loops": counts.predicted_loops,
        "switched_loops": h.loop_count,
        "loop_check": counts.predicted_loops == h.loop_count,
        "same_parameters": same,
        "before": before,
        "after": after,
    }
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_json(out / "switched.json", h.to_json())
    _write_json(out / "switch_certificate.json", report)
    print(f"N={counts.N} A1={counts.A1} A2={counts.A2} predicted={counts.predicted_loops} "
          f"actual={h.loop_count} same_parameters={same}")
    if not report["loop_check"]:
        return EXIT_FAILED
    if not before["passed"]:
        return EXIT_REFUTED
    return EXIT_OK if same else EXIT_FAILED


# -- catalog ------------------------------------------------------------------


def _catalog_jobs(qs: Iterable[int], ms: Iterable[int], families: Sequence[str], kinds: Sequence[str],
                  complements: bool) -> Iterable[tuple[str, str, int, int, str, Callable]]:
    """(family, kind, q, m, dim, build) in deterministic order; build returns (g, p, expected, loops)."""
    for q in qs:
        for m in ms:
            if "family1" in families:
                for cfg in C.family1_configs(q, m, kinds):
                    def b1(cfg=cfg):
                        g, p = C.build_family1(cfg)
                        return g, p, C.expected_family1_params(cfg), C.expected_family1_loops(cfg)
                    yield "family1", cfg.zeta.label, q, m, cfg.dim_label, b1
                    if complements:
                        def b1c(cfg=cfg):
                            g, p = C.build_family1(cfg)
                            return complement(g), p, C.expected_family1_complement_params(cfg), g.v - C.expected_family1_loops(cfg)
                        yield "family1-complement", cfg.zeta.label, q, m, cfg.dim_label, b1c
            if "family2" in families:
                for cfg in C.family2_configs(q, m, kinds):
                    def b2(cfg=cfg):
                        g, p = C.build_family2(cfg)
                        return g, p, C.family2_params(cfg.q, cfg.m), C.expected_family2_loops(cfg)
                    yield "family2", cfg.zeta.label, q, m, cfg.dim_label, b2
                    if complements:
                        def b2c(cfg=cfg):
                            g, p = C.build_family2(cfg)
                            return complement(g), p, C.family2_complement_params(cfg.q, cfg.m), g.v - C.expected_family2_loops(cfg)
                        yield "family2-complement", cfg.zeta.label, q, m, cfg.dim_label, b2c


def cmd_catalog(a) -> int:
    qs, ms = parse_int_list(a.q), parse_int_list(a.m)
    kinds = [k.strip() for k in a.kinds.split(",") if k.strip()] if a.kinds else list(KINDS)
    bad = [k for k in kinds if k not in KINDS]
    if bad:
        raise UsageError(f"unknown kinds {bad}")
    for q in qs:
        GF(q)
    families = ("family1", "family2") if a.family == "all" else (a.family,)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for family, kind, q, m, dim, build in _catalog_jobs(qs, ms, families, kinds, a.complements):
        g, p, exp, loops = build()
        cert = certificate(g, p, exact=not a.no_exact)
        _expectation_checks(cert, exp, loops)
        if not cert["passed"]:
            failed = [k for k, ok in cert["checks"].items() if not ok]
            print(f"verification failed for {family} {kind} q={q} m={m} dim={dim}: "
                  f"{cert.get('refutation') or failed}", file=sys.stderr)
            return EXIT_FAILED
        prm = cert["params"]
        w.writerow([family, kind, q, m, dim, prm["v"], prm["k"], prm["lambda1"], prm["lambda2"], prm["m"], prm["n"],
                    prm["L"], prm["n_star"], cert["spectrum"], "true"])
    if a.out:
        Path(a.out).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


# -- entry point --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="loopddg", description="Build and verify divisible design graphs with loops.")
    sub = ap.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build a graph, write graph/partition/certificate JSON")
    fam = con.add_subparsers(dest="family", required=True)

    def common(sp):
        sp.add_argument("--out", default=".", help="output directory (default: current)")
        sp.add_argument("--complement", action="store_true", help="build the complement graph instead")
        sp.add_argument("--no-exact", action="store_true", help="skip the exact eigenvalue computation")

    for name in ("family1", "family2"):
        sp = fam.add_parser(name, help=f"polarity construction, {name}")
        sp.add_argument("--kind", required=True, help="symplectic, pseudo, orthogonal[-plus|-minus], unitary")
        sp.add_argument("--variant", choices=("plus", "minus"), help="quadric type for orthogonal, m even")
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--m", type=int, required=True, help="vector dimension (ambient PG(m-1, q))")
        common(sp)
        if name == "family1":
            sp.add_argument("--pi-dim", type=int, help="projective dimension of the isotropic subspace")
            sp.add_argument("--pi", help="explicit basis of the isotropic subspace, e.g. '1,0,0,0;0,0,1,0'")
            sp.add_argument("--special", choices=("contain", "avoid"),
                            help="pseudo, m even: whether the subspace contains the special point")
        else:
            sp.add_argument("--x-star", help="named choice (first, special, generic, square, nonsquare) or coordinates")
    sp = fam.add_parser("design", help="blow-up of a symmetric design (Fano plane by default)")
    sp.add_argument("--incidence", help="JSON file holding a symmetric 0/1 incidence matrix")
    sp.add_argument("--complement-design", action="store_true", help="use the complementary design")
    sp.add_argument("--n", type=int, default=2, help="class size")
    common(sp)
    sp = fam.add_parser("trivial", help="disjoint union of looped cliques and complete bipartite graphs")
    sp.add_argument("--m1", type=int, required=True)
    sp.add_argument("--m2", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp)

    ver = sub.add_parser("verify", help="certify a graph file as an LDDG")
    ver.add_argument("graph")
    ver.add_argument("partition", nargs="?")
    ver.add_argument("--out", help="write the certificate here instead of stdout")
    ver.add_argument("--no-exact", action="store_true")

    sw = sub.add_parser("switch", help="dual Seidel switching by an involutory automorphism")
    sw.add_argument("graph")
    sw.add_argument("--perm", required=True, help="JSON array, file, or 0-based cycles like '(0 1)(2 3)'")
    sw.add_argument("--partition", help="class partition of the input graph (searched for if omitted)")
    sw.add_argument("--out", default=".")
    sw.add_argument("--no-exact", action="store_true")

    cat = sub.add_parser("catalog", help="CSV of verified constructions over a parameter grid")
    cat.add_argument("--q", default="2..5", help="field orders, e.g. '2,3' or '2..5'")
    cat.add_argument("--m", default="3..4", help="vector dimensions, e.g. '3..4'")
    cat.add_argument("--family", choices=("family1", "family2", "all"), default="all")
    cat.add_argument("--kinds", help="comma-separated polarity kinds (default: all)")
    cat.add_argument("--complements", action="store_true", help="add a row for each complement")
    cat.add_argument("--out", help="write the CSV here instead of stdout")
    cat.add_argument("--no-exact", action="store_true")
    return ap


COMMANDS = {"construct": cmd_construct, "verify": cmd_verify, "switch": cmd_switch, "catalog": cmd_catalog}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (NotAutomorphism, NotInvolution) as exc:
        print(f"error: permutation is not an involutory automorphism: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UnequalClassSizes, PartitionMismatch, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
