"""Command-line front end: ``binedge <subcommand> ...``.

Exit status is 0 on success, 2 when a check ran to completion and came out
negative (certificate rejected, polynomial not a member) and 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import __version__
from .bounds import (
    CERTIFICATE_FAMILIES,
    bounds_report,
    build_triangle_chain,
    certificate_from_polynomials,
    generate_certificate,
    verify_certificate,
)
from .complexes import b_and_r, build_complex_edge_ideal, delta_Q, format_complex, omega, read_complex
from .edgeideal import height_and_unmixed, minimal_primes
from .errors import BinedgeError
from .graphs import print_graph, read_graph
from .groebner import GroebnerConfig, buchberger, format_ideal, radical_member, read_ideal
from .polyring import DEGREVLEX, LEX, format_polynomial, parse_polynomial

__all__ = ["RunConfig", "main", "run", "corpus_run", "bundled_corpus"]

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    """Validated options shared by all subcommands."""

    command: str
    modulus: int = 0
    order: str = "degrevlex"
    max_power: int = 3
    rabinowitsch: bool = True
    json: bool = False
    seed: int = 0
    gb: GroebnerConfig = GroebnerConfig()

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        modulus = _field(ns.field)
        if ns.max_power < 1:
            raise BinedgeError("--max-power must be at least 1")
        return cls(ns.command, modulus, ns.order, ns.max_power, not ns.no_rabinowitsch, ns.json, ns.seed,
                   GroebnerConfig.from_env())

    @property
    def monomial_order(self):
        return LEX if self.order == "lex" else DEGREVLEX


def _field(text: str) -> int:
    if text in ("QQ", "rationals", "0"):
        return 0
    try:
        p = int(text)
    except ValueError:
        raise BinedgeError(f"--field must be 'rationals' or a prime, got {text!r}") from None
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise BinedgeError(f"--field {p} is not prime")
    return p


def bundled_corpus() -> Path:
    return Path(str(resources.files("binedge") / "data" / "corpus"))


# -- subcommands -----------------------------------------------------------------


def _emit(cfg: RunConfig, payload, text: str) -> None:
    if cfg.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_report(ns, cfg):
    G = read_graph(ns.graph)
    rep = bounds_report(G)
    _emit(cfg, rep.to_json(), rep.to_text())
    return EXIT_OK


def cmd_primes(ns, cfg):
    G = read_graph(ns.graph)
    primes = minimal_primes(G)
    ht, unmixed, _ = height_and_unmixed(G, primes)
    payload = {"primes": [p.to_json() for p in primes], "ht": ht, "unmixed": unmixed}
    text = "\n".join(f"S={{{','.join(map(str, p.S))}}} c={p.c} dim={p.dimension}  {p.describe()}" for p in primes)
    text += f"\nht = {ht}, unmixed = {unmixed}"
    _emit(cfg, payload, text)
    return EXIT_OK


def cmd_complex(ns, cfg):
    G = read_graph(ns.graph)
    delta = build_complex_edge_ideal(G)
    value, witness = delta_Q(delta, omega(delta))
    b, r = b_and_r(delta)
    payload = {
        "vertices": [sorted(v) for v in delta.vertices],
        "facets": [[i + 1 for i in sorted(f)] for f in delta.facets],
        "components": len(delta.components()),
        "dim": delta.dim,
        "delta_omega": value,
        "b": b,
        "r": r,
    }
    text = format_complex(delta) + f"# components {payload['components']}, delta_Omega = {value}, b = {b}, r = {r}"
    _emit(cfg, payload, text)
    return EXIT_OK


def cmd_matching(ns, cfg):
    delta = read_complex(ns.complex)
    Q = omega(delta) if ns.q.lower() in ("omega", "all") else {int(x) for x in ns.q.split(",") if x.strip()}
    value, witness = delta_Q(delta, Q)
    simplices = [[i + 1 for i in sorted(s)] for s in witness.simplices]
    payload = {"Q": sorted(Q), "delta": value, "support": len(witness.supp), "witness": simplices}
    text = f"delta_Q = {value} (support {len(witness.supp)} of {delta.nvertices})\nwitness: {simplices}"
    _emit(cfg, payload, text)
    return EXIT_OK


def _sum_pairs(text: str | None):
    if not text:
        return None
    groups = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        items = []
        for tok in chunk.split("+"):
            tok = tok.strip()
            if "-" in tok:
                i, j = tok.split("-")
                items.append((int(i), int(j)))
            else:
                items.append(int(tok))
        groups.append(items)
    return groups


def cmd_certify(ns, cfg):
    G = read_graph(ns.graph)
    cert = generate_certificate(G, ns.family, _sum_pairs(ns.sum_pairs), cfg.modulus)
    text = cert.to_text()
    if ns.output:
        Path(ns.output).write_text(text)
    payload = {
        "family": cert.family.kind,
        "size": cert.size,
        "polynomials": [str(p) for p in cert.polynomials],
        "groups": [[list(e) for e in g] for g in cert.groups],
        "relabeling": dict(cert.relabeling),
    }
    status = EXIT_OK
    if ns.verify:
        v = verify_certificate(G, cert, cfg.max_power, cfg.rabinowitsch, cfg.gb)
        payload["verdict"] = v.to_json()
        text += f"# {v.status}" + (f" at {v.failed_step}: {v.message}" if v.failed_step else "")
        status = _verdict_exit(v)
    _emit(cfg, payload, text.rstrip("\n"))
    return status


def _verdict_exit(v) -> int:
    return {"verified": EXIT_OK, "rejected": EXIT_NEGATIVE}.get(v.status, EXIT_ERROR)


def cmd_verify(ns, cfg):
    G = read_graph(ns.graph)
    ideal = read_ideal(ns.cert, cfg.modulus)
    cert = certificate_from_polynomials(G, ideal.generators)
    v = verify_certificate(G, cert, cfg.max_power, cfg.rabinowitsch, cfg.gb)
    payload = dict(v.to_json(), size=cert.size)
    if v.verified:
        text = f"verified: {cert.size} polynomials generate J_G up to radical"
        if v.max_exponent:
            text += f" (powers <= {v.max_exponent})"
    else:
        text = f"{v.status} at {v.failed_step} step: {v.message}"
    _emit(cfg, payload, text)
    return _verdict_exit(v)


def cmd_gb(ns, cfg):
    ideal = read_ideal(ns.ideal, cfg.modulus)
    gb = buchberger(ideal, cfg.monomial_order, cfg.gb)
    polys = [format_polynomial(g, cfg.monomial_order) for g in gb.basis]
    _emit(cfg, {"order": cfg.order, "basis": polys}, "\n".join(polys))
    return EXIT_OK


def cmd_member(ns, cfg):
    ideal = read_ideal(ns.ideal, cfg.modulus)
    f = parse_polynomial(ns.poly, ideal.nvars, cfg.modulus)
    gb = buchberger(ideal, cfg.monomial_order, cfg.gb)
    nf = gb.normal_form(f)
    payload = {"member": nf.is_zero(), "normal_form": format_polynomial(nf, cfg.monomial_order)}
    text = "member" if nf.is_zero() else f"not a member; normal form {payload['normal_form']}"
    if ns.radical:
        res = radical_member(f, ideal, cfg.max_power, cfg.rabinowitsch, cfg.monomial_order, cfg.gb)
        payload["radical"] = {"member": res.member, "exponent": res.exponent, "method": res.method,
                              "definitive": res.definitive}
        text += f"\nradical: {res.member} via {res.method}" + (f", power {res.exponent}" if res.exponent else "")
        ok = res.member
        if not res.definitive:
            _emit(cfg, payload, text + " (not definitive)")
            return EXIT_ERROR
    else:
        ok = nf.is_zero()
    _emit(cfg, payload, text)
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_chain(ns, cfg):
    r = [int(x) for x in ns.r.split(",") if x.strip()] if ns.r else []
    G = build_triangle_chain(ns.k, r)
    text = print_graph(G, comment=f"triangle chain k={ns.k} r={tuple(r)}")
    if ns.output:
        Path(ns.output).write_text(text)
    payload = {"n": G.n, "m": G.m, "edges": [list(e) for e in sorted(G.edges)]}
    if ns.report:
        payload["report"] = bounds_report(G).to_json()
    _emit(cfg, payload, text.rstrip("\n"))
    return EXIT_OK


_COLUMNS = ("file", "n", "m", "l", "bar", "lower", "upper", "exact", "ht", "unmixed", "family", "cert")


def corpus_run(directory: str | Path) -> tuple[list[dict], dict]:
    """One report row per ``*.graph`` file, sorted by name; errors become rows."""
    rows = []
    for path in sorted(Path(directory).glob("*.graph")):
        try:
            rep = bounds_report(read_graph(path))
        except BinedgeError as exc:
            rows.append({"file": path.name, "error": str(exc)})
            continue
        rows.append({
            "file": path.name, "n": rep.n, "m": rep.m, "l": rep.l, "bar": rep.bar,
            "lower": rep.ara_lower, "upper": rep.ara_upper, "exact": rep.ara_exact, "ht": rep.ht,
            "unmixed": rep.unmixed, "family": rep.family.kind, "cert": rep.certificate_size,
        })
    summary = {
        "graphs": len(rows),
        "exact": sum(1 for r in rows if r.get("exact") is not None),
        "open": sum(1 for r in rows if "error" not in r and r.get("exact") is None),
        "errors": sum(1 for r in rows if "error" in r),
    }
    return rows, summary


def cmd_corpus(ns, cfg):
    directory = ns.dir or bundled_corpus()
    if not Path(directory).is_dir():
        raise BinedgeError(f"not a directory: {directory}")
    rows, summary = corpus_run(directory)
    widths = {c: max([len(c)] + [len(str(r.get(c, ""))) for r in rows]) for c in _COLUMNS}
    lines = ["  ".join(c.ljust(widths[c]) for c in _COLUMNS)]
    for r in rows:
        if "error" in r:
            lines.append(f"{r['file'].ljust(widths['file'])}  ERROR {r['error']}")
        else:
            lines.append("  ".join(str("-" if r[c] is None else r[c]).ljust(widths[c]) for c in _COLUMNS))
    lines.append(f"{summary['graphs']} graphs: {summary['exact']} exact, {summary['open']} open, "
                 f"{summary['errors']} errors")
    _emit(cfg, {"rows": rows, "summary": summary}, "\n".join(lines))
    return EXIT_ERROR if summary["errors"] else EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")
    common.add_argument("--field", default="rationals",
                        help="coefficient field: 'rationals' (default) or a prime p")
    common.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex",
                        help="monomial order for Groebner computations (default degrevlex)")
    common.add_argument("--max-power", type=int, default=3,
                        help="largest power tried before the Rabinowitsch test (default 3)")
    common.add_argument("--no-rabinowitsch", action="store_true",
                        help="skip the Rabinowitsch fallback; bounded searches may end undecided")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")

    p = argparse.ArgumentParser(
        prog="binedge",
        description="Arithmetical rank bounds and radical certificates for binomial edge ideals.",
        epilog="Resource caps: BINEDGE_MAX_PAIRS, BINEDGE_MAX_BASIS, BINEDGE_MAX_DEGREE.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("report", parents=[common], help="all invariants and bounds for a graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("primes", parents=[common], help="minimal primes, height, unmixedness")
    s.add_argument("graph")
    s.set_defaults(func=cmd_primes)

    s = sub.add_parser("complex", parents=[common], help="the support complex of J_G and its invariants")
    s.add_argument("graph")
    s.set_defaults(func=cmd_complex)

    s = sub.add_parser("matching", parents=[common], help="delta_Q of a complex file")
    s.add_argument("complex")
    s.add_argument("--q", default="omega", help="comma-separated dimensions, or 'omega' for all (default)")
    s.set_defaults(func=cmd_matching)

    s = sub.add_parser("certify", parents=[common], help="generate a radical-generating set")
    s.add_argument("graph")
    s.add_argument("--family", choices=CERTIFICATE_FAMILIES, default="auto")
    s.add_argument("--sum-pairs", metavar="GROUPS",
                   help="groups to sum, e.g. '2+3' (generator numbers) or '2-3+1-4' (edges); ';' separates groups")
    s.add_argument("-o", "--output", help="write the certificate file here")
    s.add_argument("--verify", action="store_true", help="verify the certificate as well")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("verify", parents=[common], help="check a certificate file against a graph")
    s.add_argument("graph")
    s.add_argument("cert")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of an ideal file")
    s.add_argument("ideal")
    s.set_defaults(func=cmd_gb)

    s = sub.add_parser("member", parents=[common], help="ideal (or radical) membership of a polynomial")
    s.add_argument("poly")
    s.add_argument("ideal")
    s.add_argument("--radical", action="store_true", help="test radical membership instead")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("chain", parents=[common], help="print the canonical triangle chain graph")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--r", default="", help="comma-separated path lengths, k-1 of them")
    s.add_argument("-o", "--output")
    s.add_argument("--report", action="store_true", help="include the bounds report (JSON only)")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("corpus", parents=[common], help="report table for a directory of .graph files")
    s.add_argument("dir", nargs="?", help="directory (default: the bundled corpus)")
    s.set_defaults(func=cmd_corpus)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_args(ns)
        return ns.func(ns, cfg)
    except (BinedgeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
