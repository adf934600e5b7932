"""Command-line front end: expression commands and the verification suite.

Exit codes: 0 all expectations met, 1 discrepancies found, 2 usage, parse
or configuration error.  UQSL2_MODE sets the default relation mode; an
optional JSON config file supplies verify defaults (flags win).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import __version__
from .elements import Element
from .expr import EvalError, ParseError, eval_ast, parse
from .family import SIGNS, FamilyParams, central_c, family_E
from .currents import phi, psi
from .elements import omega
from .render import element_to_obj, print_element
from .rewrite import RelationMode, normal_form
from .verify import VerdictReport, expectation_met, sweep_claim


class ConfigError(ValueError):
    pass


_CLI_CLAIMS = {"ep": "EP", "em": "EM", "commc": "COMMC", "omega": "OMEGA_E", "reflect": "REFLECT"}


def _mode_from_name(name: str) -> RelationMode:
    try:
        return RelationMode(name)
    except ValueError:
        raise ConfigError(f"unknown mode {name!r} (use strict or abelianx)")


def _default_mode() -> str:
    return os.environ.get("UQSL2_MODE", "strict")


def _parse_range(text: str):
    try:
        lo_s, hi_s = text.split(":")
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise ConfigError(f"bad range {text!r}, expected a:b")
    if lo > hi:
        raise ConfigError(f"empty range {text!r}")
    return lo, hi


@dataclass
class SuiteConfig:
    claims: list
    n_max: int = 4
    k_max: int = 4
    m_range: tuple = (-2, 2)
    p_range: tuple = (-2, 2)
    mode: RelationMode = RelationMode.STRICT
    format: str = "text"


@dataclass
class ReportDoc:
    version: str
    mode: str
    ranges: dict
    reports: list
    summary: dict = field(default_factory=dict)

    def tally(self):
        counts = {"exact_zero": 0, "central": 0, "residual": 0, "paper_mismatch": 0}
        met = 0
        for r in self.reports:
            counts[r.verdict.kind] += 1
            if not r.paper_match:
                counts["paper_mismatch"] += 1
            if expectation_met(r):
                met += 1
        counts["reports"] = len(self.reports)
        counts["expectations_met"] = met
        self.summary = counts
        return counts


def run_verify_suite(config: SuiteConfig) -> ReportDoc:
    """Run every configured claim sweep and assemble the report document."""
    ranges = {
        "n_max": config.n_max,
        "k_max": config.k_max,
        "m_range": config.m_range,
        "p_range": config.p_range,
    }
    reports = []
    for claim in config.claims:
        claim_reports = sweep_claim(claim, ranges, config.mode)
        if not claim_reports:
            raise ConfigError(
                f"claim {claim} has no valid parameter tuples in the given ranges"
            )
        reports.extend(claim_reports)
    doc = ReportDoc(
        version=__version__, mode=config.mode.value, ranges=ranges, reports=reports
    )
    doc.tally()
    return doc


def _params_text(params: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in sorted(params.items()))


def report_doc_text(doc: ReportDoc) -> str:
    lines = [
        f"uqsl2 verify report (version {doc.version}, mode {doc.mode})",
        "ranges: n=0..{n_max} k=0..{k_max} m={m_range[0]}..{m_range[1]} "
        "p={p_range[0]}..{p_range[1]}".format(**doc.ranges),
    ]
    for r in doc.reports:
        line = (
            f"claim={r.claim} {_params_text(r.params)} verdict={r.verdict.kind} "
            f"paper_match={'yes' if r.paper_match else 'no'} "
            f"expectation={'met' if expectation_met(r) else 'FAILED'}"
        )
        if not r.paper_match:
            line += f" discrepancy={print_element(r.discrepancy)}"
        lines.append(line)
    s = doc.summary
    lines.append(
        "summary: reports={reports} exact_zero={exact_zero} central={central} "
        "residual={residual} paper_mismatch={paper_mismatch} "
        "expectations_met={expectations_met}/{reports}".format(**s)
    )
    return "\n".join(lines)


def _report_to_obj(r: VerdictReport) -> dict:
    return {
        "claim": r.claim,
        "params": {k: v for k, v in sorted(r.params.items())},
        "mode": r.mode.value,
        "verdict": {"kind": r.verdict.kind, "value": element_to_obj(r.verdict.value)},
        "paper_match": r.paper_match,
        "paper_expected": element_to_obj(r.paper_expected),
        "discrepancy": element_to_obj(r.discrepancy),
        "expectation_met": expectation_met(r),
    }


def report_doc_json(doc: ReportDoc) -> str:
    obj = {
        "version": doc.version,
        "mode": doc.mode,
        "ranges": {
            "n_max": doc.ranges["n_max"],
            "k_max": doc.ranges["k_max"],
            "m_range": list(doc.ranges["m_range"]),
            "p_range": list(doc.ranges["p_range"]),
        },
        "summary": doc.summary,
        "reports": [_report_to_obj(r) for r in doc.reports],
    }
    return json.dumps(obj, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="uqsl2",
        description="Exact computations in the loop presentation of the "
        "quantized affine sl2 and verification of its Heisenberg-type family.",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--mode", default=None, choices=("strict", "abelianx"))
        p.add_argument("--format", default="text", choices=("text", "latex", "json"))

    p = sub.add_parser("nf", help="normal form of an expression")
    p.add_argument("expr")
    add_common(p)

    p = sub.add_parser("mul", help="product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    add_common(p)

    p = sub.add_parser("comm", help="commutator of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    add_common(p)

    p = sub.add_parser("dcomm", help="K^p-deformed commutator")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--p", type=int, default=0)
    add_common(p)

    p = sub.add_parser("psi", help="current component psi_m")
    p.add_argument("m", type=int)
    add_common(p)

    p = sub.add_parser("phi", help="current component phi_m")
    p.add_argument("m", type=int)
    add_common(p)

    p = sub.add_parser("E", help="family element E(sign, p, m, index)")
    p.add_argument("sign", choices=SIGNS)
    p.add_argument("p", type=int)
    p.add_argument("m", type=int)
    p.add_argument("index", type=int)
    add_common(p)

    p = sub.add_parser("c", help="stated central value c(sign, n, m)")
    p.add_argument("sign", choices=SIGNS)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    add_common(p)

    p = sub.add_parser("omega", help="apply the automorphism omega")
    p.add_argument("expr")
    add_common(p)

    p = sub.add_parser("verify", help="run claim verification sweeps")
    p.add_argument("--claims", default="ep,em,commc,omega,reflect")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--m-range", default=None)
    p.add_argument("--p-range", default=None)
    p.add_argument("--mode", default=None, choices=("strict", "abelianx"))
    p.add_argument("--format", default=None, choices=("text", "json"))
    p.add_argument("--config", default=None, help="JSON file with verify defaults")
    return ap


def _verify_config(args) -> SuiteConfig:
    file_cfg = {}
    if args.config:
        try:
            with open(args.config) as fh:
                file_cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file: {exc}")
        if not isinstance(file_cfg, dict):
            raise ConfigError("config file must hold a JSON object")

    def pick(flag, key, default):
        if flag is not None:
            return flag
        if key in file_cfg:
            return file_cfg[key]
        return default

    claims_raw = pick(
        args.claims if args.claims != "ep,em,commc,omega,reflect" else None,
        "claims",
        args.claims,
    )
    if isinstance(claims_raw, str):
        claim_names = [c.strip() for c in claims_raw.split(",") if c.strip()]
    else:
        claim_names = list(claims_raw)
    claims = []
    for name in claim_names:
        key = name.lower()
        if key not in _CLI_CLAIMS:
            raise ConfigError(f"unknown claim {name!r} (use {','.join(_CLI_CLAIMS)})")
        claims.append(_CLI_CLAIMS[key])
    if not claims:
        raise ConfigError("no claims selected")

    n_max = pick(args.n_max, "n_max", 4)
    k_max = pick(args.k_max, "k_max", 4)
    if n_max < 0 or k_max < 0:
        raise ConfigError("n-max and k-max must be nonnegative")

    m_range = pick(args.m_range, "m_range", "-2:2")
    p_range = pick(args.p_range, "p_range", "-2:2")
    if isinstance(m_range, str):
        m_range = _parse_range(m_range)
    else:
        m_range = (int(m_range[0]), int(m_range[1]))
    if isinstance(p_range, str):
        p_range = _parse_range(p_range)
    else:
        p_range = (int(p_range[0]), int(p_range[1]))
    if m_range[0] > m_range[1] or p_range[0] > p_range[1]:
        raise ConfigError("ranges must be nonempty")

    mode = _mode_from_name(pick(args.mode, "mode", _default_mode()))
    fmt = pick(args.format, "format", "text")
    if fmt not in ("text", "json"):
        raise ConfigError(f"unknown report format {fmt!r}")
    return SuiteConfig(
        claims=claims,
        n_max=n_max,
        k_max=k_max,
        m_range=m_range,
        p_range=p_range,
        mode=mode,
        format=fmt,
    )


def _element_command(args) -> Element:
    mode = _mode_from_name(args.mode or _default_mode())
    cmd = args.command
    if cmd == "nf":
        return normal_form(eval_ast(parse(args.expr), mode), mode)
    if cmd == "mul":
        return eval_ast(parse(args.left), mode) * eval_ast(parse(args.right), mode)
    if cmd == "comm":
        from .rewrite import commutator

        return commutator(
            eval_ast(parse(args.left), mode), eval_ast(parse(args.right), mode), mode
        )
    if cmd == "dcomm":
        from .rewrite import deformed_commutator

        return deformed_commutator(
            eval_ast(parse(args.left), mode),
            eval_ast(parse(args.right), mode),
            args.p,
            mode,
        )
    if cmd == "psi":
        return psi(args.m)
    if cmd == "phi":
        return phi(args.m)
    if cmd == "E":
        return family_E(FamilyParams(args.sign, args.p, args.m, args.index))
    if cmd == "c":
        if args.n < 0:
            raise EvalError("c index must be nonnegative")
        return central_c(args.n, args.m, args.sign)
    if cmd == "omega":
        mode = _mode_from_name(args.mode or _default_mode())
        return omega(eval_ast(parse(args.expr), mode))
    raise ConfigError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            config = _verify_config(args)
            doc = run_verify_suite(config)
            if config.format == "json":
                print(report_doc_json(doc))
            else:
                print(report_doc_text(doc))
            met = doc.summary["expectations_met"] == doc.summary["reports"]
            return 0 if met else 1
        element = _element_command(args)
        print(print_element(element, args.format))
        return 0
    except (ParseError, EvalError, ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
