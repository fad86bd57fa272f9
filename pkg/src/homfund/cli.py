"""Command-line front end.

    homfund --input examples.json --compute pi1,pi0,sequence --format text

Exit codes: 0 success, 1 unreadable or malformed input, 2 a required
hypothesis flag is not asserted, 3 two independent computations disagree.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .abgroup import FgAbGroup, PrimeToPAbGroup
from .homspace import (
    COMPUTE_KEYS,
    ConsistencyError,
    HomSpaceInput,
    HypothesisError,
    Pi1Report,
    report,
)
from .io import FLAG_NAMES, ParseError, load_input

log = logging.getLogger("homfund")

EXIT_OK, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_CONSISTENCY = 0, 1, 2, 3


@dataclass
class RunRequest:
    input_path: Path
    compute: tuple[str, ...] = ("pi1", "pi0")
    output_format: str = "text"
    verbosity: int = 0
    p: int | None = None

    def __post_init__(self):
        if not self.compute:
            raise ValueError("nothing to compute")
        bad = [c for c in self.compute if c not in COMPUTE_KEYS]
        if bad:
            raise ValueError(f"unknown computations {bad}; choose from {', '.join(COMPUTE_KEYS)}")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown format {self.output_format!r}")


def _inv_json(rank: int, factors) -> dict:
    return {"rank": str(rank), "factors": [str(d) for d in factors]}


def _group_json(A: FgAbGroup) -> dict:
    return _inv_json(A.rank, A.factors)


def _pprime_json(A: PrimeToPAbGroup) -> dict:
    return {"p": str(A.p), **_inv_json(A.rank, A.torsion)}


def report_to_json(inp: HomSpaceInput, rep: Pi1Report, compute) -> dict:
    out: dict = {"input": inp.name, "flags": {k: getattr(rep.flags, k) for k in FLAG_NAMES}}
    if "pi1" in compute:
        out["pi1"] = _group_json(rep.pi1)
    if "sequence" in compute:
        s = rep.sequence
        out["sequence"] = {
            "hom_h": _group_json(s.hom_h),
            "hom_g": _group_json(s.hom_g),
            "pi1": _group_json(s.pi1),
            "pi0_h": _group_json(s.pi0_h),
            "exact": s.exact,
        }
    if "pi0" in compute:
        out["pi0_h"] = _group_json(rep.pi0_h)
    if "pi2" in compute:
        out["pi2"] = _group_json(rep.pi2)
        out["cochar_consistent"] = rep.cochar_consistent
    if "p_prime" in compute:
        out["pi1_p_prime"] = _pprime_json(rep.pi1_p_prime)
    if "oracle" in compute:
        out["oracle_agreement"] = rep.oracle_agreement
    return out


def report_to_text(inp: HomSpaceInput, rep: Pi1Report, compute) -> str:
    flags = " ".join(f"{k}={str(getattr(rep.flags, k)).lower()}" for k in FLAG_NAMES)
    lines = [f"input: {inp.name}", f"flags: {flags}"]
    if "pi1" in compute:
        lines.append(f"pi1(-1): {rep.pi1}")
    if "sequence" in compute:
        s = rep.sequence
        verdict = "exact" if s.exact else "NOT exact"
        lines.append(f"sequence: Hom(H^,Z) = {s.hom_h} -> Hom(G^,Z) = {s.hom_g} -> "
                     f"pi1(-1) = {s.pi1} -> pi0(H)(-1) = {s.pi0_h} -> 0 ({verdict})")
    if "pi0" in compute:
        lines.append(f"pi0(H)(-1): {rep.pi0_h}")
    if "pi2" in compute:
        lines.append(f"pi2(-1): {rep.pi2}")
        if not rep.cochar_consistent:
            lines.append("warning: H^0 of the cocharacter complex differs from pi1; "
                         "the two descriptions of H disagree")
    if "p_prime" in compute:
        g = rep.pi1_p_prime
        lines.append(f"pi1_et^(p')(-1) [p={g.p}]: {g}")
    if "oracle" in compute:
        lines.append(f"oracle: {'agree' if rep.oracle_agreement else 'DISAGREE'}")
    return "\n".join(lines)


def run(req: RunRequest, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        inp = load_input(req.input_path)
    except OSError as e:
        print(f"error: cannot read {req.input_path}: {e.strerror}", file=err)
        return EXIT_PARSE
    except ParseError as e:
        print(f"parse error in {req.input_path}: {e}", file=err)
        return EXIT_PARSE
    if "pi2" in req.compute and inp.cochar is None:
        print(f"error: pi2 requested but {req.input_path} has no cochar block", file=err)
        return EXIT_PARSE
    log.info("loaded %s: g_hat %s, h_hat %s", inp.name, inp.g_hat, inp.h_hat)
    try:
        rep = report(inp, req.compute, req.p)
    except HypothesisError as e:
        print(f"error: {e}", file=err)
        return EXIT_HYPOTHESIS
    except ConsistencyError as e:
        print(f"internal consistency failure: {e}\n"
              "This is a bug; please file a report including the input file.", file=err)
        return EXIT_CONSISTENCY
    except ValueError as e:
        print(f"error: {e}", file=err)
        return EXIT_PARSE
    if req.output_format == "json":
        print(json.dumps(report_to_json(inp, rep, req.compute), indent=2), file=out)
    else:
        print(report_to_text(inp, rep, req.compute), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="homfund", description=__doc__.split("\n\n")[0])
    ap.add_argument("--input", required=True, type=Path, help="JSON description of G, H and i*")
    ap.add_argument("--compute", default="pi1,pi0",
                    help=f"comma-separated subset of {','.join(COMPUTE_KEYS)} (default: pi1,pi0)")
    ap.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    ap.add_argument("--oracle", action="store_true", help="also cross-check pi1 with the auxiliary pipeline")
    ap.add_argument("--p", type=int, default=None, help="characteristic for the prime-to-p part")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else
                        logging.INFO if args.verbose else logging.WARNING)
    compute = [c.strip() for c in args.compute.split(",") if c.strip()]
    if args.oracle and "oracle" not in compute:
        compute.append("oracle")
    if args.p is not None and "p_prime" not in compute:
        compute.append("p_prime")
    try:
        req = RunRequest(args.input, tuple(compute), args.output_format, args.verbose, args.p)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    return run(req)


if __name__ == "__main__":
    sys.exit(main())
