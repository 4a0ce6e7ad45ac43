"""Command-line front end.

Every engine operation is exposed as a subcommand; responses are fully
deterministic (fixed seeds, canonical JSON) and rank responses always embed a
re-checkable certificate.  Exit codes: 0 ok, 1 input error, 2 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .binform import BinaryForm, descartes_gap_bound
from .decompose import (
    decomposition_from_json,
    extract_decomposition,
    flambda_identity_check,
    gen_flambda,
    gen_pd,
    verify_decomposition,
)
from .parse import ParseError, parse_form, render_form
from .rank import (
    SearchBudget,
    classify_small_rank,
    complex_rank,
    flambda_gap_evidence,
    flambda_real_bracket,
    real_rank,
)
from .apolarity import apolar_generators, build_catalecticant, kernel
from .scalar import DomainError, InternalInvariantError, scalar_text

DEFAULT_PRECISION_ENV = "WARING_DEFAULT_PRECISION"

COMMANDS = (
    "rank",
    "real-rank",
    "decompose",
    "verify",
    "apolar",
    "kernel",
    "classify",
    "family",
    "gap-bound",
)


@dataclass(frozen=True)
class Request:
    """A replayable engine request; identical requests yield identical output."""

    command: str
    form_text: str | None = None
    options: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, data: dict) -> "Request":
        command = data.get("command")
        if command not in COMMANDS:
            raise ValueError(f"unknown command {command!r}")
        form_text = data.get("form_text", data.get("form"))
        return cls(command, form_text, dict(data.get("options", {})))

    def to_json(self) -> dict:
        return {"command": self.command, "form_text": self.form_text, "options": self.options}


@dataclass(frozen=True)
class Response:
    status: str  # "ok" | "error"
    result: dict | None = None
    error: str | None = None
    diagnostics: tuple = ()
    exit_code: int = 0

    def to_json(self) -> dict:
        if self.status == "ok":
            return {
                "status": "ok",
                "result": self.result,
                "diagnostics": list(self.diagnostics),
            }
        return {"status": "error", "error": self.error}


def _resolve_precision(options: dict) -> int:
    if options.get("precision"):
        return int(options["precision"])
    env = os.environ.get(DEFAULT_PRECISION_ENV)
    if env:
        return int(env)
    return 256


def _embedding_notes(form: BinaryForm) -> list[str]:
    dom = form.domain
    if dom.kind == "QQ":
        return []
    rads = ", ".join(f"sqrt({m}) -> positive real root" for m in dom.radicands)
    return [f"real embedding: {rads}"]


def _parse_required_form(req: Request) -> BinaryForm:
    if not req.form_text:
        raise ValueError(f"command {req.command!r} needs a form expression")
    return parse_form(req.form_text)


def run_command(req: Request) -> Response:
    """Dispatch a request to the engine."""
    try:
        handler = _HANDLERS[req.command]
    except KeyError:
        return Response("error", error=f"unknown command {req.command!r}", exit_code=1)
    try:
        result, diagnostics = handler(req)
        return Response("ok", result=result, diagnostics=tuple(diagnostics))
    except (ParseError, DomainError, ValueError) as exc:
        return Response("error", error=str(exc), exit_code=1)
    except InternalInvariantError as exc:
        return Response("error", error=f"internal invariant violation: {exc}", exit_code=2)


def _cmd_rank(req: Request):
    f = _parse_required_form(req)
    r, cert = complex_rank(f)
    result = {
        "form": render_form(f),
        "complex_rank": r,
        "certificate": cert.to_json(),
    }
    return result, _embedding_notes(f)


def _cmd_real_rank(req: Request):
    f = _parse_required_form(req)
    budget = SearchBudget(samples=int(req.options.get("budget_samples", 200)))
    cert = real_rank(f, budget)
    result: dict = {"form": render_form(f), "certificate": cert.to_json()}
    if cert.is_exact():
        result["real_rank"] = cert.value
    else:
        result["real_rank_in"] = [cert.lo, cert.hi]
    return result, _embedding_notes(f) + list(cert.diagnostics)


def _cmd_decompose(req: Request):
    f = _parse_required_form(req)
    precision = _resolve_precision(req.options)
    r, cert = complex_rank(f)
    dec = extract_decomposition(
        f,
        cert.witness,
        allow_numeric=bool(req.options.get("numeric_ok", False)),
        precision=precision,
    )
    verdict = verify_decomposition(dec, f)
    result = {
        "form": render_form(f),
        "complex_rank": r,
        "certificate": cert.to_json(),
        "decomposition": dec.to_json(),
        "verification": verdict.status,
    }
    notes = _embedding_notes(f)
    if not dec.exact:
        notes.append(f"numeric decomposition at {precision} bits")
    return result, notes


def _cmd_verify(req: Request):
    f = _parse_required_form(req)
    data = req.options.get("decomposition")
    if data is None:
        raise ValueError("verify needs a decomposition JSON object")
    precision = _resolve_precision(req.options)
    dec = decomposition_from_json(data, precision)
    verdict = verify_decomposition(dec, f)
    result: dict = {
        "form": render_form(f),
        "verdict": verdict.status,
        "honest": verdict.honest,
    }
    if verdict.diff is not None:
        result["diff"] = render_form(verdict.diff)
    if verdict.residual is not None:
        result["residual"] = mpmath.nstr(verdict.residual, 8)
    return result, _embedding_notes(f)


def _cmd_apolar(req: Request):
    f = _parse_required_form(req)
    pair = apolar_generators(f)
    result = {
        "form": render_form(f),
        "g1": render_form(pair.g1),
        "g2": render_form(pair.g2),
        "degrees": list(pair.degrees),
        "resultant": scalar_text(pair.resultant()),
    }
    return result, _embedding_notes(f)


def _cmd_kernel(req: Request):
    f = _parse_required_form(req)
    r = req.options.get("r")
    if r is None:
        raise ValueError("kernel needs --r")
    cat = build_catalecticant(f, int(r))
    kb = kernel(cat)
    result = {
        "form": render_form(f),
        "r": kb.r,
        "dim": kb.dim,
        "basis": [render_form(h) for h in kb.basis],
        "matrix": [[scalar_text(entry) for entry in row] for row in cat.matrix],
    }
    return result, _embedding_notes(f)


def _cmd_classify(req: Request):
    f = _parse_required_form(req)
    res = classify_small_rank(f)
    result: dict = {
        "form": render_form(f),
        "kind": res.kind,
        "rank": res.rank,
        "certificate": res.certificate.to_json(),
    }
    if res.u is not None:
        result["u"] = scalar_text(res.u)
    notes = _embedding_notes(f)
    if res.classification is not None:
        cls = res.classification
        result["classification"] = {
            "case": cls.case,
            "u": scalar_text(cls.u),
            "field": cls.field_description,
            "unique": cls.unique,
            "sylvester_form": render_form(cls.sylvester_form),
        }
        if cls.note:
            notes.append(cls.note)
    return result, notes


def _cmd_family(req: Request):
    which = req.options.get("family")
    if which == "flambda":
        k = int(req.options["k"])
        lam = Fraction(req.options["lambda"])
        form = gen_flambda(k, lam)
        lo, hi = flambda_real_bracket(k, lam)
        report = flambda_identity_check(k, lam, _resolve_precision(req.options))
        result = {
            "form": render_form(form),
            "k": k,
            "lambda": scalar_text(lam),
            "real_rank_bracket": [lo, hi],
            "identity": {
                "status": report.status,
                "mode": report.mode,
                "residual": mpmath.nstr(report.residual, 8) if report.residual is not None else None,
            },
            "gap_evidence": flambda_gap_evidence(k, lam),
        }
        return result, []
    if which == "pd":
        d = int(req.options["d"])
        gamma = Fraction(req.options["gamma"])
        fam = gen_pd(d, gamma)
        result = {
            "form": render_form(fam.form),
            "d": d,
            "gamma": scalar_text(gamma),
            "decomposition": fam.decomposition.to_json(),
        }
        return result, [fam.note] if fam.note else []
    raise ValueError("family must be 'flambda' or 'pd'")


def _cmd_gap_bound(req: Request):
    f = _parse_required_form(req)
    result = {"form": render_form(f), "gap_bound": descartes_gap_bound(f)}
    return result, []


_HANDLERS = {
    "rank": _cmd_rank,
    "real-rank": _cmd_real_rank,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "apolar": _cmd_apolar,
    "kernel": _cmd_kernel,
    "classify": _cmd_classify,
    "family": _cmd_family,
    "gap-bound": _cmd_gap_bound,
}


# ---------------------------------------------------------------------------
# batch mode
# ---------------------------------------------------------------------------


def run_batch(path: str, parallelism: int = 1) -> tuple[list[str], dict, int]:
    """Process newline-delimited JSON requests, order-preserving; malformed
    lines become per-line error responses without aborting the batch."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    jobs = [line for line in lines if line.strip()]

    def work(line: str) -> Response:
        try:
            req = Request.from_json(json.loads(line))
        except (json.JSONDecodeError, ValueError) as exc:
            return Response("error", error=f"malformed request: {exc}", exit_code=1)
        return run_command(req)

    if parallelism > 1 and len(jobs) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=parallelism) as pool:
            responses = list(pool.map(work, jobs))
    else:
        responses = [work(line) for line in jobs]
    out_lines = [_dump_json(resp.to_json()) for resp in responses]
    summary = {
        "ok": sum(1 for r in responses if r.status == "ok"),
        "error": sum(1 for r in responses if r.status == "error"),
    }
    return out_lines, summary, 0


# ---------------------------------------------------------------------------
# argument parsing and rendering
# ---------------------------------------------------------------------------


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="waring",
        description="Exact Waring ranks and power-sum decompositions of binary forms.",
    )
    parser.add_argument("--json", action="store_true", help="emit a single JSON response")
    parser.add_argument("--quiet", action="store_true", help="suppress diagnostics")
    sub = parser.add_subparsers(dest="command")

    def with_form(p):
        p.add_argument("form", help="binary form expression, e.g. 'x^4 + 4*x^2*y^2 + y^4'")
        return p

    with_form(sub.add_parser("rank", help="complex Waring rank with certificate"))
    p = with_form(sub.add_parser("real-rank", help="certified real Waring rank"))
    p.add_argument("--budget-samples", type=int, default=200)
    p.add_argument("--precision", type=int)
    p = with_form(sub.add_parser("decompose", help="explicit power-sum decomposition"))
    p.add_argument("--numeric-ok", action="store_true")
    p.add_argument("--precision", type=int)
    p = with_form(sub.add_parser("verify", help="verify a decomposition read from stdin"))
    p.add_argument("--precision", type=int)
    with_form(sub.add_parser("apolar", help="apolar ideal generator pair"))
    p = with_form(sub.add_parser("kernel", help="catalecticant kernel at a target length"))
    p.add_argument("--r", type=int, required=True)
    with_form(sub.add_parser("classify", help="rank-1/2/3 classification with field data"))
    fam = sub.add_parser("family", help="parametric family generators")
    fam_sub = fam.add_subparsers(dest="family_kind")
    p = fam_sub.add_parser("flambda")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--precision", type=int)
    p = fam_sub.add_parser("pd")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--gamma", required=True)
    with_form(sub.add_parser("gap-bound", help="vanishing-coefficient non-real-root bound"))
    p = sub.add_parser("batch", help="process newline-delimited JSON requests")
    p.add_argument("file")
    p.add_argument("--parallelism", type=int, default=1)
    return parser


def _request_from_args(args) -> Request:
    options: dict = {}
    if args.command == "real-rank":
        options = {"budget_samples": args.budget_samples, "precision": args.precision}
    elif args.command == "decompose":
        options = {"numeric_ok": args.numeric_ok, "precision": args.precision}
    elif args.command == "verify":
        options = {
            "precision": args.precision,
            "decomposition": json.loads(sys.stdin.read()),
        }
    elif args.command == "kernel":
        options = {"r": args.r}
    elif args.command == "family":
        if args.family_kind == "flambda":
            options = {
                "family": "flambda",
                "k": args.k,
                "lambda": args.lam,
                "precision": getattr(args, "precision", None),
            }
        elif args.family_kind == "pd":
            options = {"family": "pd", "d": args.d, "gamma": args.gamma}
        else:
            raise ValueError("family needs a subcommand: flambda or pd")
        return Request("family", None, options)
    form = getattr(args, "form", None)
    return Request(args.command, form, options)


def _human_lines(result: dict, indent: str = "") -> list[str]:
    lines = []
    for key in sorted(result):
        value = result[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_human_lines(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.extend(_human_lines(item, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


_VALUE_FLAGS = {
    "--r",
    "--budget-samples",
    "--precision",
    "--k",
    "--lambda",
    "--d",
    "--gamma",
    "--parallelism",
}


def _shield_negative_forms(argv: list[str]) -> list[str]:
    """Insert ``--`` before a positional that starts with a minus sign (a form
    such as ``-15*x^5 + ...``) so argparse does not read it as a flag."""
    if "--" in argv:
        return argv
    out: list[str] = []
    inserted = False
    for i, tok in enumerate(argv):
        if (
            not inserted
            and len(tok) > 1
            and tok.startswith("-")
            and not tok.startswith("--")
            and tok != "-h"
            and (i == 0 or argv[i - 1] not in _VALUE_FLAGS)
        ):
            out.append("--")
            inserted = True
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_shield_negative_forms(argv if argv is not None else sys.argv[1:]))
    if args.command is None:
        parser.print_help()
        return 1
    if args.command == "batch":
        try:
            out_lines, summary, code = run_batch(args.file, args.parallelism)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        for line in out_lines:
            print(line)
        print(_dump_json({"summary": summary}), file=sys.stderr)
        return code
    try:
        req = _request_from_args(args)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    resp = run_command(req)
    if args.json:
        print(_dump_json(resp.to_json()))
    else:
        if resp.status == "ok":
            for line in _human_lines(resp.result):
                print(line)
            if not args.quiet:
                for note in resp.diagnostics:
                    print(f"note: {note}")
        else:
            print(f"error: {resp.error}", file=sys.stderr)
    return resp.exit_code


if __name__ == "__main__":
    sys.exit(main())
