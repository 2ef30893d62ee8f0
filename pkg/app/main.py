"""Command-line entry point.

  python -m app rst count --mu bb
  python -m app poly R --mu os
  python -m app koorn K --lambda 10
  python -m app hecke verify --n 3 --trials 25 --seed 0
  python -m app asep stationary --n 2 --r 1 --params a=1/2,b=1/3,g=1/4,d=1/5,t=1/2
  python -m app verify-all --max-n 3 --seed 0

Results go to stdout, logs to stderr. Exit codes: 0 ok, 1 a check failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from dotenv import load_dotenv

load_dotenv()

from .config import settings  # noqa: E402
from .errors import EngineError  # noqa: E402
from .reporting import VerificationReport, as_frame  # noqa: E402

log = logging.getLogger("app")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


# -----------------------------
# Output helpers
# -----------------------------

def _emit(args: argparse.Namespace, text: str, payload: Any) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        print(text)


def _emit_reports(args: argparse.Namespace, reports: List[VerificationReport], informational: Sequence[VerificationReport] = ()) -> int:
    if args.json:
        payload = {
            "passed": all(r.passed for r in reports),
            "suites": [r.to_dict() for r in reports],
            "informational": [r.to_dict() for r in informational],
        }
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    else:
        for rep in reports:
            for line in rep.lines():
                print(f"[{rep.suite}] {line}")
        for rep in informational:
            print(f"{rep.summary_line()} (informational)")
        if len(reports) > 1:
            print(as_frame(reports).to_string(index=False))
        for rep in reports:
            print(rep.summary_line())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _merge(reports: List[VerificationReport]) -> List[VerificationReport]:
    """Collapse reports that share a suite name, keeping first-seen order."""
    out: Dict[str, VerificationReport] = {}
    for rep in reports:
        if rep.suite not in out:
            out[rep.suite] = VerificationReport(rep.suite)
        out[rep.suite].extend(rep)
    return list(out.values())


# -----------------------------
# rst / poly
# -----------------------------

def _word_arg(text: str):
    from .tableaux import InvalidWord, parse_word

    mu = parse_word(text)
    if not len(mu):
        raise InvalidWord("Empty word")
    return mu


def _tableau_arg(text: str, mu):
    """--tableau: JSON as printed by `rst list --json`, a compact mark string, or a file holding either."""
    from .tableaux import InvalidTableau, tableau_from_json, tableau_from_text

    path = Path(text)
    if len(text) < 256 and path.is_file():
        text = path.read_text(encoding="utf-8")
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidTableau(f"Bad tableau JSON: {e}") from e
        tab = tableau_from_json(obj)
    else:
        tab = tableau_from_text(mu, text)
    if tab.diagram.word != mu:
        raise InvalidTableau(f"Tableau is for {tab.diagram.word}, not {mu}")
    return tab


def cmd_rst(args: argparse.Namespace) -> int:
    from .tableaux import enumerate_tableaux, gen_R, tableau_to_json, weight
    from .tableaux.tableau import tableau_text

    mu = _word_arg(args.mu)
    if args.tableau is not None and args.action != "weight":
        raise EngineError("--tableau only goes with rst weight")
    if args.action == "count":
        count = gen_R(mu).tableaux
        _emit(args, str(count), {"word": str(mu), "count": count})
    elif args.action == "list":
        tabs = enumerate_tableaux(mu)
        lines = [f"{tableau_text(t)}  {weight(t)}" for t in tabs]
        _emit(args, "\n".join(lines), [tableau_to_json(t) for t in tabs])
    elif args.tableau is not None:
        tab = _tableau_arg(args.tableau, mu)
        _emit(args, str(weight(tab).value), tableau_to_json(tab))
    else:
        wc = gen_R(mu)
        lines = [f"{count} x {exps}" for exps, count in wc.monomials]
        _emit(args, "\n".join(lines), {"word": str(mu), "monomials": [[list(e), c] for e, c in wc.monomials]})
    return EXIT_OK


def cmd_poly(args: argparse.Namespace) -> int:
    from .tableaux import gen_R, gen_Rtilde, partition_Z, partition_Ztilde

    if args.which in ("R", "Rtilde"):
        if args.mu is None:
            raise EngineError(f"poly {args.which} needs --mu")
        mu = _word_arg(args.mu)
        value = gen_R(mu).value if args.which == "R" else gen_Rtilde(mu)
    else:
        if args.n is None or args.r is None:
            raise EngineError(f"poly {args.which} needs --n and --r")
        value = partition_Z(args.n, args.r).value if args.which == "Z" else partition_Ztilde(args.n, args.r)
    _emit(args, str(value), value.to_json())
    return EXIT_OK


# -----------------------------
# koorn
# -----------------------------

def cmd_koorn(args: argparse.Namespace) -> int:
    from .koornwinder import asep_poly_F, koornwinder_K, koornwinder_K_via_ek, koornwinder_q1, parse_partition
    from .koornwinder.symmetric import parse_shape

    if args.action == "F":
        if args.mu is None:
            raise EngineError("koorn F needs --mu")
        f = asep_poly_F(_word_arg(args.mu))
    elif args.action == "K":
        if args.shape:
            if args.n is None:
                raise EngineError("koorn K --shape needs --n")
            f = koornwinder_q1(parse_shape(args.shape), args.n)
        elif args.via == "ek":
            if args.n is None or args.r is None:
                raise EngineError("koorn K --via ek needs --n and --r")
            f = koornwinder_K_via_ek(args.n, args.r)
        else:
            if args.lam is None:
                raise EngineError("koorn K needs --lambda")
            f = koornwinder_K(parse_partition(args.lam))
    else:
        return _koorn_verify(args)
    _emit(args, str(f), f.to_json())
    return EXIT_OK


def _koorn_verify(args: argparse.Namespace) -> int:
    from .koornwinder import parse_partition, verify_eigen, verify_q1, verify_qkz, verify_structure, verify_ek_expansion
    from .koornwinder.symmetric import DEFAULT_SHAPES
    from .tableaux import parse_word

    suite = args.suite
    if suite == "qkz":
        if args.lam is None:
            raise EngineError("koorn verify qkz needs --lambda")
        lam = parse_partition(args.lam)
        points = 0 if lam.n <= settings.KOORN_SYMBOLIC_MAX_N else settings.KOORN_NUMERIC_POINTS
        rep = verify_qkz(lam, points=points, seed=args.seed)
    elif suite == "eigen":
        if args.delta is None:
            raise EngineError("koorn verify eigen needs --delta")
        rep = verify_eigen(tuple(parse_word(args.delta)))
    elif args.n is None:
        raise EngineError(f"koorn verify {suite} needs --n")
    elif suite == "structure":
        rep = verify_structure(args.n)
    elif suite == "ek":
        rep = verify_ek_expansion(args.n)
    else:
        rep = verify_q1(DEFAULT_SHAPES, args.n)
    return _emit_reports(args, [rep])


# -----------------------------
# hecke
# -----------------------------

def cmd_hecke(args: argparse.Namespace) -> int:
    from .hecke.verify import verify_hecke_relations, verify_placeholders, verify_y_commute

    n = args.n if args.n is not None else 2
    reports = [verify_hecke_relations(n, args.trials, args.degree, args.seed)]
    if args.placeholders:
        reports.append(verify_placeholders(n))
    if args.commute:
        reports.append(verify_y_commute(n, max(1, args.trials // 5), args.seed))
    return _emit_reports(args, _merge(reports))


# -----------------------------
# asep
# -----------------------------

def cmd_asep(args: argparse.Namespace) -> int:
    from .asep import build_generator, cross_validate, parse_params, sample_trajectory, stationary_exact

    if args.n is None or args.r is None:
        raise EngineError(f"asep {args.action} needs --n and --r")
    if args.action == "validate":
        return _emit_reports(args, [cross_validate(args.n, args.r, args.trials, args.seed)])
    if not args.params:
        raise EngineError(f"asep {args.action} needs --params")
    sector = build_generator(args.n, args.r, parse_params(args.params))
    if args.action == "stationary":
        dist = stationary_exact(sector)
        lines = [f"{label}  {dist[w]}" for label, w in zip(sector.labels(), sector.states)]
        _emit(args, "\n".join(lines), dist.to_json())
    else:
        freq = sample_trajectory(sector, args.steps, args.seed)
        _emit(args, freq.to_string(), {k: float(v) for k, v in freq.items()})
    return EXIT_OK


# -----------------------------
# verify-all
# -----------------------------

def run_verify_all(max_n: int, seed: int, fail_fast: bool = False) -> tuple:
    """All suites in dependency order. Returns (reports, informational reports)."""
    from .asep.crossval import verify_asep
    from .exactalg.checks import run_all
    from .hecke.verify import verify_hecke_relations, verify_placeholders, verify_y_commute
    from .koornwinder.eigen import verify_all_eigen
    from .koornwinder.family import verify_koornwinder, verify_structure
    from .koornwinder.symmetric import DEFAULT_SHAPES, verify_q1, verify_ek_expansion
    from .tableaux import check_reflection_symmetry, verify_matrix_ansatz, verify_validator
    from .tableaux.reference import verify_reference_values

    hecke_ns = range(2, max(2, min(max_n, 3)) + 1)
    stages: List[Callable[[], VerificationReport]] = [
        lambda: run_all(settings.FIELD_AXIOM_SAMPLES, seed),
        verify_reference_values,
        lambda: verify_validator(max_n),
        lambda: verify_matrix_ansatz(min(max_n, 3)),
    ]
    for n in hecke_ns:
        stages.append(lambda n=n: verify_hecke_relations(n, settings.HECKE_TRIALS, settings.HECKE_DEGREE_BOUND, seed))
        stages.append(lambda n=n: verify_placeholders(n))
        stages.append(lambda n=n: verify_y_commute(n, 3, seed))
    stages.append(lambda: verify_koornwinder(max_n, seed))
    stages.extend(lambda n=n: verify_structure(n) for n in range(1, max_n + 1))
    stages.append(lambda: verify_all_eigen(min(max_n, settings.KOORN_SYMBOLIC_MAX_N)))
    stages.extend(lambda n=n: verify_ek_expansion(n) for n in range(1, max_n + 1))
    stages.extend(lambda n=n: verify_q1(DEFAULT_SHAPES, n) for n in range(2, max_n + 1))
    stages.append(lambda: verify_asep(min(max_n, settings.ASEP_MAX_N), settings.ASEP_TRIALS, seed))

    reports: List[VerificationReport] = []
    for stage in stages:
        rep = stage()
        reports.append(rep)
        log.info("[verify-all] %s", rep.summary_line())
        if fail_fast and not rep.passed:
            break
    informational = [check_reflection_symmetry(min(max_n, 3))]
    return _merge(reports), informational


def cmd_verify_all(args: argparse.Namespace) -> int:
    reports, informational = run_verify_all(args.max_n, args.seed, args.fail_fast)
    return _emit_reports(args, reports, informational)


# -----------------------------
# Parser
# -----------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=settings.ENGINE_SEED)

    parser = argparse.ArgumentParser(prog="python -m app", description="Exact checks for open-boundary ASEP polynomials.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("rst", parents=[common], help="rhombic staircase tableaux")
    p.add_argument("action", choices=["count", "list", "weight"])
    p.add_argument("--mu", required=True)
    p.add_argument("--tableau", help="one filling to weigh: JSON, a mark string like a.d, or a file")
    p.set_defaults(func=cmd_rst)

    p = verbs.add_parser("poly", parents=[common], help="R, R~, Z, Z~")
    p.add_argument("which", choices=["R", "Rtilde", "Z", "Ztilde"])
    p.add_argument("--mu")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_poly)

    p = verbs.add_parser("koorn", parents=[common], help="F_mu, K_lambda and their suites")
    p.add_argument("action", choices=["F", "K", "verify"])
    p.add_argument("suite", nargs="?", choices=["qkz", "eigen", "structure", "ek", "q1"])
    p.add_argument("--mu")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--delta")
    p.add_argument("--via", choices=["orbit", "ek"], default="orbit")
    p.add_argument("--shape", help="partition for the q=1 expansion, e.g. 2,1")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_koorn)

    p = verbs.add_parser("hecke", parents=[common], help="Hecke relation suites")
    p.add_argument("action", choices=["verify"])
    p.add_argument("--n", type=int)
    p.add_argument("--trials", type=int, default=settings.HECKE_TRIALS)
    p.add_argument("--degree", type=int, default=settings.HECKE_DEGREE_BOUND)
    p.add_argument("--placeholders", action="store_true")
    p.add_argument("--commute", action="store_true")
    p.set_defaults(func=cmd_hecke)

    p = verbs.add_parser("asep", parents=[common], help="exact stationary distributions")
    p.add_argument("action", choices=["stationary", "validate", "sample"])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--params")
    p.add_argument("--trials", type=int, default=settings.ASEP_TRIALS)
    p.add_argument("--steps", type=int, default=settings.ASEP_MC_STEPS)
    p.set_defaults(func=cmd_asep)

    p = verbs.add_parser("verify-all", parents=[common], help="every suite in order")
    p.add_argument("--max-n", type=int, default=settings.VERIFY_MAX_N)
    p.add_argument("--fail-fast", action="store_true")
    p.set_defaults(func=cmd_verify_all)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if args.verb == "koorn" and args.action == "verify" and args.suite is None:
        parser.print_usage(sys.stderr)
        print("koorn verify needs a suite: qkz, eigen, structure, ek or q1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except EngineError as e:
        log.error("[cli] %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s %(message)s",
    )
    sys.exit(run())


if __name__ == "__main__":
    main()
