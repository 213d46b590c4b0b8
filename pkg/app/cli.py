"""
Command-line interface for the modular forms workbench

Subcommands: space | verify | lfunction | word | cache. Reports go to stdout
(sorted-key JSON, one object per line, or text); logs go to stderr and the
log file. Exit codes: 0 pass, 1 verification failure, 2 usage error,
3 precision or capacity error.
"""
import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from pydantic import ValidationError

# Add project root directory to Python path
sys.path.append(str(Path(__file__).parent.parent))
from src.analytic import (
    functional_equation_residuals,
    verify_chi_automorphy,
    verify_corollary_1_4,
    verify_fricke,
    verify_involution_conjugation,
    verify_prime_level_fricke,
)
from src.config import Config, RunConfig
from src.exactseries import render
from src.generators import CharacterLabel, FormSpace, GroupLabel, SpaceKind, build_space, resolve_precision
from src.heckeforms import (
    newspace,
    newspace_level4,
    verify_lemma_1_1,
    verify_lemma_3_1,
    verify_structure,
    verify_theorem_1_2,
)
from src.sl2words import (
    Character,
    char_eval,
    decompose_gamma0_4,
    format_gamma0_4_word,
    format_value,
    format_word,
    matrix_to_word,
    parse_matrix,
    verify_lemma_2_1,
    verify_prop_2_2,
)
from src.store import cache_key, get_form_cache
from src.utils.errors import ModularFormsError, PrecisionError, UnsupportedSpace
from src.utils.logging_config import get_logger, set_console_level
from src.utils.reports import VerificationReport

# Initialize logger
logger = get_logger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3

WEIGHT_BOUNDS = (2, 200)

EXACT_TARGETS = ("lemma-3-1", "theorem-1-2", "lemma-1-1", "structure")
WEIGHTLESS_TARGETS = ("lemma-2-1", "prop-2-2")
DEFAULT_WEIGHTS = {
    "lemma-3-1": "6..24",
    "theorem-1-2": "6..24",
    "lemma-1-1": "6..24",
    "structure": "6..24",
    "theorem-1-3": "6,10,12",
    "corollary-1-4": "6",
    "chi-automorphy": "6,10,12",
    "corollary-2-3": "6,10,12",
    "fricke-prime": "8,10,12",
}
TARGETS = WEIGHTLESS_TARGETS + tuple(DEFAULT_WEIGHTS)


class UsageError(ModularFormsError):
    """Malformed command-line input"""


def parse_weights(text: str) -> List[int]:
    """
    Parse "6..24" (inclusive, step 2) or "6,10,12" into a list of weights

    Raises:
        UsageError: On malformed text, odd weights or weights out of bounds
    """
    try:
        if ".." in text:
            start, stop = (int(part) for part in text.split("..", 1))
            weights = list(range(start, stop + 1, 2))
        else:
            weights = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"Cannot parse weights {text!r}; use 6..24 or 6,10,12")
    if not weights:
        raise UsageError(f"No weights in {text!r}")
    for k in weights:
        if k % 2:
            raise UsageError(f"Weight {k} is odd; the theory assumes k is an even positive integer")
        if not WEIGHT_BOUNDS[0] <= k <= WEIGHT_BOUNDS[1]:
            raise UsageError(f"Weight {k} is outside the supported range {WEIGHT_BOUNDS}")
    return sorted(set(weights))


def parse_points(text: str) -> List[complex]:
    """Comma-separated complex numbers such as "2,3,3+2j" """
    try:
        return [complex(part.replace(" ", "").replace("i", "j")) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"Cannot parse points {text!r}; use e.g. 2,3,3+2j")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, help="Precision override in twice-exponent units")
    common.add_argument("--terms", type=int, help="Terms for numerical evaluation, or the anchor cutoff of corollary-1-4")
    common.add_argument("--tol", type=float, default=Config.DEFAULT_TOLERANCE, help="Residual tolerance")
    common.add_argument("--seed", type=int, default=Config.DEFAULT_SEED, help="Seed for sample points")
    common.add_argument("--cache-dir", type=Path, default=Config.CACHE_DIR, help="Form space cache directory")
    common.add_argument("--no-cache", action="store_true", help="Neither read nor write the cache")
    common.add_argument("--format", choices=("json", "text"), default="json", dest="output_format")
    common.add_argument("--strict", action="store_true", help="Fail on control or residual violations")
    common.add_argument("-v", "--verbose", action="store_true", help="Log progress to stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="modforms",
        description="Exact and numerical checks for level-4 newforms and the character chi of SL2(Z).",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    space = commands.add_parser("space", parents=[common], help="Print an echelon basis")
    space.add_argument("--group", choices=[g.value for g in GroupLabel], required=True)
    space.add_argument("--weight", type=int, required=True)
    space.add_argument("--character", choices=[c.value for c in CharacterLabel], default=CharacterLabel.TRIVIAL.value)
    space.add_argument("--kind", choices=[SpaceKind.M.value, SpaceKind.S.value, SpaceKind.SNEW.value], default="S")

    verify = commands.add_parser("verify", parents=[common], help="Run verification reports")
    verify.add_argument("target", choices=TARGETS)
    verify.add_argument("--weights", help="Weights as 6..24 or 6,10,12")

    lfunction = commands.add_parser("lfunction", parents=[common], help="Tabulate Lambda(s) and Lambda(k-s)")
    lfunction.add_argument("--weight", type=int, required=True)
    lfunction.add_argument("--s", dest="points", default=None, help="Points as 2,3,3+2j")
    lfunction.add_argument("--eps", type=int, choices=(1, -1), default=-1, help="Assumed Fricke sign")

    word = commands.add_parser("word", parents=[common], help="Words and character values of matrices")
    word.add_argument("action", choices=("decompose", "eval-char", "gamma04-decompose"))
    word.add_argument("matrix", help='Matrix text "[[a,b],[c,d]]"')
    word.add_argument("--chi", type=int, default=3, help="Character exponent a with chi(T) = zeta6^a")

    cache = commands.add_parser("cache", parents=[common], help="Inspect the form space cache")
    cache.add_argument("action", choices=("list", "clear"))
    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        precision=args.precision,
        terms=args.terms,
        tolerance=args.tol,
        cache_dir=args.cache_dir,
        use_cache=not args.no_cache,
        seed=args.seed,
        output_format=args.output_format,
        strict=args.strict,
    )


def emit(payload: Dict, text: str, run: RunConfig) -> None:
    print(json.dumps(payload, sort_keys=True) if run.output_format == "json" else text)


# ------------------------------------------------------------------- space

def load_space(group: GroupLabel, k: int, character: CharacterLabel, kind: SpaceKind, run: RunConfig) -> FormSpace:
    """
    Build or fetch a space through the cache

    Raises:
        UnsupportedSpace: For combinations this workbench does not build
    """
    if character is CharacterLabel.CHI and (group is not GroupLabel.SL2Z or kind is not SpaceKind.S):
        raise UnsupportedSpace("The chi space is built only as S on sl2z")
    if kind is SpaceKind.SNEW and group is GroupLabel.SL2Z:
        raise UnsupportedSpace("Level 1 has no oldforms; use --kind S")
    _, precision = resolve_precision(group, k, run.precision, character)
    cache = get_form_cache(run.cache_dir, run.use_cache)
    key = cache_key(group, k, character, kind, precision)
    if kind is SpaceKind.SNEW:
        return cache.get_or_build(key, lambda: newspace(group, k, precision))
    return cache.get_or_build(key, lambda: build_space(group, k, kind, character, precision))


def cmd_space(args: argparse.Namespace, run: RunConfig) -> int:
    group = GroupLabel(args.group)
    character = CharacterLabel(args.character)
    kind = SpaceKind(args.kind)
    space = load_space(group, args.weight, character, kind, run)
    lines = [f"{group.value} k={space.weight} {character.value} {kind.value}: dimension {space.dim}"]
    lines += [f"  {render(f)}" for f in space.basis]
    emit(space.to_json(), "\n".join(lines), run)
    return EXIT_PASS


# ------------------------------------------------------------------ verify

def run_target(target: str, run: RunConfig, k: int) -> VerificationReport:
    """
    One weight of a verify target

    Picklable for worker processes; each worker has its own mpmath context.
    """
    if target == "lemma-3-1":
        return verify_lemma_3_1(k, run.precision)
    if target == "theorem-1-2":
        return verify_theorem_1_2(k, run.precision)
    if target == "lemma-1-1":
        return verify_lemma_1_1(k, precision=run.precision)
    if target == "structure":
        return verify_structure(k, run.precision)
    if target == "corollary-1-4":
        return verify_corollary_1_4(k, tol=run.tolerance, anchor_terms=run.terms, precision=run.precision)
    numeric = {
        "theorem-1-3": verify_fricke,
        "chi-automorphy": verify_chi_automorphy,
        "corollary-2-3": verify_involution_conjugation,
        "fricke-prime": verify_prime_level_fricke,
    }
    return numeric[target](k, terms=run.terms, tol=run.tolerance, seed=run.seed)


def run_weights(target: str, run: RunConfig, weights: Sequence[int]) -> List[VerificationReport]:
    """Reports for each weight, in the order given"""
    if len(weights) == 1:
        return [run_target(target, run, weights[0])]
    workers = min(Config.MAX_WORKERS, len(weights))
    # map keeps weight order
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(partial(run_target, target, run), weights))


def cmd_verify(args: argparse.Namespace, run: RunConfig) -> int:
    if args.target == "lemma-2-1":
        reports = [verify_lemma_2_1(run.seed)]
    elif args.target == "prop-2-2":
        reports = [verify_prop_2_2(run.seed)]
    else:
        weights = parse_weights(args.weights or DEFAULT_WEIGHTS[args.target])
        reports = run_weights(args.target, run, weights)
    for report in reports:
        print(report.to_json() if run.output_format == "json" else report.to_text())
    failed = [report for report in reports if not report.passed]
    if failed:
        logger.warning(f"⚠️ {len(failed)} of {len(reports)} {args.target} reports failed")
        return EXIT_FAIL
    return EXIT_PASS


# --------------------------------------------------------------- lfunction

def cmd_lfunction(args: argparse.Namespace, run: RunConfig) -> int:
    k = args.weight
    parse_weights(str(k))
    space = newspace_level4(k)
    if not space.dim:
        raise UnsupportedSpace(f"The level-4 newspace of weight {k} is empty")
    points = parse_points(args.points) if args.points else [complex(k // 2 - 1), complex(k // 2), complex(k // 2, 2)]
    rows = []
    for index, g in enumerate(space.basis):
        for s, left, right, residual in functional_equation_residuals(g, k, points, args.eps):
            rows.append({
                "form": f"g{index}",
                "s": [s.real, s.imag],
                "lambda_s": [left.real, left.imag],
                "lambda_k_minus_s": [right.real, right.imag],
                "residual": residual,
            })
    passed = all(row["residual"] < run.tolerance for row in rows)
    payload = {"weight": k, "eps": args.eps, "tolerance": run.tolerance, "pass": passed, "rows": rows}
    lines = [
        f"{row['form']} s={complex(*row['s'])}: Lambda(s)={complex(*row['lambda_s']):.12g} "
        f"Lambda(k-s)={complex(*row['lambda_k_minus_s']):.12g} residual={row['residual']:.3e}"
        for row in rows
    ]
    emit(payload, "\n".join(lines), run)
    return EXIT_FAIL if run.strict and not passed else EXIT_PASS


# -------------------------------------------------------------------- word

def cmd_word(args: argparse.Namespace, run: RunConfig) -> int:
    matrix = parse_matrix(args.matrix)
    if args.action == "decompose":
        result = format_word(matrix_to_word(matrix))
    elif args.action == "eval-char":
        result = format_value(char_eval(Character(args.chi), matrix))
    else:
        result = format_gamma0_4_word(decompose_gamma0_4(matrix))
    emit({"action": args.action, "matrix": str(matrix), "result": result}, result, run)
    return EXIT_PASS


# ------------------------------------------------------------------- cache

def cmd_cache(args: argparse.Namespace, run: RunConfig) -> int:
    cache = get_form_cache(run.cache_dir)
    if args.action == "list":
        keys = cache.list()
        emit({"entries": keys}, "\n".join(keys), run)
    else:
        removed = cache.clear()
        emit({"removed": removed}, f"Removed {removed} entries", run)
    return EXIT_PASS


COMMANDS = {
    "space": cmd_space,
    "verify": cmd_verify,
    "lfunction": cmd_lfunction,
    "word": cmd_word,
    "cache": cmd_cache,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_PASS
    if args.verbose:
        set_console_level("INFO")
    try:
        run = run_config(args)
        return COMMANDS[args.command](args, run)
    except ValidationError as e:
        print(f"❌ Invalid options: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PrecisionError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_PRECISION
    except ModularFormsError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
