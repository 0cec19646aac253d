"""
Ligne de commande : table, search, code, norm-check, encode, simulate

Codes de sortie :
- 0 : succès / résultat certifié
- 2 : écart signalé ou résultat non certifié
- 1 : erreur d'usage ou de domaine

Éléments de O_F passés en paires "a,b" (base {1, ω_d}), rationnels en "num/den".
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import ValidationError

ROOT_DIR = Path(__file__).parent.parent.parent
sys.path.insert(0, str(ROOT_DIR))

from config.settings import CLI_CONFIG, NORM_CONFIG, SIM_CONFIG
from src.arithmetic import ParameterError, QuadPoly, RingElem, StbcError, to_rational
from src.codes import (
    CodeSpec,
    d1_readings,
    global_optimality,
    make_code,
    optimal_search,
    reproduce_table,
)
from src.norms import NormBudget, Verdict, decide_norm
from src.reports import ReportService
from src.simulation import SimConfig, run
from src.utils import setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = CLI_CONFIG["exit_ok"]
EXIT_ERROR = CLI_CONFIG["exit_error"]
EXIT_FLAGGED = CLI_CONFIG["exit_flagged"]


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser dont les erreurs d'usage sortent avec le code 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def parse_pair(text: str) -> Tuple[int, int]:
    """ "a,b" → (a, b) ; "a" → (a, 0) """
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return int(parts[0]), 0
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"paire entière 'a,b' attendue : {text!r}")


def parse_symbols(text: str) -> List[Tuple[int, int]]:
    """
    Quatre symboles de O_F :
    - "a,b,c,d" : entiers rationnels
    - "a,b;c,d;e,f;g,h" : paires dans la base {1, ω}
    (utiliser --symbols=... si le premier est négatif)
    """
    if ";" not in text:
        parts = text.split(",")
        if len(parts) != 4:
            raise argparse.ArgumentTypeError(f"4 entiers 'a,b,c,d' ou 4 paires séparées par ';' attendus : {text!r}")
        return [parse_pair(part.strip()) for part in parts]
    parts = [part.strip() for part in text.split(";")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"4 symboles séparés par ';' attendus : {text!r}")
    return [parse_pair(part) for part in parts]


def parse_rational(text: str):
    try:
        return to_rational(text)
    except ParameterError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_code_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--d", type=int, required=required, help="Paramètre du corps Q(√-d)")
    parser.add_argument("--p", type=parse_pair, required=required, help="Coefficient p en 'a,b'")
    parser.add_argument("--q", type=parse_pair, required=required, help="Coefficient q en 'a,b'")
    parser.add_argument("--gamma", type=parse_pair, required=required, help="γ en 'a,b'")


def _add_budget_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--radius", "--effort", dest="radius", type=parse_rational, default=None,
                        help=f"Rayon² de recherche de témoins (défaut {NORM_CONFIG['radius_sq']})")
    parser.add_argument("--denominators", type=int, nargs="+", default=None,
                        help=f"Dénominateurs des témoins (défaut {list(NORM_CONFIG['denominators'])})")


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(prog="stbc", description="Codes espace-temps 2×2 optimaux sur Q(√-d)")
    parser.add_argument("-v", "--verbose", action="store_true", help="Logs INFO sur stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    table = sub.add_parser("table", help="Reproduit la table des densités")
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--readings", action="store_true", help="Ajoute les lectures de la ligne Q(i)")
    table.add_argument("--output", type=Path, default=None)

    search = sub.add_parser("search", help="Recherche certifiée d'un code optimal")
    search.add_argument("--d", type=int, default=None)
    search.add_argument("--target", type=parse_rational, default=None, help="c_det réduit |γ|·|disc|")
    search.add_argument("--global", dest="global_", action="store_true", help="Optimalité sur tous les corps")
    search.add_argument("--include-boundary", action="store_true", help="Classes de p sur la borne de réduction")
    search.add_argument("--threads", type=int, default=None)
    _add_budget_arguments(search)

    code = sub.add_parser("code", help="Construit un code et son certificat")
    _add_code_arguments(code)
    _add_budget_arguments(code)
    code.add_argument("--output", type=Path, default=None)

    norm = sub.add_parser("norm-check", help="Statut de γ vis-à-vis de la norme relative")
    _add_code_arguments(norm)
    _add_budget_arguments(norm)

    enc = sub.add_parser("encode", help="Matrice d'un mot de code")
    enc.add_argument("--spec", type=Path, default=None, help="Fichier JSON produit par `code`")
    _add_code_arguments(enc, required=False)
    enc.add_argument("--symbols", type=parse_symbols, required=True, metavar="SYMBOLES",
                     help="'a,b,c,d' (entiers) ou 'a,b;c,d;e,f;g,h' (paires dans la base {1, ω})")
    enc.add_argument("--balanced", action="store_true", help="√γ sur les deux anti-diagonales")

    sim = sub.add_parser("simulate", help="Courbe CER(SNR) Monte Carlo")
    sim.add_argument("--spec", type=Path, default=None, help="Fichier JSON produit par `code`")
    _add_code_arguments(sim, required=False)
    sim.add_argument("--snr", type=float, nargs="+", default=list(SIM_CONFIG["default_snr_db"]))
    sim.add_argument("--trials", type=int, default=SIM_CONFIG["default_trials"])
    sim.add_argument("--seed", type=int, default=SIM_CONFIG["default_seed"])
    sim.add_argument("--box", type=int, default=1, help="Coordonnées des symboles dans [-box, box]")
    sim.add_argument("--alphabet", choices=["full", "rational"], default="rational",
                     help="rational : symboles entiers rationnels (box = 1 reste sous le plafond)")
    sim.add_argument("--balanced", action="store_true")
    sim.add_argument("--threads", type=int, default=None)
    sim.add_argument("--format", choices=["csv", "gnuplot"], default="csv")
    sim.add_argument("--output", type=Path, default=None)
    return parser


def _budget(args) -> NormBudget:
    return NormBudget(
        args.radius if args.radius is not None else NORM_CONFIG["radius_sq"],
        tuple(args.denominators) if args.denominators else NORM_CONFIG["denominators"],
    )


def _emit(text: str, output: Optional[Path] = None) -> None:
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    output.parent.mkdir(parents=True, exist_ok=True)
    output.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    logger.info("✅ Écrit : %s", output)


def _poly_and_gamma(args) -> Tuple[QuadPoly, RingElem]:
    if args.d is None or args.p is None or args.q is None or args.gamma is None:
        raise ParameterError("--spec ou bien --d, --p, --q et --gamma sont requis")
    return QuadPoly.from_pairs(args.d, args.p, args.q), RingElem(args.d, *args.gamma)


def _load_spec(args) -> CodeSpec:
    if args.spec is not None:
        return ReportService.load_code_spec(args.spec)
    poly, gamma = _poly_and_gamma(args)
    return make_code(args.d, poly, gamma)


def cmd_table(args) -> int:
    rows = reproduce_table()
    if args.format == "json":
        if args.readings:
            text = ReportService.to_json(ReportService.table_report(rows, d1_readings()))
        else:
            text = ReportService.to_json(ReportService.table_rows(rows))
    else:
        text = ReportService.to_csv(ReportService.table_frame(rows))
        if args.readings:
            text += "\n" + ReportService.to_csv(ReportService.readings_frame(d1_readings()))
    _emit(text, args.output)
    return EXIT_FLAGGED if any(row.flagged for row in rows) else EXIT_OK


def cmd_search(args) -> int:
    budget = _budget(args)
    include_boundary = True if args.include_boundary else None
    if args.global_:
        report = global_optimality(budget, include_boundary)
        _emit(ReportService.to_json(ReportService.global_report(report)))
        return EXIT_OK if report.certified else EXIT_FLAGGED
    if args.d is None or args.target is None:
        raise ParameterError("search : --d et --target requis (ou --global)")
    report = optimal_search(args.d, args.target, budget, include_boundary, args.threads)
    _emit(ReportService.to_json(ReportService.search_report(report)))
    return EXIT_OK if report.certified else EXIT_FLAGGED


def cmd_code(args) -> int:
    poly, gamma = _poly_and_gamma(args)
    spec = make_code(args.d, poly, gamma, _budget(args))
    _emit(ReportService.to_json(ReportService.code_spec(spec)), args.output)
    return EXIT_OK if spec.verified else EXIT_FLAGGED


def cmd_norm_check(args) -> int:
    poly, gamma = _poly_and_gamma(args)
    status = decide_norm(poly, gamma, _budget(args))
    _emit(ReportService.to_json(ReportService.norm_status(status)))
    return EXIT_FLAGGED if status.verdict is Verdict.UNKNOWN else EXIT_OK


def cmd_encode(args) -> int:
    spec = _load_spec(args)
    symbols = [RingElem(spec.d, a, b) for a, b in args.symbols]
    _emit(ReportService.to_json(ReportService.codeword(spec, symbols, args.balanced)))
    return EXIT_OK


def cmd_simulate(args) -> int:
    spec = _load_spec(args)
    config = SimConfig(
        spec=spec,
        symbol_box=args.box,
        snr_grid_db=tuple(args.snr),
        trials=args.trials,
        seed=args.seed,
        balanced=args.balanced,
        alphabet=args.alphabet,
        threads=args.threads,
    )
    result = run(config)
    if args.format == "gnuplot":
        text = ReportService.to_gnuplot(result)
    else:
        text = ReportService.to_csv(ReportService.sim_frame(result))
    _emit(text, args.output)
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "search": cmd_search,
    "code": cmd_code,
    "norm-check": cmd_norm_check,
    "encode": cmd_encode,
    "simulate": cmd_simulate,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except StbcError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValidationError) as e:
        print(f"❌ Fichier : {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
