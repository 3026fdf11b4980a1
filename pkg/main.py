#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
HammingBand - båndbredde for Hamming-grafer
"""

import sys
import logging
import argparse
from typing import Dict, List, Optional

import yaml

from arrangement.arrangement import is_monotonic, spread
from arrangement.serialization import dumps, read_arrangement, to_csv, write_arrangement
from arrangement.shape import normalize_dims
from bounds.bounds import compute_report, general_lower_bound, general_upper_bound
from construct.builder import ArrangementBuilder
from core.config import load_config
from core.exceptions import (
    BudgetExceededError,
    ConstructionError,
    HammingBandwidthError,
    ShapeMismatchError,
)
from core.logger import parse_level, setup_logger
from hypercube.numbering import align_max_edges_to_dim1, harper_numbering
from oracle.solver import ExactSolver
from reporting.report_generator import ReportGenerator

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

class HammingBand:
    """Hovedklasse for HammingBand."""

    def __init__(self, config: Dict):
        """
        Initialiserer HammingBand.

        Args:
            config (Dict): Full konfigurasjon
        """
        self.logger = logging.getLogger(__name__)
        self.config = config

        self.max_dimension = config['hypercube'].get('max_dimension', 20)
        self.builder = ArrangementBuilder(config['construction'], self.max_dimension)
        self.solver = ExactSolver(config['oracle'])
        self.report_generator = ReportGenerator(config['reporting'], self.builder)

    def run(self, args: argparse.Namespace) -> int:
        """
        Kjører en underkommando.

        Args:
            args (argparse.Namespace): Tolkede argumenter

        Returns:
            int: Avslutningskode
        """
        handler = getattr(self, f'_cmd_{args.command}')
        try:
            return handler(args)
        except BudgetExceededError as e:
            self.logger.error(f"Budsjett brukt opp: {str(e)}")
            if e.best is not None:
                self._emit(e.best.to_dict())
            return EXIT_FAILED
        except ConstructionError as e:
            self.logger.error(f"Konstruksjonsfeil: {str(e)}")
            return EXIT_FAILED
        except HammingBandwidthError as e:
            self.logger.error(f"Ugyldig inndata: {str(e)}")
            return EXIT_INPUT
        except OSError as e:
            self.logger.error(f"Feil ved lesing eller skriving av fil: {str(e)}")
            return EXIT_INPUT

    def _emit(self, payload) -> None:
        print(dumps(payload))

    def _cmd_bounds(self, args: argparse.Namespace) -> int:
        shape = normalize_dims(args.dims)
        measured = None
        if shape.volume <= self.builder.max_volume:
            measured = self.builder.construct(shape).measured_spread
        payload = compute_report(shape, measured).to_dict()
        if args.general_bounds and shape.d >= 2:
            payload['general_lower'] = general_lower_bound(shape)
            payload['general_upper'] = general_upper_bound(shape)
        self._emit(payload)
        return EXIT_OK

    def _cmd_construct(self, args: argparse.Namespace) -> int:
        shape = normalize_dims(args.dims)
        result = self.builder.construct(shape)
        if args.out:
            write_arrangement(result.arrangement, args.out, args.format)
        if args.format == 'csv' and not args.out:
            # Matrisen alene på stdout; spredningen går til loggen
            self.logger.info(f"Spredning for {shape}: {result.measured_spread} i [{result.lower}, {result.upper}]")
            sys.stdout.write(to_csv(result.arrangement))
        else:
            self._emit(result.to_dict())
        return EXIT_OK

    def _cmd_spread(self, args: argparse.Namespace) -> int:
        arrangement = read_arrangement(args.input_path, args.format)
        self._emit({'shape': arrangement.shape.to_list(), 'spread': spread(arrangement)})
        return EXIT_OK

    def _cmd_verify(self, args: argparse.Namespace) -> int:
        arrangement = read_arrangement(args.input_path, args.format)
        if args.shape:
            expected = normalize_dims(args.shape)
            if expected != arrangement.shape:
                raise ShapeMismatchError(f"Filen har form {arrangement.shape}, forventet {expected}")

        measured = spread(arrangement)
        report = compute_report(arrangement.shape)
        within = report.lower <= measured <= report.upper_formula
        self._emit({
            'shape': arrangement.shape.to_list(),
            'valid': True,
            'monotonic': is_monotonic(arrangement),
            'spread': measured,
            'lower': report.lower,
            'upper': report.upper_formula,
            'within_bracket': within,
        })
        if not within:
            self.logger.error(f"Spredning {measured} ligger utenfor [{report.lower}, {report.upper_formula}]")
            return EXIT_FAILED
        return EXIT_OK

    def _cmd_exact(self, args: argparse.Namespace) -> int:
        shape = normalize_dims(args.dims)
        if args.unrestricted:
            result = self.solver.exact_min_spread_unrestricted(shape, args.budget)
        else:
            result = self.solver.exact_min_spread(shape, args.budget)
        self._emit(result.to_dict())
        return EXIT_OK

    def _cmd_count(self, args: argparse.Namespace) -> int:
        shape = normalize_dims(args.dims)
        count = self.solver.count_linear_extensions(shape)
        self._emit({
            'shape': shape.to_list(),
            'linear_extensions': count,
            'saturated': count >= self.solver.max_count,
        })
        return EXIT_OK

    def _cmd_hypercube(self, args: argparse.Namespace) -> int:
        numbering = harper_numbering(args.d, self.max_dimension)
        if args.aligned:
            numbering = align_max_edges_to_dim1(numbering)
        self._emit(numbering.bit_strings())
        return EXIT_OK

    def _cmd_report(self, args: argparse.Namespace) -> int:
        if args.out_dir:
            self.report_generator.report_dir = args.out_dir
        table = self.report_generator.build_table(args.dimension, args.max_size)
        path = self.report_generator.generate_report(table, args.dimension, args.max_size)
        self._emit({'report': path, 'rows': len(table)})
        return EXIT_OK

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' er ikke et heltall")
    if value < 1:
        raise argparse.ArgumentTypeError(f"'{text}' er ikke positivt")
    return value

def build_parser() -> argparse.ArgumentParser:
    """Bygger argumentparseren med alle underkommandoer."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="Sti til konfigurasjonsfil (leses bare når den er gitt)")
    common.add_argument("--debug", action="store_true", help="Aktiver debug-logging")
    common.add_argument("--log-file", help="Skriv logg også til fil")
    common.add_argument("--format", choices=['json', 'csv'], help="Filformat for arrangementer")

    parser = argparse.ArgumentParser(description="HammingBand - båndbredde for Hamming-grafer")
    commands = parser.add_subparsers(dest="command", required=True)

    bounds = commands.add_parser("bounds", parents=[common], help="Skriv ut nedre og øvre grense")
    bounds.add_argument("dims", nargs="+", type=_positive_int)
    bounds.add_argument("--general-bounds", action="store_true", help="Vis også de generelle d-dimensjonale formlene")

    construct = commands.add_parser("construct", parents=[common], help="Konstruer et arrangement")
    construct.add_argument("dims", nargs="+", type=_positive_int)
    construct.add_argument("--out", help="Skriv arrangementet til fil")

    spread_cmd = commands.add_parser("spread", parents=[common], help="Regn ut spredningen til et lagret arrangement")
    spread_cmd.add_argument("--in", dest="input_path", required=True, help="Arrangementfil")

    verify = commands.add_parser("verify", parents=[common], help="Valider et arrangement mot grensene")
    verify.add_argument("--in", dest="input_path", required=True, help="Arrangementfil")
    verify.add_argument("--shape", nargs="+", type=_positive_int, help="Forventet form")

    exact = commands.add_parser("exact", parents=[common], help="Finn minste spredning ved fullt søk")
    exact.add_argument("dims", nargs="+", type=_positive_int)
    exact.add_argument("--budget", type=_positive_int, help="Største antall søkenoder")
    exact.add_argument("--unrestricted", action="store_true", help="Søk også blant ikke-monotone arrangementer")

    count = commands.add_parser("count", parents=[common], help="Tell monotone arrangementer")
    count.add_argument("dims", nargs="+", type=_positive_int)

    hypercube = commands.add_parser("hypercube", parents=[common], help="Skriv ut Harper-nummereringen av K_2^d")
    hypercube.add_argument("d", type=_positive_int)
    hypercube.add_argument("--aligned", action="store_true", help="Juster største kanter til dimensjon 1")

    report = commands.add_parser("report", parents=[common], help="Skriv grenserapport for alle former")
    report.add_argument("dimension", type=_positive_int)
    report.add_argument("max_size", type=_positive_int)
    report.add_argument("--out-dir", help="Mappe for rapporten")

    return parser

def main(argv: Optional[List[str]] = None) -> int:
    """Hovedfunksjon."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT

    try:
        config = load_config(args.config)
    except (OSError, ValueError, yaml.YAMLError) as e:
        logging.error(f"Feil ved lasting av konfigurasjon: {str(e)}")
        return EXIT_INPUT

    # Sett opp logging
    level = logging.DEBUG if args.debug else parse_level(config['logging'].get('level', 'info'))
    setup_logger(level, args.log_file or config['logging'].get('file'))

    try:
        app = HammingBand(config)
    except HammingBandwidthError as e:
        logging.error(f"Ugyldig konfigurasjon: {str(e)}")
        return EXIT_INPUT
    return app.run(args)

if __name__ == "__main__":
    sys.exit(main())
