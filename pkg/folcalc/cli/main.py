#!/usr/bin/env python3
# folcalc/cli/main.py
"""
CLI de folcalc.

    folcalc classify ejemplo.ini --json
    folcalc resolve a.ini b.ini --max-depth 4
    folcalc gauge-ode --s "1/(2*y)"

Varios archivos se procesan en un pool de hilos; los reportes salen en el
orden de entrada. El código de salida es el mayor de los reportes.
"""
import argparse
import json
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple

from folcalc.cli.commands import COMMAND_REGISTRY, Outcome
from folcalc.config import Config
from folcalc.errors import ConfigError, FolcalcError
from folcalc.parsing.document import load_document
from folcalc.reports import Report, Status
from folcalc.utils.logger import capture_warnings, set_level

logger = logging.getLogger(__name__)

_GLOBAL_OPTIONS = ("json", "config", "log_level")


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    """Opciones globales, aceptadas antes o después del subcomando."""
    common = argparse.ArgumentParser(add_help=False)
    default = argparse.SUPPRESS if suppress else None
    common.add_argument("--json", action="store_true", default=default if suppress else False,
                        help="Reporte en JSON")
    common.add_argument("--config", default=default, help="Archivo de configuración YAML o JSON")
    common.add_argument("--log-level", default=default, choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="folcalc",
        description="folcalc - Cálculo con foliaciones holomorfas polinomiales",
        parents=[_common_options(suppress=False)],
    )
    subparsers = parser.add_subparsers(dest="command", help="Comandos disponibles")
    for name, spec in COMMAND_REGISTRY.items():
        sub = subparsers.add_parser(name, help=spec["description"], parents=[_common_options(suppress=True)])
        if spec["files"]:
            sub.add_argument("files", nargs="+", help="Documentos de entrada (INI)")
        for flags, kwargs in spec["arguments"]:
            sub.add_argument(*flags, **kwargs)
    return parser


def _options_echo(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        key: value for key, value in vars(args).items()
        if key not in ("command", "files") + _GLOBAL_OPTIONS and value is not None
    }


def _finish(command: str, started: float, outcome: Outcome, warnings: List[str], echo: Dict[str, Any]) -> Report:
    return Report(
        command=command,
        inputs_echo=echo,
        result=outcome.result,
        warnings=list(warnings),
        timing_ms=(time.perf_counter() - started) * 1000.0,
        status=outcome.status,
    )


def _execute(args: argparse.Namespace, path: Optional[str]) -> Report:
    """
    Ejecuta el comando sobre un archivo (o sin archivo). Corre dentro de
    su propio colector de warnings: cada hilo del pool tiene su contexto.
    """
    spec = COMMAND_REGISTRY[args.command]
    echo: Dict[str, Any] = {"options": _options_echo(args), "config": Config.get_config_path()}
    started = time.perf_counter()
    with capture_warnings() as warnings:
        try:
            if path is None:
                outcome = spec["handler"](args)
            else:
                echo["file"] = path
                document = load_document(path)
                echo["sections"] = document.echo()
                outcome = spec["handler"](args, document)
            if isinstance(outcome, dict):
                outcome = Outcome(outcome)
            return _finish(args.command, started, outcome, warnings, echo)
        except FolcalcError as e:
            logger.info(f"{args.command}: {e.code}: {e.message}")
            report = Report.from_error(args.command, e, inputs_echo=echo, warnings=list(warnings))
        except Exception as e:
            logger.exception(f"Error inesperado en {args.command}")
            report = Report(
                command=args.command,
                inputs_echo=echo,
                warnings=list(warnings),
                status=Status.INVALID_INPUT,
                error={"code": "internal_error", "message": f"{type(e).__name__}: {e}"},
            )
    report.timing_ms = (time.perf_counter() - started) * 1000.0
    return report


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """
    Raises:
        SystemExit: Con código 2 si argparse rechaza los argumentos o falta el subcomando.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        raise SystemExit(2)
    return args


def execute(args: argparse.Namespace) -> List[Report]:
    """Ejecuta el comando ya interpretado y devuelve un reporte por archivo."""
    level = getattr(args, "log_level", None)
    try:
        Config.reload(getattr(args, "config", None))
        set_level(level or Config.get("LOG_LEVEL", "WARNING"))
    except ConfigError as e:
        return [Report.from_error(args.command, e)]

    files = getattr(args, "files", None)
    if not files:
        return [_execute(args, None)]
    workers = max(1, min(int(Config.get("WORKERS", 4)), len(files)))
    if workers == 1:
        return [_execute(args, path) for path in files]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda path: _execute(args, path), files))


def emit(reports: Sequence[Report], as_json: bool) -> None:
    if as_json:
        if len(reports) == 1:
            print(reports[0].to_json())
        else:
            payload = [r.model_dump(mode="json") for r in reports]
            print(json.dumps(payload, indent=2, ensure_ascii=False))
        return
    print("\n\n".join(r.to_text() for r in reports))


def run_command(argv: Optional[Sequence[str]] = None) -> Tuple[List[Report], int]:
    """
    Interpreta argv y ejecuta el comando.

    Returns:
        (reportes, código de salida): el código es el mayor de los reportes.
    """
    reports = execute(parse_arguments(argv))
    return reports, max(r.exit_code for r in reports)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Punto de entrada principal del CLI"""
    args = parse_arguments(argv)
    reports = execute(args)
    emit(reports, args.json)
    return max(r.exit_code for r in reports)


if __name__ == "__main__":
    sys.exit(main())
