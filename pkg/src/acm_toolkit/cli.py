"""The ``acm`` command: validate, transform, instantiate, report and evaluate.

Command output goes to stdout, logs and audit events to stderr. Exit codes
follow ``ExitCode``: 0 success, 1 validation errors (or root claims that do
not hold), 2 usage or input errors, 3 a transformation, instantiation or
evaluation that could not be carried out.
"""

import argparse
import asyncio
import json
import logging
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .audit import audit_event
from .config import config, configure_logging
from .core.exceptions import AcmError, InterchangeError, SchemaError
from .core.types import ClaimStatus, ExitCode, Notation, Severity
from .instantiate import BindingTable, instantiate, verify_instantiation
from .interchange import dumps, load_file, parse_json, save_file, write_bytes
from .model.argumentation import ArgumentPackage
from .model.document import ModelDocument
from .report import ReportOptions, render
from .transform import cae_to_sacm, gsn_to_sacm
from .validate import Diagnostic, check, evaluate, has_errors
from .validate.evaluate import HOLDS

logger = logging.getLogger(__name__)

TRACE_SUFFIX = ".trace.json"

_COLORS = {"red": "31", "green": "32", "yellow": "33"}


def _use_color() -> bool:
    return not config.no_color and sys.stdout.isatty()


def _style(text: str, color: str) -> str:
    if not _use_color():
        return text
    return f"\033[{_COLORS[color]}m{text}\033[0m"


def _diagnostic_line(diagnostic: Diagnostic) -> str:
    color = "red" if diagnostic.severity == Severity.ERROR else "yellow"
    return _style(diagnostic.to_line(), color)


def _fail(message: str, code: ExitCode) -> int:
    print(f"acm: {message}", file=sys.stderr)
    return int(code)


def _input_failure(exc: Exception) -> int:
    return _fail(str(exc), ExitCode.USAGE_ERROR)


# =============================================================================
# validate
# =============================================================================
@dataclass
class _Checked:
    path: str
    notation: str = ""
    diagnostics: list[Diagnostic] = field(default_factory=list)
    error: str | None = None

    def to_dict(self) -> dict[str, object]:
        result: dict[str, object] = {"path": self.path}
        if self.error is not None:
            result["error"] = self.error
        else:
            result["notation"] = self.notation
            result["diagnostics"] = [d.to_dict() for d in self.diagnostics]
        return result


def _check_file(path: str, notation: str | None) -> _Checked:
    try:
        doc = load_file(path, check_references=False)
    except (InterchangeError, OSError) as exc:
        return _Checked(path, error=str(exc))
    if notation is not None and doc.notation != Notation(notation):
        return _Checked(path, error=f"{path} is a {doc.notation} document, not {notation}")
    return _Checked(path, str(doc.notation), check(doc))


async def _check_files(paths: Sequence[str], notation: str | None) -> list[_Checked]:
    """One document per task, at most ``config.max_workers`` at a time; input order kept."""
    semaphore = asyncio.Semaphore(config.max_workers)

    async def _one(path: str) -> _Checked:
        async with semaphore:
            return await asyncio.to_thread(_check_file, path, notation)

    return list(await asyncio.gather(*(_one(p) for p in paths)))


def cmd_validate(args: argparse.Namespace) -> int:
    audit_event("command", command="validate", paths=list(args.paths))
    results = asyncio.run(_check_files(args.paths, args.notation))
    if args.format == "json":
        payload = [r.to_dict() for r in results]
        sys.stdout.write(dumps(payload[0] if len(payload) == 1 else payload).decode("utf-8"))
    else:
        for result in results:
            prefix = f"{result.path}: " if len(results) > 1 else ""
            if result.error is not None:
                print(f"acm: {result.error}", file=sys.stderr)
                continue
            for diagnostic in result.diagnostics:
                print(prefix + _diagnostic_line(diagnostic))
    if any(r.error is not None for r in results):
        return int(ExitCode.USAGE_ERROR)
    if any(has_errors(r.diagnostics) for r in results):
        return int(ExitCode.VALIDATION_ERRORS)
    return int(ExitCode.SUCCESS)


# =============================================================================
# transform
# =============================================================================
def cmd_transform(args: argparse.Namespace) -> int:
    audit_event("command", command="transform", path=args.path, source=args.source)
    try:
        doc = load_file(args.path)
    except (InterchangeError, OSError) as exc:
        return _input_failure(exc)
    if doc.notation != Notation(args.source):
        message = f"{args.path} is a {doc.notation} document, not {args.source}"
        return _fail(message, ExitCode.USAGE_ERROR)
    transform = gsn_to_sacm if args.source == "gsn" else cae_to_sacm
    try:
        result = transform(doc)
    except AcmError as exc:
        for diagnostic in getattr(exc, "diagnostics", []):
            print(_diagnostic_line(diagnostic))
        return _fail(str(exc), ExitCode.OPERATION_FAILED)
    trace_path = args.out + TRACE_SUFFIX
    try:
        save_file(result.document, args.out)
        write_bytes(trace_path, dumps(result.trace_dict()))
    except (InterchangeError, OSError) as exc:
        return _input_failure(exc)
    print(f"{args.out}: {len(result.document)} elements, {len(result.links)} trace links")
    return int(ExitCode.SUCCESS)


# =============================================================================
# instantiate
# =============================================================================
def _pattern_gid(doc: ModelDocument) -> str:
    """The only abstract root argument package, else the only argument package."""
    packages = [p for p in doc.roots() if isinstance(p, ArgumentPackage)]
    abstract = [p for p in packages if p.is_abstract]
    for candidates in (abstract, packages):
        if len(candidates) == 1:
            return candidates[0].gid
    raise SchemaError("$", "cannot tell which package is the pattern; pass --pattern")


def cmd_instantiate(args: argparse.Namespace) -> int:
    audit_event("command", command="instantiate", path=args.path, bindings=args.bindings)
    try:
        doc = load_file(args.path)
        table = BindingTable.from_json(Path(args.bindings).read_bytes())
        pattern = args.pattern or _pattern_gid(doc)
    except (InterchangeError, OSError) as exc:
        return _input_failure(exc)
    try:
        result = instantiate(doc, pattern, table, args.suffix)
    except AcmError as exc:
        return _fail(str(exc), ExitCode.OPERATION_FAILED)
    try:
        save_file(result.document, args.out)
    except (InterchangeError, OSError) as exc:
        return _input_failure(exc)
    diagnostics = verify_instantiation(result.document, result.package_gid, pattern)
    for diagnostic in diagnostics:
        print(_diagnostic_line(diagnostic))
    print(f"{args.out}: {result.package_gid} from {pattern}, {len(result.links)} elements")
    return int(ExitCode.VALIDATION_ERRORS if diagnostics else ExitCode.SUCCESS)


# =============================================================================
# evaluate / report
# =============================================================================
def _load_evidence(path: str) -> dict[str, bool]:
    data = parse_json(Path(path).read_bytes())
    if not isinstance(data, dict):
        raise SchemaError("$", "evidence must be an object mapping gids to booleans")
    for gid, valid in data.items():
        if not isinstance(valid, bool):
            raise SchemaError(f"$.{gid}", "expected true or false")
    return data


def _status_text(status: ClaimStatus) -> str:
    return _style(str(status), "green" if status in HOLDS else "red")


def cmd_evaluate(args: argparse.Namespace) -> int:
    audit_event("command", command="evaluate", path=args.path, evidence=args.evidence)
    try:
        doc = load_file(args.path)
        evidence = _load_evidence(args.evidence)
    except (InterchangeError, OSError) as exc:
        return _input_failure(exc)
    try:
        evaluation = evaluate(doc, evidence)
    except AcmError as exc:
        for diagnostic in getattr(exc, "diagnostics", []):
            print(_diagnostic_line(diagnostic))
        return _fail(str(exc), ExitCode.VALIDATION_ERRORS)
    if args.format == "json":
        payload = {**evaluation.to_dict(), "roots_hold": evaluation.roots_hold}
        sys.stdout.write(dumps(payload).decode("utf-8"))
    else:
        width = max((len(gid) for gid in evaluation.statuses), default=0)
        for gid, status in evaluation.statuses.items():
            marker = " (root)" if gid in evaluation.roots else ""
            print(f"{gid.ljust(width)}  {_status_text(status)}{marker}")
    return int(ExitCode.SUCCESS if evaluation.roots_hold else ExitCode.VALIDATION_ERRORS)


def cmd_report(args: argparse.Namespace) -> int:
    audit_event("command", command="report", path=args.path, format=args.format)
    try:
        doc = load_file(args.path)
        evidence = _load_evidence(args.evidence) if args.evidence else None
    except (InterchangeError, OSError) as exc:
        return _input_failure(exc)
    try:
        statuses = evaluate(doc, evidence).statuses if evidence is not None else None
        options = ReportOptions(
            lang=args.lang or config.default_lang,
            format=args.format,
            include_diagnostics=args.diagnostics,
            include_terminology=not args.no_terminology,
            statuses=statuses,
        )
        text = render(doc, options)
    except AcmError as exc:
        return _fail(str(exc), ExitCode.OPERATION_FAILED)
    if args.out:
        try:
            write_bytes(args.out, text)
        except (InterchangeError, OSError) as exc:
            return _input_failure(exc)
    else:
        sys.stdout.write(text.decode("utf-8"))
    return int(ExitCode.SUCCESS)


# =============================================================================
# Parser
# =============================================================================
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acm", description="SACM assurance case models: check, transform, instantiate"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", help="Override ACM_LOG_LEVEL for this run")
    commands = parser.add_subparsers(dest="command", required=True)

    validate = commands.add_parser("validate", help="Report diagnostics for one or more documents")
    validate.add_argument("paths", nargs="+", metavar="PATH")
    validate.add_argument("--notation", choices=[n.value for n in Notation])
    validate.add_argument("--format", choices=["text", "json"], default="text")
    validate.set_defaults(handler=cmd_validate)

    transform = commands.add_parser("transform", help="Transform GSN or CAE into SACM")
    transform.add_argument("path", metavar="PATH")
    transform.add_argument("--from", dest="source", choices=["gsn", "cae"], required=True)
    transform.add_argument("--out", required=True, metavar="PATH")
    transform.set_defaults(handler=cmd_transform)

    inst = commands.add_parser("instantiate", help="Instantiate a pattern package")
    inst.add_argument("path", metavar="PATH")
    inst.add_argument("--bindings", required=True, metavar="PATH")
    inst.add_argument("--out", required=True, metavar="PATH")
    inst.add_argument("--pattern", metavar="GID", help="Pattern package gid")
    inst.add_argument("--suffix", default="inst", help="Suffix of the concrete package gid")
    inst.set_defaults(handler=cmd_instantiate)

    report = commands.add_parser("report", help="Render a Markdown or text report")
    report.add_argument("path", metavar="PATH")
    report.add_argument("--lang", help="Language tag (default ACM_DEFAULT_LANG)")
    report.add_argument("--format", choices=["md", "txt"], default="md")
    report.add_argument("--out", metavar="PATH")
    report.add_argument("--evidence", metavar="PATH", help="Evidence map for claim statuses")
    report.add_argument("--diagnostics", action="store_true", help="Append diagnostics")
    report.add_argument("--no-terminology", action="store_true")
    report.set_defaults(handler=cmd_report)

    evaluate_cmd = commands.add_parser("evaluate", help="Evaluate claim statuses")
    evaluate_cmd.add_argument("path", metavar="PATH")
    evaluate_cmd.add_argument("--evidence", required=True, metavar="PATH")
    evaluate_cmd.add_argument("--format", choices=["text", "json"], default="text")
    evaluate_cmd.set_defaults(handler=cmd_evaluate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
