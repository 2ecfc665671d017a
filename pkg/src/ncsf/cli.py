"""Command-line interface.

Subcommands: ``expand`` (change of basis for one basis element), ``matrix``
(a full degree-n transition matrix, JSON or CSV), ``tableaux`` (count or
list tableaux of one shape), ``char`` (Young or irreducible character
values), and ``verify`` (the named exact-identity suites).

Exit codes: 0 success / all checks passed, 1 some verification check
failed, 2 usage, parse, or resource errors.  Indices are comma-separated
positive integers with the empty composition spelled ``0``.  All numeric
output is exact-rational text.
"""

import argparse
import sys

from . import serialize
from .compositions import compositions_of, partitions_of
from .descent import max_group_degree
from .errors import NcsfError
from .characters import irreducible_character, young_character
from .nsym import NSYM_BASES, NSymElement, nsym_convert
from .nsym import transition_matrix as nsym_transition_matrix
from .qsym import QSYM_BASES, QSymElement, qsym_convert
from .qsym import transition_matrix as qsym_transition_matrix
from .sym import SYM_BASES, SymElement, sym_convert
from .sym import transition_matrix as sym_transition_matrix
from .tableaux import (
    descent_composition_syct,
    descent_composition_syt,
    enumerate_syct,
    enumerate_syt,
)
from .verification import SUITES, run_suite

__all__ = ["main", "run", "build_parser"]

_BASES = {"sym": SYM_BASES, "qsym": QSYM_BASES, "nsym": NSYM_BASES}


class UsageError(NcsfError):
    """Raised for bad command-line input; mapped to exit code 2."""


def _parse_index(text: str) -> tuple[int, ...]:
    if text == "0":
        return ()
    parts = text.split(",")
    try:
        index = tuple(int(part) for part in parts)
    except ValueError:
        raise UsageError(f"cannot parse index {text!r}: expected comma-separated integers") from None
    if any(part < 1 for part in index):
        raise UsageError(f"index parts must be positive: {text!r}")
    return index


def _resolve_basis(space: str, name: str) -> str:
    for basis in _BASES[space]:
        if name.lower() == basis.lower():
            return basis
    raise UsageError(f"unknown {space} basis {name!r}; expected one of {_BASES[space]}")


def _check_bound(n: int) -> None:
    bound = max_group_degree()
    if n > bound:
        raise UsageError(
            f"degree {n} exceeds the configured bound {bound} (set NCSF_MAX_N to raise it)"
        )


def _index_label(index) -> str:
    return ".".join(str(part) for part in index) if index else "0"


def _cmd_expand(args) -> int:
    space = args.space
    source = _resolve_basis(space, args.source)
    target = _resolve_basis(space, args.target)
    index = _parse_index(args.index)
    n = sum(index)
    _check_bound(n)
    if space == "sym":
        if any(index[i] < index[i + 1] for i in range(len(index) - 1)):
            raise UsageError(f"sym indices are partitions (weakly decreasing): {args.index!r}")
        element = sym_convert(SymElement(source, {index: 1}), target)
        order = partitions_of(n)
    elif space == "qsym":
        element = qsym_convert(QSymElement(source, {index: 1}), target)
        order = compositions_of(n)
    else:
        element = nsym_convert(NSymElement(source, {index: 1}), target)
        order = compositions_of(n)
    payload = serialize.element_payload(space, target, n, element.terms, order)
    print(serialize.to_json(payload))
    return 0


def _cmd_matrix(args) -> int:
    space = args.space
    source = _resolve_basis(space, args.source)
    target = _resolve_basis(space, args.target)
    n = args.n
    if n < 1:
        raise UsageError(f"degree must be at least 1: {n}")
    _check_bound(n)
    if space == "sym":
        rows = sym_transition_matrix(source, target, n)
        order = partitions_of(n)
    elif space == "qsym":
        rows = qsym_transition_matrix(source, target, n)
        order = compositions_of(n)
    else:
        rows = nsym_transition_matrix(source, target, n)
        order = compositions_of(n)
    # row convention inside the library is "row = expansion of a source
    # element"; the emitted matrix maps coordinate vectors, so transpose
    entries = list(zip(*rows))
    if args.format == "csv":
        print(",".join(_index_label(idx) for idx in order))
        for row in entries:
            print(",".join(serialize.format_coeff(x) for x in row))
    else:
        payload = serialize.matrix_payload(space, source, target, n, order, entries)
        print(serialize.to_json(payload))
    return 0


def _cmd_tableaux(args) -> int:
    shape = _parse_index(args.shape)
    if args.kind == "syct":
        tableaux = enumerate_syct(shape)
        descents = [descent_composition_syct(t) for t in tableaux]
    else:
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise UsageError(f"syt shapes are partitions (weakly decreasing): {args.shape!r}")
        tableaux = enumerate_syt(shape)
        descents = [descent_composition_syt(t) for t in tableaux]
    if args.list:
        payload = [
            {"rows": [list(row) for row in t.rows], "descent_composition": list(d)}
            for t, d in zip(tableaux, descents)
        ]
        print(serialize.to_json(payload))
    else:
        print(len(tableaux))
    return 0


def _cmd_char(args) -> int:
    if args.young is not None:
        index = _parse_index(args.young)
        _check_bound(sum(index))
        cf = young_character(index)
        kind = "young"
    else:
        index = _parse_index(args.irreducible)
        if any(index[i] < index[i + 1] for i in range(len(index) - 1)):
            raise UsageError(f"irreducible characters are indexed by partitions: {args.irreducible!r}")
        _check_bound(sum(index))
        cf = irreducible_character(index)
        kind = "irreducible"
    payload = serialize.class_function_payload(kind, cf.n, cf.values, partitions_of(cf.n))
    print(serialize.to_json(payload))
    return 0


def _cmd_verify(args) -> int:
    n = args.n
    if n < 1:
        raise UsageError(f"degree must be at least 1: {n}")
    _check_bound(n)
    report = run_suite(args.suite, n)
    passed = len(report.checks) - len(report.failures)
    if args.json:
        payload = {
            "suite": args.suite,
            "n": n,
            "passed": passed,
            "failed": len(report.failures),
            "checks": [
                {"name": c.name, "passed": c.passed}
                | ({"witness": c.witness} if not c.passed else {})
                for c in report.checks
            ],
        }
        print(serialize.to_json(payload))
    else:
        print(f"suite {args.suite}, n={n}: {passed}/{len(report.checks)} checks passed")
        for check in report.failures:
            print(f"FAIL {check.name}: {check.witness}")
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncsf",
        description="Exact computations with symmetric, quasisymmetric, and "
        "noncommutative symmetric functions, descent algebras, and "
        "symmetric-group characters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand one basis element in another basis")
    p.add_argument("--space", required=True, choices=("sym", "qsym", "nsym"))
    p.add_argument("--from", dest="source", required=True, metavar="BASIS")
    p.add_argument("--to", dest="target", required=True, metavar="BASIS")
    p.add_argument("--index", required=True, help="comma-separated parts; 0 for the unit")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("matrix", help="full degree-n transition matrix")
    p.add_argument("--space", required=True, choices=("sym", "qsym", "nsym"))
    p.add_argument("--from", dest="source", required=True, metavar="BASIS")
    p.add_argument("--to", dest="target", required=True, metavar="BASIS")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser("tableaux", help="count or list tableaux of one shape")
    p.add_argument("kind", choices=("syct", "syt"))
    p.add_argument("--shape", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", default=True)
    mode.add_argument("--list", action="store_true")
    p.set_defaults(handler=_cmd_tableaux)

    p = sub.add_parser("char", help="character values by cycle type")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--young", metavar="COMPOSITION")
    which.add_argument("--irreducible", metavar="PARTITION")
    p.set_defaults(handler=_cmd_char)

    p = sub.add_parser("verify", help="run an exact verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"ncsf: {exc}", file=sys.stderr)
        return 2
    except NcsfError as exc:
        print(f"ncsf: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"ncsf: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
