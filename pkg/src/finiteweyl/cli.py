"""Command-line entry point.

JSON payloads go to stdout (deterministic: fixed orderings, no timestamps);
human-readable diagnostics and timings go to stderr.  Exit codes: 0 on
success / all checks passing, 1 when a verification fails, a tolerance is
exceeded, or a partition is incomplete, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .basis import (
    SEARCH_CAP,
    cartan_partition_prime,
    cartan_partition_prime_power,
    commuting_class_search,
    format_index,
    structure_constants,
)
from .group import (
    DEFAULT_BRUTE_FORCE_CAP,
    PdElement,
    irrep_character_norm,
    pd_centralizer_size,
    pd_conjugacy_classes,
    pd_irrep_counts,
    pd_named_subgroups,
)
from .mub import basis_exponent_table, hadamard_h_a, is_prime, mub_family, pairwise_deviations
from .operators import fourier_matrix, v_ra_matrix, weyl_pair
from .serialize import (
    SCHEMA_VERSION,
    export,
    json_dumps,
    matrix_to_csv,
    monomial_to_payload,
    partition_to_payload,
)
from .suites import DEFAULT_TOLERANCE, run_suite, suite_hw, suite_su2


def _emit(payload: dict) -> None:
    sys.stdout.write(json_dumps(payload))


def _dense_payload(kind: str, mat: np.ndarray, **extra) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "type": kind,
        **extra,
        "re": [[float(x.real) for x in row] for row in mat],
        "im": [[float(x.imag) for x in row] for row in mat],
    }


def _report_exit(report, include_payload: bool = True) -> int:
    if include_payload:
        _emit({"schema": SCHEMA_VERSION, **report.to_json()})
    for line in report.summary_lines():
        print(line, file=sys.stderr)
    return 0 if report.overall else 1


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def cmd_hw(args: argparse.Namespace) -> int:
    if args.action != "check":
        raise ValueError(f"unknown hw action {args.action!r}")
    return _report_exit(suite_hw(args.tolerance))


def cmd_group(args: argparse.Namespace) -> int:
    d, cap = args.d, args.max_d
    if args.action == "classes":
        report = pd_conjugacy_classes(d, cap)
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "type": "conjugacy-classes",
                "d": d,
                "class_count": report.class_count,
                "singleton_count": report.singleton_count,
                "size_d_count": report.size_d_count,
                "size_histogram": {str(k): v for k, v in report.size_histogram.items()},
                "classes": [[[g.a, g.b, g.c] for g in cls] for cls in report.classes],
            }
        )
        return 0
    if args.action == "centralizer":
        if args.elem is None:
            raise ValueError("--elem a,b,c is required for the centralizer command")
        a, b, c = (int(x) for x in args.elem.split(","))
        size = pd_centralizer_size(PdElement(a, b, c, d))
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "type": "centralizer",
                "d": d,
                "element": [a % d, b % d, c % d],
                "centralizer_size": size,
                "class_size": d**3 // size,
            }
        )
        return 0
    if args.action == "subgroups":
        subs = pd_named_subgroups(d, cap)
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "type": "subgroups",
                "d": d,
                "subgroups": [
                    {
                        "name": s.name,
                        "order": len(s.elements),
                        "is_normal": s.is_normal,
                        "isomorphism": s.isomorphism,
                        "elements": [[g.a, g.b, g.c] for g in s.elements],
                    }
                    for s in subs
                ],
            }
        )
        return 0
    if args.action == "irreps":
        one_dim, d_dim = pd_irrep_counts(d)
        norms = []
        for k in range(1, d):
            norm = irrep_character_norm(k, d)
            norms.append(
                {
                    "k": k,
                    "character_norm": int(norm) if norm.denominator == 1 else float(norm),
                    "irreducible": norm == 1,
                }
            )
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "type": "irreps",
                "d": d,
                "one_dimensional": one_dim,
                "claimed_d_dimensional": d_dim,
                "monomial_representations": norms,
            }
        )
        return 0
    raise ValueError(f"unknown group action {args.action!r}")


def cmd_weyl(args: argparse.Namespace) -> int:
    d = args.d
    if args.action == "pair":
        x, z = weyl_pair(d)
        if args.format == "dense-csv":
            sys.stdout.write("# X\n" + matrix_to_csv(x.to_matrix()))
            sys.stdout.write("# Z\n" + matrix_to_csv(z.to_matrix()))
        else:
            _emit(
                {
                    "schema": SCHEMA_VERSION,
                    "type": "weyl-pair",
                    "d": d,
                    "X": monomial_to_payload(x),
                    "Z": monomial_to_payload(z),
                }
            )
        return 0
    if args.action == "vra":
        mat = v_ra_matrix(d, args.r, args.a)
        if args.format == "dense-csv":
            sys.stdout.write(matrix_to_csv(mat))
        else:
            _emit(_dense_payload("vra", mat, d=d, r=args.r, a=args.a))
        return 0
    if args.action == "fourier":
        mat = fourier_matrix(d)
        if args.format == "dense-csv":
            sys.stdout.write(matrix_to_csv(mat))
        else:
            _emit(_dense_payload("fourier", mat, d=d))
        return 0
    if args.action == "su2-check":
        return _report_exit(suite_su2(d, args.tolerance))
    raise ValueError(f"unknown weyl action {args.action!r}")


def cmd_mub(args: argparse.Namespace) -> int:
    if args.action == "family":
        p = args.p
        bases = mub_family(p)
        deviations = pairwise_deviations(bases)
        n = len(bases)
        matrix = [[0.0] * n for _ in range(n)]
        for (i, j), value in deviations.items():
            matrix[i][j] = matrix[j][i] = value
        worst = max(deviations.values())
        passed = worst <= args.tolerance
        family_payload = []
        for b in bases:
            if b.label == "computational":
                family_payload.append({"label": b.label, "identity": True})
            else:
                family_payload.append(
                    {
                        "label": b.label,
                        "normalization": "1/sqrt(p)",
                        "tau_exponents": basis_exponent_table(p, int(b.label)).tolist(),
                    }
                )
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "type": "mub-family",
                "p": p,
                "basis_labels": [b.label for b in bases],
                "bases": family_payload,
                "pairwise_deviation_matrix": matrix,
                "max_deviation": worst,
                "tolerance": args.tolerance,
                "status": "pass" if passed else "fail",
            }
        )
        print(
            f"mub family p={p}: max deviation {worst:.3e} (tolerance {args.tolerance:.1e})",
            file=sys.stderr,
        )
        return 0 if passed else 1
    if args.action == "hadamard":
        h = hadamard_h_a(args.d, args.a)
        if args.format == "dense-csv":
            sys.stdout.write(matrix_to_csv(h.to_matrix()))
        else:
            sys.stdout.write(export(h, "json"))
        return 0
    raise ValueError(f"unknown mub action {args.action!r}")


def cmd_basis(args: argparse.Namespace) -> int:
    d = args.d
    if args.action == "partition":
        if args.tensor:
            p, e = (int(x) for x in args.tensor.split(","))
            partition = cartan_partition_prime_power(p, e)
        elif is_prime(d) and d > SEARCH_CAP:
            partition = cartan_partition_prime(d)
        else:
            partition = commuting_class_search(d)
        _emit(partition_to_payload(partition))
        status = "complete" if partition.complete else "incomplete"
        print(
            f"partition d={partition.dimension}: {partition.class_count} classes, {status}",
            file=sys.stderr,
        )
        return 0 if partition.complete else 1
    if args.action == "structure":
        table = structure_constants(d)
        entries = []
        for (ab, ab2), (target, coeff) in table.items():
            entries.append(
                {
                    "left": format_index(ab, (d, d)),
                    "right": format_index(ab2, (d, d)),
                    "target": format_index(target, (d, d)),
                    "tau_first": (-2 * ab[1] * ab2[0]) % (2 * d),
                    "tau_second": (-2 * ab[0] * ab2[1]) % (2 * d),
                    "re": coeff.real,
                    "im": coeff.imag,
                }
            )
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "type": "structure-constants",
                "d": d,
                "nonzero_count": len(entries),
                "entries": entries,
            }
        )
        return 0
    raise ValueError(f"unknown basis action {args.action!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(
        args.suite,
        d=args.d,
        p=args.p,
        e=args.e,
        tolerance=args.tolerance,
        cap=args.max_d,
    )
    return _report_exit(report)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, *names: str) -> None:
    if "d" in names:
        parser.add_argument("--d", type=int, default=3, help="dimension / modulus")
    if "p" in names:
        parser.add_argument("--p", type=int, default=None, help="prime dimension")
    if "e" in names:
        parser.add_argument("--e", type=int, default=None, help="tensor exponent")
    if "a" in names:
        parser.add_argument("--a", type=int, default=0, help="clock power")
    if "r" in names:
        parser.add_argument("--r", type=float, default=0.0, help="corner phase parameter")
    if "tolerance" in names:
        parser.add_argument(
            "--tolerance", type=float, default=DEFAULT_TOLERANCE, help="check tolerance"
        )
    if "max-d" in names:
        parser.add_argument(
            "--max-d",
            dest="max_d",
            type=int,
            default=DEFAULT_BRUTE_FORCE_CAP,
            help="brute-force cap override",
        )
    if "format" in names:
        parser.add_argument(
            "--format",
            choices=["json", "exact-json", "dense-csv"],
            default="json",
            help="output encoding",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finiteweyl",
        description="Weyl pairs, discrete Heisenberg groups, mutually "
        "unbiased bases and commuting-class decompositions of u(d).",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    hw = sub.add_parser("hw", help="continuous-group identities")
    hw.add_argument("action", choices=["check"])
    _add_common(hw, "tolerance")
    hw.set_defaults(func=cmd_hw)

    group = sub.add_parser("group", help="finite Heisenberg group of order d^3")
    group.add_argument("action", choices=["classes", "centralizer", "subgroups", "irreps"])
    _add_common(group, "d", "max-d")
    group.add_argument("--elem", type=str, default=None, help="element a,b,c")
    group.set_defaults(func=cmd_group)

    weyl = sub.add_parser("weyl", help="clock/shift operators and relatives")
    weyl.add_argument("action", choices=["pair", "vra", "fourier", "su2-check"])
    _add_common(weyl, "d", "a", "r", "tolerance", "format")
    weyl.set_defaults(func=cmd_weyl)

    mub = sub.add_parser("mub", help="mutually unbiased bases")
    mub.add_argument("action", choices=["family", "hadamard"])
    _add_common(mub, "d", "a", "tolerance", "format")
    mub.add_argument("--p", type=int, default=3, help="prime dimension for the family")
    mub.set_defaults(func=cmd_mub)

    basis = sub.add_parser("basis", help="operator basis of u(d) and partitions")
    basis.add_argument("action", choices=["partition", "structure"])
    _add_common(basis, "d")
    basis.add_argument(
        "--tensor", type=str, default=None, help="tensor partition parameters p,e"
    )
    basis.set_defaults(func=cmd_basis)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("suite", choices=["hw", "group", "weyl", "mub", "basis", "all"])
    _add_common(verify, "d", "p", "e", "tolerance", "max-d")
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
