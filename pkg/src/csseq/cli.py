"""Command-line interface.

Subcommands: construct (base | pair | concat | iterate | seed), verify
(cs | mocs), papr, codebook, report.  Data goes to stdout (documents or
CSV), diagnostics to stderr.  Exit codes: 0 success or property holds,
1 property fails, 2 usage or input error.  Identical argv yields
byte-identical stdout.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .codebook import (
    CodebookSpec,
    code_rate,
    enumerate_codebook,
    format_fixed,
    min_hamming_distance,
    render_table,
    size_formula,
)
from .construct import (
    BaseParams,
    ZeroInsertionPlan,
    base_cs,
    concat_cs,
    iterate,
    mocs_pair,
    seed_ccc,
)
from .fileio import FileFormatError, csv_text, emit, parse
from .gbf import ConstrainedPermutation
from .papr import PaprConfig, check_papr_bound, set_papr
from .seqcore import (
    ComplementarySet,
    MocsFamily,
    is_complementary_set,
    is_mocs,
)


def _int_list(text: str):
    return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _base_params(args) -> BaseParams:
    perm = None
    if args.perm is not None:
        perm = ConstrainedPermutation(args.m, args.v, args.perm)
    return BaseParams(
        q=args.q, m=args.m, v=args.v, perm=perm,
        lam=args.lam, mu=args.mu, mu0=args.mu0,
    )


def _cmd_construct_base(args) -> int:
    _write_text(args.out, emit(base_cs(_base_params(args))))
    return 0


def _cmd_construct_pair(args) -> int:
    _write_text(args.out, emit(mocs_pair(_base_params(args))))
    return 0


def _cmd_construct_concat(args) -> int:
    _write_text(args.out, emit(concat_cs(_base_params(args), args.b)))
    return 0


def _cmd_construct_iterate(args) -> int:
    obj = parse(_read_text(args.infile))
    if not isinstance(obj, MocsFamily):
        print("error: iterate needs a family document (structure mocs)",
              file=sys.stderr)
        return 2
    result = iterate(obj, ZeroInsertionPlan(args.plan))
    if result.num_sets == 1:
        _write_text(args.out, emit(result[0]))
    else:
        _write_text(args.out, emit(result))
    return 0


def _cmd_construct_seed(args) -> int:
    _write_text(args.out, emit(seed_ccc(args.size)))
    return 0


def _cmd_verify(args) -> int:
    obj = parse(_read_text(args.infile))
    if args.structure == "cs":
        if not isinstance(obj, ComplementarySet):
            print("error: expected a set document (structure set)",
                  file=sys.stderr)
            return 2
        report = is_complementary_set(obj)
    else:
        if not isinstance(obj, MocsFamily):
            print("error: expected a family document (structure mocs)",
                  file=sys.stderr)
            return 2
        report = is_mocs(obj)
    print(report)
    return 0 if report.ok else 1


def _cmd_papr(args) -> int:
    obj = parse(_read_text(args.infile))
    sets = [obj] if isinstance(obj, ComplementarySet) else list(obj)
    cfg = PaprConfig(oversampling=args.oversample)
    rows = [["set", "length", "nulls", "set_papr", "bound", "margin"]]
    for i, cset in enumerate(sets):
        nulls = sorted({s.null_count for s in cset})
        nulls_cell = nulls[0] if len(nulls) == 1 else ""
        worst = set_papr(cset, cfg)
        report = check_papr_bound(cset, cfg)
        rows.append([
            i, cset.length, nulls_cell,
            format_fixed(worst),
            format_fixed(report.bound),
            format_fixed(report.bound - worst),
        ])
    sys.stdout.write(csv_text(rows))
    return 0


def _cmd_codebook(args) -> int:
    spec = CodebookSpec(args.variant, args.q, args.m, args.v, args.b)
    size = size_formula(spec)
    line = f"size={size} rate={format_fixed(code_rate(spec))}"
    if args.dmin:
        cb = enumerate_codebook(spec)
        if cb.distinct_count != size:
            print(
                f"warning: {size} parameter tuples gave "
                f"{cb.distinct_count} distinct codewords",
                file=sys.stderr,
            )
        line += f" dmin={min_hamming_distance(cb)}"
    print(line)
    return 0


def _cmd_report(args) -> int:
    if args.table == 6:
        print(
            "note: table 6 emits both length conventions; code_rate uses "
            "codeword_length as its denominator",
            file=sys.stderr,
        )
    sys.stdout.write(render_table(args.table))
    return 0


def _add_base_flags(p: argparse.ArgumentParser):
    p.add_argument("--q", type=int, required=True, help="even phase modulus")
    p.add_argument("--m", type=int, required=True, help="number of variables")
    p.add_argument("--v", type=int, required=True,
                   help="split parameter, 1 <= v <= m-1")
    p.add_argument("--perm", type=_int_list, default=None, metavar="P1,P2,...",
                   help="permutation images of 1..m-1 (default identity); "
                        "first v images must be 1..v as a set")
    p.add_argument("--lam", type=_int_list, default=None, metavar="L1,L2,...",
                   help="cross coefficients, v (reduced) or m-1 entries "
                        "(default all zero)")
    p.add_argument("--mu", type=_int_list, default=None, metavar="M1,M2,...",
                   help="linear coefficients, m entries (default all zero)")
    p.add_argument("--mu0", type=int, default=0, help="constant term")
    p.add_argument("--out", default="-", help="output file (default stdout)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csseq",
        description="Complementary sequence sets with spectral nulls: "
                    "construct, verify, and analyze.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    con = sub.add_parser("construct", help="build sequence sets")
    kinds = con.add_subparsers(dest="kind", required=True)

    p = kinds.add_parser(
        "base",
        help="four-sequence complementary set of length 2^(m-1) + 2^v",
    )
    _add_base_flags(p)
    p.set_defaults(func=_cmd_construct_base)

    p = kinds.add_parser(
        "pair",
        help="two mutually orthogonal complementary sets (needs m >= 3, "
             "v < m-1)",
    )
    _add_base_flags(p)
    p.set_defaults(func=_cmd_construct_pair)

    p = kinds.add_parser(
        "concat",
        help="complementary set of length 2^m + 2^(v+1) + b with b "
             "central nulls",
    )
    _add_base_flags(p)
    p.add_argument("--b", type=int, default=0, help="null gap width")
    p.set_defaults(func=_cmd_construct_concat)

    p = kinds.add_parser(
        "iterate",
        help="apply zero-insertion steps to a family document; a "
             "single-set result is emitted as a set document",
    )
    p.add_argument("--in", dest="infile", required=True,
                   help="family document ('-' for stdin)")
    p.add_argument("--plan", type=_int_list, default=(),
                   metavar="B1,B2,...", help="gap widths, one per step")
    p.add_argument("--out", default="-", help="output file (default stdout)")
    p.set_defaults(func=_cmd_construct_iterate)

    p = kinds.add_parser(
        "seed",
        help="built-in binary (N,N,N) family; utility feedstock for "
             "iterate, not produced by the polynomial-phase constructions",
    )
    p.add_argument("--size", type=int, required=True,
                   help="family size N (2, 4, 8, or 16)")
    p.add_argument("--out", default="-", help="output file (default stdout)")
    p.set_defaults(func=_cmd_construct_seed)

    ver = sub.add_parser("verify", help="check correlation properties")
    ver.add_argument("structure", choices=("cs", "mocs"),
                     help="cs: one complementary set; mocs: a family")
    ver.add_argument("--in", dest="infile", required=True,
                     help="document to check ('-' for stdin)")
    ver.set_defaults(func=_cmd_verify)

    pap = sub.add_parser("papr", help="peak-to-average power ratio report")
    pap.add_argument("--in", dest="infile", required=True,
                     help="set or family document ('-' for stdin)")
    pap.add_argument("--oversample", type=int, default=8,
                     help="envelope samples per subcarrier (default 8)")
    pap.set_defaults(func=_cmd_papr)

    cod = sub.add_parser("codebook", help="codebook size, rate, distance")
    cod.add_argument("--variant", required=True,
                     choices=("c1", "c2", "c3", "c21"))
    cod.add_argument("--q", type=int, required=True)
    cod.add_argument("--m", type=int, required=True)
    cod.add_argument("--v", type=int, required=True)
    cod.add_argument("--b", type=int, default=0)
    cod.add_argument("--dmin", action="store_true",
                     help="also brute-force the minimum Hamming distance")
    cod.set_defaults(func=_cmd_codebook)

    rep = sub.add_parser("report", help="regenerate a reference table")
    rep.add_argument("--table", type=int, required=True,
                     choices=(1, 2, 3, 4, 6))
    rep.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FileFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
