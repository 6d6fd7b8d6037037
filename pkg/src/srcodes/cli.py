"""Command-line front end: construct, verify, bounds, table, convert.

Exit codes: 0 success / verified; 1 precondition or parse failure;
2 verification failure (true distance below the claim); 3 enumeration
budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import bounds
from .block_codes import (
    BlockCode,
    DistanceInfo,
    export_generator_matrix,
    import_generator_matrix,
)
from .constructions import (
    bch_family,
    from_coefficient_codes,
    from_extension_code,
    msrd_code,
    reed_solomon_pair,
)
from .gf import factor_prime_power, make_tower
from .scan import DEFAULT_BUDGET, BudgetExceededError
from .sumrank import (
    SumRankCode,
    SumRankSpace,
    defect,
    export_sumrank_code,
    hamming_as_sumrank,
    import_sumrank_code,
    min_srd_exhaustive,
    singleton_bound,
)

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_VERIFY_FAIL = 2
EXIT_BUDGET = 3


def _report(args, record: dict, stream=None) -> None:
    stream = stream or sys.stdout
    if args.json:
        print(json.dumps(record), file=stream)
    else:
        for k, v in record.items():
            print(f"{k}: {v}", file=stream)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _space_from_args(args) -> SumRankSpace:
    p, e = factor_prime_power(args.q)
    ground = make_tower(p, e, 1).ground
    if getattr(args, "sizes", None):
        sizes = [(x, x) for x in _int_list(args.sizes)]
    else:
        if args.t is None or args.n is None or args.m is None:
            raise ValueError("give either --sizes or all of --t/--n/--m")
        sizes = [(args.n, args.m)] * args.t
    return SumRankSpace(ground, sizes)


def _equal_m(space: SumRankSpace) -> Optional[int]:
    ms = {m for _, m in space.sizes}
    return ms.pop() if len(ms) == 1 else None


def _code_summary(args, code: SumRankCode) -> dict:
    d = code.claimed.value
    exponent = singleton_bound(code.space, d)
    record = {
        "K": code.K,
        "claimed-distance": d,
        "singleton-exponent": exponent,
    }
    if _equal_m(code.space) is not None:
        record["defect"] = defect(code)
    else:
        record["singleton-gap"] = exponent - code.K
    if code.note:
        record["provenance"] = code.note
    return record


def _write_code(args, code: SumRankCode) -> None:
    text = export_sumrank_code(code)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        record = _code_summary(args, code)
        record["wrote"] = args.out
        _report(args, record)
    else:
        # file body on stdout, human summary out of the data path
        _report(args, _code_summary(args, code), stream=sys.stderr)
        sys.stdout.write(text)


def _load_component(path: str, field, distance: Optional[int]) -> BlockCode:
    with open(path) as fh:
        text = fh.read()
    claim = DistanceInfo(distance, note="caller-declared") if distance else None
    return import_generator_matrix(text, field=field, distance=claim)


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------


def cmd_construct(args) -> int:
    if args.kind == "construct1":
        p, e = factor_prime_power(args.q)
        tower = make_tower(p, e, args.n)
        big = tower.relative_extension(args.v + 1)
        comp = _load_component(args.code, big, args.distance)
        code = from_extension_code(tower, comp, args.v)
    elif args.kind == "construct2":
        p, e = factor_prime_power(args.q)
        tower = make_tower(p, e, args.n)
        paths = [s for s in args.codes.split(",") if s]
        distances = _int_list(args.distances) if args.distances else [None] * len(paths)
        if len(distances) != len(paths):
            raise ValueError("--distances must list one value per component file")
        comps = [_load_component(p_, tower.top, d_) for p_, d_ in zip(paths, distances)]
        code = from_coefficient_codes(tower, comps)
    elif args.kind == "thm25":
        code = reed_solomon_pair(args.q, args.t, args.k)
    elif args.kind == "msrd":
        code = msrd_code(args.q, _int_list(args.sizes), args.d)
    elif args.kind == "bch":
        fam = bch_family(
            args.q,
            args.n,
            args.u,
            _int_list(args.designed),
            lam=args.lam,
            base_field=args.base_field,
            materialize=args.materialize,
        )
        record = {
            "block-length": fam.block_length,
            "component-dims": ",".join(map(str, fam.component_dims)),
            "K": fam.K,
            "claimed-distance": fam.claimed,
            "materialized": fam.code is not None,
        }
        if fam.code is None:
            _report(args, record)
            return EXIT_OK
        code = fam.code
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown construction {args.kind}")
    _write_code(args, code)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    with open(args.file) as fh:
        code = import_sumrank_code(fh.read())
    claimed = code.claimed.value
    verified = min_srd_exhaustive(code, budget=args.budget)
    ok = verified >= claimed
    record = {
        "K": code.K,
        "claimed-distance": claimed,
        "verified-distance": verified,
        "status": "verified" if ok else "below-claim",
    }
    _report(args, record)
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------


def cmd_bounds(args) -> int:
    if args.quantity == "singleton":
        space = _space_from_args(args)
        value = singleton_bound(space, args.d)
        record = {"singleton-exponent": value}
        m = _equal_m(space)
        if m is not None:
            record["display"] = f"{m}·{value // m}"
        _report(args, record)
    elif args.quantity == "volume":
        space = _space_from_args(args)
        value = bounds.ball_volume(space, args.r, as_printed=args.as_printed)
        _report(args, {"volume": value})
    elif args.quantity == "gamma":
        _report(args, {"gamma": round(bounds.gamma_q(args.q), 12)})
    elif args.quantity == "hsr":
        value = bounds.entropy_hsr(args.n, args.m, args.q, args.rho, as_printed=args.as_printed)
        _report(args, {"hsr": value})
    elif args.quantity == "gv":
        params = bounds.GvParams(q=args.q, n=args.n, m=args.m, t=args.t, d=args.d)
        _report(args, {"gv-rhs": bounds.gv_rhs(params), "delta": params.delta})
    elif args.quantity == "asymptotic":
        _report(args, {"rate": bounds.gv_asymptotic(args.delta, args.xi)})
    elif args.quantity == "tradeoff":
        record = {"tradeoff-rhs": bounds.tradeoff_rhs(args.n, args.v, args.q)}
        if args.rate is not None and args.delta is not None:
            lhs = bounds.tradeoff_lhs(args.rate, args.delta)
            record["tradeoff-lhs"] = lhs
            record["satisfied"] = lhs >= record["tradeoff-rhs"]
        _report(args, record)
    else:  # pragma: no cover
        raise ValueError(f"unknown bound {args.quantity}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def _thm25_fill(q: int, t: int, n: int, m: int, d: int) -> Optional[tuple[int, str]]:
    """Dimension t+3k+1 when a reed-solomon pair hits distance d here."""
    if n != 2 or m != 2 or t > q * q:
        return None
    k = t - d + 1
    if not 1 <= k < t or (t - k) % 2 == 0:
        return None
    return t + 3 * k + 1, f"reed-solomon pair (k={k})"


def _bch_fill(q: int, t: int, n: int, m: int, d: int) -> Optional[tuple[int, str]]:
    """Dimension n*sum(dims) from cyclotomic-coset counting at distance d."""
    from math import ceil, gcd

    from .block_codes import bch_dimension

    if n != m or t < 2 or gcd(t, q) != 1 or d > n * t:
        return None
    designed = [ceil(d / (n - i)) for i in range(n)]
    if any(u > t for u in designed):
        return None
    dims = [bch_dimension(t, q**n, u) for u in designed]
    if any(k == 0 for k in dims):
        return None
    label = ",".join(map(str, designed))
    return n * sum(dims), f"bch components (designed {label})"


def _dim_display(K: int, m: Optional[int]):
    if m is not None and m > 1 and K % m == 0:
        return f"{m}·{K // m}"
    return K


def cmd_table(args) -> int:
    space = _space_from_args(args)
    m = _equal_m(space)
    n = space.sizes[0][0]
    d_lo = args.d_from if args.d_from is not None else 1
    d_hi = args.d_to if args.d_to is not None else space.N
    if not 1 <= d_lo <= d_hi <= space.N:
        raise ValueError(f"distance range must lie in [1, {space.N}]")
    by_distance: dict[int, tuple[int, str]] = {}
    for path in _int_list_paths(args.codes):
        with open(path) as fh:
            code = import_sumrank_code(fh.read())
        if code.space.sizes != space.sizes or code.space.q != space.q:
            raise ValueError(f"{path}: code space does not match the table space")
        d = code.verified if code.verified is not None else code.claimed.value
        if d not in by_distance or code.K > by_distance[d][0]:
            by_distance[d] = (code.K, path)
    rows = []
    for d in range(d_lo, d_hi + 1):
        exponent = singleton_bound(space, d)
        if d in by_distance:
            K, src = by_distance[d]
        else:
            fills = [
                f
                for f in (
                    _thm25_fill(space.q, space.t, n, m or -1, d),
                    _bch_fill(space.q, space.t, n, m or -1, d),
                )
                if f is not None
            ]
            K, src = max(fills) if fills else (None, "needs external component codes")
        row = {
            "d": d,
            "dimension": _dim_display(K, m) if K is not None else "-",
            "singleton": f"{m}·{exponent // m}" if m is not None else exponent,
            "defect": (exponent - K) if K is not None else "-",
            "source": src,
        }
        if args.json:
            row["K"] = K
            row["singleton-exponent"] = exponent
        rows.append(row)
    if args.json:
        for row in rows:
            print(json.dumps(row))
    else:
        widths = {k: max(len(str(r[k])) for r in rows + [dict.fromkeys(rows[0], k)]) for k in rows[0]}
        header = "  ".join(k.ljust(widths[k]) for k in rows[0])
        print(header)
        print("-" * len(header))
        for row in rows:
            print("  ".join(str(row[k]).ljust(widths[k]) for k in row))
    return EXIT_OK


def _int_list_paths(text: Optional[str]) -> list[str]:
    return [s for s in text.split(",") if s] if text else []


# ---------------------------------------------------------------------------
# convert
# ---------------------------------------------------------------------------


def cmd_convert(args) -> int:
    with open(args.infile) as fh:
        text = fh.read()
    if args.to == "src":
        claim = DistanceInfo(args.distance, note="caller-declared") if args.distance else None
        block = import_generator_matrix(text, distance=claim)
        code = hamming_as_sumrank(block)
        out_text = export_sumrank_code(code)
    else:
        code = import_sumrank_code(text)
        if any(size != (1, 1) for size in code.space.sizes):
            raise ValueError("only 1x1-block codes convert to a generator-matrix file")
        info = code.distance_info()
        block = BlockCode(code.space.ground, code.gens, info)
        out_text = export_generator_matrix(
            block, note=f"hamming view; declared distance {info.value}"
        )
    with open(args.outfile, "w") as fh:
        fh.write(out_text)
    _report(args, {"wrote": args.outfile})
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"enumeration cap in codewords (default {DEFAULT_BUDGET})",
    )
    common.add_argument("--json", action="store_true", help="machine-readable JSON lines")
    common.add_argument(
        "--as-printed",
        action="store_true",
        help="ordinary-binomial variant of the counting formulas",
    )

    parser = argparse.ArgumentParser(
        prog="srcodes",
        description="construct, certify and bound linear sum-rank-metric codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("construct", parents=[common], help="build a code and write its file")
    ck = pc.add_subparsers(dest="kind", required=True)

    c1 = ck.add_parser("construct1", parents=[common], help="expand one big-field code")
    c1.add_argument("--q", type=int, required=True)
    c1.add_argument("--n", type=int, required=True)
    c1.add_argument("--v", type=int, required=True)
    c1.add_argument("--code", required=True, help="generator-matrix file over F_{q^{n(v+1)}}")
    c1.add_argument("--distance", type=int, help="declared distance of the component code")
    c1.add_argument("--out", help="output code file (stdout when omitted)")

    c2 = ck.add_parser("construct2", parents=[common], help="combine coefficient codes")
    c2.add_argument("--q", type=int, required=True)
    c2.add_argument("--n", type=int, required=True)
    c2.add_argument("--codes", required=True, help="comma-separated generator-matrix files")
    c2.add_argument("--distances", help="comma-separated declared distances, one per file")
    c2.add_argument("--out", help="output code file (stdout when omitted)")

    c3 = ck.add_parser("thm25", parents=[common], help="reed-solomon pair, 2x2 blocks")
    c3.add_argument("--q", type=int, required=True)
    c3.add_argument("--t", type=int, required=True)
    c3.add_argument("--k", type=int, required=True)
    c3.add_argument("--out", help="output code file (stdout when omitted)")

    c4 = ck.add_parser("bch", parents=[common], help="bch component family")
    c4.add_argument("--q", type=int, required=True)
    c4.add_argument("--n", type=int, required=True)
    c4.add_argument("--u", type=int, required=True)
    c4.add_argument("--designed", required=True, help="comma-separated designed distances")
    c4.add_argument("--lam", type=int, default=1)
    c4.add_argument("--base-field", action="store_true", help="components over F_q, lifted")
    c4.add_argument(
        "--materialize",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="force or forbid generator materialization",
    )
    c4.add_argument("--out", help="output code file (stdout when omitted)")

    c5 = ck.add_parser("msrd", parents=[common], help="bound-meeting square-block code")
    c5.add_argument("--q", type=int, required=True)
    c5.add_argument("--sizes", required=True, help="comma-separated block sizes, nonincreasing")
    c5.add_argument("--d", type=int, required=True)
    c5.add_argument("--out", help="output code file (stdout when omitted)")

    pv = sub.add_parser("verify", parents=[common], help="certify a code file's distance")
    pv.add_argument("file")

    pb = sub.add_parser("bounds", parents=[common], help="evaluate a bound or count")
    bk = pb.add_subparsers(dest="quantity", required=True)

    bs = bk.add_parser("singleton", parents=[common])
    bs.add_argument("--q", type=int, required=True)
    bs.add_argument("--sizes", help="comma-separated square block sizes")
    bs.add_argument("--t", type=int)
    bs.add_argument("--n", type=int)
    bs.add_argument("--m", type=int)
    bs.add_argument("--d", type=int, required=True)

    bv = bk.add_parser("volume", parents=[common])
    bv.add_argument("--q", type=int, required=True)
    bv.add_argument("--sizes", help="comma-separated square block sizes")
    bv.add_argument("--t", type=int)
    bv.add_argument("--n", type=int)
    bv.add_argument("--m", type=int)
    bv.add_argument("--r", type=int, required=True)

    bg = bk.add_parser("gamma", parents=[common])
    bg.add_argument("--q", type=int, required=True)

    bh = bk.add_parser("hsr", parents=[common])
    bh.add_argument("--q", type=int, required=True)
    bh.add_argument("--n", type=int, required=True)
    bh.add_argument("--m", type=int, required=True)
    bh.add_argument("--rho", type=float, required=True)

    bgv = bk.add_parser("gv", parents=[common])
    bgv.add_argument("--q", type=int, required=True)
    bgv.add_argument("--n", type=int, required=True)
    bgv.add_argument("--m", type=int, required=True)
    bgv.add_argument("--t", type=int, required=True)
    bgv.add_argument("--d", type=int, required=True)

    ba = bk.add_parser("asymptotic", parents=[common])
    ba.add_argument("--delta", type=float, required=True)
    ba.add_argument("--xi", type=float, required=True)

    bt = bk.add_parser("tradeoff", parents=[common])
    bt.add_argument("--q", type=int, required=True)
    bt.add_argument("--n", type=int, required=True)
    bt.add_argument("--v", type=int, required=True)
    bt.add_argument("--rate", type=float)
    bt.add_argument("--delta", type=float)

    pt = sub.add_parser("table", parents=[common], help="distance / dimension / bound table")
    pt.add_argument("--q", type=int, required=True)
    pt.add_argument("--sizes", help="comma-separated square block sizes")
    pt.add_argument("--t", type=int)
    pt.add_argument("--n", type=int)
    pt.add_argument("--m", type=int)
    pt.add_argument("--d-from", type=int, dest="d_from")
    pt.add_argument("--d-to", type=int, dest="d_to")
    pt.add_argument("--codes", help="comma-separated sum-rank code files to fill rows")

    px = sub.add_parser("convert", parents=[common], help="translate between the file formats")
    px.add_argument("--to", choices=["src", "gm"], required=True)
    px.add_argument("--distance", type=int, help="declared distance for matrix imports")
    px.add_argument("infile")
    px.add_argument("outfile")

    pc.set_defaults(func=cmd_construct)
    pv.set_defaults(func=cmd_verify)
    pb.set_defaults(func=cmd_bounds)
    pt.set_defaults(func=cmd_table)
    px.set_defaults(func=cmd_convert)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
