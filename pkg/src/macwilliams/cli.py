"""Command-line front end: code-file parsing, subcommands, text reports.

Reports are byte-identical across runs for identical inputs: orderings
are fixed, rationals print as num/den, and nothing emits timestamps.
Exit codes: 0 pass, 1 identity failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import re
import sys
from math import isqrt

from .codes import (DEFAULT_ENUM_CAP, EnumerationCapError, LinearCode,
                    dual_code, enumerator_poly, make_code,
                    weight_distribution)
from .gf import make_field
from .identities import (check_derivative_forms, check_eq3, check_eq4,
                         check_eq5, krawtchouk, transform_eq1, transform_eq2)
from .linalg import rref


class CodeFileError(ValueError):
    """Code-file problem with a line/column diagnostic."""

    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\S+")

# name -> (p, m, n, generator rows); every entry is a valid code.
DEMOS = {
    "rep3": (2, 1, 3, [[1, 1, 1]]),
    "rep5": (2, 1, 5, [[1, 1, 1, 1, 1]]),
    "rep7": (2, 1, 7, [[1, 1, 1, 1, 1, 1, 1]]),
    "even3": (2, 1, 3, [[1, 1, 0], [0, 1, 1]]),
    "even5": (2, 1, 5, [[1, 1, 0, 0, 0], [0, 1, 1, 0, 0],
                        [0, 0, 1, 1, 0], [0, 0, 0, 1, 1]]),
    "even7": (2, 1, 7, [[1, 1, 0, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0, 0],
                        [0, 0, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 0, 0],
                        [0, 0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 0, 1, 1]]),
    "hamming74": (2, 1, 7, [[1, 0, 0, 0, 0, 1, 1], [0, 1, 0, 0, 1, 0, 1],
                            [0, 0, 1, 0, 1, 1, 0], [0, 0, 0, 1, 1, 1, 1]]),
    "simplex73": (2, 1, 7, [[0, 1, 1, 1, 1, 0, 0], [1, 0, 1, 1, 0, 1, 0],
                            [1, 1, 0, 1, 0, 0, 1]]),
    "full3": (2, 1, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    "zero3": (2, 1, 3, []),
    "ternary42": (3, 1, 4, [[1, 0, 1, 2], [0, 1, 2, 1]]),
    "quaternary32": (2, 2, 3, [[1, 0, 2], [0, 1, 3]]),
}

IDENTITY_CHOICES = ("eq3", "eq4", "eq5", "d2", "d3", "d4", "d5", "all")
_FORM_BY_FLAG = {"d2": "eq2'", "d3": "eq3'", "d4": "eq4'", "d5": "eq5'"}


def _prime_power(value: int):
    """Factor value as p^m with p prime, or return None."""
    if value < 2:
        return None
    for p in range(2, isqrt(value) + 1):
        if value % p == 0:
            m = 0
            while value % p == 0:
                value //= p
                m += 1
            return (p, m) if value == 1 else None
    return value, 1


def _tokenize(text: str):
    """Lines as (lineno, [(col, token), ...]); comments and blanks dropped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]
        if toks:
            out.append((lineno, toks))
    return out


def _int_token(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise CodeFileError(f"expected an integer {what}, got {tok!r}", lineno, col) from None


def parse_code_file(text: str) -> LinearCode:
    """Parse the code-file format:

        q <p> [m <m>] [modulus <c0,c1,...,cm>]
        n <n>
        rows:
        <k whitespace-separated rows of n integers in [0, q)>

    '#' starts a comment anywhere.  The value after `q` may also be a
    prime power p^m directly (e.g. `q 4` for GF(4)).
    """
    lines = _tokenize(text)
    eof_line = (lines[-1][0] + 1) if lines else 1
    if len(lines) < 3:
        raise CodeFileError("unexpected end of file: expected q line, n line, and 'rows:'",
                            eof_line)

    # q line
    lineno, toks = lines[0]
    if toks[0][1] != "q":
        raise CodeFileError(f"expected 'q', got {toks[0][1]!r}", lineno, toks[0][0])
    if len(toks) < 2:
        raise CodeFileError("expected a field size after 'q'", lineno, toks[0][0])
    base = _int_token(toks[1][1], lineno, toks[1][0], "after 'q'")
    m = None
    modulus = None
    idx = 2
    while idx < len(toks):
        col, key = toks[idx]
        if key == "m":
            if idx + 1 >= len(toks):
                raise CodeFileError("expected an integer after 'm'", lineno, col)
            m = _int_token(toks[idx + 1][1], lineno, toks[idx + 1][0], "after 'm'")
            idx += 2
        elif key == "modulus":
            if idx + 1 >= len(toks):
                raise CodeFileError("expected coefficients after 'modulus'", lineno, col)
            mcol, mtok = toks[idx + 1]
            try:
                modulus = [int(c) for c in mtok.split(",")]
            except ValueError:
                raise CodeFileError(f"bad modulus coefficient list {mtok!r}",
                                    lineno, mcol) from None
            idx += 2
        else:
            raise CodeFileError(f"unexpected token {key!r} on the q line", lineno, col)
    if m is None:
        factored = _prime_power(base)
        if factored is None:
            raise CodeFileError(f"{base} is not a prime power", lineno, toks[1][0])
        p, m = factored
    else:
        p = base
    try:
        field = make_field(p, m, modulus)
    except ValueError as exc:
        raise CodeFileError(str(exc), lineno, toks[0][0]) from None

    # n line
    lineno, toks = lines[1]
    if toks[0][1] != "n" or len(toks) != 2:
        raise CodeFileError("expected 'n <length>'", lineno, toks[0][0])
    n = _int_token(toks[1][1], lineno, toks[1][0], "after 'n'")
    if n < 1:
        raise CodeFileError(f"code length must be >= 1, got {n}", lineno, toks[1][0])

    # rows
    lineno, toks = lines[2]
    if len(toks) != 1 or toks[0][1] != "rows:":
        raise CodeFileError("expected 'rows:'", lineno, toks[0][0])
    rows_header = lineno
    rows = []
    for lineno, toks in lines[3:]:
        row = []
        for col, tok in toks:
            e = _int_token(tok, lineno, col, "entry")
            if not 0 <= e < field.q:
                raise CodeFileError(f"entry {e} is outside [0, {field.q})", lineno, col)
            row.append(e)
        if len(row) != n:
            raise CodeFileError(f"row has {len(row)} entries, expected n = {n}",
                                lineno, toks[0][0])
        rows.append(row)
    try:
        return make_code(field, n, rows)
    except ValueError as exc:
        raise CodeFileError(str(exc), rows_header) from None


def _load_code(args) -> LinearCode:
    with open(args.file, encoding="utf-8") as fh:
        return parse_code_file(fh.read())


def _code_header(code: LinearCode) -> str:
    return f"code: n={code.n} k={code.k} q={code.field.q}"


def _parse_perturb(spec: str):
    try:
        side, index = spec.split(":")
        index = int(index)
    except ValueError:
        raise ValueError(f"bad perturb spec {spec!r}; expected side:index") from None
    if side not in ("primal", "dual"):
        raise ValueError(f"perturb side must be 'primal' or 'dual', got {side!r}")
    return side, index


def verify_report(code: LinearCode, identity: str = "all",
                  cap: int = DEFAULT_ENUM_CAP, perturb: str | None = None) -> tuple[str, bool]:
    """Full verification text for one code; returns (report, all_passed)."""
    n, k, q = code.n, code.k, code.field.q
    w = weight_distribution(code, cap)
    wd = weight_distribution(dual_code(code), cap)
    lines = [_code_header(code)]
    if perturb is not None:
        side, index = _parse_perturb(perturb)
        if not 0 <= index <= n:
            raise ValueError(f"perturb index {index} is outside 0..{n}")
        if side == "primal":
            w = w.perturbed(index)
        else:
            wd = wd.perturbed(index)
        lines.append(f"perturb: {side}[{index}] += 1")
    lines.append(f"weights: {w}")
    lines.append(f"dual weights: {wd}")
    ok = True
    if identity == "all":
        for name, fn in (("eq1", transform_eq1), ("eq2", transform_eq2)):
            try:
                result = fn(wd, n, k, q)
                good = result == w
                lines.append(f"transform {name}: {result} {'pass' if good else 'FAIL'}")
            except ValueError as exc:
                good = False
                lines.append(f"transform {name}: FAIL ({exc})")
            ok = ok and good
    checks = []
    if identity in ("all", "eq3"):
        checks.append(check_eq3(w, wd, n, k, q))
    if identity in ("all", "eq4"):
        checks.append(check_eq4(w, wd, n, k, q))
    if identity in ("all", "eq5"):
        checks.append(check_eq5(w, wd, n, k, q))
    for flag, form in _FORM_BY_FLAG.items():
        if identity in ("all", flag):
            checks.append(check_derivative_forms(w, wd, n, k, q, form))
    for report in checks:
        lines.extend(report.render_lines())
        ok = ok and report.passed
    lines.append(f"verdict: {'pass' if ok else 'FAIL'}")
    return "\n".join(lines), ok


def _cmd_weights(args) -> int:
    code = _load_code(args)
    w = weight_distribution(code, args.max_enum)
    print(_code_header(code))
    print(f"weights: {w}")
    print(f"enumerator: {enumerator_poly(w)}")
    return 0


def _cmd_dual(args) -> int:
    code = _load_code(args)
    dual = dual_code(code)
    wd = weight_distribution(dual, args.max_enum)
    print(_code_header(code))
    print(f"dual: n={dual.n} k={dual.k} q={dual.field.q}")
    print("dual generator (rref):")
    canonical = rref(dual.generator)[0]
    if canonical.rows:
        print(canonical)
    else:
        print("(no rows)")
    print(f"dual weights: {wd}")
    return 0


def _cmd_transform(args) -> int:
    code = _load_code(args)
    n, k, q = code.n, code.k, code.field.q
    w = weight_distribution(code, args.max_enum)
    wd = weight_distribution(dual_code(code), args.max_enum)
    print(_code_header(code))
    print(f"weights: {w}")
    print(f"dual weights: {wd}")
    ok = True
    for name, fn in (("eq1", transform_eq1), ("eq2", transform_eq2)):
        result = fn(wd, n, k, q)
        good = result == w
        ok = ok and good
        print(f"transform {name}: {result} {'pass' if good else 'FAIL'}")
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    code = _load_code(args)
    text, ok = verify_report(code, args.identity, args.max_enum, args.perturb)
    print(text)
    return 0 if ok else 1


def _cmd_kraw(args) -> int:
    n, q = args.n, args.q
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    rs = [args.r] if args.r is not None else list(range(n + 1))
    js = [args.j] if args.j is not None else list(range(n + 1))
    for v, name in ((rs, "r"), (js, "j")):
        if not 0 <= v[0] <= n:
            raise ValueError(f"{name} must be in 0..{n}, got {v[0]}")
    print(f"krawtchouk n={n} q={q}")
    print("r\\j " + " ".join(str(j) for j in js))
    for r in rs:
        print(f"{r} " + " ".join(str(krawtchouk(r, j, n, q)) for j in js))
    return 0


def _cmd_demo(args) -> int:
    if args.list:
        for name in DEMOS:
            print(name)
        return 0
    if args.name is None:
        raise ValueError("a demo name is required (or use --list)")
    if args.name not in DEMOS:
        raise ValueError(f"unknown demo {args.name!r}; use --list to see the corpus")
    p, m, n, rows = DEMOS[args.name]
    code = make_code(make_field(p, m), n, rows)
    print(f"demo: {args.name}")
    text, ok = verify_report(code, args.identity, args.max_enum, args.perturb)
    print(text)
    return 0 if ok else 1


def _add_common(sub, identity=False):
    sub.add_argument("--max-enum", type=int, default=DEFAULT_ENUM_CAP,
                     help=f"codeword enumeration cap (default {DEFAULT_ENUM_CAP})")
    sub.add_argument("--format", choices=["text"], default="text",
                     help="report format")
    if identity:
        sub.add_argument("--identity", choices=IDENTITY_CHOICES, default="all",
                         help="which identity to check (default: all)")
        sub.add_argument("--perturb", default=None, help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="macw",
        description="Exact weight-enumerator computations for linear codes over GF(q) "
                    "and verification of the identities relating a code to its dual.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", help="weight distribution and enumerator polynomial")
    p.add_argument("file", help="code file")
    _add_common(p)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("dual", help="dual generator and dual weight distribution")
    p.add_argument("file", help="code file")
    _add_common(p)
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("transform", help="dual-distribution transform, both implementations")
    p.add_argument("file", help="code file")
    _add_common(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("verify", help="run identity checkers; exit 0 iff every residual is 0")
    p.add_argument("file", help="code file")
    _add_common(p, identity=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("kraw", help="Krawtchouk coefficient table K_r(j)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--r", type=int, default=None, help="restrict to one r")
    p.add_argument("--j", type=int, default=None, help="restrict to one j")
    p.set_defaults(func=_cmd_kraw)

    p = sub.add_parser("demo", help="verify a built-in corpus entry")
    p.add_argument("name", nargs="?", default=None,
                   help="corpus entry (see --list)")
    p.add_argument("--list", action="store_true", help="list corpus entries")
    _add_common(p, identity=True)
    p.set_defaults(func=_cmd_demo)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CodeFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
