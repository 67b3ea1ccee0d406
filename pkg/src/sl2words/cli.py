"""Command-line front end.

Exit codes: 0 on success, 1 when a theorem-backed check finds a
counterexample, 2 on usage errors.  Data goes to stdout, progress and
timings to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Callable, Sequence

from .arcs import (
    all_configs,
    catalan_configs,
    irreducible_configs,
    left_end_map,
    nconf_configs,
    standard_config,
    steady_configs,
)
from .corpus import conf_connected_words, table_rows
from .degeneracy import DG_CAP, deg_std_onto_check, degeneracy_graph, vertex_over_check
from .rep import H_CAP, h_exact, h_rules, pivots
from .words import DomainError, Word, format_word, normalize_shift, omega, parse_word, slide

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2

TABLE_CAP = 12
VERIFY_CAPS = {
    "sandwich": 10,
    "slide-invariance": 10,
    "pivots-steady": 10,
    "vertex-over": 10,
    "deg-std-onto": 8,
}
THEOREM_BACKED = {"sandwich", "slide-invariance"}


class UsageError(Exception):
    pass


def poly_str(coeffs: Sequence[int]) -> str:
    """``[2, 0, 1]`` -> ``x^2+2``."""
    if not coeffs:
        return "0"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


def _progress(enabled: bool) -> Callable[[str], None] | None:
    if not enabled:
        return None

    def emit(msg: str) -> None:
        print(msg, file=sys.stderr, flush=True)

    return emit


def _dump_json(obj: object) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def _word(text: str) -> Word:
    try:
        return parse_word(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_h(args: argparse.Namespace) -> int:
    w = _word(args.word)
    t0 = time.perf_counter()
    record: dict[str, object] = {"command": "h", "word": list(w)}
    if args.rules_only:
        res = h_rules(w)
        record.update(h=res.value, method="rules", rules=res.rules)
    else:
        try:
            r = h_exact(w, certify=args.certify, with_basis=args.basis, cap=None if args.no_cap else H_CAP)
        except DomainError as exc:
            raise UsageError(str(exc)) from exc
        record.update(h=r.h, method=r.method, lower=r.lower, upper=r.upper, certified=r.certified)
        if args.basis and r.space is not None:
            record["basis"] = r.space.to_records()
    elapsed = time.perf_counter() - t0
    if args.json:
        sys.stdout.write(_dump_json(record))
    else:
        h = record["h"]
        print(f"word: {format_word(w)}")
        print(f"h: {'unknown' if h is None else h}")
        print(f"method: {record['method']}")
        if "rules" in record:
            print(f"rules: {', '.join(record['rules']) or '-'}")
        if record.get("lower") is not None:
            print(f"bounds: {record['lower']} <= h <= {record['upper']}")
            print(f"certified: {'yes' if record['certified'] else 'no'}")
        for k, vec in enumerate(record.get("basis", [])):
            print(f"vector {k + 1}:")
            for signs, coeff in vec:
                print(f"  {signs}  {coeff}")
    print(f"time: {elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK


_CLASSES: dict[str, Callable[[Word], list]] = {
    "all": all_configs,
    "catalan": catalan_configs,
    "irr": irreducible_configs,
    "steady": steady_configs,
    "nconf": nconf_configs,
    "standard": lambda w: [C] if (C := standard_config(w)) is not None else [],
}


def cmd_confs(args: argparse.Namespace) -> int:
    w = _word(args.word)
    try:
        confs = sorted(_CLASSES[args.cls](w))
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        sys.stdout.write(
            _dump_json(
                {
                    "command": "confs",
                    "word": list(w),
                    "class": args.cls,
                    "count": len(confs),
                    "configs": [[list(a) for a in C] for C in confs],
                }
            )
        )
        return EXIT_OK
    print(f"word: {format_word(w)}")
    print(f"class: {args.cls}")
    print(f"count: {len(confs)}")
    for C in confs:
        arcs = " ".join(f"({i},{j})" for i, j in C)
        signs = "".join("+" if s > 0 else "-" for s in left_end_map(C, len(w)))
        print(f"{arcs}  {signs}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    L = args.length
    if L % 2 or L < 2:
        raise UsageError("--length must be a positive even number")
    if L > TABLE_CAP and not args.force:
        raise UsageError(f"--length above {TABLE_CAP} needs --force")
    progress = _progress(not args.quiet)
    rows = table_rows(L, lambda w: h_exact(w, certify=args.certify, cap=None).h, progress)
    if args.json:
        sys.stdout.write(
            _dump_json(
                {
                    "command": "table",
                    "length": L,
                    "rows": [
                        {
                            "word": format_word(r.word),
                            "h": r.h,
                            "conf_count": r.conf_count,
                            "poly": list(r.poly),
                            "class_size": r.class_size,
                        }
                        for r in rows
                    ],
                }
            )
        )
    elif args.csv:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["word", "h", "conf_count", "poly"])
        for r in rows:
            wr.writerow([format_word(r.word), r.h, r.conf_count, poly_str(r.poly)])
        sys.stdout.write(buf.getvalue())
    else:
        width = max(len(format_word(r.word)) for r in rows) if rows else 4
        print(f"{'word':<{width}}  h  conf  poly")
        for r in rows:
            print(f"{format_word(r.word):<{width}}  {r.h}  {r.conf_count:>4}  {poly_str(r.poly)}")
    return EXIT_OK


def _corpus(max_len: int, progress: Callable[[str], None] | None) -> list[Word]:
    words: list[Word] = []
    for L in range(2, max_len + 1, 2):
        words.extend(conf_connected_words(L, progress))
        if progress:
            progress(f"corpus: length {L}, {len(words)} words so far")
    return words


def _verify_sandwich(words: list[Word], progress) -> list[dict]:
    bad = []
    for k, w in enumerate(words):
        r = h_exact(w, cap=None)
        if not (r.lower <= r.h <= r.upper):
            bad.append({"word": format_word(w), "h": r.h, "iconf": r.lower, "sconf": r.upper})
        if progress and k % 500 == 0:
            progress(f"sandwich: {k}/{len(words)}")
    return bad


def _verify_slides(words: list[Word], progress) -> list[dict]:
    bad = []
    for k, w in enumerate(words):
        h = h_exact(w, cap=None).h
        hs = h_exact(normalize_shift(slide(w)), cap=None).h
        ho = h_exact(normalize_shift(omega(w)), cap=None).h
        if not h == hs == ho:
            bad.append({"word": format_word(w), "h": h, "h_slide": hs, "h_omega": ho})
        if progress and k % 500 == 0:
            progress(f"slide-invariance: {k}/{len(words)}")
    return bad


def _verify_pivots(words: list[Word], progress) -> list[dict]:
    bad = []
    for k, w in enumerate(words):
        piv = set(pivots(w))
        steady = {left_end_map(C, len(w)) for C in steady_configs(w)}
        if not piv <= steady:
            extra = sorted(piv - steady, reverse=True)
            bad.append({"word": format_word(w), "outside": ["".join("+" if s > 0 else "-" for s in m) for m in extra]})
        if progress and k % 200 == 0:
            progress(f"pivots-steady: {k}/{len(words)}")
    return bad


def _verify_onto(words: list[Word], progress) -> list[dict]:
    bad = []
    for k, w in enumerate(words):
        r = deg_std_onto_check(w)
        if r.span != r.h or not r.singular:
            bad.append({"word": format_word(w), "h": r.h, "span": r.span, "singular": r.singular})
        if progress and k % 50 == 0:
            progress(f"deg-std-onto: {k}/{len(words)}")
    return bad


def cmd_verify(args: argparse.Namespace) -> int:
    cid = args.id
    L = args.max_length
    cap = VERIFY_CAPS[cid]
    if L > cap and not args.force:
        raise UsageError(f"--max-length above {cap} for {cid} needs --force")
    progress = _progress(not args.quiet)
    t0 = time.perf_counter()
    if cid == "vertex-over":
        found = [{"word": format_word(w)} for w in vertex_over_check(L, progress)]
        checked = sum(len(conf_connected_words(k)) for k in range(4, L + 1, 2))
    else:
        words = _corpus(L, progress)
        checked = len(words)
        run = {
            "sandwich": _verify_sandwich,
            "slide-invariance": _verify_slides,
            "pivots-steady": _verify_pivots,
            "deg-std-onto": _verify_onto,
        }[cid]
        found = run(words, progress)
    kind = "theorem" if cid in THEOREM_BACKED else "conjecture"
    if args.json:
        sys.stdout.write(
            _dump_json(
                {
                    "command": "verify",
                    "id": cid,
                    "kind": kind,
                    "max_length": L,
                    "checked": checked,
                    "counterexamples": found,
                }
            )
        )
    else:
        print(f"check: {cid} ({kind})")
        print(f"max length: {L}")
        print(f"words checked: {checked}")
        print(f"counterexamples: {len(found)}")
        for item in found:
            print("  " + " ".join(f"{k}={v}" for k, v in item.items()))
    print(f"time: {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    if found and cid in THEOREM_BACKED:
        return EXIT_FOUND
    return EXIT_OK


def cmd_dg(args: argparse.Namespace) -> int:
    if args.n > DG_CAP and not args.force:
        raise UsageError(f"--n above {DG_CAP} needs --force")
    try:
        g = degeneracy_graph(args.n, with_h=args.h, override_cap=args.force, progress=_progress(not args.quiet))
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if args.orbits:
        sizes = g.orbit_sizes()
        if args.format == "json":
            out = {
                "command": "dg-orbits",
                "n": g.n,
                "vertices": len(g.vertices),
                "orbit_count": sum(len(v) for v in sizes.values()),
                "orbits": {str(d): s for d, s in sizes.items()},
            }
            sys.stdout.write(_dump_json(out))
        else:
            print(f"DG({2 * g.n}): {len(g.vertices)} vertices, {sum(len(v) for v in sizes.values())} orbits")
            for d, s in sizes.items():
                print(f"dim {d}: {' '.join(map(str, s))}")
        return EXIT_OK
    if args.format == "json":
        data = g.to_json()
        data["command"] = "dg"
        sys.stdout.write(_dump_json(data))
    else:
        sys.stdout.write(g.to_dot())
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sl2words", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    ph = sub.add_parser("h", help="dimension of trivial submodules of a word")
    ph.add_argument("word")
    ph.add_argument("--rules-only", action="store_true", help="closed-form rules only")
    ph.add_argument("--certify", action="store_true", help="always run the symbolic rank")
    ph.add_argument("--basis", action="store_true", help="print a basis of singular vectors")
    ph.add_argument("--no-cap", action="store_true", help=f"allow length above {H_CAP} (memory hungry)")
    ph.add_argument("--json", action="store_true")
    ph.set_defaults(func=cmd_h)

    pc = sub.add_parser("confs", help="list arc configurations")
    pc.add_argument("word")
    pc.add_argument("--class", dest="cls", choices=sorted(_CLASSES), default="all")
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=cmd_confs)

    pt = sub.add_parser("table", help="table of conf-connected word classes")
    pt.add_argument("--length", type=int, required=True)
    pt.add_argument("--conf-connected", action="store_true", default=True, help="the only mode; kept for clarity")
    fmt = pt.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    pt.add_argument("--certify", action="store_true")
    pt.add_argument("--force", action="store_true")
    pt.add_argument("--quiet", action="store_true")
    pt.set_defaults(func=cmd_table)

    pv = sub.add_parser("verify", help="exhaustive checks of theorems and conjectures")
    pv.add_argument("id", choices=sorted(VERIFY_CAPS))
    pv.add_argument("--max-length", type=int, default=8)
    pv.add_argument("--json", action="store_true")
    pv.add_argument("--force", action="store_true")
    pv.add_argument("--quiet", action="store_true")
    pv.set_defaults(func=cmd_verify)

    pd = sub.add_parser("dg", help="degeneracy graph DG(2n)")
    pd.add_argument("--n", type=int, required=True)
    pd.add_argument("--orbits", action="store_true", help="print orbit sizes per dimension")
    pd.add_argument("--h", action="store_true", help="label vertices by h of a generic word")
    pd.add_argument("--format", choices=("dot", "json"), default="dot")
    pd.add_argument("--force", action="store_true")
    pd.add_argument("--quiet", action="store_true")
    pd.set_defaults(func=cmd_dg)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
