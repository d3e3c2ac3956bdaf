"""Command-line interface.

Every subcommand has a plain-text rendering and a JSON twin (--json) with
the same numeric content.  Exit codes: 0 success, 1 domain error (reported
as an error object in JSON mode), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import adversary as adv
from . import chains as ch
from . import classify as cl
from .padic import TauSpec, stream, tau_from_json, zero
from .poly import RingElement, format_element
from .ring import NotMemberError, RingContext, StepBudgetExceeded, phi
from .syntax import ParseError, parse_element


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tau", help="tau spec as inline JSON")
    common.add_argument("--tau-file", help="path to a tau spec JSON file")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument(
        "--seed", type=int, help="use a seeded stream spec when --tau is not given"
    )

    top = argparse.ArgumentParser(
        prog="quasieuclid",
        description="Exact arithmetic in subrings of Q[x] cut out by p-adic residue conditions.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", parents=[common], help="test ring membership")
    p.add_argument("element")

    p = sub.add_parser("divmod", parents=[common], help="division with remainder")
    p.add_argument("dividend")
    p.add_argument("divisor")

    p = sub.add_parser("gcd", parents=[common], help="gcd with Bezout coefficients")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("chain", parents=[common], help="canonical division chain with norm trace")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--max-steps", type=int, default=10_000)

    p = sub.add_parser("normalize", parents=[common], help="rewrite a chain to positive quotients")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("quotients", nargs="+")

    p = sub.add_parser("compare", parents=[common], help="compare a chain against the canonical one")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("quotients", nargs="+")

    p = sub.add_parser("adversary", parents=[common], help="degree-retaining pair and its report")
    p.add_argument("k", type=int)
    p.add_argument("b")
    p.add_argument(
        "--norm-file",
        help="JSON norm table {element: value}; walks the descent it cannot sustain",
    )

    p = sub.add_parser("scan", parents=[common], help="residue-zero scan over a prime box")
    p.add_argument("h")
    p.add_argument("--pmax", type=int, default=50)
    p.add_argument("--kmax", type=int, default=8)

    p = sub.add_parser("witness", parents=[common], help="descending divisibility chain below h")
    p.add_argument("h")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--pmax", type=int, default=50)
    p.add_argument("--kmax", type=int, default=8)

    p = sub.add_parser("tau", parents=[common], help="inspect tau_p at one prime and precision")
    p.add_argument("p", type=int)
    p.add_argument("k", type=int)

    return top


def _load_tau(args) -> TauSpec:
    if args.tau and args.tau_file:
        raise UsageError("--tau and --tau-file are mutually exclusive")
    text = args.tau
    if args.tau_file:
        try:
            with open(args.tau_file, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read tau file: {exc}")
    if text is not None:
        try:
            return tau_from_json(json.loads(text))
        except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad tau spec: {exc}")
    if args.seed is not None:
        return stream(args.seed)
    return zero()


def _parse(text: str) -> RingElement:
    try:
        return parse_element(text)
    except ParseError as exc:
        raise UsageError(f"bad polynomial {text!r}: {exc}")


def _fmt(e: RingElement) -> str:
    return format_element(e)


# -- subcommand handlers: each returns (json_payload, text_lines) ------------


def _cmd_member(ctx, args):
    e = _parse(args.element)
    verdict = ctx.is_member(e)
    payload = {"element": e.to_json(), "member": verdict}
    return payload, [f"{_fmt(e)}: {'true' if verdict else 'false'}"]


def _cmd_divmod(ctx, args):
    q = ctx.make_element(_parse(args.dividend))
    r = ctx.make_element(_parse(args.divisor))
    p, s = ctx.divmod(q, r)
    payload = {"quotient": p.to_json(), "remainder": s.to_json()}
    return payload, [f"quotient:  {_fmt(p)}", f"remainder: {_fmt(s)}"]


def _cmd_gcd(ctx, args):
    a = ctx.make_element(_parse(args.a))
    b = ctx.make_element(_parse(args.b))
    g, u, v = ctx.gcd_bezout(a, b)
    payload = {
        "a": a.to_json(),
        "b": b.to_json(),
        "gcd": g.to_json(),
        "u": u.to_json(),
        "v": v.to_json(),
    }
    lines = [
        f"gcd: {_fmt(g)}",
        f"bezout: {_fmt(g)} = ({_fmt(u)})*({_fmt(a)}) + ({_fmt(v)})*({_fmt(b)})",
    ]
    return payload, lines


def _phi_list(chain: ch.DivisionChain) -> list:
    pairs = [(chain.a, chain.b)]
    prev, cur = chain.a, chain.b
    for r in chain.remainders:
        pairs.append((cur, r))
        prev, cur = cur, r
    return [list(phi(x, y)) for x, y in pairs]


def _cmd_chain(ctx, args):
    a = _parse(args.a)
    b = _parse(args.b)
    chain = ctx.qe_chain(a, b, max_steps=args.max_steps)
    norms = _phi_list(chain)
    payload = chain.to_json()
    payload["phi"] = norms
    lines = [f"a = {_fmt(chain.a)}", f"b = {_fmt(chain.b)}", f"phi(a, b) = {tuple(norms[0])}"]
    for i, (q, r) in enumerate(zip(chain.quotients, chain.remainders), start=1):
        lines.append(
            f"step {i}: quotient {_fmt(q)}, remainder {_fmt(r)}, phi -> {tuple(norms[i])}"
        )
    return payload, lines


def _chain_from_args(ctx, args) -> ch.DivisionChain:
    a = _parse(args.a)
    b = _parse(args.b)
    quots = [_parse(q) for q in args.quotients]
    return ch.build_chain(a, b, quots, ctx=ctx)


def _cmd_normalize(ctx, args):
    chain = _chain_from_args(ctx, args)
    steps = []
    final = chain
    for op, final in ch.normalize_steps(chain):
        steps.append((op, final))
    payload = {
        "start": chain.to_json(),
        "steps": [{"op": op, "chain": c.to_json()} for op, c in steps],
        "result": final.to_json(),
    }
    lines = [f"start: {chain}"]
    lines += [f"{op} -> {c}" for op, c in steps]
    lines.append(f"result: {final}")
    return payload, lines


def _cmd_compare(ctx, args):
    chain = _chain_from_args(ctx, args)
    report = ch.compare_to_qe(ctx, chain)
    payload = report.to_json()
    lines = [f"chain: {chain}", f"canonical length: {report.canonical.length}"]
    for row in report.rows:
        lines.append(
            f"l={row.index}: |r_l| = {_fmt(row.remainder_abs)} >= {_fmt(row.bound)}"
            f" : {'ok' if row.ok else 'VIOLATED'}"
        )
    if report.final is not None:
        row = report.final
        lines.append(
            f"final (positive tail): |r_k| = {_fmt(row.remainder_abs)} >= {_fmt(row.bound)}"
            f" : {'ok' if row.ok else 'VIOLATED'}"
        )
    lines.append(f"verdict: {'ok' if report.ok else 'VIOLATED'}")
    return payload, lines


def _norm_descent_demo(ctx, args, report) -> tuple[dict, list[str]]:
    try:
        with open(args.norm_file, "r", encoding="utf-8") as fh:
            table = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read norm table: {exc}")
    norms = {}
    for text, value in table.items():
        norms[_parse(text)] = int(value)
    k = args.k
    lines = ["norm-table walk (a finite table cannot sustain the descent):"]
    trail = []
    b = report.b
    while True:
        if b not in norms:
            lines.append(f"  N({_fmt(b)}) is not in the table; walk stops here")
            verdict = "table exhausted"
            break
        a = adv.adversarial_pair(ctx, k, b)
        qe = ctx.qe_chain(a, b)
        options = qe.remainders[: min(k, qe.length)]
        nb = norms[b]
        lines.append(f"  b = {_fmt(b)}, N(b) = {nb}, a = {_fmt(a)}")
        pick = None
        for l, r in enumerate(options, start=1):
            if r in norms and norms[r] < nb:
                pick = (l, r)
                break
        if pick is None:
            lines.append(
                "  no remainder within k stages has smaller table norm,"
                " yet every one keeps degree >= deg b: the table fails the"
                " k-stage property here"
            )
            verdict = "table refuted"
            break
        l, r = pick
        lines.append(f"  take r_{l} = {_fmt(r)} with N = {norms[r]} < {nb}")
        trail.append(r)
        b = r
    lines.append(f"  verdict: {verdict}")
    payload = {
        "trail": [e.to_json() for e in trail],
        "verdict": verdict,
    }
    return payload, lines


def _cmd_adversary(ctx, args):
    b = ctx.make_element(_parse(args.b))
    a = adv.adversarial_pair(ctx, args.k, b)
    report = adv.degree_retention_check(ctx, args.k, a, b)
    payload = report.to_json()
    lines = [
        f"k = {report.k}, b = {_fmt(report.b)}",
        f"(c, d) = ({report.c}, {report.d}), beta = {report.beta}",
        f"a = {_fmt(report.a)}",
        f"degrees of first {2 * report.k} remainders: {list(report.degrees)}",
        f"verdict: {'true' if report.verdict else 'false'}",
    ]
    if args.norm_file:
        extra_payload, extra_lines = _norm_descent_demo(ctx, args, report)
        payload["norm_walk"] = extra_payload
        lines += extra_lines
    return payload, lines


def _cmd_scan(ctx, args):
    h = _parse(args.h)
    scan = cl.scan_sh(ctx, h, args.pmax, args.kmax)
    payload = scan.to_json()
    lines = [f"h = {_fmt(h)}, box: p <= {args.pmax}, k <= {args.kmax}"]
    if not scan.hits:
        lines.append("no residue zeros in the box")
    for hit in scan.hits:
        flags = []
        if hit.saturated:
            flags.append("saturated")
        if hit.exact:
            flags.append("exact")
        suffix = f" ({', '.join(flags)})" if flags else ""
        lines.append(f"p = {hit.prime}: depth {hit.depth}{suffix}")
    return payload, lines


def _cmd_witness(ctx, args):
    h = _parse(args.h)
    witness = cl.non_ufd_witness(ctx, h, args.depth, p_max=args.pmax, k_max=args.kmax)
    if witness is None:
        payload = {"h": h.to_json(), "witness": None}
        return payload, ["no witness within bounds (inconclusive)"]
    payload = {"h": h.to_json(), "witness": witness.to_json()}
    lines = [f"kind: {witness.kind}", f"primes: {list(witness.primes)}"]
    lines += [f"  {_fmt(e)}" for e in witness.chain]
    return payload, lines


def _cmd_tau(ctx, args):
    r = ctx.tau.query(args.p, args.k)
    payload = {
        "p": r.prime,
        "k": r.precision,
        "value": r.value,
        "digits": list(r.digits()),
    }
    lines = [f"tau_{args.p} mod {args.p}^{args.k} = {r.value} (digits {list(r.digits())})"]
    return payload, lines


_HANDLERS = {
    "member": _cmd_member,
    "divmod": _cmd_divmod,
    "gcd": _cmd_gcd,
    "chain": _cmd_chain,
    "normalize": _cmd_normalize,
    "compare": _cmd_compare,
    "adversary": _cmd_adversary,
    "scan": _cmd_scan,
    "witness": _cmd_witness,
    "tau": _cmd_tau,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    json_mode = getattr(args, "json", False)
    try:
        ctx = RingContext(_load_tau(args))
        payload, lines = _HANDLERS[args.command](ctx, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotMemberError, ZeroDivisionError, ValueError, StepBudgetExceeded) as exc:
        if json_mode:
            print(json.dumps({"error": str(exc)}, sort_keys=True))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    if json_mode:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
