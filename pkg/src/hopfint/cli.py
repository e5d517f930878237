"""Command line: ``hopfint verify|integrals|separability|smash|family|enumerate-semigroups``.

Exit codes: 0 when a verdict was produced (negative verdicts included),
2 for unreadable or malformed input, 3 when the ring tier or the object's
structure cannot answer the question.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .algebra import Bialgebra, HopfAlgebra, format_vector, verify_algebra, verify_hopf
from .errors import HopfIntError, HypothesisUnsatisfied, ParseError
from .families import DEFAULT_DEGREE, family_names, run_family
from .fileformat import load_description, parse_action_file, parse_vector, _Parser
from .integrals import (
    FOUND,
    NOT_SEPARABLE,
    integrals,
    separability_from_integral,
    separability_generic,
    verify_integral,
)
from .rings import parse_ring
from .semigroups import all_semigroups, finite_group_criterion, semigroup_integrals
from .smash import (
    COCOMMUTATIVE,
    EPSILON_UNIT,
    format_smash,
    lemma_4_4_sides,
    smash_invariants,
    smash_product,
    smash_separability,
    trace_one_search,
)

EXIT_OK, EXIT_PARSE, EXIT_CAPABILITY = 0, 2, 3


@dataclass
class Report:
    command: list
    verdicts: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    timing: float = 0.0

    def say(self, text):
        self.lines.append(text)

    def render(self):
        out = ["$ hopfint " + " ".join(self.command)]
        out.extend(self.lines)
        if self.verdicts:
            out.append("verdicts:")
            out.extend(f"  {k}: {v}" for k, v in self.verdicts.items())
        return "\n".join(out) + "\n"

    def to_record(self, timing=True):
        rec = {
            "command": list(self.command),
            "verdicts": dict(self.verdicts),
            "certificates": self.certificates,
            "lines": list(self.lines),
        }
        if timing:
            rec["timing"] = self.timing
        return rec

    def to_json(self, timing=True):
        return json.dumps(self.to_record(timing), indent=2, sort_keys=True)

    @classmethod
    def from_record(cls, rec):
        return cls(list(rec["command"]), dict(rec["verdicts"]), rec["certificates"],
                   list(rec["lines"]), rec.get("timing", 0.0))

    @classmethod
    def from_json(cls, text):
        return cls.from_record(json.loads(text))

    parse = from_json


def _vec_record(obj, v):
    return {"rendered": format_vector(obj.ring, obj.labels, v),
            "coefficients": [obj.ring.format_element(x) for x in v]}


# ---------------------------------------------------------------------------
# commands


def cmd_verify(path, report):
    d = load_description(path)
    obj = d.obj
    if d.kind == "module-algebra":
        from .smash import verify_module_algebra

        rep = verify_module_algebra(obj)
    elif isinstance(obj, Bialgebra):
        rep = verify_hopf(obj)
    else:
        rep = verify_algebra(obj)
    report.say(f"{d.kind} over {d.ring}")
    for name, count in rep.checks.items():
        report.say(f"  {name}: {count}")
    for v in rep.violations:
        report.say(f"  violation: {v}")
    report.verdicts["verify"] = rep.status
    report.certificates["verify"] = rep.to_record()
    return report


def cmd_integrals(path, side, candidate, report):
    d = load_description(path)
    h = d.obj
    if d.kind in ("algebra", "module-algebra"):
        raise HopfIntError("integrals need a bialgebra or Hopf algebra file")
    if candidate is not None:
        p = _Parser("", path)
        t = parse_vector(p, h.ring, h.labels, candidate, None)
        ok = verify_integral(h, t, side)
        report.say(f"candidate {format_vector(h.ring, h.labels, t)} is "
                   f"{'' if ok else 'not '}a {side} integral")
        report.verdicts["candidate"] = ok
        report.certificates["candidate"] = _vec_record(h, t)
        return report
    space = integrals(h, side)
    gens = space.generators
    report.say(f"{side} integrals of {d.kind} over {d.ring}:")
    if not gens:
        report.say("  zero module")
    for g in space.generators_labeled():
        report.say(f"  {g}")
    report.verdicts["integrals"] = "zero module" if not gens else f"{len(gens)} generator(s)"
    report.certificates["integrals"] = [_vec_record(h, g) for g in gens]
    if d.semigroup is not None:
        si = semigroup_integrals(d.ring, d.semigroup, side)
        report.say("semigroup formula:")
        if si.is_zero:
            report.say("  no ideal-group, zero module")
        for g, b in zip(si.groups, si.basis):
            report.say(f"  ideal-group {[d.semigroup.labels[x] for x in g.elements]}: "
                       f"{format_vector(d.ring, h.labels, b)}")
        equal = None if si.witness is None else si.witness.equal
        report.verdicts["formula_matches_solver"] = equal if equal is not None else si.note
        report.certificates["formula"] = {
            "generator": _vec_record(h, si.generator),
            "basis": [_vec_record(h, b) for b in si.basis],
        }
    return report


def cmd_separability(path, candidate, report):
    d = load_description(path)
    h = d.obj
    verdict_from = None
    if isinstance(h, HopfAlgebra):
        t = None
        if candidate is not None:
            t = parse_vector(_Parser("", path), h.ring, h.labels, candidate, None)
        res = separability_from_integral(h, candidate=t)
        report.say(f"from integral: {res.status} {res.note}".rstrip())
        if res.found:
            report.certificates["from_integral"] = res.certificate.to_record(h)
            report.say("  omega = " + " + ".join(
                f"{c}*{k}" for k, c in res.certificate.to_record(h)["element"].items()))
        verdict_from = res.status
    else:
        report.say("from integral: skipped (no antipode)")
    try:
        gen = separability_generic(h)
        report.say(f"generic solve: {gen.status}")
        if gen.found:
            report.certificates["generic"] = gen.certificate.to_record(h)
        verdict_gen = gen.status
    except HopfIntError as exc:
        if candidate is None and verdict_from is None:
            raise
        report.say(f"generic solve: skipped ({exc})")
        verdict_gen = None
    statuses = {s for s in (verdict_from, verdict_gen) if s is not None}
    if FOUND in statuses:
        verdict = "SEPARABLE"
    elif NOT_SEPARABLE in statuses:
        verdict = "NOT SEPARABLE"
    else:
        verdict = "UNDECIDED"
    report.verdicts["separability"] = verdict
    if verdict_from is not None and verdict_gen is not None:
        agree = (verdict_from == FOUND) == (verdict_gen == FOUND)
        report.verdicts["methods_agree"] = agree
    return report


def _load_module_algebra(files):
    if len(files) == 1:
        d = load_description(files[0])
        if d.kind != "module-algebra":
            raise ParseError("expected a module-algebra file", None, files[0])
        return d
    if len(files) == 3:
        alg, hopf = load_description(files[0]), load_description(files[1])
        try:
            return parse_action_file(files[2], alg, hopf)
        except OSError as exc:
            raise ParseError(f"cannot read file: {exc.strerror}", None, files[2]) from None
    raise ParseError("smash takes one module-algebra file or ALGEBRA HOPF ACTION files")


def cmd_smash(sub, files, mode, report):
    d = _load_module_algebra(files)
    ma = d.obj
    if sub == "invariants":
        sp = smash_product(ma)
        inv = smash_invariants(sp)
        report.say(f"(A#H)^H has {inv.dimension()} canonical generator(s):")
        for g in inv.canonical:
            report.say(f"  {format_smash(sp, g)}")
        report.verdicts["invariants"] = "zero module" if inv.is_zero() else inv.dimension()
        report.certificates["invariants"] = [format_smash(sp, g) for g in inv.canonical]
    elif sub == "lemma44":
        lhs, rhs = lemma_4_4_sides(ma)
        report.say(f"invariants: {lhs.dimension()} generator(s); (1#int)(A#1): {rhs.dimension()}")
        report.verdicts["lemma44"] = lhs == rhs
        report.certificates["lemma44"] = {"invariants": [list(map(str, r)) for r in lhs.canonical],
                                          "product": [list(map(str, r)) for r in rhs.canonical]}
    elif sub == "trace-one":
        res = trace_one_search(ma)
        report.say(f"trace one: {res.status} {res.note}".rstrip())
        if res.certificate is not None:
            c = res.certificate
            report.say(f"  t = {format_vector(ma.ring, ma.hopf.labels, c.t)}")
            report.say(f"  a = {format_vector(ma.ring, ma.alg.labels, c.a)}")
            report.certificates["trace_one"] = {
                "t": _vec_record(ma.hopf, c.t), "a": _vec_record(ma.alg, c.a),
                "beta": [[ma.ring.format_element(x) for x in row] for row in c.beta],
                "checks": c.checks}
        report.verdicts["trace_one"] = res.status
    elif sub == "separability":
        _smash_separability(ma, mode, report)
    else:
        raise ValueError(sub)
    return report


def _smash_separability(ma, mode, report):
    from .algebra import is_cocommutative

    if not isinstance(ma.hopf, HopfAlgebra):
        report.say("no Omega certificate: H has no antipode")
        if ma.alg.rank == 1 and ma.alg.unit == [ma.ring.one]:
            gen = separability_generic(smash_product(ma).alg)
            report.say(f"A = R, so A#H over A is A#H over R; generic solve: {gen.status}")
            report.verdicts["smash_separability"] = "none" if not gen.found else "SEPARABLE"
        else:
            report.verdicts["smash_separability"] = "none"
        return
    if mode is None:
        mode = COCOMMUTATIVE if is_cocommutative(ma.hopf) else EPSILON_UNIT
    try:
        cert = smash_separability(ma, mode)
    except HypothesisUnsatisfied as exc:
        report.say(f"{mode}: {exc}")
        report.verdicts["smash_separability"] = "none"
        report.verdicts["unsatisfied"] = exc.equation
        return
    sp = smash_product(ma)
    report.say(f"{mode}: Omega verified")
    report.say(f"  t = {format_vector(ma.ring, ma.hopf.labels, cert.t)}")
    report.say(f"  z = {format_vector(ma.ring, ma.alg.labels, cert.z)}")
    N = sp.alg.rank
    terms = {f"{sp.alg.labels[i // N]}@{sp.alg.labels[i % N]}": ma.ring.format_element(c)
             for i, c in enumerate(cert.omega) if c != ma.ring.zero}
    report.certificates["omega"] = {"mode": mode, "terms": terms, "checks": cert.checks}
    report.verdicts["smash_separability"] = "SEPARABLE"


def cmd_family(name, ring_text, param, degree, report):
    ring = parse_ring(ring_text)
    if param is not None:
        try:
            param = ring.parse_element(param)
        except HopfIntError as exc:
            raise ParseError(f"bad family parameter {param!r} in {ring}: {exc}") from None
    rep = run_family(name, ring, param, degree)
    report.say(f"family {name} over {ring}, parameter {rep.parameter}, degree <= {degree}")
    for k, v in rep.checks.items():
        report.say(f"  {k}: {v}")
    report.say(f"  scope: {rep.scope}")
    report.verdicts["family"] = rep.verdict
    report.certificates["family"] = rep.to_record()
    return report


def cmd_enumerate(max_order, ring_texts, report):
    rings = [parse_ring(r) for r in ring_texts]
    mismatches = 0
    criterion_failures = 0
    counts = {}
    for n in range(1, max_order + 1):
        count = 0
        for S in all_semigroups(n):
            count += 1
            if not finite_group_criterion(S):
                criterion_failures += 1
            for R in rings:
                si = semigroup_integrals(R, S, "left")
                if si.witness is None or not si.witness.equal:
                    mismatches += 1
        counts[str(n)] = count
        report.say(f"order {n}: {count} associative tables")
    report.verdicts["formula_mismatches"] = mismatches
    report.verdicts["cancellative_counterexamples"] = criterion_failures
    report.certificates["counts"] = counts
    return report


# ---------------------------------------------------------------------------
# entry point


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hopfint",
        description="Exact integrals and separability for finite-rank Hopf algebras.",
        epilog="exit codes: 0 verdict produced, 2 bad input, 3 unsupported question",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the structured report (JSON) to this file")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def command(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    p = command("verify", "check the axioms of a described object")
    p.add_argument("file")

    p = command("integrals", "left or right integrals")
    p.add_argument("file")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.add_argument("--candidate", help="verify this element instead of solving, e.g. '1 + g'")

    p = command("separability", "separability of a Hopf algebra over its ring")
    p.add_argument("file")
    p.add_argument("--candidate", help="a left integral to use, e.g. '1 + g'")

    p = command("smash", "smash product questions for a module algebra")
    p.add_argument("sub", choices=["invariants", "lemma44", "trace-one", "separability"])
    p.add_argument("files", nargs="+", help="MODULE_ALGEBRA or ALGEBRA HOPF ACTION")
    p.add_argument("--mode", choices=[COCOMMUTATIVE.lower(), EPSILON_UNIT.lower()])

    p = command("family", "truncated infinite-rank families")
    p.add_argument("name", choices=family_names())
    p.add_argument("ring")
    p.add_argument("param", nargs="?")
    p.add_argument("degree_pos", nargs="?", type=int, metavar="DEGREE")
    p.add_argument("--degree", type=int)

    p = command("enumerate-semigroups", "exhaustive integral-formula oracle")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--ring", action="append", help="repeatable; default GF(2) and GF(3)")
    return ap


def _echo(argv):
    """The command line minus ``--out``, which names an output, not an input."""
    out, skip = [], False
    for a in argv:
        if skip:
            skip = False
        elif a == "--out":
            skip = True
        elif not a.startswith("--out="):
            out.append(a)
    return out


def run(argv):
    args = build_parser().parse_args(argv)
    report = Report(_echo(argv))
    start = time.perf_counter()
    if args.cmd == "verify":
        cmd_verify(args.file, report)
    elif args.cmd == "integrals":
        cmd_integrals(args.file, args.side, args.candidate, report)
    elif args.cmd == "separability":
        cmd_separability(args.file, args.candidate, report)
    elif args.cmd == "smash":
        mode = args.mode.upper() if args.mode else None
        cmd_smash(args.sub, args.files, mode, report)
    elif args.cmd == "family":
        param, degree = args.param, args.degree or args.degree_pos
        if args.name == "kxkx" and param is not None and degree is None and param.isdigit():
            param, degree = None, int(param)  # kxkx takes no parameter
        cmd_family(args.name, args.ring, param, degree or DEFAULT_DEGREE, report)
    elif args.cmd == "enumerate-semigroups":
        cmd_enumerate(args.max_order, args.ring or ["GF(2)", "GF(3)"], report)
    report.timing = round(time.perf_counter() - start, 6)
    return report, args


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, args = run(argv)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HopfIntError as exc:
        print(f"cannot answer: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    sys.stdout.write(report.render())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json() + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
