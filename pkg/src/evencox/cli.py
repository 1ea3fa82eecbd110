"""Command-line entry point: ``evencox <command> [flags] SYSTEM``.

SYSTEM is a path to a ``.cox`` file or the name of a bundled fixture.  Every
command prints a JSON run report; the exit status is 0 on success, 1 when a
verification fails and 2 on bad input.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Callable

from . import fixtures
from .coxeter import CoxeterError, CoxeterGroup, NotEvenError, SystemFormatError
from .davis import BallComplex, ball_order_complex, chain_counts
from .homology import (chain_complex, euler_characteristic, fraction_str, homology,
                       orbihedral_euler, relative_homology)
from .nerve import (build_nerve, check_commuting_link, check_sprime_pairwise_infinite, is_flag,
                    ruin_context, sphere_check)
from .reduction import (check_alternating_reduced, check_exchange, check_homomorphism,
                        check_one_reduction, check_reduction)
from .ruins import (OneLetterRuin, Verdict, build_ruin, check_color_well_defined, check_covering,
                    check_monochromatic, check_odd_meets_evens, check_same_color_disjoint,
                    check_trivial_action, check_two_even_colors, check_w_orbit, classify_codim1_faces,
                    color_classes, color_summary, ruin_components, verify_evens_isomorphism,
                    verify_excision)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

# Descriptive lemma ids with the numeric aliases accepted by --lemma.
ALIASES = {
    "2.1": "one-reduction", "2.2": "reduction", "3.1": "s-relations", "3.2": "commuting-link",
    "3.3": "alternating-reduced", "3.4": "homomorphism", "3.5": "same-color-disjoint",
    "3.6": "orbit-intersection", "3.7": "evens-isomorphism", "3.8": "two-even-colors",
    "3.9": "two-even-colors", "3.10": "odd-meets-evens", "3.11": "one-even-color",
    "4.1": "codim1-faces",
}


class InputError(Exception):
    pass


class Session:
    """One parsed system plus the ruins built for it, shared across checks."""

    def __init__(self, W: CoxeterGroup, radius: int):
        self.W = W
        self.radius = radius
        self._ruins: dict = {}
        self._balls: dict = {}

    def omega(self, t: int, radius: int | None = None) -> OneLetterRuin:
        key = (t, self.radius if radius is None else radius)
        if key not in self._ruins:
            self._ruins[key] = OneLetterRuin(self.W, t, key[1])
        return self._ruins[key]

    def ball(self, radius: int | None = None) -> BallComplex:
        r = self.radius if radius is None else radius
        if r not in self._balls:
            self._balls[r] = BallComplex(self.W, r)
        return self._balls[r]

    def generators(self, gen: str | None) -> list[int]:
        return [self.W.gen(gen)] if gen else list(range(self.W.rank))


def _pair_verdict(name: str, result: tuple[int, list]) -> Verdict:
    return Verdict(name, result[0], result[1])


def _per_generator(name: str, fn: Callable[[OneLetterRuin], Verdict]):
    def run(sess: Session, args) -> list[Verdict]:
        out = []
        for t in sess.generators(args.gen):
            v = fn(sess.omega(t))
            v.details = {"t": sess.W.generators[t], **v.details}
            v.lemma = name
            out.append(v)
        return out
    return run


def _one_even_color(sess: Session, args) -> list[Verdict]:
    out = []
    for t in sess.generators(args.gen):
        if sess.W.rank and ruin_context(sess.W, t).S_prime:
            continue
        summary = color_summary(sess.omega(t))
        ok = summary["even_colors"] == 1 and summary["odd_colors"] == 1
        fails = [] if ok else [summary]
        out.append(Verdict("one-even-color", 1, fails, {"t": sess.W.generators[t], **summary}))
    return out


def _evens_isomorphism(sess: Session, args) -> list[Verdict]:
    out = []
    for t in sess.generators(args.gen):
        ctx = ruin_context(sess.W, t)
        pairs = [sess.W.gen(args.pair)] if args.pair else sorted(ctx.S_prime)
        for s in pairs:
            out.append(verify_evens_isomorphism(sess.omega(t), s))
    return out


def _excision(sess: Session, args) -> list[Verdict]:
    W, B = sess.W, sess.ball()
    S = W.all_gens
    out = []
    for t in sess.generators(args.gen):
        ctx = ruin_context(W, t)
        s = W.gen(args.pair) if args.pair else min(ctx.S_prime, default=None)
        cases = [(S, {t})]
        if s is not None:
            cases.append((S, {t, s}))
        others = sorted(ctx.U - {t} - ({s} if s is not None else set()))
        if others:
            cases.append((S - {others[0]}, {t}))
        for V, T in cases:
            v = verify_excision(B, V, T)
            v.details = {**v.details, "V": W.names(V), "T": W.names(T)}
            out.append(v)
    return out


def _codim1(sess: Session, args) -> list[Verdict]:
    W = sess.W
    poset = W.spherical_poset()
    out = []
    for t in sess.generators(args.gen):
        ctx = ruin_context(W, t)
        partners = [W.gen(args.pair)] if args.pair else sorted(ctx.S_prime)
        for s in partners:
            if frozenset({s, t}) in poset:
                out.append(classify_codim1_faces(W, {t, s}, sess.radius))
    return out


def _pair_radius(sess: Session) -> int:
    # the pair check is quadratic in the ball, so it runs on a smaller one
    return min(sess.radius, 3 if sess.W.rank <= 4 else 2)


CHECKS: dict[str, Callable] = {
    "one-reduction": lambda sess, a: [_pair_verdict("one-reduction", check_one_reduction(sess.W, sess.radius))],
    "reduction": lambda sess, a: [_pair_verdict("reduction", check_reduction(sess.W, sess.radius))],
    "exchange": lambda sess, a: [_pair_verdict("exchange", check_exchange(sess.W, sess.radius))],
    "homomorphism": lambda sess, a: [_pair_verdict("homomorphism", check_homomorphism(sess.W, _pair_radius(sess)))],
    "s-relations": lambda sess, a: [_pair_verdict("s-relations", check_sprime_pairwise_infinite(sess.W))],
    "commuting-link": lambda sess, a: [_pair_verdict("commuting-link", check_commuting_link(sess.W))],
    "alternating-reduced": lambda sess, a: [_pair_verdict("alternating-reduced", check_alternating_reduced(sess.W))],
    "monochromatic": _per_generator("monochromatic", check_monochromatic),
    "trivial-action": _per_generator("trivial-action", check_trivial_action),
    "color-well-defined": _per_generator("color-well-defined", check_color_well_defined),
    "covering": _per_generator("covering", check_covering),
    "same-color-disjoint": _per_generator("same-color-disjoint", check_same_color_disjoint),
    "odd-meets-evens": _per_generator("odd-meets-evens", check_odd_meets_evens),
    "two-even-colors": _per_generator("two-even-colors", check_two_even_colors),
    "orbit-intersection": _per_generator("orbit-intersection", check_w_orbit),
    "evens-isomorphism": _evens_isomorphism,
    "one-even-color": _one_even_color,
    "excision": _excision,
    "codim1-faces": _codim1,
}

# Checks that need the parity structure of an even system.
EVEN_ONLY = {
    "homomorphism", "monochromatic", "trivial-action", "color-well-defined", "covering",
    "same-color-disjoint", "odd-meets-evens", "two-even-colors", "orbit-intersection",
    "evens-isomorphism", "one-even-color",
}


def resolve_lemma(name: str) -> str:
    key = ALIASES.get(name, name)
    if key not in CHECKS:
        raise InputError(f"unknown lemma {name!r}; known: {', '.join(sorted(CHECKS))}")
    return key


# -- command implementations --------------------------------------------------

def _nerve_json(W: CoxeterGroup, dim: int | None) -> tuple[dict, bool]:
    L = build_nerve(W)
    faces = [[W.names(F) for F in L.faces_of_dim(k)] for k in range(L.dimension + 1)]
    n = L.dimension if dim is None else dim
    report = sphere_check(L, n).to_json() if n in (1, 2, 3) else {
        "dim": n, "verdict": "fail", "failed_condition": f"dimension {n} is not supported"}
    return {"faces_by_dim": faces, "flag": is_flag(L), "sphere": report}, report["verdict"] == "pass"


def cmd_validate(sess: Session, args) -> tuple[list, bool]:
    W = sess.W
    return [{"ok": True, "generators": list(W.generators), "rank": W.rank, "even": W.even,
             "crystallographic": W.crystallographic,
             "spherical_subsets": len(W.spherical_poset())}], True


def cmd_nerve(sess: Session, args) -> tuple[list, bool]:
    body, _ = _nerve_json(sess.W, args.dim)
    return [body], True


def cmd_flag(sess: Session, args) -> tuple[list, bool]:
    body, _ = _nerve_json(sess.W, args.dim)
    return [body], body["flag"]


def cmd_sphere_check(sess: Session, args) -> tuple[list, bool]:
    if args.dim not in (1, 2, 3):
        raise InputError("--dim must be 1, 2 or 3")
    body, ok = _nerve_json(sess.W, args.dim)
    return [body], ok


def cmd_ball(sess: Session, args) -> tuple[list, bool]:
    W, B = sess.W, sess.ball()
    counts = {" ".join(W.names(T)): n for T, n in B.cells_by_type().items()}
    cells = B.cells()
    f = chain_counts(cells, B.faces_of)
    return [{"radius": sess.radius, "vertex_count": len(B), "cells_by_type": counts,
             "f_vector_of_order_complex": f}], True


def _require_gen(args) -> None:
    if not args.gen:
        raise InputError("--gen is required")


def cmd_ruin(sess: Session, args, svg_out: dict) -> tuple[list, bool]:
    _require_gen(args)
    W = sess.W
    t = W.gen(args.gen)
    B = sess.ball()
    ruin = build_ruin(B, W.all_gens, {t})
    comps = ruin_components(B, t)
    body = {"context": ruin_context(W, t).to_json(W), "radius": sess.radius,
            "omega_cells": len(ruin.omega), "boundary_cells": len(ruin.boundary),
            "hat_cells": len(ruin.hat), "components": len(comps),
            "components_within_cosets": all(c.coset_consistent for c in comps)}
    verdicts: list = [body]
    ok = body["components_within_cosets"]
    if W.even:
        omega = sess.omega(t)
        body["collars"] = color_summary(omega)
        body["boundary_components_are_cosets"] = omega.components_match_cosets
        if args.pair:
            v = verify_evens_isomorphism(omega, W.gen(args.pair))
            verdicts.append(v.to_json())
            ok &= v.passed
        if args.svg:
            from .svg import ruin_svg
            svg_out[args.svg] = ruin_svg(omega)
    return verdicts, ok


def cmd_colors(sess: Session, args) -> tuple[list, bool]:
    _require_gen(args)
    W = sess.W
    omega = sess.omega(W.gen(args.gen))
    classes = []
    for color, comps in sorted(color_classes(omega).items()):
        classes.append({"color": omega.color_json(color), "parity": omega.parity(comps[0]),
                        "collars": [W.format(omega.ball.words[c]) for c in comps]})
    return [{"t": args.gen, "radius": sess.radius, "summary": color_summary(omega),
             "classes": classes}], True


def cmd_homology(sess: Session, args) -> tuple[list, bool]:
    W = sess.W
    target = args.target
    if target == "nerve":
        X = chain_complex(build_nerve(W).simplices())
        h = homology(X)
    else:
        B = sess.ball()
        if target == "sigma":
            X = chain_complex(ball_order_complex(B).simplices)
            h = homology(X)
        else:
            _require_gen(args)
            ruin = build_ruin(B, W.all_gens, {W.gen(args.gen)})
            oc = ball_order_complex(B, ruin.omega)
            X = chain_complex(oc.simplices)
            if target == "ruin":
                h = homology(X)
            else:
                h = relative_homology(X, oc.sub(lambda c: c in ruin.boundary))
    out = h.to_json()
    out["chi"] = str(euler_characteristic(X) if target != "pair" else h.euler)
    out["target"] = target
    return [out], X.is_complex()


def cmd_euler(sess: Session, args) -> tuple[list, bool]:
    W = sess.W
    if args.orbihedral:
        return [{"chi": fraction_str(orbihedral_euler(W)), "kind": "orbihedral"}], True
    return [{"chi": str(build_nerve(W).euler_characteristic()), "kind": "nerve"}], True


def run_checks(sess: Session, args, names: list[str]) -> tuple[list, bool]:
    verdicts, ok = [], True
    for name in names:
        if name in EVEN_ONLY and not sess.W.even:
            raise NotEvenError(f"{name} requires an even Coxeter system")
        for v in CHECKS[name](sess, args):
            verdicts.append(v.to_json())
            ok &= v.passed
    return verdicts, ok


def cmd_verify(sess: Session, args) -> tuple[list, bool]:
    if not args.lemma:
        raise InputError("--lemma is required")
    return run_checks(sess, args, [resolve_lemma(args.lemma)])


BATTERY = ["one-reduction", "reduction", "exchange", "homomorphism", "s-relations", "commuting-link",
           "alternating-reduced", "monochromatic", "trivial-action", "color-well-defined", "covering",
           "same-color-disjoint", "odd-meets-evens", "two-even-colors", "orbit-intersection",
           "evens-isomorphism", "one-even-color", "excision", "codim1-faces"]


def cmd_all(sess: Session, args) -> tuple[list, bool]:
    names = BATTERY if sess.W.even else [n for n in BATTERY if n not in EVEN_ONLY]
    return run_checks(sess, args, names)


COMMANDS = {
    "validate": cmd_validate, "nerve": cmd_nerve, "flag": cmd_flag, "sphere-check": cmd_sphere_check,
    "ball": cmd_ball, "ruin": cmd_ruin, "colors": cmd_colors, "homology": cmd_homology,
    "euler": cmd_euler, "verify": cmd_verify, "all": cmd_all,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="evencox", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("system", help="path to a .cox file or a bundled fixture name")
        p.add_argument("--radius", type=int, default=None)
        p.add_argument("--gen", default=None)
        p.add_argument("--pair", default=None)
        p.add_argument("--lemma", default=None)
        p.add_argument("--svg", default=None)
        p.add_argument("--json", default=None)
        p.add_argument("--dim", type=int, default=None)
        p.add_argument("--target", choices=("sigma", "ruin", "pair", "nerve"), default="sigma")
        p.add_argument("--orbihedral", action="store_true")
    return parser


def load_system(spec: str) -> tuple[str, bytes]:
    path = Path(spec)
    if path.is_file():
        return path.read_text(encoding="utf-8"), path.read_bytes()
    name = path.name.removesuffix(".cox")
    if name in fixtures.NAMES and not path.exists():
        text = fixtures.text(name)
        return text, text.encode("utf-8")
    raise InputError(f"no such system file or fixture: {spec}")


def default_radius(W: CoxeterGroup) -> int:
    return 4 if W.rank <= 4 else 3


def run(argv: list[str]) -> tuple[dict, int]:
    """Execute one command; returns the run report and the exit status."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return {"error": "usage"}, EXIT_INPUT if exc.code else EXIT_OK
    report = {"command": args.command, "input_digest": None, "verdicts": [], "timing": {}}
    clock = time.perf_counter()
    try:
        text, raw = load_system(args.system)
        report["input_digest"] = "sha256:" + hashlib.sha256(raw).hexdigest()
        W = CoxeterGroup.from_text(text)
        if args.radius is not None and args.radius < 0:
            raise InputError("--radius must be non-negative")
        sess = Session(W, default_radius(W) if args.radius is None else args.radius)
        report["timing"]["parse_ms"] = round((time.perf_counter() - clock) * 1000, 3)
        clock = time.perf_counter()
        svg_out: dict = {}
        if args.command == "ruin":
            verdicts, ok = cmd_ruin(sess, args, svg_out)
        else:
            verdicts, ok = COMMANDS[args.command](sess, args)
        report["timing"]["run_ms"] = round((time.perf_counter() - clock) * 1000, 3)
        report["radius"] = sess.radius
        report["verdicts"] = verdicts
        report["status"] = "pass" if ok else "fail"
        for path, body in svg_out.items():
            Path(path).write_text(body, encoding="utf-8")
        return report, EXIT_OK if ok else EXIT_FAIL
    except (InputError, SystemFormatError, NotEvenError, CoxeterError, ValueError, KeyError) as exc:
        report["status"] = "error"
        report["error"] = str(exc) if not isinstance(exc, KeyError) else f"unknown name {exc}"
        return report, EXIT_INPUT


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    report, code = run(argv)
    if report.get("error") == "usage":
        return code
    text = dumps(report)
    out = None
    try:
        out = build_parser().parse_args(argv).json
    except SystemExit:
        pass
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
