"""Command line front end.

Exit codes: 0 success, 1 input or parse error, 2 axiom violation (or an
input map/subset failing its defining conditions), 3 verification or
isomorphism failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .associativity import LeftAssociatedPair, RightAssociatedPair, alpha, beta, gamma_iso, verify_inverse
from .constructions import ProductMorphism, all_product_morphisms, direct_product, f_product, ordinal_sum
from .core import (
    FiniteHoop,
    HoopError,
    InternalInconsistency,
    VerificationFailure,
    check_lemma_suite,
    hoop_isomorphism,
    idempotent_chain_length,
    validate_hoop,
)
from .decomposition import STRATEGIES, census_mu, census_nu, full_decomposition, is_mv_chain
from .enumeration import DEFAULT_CAP, enumerate_hoops
from .exact import ExactSequence, HoopHomomorphism, bullet_product, is_exact, is_filter_homomorphism
from .filters import Filter, all_filters, check_class_lemma, is_filter, is_simple, quotient

OK, INPUT_ERROR, AXIOM_VIOLATION, VERIFICATION_FAILURE = 0, 1, 2, 3


class Exit(Exception):
    def __init__(self, code: int, message: str = ""):
        super().__init__(message)
        self.code = code
        self.message = message


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for axiom violations here
    def error(self, message):
        self.print_usage(sys.stderr)
        raise Exit(INPUT_ERROR, f"{self.prog}: error: {message}")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _valid_hoop(path: str) -> FiniteHoop:
    hoop = io.read_hoop(path)
    report = validate_hoop(hoop.size, hoop.unit, hoop.mul, hoop.imp)
    if not report.valid:
        raise Exit(AXIOM_VIOLATION, f"{path}: not a hoop\n{report.summary()}")
    return hoop


def _product_morphism(path: str, domain: FiniteHoop, codomain: FiniteHoop) -> tuple[int, ...]:
    kind, dom, cod, table = io.read_morphism(path)
    if dom is not None and dom != domain or cod is not None and cod != codomain:
        raise Exit(INPUT_ERROR, f"{path}: declared domain/codomain do not match the arguments")
    if len(table) != domain.size or not all(0 <= v < codomain.size for v in table):
        raise Exit(INPUT_ERROR, f"{path}: map has the wrong length or range")
    if not ProductMorphism(domain, codomain, table).is_valid():
        raise Exit(AXIOM_VIOLATION, f"{path}: not a product morphism")
    return tuple(table)


def _homomorphism(path: str, domain: FiniteHoop, codomain: FiniteHoop) -> HoopHomomorphism:
    _, dom, cod, table = io.read_morphism(path)
    if dom is not None and dom != domain or cod is not None and cod != codomain:
        raise Exit(INPUT_ERROR, f"{path}: declared domain/codomain do not match the arguments")
    try:
        return HoopHomomorphism(domain, codomain, table)
    except ValueError as exc:
        raise Exit(AXIOM_VIOLATION, f"{path}: {exc}") from None


def _doc(d: dict) -> str:
    return io.dumps(d)


# -- subcommands -----------------------------------------------------------

def cmd_validate(args):
    hoop = io.read_hoop(args.hoop)
    report = validate_hoop(hoop.size, hoop.unit, hoop.mul, hoop.imp)
    print(report.summary())
    return OK if report.valid else AXIOM_VIOLATION


def cmd_info(args):
    hoop = _valid_hoop(args.hoop)
    info = {
        "order": hoop.size,
        "unit": hoop.unit,
        "bottom": hoop.bottom,
        "idempotents": list(hoop.idempotents),
        "filters": len(all_filters(hoop)),
        "simple": is_simple(hoop),
        "mv_chain": is_mv_chain(hoop),
        "idempotent_chain_length": idempotent_chain_length(hoop),
    }
    sys.stdout.write(_doc(info))
    return OK


def cmd_iso(args):
    a, b = _valid_hoop(args.a), _valid_hoop(args.b)
    h = hoop_isomorphism(a, b)
    if h is None:
        print("none")
        return VERIFICATION_FAILURE
    print(json.dumps(list(h)))
    return OK


def cmd_product(args):
    a, b = _valid_hoop(args.a), _valid_hoop(args.b)
    if args.kind == "direct":
        result = direct_product(a, b).algebra
    elif args.kind == "osum":
        result = ordinal_sum(a, b)
    else:
        if not args.morphism:
            raise Exit(INPUT_ERROR, "--kind fprod needs --morphism (a map from b to a)")
        result = f_product(a, b, _product_morphism(args.morphism, b, a)).algebra
    _emit(_doc(io.hoop_to_doc(result)), args.out)
    return OK


def _elements(text: str, hoop: FiniteHoop) -> list[int]:
    try:
        xs = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise Exit(INPUT_ERROR, f"cannot parse element list {text!r}") from None
    if not xs or not all(0 <= x < hoop.size for x in xs):
        raise Exit(INPUT_ERROR, "element indices out of range")
    return xs


def cmd_quotient(args):
    hoop = _valid_hoop(args.hoop)
    members = _elements(args.filter, hoop)
    if not is_filter(hoop, members):
        raise Exit(AXIOM_VIOLATION, f"{sorted(set(members))} is not a filter")
    q = quotient(hoop, Filter.of(hoop, members))
    doc = {"quotient": io.hoop_to_doc(q.algebra), "projection": list(q.class_of)}
    _emit(_doc(doc), args.out)
    return OK


def cmd_decompose(args):
    hoop = _valid_hoop(args.hoop)
    if hoop.size == 1:
        raise Exit(INPUT_ERROR, "the trivial hoop has no MV-chain factors")
    cert = full_decomposition(hoop, association=args.assoc, strategy=args.strategy)
    _emit(_doc(io.certificate_to_doc(cert, hoop)), args.out)
    return OK


def cmd_verify_cert(args):
    hoop = _valid_hoop(args.hoop)
    report = io.verify_certificate(hoop, io.read_certificate(args.cert))
    print(report.summary())
    return OK if report.valid else VERIFICATION_FAILURE


def cmd_assoc(args):
    A, B, C = (_valid_hoop(p) for p in (args.a, args.b, args.c))
    if args.chirality == "left":
        f = _product_morphism(args.f, B, A)
        ab = f_product(A, B, f)
        g = _product_morphism(args.g, C, ab.algebra)
        left = LeftAssociatedPair(A, B, C, f, g)
        right = alpha(left)
    else:
        g = _product_morphism(args.g, C, B)
        bc = f_product(B, C, g)
        f = _product_morphism(args.f, bc.algebra, A)
        right = RightAssociatedPair(A, B, C, g, f)
        left = beta(right)
    round_trip = verify_inverse(left) and verify_inverse(right)
    gam = gamma_iso(right, left)
    doc = {
        "chirality": args.chirality,
        "round_trip": round_trip,
        "left": {"f": list(left.f), "g": list(left.g)},
        "right": {"f": list(right.f), "g": list(right.g)},
        "gamma": list(gam),
    }
    sys.stdout.write(_doc(doc))
    return OK if round_trip else VERIFICATION_FAILURE


def cmd_enumerate(args):
    try:
        census = enumerate_hoops(args.n, cap=args.cap)
    except ValueError as exc:
        raise Exit(INPUT_ERROR, str(exc)) from None
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        width = max(3, len(str(census.count)))
        for k, h in enumerate(census.representatives):
            io.write_hoop(h, out / f"order{args.n}-{k:0{width}d}.hoop")
        print(f"{census.count} hoops of order {args.n} written to {out}")
    else:
        doc = {"order": census.order, "count": census.count,
               "representatives": [io.hoop_to_doc(h) for h in census]}
        sys.stdout.write(_doc(doc))
    return OK


def cmd_census_morphisms(args):
    a, b = _valid_hoop(args.a), _valid_hoop(args.b)
    doc = {"morphisms": [list(p.map) for p in all_product_morphisms(a, b)]}
    if is_mv_chain(b):
        doc["nu"] = [{"map": list(p.map), "idempotent": e} for p, e in census_nu(a, b)]
    if is_mv_chain(a):
        doc["mu"] = [{"map": list(p.map), "idempotent": e} for p, e in census_mu(b, a)]
    sys.stdout.write(_doc(doc))
    return OK


def cmd_bullet(args):
    a, b = _valid_hoop(args.a), _valid_hoop(args.b)
    h = _homomorphism(args.hom, a, b)
    if not is_filter_homomorphism(h):
        raise Exit(AXIOM_VIOLATION, "the image of the homomorphism is not a filter")
    _emit(_doc(io.hoop_to_doc(bullet_product(a, b, h).algebra)), args.out)
    return OK


def cmd_exact(args):
    path = Path(args.manifest)
    doc = io.read_document(path)
    if not isinstance(doc.get("hoops"), list) or not isinstance(doc.get("maps"), list):
        raise Exit(INPUT_ERROR, f"{path}: manifest needs 'hoops' and 'maps' arrays")
    hoops = []
    for k, entry in enumerate(doc["hoops"]):
        if isinstance(entry, str):
            hoops.append(_valid_hoop(str(path.parent / entry)))
        else:
            h = io.hoop_from_doc(entry, f"{path}:hoops[{k}]")
            if not validate_hoop(h.size, h.unit, h.mul, h.imp).valid:
                raise Exit(AXIOM_VIOLATION, f"{path}: hoops[{k}] is not a hoop")
            hoops.append(h)
    if len(doc["maps"]) != len(hoops) - 1:
        raise Exit(INPUT_ERROR, f"{path}: need one map between consecutive hoops")
    maps = []
    for k, table in enumerate(doc["maps"]):
        try:
            maps.append(HoopHomomorphism(hoops[k], hoops[k + 1], io.int_list(table, "map")))
        except ValueError as exc:
            raise Exit(AXIOM_VIOLATION, f"{path}: maps[{k}]: {exc}") from None
    exact = is_exact(ExactSequence(tuple(hoops), tuple(maps)))
    print("exact" if exact else "not exact")
    return OK if exact else VERIFICATION_FAILURE


def cmd_lemmas(args):
    hoop = _valid_hoop(args.hoop)
    lines, ok = [], True
    rep = check_lemma_suite(hoop)
    ok &= rep.valid
    lines.append(f"lemma suite: {rep.summary()}")
    for F in all_filters(hoop):
        rep = check_class_lemma(hoop, F)
        ok &= rep.valid
        lines.append(f"filter {list(F.members)}: {rep.summary()}")
    print("\n".join(lines))
    return OK if ok else VERIFICATION_FAILURE


def cmd_export_dot(args):
    hoop = _valid_hoop(args.hoop)
    _emit(io.to_dot(hoop, Path(args.hoop).stem), args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="finhoop", description="Finite hoop toolkit.")
    p.add_argument("--seedless", action="store_true",
                   help="accepted for compatibility; every command is deterministic")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, *hoops, out=False):
        s = sub.add_parser(name, help=help_)
        for h in hoops:
            s.add_argument(h)
        if out:
            s.add_argument("--out", "-o", help="write to this file instead of standard output")
        s.set_defaults(func=func)
        return s

    add("validate", cmd_validate, "check the hoop axioms", "hoop")
    add("info", cmd_info, "summary of order, idempotents and filters", "hoop")
    add("iso", cmd_iso, "find an isomorphism a -> b", "a", "b")
    s = add("product", cmd_product, "direct product, ordinal sum or f-product", "a", "b", out=True)
    s.add_argument("--kind", choices=("direct", "osum", "fprod"), required=True)
    s.add_argument("--morphism", help="product morphism b -> a (for fprod)")
    s = add("quotient", cmd_quotient, "quotient by a filter", "hoop", out=True)
    s.add_argument("--filter", required=True, help="filter elements, e.g. '1,2'")
    s = add("decompose", cmd_decompose, "decompose into MV-chains", "hoop", out=True)
    s.add_argument("--assoc", choices=("left", "right"), default="right")
    s.add_argument("--strategy", choices=STRATEGIES, default="smallest")
    add("verify-cert", cmd_verify_cert, "re-check a decomposition certificate", "hoop", "cert")
    s = add("assoc", cmd_assoc, "alpha/beta round trip and Gamma", "a", "b", "c")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("--chirality", choices=("left", "right"), default="left")
    s = sub.add_parser("enumerate", help="all hoops of order n up to isomorphism")
    s.add_argument("n", type=int)
    s.add_argument("--out", help="directory for one file per hoop")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_enumerate)
    add("census-morphisms", cmd_census_morphisms, "all product morphisms a -> b", "a", "b")
    s = add("bullet", cmd_bullet, "bullet product along a filter homomorphism", "a", "b", out=True)
    s.add_argument("--hom", required=True)
    add("exact", cmd_exact, "check exactness of a sequence manifest", "manifest")
    add("lemmas", cmd_lemmas, "run the lemma checks on a hoop and its filters", "hoop")
    add("export-dot", cmd_export_dot, "Hasse diagram in DOT", "hoop", out=True)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except Exit as e:
        if e.message:
            print(e.message, file=sys.stderr)
        return e.code
    except (InternalInconsistency, VerificationFailure) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return VERIFICATION_FAILURE
    except (HoopError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
