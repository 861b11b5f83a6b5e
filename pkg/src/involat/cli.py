"""Command-line interface.

Exit codes: 0 when the property holds or the command succeeded, 1 when
the property fails (a witness is printed on standard output), 2 on input
errors.  Wherever a structure file is expected, ``@NAME`` refers to a
catalog entry instead.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import catalog, io
from .classify import (
    CLASS_NAMES, class_verdict, classify, is_distributive, is_modular, is_orthomodular,
    is_paraorthomodular, is_sp1, is_sp2, sh_poset,
)
from .commute import commutes_mpkl
from .constructs import (
    direct_product, is_left_residuated, localizer, moisil_interval, ordinal_sum,
    residual_groupoid,
)
from .core import InvolutivePoset, Verdict
from .errors import BudgetExceeded, ParseError, StructureError, UnknownName
from .subalg import forbidden_configuration, is_tame, kleene_blocks

OK, FAIL, INPUT = 0, 1, 2

_ALIASES = {
    "pom": "POML", "poml": "POML", "sp": "SPO", "spo": "SPO", "pkl": "PKL", "kl": "KL",
    "mpkl": "MPKL", "oml": "OML", "ol": "OL", "uop": "UOP", "op": "OP", "pmp": "PMP",
    "omp": "OMP", "mol": "MOL", "ba": "BA", "a": "A", "res2": "RES2",
}
_EXTRA = {
    "sp1": is_sp1, "sp2": is_sp2, "modular": is_modular, "distributive": is_distributive,
    "orthomodular": is_orthomodular, "paraorthomodular": is_paraorthomodular, "tame": is_tame,
}


class InputError(Exception):
    pass


def load(ref: str) -> InvolutivePoset:
    if ref.startswith("@"):
        return catalog.catalog_get(ref[1:])
    path = Path(ref)
    if not path.is_file():
        raise InputError(f"no such file: {ref}")
    return io.parse(path.read_text())


def _element(p: InvolutivePoset, token: str) -> int:
    try:
        return p.index(token)
    except KeyError:
        raise InputError(f"unknown element {token!r}") from None


def _witness(p: InvolutivePoset, w) -> str:
    if w is None:
        return "-"
    if isinstance(w, (tuple, list)):
        return "(" + ", ".join(_witness(p, x) for x in w) + ")"
    if isinstance(w, int):
        return p.name(w)
    return str(w)


def _report(label: str, p: InvolutivePoset, v: Verdict) -> int:
    if v:
        print(f"{label}: holds")
        return OK
    note = f" [{v.note}]" if v.note else ""
    print(f"{label}: fails{note}; witness {_witness(p, v.witness)}")
    return FAIL


# -- structure commands -----------------------------------------------------------

def cmd_check(args) -> int:
    p = load(args.file)
    if args.klass is None:
        r = classify(p)
        for name in CLASS_NAMES:
            print(f"{name}\t{'yes' if r[name] else 'no'}")
        return OK
    key = args.klass.lower()
    if key in _EXTRA:
        return _report(key, p, _EXTRA[key](p))
    if key.upper() in CLASS_NAMES:
        name = key.upper()
    elif key in _ALIASES:
        name = _ALIASES[key]
    else:
        raise InputError(f"unknown class {args.klass!r}")
    return _report(name, p, class_verdict(p, name))


def cmd_blocks(args) -> int:
    p = load(args.file)
    for b in kleene_blocks(p):
        print("{" + ", ".join(b.names()) + "}")
    return OK


def cmd_tame(args) -> int:
    p = load(args.file)
    return _report("tame", p, is_tame(p))


def cmd_forbidden(args) -> int:
    p = load(args.file)
    w = forbidden_configuration(p)
    if w is None:
        print("no forbidden configuration")
        return OK
    print(w.describe(p))
    if w.theta is not None:
        sub = p.restrict(list(w.members))
        classes: dict = {}
        for pos, rep in enumerate(w.theta):
            classes.setdefault(rep, []).append(sub.name(pos))
        print("classes: " + " ".join("{" + ",".join(c) + "}" for c in classes.values() if len(c) > 1))
    return FAIL


def cmd_commute(args) -> int:
    p = load(args.file)
    x, y = _element(p, args.x), _element(p, args.y)
    r = commutes_mpkl(p, x, y)
    for k in ("c1", "c2", "c3", "omp_commutes", "generated_distributive", "modular"):
        print(f"{k}\t{'yes' if getattr(r, k) else 'no'}")
    return OK if r.commutes else FAIL


def cmd_construct(args) -> int:
    kind = args.kind
    ops = args.operands
    need = {"sum": 1, "product": 2, "moisil": 1, "sh": 1, "localizer": 3, "residual": 1}[kind]
    if len(ops) != need:
        raise InputError(f"construct {kind} takes {need} operand(s)")
    p = load(ops[0])
    if kind == "sum":
        out = ordinal_sum(p)
    elif kind == "product":
        out = direct_product(p, load(ops[1]))
    elif kind == "moisil":
        out = moisil_interval(p)
    elif kind == "sh":
        out = sh_poset(p)
    elif kind == "localizer":
        loc = localizer(p, _element(p, ops[1]), _element(p, ops[2]))
        out = loc.structure
    else:
        g = residual_groupoid(p)
        names = [p.name(i) for i in range(p.n)]
        for title, table in (("odot", g.odot), ("arrow", g.arrow)):
            print(title + "\t" + "\t".join(names))
            for i in range(p.n):
                print(names[i] + "\t" + "\t".join(names[v] for v in table[i]))
        return _report("left-residuated", p, is_left_residuated(g))
    sys.stdout.write(io.emit(out))
    return OK


def cmd_dot(args) -> int:
    p = load(args.file)
    sys.stdout.write(io.to_dot(p, Path(args.file).stem if not args.file.startswith("@") else args.file[1:]))
    return OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.names():
            e = catalog.entry(name)
            print(f"{name}\t{len(e.names)}\t{e.description}")
        return OK
    if not args.name:
        raise InputError("catalog emit needs a name")
    sys.stdout.write(io.emit(catalog.catalog_get(args.name)))
    return OK


def cmd_enumerate(args) -> int:
    from .enumeration import census_tsv, models
    from .theorems import theorem_checks

    need = [c.upper() for c in args.klass or []]
    for c in need:
        if c not in CLASS_NAMES:
            raise InputError(f"unknown class {c!r}")
    rows = []
    status = OK
    for k, p in enumerate(models(args.n, cap=args.cap)):
        r = classify(p)
        if not all(r[c] for c in need):
            continue
        rows.append({"name": f"n{args.n}_{k}", "size": args.n, "flags": r.flags})
        if args.theorems:
            for name, v in theorem_checks(p).items():
                if not v:
                    print(f"# counterexample n{args.n}_{k} {name}: {v.note}")
                    status = FAIL
    sys.stdout.write(census_tsv(rows))
    return status


# -- spectral -----------------------------------------------------------------------

def cmd_spectral(args) -> int:
    from . import spectral as sp

    if args.op == "verify":
        found = sp.verify_identities(args.samples, args.dim, args.seed)
        status = OK
        for k, w in found.items():
            print(f"{k}\t{'ok' if w is None else 'counterexample'}")
            if w is not None:
                status = FAIL
                for e in w:
                    sys.stdout.write(sp.emit_effect(e))
        return status
    effects = []
    for f in args.files:
        path = Path(f)
        if not path.is_file():
            raise InputError(f"no such file: {f}")
        effects += sp.parse_effects(path.read_text())
    arity = {"leq": 2, "join": 2, "meet": 2, "neg": 1, "sharp": 1, "canonical-leq": 2}[args.op]
    if len(effects) != arity:
        raise InputError(f"spectral {args.op} needs {arity} effect(s), got {len(effects)}")
    if args.op == "leq":
        ok = sp.spectral_leq(*effects)
        print("holds" if ok else "fails")
        return OK if ok else FAIL
    if args.op == "canonical-leq":
        ok = sp.canonical_leq(*effects)
        print("holds" if ok else "fails")
        return OK if ok else FAIL
    if args.op == "sharp":
        ok = sp.is_sharp_effect(effects[0])
        print("holds" if ok else "fails")
        return OK if ok else FAIL
    fn = {"join": sp.spectral_join, "meet": sp.spectral_meet, "neg": sp.spectral_complement}[args.op]
    sys.stdout.write(sp.emit_effect(fn(*effects)))
    return OK


# -- referential matrices --------------------------------------------------------------

def cmd_refmat(args) -> int:
    from . import refmat as rm

    if args.action == "entail":
        M = rm.two_state_matrix() if args.source == "@two-state" else rm.build_refmat(load(args.source))
        gamma = [rm.parse_formula(g) for g in args.premise or []]
        phi = rm.parse_formula(args.conclusion)
        fn = rm.entails_structural if args.structural else rm.entails
        ok = fn(M, gamma, phi)
        if ok:
            print("entailed")
            return OK
        ce = rm.entailment_counterexample(M, gamma, phi)
        if ce is None or (args.structural and not rm.variables(phi) <= rm.variables(gamma)):
            print("not entailed: the conclusion has variables outside the premises")
        else:
            h, i = ce
            assign = ", ".join(f"{k}={M.name(v)}" for k, v in sorted(h.items()))
            print(f"not entailed: {assign} at index {i}")
        return FAIL
    p = load(args.source)
    M = rm.build_refmat(p)
    if args.action == "build":
        print(f"# {len(M.sublattices)} Kleene sublattices, {len(M.filters)} prime filters")
        for k, F in enumerate(M.filters):
            print(f"F{k}\t{F.describe(p)}")
        for a, P in enumerate(M.carrier):
            vals = " ".join(f"F{i}={rm.VALUE_NAMES[v]}" for i, v in P.values)
            print(f"{p.name(a)}\t{vals}")
        return OK
    r = rm.representation_check(p, M)
    for k in ("forward", "converse", "transitive", "antisymmetric", "injective"):
        v = getattr(r, k)
        print(f"{k}\t{'yes' if v else 'no ' + _witness(p, v.witness)}")
    print(f"tame\t{'yes' if r.tame else 'no'}")
    print(f"orthoisomorphism\t{'yes' if r.isomorphism is not None else 'no'}")
    return OK if r.holds and (r.isomorphism is not None or not r.tame) else FAIL


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="involat", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="classify a structure or test one class")
    s.add_argument("file")
    s.add_argument("--class", dest="klass")
    s.set_defaults(fn=cmd_check)

    for name, fn, hlp in (("blocks", cmd_blocks, "list the maximal Kleene sublattices"),
                          ("tame", cmd_tame, "is the order the union of the block orders"),
                          ("forbidden", cmd_forbidden, "search for a forbidden configuration"),
                          ("dot", cmd_dot, "Graphviz rendering")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("file")
        s.set_defaults(fn=fn)

    s = sub.add_parser("commute", help="conditions C1-C3 for a pair")
    s.add_argument("file")
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(fn=cmd_commute)

    s = sub.add_parser("construct", help="build a derived structure")
    s.add_argument("kind", choices=["sum", "product", "moisil", "sh", "localizer", "residual"])
    s.add_argument("operands", nargs="+")
    s.set_defaults(fn=cmd_construct)

    s = sub.add_parser("spectral", help="effects under the spectral order")
    s.add_argument("op", choices=["leq", "join", "meet", "neg", "sharp", "canonical-leq", "verify"])
    s.add_argument("files", nargs="*")
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--dim", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_spectral)

    s = sub.add_parser("refmat", help="referential matrices and entailment")
    rsub = s.add_subparsers(dest="action", required=True)
    for name in ("build", "represent"):
        r = rsub.add_parser(name)
        r.add_argument("source", help="structure file or @NAME")
        r.set_defaults(fn=cmd_refmat)
    r = rsub.add_parser("entail", help="does the premise list entail the conclusion")
    r.add_argument("source", help="structure file, @NAME, or @two-state")
    r.add_argument("conclusion")
    r.add_argument("-p", "--premise", action="append")
    r.add_argument("--structural", action="store_true")
    r.set_defaults(fn=cmd_refmat)

    s = sub.add_parser("enumerate", help="census of all models on n elements")
    s.add_argument("n", type=int)
    s.add_argument("--class", dest="klass", action="append")
    s.add_argument("--cap", type=int, default=8)
    s.add_argument("--theorems", action="store_true", help="also run every cross-check")
    s.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("catalog", help="named structures")
    s.add_argument("action", choices=["list", "emit"])
    s.add_argument("name", nargs="?")
    s.set_defaults(fn=cmd_catalog)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, ParseError, StructureError, UnknownName, BudgetExceeded, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"error: {msg}", file=sys.stderr)
        return INPUT


if __name__ == "__main__":
    sys.exit(main())
