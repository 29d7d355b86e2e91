"""Command-line front end: parse a session file and print certificate reports."""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field

from . import duality as D
from .complexes import check_h0_equivalence, minimize, schreyer_resolution
from .groebner import Submodule, ideal
from .oracle import MonomialIdeal, mono_primary_decomposition, mono_top_part
from .ring import GF, QQ, ExprParser, Matrix, ParseError, Ring, ShapeError, tokenize

__all__ = ["Session", "parse_session", "run", "main"]


@dataclass
class Session:
    ring: Ring | None = None
    objects: dict = field(default_factory=dict)
    kinds: dict = field(default_factory=dict)

    def get(self, name: str, *kinds):
        if name not in self.objects:
            raise KeyError(f"no object named {name!r}")
        if kinds and self.kinds[name] not in kinds:
            raise ValueError(f"{name!r} is a {self.kinds[name]}, expected {' or '.join(kinds)}")
        return self.objects[name]

    def presentation(self, name: str) -> Matrix:
        return self.get(name, "ideal", "module")


class _StatementParser(ExprParser):
    def __init__(self, tokens, session):
        super().__init__(tokens, session.ring)
        self.session = session

    def name(self):
        return self.take("name")

    def ring_decl(self, kw):
        if self.session.ring is not None:
            self.error("inconsistent ring: a ring is already declared", kw)
        ftok = self.take("name")
        if ftok[1] == "Q":
            fld = QQ
        elif ftok[1] == "Fp":
            q = 32003
            if self.at("op", "("):
                self.take()
                qtok = self.take("int")
                q = qtok[1]
                self.take("op", ")")
            try:
                fld = GF(q)
            except ValueError as e:
                self.error(str(e), ftok)
        else:
            self.error(f"unknown field {ftok[1]!r}; use Q or Fp(q)", ftok)
        self.take("op", "[")
        names = [self.take("name")[1]]
        while self.at("op", ","):
            self.take()
            names.append(self.take("name")[1])
        self.take("op", "]")
        if len(set(names)) != len(names):
            self.error("repeated variable name", ftok)
        self.session.ring = Ring(names, fld)
        self.ring = self.session.ring

    def list_of_lists(self):
        self.take("op", "[")
        outer = []
        while True:
            self.take("op", "[")
            inner = [self.expr()]
            while self.at("op", ","):
                self.take()
                inner.append(self.expr())
            self.take("op", "]")
            outer.append(inner)
            if self.at("op", ","):
                self.take()
                continue
            break
        self.take("op", "]")
        return outer

    def object_decl(self, kw):
        if self.session.ring is None:
            self.error("no ring declared", kw)
        ntok = self.name()
        if ntok[1] in self.session.objects:
            self.error(f"name {ntok[1]!r} is already used", ntok)
        self.take("op", "=")
        ring = self.session.ring
        kind = kw[1]
        if kind == "ideal":
            gens = [self.expr()]
            while self.at("op", ","):
                self.take()
                gens.append(self.expr())
            obj = Matrix(ring, [gens], 1, len(gens))
        else:
            lists = self.list_of_lists()
            if len({len(x) for x in lists}) != 1:
                self.error("rows or columns of different lengths", ntok)
            obj = Matrix.from_columns(ring, lists) if kind == "module" else Matrix(ring, lists)
        self.session.objects[ntok[1]] = obj
        self.session.kinds[ntok[1]] = kind

    def statements(self):
        while self.peek() is not None:
            kw = self.take("name")
            if kw[1] == "ring":
                self.ring_decl(kw)
            elif kw[1] in ("ideal", "module", "matrix"):
                self.object_decl(kw)
            else:
                self.error(f"unknown statement {kw[1]!r}", kw)
            self.take("op", ";")


def parse_session(text: str) -> Session:
    """Parse statements ``ring``, ``ideal``, ``module`` and ``matrix``, each ending in ``;``."""
    session = Session()
    _StatementParser(tokenize(text), session).statements()
    return session


def parse_vector(text: str, ring: Ring) -> tuple:
    toks = tokenize(text.strip().strip("[]"))
    p = ExprParser(toks, ring)
    out = [p.expr()]
    while p.at("op", ","):
        p.take()
        out.append(p.expr())
    p.expect_end()
    return tuple(out)


# --------------------------------------------------------------------------
# serialization

def _num(x):
    return "inf" if x == math.inf else x


def _sub(M) -> list:
    if isinstance(M, Submodule):
        cols, rank = M.columns(), M.rank
    else:
        cols, rank = M.columns(), M.nrows
    if rank == 1:
        return [str(c[0]) for c in cols]
    return [[str(x) for x in c] for c in cols]


def _mat(M: Matrix) -> list:
    return [[str(x) for x in r] for r in M.rows]


def _ring_desc(ring: Ring) -> str:
    fld = "Q" if ring.field.characteristic == 0 else f"Fp({ring.field.characteristic})"
    return f"{fld}[{','.join(ring.variables)}]"


def _monomial_ideal(P: Matrix):
    if P.nrows != 1 or not all(x.is_monomial() for x in P.row(0) if x):
        return None
    return MonomialIdeal.from_polys([x for x in P.row(0) if x] or [P.ring.zero])


# --------------------------------------------------------------------------
# commands

def _ci(args, session, P, p):
    if args.fine_ci:
        gens = list(session.get(args.fine_ci, "ideal").row(0))
        I = D.CompleteIntersection(gens)
        if I.p != p:
            raise D.PreconditionError(f"{args.fine_ci} has {I.p} generators, expected {p}")
        return I
    A = D.module_annihilator(P)
    return D.find_regular_sequence(A, p, args.seed)


def cmd_resolve(args, session):
    P = session.presentation(args.name)
    E = schreyer_resolution(P)
    verdicts = {}
    if args.min:
        Emin = minimize(E)
        if Emin.minimal:
            verdicts["h0_preserved"] = check_h0_equivalence(E, Emin, *Emin.comparison)
        E = Emin
    result = {"ranks": E.ranks, "maps": [_mat(m) for m in E.maps],
              "complete": E.complete, "minimal": E.minimal}
    return result, {}, verdicts


def cmd_ext(args, session):
    P = session.presentation(args.name)
    H = D.ext_module(P, args.k)
    result = {"degree": args.k, "zero": H.is_zero(),
              "generators": _sub(H.generators) if H.ngens else [],
              "relations": _mat(H.relations) if H.ngens else [],
              "codim": _num(D.module_codim(H))}
    return result, {}, {}


def cmd_hull(args, session):
    P = session.presentation(args.name)
    I = _ci(args, session, P, args.p)
    hull = D.equidimensional_hull(P, args.p, ci=I)
    other = D.equidimensional_hull(P, args.p, seed=args.seed + 1)
    J = Submodule(P.ring, P)
    verdicts = {"contains_input": J.issubset(hull), "ci_independent": hull.equals(other)}
    return {"hull": _sub(hull), "ci": [str(f) for f in I.f]}, {}, verdicts


def cmd_pair(args, session):
    P = session.presentation(args.name)
    I = _ci(args, session, P, args.p)
    H = D.ext_module(P, args.p)
    W = D.pairing_matrix(P, I, H)
    result = {"ci": [str(f) for f in I.f], "ext_generators": _sub(H.generators) if H.ngens else [],
              "rows": _mat(W)}
    verdicts = {}
    if args.g:
        g = parse_vector(args.g, P.ring)
        values = []
        agree = True
        for j, xi in enumerate(H.generator_columns()):
            c = D.pairing_eval(P, g, D.ExtClass(H, xi), I)
            values.append(str(c.value))
            via_rows = I.reduce(sum((a * b for a, b in zip(W.row(j), g)), P.ring.zero))
            agree = agree and via_rows == c.value
        result["g"] = [str(x) for x in g]
        result["values"] = values
        verdicts["rows_reproduce_pairing"] = agree
    return result, {}, verdicts


def cmd_kernel(args, session):
    P = session.presentation(args.name)
    I = _ci(args, session, P, args.p)
    H = D.ext_module(P, args.p)
    lk = D.pairing_left_kernel(P, I, H)
    hull = D.equidimensional_hull(P, args.p, ci=I)
    result = {"ci": [str(f) for f in I.f], "kernel": _sub(lk), "hull": _sub(hull)}
    verdicts = {"nondegenerate_left": lk.equals(hull)}
    mono = _monomial_ideal(P)
    if mono is not None:
        comps = mono_primary_decomposition(mono)
        result["components"] = [[str(f) for f in c.to_polys(P.ring)] for c in comps]
        top = ideal(P.ring, mono_top_part(mono, args.p).to_polys(P.ring))
        verdicts["oracle_agrees"] = top.equals(lk)
    return result, {}, verdicts


def cmd_inject(args, session):
    P = session.presentation(args.name)
    I = _ci(args, session, P, args.p)
    rep = D.right_injectivity_check(P, I)
    wit = {"kernel_witness": [str(x) for x in rep.witness]} if rep.witness else {}
    result = {"ci": [str(f) for f in I.f], "kernel": [[str(x) for x in c] for c in rep.kernel]}
    return result, wit, {"injective": rep.injective}


def cmd_s2(args, session):
    P = session.presentation(args.name)
    rep = D.sk_test(P, args.p, args.k)
    result = {"k": args.k, "passed": rep.passed, "failure": rep.failure,
              "codim_table": {str(l): _num(c) for l, c in rep.table.items()}}
    wit = {}
    if rep.failure is not None:
        wit["failing_degree"] = rep.failure
        wit["codim"] = _num(rep.table[rep.failure])
        wit["required"] = rep.failure + args.k
    return result, wit, {}


def cmd_purity(args, session):
    P = session.presentation(args.name)
    rep = D.purity_test(P, args.p, args.seed)
    result = {"pure": rep.pure, "failure": rep.failure,
              "codim_table": {str(l): _num(c) for l, c in rep.table.items()}}
    return result, {}, {"hull_agrees": rep.hull_agrees}


def cmd_roos(args, session):
    P = session.presentation(args.name)
    rep = D.roos_map(P, args.p, args.seed)
    result = {"ci": [str(f) for f in rep.ci.f], "injective": rep.injective,
              "surjective": rep.surjective, "cokernel_length": _num(rep.cokernel_length),
              "hull": _sub(rep.hull), "image": _mat(rep.image),
              "ext_generators": rep.ext.ngens}
    verdicts = {"injective": rep.injective, "model_certified": rep.certified_model,
                "s2_agrees": rep.s2_cross_check}
    return result, {}, verdicts


def cmd_transform(args, session):
    g = list(session.get(args.name, "ideal").row(0))
    A = session.get(args.matrix, "matrix")
    G = D.CompleteIntersection(g)
    f = A.apply(g)
    F = D.CompleteIntersection(f)
    out = D.transformation_check(G, F, A)
    result = {"f": [str(x) for x in f], "det": str(out["det"]),
              "pairing": str(out["pairing"].value), "level_map": str(out["level_map"].value)}
    return result, {}, {"chain_map": out["chain_map"], "transforms": out["transforms"]}


def cmd_check(args, session):
    P = session.presentation(args.name)
    p = args.p
    ring = P.ring
    I = _ci(args, session, P, p)
    H = D.ext_module(P, p)
    lk = D.pairing_left_kernel(P, I, H)
    hull = D.equidimensional_hull(P, p, ci=I)
    hull2 = D.equidimensional_hull(P, p, seed=args.seed + 1)
    inj = D.right_injectivity_check(P, I, H)
    verdicts = {
        "nondegenerate_left": lk.equals(hull),
        "ci_independent": hull.equals(hull2),
        "nondegenerate_right": inj.injective,
    }
    if H.ngens:
        R = H.relations
        pur = D.sk_test(R, p, 1)
        s2 = D.sk_test(R, p, 2)
        verdicts["ext_pure"] = pur.passed
        verdicts["ext_s2"] = s2.passed
    roos = D.roos_map(P, p, args.seed)
    verdicts["roos_injective"] = roos.injective
    verdicts["roos_s2_agrees"] = roos.s2_cross_check
    eye = Matrix.identity(ring, P.nrows)
    e0 = tuple(ring.one if i == 0 else ring.zero for i in range(P.nrows))
    verdicts["functorial_identity"] = D.functoriality_check(eye, P, P, p, e0, args.seed)["commutes"]
    result = {"ci": [str(f) for f in I.f], "kernel": _sub(lk), "hull": _sub(hull),
              "ext_generators": H.ngens, "roos_surjective": roos.surjective,
              "roos_cokernel_length": _num(roos.cokernel_length)}
    mono = _monomial_ideal(P)
    if mono is not None:
        top = ideal(ring, mono_top_part(mono, p).to_polys(ring))
        verdicts["oracle_agrees"] = top.equals(hull)
    return result, {}, verdicts


COMMANDS = {
    "resolve": cmd_resolve, "ext": cmd_ext, "hull": cmd_hull, "pair": cmd_pair,
    "kernel": cmd_kernel, "inject": cmd_inject, "s2": cmd_s2, "purity": cmd_purity,
    "roos": cmd_roos, "transform": cmd_transform, "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", default="-", help="session file ('-' for stdin)")
    common.add_argument("-e", "--eval", dest="source", help="session text given inline")
    common.add_argument("--seed", type=int, default=0)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    common.add_argument("--fine-ci", dest="fine_ci", metavar="IDEAL",
                        help="use this declared ideal as the complete-intersection level")

    parser = argparse.ArgumentParser(prog="localduality",
                                     description="Local duality certificates for polynomial modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, *extra):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("name")
        for spec in extra:
            spec(sp)
        return sp

    p_arg = lambda sp: sp.add_argument("p", type=int)
    add("resolve", "free resolution", lambda sp: sp.add_argument("--min", action="store_true"))
    add("ext", "Ext module", lambda sp: sp.add_argument("k", type=int))
    add("hull", "equidimensional hull", p_arg)
    add("pair", "pairing rows and values", p_arg,
        lambda sp: sp.add_argument("--g", help="vector such as 'x, y^2'"))
    add("kernel", "left kernel of the pairing", p_arg)
    add("inject", "right injectivity", p_arg)
    add("s2", "S_k test", p_arg, lambda sp: sp.add_argument("--k", type=int, default=2))
    add("purity", "purity test", p_arg)
    add("roos", "Roos map", p_arg)
    add("transform", "transformation law", lambda sp: sp.add_argument("matrix"))
    add("check", "full certificate battery", p_arg)
    return parser


def _render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            for k, v in value.items():
                lines.append(f"  {k}: {json.dumps(v)}")
        else:
            lines.append(f"{key}: {json.dumps(value)}")
    return "\n".join(lines)


def run(args, session: Session) -> tuple[dict, int]:
    """Execute one command; returns the report and the exit code."""
    t0 = time.perf_counter()
    P = None
    if args.command != "transform":
        P = session.presentation(args.name)
    result, witnesses, verdicts = COMMANDS[args.command](args, session)
    inputs = {"name": args.name}
    if P is not None:
        inputs["generators"] = _sub(P)
    else:
        inputs["generators"] = _sub(session.get(args.name))
        inputs["matrix"] = _mat(session.get(args.matrix))
    certified = D.is_certified(*(session.get(n) for n in ([args.name] + (
        [args.matrix] if args.command == "transform" else []))))
    report = {
        "command": args.command,
        "ring": _ring_desc(session.ring),
        "inputs": inputs,
        "seed": args.seed,
        "certified": certified,
        "result": result,
        "witnesses": witnesses,
        "verdicts": verdicts,
    }
    report["timings_ms"] = round((time.perf_counter() - t0) * 1000, 3)
    code = 0 if all(verdicts.values()) else 1
    return report, code


def _error_report(args, message, witness=None) -> dict:
    return {"command": getattr(args, "command", None), "error": message,
            "witnesses": {"detail": witness} if witness is not None else {}}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or "json"
    try:
        if args.source is not None:
            text = args.source
        elif args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        session = parse_session(text)
        if session.ring is None:
            raise ParseError("no ring declared")
        report, code = run(args, session)
    except ParseError as e:
        report, code = _error_report(args, str(e), {"line": e.line, "column": e.column}), 2
    except (D.PreconditionError, D.SearchExhausted, ShapeError, KeyError, ValueError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) else str(e)
        report, code = _error_report(args, msg, getattr(e, "witness", None)), 2
    if fmt == "json":
        print(json.dumps(report, indent=2, default=str))
    else:
        print(_render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
