"""Command line front end.  Every command prints one JSON report."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import catalog, functors, nimrep, tensorcat
from .errors import FtcatError, InvalidInput, PropertyFailure
from .report import Finding, Report, exact_value
from .tensorcat import TensorCatData


class _Inputs:
    """Collects raw input bytes for the report digest."""

    def __init__(self, argv: Sequence[str]):
        self.blobs: list[str] = [" ".join(argv)]

    def load_json(self, path: str):
        if path == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
        self.blobs.append(text)
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"malformed JSON in {path} at line {exc.lineno} column {exc.colno}: "
                               f"{exc.msg}") from None

    def category(self, ref: str) -> TensorCatData:
        """A category from a JSON file, or from a catalog name if no such file exists."""
        if ref != "-" and not os.path.exists(ref) and (":" in ref or ref in ("vec", "fibonacci")):
            self.blobs.append(ref)
            return catalog.build_named(ref)
        obj = self.load_json(ref)
        if not isinstance(obj, dict):
            raise InvalidInput("category JSON must be an object")
        return TensorCatData.from_json(obj)

    def digest(self) -> str:
        return Report.digest(*self.blobs)


def _parse_vector(cat: TensorCatData, text: str) -> list[int]:
    """``1,0,2`` (coefficients) or ``a+2b`` style label sums."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) == cat.rank and all(p.lstrip("-").isdigit() for p in parts):
        return [int(p) for p in parts]
    vec = [0] * cat.rank
    for term in text.split("+"):
        term = term.strip()
        coef, _, lab = term.partition("*")
        if not lab:
            coef, lab = "1", coef
        try:
            vec[cat.ring.index(lab)] += int(coef)
        except ValueError:
            raise InvalidInput(f"bad object term {term!r}") from None
    return vec


def _label_index(cat: TensorCatData, text: str) -> int:
    return cat.ring.index(text if not text.isdigit() or text in cat.labels else int(text))


# -- commands ------------------------------------------------------------------------------

def cmd_validate(args, inp: _Inputs, rep: Report) -> int:
    cat = inp.category(args.file)
    rep.findings += tensorcat.validate_category(cat, strict=args.strict)
    rep.values["rank"] = cat.rank
    rep.values["valid"] = not rep.findings
    return 1 if rep.findings else 0


def cmd_fpdim(args, inp, rep) -> int:
    cat = inp.category(args.file)
    d = cat.d
    rep.values["generator"] = exact_value(cat.generator)
    rep.values["simples"] = {cat.labels[i]: d[i] for i in range(cat.rank)}
    rep.values["projectives"] = {cat.labels[i]: cat.fpdim_projective(i) for i in range(cat.rank)}
    rep.values["category"] = cat.fpdim_category()
    if args.object:
        v = _parse_vector(cat, args.object)
        rep.values["object"] = {"vector": v, "fpdim": cat.fpdim_object(v)}
    rep.values["integral"] = tensorcat.integrality_flag(cat)
    return 0


def cmd_regular(args, inp, rep) -> int:
    cat = inp.category(args.file)
    reg = tensorcat.regular_object(cat)
    rep.values["regular"] = {cat.labels[i]: reg[i] for i in range(cat.rank)}
    rep.findings += tensorcat.regular_eigen_findings(cat)
    return 1 if rep.findings else 0


def cmd_distinguished(args, inp, rep) -> int:
    cat = inp.category(args.file)
    dist = tensorcat.distinguished(cat)
    rep.values["rho"] = cat.labels[dist.rho]
    rep.values["D"] = {cat.labels[i]: cat.labels[j] for i, j in enumerate(dist.D)}
    rep.values["unimodular"] = dist.rho == cat.unit
    return 0


def cmd_cartan(args, inp, rep) -> int:
    cat = inp.category(args.file)
    cr = tensorcat.cartan_rank(cat)
    rep.values.update({"rank_rational": cr.rational, "rank_ground_field": cr.ground,
                       "size": cr.size, "degenerate": cr.degenerate,
                       "characteristic": cat.characteristic})
    ineq = tensorcat.dimension_inequality(cat)
    rep.values["dimension_slack"] = ineq.slack
    rep.findings += cr.findings + ineq.findings
    return 1 if rep.findings else 0


def cmd_proj_fusion(args, inp, rep) -> int:
    cat = inp.category(args.file)
    i, j = _label_index(cat, args.i), _label_index(cat, args.j)
    res = tensorcat.proj_fusion(cat, i, j)
    rep.values["product"] = {cat.labels[k]: c for k, c in enumerate(res) if c}
    rep.values["vector"] = res
    return 0


def _functor(inp: _Inputs, path: str) -> functors.FunctorData:
    obj = inp.load_json(path)
    if not isinstance(obj, dict) or "source" not in obj or "target" not in obj:
        raise InvalidInput("functor JSON needs 'source', 'target' and 'A'")
    base = os.path.dirname(os.path.abspath(path)) if path != "-" else os.getcwd()

    def side(ref):
        if isinstance(ref, dict):
            return TensorCatData.from_json(ref)
        cand = os.path.join(base, ref)
        return inp.category(cand if os.path.exists(cand) else ref)
    return functors.FunctorData.from_json(obj, side(obj["source"]), side(obj["target"]))


def cmd_functor_check(args, inp, rep) -> int:
    f = _functor(inp, args.file)
    rep.findings += functors.validate_functor(f)
    try:
        si = functors.analyze(f)
        rep.findings += si.findings
        rep.values["surjective"] = si.surjective
        rep.values["injective"] = si.injective
    except PropertyFailure as exc:
        rep.findings.append(Finding(type(exc).__name__, str(exc), (), "warning"))
    return 1 if any(x.severity == "error" for x in rep.findings) else 0


def cmd_freeness(args, inp, rep) -> int:
    f = _functor(inp, args.file)
    res = functors.freeness_check(f)
    rep.values["ratio"] = res.ratio
    rep.values["free"] = res.ok
    rep.findings += res.findings
    if res.ok and tensorcat.integrality_flag(f.source):
        rep.values["integer_freeness"] = functors.integer_freeness(f)
    return 0 if res.ok else 1


def cmd_lagrange(args, inp, rep) -> int:
    sub = inp.category(args.sub)
    amb = inp.category(args.amb)
    emb = inp.load_json(args.map)
    res = functors.lagrange(sub, amb, emb)
    rep.values["quotient"] = res.quotient
    rep.values["integral"] = res.integral
    rep.findings += res.findings
    return 0 if res.integral else 1


def cmd_nimrep(args, inp, rep) -> int:
    cat = inp.category(args.file)
    mods = nimrep.enumerate_modules(cat.ring, args.max_rank, duality=not args.no_duality,
                                    fpdims=cat.d)
    rep.values["count"] = len(mods)
    rep.values["ranks"] = [m.rank for m in mods]
    rep.values["modules"] = [m.to_json() for m in mods]
    return 0


def cmd_example(args, inp, rep) -> int | dict:
    cat = catalog.build_named(args.name)
    return cat.to_json()


def cmd_census(args, inp, rep) -> int:
    key, _, arg = args.spec.partition(":")
    if key == "taft":
        try:
            l = int(arg)
        except ValueError:
            raise InvalidInput(f"bad census spec {args.spec!r}") from None
        entries = catalog.taft_module_census(l)
        rep.values["entries"] = [{"description": e.description, "simple_count": e.simple_count,
                                  "parameter_dimension": e.parameter_dimension} for e in entries]
        rep.values["ranks"] = sorted({e.simple_count for e in entries})
        return 0
    if key == "repg":
        group, _, char = arg.partition(":")
        try:
            characteristic = int(char) if char else 0
        except ValueError:
            raise InvalidInput(f"bad characteristic in {args.spec!r}") from None
        res = catalog.count_repG_module_cats(catalog.GroupSpec.parse(group), characteristic)
        rep.values["total"] = res.total
        rep.values["items"] = [{"subgroup": d, "order": o, "multiplier": m} for d, o, m in res.items]
        return 0
    raise InvalidInput(f"unknown census {args.spec!r}")


def _algebra(inp: _Inputs, path: str):
    from .simplecheck.spec import algebra_from_json
    obj = inp.load_json(path)
    if not isinstance(obj, dict):
        raise InvalidInput("algebra spec must be a JSON object")
    return algebra_from_json(obj)


def cmd_simplecheck(args, inp, rep) -> int:
    from .simplecheck import check_invariants, is_simple_from_right
    alg = _algebra(inp, args.file)
    rep.findings += check_invariants(alg)
    res = is_simple_from_right(alg)
    rep.values.update({"dim": alg.dim, "simple": res.simple, "closure_dim": res.closure_dim,
                       "method": res.method, "field": repr(alg.field)})
    if res.witness is not None:
        rep.values["witness"] = [[str(x) for x in row] for row in res.witness]
    if res.note:
        rep.values["note"] = res.note
    if rep.findings:
        return 1
    return 0 if res.simple else 1


def cmd_filtration(args, inp, rep) -> int:
    from .simplecheck import compute_filtration, verify_q_derivative
    alg = _algebra(inp, args.file)
    filt = compute_filtration(alg)
    rep.values["dims"] = filt.dims
    rep.values["levels"] = [[[str(x) for x in row] for row in s.rows] for s in filt.levels]
    if filt.a0_simple is not None:
        rep.values["a0_simple"] = filt.a0_simple.simple
    rep.findings += filt.findings
    if alg.meta.get("kind") == "taft_A" and "y" in alg.names:
        rep.findings += verify_q_derivative(alg, alg.basis_vec(alg.names.index("y")), alg.meta["l"])
        rep.values["q_derivative_checked"] = True
    return 1 if rep.findings else 0


COMMANDS = {
    "validate": cmd_validate, "fpdim": cmd_fpdim, "regular": cmd_regular,
    "distinguished": cmd_distinguished, "cartan": cmd_cartan, "proj-fusion": cmd_proj_fusion,
    "functor-check": cmd_functor_check, "freeness": cmd_freeness, "lagrange": cmd_lagrange,
    "nimrep": cmd_nimrep, "example": cmd_example, "census": cmd_census,
    "simplecheck": cmd_simplecheck, "filtration": cmd_filtration,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ftcat", description="Grothendieck-level computations "
                                "for finite tensor categories.")
    p.add_argument("--verbose", action="store_true", help="also print findings to stderr")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("validate")
    s.add_argument("file")
    s.add_argument("--strict", action="store_true")
    s = sub.add_parser("fpdim")
    s.add_argument("file")
    s.add_argument("--object", help="coefficients '1,0,2' or a label sum 'a+2*b'")
    for name in ("regular", "distinguished", "cartan"):
        sub.add_parser(name).add_argument("file")
    s = sub.add_parser("proj-fusion")
    s.add_argument("file")
    s.add_argument("i")
    s.add_argument("j")
    sub.add_parser("functor-check").add_argument("file")
    sub.add_parser("freeness").add_argument("file")
    s = sub.add_parser("lagrange")
    s.add_argument("sub")
    s.add_argument("amb")
    s.add_argument("map")
    s = sub.add_parser("nimrep")
    s.add_argument("file")
    s.add_argument("--max-rank", type=int, required=True)
    s.add_argument("--no-duality", action="store_true")
    sub.add_parser("example").add_argument("name")
    sub.add_parser("census").add_argument("spec")
    sub.add_parser("simplecheck").add_argument("file")
    sub.add_parser("filtration").add_argument("file")
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    inp = _Inputs(argv)
    rep = Report(args.command)
    try:
        code = COMMANDS[args.command](args, inp, rep)
    except FtcatError as exc:
        rep.findings.append(Finding(type(exc).__name__, str(exc), tuple(
            getattr(exc, "candidates", ()) and [repr(c) for c in exc.candidates])))
        code = exc.exit_code
    if isinstance(code, dict):
        out.write(json.dumps(code, indent=2, sort_keys=True) + "\n")
        return 0
    rep.inputs_digest = inp.digest()
    out.write(rep.dumps() + "\n")
    if args.verbose:
        for f in sorted(rep.findings, key=Finding.sort_key):
            err.write(f"[{f.severity}] {f.code}: {f.message}\n")
    return code


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
