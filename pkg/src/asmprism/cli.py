"""Command line surface.

Exit codes: 0 on success, 1 on validation errors (bad input), 2 when a
``verify`` run finds a counterexample.  Output is deterministic for a
fixed invocation.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor

from . import asm as asm_mod
from . import ideal as ideal_mod
from . import perm as perm_mod
from . import pipedream as pd_mod
from . import prism as prism_mod
from .algebra import Polynomial
from .asm import Asm, AsmValidationError, MatrixParseError, PartialAsm


class CliError(Exception):
    """Validation failure: message printed to stderr, exit code 1."""


def _read_matrix(path: str) -> list[list[int]]:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        return asm_mod.parse_matrix_text(text)
    except MatrixParseError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _load_asm(path: str) -> Asm:
    try:
        return asm_mod.validate_asm(_read_matrix(path))
    except AsmValidationError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _load_partial(path: str) -> PartialAsm:
    try:
        return asm_mod.validate_partial_asm(_read_matrix(path))
    except AsmValidationError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Apply fn to items, optionally across processes; order preserved so
    output never depends on the schedule."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _cells_line(cells: Iterable[tuple[int, int]]) -> str:
    cells = sorted(cells)
    return " ".join(f"{i},{j}" for i, j in cells) if cells else "-"


# one helper per verify verb; top-level so they can cross process boundaries

def _check_theorem1(a: Asm) -> bool:
    target = Polynomial.zero()
    for w in perm_mod.min_perm_set(a):
        target = target + pd_mod.schubert_polynomial(w, a.n)
    return (
        prism_mod.asm_polynomial(prism_mod.bigrassmannian_model(a)) == target
        and prism_mod.asm_polynomial(prism_mod.parabolic_model(a)) == target
    )


def _check_bijection(a: Asm) -> bool:
    return (
        pd_mod.verify_bijection(prism_mod.bigrassmannian_model(a)).passed
        and pd_mod.verify_bijection(prism_mod.parabolic_model(a)).passed
    )


def _check_groebner(a: Asm) -> bool:
    sr = ideal_mod.stanley_reisner_facets(ideal_mod.initial_ideal(a), a.n)
    from_subword = frozenset(f.complement_cells() for f in pd_mod.delta_facets(a))
    return sr.facets == from_subword


def _check_schur(args: tuple[tuple[int, ...], int]) -> bool:
    lam, d = args
    spec = prism_mod.PrismShapeSpec((lam,), (d,))
    return prism_mod.asm_polynomial(spec) == prism_mod.schur_polynomial_ssyt(lam, d)


def _verify_theorem1(n: int, jobs: int) -> tuple[bool, str]:
    asms = list(asm_mod.enumerate_asms(n))
    results = _pmap(_check_theorem1, asms, jobs)
    ok = sum(results)
    return all(results), f"{ok}/{len(asms)} ASMs, both models"


def _verify_bijection(n: int, jobs: int) -> tuple[bool, str]:
    asms = list(asm_mod.enumerate_asms(n))
    results = _pmap(_check_bijection, asms, jobs)
    return all(results), f"{sum(results)}/{len(asms)} ASMs, both models"


def _verify_groebner(n: int, jobs: int) -> tuple[bool, str]:
    asms = list(asm_mod.enumerate_asms(n))
    results = _pmap(_check_groebner, asms, jobs)
    return all(results), f"{sum(results)}/{len(asms)} ASMs"


def _verify_lattice(n: int, jobs: int) -> tuple[bool, str]:
    asms = list(asm_mod.enumerate_asms(n))
    ok = True
    for a in asms:
        for b in asms:
            j = asm_mod.asm_join(a, b)
            m = asm_mod.asm_meet(a, b)
            ok = ok and asm_mod.asm_leq(a, j) and asm_mod.asm_leq(b, j)
            ok = ok and asm_mod.asm_leq(m, a) and asm_mod.asm_leq(m, b)
        ok = ok and asm_mod.join_all(
            [u.matrix(n) for u in perm_mod.bigr_of(a)], n
        ) == a
    return ok, f"{len(asms)} ASMs, joins/meets closed, A = join(biGr(A))"


def _verify_schur(n: int, jobs: int) -> tuple[bool, str]:
    shapes = [
        (parts, d)
        for parts in _partitions_in_box(n, n)
        for d in range(max(1, len(parts)), n + 1)
    ]
    results = _pmap(_check_schur, shapes, jobs)
    return all(results), f"{sum(results)}/{len(shapes)} single shapes match the tableau Schur"


def _partitions_in_box(rows: int, cols: int) -> list[tuple[int, ...]]:
    out = [()]
    def rec(prefix: list[int], maxpart: int) -> None:
        if len(prefix) == rows:
            return
        for p in range(1, maxpart + 1):
            cur = prefix + [p]
            out.append(tuple(cur))
            rec(cur, p)
    rec([], cols)
    return sorted(out, key=lambda t: (len(t), t))


VERIFIERS = {
    "theorem1": _verify_theorem1,
    "bijection": _verify_bijection,
    "groebner": _verify_groebner,
    "lattice": _verify_lattice,
    "schur": _verify_schur,
}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="asmprism", description=__doc__)
    sub = top.add_subparsers(dest="verb", required=True)

    def with_asm(p: argparse.ArgumentParser) -> None:
        p.add_argument("--asm", required=True, metavar="FILE", help="matrix file, or - for stdin")

    def with_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["text", "structured"], default="text")

    p = sub.add_parser("poly", help="the ASM polynomial / multidegree")
    p.add_argument("--model", choices=["bigr", "parabolic", "schubert-sum", "multidegree"], required=True)
    with_asm(p)

    p = sub.add_parser("prism", help="prism tableau listings")
    p.add_argument("action", choices=["list"])
    p.add_argument("--model", choices=["bigr", "parabolic"], required=True)
    p.add_argument("--verbose", action="store_true", help="print the weight of each tableau")
    with_asm(p)
    with_format(p)

    p = sub.add_parser("facets", help="facets of the subword complex")
    p.add_argument("--max", action="store_true", help="only the maximal-dimension facets")
    with_asm(p)
    with_format(p)

    for verb in ("perm-set", "min-perm", "deg", "diagram", "essential", "triangle"):
        p = sub.add_parser(verb)
        with_asm(p)
        if verb in ("diagram", "essential"):
            with_format(p)

    p = sub.add_parser("ideal", help="antidiagonal initial ideal data")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--init", action="store_true", help="minimal generators")
    g.add_argument("--facets", action="store_true", help="Stanley-Reisner facets")
    with_asm(p)

    p = sub.add_parser("count", help="number of n x n ASMs, by enumeration")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", help="exhaustive theorem checks")
    p.add_argument("name", choices=sorted(VERIFIERS))
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("complete", help="canonical completion of a partial ASM")
    with_asm(p)

    return top


def _run(args: argparse.Namespace) -> int:
    out = sys.stdout
    if args.verb == "poly":
        a = _load_asm(args.asm)
        if args.model == "bigr":
            poly = prism_mod.asm_polynomial(prism_mod.bigrassmannian_model(a))
        elif args.model == "parabolic":
            poly = prism_mod.asm_polynomial(prism_mod.parabolic_model(a))
        elif args.model == "schubert-sum":
            poly = Polynomial.zero()
            for w in perm_mod.min_perm_set(a):
                poly = poly + pd_mod.schubert_polynomial(w, a.n)
        else:
            poly = ideal_mod.multidegree(a)
        print(poly.render(), file=out)
        return 0

    if args.verb == "prism":
        a = _load_asm(args.asm)
        model = prism_mod.bigrassmannian_model(a) if args.model == "bigr" else prism_mod.parabolic_model(a)
        tableaux = sorted(
            prism_mod.prism_set(model),
            key=prism_mod.serialize_prism_tableau,
        )
        for idx, t in enumerate(tableaux):
            if args.format == "structured":
                line = prism_mod.serialize_prism_tableau(t)
                if args.verbose:
                    line += f" wt={prism_mod.prism_weight(t).render()}"
                print(line, file=out)
            else:
                if idx:
                    print(file=out)
                print(prism_mod.render_prism_tableau(t), file=out)
                if args.verbose:
                    print(f"  wt: {prism_mod.prism_weight(t).render()}", file=out)
        return 0

    if args.verb == "facets":
        a = _load_asm(args.asm)
        facets = pd_mod.delta_fmax(a) if args.max else pd_mod.delta_facets(a)
        diagrams = sorted((f.diagram for f in facets), key=lambda d: d.sorted_cells())
        for idx, d in enumerate(diagrams):
            if args.format == "structured":
                print(_cells_line(d.cells), file=out)
            else:
                if idx:
                    print(file=out)
                print(d.render(), file=out)
        return 0

    if args.verb in ("perm-set", "min-perm"):
        a = _load_asm(args.asm)
        ws = perm_mod.perm_set(a) if args.verb == "perm-set" else perm_mod.min_perm_set(a)
        for w in sorted(ws, key=lambda w: w.padded(a.n)):
            print(w.render(a.n), file=out)
        return 0

    if args.verb == "deg":
        print(perm_mod.deg(_load_asm(args.asm)), file=out)
        return 0

    if args.verb == "diagram":
        a = _load_asm(args.asm)
        cells = asm_mod.inversions(a)
        if args.format == "structured":
            print(_cells_line(cells), file=out)
        else:
            for i in range(1, a.n + 1):
                print("".join("#" if (i, j) in cells else "." for j in range(1, a.n + 1)), file=out)
        return 0

    if args.verb == "essential":
        a = _load_asm(args.asm)
        print(_cells_line(asm_mod.essential_set(a)), file=out)
        return 0

    if args.verb == "triangle":
        a = _load_asm(args.asm)
        for row in asm_mod.monotone_triangle(a).rows:
            print(" ".join(str(x) for x in row), file=out)
        return 0

    if args.verb == "ideal":
        a = _load_asm(args.asm)
        if args.init:
            for g in sorted(ideal_mod.initial_ideal(a), key=lambda g: (len(g.support), sorted(g.support))):
                print(g.render(), file=out)
        else:
            sr = ideal_mod.stanley_reisner_facets(ideal_mod.initial_ideal(a), a.n)
            for f in sorted(sr.facets, key=lambda f: sorted(f)):
                print(_cells_line(f), file=out)
        return 0

    if args.verb == "count":
        if args.n < 1:
            raise CliError("n must be positive")
        print(sum(1 for _ in asm_mod.enumerate_asms(args.n)), file=out)
        return 0

    if args.verb == "verify":
        if args.n < 1:
            raise CliError("--n must be positive")
        passed, detail = VERIFIERS[args.name](args.n, args.jobs)
        if passed:
            print(f"OK: {detail}", file=out)
            return 0
        print(f"FAIL: {detail}", file=out)
        return 2

    if args.verb == "complete":
        p = _load_partial(args.asm)
        print(asm_mod.render_asm(asm_mod.canonical_completion(p)), file=out)
        return 0

    raise CliError(f"unknown verb {args.verb!r}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
