"""Command-line front end: mnv.

Exit codes are the machine contract: 0 success / all checks pass, 1 check
failure, 2 usage or parse error, 3 cap refusal.  Reports are deterministic
under identical seeds; there is no environment-variable configuration.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .families import SetFamily, is_acyclic_with_slack
from .formats import (FORMAT_VERSIONS, ParseError, load_path, parse_family,
                      write_betti, write_complex, write_family, write_poset)
from .homology import reduced_betti
from .leray import CapExceeded, format_leray, j_index, leray_number
from .nerve import multinerve, nerve, reduced_multinerve
from .poset import PosetError, SimplicialComplex, SimplicialPoset, \
    barycentric_subdivision
from .verify import (PreconditionError, helly_number, instance_id,
                     random_family, verify_helly_bound,
                     verify_multinerve_theorem, verify_projection_bound)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_family(path: str, gamma_dim: int | None) -> SetFamily:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_family(fh.read(), path, gamma_dim_override=gamma_dim)


def _tag_lines(lp) -> list[str]:
    tags = []
    for tag in lp.tags:
        a = ",".join(str(i) for i in tag.subset)
        c = "-" if tag.component is None else str(tag.component.canon)
        tags.append(f"A={a} C={c}")
    return tags


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mnv",
        description="multinerves, exact homology, Leray numbers, Helly bounds")
    p.add_argument("--version", action="version",
                   version=f"mnv {__version__} (formats: {' '.join(FORMAT_VERSIONS)})")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker cap for independent measurements; results "
                        "and output ordering do not depend on it")
    sub = p.add_subparsers(dest="command", required=True)

    def add_out(sp):
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("homology", help="reduced Betti numbers of a poset or complex")
    sp.add_argument("input")
    add_out(sp)

    sp = sub.add_parser("sd", help="barycentric subdivision of a poset")
    sp.add_argument("input")
    add_out(sp)

    for name in ("leray", "j-index"):
        sp = sub.add_parser(name, help=f"{name} of a poset or complex")
        sp.add_argument("input")
        sp.add_argument("--cap", type=int, default=16)
        sp.add_argument("--sample", type=int, default=None,
                        help="sampling mode: lower bound from N random draws")
        sp.add_argument("--seed", type=int, default=0)
        add_out(sp)

    sp = sub.add_parser("nerve", help="nerve of a family")
    sp.add_argument("input")
    sp.add_argument("--gamma-dim", type=int, default=None)
    add_out(sp)

    sp = sub.add_parser("multinerve", help="multinerve (or reduced multinerve) of a family")
    sp.add_argument("input")
    sp.add_argument("--t", type=int, default=None,
                    help="merge threshold: build the reduced multinerve")
    sp.add_argument("--gamma-dim", type=int, default=None)
    add_out(sp)

    sp = sub.add_parser("helly", help="Helly number of a family with empty intersection")
    sp.add_argument("input")
    sp.add_argument("--cap", type=int, default=16)
    sp.add_argument("--gamma-dim", type=int, default=None)
    add_out(sp)

    sp = sub.add_parser("check-acyclic", help="test acyclicity with slack")
    sp.add_argument("input")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--gamma-dim", type=int, default=None)
    add_out(sp)

    sp = sub.add_parser("verify", help="check the multinerve/projection/Helly bounds on an instance")
    sp.add_argument("what", choices=["multinerve", "projection", "helly"])
    sp.add_argument("input")
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--cap", type=int, default=16)
    sp.add_argument("--gamma-dim", type=int, default=None)
    sp.add_argument("--artifacts-dir", default=None,
                    help="archive L<J counterexample candidates here")
    add_out(sp)

    sp = sub.add_parser("gen", help="generate a reproducible random family")
    sp.add_argument("--backend", choices=["box", "subcomplex"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--ambient-dim", type=int, default=1)
    sp.add_argument("--boxes-per-member", type=int, default=2)
    sp.add_argument("--grid", type=int, default=4)
    sp.add_argument("--stars-per-member", type=int, default=2)
    sp.add_argument("--with-ring", action="store_true")
    add_out(sp)
    return p


def dispatch(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "homology":
        obj = load_path(args.input)
        if isinstance(obj, SetFamily):
            raise ParseError(args.input, 1, "homology expects a poset or complex file")
        _emit(write_betti(reduced_betti(obj)), args.out)
        return EXIT_OK

    if cmd == "sd":
        obj = load_path(args.input)
        if not isinstance(obj, SimplicialPoset):
            if isinstance(obj, SimplicialComplex):
                obj = obj.as_poset()
            else:
                raise ParseError(args.input, 1, "sd expects a poset or complex file")
        _emit(write_complex(barycentric_subdivision(obj)), args.out)
        return EXIT_OK

    if cmd in ("leray", "j-index"):
        obj = load_path(args.input)
        if isinstance(obj, SetFamily):
            raise ParseError(args.input, 1, f"{cmd} expects a poset or complex file")
        fn = leray_number if cmd == "leray" else j_index
        rep = fn(obj, cap=args.cap, sample=args.sample, seed=args.seed)
        _emit(format_leray(rep, kind=cmd), args.out)
        return EXIT_OK

    if cmd == "nerve":
        F = _load_family(args.input, args.gamma_dim)
        _emit(write_complex(nerve(F)), args.out)
        return EXIT_OK

    if cmd == "multinerve":
        F = _load_family(args.input, args.gamma_dim)
        if args.t is None:
            lp = multinerve(F)
        else:
            lp, _ = reduced_multinerve(F, args.t)
        _emit(write_poset(lp.poset, labels=_tag_lines(lp)), args.out)
        return EXIT_OK

    if cmd == "helly":
        F = _load_family(args.input, args.gamma_dim)
        res = helly_number(F, cap=args.cap)
        text = (f"report v1\ninstance = {instance_id(F)}\nh = {res.h}\n"
                f"witness = {','.join(str(i) for i in res.witness)}\n")
        _emit(text, args.out)
        return EXIT_OK

    if cmd == "check-acyclic":
        F = _load_family(args.input, args.gamma_dim)
        ok, viol = is_acyclic_with_slack(F, args.s)
        lines = ["report v1", f"instance = {instance_id(F)}", f"s = {args.s}",
                 f"acyclic_with_slack = {'true' if ok else 'false'}"]
        if viol is not None:
            lines.append(f"violation_subset = {','.join(str(i) for i in viol.subset)}")
            lines.append(f"violation_dim = {viol.dim}")
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK if ok else EXIT_CHECK_FAILED

    if cmd == "verify":
        F = _load_family(args.input, args.gamma_dim)
        if args.what == "multinerve":
            report = verify_multinerve_theorem(F, args.s)
        elif args.what == "projection":
            report = verify_projection_bound(F, t=args.t, s=args.s,
                                             cap=args.cap,
                                             artifacts_dir=args.artifacts_dir)
        else:
            report = verify_helly_bound(F, s=args.s if args.s is not None else 0,
                                        t=args.t, cap=args.cap)
        if args.out:
            # report files are append-only, keyed by the embedded instance
            # hash; failed instances are archived with their full input
            with open(args.out, "a", encoding="utf-8") as fh:
                fh.write(report.render() + "\n")
            if not report.all_pass:
                archive = Path(args.out).parent / f"{report.instance}.family"
                archive.write_text(write_family(F), encoding="utf-8")
        else:
            sys.stdout.write(report.render())
        return EXIT_OK if report.all_pass else EXIT_CHECK_FAILED

    if cmd == "gen":
        F = random_family(args.backend, args.n, args.seed,
                          ambient_dim=args.ambient_dim,
                          boxes_per_member=args.boxes_per_member,
                          grid=args.grid,
                          stars_per_member=args.stars_per_member,
                          with_ring=args.with_ring)
        _emit(write_family(F), args.out)
        return EXIT_OK

    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is not None and args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.command == "verify" and args.what == "multinerve" and args.s is None:
        parser.error("verify multinerve requires --s")
    try:
        return dispatch(args)
    except CapExceeded as e:
        print(f"mnv: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, PosetError, FileNotFoundError) as e:
        print(f"mnv: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as e:
        print(f"mnv: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
