"""``galoispoints`` command line: analyze, galois and bounds."""

from __future__ import annotations

import argparse
import logging
import sys

from . import report as rp
from .algebra.fields import FieldError
from .algebra.parse import ParseError
from .bounds import BoundsError, UndeterminedGenus, bounds_report, summarize
from .contact import (
    ContactError,
    contact_with_escalation,
    dual_invariants,
    flex_table,
    kaji_genus_check,
)
from .curvefile import load_curve
from .curves import CurveError, family, genus_report, singular_points
from .galois import galois_survey

log = logging.getLogger("galoispoints")

FAMILY_CHOICES = ("fermat", "ballico-hefez", "cuspidal", "random-smooth")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("curve source")
    src.add_argument("--family", choices=FAMILY_CHOICES)
    src.add_argument("--curve-file", metavar="PATH")
    src.add_argument("--p", type=int, help="characteristic")
    src.add_argument("--e", type=int, default=1, help="d = p^e + 1 for fermat / ballico-hefez")
    src.add_argument("--k", type=int, default=1, help="base field GF(p^k) for random families")
    src.add_argument("--d", type=int, default=4, help="degree for random families")
    src.add_argument("--seed", type=int, default=0)
    run = common.add_argument_group("run")
    run.add_argument("--kmax", type=int, default=4, dest="k_max")
    run.add_argument("--search-k", type=int, default=2)
    run.add_argument("--trials", type=int, default=7)
    run.add_argument("--jobs", type=int, default=1)
    run.add_argument("--format", choices=("json", "tsv", "text"), default="json")
    run.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="galoispoints",
                                     description="Galois points of plane curves over finite fields")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="degree, genus, contact, flexes, dual")
    sub.add_parser("galois", parents=[common], help="survey and certify Galois points")
    sub.add_parser("bounds", parents=[common], help="evaluate the bounds on delta")
    return parser


def config_from_args(args) -> rp.RunConfig:
    if (args.family is None) == (args.curve_file is None):
        raise ValueError("give exactly one of --family or --curve-file")
    if args.curve_file is not None:
        source = {"file": args.curve_file}
    else:
        if args.p is None:
            raise ValueError("--family needs --p")
        source = {"family": args.family, "p": args.p}
        if args.family in ("fermat", "ballico-hefez"):
            source["e"] = args.e
        else:
            source.update(k=args.k, d=args.d, seed=args.seed)
    for name in ("k_max", "search_k", "trials", "jobs"):
        if getattr(args, name) < 1:
            raise ValueError("--%s must be positive" % name.replace("_", "-"))
    return rp.RunConfig(args.command, source, args.k_max, args.search_k, args.trials,
                        args.seed, args.format, args.verbose, args.jobs)


def load_source(config: rp.RunConfig):
    src = dict(config.source)
    if "file" in src:
        return load_curve(src["file"])
    name = src.pop("family")
    return family(name, **src)


# ---------------------------------------------------------------------------
# commands; each returns (report, exit code)


def cmd_analyze(config: rp.RunConfig, C=None):
    C = C if C is not None else load_source(config)
    gr = genus_report(C, config.k_max)
    contact = contact_with_escalation(C, config.k_max)
    sing = singular_points(C, config.k_max)
    flexes = None
    if gr.value is not None:
        flexes = flex_table(C, config.k_max, contact)
    try:
        dual = dual_invariants(C, config.k_max, config.trials, config.seed, contact)
    except ContactError as exc:
        log.warning("dual invariants unavailable: %s", exc)
        dual = None
    kaji = kaji_genus_check(C, dual) if dual is not None else None
    completeness = {"genus": gr.value is not None, "singular": sing.complete,
                    "contact_sample": contact.sample_size,
                    "flexes": None if flexes is None else flexes.complete}
    out = rp.assemble(config, rp.curve_block(C, gr.value, contact.M),
                      completeness=completeness,
                      genus_method=gr.method,
                      singular=rp.singular_block(C, sing),
                      flexes=None if flexes is None else rp.flex_block(flexes),
                      dual=rp.dual_block(dual, kaji))
    if gr.value is None:
        print("genus undetermined: %s" % gr.diagnostic, file=sys.stderr)
        return out, rp.EXIT_GENUS
    return out, rp.EXIT_OK


def cmd_galois(config: rp.RunConfig, C=None):
    C = C if C is not None else load_source(config)
    S = galois_survey(C, config.k_max, config.search_k, config.jobs)
    gr = genus_report(C, config.k_max)
    contact = contact_with_escalation(C, config.k_max)
    out = rp.assemble(config, rp.curve_block(C, gr.value, contact.M),
                      survey=rp.survey_block(S),
                      completeness={"survey": S.complete, "genus": gr.value is not None})
    return out, rp.EXIT_OK if S.complete else rp.EXIT_INCOMPLETE


def cmd_bounds(config: rp.RunConfig, C=None):
    C = C if C is not None else load_source(config)
    s = summarize(C, config.k_max, config.search_k, config.trials, config.seed, config.jobs)
    V = bounds_report(C, s)
    out = rp.assemble(config, rp.curve_block(C, s.g, s.M),
                      survey=rp.survey_block(s.survey),
                      bounds=rp.bounds_block(V),
                      completeness=rp.summary_completeness(s),
                      classification=rp.classification_block(V),
                      alarm=V.alarm)
    if V.alarm:
        return out, rp.EXIT_ALARM
    return out, rp.EXIT_OK if s.survey_complete else rp.EXIT_INCOMPLETE


COMMANDS = {"analyze": cmd_analyze, "galois": cmd_galois, "bounds": cmd_bounds}


def run(config: rp.RunConfig):
    return COMMANDS[config.command](config)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)],
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        config = config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        out, code = run(config)
    except UndeterminedGenus as exc:
        print("error: %s" % exc, file=sys.stderr)
        return rp.EXIT_GENUS
    except OSError as exc:
        print("error: cannot read curve file: %s" % exc, file=sys.stderr)
        return rp.EXIT_INPUT
    except (ParseError, FieldError, CurveError, BoundsError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return rp.EXIT_INPUT
    sys.stdout.write(rp.render(out, config.format))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
