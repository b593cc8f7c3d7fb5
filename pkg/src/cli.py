"""Command line front end

Data goes to stdout one result per line, in element index order; `#` lines are headers.
Logging goes to stderr. Exit status is 0 on success, 1 on a domain error and 2 on a usage
error.
"""
import argparse
import logging
import sys
from typing import List, Optional, Sequence
from src.catalog.fixtures import fixture, parse_fixture_spec
from src.definability.automorphisms import automorphisms, format_cycles, is_definable, orbit_partition
from src.definability.chain import chain_element_formula
from src.definability.synthesis import DEFAULT_MAX_QUANTIFIER_DEPTH, Found, synthesize
from src.errors import LatfoError
from src.evaluator.evaluator import Evaluator
from src.evaluator.properties import PropertyKind, property_table
from src.evaluator.stdlib import instantiate_family, load_stdlib, resolve_family
from src.formula.ast import Call, Formula, Var
from src.formula.defs import DefTable, load_definitions
from src.formula.parser import parse
from src.formula.printer import format_definition, format_formula
from src.lattice.base import Lattice, parse_subset
from src.lattice.io import format_lattice, load_lattice, to_dot
from src.semigroup.base import Semigroup
from src.semigroup.context import concept_lattice, incidence_context
from src.semigroup.identity import parse_basis, parse_identity, satisfies
from src.semigroup.io import load_semigroup
from src.semigroup.named import parse_named
from src.utils import setup_logger

DEFAULT_BUDGET = 9

LOGGER = logging.getLogger(__name__)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logger(args.log_level, args.log_file)
    try:
        lines = args.handler(args, parser)
    except LatfoError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    for line in lines:
        print(line)
    return 0


def _lattice(args, parser) -> Lattice:
    if args.lattice is not None:
        return load_lattice(args.lattice)
    if args.fixture is not None:
        return fixture(args.fixture)
    parser.error("one of --lattice or --fixture is required")


def _defs(args) -> DefTable:
    stdlib = load_stdlib()
    if not args.defs:
        return stdlib
    return load_definitions(args.defs, base=stdlib)


def _def_call(text: str, defs: DefTable) -> Call:
    """`A`, `N_k,k=3` or `CMon,n=2,m=3` as a call on the definition's own formal variables"""
    name, *raw = [part.strip() for part in text.split(",")]
    params = []
    for part in raw:
        _, _, value = part.partition("=")
        params.append(int(value))
    key, _ = resolve_family(name, len(params))
    d = instantiate_family(name, *params, defs=defs) if params else defs.instantiate(key)
    return Call(key, tuple(params), tuple(Var(v) for v in d.formals))


def _formula(args, parser, defs: DefTable) -> Formula:
    if args.formula is not None:
        return parse(args.formula, defs)
    if args.definition is not None:
        try:
            return _def_call(args.definition, defs)
        except ValueError:
            parser.error(f"--def expects NAME[,k=INT], got '{args.definition}'")
    parser.error("one of --formula or --def is required")


def _ids(L: Lattice, subset) -> str:
    return " ".join(L.ids(sorted(subset)))


def check_lattice(args, parser) -> List[str]:
    L = _lattice(args, parser)
    if args.dot:
        return to_dot(L).rstrip("\n").split("\n")
    return [f"ok {L.name} {len(L)}"]


def eval_formula(args, parser) -> List[str]:
    L = _lattice(args, parser)
    defs = _defs(args)
    evaluator = Evaluator(L, defs)
    f = _formula(args, parser, defs)
    if args.list:
        return [_ids(L, evaluator.defined_set(f))]
    env = {}
    for binding in args.env:
        var, _, ref = binding.partition("=")
        env[var.strip()] = ref.strip()
    return ["true" if evaluator.eval(f, env) else "false"]


def stdlib(args, parser) -> List[str]:
    defs = _defs(args)
    if args.show:
        return [format_definition(d) for d in defs]
    return [d.signature for d in defs]


def orbits(args, parser) -> List[str]:
    L = _lattice(args, parser)
    group = automorphisms(L)
    lines = [f"# order {group.order}{'' if group.complete else ' (generators only)'}"]
    for k, block in enumerate(orbit_partition(L, group).blocks):
        lines.append(f"{k} {_ids(L, block)}")
    return lines


def definable(args, parser) -> List[str]:
    L = _lattice(args, parser)
    verdict = is_definable(L, parse_subset(L, args.subset))
    if verdict.definable:
        return ["definable"]
    return [f"not-definable witness={format_cycles(L, verdict.witness)}"]


def synth(args, parser) -> List[str]:
    L = _lattice(args, parser)
    result = synthesize(L, parse_subset(L, args.subset), args.budget, max_depth=args.max_depth)
    if isinstance(result, Found):
        return [f"found {format_formula(result.formula)}"]
    return [f"inconclusive {result.reason}"]


def chain_formula(args, parser) -> List[str]:
    defs = _defs(args)
    f = chain_element_formula(_formula(args, parser, defs), args.n)
    lines = [format_formula(f)]
    if args.lattice is not None or args.fixture is not None:
        L = _lattice(args, parser)
        lines.append(_ids(L, Evaluator(L, defs).defined_set(f)))
    return lines


def fixture_export(args, parser) -> List[str]:
    spec = parse_fixture_spec(":".join([args.name] + args.params))
    L = fixture(spec)
    text = to_dot(L) if args.dot else format_lattice(L)
    return text.rstrip("\n").split("\n")


def _semigroups(args, parser) -> List[Semigroup]:
    semigroups = [load_semigroup(args.semigroup)] if args.semigroup is not None else []
    semigroups += [parse_named(text) for text in args.named]
    if not semigroups:
        parser.error("one of --named or --semigroup is required")
    return semigroups


def semigroup_sat(args, parser) -> List[str]:
    """One verdict per semigroup; with several semigroups each line starts with the semigroup name"""
    semigroups = _semigroups(args, parser)
    identities = [parse_identity(text) for text in args.identity]
    if args.basis is not None:
        identities += parse_basis(args.basis)
    if not identities:
        parser.error("give at least one --identity or a --basis")
    lines = []
    for S in semigroups:
        failing = [identity for identity in identities if not satisfies(S, identity)]
        prefix = f"{S.name} " if len(semigroups) > 1 else ""
        lines.append(prefix + ("false" if failing else "true"))
        lines += [f"# {prefix}fails {identity}" for identity in failing]
    return lines


def semigroup_context(args, parser) -> List[str]:
    if not args.named or not args.identity:
        parser.error("a context needs at least one --named and one --identity")
    ctx = incidence_context([parse_named(text) for text in args.named], [parse_identity(t) for t in args.identity])
    lines = ["# " + " | ".join(str(identity) for identity in ctx.attributes)]
    for S, row in zip(ctx.objects, ctx.incidence):
        lines.append(f"{S.name} " + " ".join("1" if v else "0" for v in row))
    L = concept_lattice(ctx)
    text = to_dot(L) if args.dot else format_lattice(L)
    return lines + [f"# {len(L)} concepts"] + text.rstrip("\n").split("\n")


def report(args, parser) -> List[str]:
    L = _lattice(args, parser)
    table = property_table(L)
    blocks = orbit_partition(L)
    lines = ["# id " + " ".join(kind.value for kind in PropertyKind) + " orbit"]
    for i in range(len(L)):
        flags = " ".join("1" if table[kind][i] else "0" for kind in PropertyKind)
        orbit = blocks.blocks.index(blocks.block_of(i))
        lines.append(f"{L.id(i)} {flags} {orbit}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    common.add_argument("--log-file", default=None)
    common.add_argument("--defs", nargs="+", default=[], help="definition files added to the stdlib")

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group()
    group.add_argument("--lattice", help="lattice file")
    group.add_argument("--fixture", help="fixture spec, e.g. chain:5 or fig1_chain:4:2,3")

    formula = argparse.ArgumentParser(add_help=False)
    group = formula.add_mutually_exclusive_group()
    group.add_argument("--formula", help="formula text")
    group.add_argument("--def", dest="definition", help="definition name, e.g. A or N_k,k=3")

    parser = argparse.ArgumentParser(prog="latfo", description="First-order definability over finite lattices.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    cmd = verbs.add_parser("check-lattice", parents=[common, source], help="validate a lattice")
    cmd.add_argument("--dot", action="store_true", help="print the Hasse diagram as DOT instead")
    cmd.set_defaults(handler=check_lattice)

    cmd = verbs.add_parser("eval", parents=[common, source, formula], help="evaluate a formula")
    cmd.add_argument("--list", action="store_true", help="print the defined set")
    cmd.add_argument("--env", action="append", default=[], metavar="VAR=ID")
    cmd.set_defaults(handler=eval_formula)

    cmd = verbs.add_parser("stdlib", parents=[common], help="list the definition catalog")
    cmd.add_argument("--list", action="store_true", help="signatures only (default)")
    cmd.add_argument("--show", action="store_true", help="print full definitions")
    cmd.set_defaults(handler=stdlib)

    cmd = verbs.add_parser("orbits", parents=[common, source], help="automorphism orbits")
    cmd.set_defaults(handler=orbits)

    cmd = verbs.add_parser(
        "definable", parents=[common, source], help="orbit test for a subset (exact for finite lattices)"
    )
    cmd.add_argument("--subset", required=True)
    cmd.set_defaults(handler=definable)

    cmd = verbs.add_parser(
        "synth", parents=[common, source], help="bounded search for a defining formula in a finite lattice"
    )
    cmd.add_argument("--subset", required=True)
    cmd.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    cmd.add_argument("--max-depth", type=int, default=DEFAULT_MAX_QUANTIFIER_DEPTH)
    cmd.set_defaults(handler=synth)

    cmd = verbs.add_parser("chain-formula", parents=[common, source, formula], help="n-th member of a chain")
    cmd.add_argument("--n", type=int, required=True)
    cmd.set_defaults(handler=chain_formula)

    cmd = verbs.add_parser("fixture", help="fixture lattices")
    actions = cmd.add_subparsers(dest="action", required=True)
    export = actions.add_parser("export", parents=[common], help="print a fixture in the lattice file format")
    export.add_argument("name")
    export.add_argument("params", nargs="*")
    export.add_argument("--dot", action="store_true")
    export.set_defaults(handler=fixture_export)

    cmd = verbs.add_parser("semigroup", help="finite semigroups and identities")
    actions = cmd.add_subparsers(dest="action", required=True)
    sat = actions.add_parser("sat", parents=[common], help="check identities in a semigroup")
    sat.add_argument("--named", action="append", default=[], help="e.g. P3, z:3, c_monoid:2")
    sat.add_argument("--semigroup", help="semigroup file")
    sat.add_argument("--identity", action="append", default=[])
    sat.add_argument("--basis", help="named basis, e.g. SL or A:3")
    sat.set_defaults(handler=semigroup_sat)
    context = actions.add_parser("context", parents=[common], help="incidence context and concept lattice")
    context.add_argument("--named", action="append", default=[])
    context.add_argument("--identity", action="append", default=[])
    context.add_argument("--dot", action="store_true")
    context.set_defaults(handler=semigroup_context)

    cmd = verbs.add_parser("report", parents=[common, source], help="element properties and orbits")
    cmd.set_defaults(handler=report)
    return parser


if __name__ == "__main__":
    sys.exit(main())
