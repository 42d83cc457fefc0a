# The hambypass Project.
# Author: The hambypass authors, 2026/10/17

#  Copyright (c) 2026 The hambypass authors.
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
"""The console commands.

"""
import json
import logging
import re
import sys
from typing import Any, TextIO

import click

from hambypass.conditions import get_condition
from hambypass.digraph import Digraph, parse_digraph, format_digraph
from hambypass.errors import DigraphError, GoldenMismatchError
from hambypass.families import complete_digraph, \
    complete_bipartite_digraph, complete_bipartite_minus_arc, \
    directed_cycle, bypass_pattern, t5, InnerSpec, d0, d1
from hambypass.insertion import explain_hamiltonian_cycle, explain_bypass
from hambypass.search import find_hamiltonian_cycle, \
    find_pre_hamiltonian_cycle, find_hamiltonian_bypass, \
    find_bypass_pattern, find_good_cycle, find_cycle_of_length
from hambypass.verify import SampleModel, TheoremReport, Verdict, \
    GoldenStore, CLASSIC_CONDITIONS, get_theorem, run_check, resolve_workers

FAMILIES: tuple[str, ...] = ("kstar", "kbipartite", "kbipartite-minus",
                             "cycle", "dnk", "t5", "d0", "d1")
"""The digraph families of the gen command."""
THEOREMS: tuple[str, ...] = ("thm6", "thm8", "thm9", "thm11", "thm12",
                             "thm16", "lemma5", "lemma7", "prehc13",
                             "prehc14", "classic")
"""The theorems of the verify command."""
STRUCTURE_RE: re.Pattern = re.compile(
    r"^(hc|prehc|bypass|goodcycle|dnk:(\d+)|cycle:(\d+))$")
"""The structures of the find command."""


def __echo_json(data: dict[str, Any]) -> None:
    """Writes a JSON document to the standard output.

    :param data: The document.
    :return: None.
    """
    click.echo(json.dumps(data, indent=2))


def __read_digraph(stream: TextIO) -> Digraph:
    """Reads a digraph in the text format.

    :param stream: The input stream.
    :return: The digraph.
    :raise click.BadParameter: When the input is malformed.
    """
    try:
        return parse_digraph(stream.read())
    except DigraphError as e:
        raise click.BadParameter(str(e), param_hint="INPUT")


def __require(value: int | None, name: str, family: str) -> int:
    """Returns a required generator parameter.

    :param value: The parameter value.
    :param name: The option name.
    :param family: The family name.
    :return: The parameter value.
    :raise click.UsageError: When the parameter is missing.
    """
    if value is None:
        raise click.UsageError(f"{family} needs {name}.")
    return value


def __validate_structure(ctx: click.core.Context, param: click.core.Argument,
                         value: str) -> str:
    """Validates the structure name of the find command.

    :param ctx: The console command context.
    :param param: The console command argument.
    :param value: The structure name.
    :raise click.BadParameter: When validation fails.
    :return: The structure name.
    """
    if STRUCTURE_RE.match(value) is None:
        raise click.BadParameter(f"Unknown structure \"{value}\".")
    return value


@click.group("hambypass")
@click.option("-q", "--quiet", is_flag=True, default=False,
              help="Only log warnings and errors.")
@click.option("-v", "--verbose", is_flag=True, default=False,
              help="Log debugging messages.")
def cli(quiet: bool, verbose: bool) -> None:
    """Generates digraph families, checks degree conditions, finds
    Hamiltonian bypasses, and verifies the theorems on small orders."""
    if quiet and verbose:
        raise click.UsageError("--quiet and --verbose exclude each other.")
    level: int = logging.WARNING if quiet \
        else logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(stream=sys.stderr, level=level, force=True,
                        format="%(asctime)s %(levelname)s %(name)s:"
                               " %(message)s")


@cli.command("gen")
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("--n", "n", type=int, help="The number of vertices.")
@click.option("--k", "k", type=int, help="The parameter k.")
@click.option("--p", "p", type=int, help="The size of the first part.")
@click.option("--q", "q", type=int, help="The size of the second part.")
@click.option("--inner", default="empty", show_default=True,
              help="The inner subdigraph of D_0: empty, complete, random:SEED"
                   " or explicit:U-V,...")
def gen_command(family: str, n: int | None, k: int | None, p: int | None,
                q: int | None, inner: str) -> None:
    """Writes a member of a digraph family."""
    try:
        g: Digraph = __generate(family, n, k, p, q, inner)
    except DigraphError as e:
        raise click.BadParameter(str(e))
    click.echo(format_digraph(g), nl=False)


def __generate(family: str, n: int | None, k: int | None, p: int | None,
               q: int | None, inner: str) -> Digraph:
    """Generates a member of a digraph family.

    :param family: The family name.
    :param n: The number of vertices.
    :param k: The parameter k.
    :param p: The size of the first part.
    :param q: The size of the second part.
    :param inner: The inner subdigraph of D_0.
    :return: The digraph.
    :raise click.UsageError: When a parameter is missing.
    :raise DigraphError: When a parameter is out of range.
    """
    if family == "t5":
        return t5()
    if family in {"kbipartite", "kbipartite-minus"}:
        if p is None and q is None and n is not None:
            p, q = n // 2, n - n // 2
        p = __require(p, "--p", family)
        q = __require(q, "--q", family)
        if family == "kbipartite":
            return complete_bipartite_digraph(p, q)
        return complete_bipartite_minus_arc(p, q)
    n = __require(n, "--n", family)
    if family == "kstar":
        return complete_digraph(n)
    if family == "cycle":
        return directed_cycle(n)
    if family == "d0":
        return d0(n, InnerSpec.parse(inner))
    k = __require(k, "--k", family)
    if family == "dnk":
        return bypass_pattern(n, k)
    return d1(n, k)


@cli.command("check")
@click.argument("stream", metavar="[INPUT]", type=click.File("r"),
                default="-")
@click.option("--cond", "conditions", multiple=True, required=True,
              help="A condition identifier, such as a_k:0 or meyniel.")
@click.option("--inclusive-triples", is_flag=True, default=False,
              help="Let z equal y in the condition A_k.")
def check_command(stream: TextIO, conditions: tuple[str, ...],
                  inclusive_triples: bool) -> None:
    """Checks a digraph against degree conditions."""
    g: Digraph = __read_digraph(stream)
    result: dict[str, Any] = {}
    for cond_id in conditions:
        try:
            result[cond_id] \
                = get_condition(cond_id, inclusive_triples).check(g).to_dict()
        except DigraphError as e:
            raise click.BadParameter(str(e), param_hint="--cond")
    __echo_json(result)


@cli.command("find")
@click.argument("structure", callback=__validate_structure)
@click.argument("stream", metavar="[INPUT]", type=click.File("r"),
                default="-")
@click.option("--explain", is_flag=True, default=False,
              help="Add the insertion steps that build the structure.")
def find_command(structure: str, stream: TextIO, explain: bool) -> None:
    """Finds a structure in a digraph: hc, prehc, bypass, goodcycle,
    dnk:K or cycle:M."""
    g: Digraph = __read_digraph(stream)
    try:
        result: dict[str, Any] = __find(g, structure, explain)
    except DigraphError as e:
        raise click.BadParameter(str(e), param_hint="STRUCTURE")
    __echo_json(result)


def __find(g: Digraph, structure: str, explain: bool) -> dict[str, Any]:
    """Finds a structure in a digraph.

    :param g: The digraph.
    :param structure: The structure name.
    :param explain: Whether to add the insertion steps.
    :return: The JSON document.
    :raise DigraphError: When the structure does not apply to the digraph.
    """
    m = STRUCTURE_RE.match(structure)
    result: dict[str, Any] = {"structure": structure}
    found: Any
    if structure == "bypass":
        found = find_hamiltonian_bypass(g)
        result["found"] = found is not None
        if found is not None:
            result.update(found.to_dict())
            if explain:
                construction = explain_bypass(g)
                result["explain"] = None if construction is None \
                    else construction.to_dict()
        return result
    if m[2] is not None:
        found = find_bypass_pattern(g, int(m[2]))
        result["found"] = found is not None
        if found is not None:
            result.update(found.to_dict())
        return result
    if structure == "hc":
        found = find_hamiltonian_cycle(g)
    elif structure == "prehc":
        found = find_pre_hamiltonian_cycle(g)
    elif structure == "goodcycle":
        found = find_good_cycle(g)
    else:
        found = find_cycle_of_length(g, int(m[3]))
    result["found"] = found is not None
    if found is not None:
        result["cycle"] = list(found)
        if structure == "hc" and explain:
            result["explain"] = explain_hamiltonian_cycle(g)
    return result


def __run_options(func):
    """Adds the scan options shared by the verify and explore commands.

    :param func: The command function.
    :return: The command function with the options.
    """
    options: list[Any] = [
        click.option("--n", "n", type=int, required=True,
                     help="The order."),
        click.option("--sample", type=int,
                     help="Scan this many seeded random digraphs instead of"
                          " all of them."),
        click.option("--seed", type=int, help="The random seed."),
        click.option("--dense", is_flag=True, default=False,
                     help="Sample arcs with probability 3/4 instead of"
                          " 1/2."),
        click.option("--workers", type=int,
                     help="The worker count, overriding HAMBYPASS_THREADS."),
        click.option("--long-running", is_flag=True, default=False,
                     help="Allow the exhaustive scan of order 6."),
        click.option("--inclusive-triples", is_flag=True, default=False,
                     help="Let z equal y in the condition A_k."),
        click.option("--golden", type=click.Path(dir_okay=False),
                     help="Guard the result with the golden values in this"
                          " SQLite file."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@cli.command("verify")
@click.argument("theorem", type=click.Choice(THEOREMS))
@click.option("--min-in-degree", type=int, default=3, show_default=True,
              help="The least minimum in-degree of thm16.")
@click.option("--cond", "cond_id", type=click.Choice(CLASSIC_CONDITIONS),
              help="The classic condition of the classic theorem.")
@__run_options
@click.pass_context
def verify_command(ctx: click.Context, theorem: str, min_in_degree: int,
                   cond_id: str | None, **options: Any) -> None:
    """Verifies a theorem on the digraphs of an order."""
    if theorem == "classic":
        if cond_id is None:
            raise click.UsageError("classic needs --cond.")
        theorem = f"classic:{cond_id}"
    elif cond_id is not None:
        raise click.UsageError(f"{theorem} takes no --cond.")
    __run(ctx, theorem, min_in_degree, **options)


@cli.command("explore")
@click.option("--cond", "cond_id", required=True,
              help="The condition identifier, such as thm13.")
@__run_options
@click.pass_context
def explore_command(ctx: click.Context, cond_id: str,
                    **options: Any) -> None:
    """Catalogues the strong digraphs without a Hamiltonian bypass that
    satisfy a condition."""
    __run(ctx, f"explore:{cond_id}", 3, **options)


def __run(ctx: click.Context, theorem: str, min_in_degree: int, n: int,
          sample: int | None, seed: int | None, dense: bool,
          workers: int | None, long_running: bool, inclusive_triples: bool,
          golden: str | None) -> None:
    """Runs a theorem check and writes its report.

    :param ctx: The console command context.
    :param theorem: The theorem identifier.
    :param min_in_degree: The least minimum in-degree of thm16.
    :param n: The order.
    :param sample: The number of samples, or None.
    :param seed: The random seed.
    :param dense: Whether to use the dense arc model.
    :param workers: The explicit worker count, or None.
    :param long_running: Whether the order-6 exhaustive scan is allowed.
    :param inclusive_triples: Whether the condition A_k lets z equal y.
    :param golden: The path of the golden-value store, or None.
    :return: None.
    :raise click.UsageError: When an option is invalid.
    """
    if dense and sample is None:
        raise click.UsageError("--dense needs --sample.")
    try:
        count: int = resolve_workers(workers)
    except ValueError as e:
        raise click.UsageError(str(e))
    try:
        report: TheoremReport = run_check(
            get_theorem(theorem, min_in_degree), n, sample=sample, seed=seed,
            model=SampleModel.DENSE if dense else SampleModel.UNIFORM,
            long_running=long_running, inclusive=inclusive_triples,
            workers=count)
    except DigraphError as e:
        raise click.UsageError(str(e))
    __echo_json(report.to_dict())
    if golden is not None:
        store: GoldenStore = GoldenStore(golden)
        try:
            store.guard(report)
        except GoldenMismatchError as e:
            click.echo(str(e), err=True)
            ctx.exit(1)
        finally:
            store.close()
    if report.verdict is Verdict.COUNTEREXAMPLE:
        ctx.exit(1)
