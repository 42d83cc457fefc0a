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
"""The lazily evaluated facts about a scanned digraph, and the matching of
the exceptions against the known exceptional families.

"""
from functools import cache, cached_property

from hambypass.conditions import check_a_k, check_strong
from hambypass.digraph import Digraph
from hambypass.families import directed_cycle, \
    complete_bipartite_digraph, d0_inner_variants, d1_variants
from hambypass.iso import CanonicalForm, canonical_form, \
    is_isomorphic_to_t5, is_balanced_complete_bipartite, \
    is_balanced_complete_bipartite_minus_arc
from hambypass.search import find_hamiltonian_cycle, \
    find_pre_hamiltonian_cycle, find_hamiltonian_bypass, find_good_cycle


class VerificationRecord:
    """The facts about a digraph, each evaluated on first use."""

    def __init__(self, g: Digraph):
        """Constructs the record.

        :param g: The digraph.
        """
        self.digraph: Digraph = g
        """The digraph."""

    @cached_property
    def canonical(self) -> CanonicalForm:
        """Returns the canonical form.

        :return: The canonical form.
        """
        return canonical_form(self.digraph)

    @cached_property
    def strong(self) -> bool:
        """Returns whether the digraph is strong.

        :return: True if the digraph is strong, or False otherwise.
        """
        return check_strong(self.digraph).holds

    @cached_property
    def a0(self) -> bool:
        """Returns whether the digraph satisfies the condition A_0.

        :return: True if it satisfies A_0, or False otherwise.
        """
        return self.digraph.n >= 3 and check_a_k(self.digraph, 0).holds

    @cached_property
    def has_hc(self) -> bool:
        """Returns whether the digraph has a Hamiltonian cycle.

        :return: True if it has a Hamiltonian cycle, or False otherwise.
        """
        return find_hamiltonian_cycle(self.digraph) is not None

    @cached_property
    def has_pre_hc(self) -> bool:
        """Returns whether the digraph has a pre-Hamiltonian cycle.

        :return: True if it has a pre-Hamiltonian cycle, or False otherwise.
        """
        return self.digraph.n >= 3 \
            and find_pre_hamiltonian_cycle(self.digraph) is not None

    @cached_property
    def has_bypass(self) -> bool:
        """Returns whether the digraph has a Hamiltonian bypass.

        :return: True if it has a Hamiltonian bypass, or False otherwise.
        """
        return self.digraph.n >= 3 \
            and find_hamiltonian_bypass(self.digraph) is not None

    @cached_property
    def has_good_cycle(self) -> bool:
        """Returns whether the digraph has a good cycle.

        :return: True if it has a good cycle, or False otherwise.
        """
        return find_good_cycle(self.digraph) is not None

    @cached_property
    def iso_t5(self) -> bool:
        """Returns whether the digraph is isomorphic to T(5).

        :return: True if it is isomorphic to T(5), or False otherwise.
        """
        return is_isomorphic_to_t5(self.digraph)

    @cached_property
    def iso_balanced_bipartite(self) -> bool:
        """Returns whether the digraph is K*_{n/2,n/2}.

        :return: True if it is K*_{n/2,n/2}, or False otherwise.
        """
        return is_balanced_complete_bipartite(self.digraph)

    @cached_property
    def family(self) -> str | None:
        """Returns the exceptional family the digraph belongs to.

        :return: The family name, or None if it belongs to none.
        """
        return match_family(self.digraph, self.canonical)


@cache
def _family_forms(family: str, n: int) -> frozenset[CanonicalForm]:
    """Returns the canonical forms of the members of a family of an order.

    :param family: The family, "d0" or "d1".
    :param n: The order.
    :return: The canonical forms.
    """
    if family == "d1":
        if n < 4:
            return frozenset()
        return frozenset(canonical_form(x) for x in d1_variants(n))
    if n < 5 or n % 2 == 0:
        return frozenset()
    return frozenset(canonical_form(x) for x in d0_inner_variants(n))


def match_family(g: Digraph, form: CanonicalForm | None = None) -> str | None:
    """Returns the known exceptional family of a digraph.

    :param g: The digraph.
    :param form: Its canonical form, if already known.
    :return: "c3", "kstar12", "t5", "kbipartite", "kbipartite-minus",
        "d1", "d0", or None if it belongs to none of them.
    """
    if form is None:
        form = canonical_form(g)
    if g.n == 3 and form == canonical_form(directed_cycle(3)):
        return "c3"
    if g.n == 3 and form == canonical_form(complete_bipartite_digraph(1, 2)):
        return "kstar12"
    if is_isomorphic_to_t5(g):
        return "t5"
    if is_balanced_complete_bipartite(g):
        return "kbipartite"
    if is_balanced_complete_bipartite_minus_arc(g):
        return "kbipartite-minus"
    if form in _family_forms("d1", g.n):
        return "d1"
    if form in _family_forms("d0", g.n):
        return "d0"
    return None
