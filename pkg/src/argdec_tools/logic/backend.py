"""Entailment backends

Two independent deciders for consistency and entailment, exchangeable
through :class:`Backend`:

* :class:`TruthTableBackend` compiles each formula to the bitset of its
  models over a fixed vocabulary; consistency is a non-empty intersection.
* :class:`DPLLBackend` Tseitin-encodes the query and runs DPLL.

Both answer the bulk query :meth:`Backend.support_table` on which every
subset enumeration of the engine is built.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Iterable, Sequence
from functools import lru_cache

from argdec_tools.errors import BackendLimit, EnumerationLimit
from argdec_tools.logic.dpll import satisfiable
from argdec_tools.logic.formula import (
    Formula,
    atoms_of,
    negate,
)
from argdec_tools.logic.table import TruthTable
from argdec_tools.utils._config import EngineConfig, resolve
from argdec_tools.utils.constants import BACKEND_DPLL, BACKEND_TRUTH_TABLE

logger = logging.getLogger(__name__)

INCONSISTENT = -1  # support_table marker for an inconsistent subset


def subset_members(subset: int) -> Iterable[int]:
    while subset:
        low = subset & -subset
        yield low.bit_length() - 1
        subset ^= low


class Backend(ABC):
    """Consistency and entailment over a fixed vocabulary."""

    name = "abstract"

    @abstractmethod
    def is_consistent(self, phis: Iterable[Formula]) -> bool:
        """Whether some interpretation satisfies every formula."""

    def entails(self, phis: Iterable[Formula], goal: Formula) -> bool:
        """Whether ``phis`` entail ``goal`` (``phis`` plus ``~goal`` is inconsistent)."""
        return not self.is_consistent([*phis, negate(goal)])

    def entails_all(self, phis: Iterable[Formula], goals: Iterable[Formula]) -> bool:
        premises = list(phis)
        return all(self.entails(premises, goal) for goal in goals)

    def equivalent(self, phi: Formula, psi: Formula) -> bool:
        return self.entails([phi], psi) and self.entails([psi], phi)

    def support_table(
        self,
        items: Sequence[Formula],
        context: Sequence[Formula] = (),
        targets: Sequence[Formula] = (),
        limit: int | None = None,
    ) -> list[int]:
        """Entailed targets for every subset of ``items``.

        Entry ``s`` describes the subset whose members are the items at the set
        bits of ``s``: :data:`INCONSISTENT` when the subset plus ``context`` is
        inconsistent, otherwise the bitmask of ``targets`` it entails together
        with ``context``.

        Subsets are visited in increasing order, so every proper subset is
        known before its supersets; entailment is monotone, which lets
        supersets inherit what their subsets already entail.
        """
        _check_subset_limit(len(items), limit)
        table = [0] * (1 << len(items))
        for subset in range(len(table)):
            members = list(subset_members(subset))
            inherited = 0
            broken = False
            for i in members:
                below = table[subset ^ (1 << i)]
                if below == INCONSISTENT:
                    broken = True
                    break
                inherited |= below
            if broken:
                table[subset] = INCONSISTENT
                continue
            premises = [*context, *(items[i] for i in members)]
            if not self.is_consistent(premises):
                table[subset] = INCONSISTENT
                continue
            entailed = inherited
            for t, target in enumerate(targets):
                if not entailed >> t & 1 and self.entails(premises, target):
                    entailed |= 1 << t
            table[subset] = entailed
        return table


class TruthTableBackend(Backend):
    """Exhaustive model bitsets over a declared vocabulary."""

    name = BACKEND_TRUTH_TABLE

    def __init__(self, vocabulary: Iterable[str]):
        self.table = TruthTable(vocabulary)
        self._bitsets: dict[Formula, int] = {}

    def bitset(self, phi: Formula) -> int:
        found = self._bitsets.get(phi)
        if found is None:
            found = self.table.bitset(phi)
            self._bitsets[phi] = found
        return found

    def models_bitset(self, phis: Iterable[Formula]) -> int:
        result = self.table.full
        for phi in phis:
            result &= self.bitset(phi)
            if not result:
                break
        return result

    def is_consistent(self, phis: Iterable[Formula]) -> bool:
        return self.models_bitset(phis) != 0

    def entails(self, phis: Iterable[Formula], goal: Formula) -> bool:
        return self.models_bitset(phis) & ~self.bitset(goal) == 0

    def support_table(
        self,
        items: Sequence[Formula],
        context: Sequence[Formula] = (),
        targets: Sequence[Formula] = (),
        limit: int | None = None,
    ) -> list[int]:
        _check_subset_limit(len(items), limit)
        item_sets = [self.bitset(phi) for phi in items]
        counter_sets = [self.table.full & ~self.bitset(phi) for phi in targets]
        worlds = [0] * (1 << len(items))
        worlds[0] = self.models_bitset(context)
        table = [0] * len(worlds)
        for subset in range(len(worlds)):
            if subset:
                low = subset & -subset
                worlds[subset] = worlds[subset ^ low] & item_sets[low.bit_length() - 1]
            world = worlds[subset]
            if not world:
                table[subset] = INCONSISTENT
                continue
            entailed = 0
            for t, counter in enumerate(counter_sets):
                if not world & counter:
                    entailed |= 1 << t
            table[subset] = entailed
        return table


class DPLLBackend(Backend):
    """Tseitin encoding and DPLL search; no vocabulary bound."""

    name = BACKEND_DPLL

    def is_consistent(self, phis: Iterable[Formula]) -> bool:
        return satisfiable(phis)


def _check_subset_limit(count: int, limit: int | None):
    if limit is not None and count > limit:
        raise EnumerationLimit(
            f"{count} formulas exceed the subset enumeration bound of {limit}"
        )


@lru_cache(maxsize=64)
def _cached_backend(vocabulary: tuple[str, ...], config: EngineConfig) -> Backend:
    if config.backend == BACKEND_DPLL:
        return DPLLBackend()
    if len(vocabulary) <= config.truth_table_limit:
        return TruthTableBackend(vocabulary)
    if config.backend == BACKEND_TRUTH_TABLE:
        raise BackendLimit(
            f"{len(vocabulary)} atoms exceed the truth-table bound of "
            f"{config.truth_table_limit} and DPLL is disabled"
        )
    logger.debug("Vocabulary of %d atoms: using DPLL", len(vocabulary))
    return DPLLBackend()


def make_backend(
    vocabulary: Iterable[str], config: EngineConfig | None = None
) -> Backend:
    """Backend for queries over ``vocabulary`` under ``config``.

    ``auto`` uses truth tables while the vocabulary fits the truth-table bound
    and DPLL beyond it. Backends are cached per vocabulary and configuration.

    Raises:
        BackendLimit: If truth tables are forced and the vocabulary is too large.
    """
    return _cached_backend(tuple(sorted(set(vocabulary))), resolve(config))


def is_consistent(
    phis: Iterable[Formula], config: EngineConfig | None = None
) -> bool:
    """Whether some interpretation satisfies every formula of ``phis``."""
    phis = list(phis)
    return make_backend(atoms_of(phis), config).is_consistent(phis)


def entails(
    phis: Iterable[Formula], goal: Formula, config: EngineConfig | None = None
) -> bool:
    """Whether ``phis`` classically entail ``goal``."""
    phis = list(phis)
    return make_backend(atoms_of([*phis, goal]), config).entails(phis, goal)


def equivalent(phi: Formula, psi: Formula, config: EngineConfig | None = None) -> bool:
    """Whether ``phi`` and ``psi`` have the same models."""
    return make_backend(atoms_of([phi, psi]), config).equivalent(phi, psi)


def models(
    phis: Iterable[Formula],
    vocabulary: Iterable[str],
    config: EngineConfig | None = None,
) -> list[dict[str, bool]]:
    """Satisfying total interpretations over ``vocabulary`` in canonical order.

    Raises:
        BackendLimit: If the vocabulary exceeds the enumeration bound.
        KeyError: If a formula mentions an atom outside ``vocabulary``.
    """
    config = resolve(config)
    vocabulary = sorted(set(vocabulary))
    if len(vocabulary) > config.models_limit:
        raise BackendLimit(
            f"{len(vocabulary)} atoms exceed the enumeration bound of {config.models_limit}"
        )
    table = TruthTable(vocabulary)
    rows = table.satisfying(phis).nonzero()[0]
    return [table.interpretation(int(row)) for row in rows]
