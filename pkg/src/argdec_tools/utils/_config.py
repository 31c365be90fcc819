"""Engine configuration shared by every evaluation route."""

from dataclasses import dataclass

from argdec_tools.utils.constants import (
    BACKEND_AUTO,
    BACKENDS,
    CONFLICT_LIMIT,
    MODELS_LIMIT,
    SUBSET_LIMIT,
    TRUTH_TABLE_LIMIT,
)


@dataclass(frozen=True)
class EngineConfig:
    """Bounds and backend selection.

    Args:
        backend: One of ``auto``, ``dpll`` or ``truth-table``.
        truth_table_limit: Largest vocabulary the truth-table backend accepts.
        models_limit: Largest vocabulary enumerated by ``models`` and the
            semantic evaluator.
        subset_limit: Largest knowledge base whose subsets are enumerated
            for arguments.
        conflict_limit: Largest formula set searched for minimal conflicts.
        strict_atoms: Reject undeclared atoms when parsing against a
            vocabulary.
    """

    backend: str = BACKEND_AUTO
    truth_table_limit: int = TRUTH_TABLE_LIMIT
    models_limit: int = MODELS_LIMIT
    subset_limit: int = SUBSET_LIMIT
    conflict_limit: int = CONFLICT_LIMIT
    strict_atoms: bool = True

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(
                f"Unknown backend {self.backend!r}; expected one of {', '.join(BACKENDS)}"
            )
        for name in ("truth_table_limit", "models_limit", "subset_limit", "conflict_limit"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


DEFAULT_CONFIG = EngineConfig()


def resolve(config: EngineConfig | None) -> EngineConfig:
    """Return ``config`` or the default configuration when it is None."""
    return DEFAULT_CONFIG if config is None else config
