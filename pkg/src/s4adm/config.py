"""Resource caps shared by the decision procedures."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .sdecomp import DEFAULT_STEP_CAP
from .supp import DEFAULT_SUBSET_CAP
from .tableau import DEFAULT_NODE_CAP


@dataclass(frozen=True)
class Limits:
    node_cap: int = DEFAULT_NODE_CAP
    step_cap: int = DEFAULT_STEP_CAP
    subset_cap: int = DEFAULT_SUBSET_CAP

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
