"""Decision procedures for the modal logic S4: theoremhood, rule validity and
admissibility, and the decomposition of rejecting-substitution sets."""

from .formula import Formula, parse, to_text
from .tableau import ResourceLimitExceeded, is_theorem, proves

__all__ = ["Formula", "parse", "to_text", "ResourceLimitExceeded", "is_theorem", "proves"]
__version__ = "0.1.0"
