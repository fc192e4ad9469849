"""Boolean answers that carry a witness."""
from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """A decided predicate plus an optional witness explaining the answer.

    Truthiness follows ``holds`` and unpacking yields ``(holds, witness)``.
    """

    holds: bool
    witness: Any = None

    def __bool__(self):
        return bool(self.holds)

    def __iter__(self):
        yield self.holds
        yield self.witness
