"""Brill-Noether bookkeeping: rho numbers and expected-dimension reports.

Every locus family handled here is parametrized purely by the numbers
(g, k, r, d, a); the geometric objects behind them have no computational
representation.  rho is computed signed, never clamped: the limit-series
additivity chains need negative values.  Emptiness semantics live entirely
in DimReport and are encoded per theorem, never inferred from the sign of
a lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .errors import ParameterError

THEOREM_EXACT = "theorem_exact"
LOWER_BOUND_ONLY = "lower_bound_only"

EMPTY = "empty"
NONEMPTY = "nonempty"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class VanishingSequence:
    """Strictly increasing non-negative vanishing orders a_0 < ... < a_r."""

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ParameterError("vanishing sequence must be non-empty")
        if entries[0] < 0:
            raise ParameterError("vanishing orders must be non-negative")
        if any(y <= x for x, y in zip(entries, entries[1:])):
            raise ParameterError(f"vanishing orders must strictly increase: {entries}")

    @classmethod
    def of(cls, *entries: int) -> "VanishingSequence":
        return cls(tuple(entries))

    @property
    def r(self) -> int:
        return len(self.entries) - 1

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def __iter__(self) -> Iterable[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class DimReport:
    """Expected-dimension verdict for one locus.

    ``value`` may be negative.  ``exactness`` records whether the cited
    result pins the dimension or only bounds it from below; ``emptiness``
    is only ever ``empty``/``nonempty`` when the cited result proves it.
    """

    value: int
    exactness: str
    emptiness: str
    source: str


def rho(g: int, r: int, d: int) -> int:
    """Classical Brill-Noether number g - (r+1)(g-d+r), signed."""
    if g < 0 or r < 0 or d < 0:
        raise ParameterError("rho requires non-negative g, r, d")
    return g - (r + 1) * (g - d + r)


def rho_pointed(g: int, r: int, d: int, a: VanishingSequence) -> int:
    """rho adjusted by prescribed vanishing: rho(g,r,d) - sum(a_i - i)."""
    if len(a) != r + 1:
        raise ParameterError(
            f"sequence has {len(a)} entries, expected r+1 = {r + 1}"
        )
    if a[-1] > d:
        raise ParameterError(f"top vanishing order {a[-1]} exceeds degree {d}")
    return rho(g, r, d) - sum(ai - i for i, ai in enumerate(a))


def expected_dim_V(g: int, k: int, r: int) -> DimReport:
    """Prym-Brill-Noether locus of norm omega_C on a 2k-branch-point cover.

    The general lower bound g-1+k-k(r+1)-r(r+1)/2 is exact for k = 0 and
    k = 1; for larger k only the bound is known.
    """
    if g < 2 or k < 0 or r < 0:
        raise ParameterError("expected_dim_V requires g >= 2, k >= 0, r >= 0")
    value = g - 1 + k - k * (r + 1) - r * (r + 1) // 2
    if k == 0:
        source = "exact dimension g-1-r(r+1)/2 of the norm-omega locus (unramified)"
    elif k == 1:
        source = "exact dimension g-(r+1)(r+2)/2 of the norm-omega locus (2 branch points)"
    else:
        source = "lower bound g-1+k-k(r+1)-r(r+1)/2 on the norm-omega locus"
    if k in (0, 1):
        emptiness = EMPTY if value < 0 else NONEMPTY
        exactness = THEOREM_EXACT
    else:
        emptiness = UNKNOWN
        exactness = LOWER_BOUND_ONLY
    return DimReport(value, exactness, emptiness, source)


def expected_dim_V_eta(g: int, k: int, r: int) -> DimReport:
    """Twisted locus (norm omega_C x eta): exact dimension g+k-1-(r+1)(r+2)/2."""
    if k not in (0, 1, 2):
        raise ParameterError(f"twisted loci are supported for k in {{0,1,2}}, got {k}")
    if r < 0:
        raise ParameterError("rank must be non-negative")
    value = g + k - 1 - (r + 1) * (r + 2) // 2
    source = "exact dimension g+k-1-(r+1)(r+2)/2 of the twisted locus"
    if value < 0:
        emptiness = EMPTY
    elif k in (1, 2):
        emptiness = NONEMPTY
    else:
        # k = 0: the dimension is exact but non-emptiness is not established.
        emptiness = UNKNOWN
    return DimReport(value, THEOREM_EXACT, emptiness, source)


def expected_dim_V_eta_pointed(g: int, k: int, a: VanishingSequence) -> DimReport:
    """Twisted locus with prescribed vanishing a at a generic point."""
    if k not in (0, 1, 2):
        raise ParameterError(f"twisted loci are supported for k in {{0,1,2}}, got {k}")
    if a[-1] > 2 * g - 2 + k:
        raise ParameterError(
            f"top vanishing order {a[-1]} exceeds 2g-2+k = {2 * g - 2 + k}"
        )
    value = g + k - a.r - 2 - a.weight
    source = "exact dimension g+k-r-2-|a| of the pointed twisted locus"
    if value < 0:
        emptiness = EMPTY
    elif k in (1, 2):
        emptiness = NONEMPTY
    else:
        emptiness = UNKNOWN
    return DimReport(value, THEOREM_EXACT, emptiness, source)


def expected_dim_V_divisor(g: int, k: int, r: int, d: int) -> DimReport:
    """Norm-omega locus twisted down by a generic effective divisor of degree d."""
    if g < 2 or k < 0 or r < 0 or d < 0:
        raise ParameterError("invalid parameters for divisor-twisted locus")
    value = g - 1 + k - (d + k) * (r + 1) - r * (r + 1) // 2
    if k == 0:
        source = "exact dimension g-1-r(r+1)/2-d(r+1) of the divisor-twisted locus"
        # The exact statement is about components; emptiness is proved only
        # for negative expected dimension.
        emptiness = EMPTY if value < 0 else UNKNOWN
        return DimReport(value, THEOREM_EXACT, emptiness, source)
    source = "lower bound g-1+k-(d+k)(r+1)-r(r+1)/2 on the divisor-twisted locus"
    return DimReport(value, LOWER_BOUND_ONLY, UNKNOWN, source)


def expected_dim_V_eta_divisor(g: int, k: int, r: int, d: int) -> DimReport:
    """Twisted locus further twisted down by an effective divisor of degree d."""
    if k not in (0, 1, 2):
        raise ParameterError(f"twisted loci are supported for k in {{0,1,2}}, got {k}")
    if r < 0 or d < 0:
        raise ParameterError("rank and divisor degree must be non-negative")
    value = g - 1 + k - d * (r + 1) - (r + 1) * (r + 2) // 2
    source = "exact dimension g-1+k-(r+1)(r+2)/2-d(r+1) of the twisted divisor locus"
    emptiness = EMPTY if value < 0 else NONEMPTY
    return DimReport(value, THEOREM_EXACT, emptiness, source)
