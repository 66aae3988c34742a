"""Arrays of perturbation intervals and their lexicographic order.

Edge ``e`` carries the interval ``[-lower[e], upper[e]]``. Both arrays hold
non-negative magnitudes, possibly ``inf``, so the zero perturbation is
always contained.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import INF, Edge
from .errors import DimensionMismatch, IndexOutOfRange


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, eq=False)
class IntervalArray:
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.array(self.lower, dtype=float) + 0.0  # drop signed zeros
        upper = np.array(self.upper, dtype=float) + 0.0
        if lower.shape != upper.shape or lower.ndim != 2:
            raise DimensionMismatch(f"bound arrays differ: {lower.shape} vs {upper.shape}")
        if np.isnan(lower).any() or np.isnan(upper).any():
            raise ValueError("interval bounds contain NaN")
        if (lower < 0).any() or (upper < 0).any():
            raise ValueError("interval bounds must be non-negative magnitudes")
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def unbounded(cls, shape) -> "IntervalArray":
        return cls(np.full(shape, INF), np.full(shape, INF))

    @property
    def shape(self) -> tuple[int, int]:
        return self.lower.shape

    def interval(self, edge) -> tuple[float, float]:
        i, j = edge
        return -float(self.lower[i, j]), float(self.upper[i, j])

    def spectrum(self) -> np.ndarray:
        """All ``2*n*m`` bound magnitudes, ascending, infinities last."""
        return np.sort(np.concatenate([self.lower.ravel(), self.upper.ravel()]))

    def transposed(self) -> "IntervalArray":
        return IntervalArray(self.lower.T, self.upper.T)

    def __eq__(self, other):
        if not isinstance(other, IntervalArray):
            return NotImplemented
        return (self.shape == other.shape
                and bool(np.array_equal(self.lower, other.lower))
                and bool(np.array_equal(self.upper, other.upper)))

    def __hash__(self):
        return hash((self.lower.tobytes(), self.upper.tobytes()))


def rho(L: IntervalArray, k: int) -> float:
    """k-th smallest bound magnitude, 1-based."""
    size = 2 * L.lower.size
    if not 1 <= k <= size:
        raise IndexOutOfRange(f"k={k} outside 1..{size}")
    return float(L.spectrum()[k - 1])


def lex_compare(A: IntervalArray, B: IntervalArray) -> Ordering:
    if A.shape != B.shape:
        raise DimensionMismatch(f"{A.shape} vs {B.shape}")
    sa, sb = A.spectrum(), B.spectrum()
    diff = np.flatnonzero(sa != sb)
    if diff.size == 0:
        return Ordering.EQUAL
    k = diff[0]
    return Ordering.GREATER if sa[k] > sb[k] else Ordering.LESS


def contains(L: IntervalArray, P) -> bool:
    P = np.asarray(P, dtype=float)
    if P.shape != L.shape:
        raise DimensionMismatch(f"perturbation {P.shape} vs intervals {L.shape}")
    return bool(((-L.lower <= P) & (P <= L.upper)).all())


def corner_perturbation(L: IntervalArray, flipped: Edge, clamp: float = 1e6,
                        mirror: bool = False) -> np.ndarray:
    """Every edge at its lower end except ``flipped`` at its upper end.

    ``mirror=True`` swaps the roles. Infinite ends are cut to ``clamp``.
    """
    if not (0 < clamp < INF):
        raise ValueError("clamp must be finite and positive")
    low = -np.minimum(L.lower, clamp)
    high = np.minimum(L.upper, clamp)
    P = np.array(high if mirror else low)
    i, j = flipped
    P[i, j] = low[i, j] if mirror else high[i, j]
    return P + 0.0


def sample_uniform(L: IntervalArray, rng: np.random.Generator, clamp: float = 1e6) -> np.ndarray:
    """A perturbation drawn uniformly from the (clamped) box."""
    low = -np.minimum(L.lower, clamp)
    high = np.minimum(L.upper, clamp)
    P = rng.uniform(low, high)
    # uniform() may round onto the open end; keep the sample inside
    return np.clip(P, low, high)
