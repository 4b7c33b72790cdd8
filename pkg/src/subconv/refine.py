"""Running the refinement process on finitely supported data.

Sequences on ``Z`` are modelled as a finite window of exact values and
zeros everywhere else.  Level-``k`` data ``f^k`` lives on the dyadic grid:
the value at index ``i`` is attached to the parameter ``t = i / 2**k``.

Each stored value also carries an ``interior`` flag, true when none of the
inputs that produced it came from the implicit zero extension.  Flags are
bookkeeping only; every operation uses the whole finite sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .analyzer import ConvergenceVerdict
from .errors import PreconditionViolated
from .laurent import LaurentPolynomial, RationalLike, to_rational
from .scheme import Scheme, check_necessary_conditions


@dataclass(frozen=True)
class GridSequence:
    level: int
    offset: int
    values: tuple[Fraction, ...]
    interior: Optional[tuple[bool, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        vals = tuple(to_rational(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        flags = self.interior
        if flags is None:
            flags = (True,) * len(vals)
        elif len(flags) != len(vals):
            raise ValueError("interior flags must match the number of values")
        object.__setattr__(self, "interior", tuple(bool(b) for b in flags))
        if self.level < 0:
            raise ValueError("level must be non-negative")

    @classmethod
    def of(cls, values: Iterable[RationalLike], offset: int = 0, level: int = 0) -> "GridSequence":
        return cls(level, offset, tuple(values))

    @classmethod
    def delta_sequence(cls, level: int = 0) -> "GridSequence":
        """The sequence that is 1 at index 0 and 0 elsewhere."""
        return cls(level, 0, (Fraction(1),))

    def __len__(self) -> int:
        return len(self.values)

    @property
    def last(self) -> int:
        return self.offset + len(self.values) - 1

    def __getitem__(self, i: int) -> Fraction:
        """Value at absolute index ``i``, zero outside the stored window."""
        j = i - self.offset
        if 0 <= j < len(self.values):
            return self.values[j]
        return Fraction(0)

    def parameter(self, i: int) -> Fraction:
        return Fraction(i, 2 ** self.level)

    def shift(self, n: int) -> "GridSequence":
        return GridSequence(self.level, self.offset + n, self.values, self.interior)

    def sup_norm(self) -> Fraction:
        if not self.values:
            return Fraction(0)
        ints, d = _integer_numerators(self.values)
        return Fraction(max(abs(x) for x in ints), d)

    def interior_window(self) -> Optional[tuple[int, int]]:
        idx = [self.offset + j for j, b in enumerate(self.interior) if b]
        return (idx[0], idx[-1]) if idx else None


def _as_symbol(s: Union[Scheme, LaurentPolynomial]) -> LaurentPolynomial:
    return s.symbol if isinstance(s, Scheme) else s


def _common_denominator(xs: Sequence[Fraction]) -> int:
    return lcm(1, *{x.denominator for x in xs})


def _integer_numerators(xs: Sequence[Fraction]) -> tuple[list[int], int]:
    d = _common_denominator(xs)
    return [x.numerator * (d // x.denominator) for x in xs], d


def apply_stride(symbol: LaurentPolynomial, f: GridSequence, stride: int,
                 levels: int = 1) -> GridSequence:
    """``(T f)_i = sum_j p_{i - stride*j} f_j`` for the symbol ``p``.

    With ``stride == 2`` this is one subdivision step; with
    ``stride == 2**L`` and ``p = q^L`` it is the ``L``-fold iterate.
    """
    n, m = len(f.values), len(symbol.coefficients)
    level = f.level + levels
    if n == 0 or m == 0:
        return GridSequence(level, symbol.lowest_degree + stride * f.offset, ())
    # Integer convolution over a common denominator; Fraction adds are slow.
    P, dp = _integer_numerators(symbol.coefficients)
    F, df = _integer_numerators(f.values)
    out = [0] * (m + stride * (n - 1))
    for j, x in enumerate(F):
        if x:
            base = stride * j
            for k, c in enumerate(P):
                out[base + k] += c * x
    denom = dp * df
    values = tuple(Fraction(x, denom) for x in out)

    interior = []
    for r in range(len(out)):
        jmin = -((m - 1 - r) // stride)  # ceil((r - m + 1) / stride)
        jmax = r // stride
        interior.append(jmin >= 0 and jmax <= n - 1
                        and all(f.interior[jmin:jmax + 1]))
    return GridSequence(level, symbol.lowest_degree + stride * f.offset, values, tuple(interior))


def apply(s: Union[Scheme, LaurentPolynomial], f: GridSequence) -> GridSequence:
    """One refinement step ``(S_a f)_i = sum_j a_{i-2j} f_j``.

    ``s`` may be a :class:`Scheme` or a bare symbol.  The output has
    ``len(mask) + 2*(len(f) - 1)`` entries starting at
    ``mask.offset + 2*f.offset`` and sits one level finer.
    """
    return apply_stride(_as_symbol(s), f, 2)


def refine_to_level(s: Union[Scheme, LaurentPolynomial], f0: GridSequence, k: int) -> GridSequence:
    if k < 0:
        raise ValueError("k must be non-negative")
    f = f0
    for _ in range(k):
        f = apply(s, f)
    return f


def delta(f: GridSequence) -> GridSequence:
    """Forward differences ``f_{i+1} - f_i`` of the zero-extended sequence.

    The result starts one index before ``f`` and has one more entry,
    including the two boundary differences into the zero region.
    """
    vals = f.values
    if not vals:
        return GridSequence(f.level, f.offset, ())
    ints, d = _integer_numerators(vals)
    padded = [0] + ints + [0]
    diffs = tuple(Fraction(padded[i + 1] - padded[i], d) for i in range(len(vals) + 1))
    flags = (False,) + tuple(a and b for a, b in zip(f.interior, f.interior[1:])) + (False,)
    return GridSequence(f.level, f.offset - 1, diffs, flags)


@dataclass(frozen=True)
class TraceLevel:
    k: int
    delta_norm: Fraction
    ratio: Optional[Fraction]
    interior_window: Optional[tuple[int, int]]


@dataclass(frozen=True)
class BoundCheck:
    k: int
    delta_norm: Fraction
    bound: Fraction

    @property
    def ok(self) -> bool:
        return self.delta_norm <= self.bound


@dataclass(frozen=True)
class ContractionTrace:
    levels: tuple[TraceLevel, ...]
    bound_checks: Optional[tuple[BoundCheck, ...]] = None
    mu: Optional[Fraction] = None
    L: Optional[int] = None

    @property
    def ratios(self) -> list[Optional[Fraction]]:
        return [lv.ratio for lv in self.levels[1:]]

    @property
    def bound_satisfied(self) -> Optional[bool]:
        if self.bound_checks is None:
            return None
        return all(b.ok for b in self.bound_checks)


def contraction_trace(s: Scheme, f0: GridSequence, k_max: int,
                      verdict: Optional[ConvergenceVerdict] = None) -> ContractionTrace:
    """Exact ``||delta f^k||`` for ``k = 0..k_max`` and their successive ratios.

    If a convergent ``verdict`` is given, each level is also checked
    against ``mu**(k // L) * max(||delta f^l|| for l < L)``.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    certified = verdict is not None and verdict.convergent
    depth = max(k_max, verdict.L - 1) if certified else k_max

    norms, windows = [], []
    f = f0
    for k in range(depth + 1):
        if k:
            f = apply(s, f)
        d = delta(f)
        norms.append(d.sup_norm())
        windows.append(d.interior_window())

    levels = []
    for k in range(k_max + 1):
        ratio = None
        if k and norms[k - 1] != 0:
            ratio = norms[k] / norms[k - 1]
        levels.append(TraceLevel(k, norms[k], ratio, windows[k]))

    if not certified:
        return ContractionTrace(tuple(levels))
    mu, L = verdict.mu, verdict.L
    head = max(norms[:L])
    checks = tuple(BoundCheck(k, norms[k], mu ** (k // L) * head) for k in range(k_max + 1))
    return ContractionTrace(tuple(levels), checks, mu, L)


def polyline(f: GridSequence, pad: int = 0, interior_only: bool = False
             ) -> list[tuple[Fraction, Fraction]]:
    """Vertices ``(i / 2**k, f_i)`` of the level-``k`` polygonal line.

    ``pad`` adds that many zero vertices from the extension on each side.
    """
    if not f.values:
        return []
    lo, hi = f.offset - pad, f.last + pad
    out = []
    for i in range(lo, hi + 1):
        j = i - f.offset
        if interior_only and not (0 <= j < len(f.values) and f.interior[j]):
            continue
        out.append((f.parameter(i), f[i]))
    return out


def basic_limit_samples(s: Scheme, k: int) -> GridSequence:
    """Level-``k`` approximation of the basic limit function (refined delta).

    For interpolatory schemes the values at coarser dyadic points are
    already exact and never change under further refinement.
    """
    nc = check_necessary_conditions(s)
    if not nc:
        raise PreconditionViolated("; ".join(nc.violations))
    return refine_to_level(s, GridSequence.delta_sequence(), k)


def refine_float(s: Scheme, f0: GridSequence, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Floating-point refinement for large exports, returning ``(t, values)``.

    Never used for verdicts or bound checks.
    """
    mask = np.array([float(c) for c in s.mask.coefficients])
    vals = np.array([float(v) for v in f0.values])
    offset = f0.offset
    for _ in range(k):
        if vals.size == 0:
            break
        up = np.zeros(2 * vals.size - 1)
        up[::2] = vals
        vals = np.convolve(up, mask)
        offset = s.mask.offset + 2 * offset
    level = f0.level + k
    t = (offset + np.arange(vals.size)) / 2.0 ** level
    return t, vals
