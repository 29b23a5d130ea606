"""Exact data model: entitlements, valuations over indivisible items, allocations.

All numeric data is held as ``fractions.Fraction``, so every derived quantity
(share values, prices, welfare comparisons) is exact. Floats are rejected at
the boundary: callers must pass ints, Fractions or strings such as ``"0.46"``
or ``"46/100"``, which parse to exact decimal / ratio values.

Everything here is immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]

# Explicit Table valuations store all 2^m subset values.
TABLE_MAX_ITEMS = 20
# Default cap on n^m when enumerating complete allocations.
ENUMERATION_BOUND = 10_000_000


class StructuralError(ValueError):
    """Malformed data: inconsistent lengths, bad indices, broken invariants."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed its configured enumeration bound."""

    def __init__(self, message: str, *, required: int | None = None, bound: int | None = None):
        if required is not None and bound is not None:
            message = f"{message} (required {required}, bound {bound})"
        super().__init__(message)
        self.required = required
        self.bound = bound


def rat(x: RationalLike) -> Fraction:
    """Coerce to an exact Fraction. Floats are refused: '0.46' means 46/100."""
    if isinstance(x, float):
        raise StructuralError(f"refusing float {x!r}; pass a string or Fraction for exact input")
    return Fraction(x)


# ---------------------------------------------------------------------------
# Entitlements


@dataclass(frozen=True)
class Entitlements:
    """A vector of strictly positive entitlement fractions summing to one."""

    b: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.b) < 2:
            raise StructuralError("need at least two agents")
        for x in self.b:
            if not (0 < x < 1):
                raise StructuralError(f"entitlement {x} outside (0, 1)")
        if sum(self.b) != 1:
            raise StructuralError(f"entitlements sum to {sum(self.b)}, not 1")

    @classmethod
    def of(cls, *values: RationalLike) -> "Entitlements":
        return cls(tuple(rat(v) for v in values))

    def __len__(self) -> int:
        return len(self.b)

    def __getitem__(self, i: int) -> Fraction:
        return self.b[i]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.b)


def i_improves(b: Entitlements, b_prime: Entitlements, i: int) -> bool:
    """True iff b_i > b'_i while no other agent's entitlement rises."""
    if len(b) != len(b_prime):
        raise StructuralError("entitlement vectors differ in length")
    if not 0 <= i < len(b):
        raise StructuralError(f"agent index {i} out of range")
    if b[i] <= b_prime[i]:
        return False
    return all(b[j] <= b_prime[j] for j in range(len(b)) if j != i)


# ---------------------------------------------------------------------------
# Bundles

Bundle = frozenset  # of item indices


def bundle(*items: int) -> Bundle:
    return frozenset(items)


def bundle_mask(s: Iterable[int]) -> int:
    m = 0
    for e in s:
        m |= 1 << e
    return m


def mask_bundle(mask: int) -> Bundle:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


def all_bundles(num_items: int) -> Iterator[Bundle]:
    """All 2^m subsets, in mask order (deterministic)."""
    for mask in range(1 << num_items):
        yield mask_bundle(mask)


def _check_bundle(num_items: int, s: Bundle) -> None:
    for e in s:
        if not (isinstance(e, int) and 0 <= e < num_items):
            raise StructuralError(f"item index {e} out of range 0..{num_items - 1}")


# ---------------------------------------------------------------------------
# Valuations over indivisible items


@dataclass(frozen=True)
class AdditiveValuation:
    item_values: tuple[Fraction, ...]

    def __post_init__(self):
        for v in self.item_values:
            if v < 0:
                raise StructuralError("item values must be nonnegative")
        if sum(self.item_values) <= 0:
            raise StructuralError("grand bundle must have positive value")

    @classmethod
    def of(cls, *values: RationalLike) -> "AdditiveValuation":
        return cls(tuple(rat(v) for v in values))

    @property
    def num_items(self) -> int:
        return len(self.item_values)

    def value(self, s: Bundle) -> Fraction:
        _check_bundle(self.num_items, s)
        return sum((self.item_values[e] for e in s), Fraction(0))

    def scale(self, c: Fraction) -> "AdditiveValuation":
        return AdditiveValuation(tuple(v * c for v in self.item_values))


@dataclass(frozen=True)
class BudgetAdditiveValuation:
    """Additive values clamped at a budget: v(S) = min(budget, sum of values)."""

    item_values: tuple[Fraction, ...]
    budget: Fraction

    def __post_init__(self):
        for v in self.item_values:
            if v < 0:
                raise StructuralError("item values must be nonnegative")
        if self.budget <= 0:
            raise StructuralError("budget must be positive")
        if min(self.budget, sum(self.item_values)) <= 0:
            raise StructuralError("grand bundle must have positive value")

    @classmethod
    def of(cls, budget: RationalLike, *values: RationalLike) -> "BudgetAdditiveValuation":
        return cls(tuple(rat(v) for v in values), rat(budget))

    @property
    def num_items(self) -> int:
        return len(self.item_values)

    def value(self, s: Bundle) -> Fraction:
        _check_bundle(self.num_items, s)
        return min(self.budget, sum((self.item_values[e] for e in s), Fraction(0)))

    def scale(self, c: Fraction) -> "BudgetAdditiveValuation":
        return BudgetAdditiveValuation(tuple(v * c for v in self.item_values), self.budget * c)


@dataclass(frozen=True)
class TableValuation:
    """Explicit value for every subset, stored by bitmask.

    Construction validates normalization (empty set worth 0), monotonicity
    under adding any single item, and positivity of the grand bundle.
    """

    num_items: int
    by_mask: tuple[Fraction, ...]

    def __post_init__(self):
        m = self.num_items
        if m > TABLE_MAX_ITEMS:
            raise ResourceLimitError("table valuation too large", required=m, bound=TABLE_MAX_ITEMS)
        if len(self.by_mask) != 1 << m:
            raise StructuralError(f"need {1 << m} subset values, got {len(self.by_mask)}")
        if self.by_mask[0] != 0:
            raise StructuralError("empty bundle must have value 0")
        full = (1 << m) - 1
        if self.by_mask[full] <= 0:
            raise StructuralError("grand bundle must have positive value")
        for mask in range(1 << m):
            for e in range(m):
                if not mask & (1 << e) and self.by_mask[mask] > self.by_mask[mask | (1 << e)]:
                    raise StructuralError("subset values are not monotone")

    @classmethod
    def from_map(cls, num_items: int, values: dict[Bundle, RationalLike]) -> "TableValuation":
        by_mask: list[Fraction | None] = [None] * (1 << num_items)
        for s, v in values.items():
            _check_bundle(num_items, frozenset(s))
            by_mask[bundle_mask(s)] = rat(v)
        for mask, v in enumerate(by_mask):
            if v is None:
                raise StructuralError(f"missing table entry for subset {sorted(mask_bundle(mask))}")
        return cls(num_items, tuple(by_mask))  # type: ignore[arg-type]

    def value(self, s: Bundle) -> Fraction:
        _check_bundle(self.num_items, s)
        return self.by_mask[bundle_mask(s)]

    def scale(self, c: Fraction) -> "TableValuation":
        return TableValuation(self.num_items, tuple(v * c for v in self.by_mask))


IndivisibleValuation = Union[AdditiveValuation, BudgetAdditiveValuation, TableValuation]


def valuation_value(v: IndivisibleValuation, s: Bundle) -> Fraction:
    return v.value(s)


def scale_valuation(v: IndivisibleValuation, c: RationalLike) -> IndivisibleValuation:
    c = rat(c)
    if c <= 0:
        raise ValueError(f"scale factor must be positive, got {c}")
    return v.scale(c)


def group_coverage_valuation(num_groups: int, group_size: int) -> TableValuation:
    """Value of a subset = number of item groups it intersects.

    Items 0..g*s-1 are split into ``num_groups`` consecutive groups of
    ``group_size``. The result is submodular and far below additive: a whole
    group is worth 1 while one item per group is worth ``num_groups``.
    """
    m = num_groups * group_size
    group_masks = [
        bundle_mask(range(g * group_size, (g + 1) * group_size)) for g in range(num_groups)
    ]
    by_mask = tuple(
        Fraction(sum(1 for gm in group_masks if mask & gm)) for mask in range(1 << m)
    )
    return TableValuation(m, by_mask)


# ---------------------------------------------------------------------------
# Allocations and instances


@dataclass(frozen=True)
class IndivisibleAllocation:
    """Per-agent bundles, pairwise disjoint. ``complete`` means all items used."""

    bundles: tuple[Bundle, ...]
    num_items: int

    def __post_init__(self):
        seen = 0
        for s in self.bundles:
            _check_bundle(self.num_items, s)
            mask = bundle_mask(s)
            if seen & mask:
                raise StructuralError("bundles are not pairwise disjoint")
            seen |= mask

    @classmethod
    def of(cls, num_items: int, *bundles: Iterable[int]) -> "IndivisibleAllocation":
        return cls(tuple(frozenset(s) for s in bundles), num_items)

    @property
    def n(self) -> int:
        return len(self.bundles)

    @property
    def complete(self) -> bool:
        covered = 0
        for s in self.bundles:
            covered |= bundle_mask(s)
        return covered == (1 << self.num_items) - 1

    def swap(self, i: int, j: int) -> "IndivisibleAllocation":
        lst = list(self.bundles)
        lst[i], lst[j] = lst[j], lst[i]
        return IndivisibleAllocation(tuple(lst), self.num_items)


@dataclass(frozen=True)
class IndivisibleInstance:
    """Agents with entitlements and valuations over m indivisible items."""

    valuations: tuple[IndivisibleValuation, ...]
    entitlements: Entitlements

    def __post_init__(self):
        if len(self.valuations) != len(self.entitlements):
            raise StructuralError("one valuation per agent required")
        if len({v.num_items for v in self.valuations}) != 1:
            raise StructuralError("valuations disagree on the number of items")

    @property
    def n(self) -> int:
        return len(self.valuations)

    @property
    def num_items(self) -> int:
        return self.valuations[0].num_items

    def value(self, agent: int, s: Bundle) -> Fraction:
        return self.valuations[agent].value(s)

    def profile(self, allocation: IndivisibleAllocation) -> tuple[Fraction, ...]:
        """Own-bundle values (v_1(A_1), ..., v_n(A_n))."""
        return tuple(self.value(i, allocation.bundles[i]) for i in range(self.n))

    def with_entitlements(self, ent: Entitlements) -> "IndivisibleInstance":
        return IndivisibleInstance(self.valuations, ent)

    def scale_agent(self, agent: int, c: RationalLike) -> "IndivisibleInstance":
        vs = list(self.valuations)
        vs[agent] = scale_valuation(vs[agent], c)
        return IndivisibleInstance(tuple(vs), self.entitlements)
