"""Exact arithmetic on finite sets of non-negative integers.

Sum sets A+B, integral multiples n.A, difference sets, and the partition
of A x B into equal-sum compatibility classes.  These are the primitives
every labeling verdict in this package reduces to, so everything here is
exact integer arithmetic on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass

# Results above this are refused rather than silently accepted; callers
# that scale labels (repairs, uniform constructions) rely on the error.
DEFAULT_ELEMENT_BOUND = 1 << 20


class ElementBoundError(ValueError):
    """An element or arithmetic result exceeds the configured bound."""


@dataclass(frozen=True, order=True, init=False)
class IntegerSet:
    """Non-empty finite set of non-negative integers, kept sorted ascending."""

    elements: tuple[int, ...]

    def __init__(self, elements, bound: int = DEFAULT_ELEMENT_BOUND):
        elems = tuple(sorted(set(elements)))
        if not elems:
            raise ValueError("label sets must be non-empty")
        if not all(isinstance(x, int) for x in elems):
            raise TypeError("elements must be integers")
        if elems[0] < 0:
            raise ValueError(f"negative element {elems[0]} not allowed")
        if elems[-1] > bound:
            raise ElementBoundError(f"element {elems[-1]} exceeds bound {bound}")
        object.__setattr__(self, "elements", elems)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __str__(self) -> str:
        return "{%s}" % ",".join(str(x) for x in self.elements)

    @property
    def max_element(self) -> int:
        return self.elements[-1]

    def to_list(self) -> list[int]:
        return list(self.elements)


def iset(*elements: int, bound: int = DEFAULT_ELEMENT_BOUND) -> IntegerSet:
    """Shorthand constructor: iset(1, 2) == IntegerSet((1, 2))."""
    return IntegerSet(elements, bound=bound)


def sumset(a: IntegerSet, b: IntegerSet, bound: int = DEFAULT_ELEMENT_BOUND) -> IntegerSet:
    """Return {x + y : x in a, y in b}."""
    sums = set()
    for x in a.elements:
        for y in b.elements:
            s = x + y
            if s > bound:
                raise ElementBoundError(
                    f"sum {x}+{y}={s} of pair ({x},{y}) exceeds bound {bound}"
                )
            sums.add(s)
    return IntegerSet(sums, bound=bound)


def integral_multiple(n: int, a: IntegerSet, bound: int = DEFAULT_ELEMENT_BOUND) -> IntegerSet:
    """Return n.a = {n * x : x in a} for a positive integer n.

    n = 0 would collapse every set to {0}, so it is rejected.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"multiplier must be a positive integer, got {n!r}")
    out = []
    for x in a.elements:
        s = n * x
        if s > bound:
            raise ElementBoundError(f"multiple {n}*{x}={s} exceeds bound {bound}")
        out.append(s)
    return IntegerSet(out, bound=bound)


def difference_set(a: IntegerSet) -> frozenset[int]:
    """Positive differences |x - y| over distinct x, y in a.

    Empty exactly when a is a singleton.
    """
    elems = a.elements
    return frozenset(
        elems[j] - elems[i] for i in range(len(elems)) for j in range(i + 1, len(elems))
    )


@dataclass(frozen=True)
class CompatibilityTable:
    """Partition of a.elements x b.elements into equal-sum classes.

    classes holds (sum, ordered pairs) entries for realized sums only,
    ascending by sum; pairs within a class are lexicographic.
    """

    first: IntegerSet
    second: IntegerSet
    classes: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]
    index: int
    neglecting_number: int
    max_class_size: int
    saturated_sums: tuple[int, ...]

    def as_dict(self) -> dict[int, tuple[tuple[int, int], ...]]:
        return dict(self.classes)

    def class_pairs(self, k: int) -> tuple[tuple[int, int], ...]:
        for s, pairs in self.classes:
            if s == k:
                return pairs
        return ()


def compatibility_table(a: IntegerSet, b: IntegerSet) -> CompatibilityTable:
    """Group the ordered pairs of a x b by their sum."""
    grouped: dict[int, list[tuple[int, int]]] = {}
    for x in a.elements:
        for y in b.elements:
            grouped.setdefault(x + y, []).append((x, y))
    classes = tuple((s, tuple(grouped[s])) for s in sorted(grouped))
    index = len(classes)
    total = len(a) * len(b)
    saturation = min(len(a), len(b))
    return CompatibilityTable(
        first=a,
        second=b,
        classes=classes,
        index=index,
        neglecting_number=total - index,
        max_class_size=max(len(p) for _, p in classes),
        saturated_sums=tuple(s for s, p in classes if len(p) == saturation),
    )
