"""Named spaces: the standard small examples and the golden examples."""

from typing import Iterable, List, Sequence

from etheta.space.finite_space import FiniteSpace, default_labels, validate_topology
from etheta.space.pointset import SetFamily


def from_labels(points: Sequence[str], opens: Iterable[Iterable[str]]) -> FiniteSpace:
    """Validated space from label lists; ∅ and the ground set are implied."""
    index = {label: i for i, label in enumerate(points)}
    masks = [0, (1 << len(points)) - 1]
    for member in opens:
        mask = 0
        for label in member:
            mask |= 1 << index[label]
        masks.append(mask)
    return validate_topology(points, SetFamily(len(points), masks))


def discrete(n: int, labels: Sequence[str] = ()) -> FiniteSpace:
    names: List[str] = list(labels) or default_labels(n)
    return FiniteSpace(names, SetFamily.power_set(n))


def indiscrete(n: int, labels: Sequence[str] = ()) -> FiniteSpace:
    names: List[str] = list(labels) or default_labels(n)
    return FiniteSpace(names, SetFamily(n, {0, (1 << n) - 1}))


def sierpinski() -> FiniteSpace:
    return from_labels(["0", "1"], [["0"]])


def point_space(label: str = "x") -> FiniteSpace:
    return discrete(1, [label])


def example2_space() -> FiniteSpace:
    """X = {1,2,3}, τ = {∅, X, {1}, {2}, {1,2}}."""
    return from_labels(["1", "2", "3"], [["1"], ["2"], ["1", "2"]])


def example4_space() -> FiniteSpace:
    """X = {a,b,c,d}, τ = {∅, X, {a}, {c}, {a,c}, {c,d}, {a,c,d}}."""
    return from_labels(
        ["a", "b", "c", "d"],
        [["a"], ["c"], ["a", "c"], ["c", "d"], ["a", "c", "d"]],
    )


def example5_space() -> FiniteSpace:
    """X = {a,b,c,d}, τ = {∅, X, {a}, {a,b}, {a,b,c}}."""
    return from_labels(
        ["a", "b", "c", "d"],
        [["a"], ["a", "b"], ["a", "b", "c"]],
    )
