"""
Permutation Model

Permutations of {0..n-1} stored as image tuples, acting on the right:
the image of x under compose(g, h) is h(g(x)).
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from core.errors import InvalidArgumentError


@dataclass(frozen=True)
class Permutation:
    """A permutation given by its image tuple."""

    images: Tuple[int, ...]

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "Permutation":
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidArgumentError(f"not a permutation of 0..{len(images) - 1}: {images}")
        return cls(images)

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles on 0..n-1."""
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for i, x in enumerate(cycle):
                if not 0 <= x < n or x in seen:
                    raise InvalidArgumentError(f"bad cycle {tuple(cycle)} for degree {n}")
                seen.add(x)
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def identity_of(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise InvalidArgumentError("permutations of different degree")
        img = other.images
        return Permutation(tuple(img[x] for x in self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def identity(self) -> "Permutation":
        return Permutation.identity_of(self.degree)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def key(self) -> Tuple[int, ...]:
        return self.images

    def fixed_points(self) -> List[int]:
        return [i for i, x in enumerate(self.images) if x == i]

    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            result.append(tuple(cycle))
        return result

    def on_tuple(self, points: Sequence[int]) -> Tuple[int, ...]:
        img = self.images
        return tuple(img[x] for x in points)

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return f"Permutation(id, n={self.degree})"
        return "Permutation(" + "".join("(" + ",".join(map(str, c)) + ")" for c in cycles) + f", n={self.degree})"
