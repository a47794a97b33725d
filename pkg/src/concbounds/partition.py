"""Bipartite cuts and proper subsystem subsets of an N-party system.

Both enumerations walk bitmasks in ascending order, bit ``i`` standing for
subsystem ``i``, so their output order is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_PARTIES = 16


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Cut:
    """An unordered bipartition in canonical form (subsystem 0 on side A)."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    n: int

    def __post_init__(self):
        a, b = tuple(self.side_a), tuple(self.side_b)
        object.__setattr__(self, "side_a", a)
        object.__setattr__(self, "side_b", b)
        if not a or not b:
            raise PartitionError("both sides of a cut must be nonempty")
        if list(a) != sorted(set(a)) or list(b) != sorted(set(b)):
            raise PartitionError("cut sides must be strictly increasing")
        if set(a) & set(b) or set(a) | set(b) != set(range(self.n)):
            raise PartitionError(f"{a} | {b} is not a bipartition of {self.n} subsystems")
        if a[0] != 0:
            raise PartitionError("canonical cut must keep subsystem 0 on side A")

    @classmethod
    def from_side(cls, side, n: int) -> "Cut":
        """Build the canonical cut containing ``side`` as one of its halves."""
        side = sorted(set(side))
        rest = [i for i in range(n) if i not in side]
        if 0 in side:
            return cls(tuple(side), tuple(rest), n)
        return cls(tuple(rest), tuple(side), n)

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.side_a)

    def __str__(self) -> str:
        return "{%s}|{%s}" % (",".join(map(str, self.side_a)), ",".join(map(str, self.side_b)))


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise PartitionError(f"need at least 2 subsystems, got {n!r}")
    if n > MAX_PARTIES:
        raise PartitionError(f"at most {MAX_PARTIES} subsystems supported, got {n}")


def _members(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if mask >> i & 1)


def enumerate_cuts(n: int) -> list[Cut]:
    """All ``2**(n-1) - 1`` canonical bipartite cuts of ``n`` subsystems."""
    _check_n(n)
    full = (1 << n) - 1
    return [
        Cut(_members(mask, n), _members(full ^ mask, n), n)
        for mask in range(1, full, 2)  # odd masks contain subsystem 0
    ]


def enumerate_subsets(n: int) -> list[tuple[int, ...]]:
    """All ``2**n - 2`` proper nonempty subsets of ``range(n)``."""
    _check_n(n)
    return [_members(mask, n) for mask in range(1, (1 << n) - 1)]
