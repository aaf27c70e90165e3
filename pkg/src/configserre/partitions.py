"""Integer partitions, set partitions and the Stirling/Bell combinatorics.

Integer partitions are plain non-increasing tuples of positive ints; the empty
tuple is the partition of 0.  Set partitions are :class:`SetPartition` values
with blocks sorted by their minimum element.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .numbers import factorial

IntPartition = tuple


# -- integer partitions -------------------------------------------------------


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[IntPartition, ...]:
    """All partitions of n, in reverse lexicographic order ((n) first)."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, largest, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def multiplicities(lam: IntPartition) -> dict[int, int]:
    """The multiplicity vector alpha: part size j -> a_j."""
    return dict(Counter(lam))


def z_lambda(lam: IntPartition) -> int:
    """Size of the centralizer of a permutation of cycle type lam: prod j^a_j a_j!."""
    z = 1
    for j, a in Counter(lam).items():
        z *= j**a * factorial(a)
    return z


def class_size(lam: IntPartition) -> int:
    return factorial(sum(lam)) // z_lambda(lam)


def from_multiplicities(alpha: dict[int, int]) -> IntPartition:
    parts = []
    for j in sorted(alpha, reverse=True):
        parts += [j] * alpha[j]
    return tuple(parts)


def count_by_block_sizes(alpha: dict[int, int]) -> int:
    """Number p(alpha) of set partitions of |alpha| with a_j blocks of size j."""
    size = sum(j * a for j, a in alpha.items())
    denom = 1
    for j, a in alpha.items():
        denom *= factorial(j) ** a * factorial(a)
    return factorial(size) // denom


def sort_partition(parts) -> IntPartition:
    return tuple(sorted(parts, reverse=True))


# -- set partitions -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        canon = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", canon)
        seen = [x for b in canon for x in b]
        if any(len(b) == 0 for b in canon) or sorted(seen) != list(range(1, self.n + 1)):
            raise ValueError(f"{self.blocks} is not a set partition of 1..{self.n}")

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        """Build from a label per element (element i+1 gets labels[i])."""
        groups: dict = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).append(i + 1)
        return cls(len(labels), tuple(tuple(g) for g in groups.values()))

    def __len__(self):
        return len(self.blocks)

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise KeyError(i)

    def labels(self) -> tuple[int, ...]:
        lab = [0] * self.n
        for k, b in enumerate(self.blocks):
            for x in b:
                lab[x - 1] = k
        return tuple(lab)

    def shape(self) -> IntPartition:
        return sort_partition(len(b) for b in self.blocks)

    def act(self, sigma: Sequence[int]) -> "SetPartition":
        """Image under a permutation given in one-line notation on 1..n."""
        return SetPartition(self.n, tuple(tuple(sigma[x - 1] for x in b) for b in self.blocks))

    def __str__(self):
        return "{" + ",".join("".join(map(str, b)) if self.n < 10 else "-".join(map(str, b)) for b in self.blocks) + "}"


def _restricted_growth_strings(n: int, k: int) -> Iterator[list[int]]:
    if n == 0:
        if k == 0:
            yield []
        return
    a = [0] * n

    def rec(i, used):
        if n - i < k - used:
            return
        if i == n:
            if used == k:
                yield list(a)
            return
        for v in range(min(used + 1, k)):
            a[i] = v
            yield from rec(i + 1, max(used, v + 1))

    yield from rec(1, 1)


def set_partitions(n: int, k: int) -> list[SetPartition]:
    """All partitions of {1..n} into exactly k blocks, in restricted-growth order."""
    if k < 0 or k > n or (k == 0 and n > 0):
        return []
    return [SetPartition.from_labels(rgs) for rgs in _restricted_growth_strings(n, k)]


def all_set_partitions(n: int) -> list[SetPartition]:
    return [J for k in range(1, n + 1) for J in set_partitions(n, k)]


def refines(J: SetPartition, K: SetPartition) -> bool:
    """J < K in the refinement order: every block of J lies inside a block of K."""
    if J.n != K.n:
        raise ValueError(f"set partitions of different sets: {J.n} vs {K.n}")
    lab = K.labels()
    return all(len({lab[x - 1] for x in b}) == 1 for b in J.blocks)


# -- Stirling numbers -------------------------------------------------------------


@lru_cache(maxsize=None)
def _stirling_first_rec(n: int, k: int) -> int:
    # x(x-1)...(x-n+1) = (x - (n-1)) * x(x-1)...(x-n+2)
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0 or k > n:
        return 0
    return _stirling_first_rec(n - 1, k - 1) - (n - 1) * _stirling_first_rec(n - 1, k)


def stirling_first_by_cycles(n: int, k: int) -> int:
    """s(n,k) as a signed sum over set partitions with cyclic orders on the blocks."""
    total = 0
    for J in set_partitions(n, k):
        term = 1
        for b in J.blocks:
            term *= (-1) ** (len(b) - 1) * factorial(len(b) - 1)
        total += term
    return total


_CHECK_BOUND = 7
_checked_first: set = set()


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n,k); zero outside the triangle."""
    if n < 0 or k < 0:
        return 0
    value = _stirling_first_rec(n, k)
    if n <= _CHECK_BOUND and (n, k) not in _checked_first:
        assert value == stirling_first_by_cycles(n, k), (n, k)
        _checked_first.add((n, k))
    return value


@lru_cache(maxsize=None)
def stirling_second(n: int, k: int) -> int:
    """Number S(n,k) of set partitions of n into k blocks; zero outside the triangle."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    return k * stirling_second(n - 1, k) + stirling_second(n - 1, k - 1)


def falling_factorial_coeffs(n: int) -> list[int]:
    """Coefficients of x(x-1)...(x-n+1), constant term first."""
    poly = [1]
    for j in range(n):
        shifted = [0] + poly
        poly = [a - j * b for a, b in zip(shifted, poly + [0])]
    return poly


def descending_identity(n: int) -> bool:
    """sum_k s(n,k) x^k == x(x-1)...(x-n+1)."""
    return falling_factorial_coeffs(n) == [stirling_first(n, k) for k in range(n + 1)]


def bell_partial(n: int, k: int, f: Sequence, zero=0, method: str = "auto"):
    """Partial Bell polynomial B_{n,k}(f_1, ..., f_n) over any commutative ring.

    ``f[i]`` holds f_{i+1}.  ``method`` is "enumerate" (sum over set
    partitions), "recurrence", or "auto" (enumeration for n <= 9).
    """
    if len(f) < n - k + 1 and n > 0:
        raise ValueError(f"need f_1..f_{n - k + 1}, got {len(f)} values")
    if method == "auto":
        method = "enumerate" if n <= 9 else "recurrence"
    if method == "enumerate":
        total = zero
        for J in set_partitions(n, k):
            term = None
            for b in J.blocks:
                term = f[len(b) - 1] if term is None else term * f[len(b) - 1]
            total = total + (term if term is not None else 1)
        return total
    return _bell_recurrence(n, k, tuple(f), zero)


def _bell_recurrence(n, k, f, zero):
    # B_{n,k} = sum_i C(n-1, i-1) f_i B_{n-i,k-1}: i is the size of the block containing 1
    table: dict = {(0, 0): zero + 1}

    def get(m, j):
        if (m, j) in table:
            return table[(m, j)]
        if j == 0 or m < j:
            return zero
        total = zero
        for i in range(1, m - j + 2):
            total = total + f[i - 1] * get(m - i, j - 1) * comb(m - 1, i - 1)
        table[(m, j)] = total
        return total

    return get(n, k)


@dataclass(frozen=True)
class StirlingMatrices:
    N: int
    first: tuple[tuple[int, ...], ...]
    second: tuple[tuple[int, ...], ...]

    def product(self) -> list[list[int]]:
        N = self.N
        return [
            [sum(self.first[i][m] * self.second[m][j] for m in range(N)) for j in range(N)]
            for i in range(N)
        ]


def stirling_matrices(N: int) -> StirlingMatrices:
    """Lower-triangular N x N matrices s(n,k) and S(n,k), 1 <= n,k <= N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    first = tuple(tuple(stirling_first(n, k) for k in range(1, N + 1)) for n in range(1, N + 1))
    second = tuple(tuple(stirling_second(n, k) for k in range(1, N + 1)) for n in range(1, N + 1))
    mats = StirlingMatrices(N, first, second)
    identity = [[int(i == j) for j in range(N)] for i in range(N)]
    assert mats.product() == identity, "s . S != I: arithmetic bug"
    return mats
