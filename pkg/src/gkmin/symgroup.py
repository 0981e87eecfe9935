r"""Exact combinatorics of the symmetric group S_n.

Permutations are stored in one-line notation on {1, ..., n}: entry k of
``images`` is w(k). Composition is functional and acts on the left,
``compose(u, v)(k) == u(v(k))``, and this convention is shared by every
module in the package. All values are immutable and safe to share between
threads.

Distinguished elements:

* ``longest_element(n)``    the order-reversing permutation w0 = [n, ..., 1]
* ``longest_parabolic(n)``  the longest element wL of S_{n-1} inside S_n
* ``w_cycle(i, j, n)``      the cycle (i, i-1, ..., j) or (i, i+1, ..., j)
* ``v_cycle(i, j, n)``      the reindexed cycles, defined for i, j in 2..n
* ``x_rep(i, n)``           minimal-length representatives of the cosets
                            of S_{n-1} in S_n, a Bruhat chain x_1 > ... > x_n
* ``y_rep(i, n)``           the maximal-length representatives wL * x_i
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _raw_permutations
from typing import Iterator, Sequence

__all__ = [
    "Permutation",
    "compose",
    "length",
    "bruhat_leq",
    "longest_element",
    "longest_parabolic",
    "simple_reflection",
    "w_cycle",
    "v_cycle",
    "x_rep",
    "y_rep",
    "bracket_set",
    "all_permutations",
    "is_min_coset_rep",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> w = Permutation((2, 3, 1))
    >>> w(1), w(3)
    (2, 1)
    >>> w.inverse()
    Permutation(images=(3, 1, 2))
    >>> str(w)
    '2,3,1'
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("a permutation needs degree at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{images!r} is not a bijection of {{1,..,{n}}}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise ValueError(f"argument {k} outside 1..{self.n}")
        return self.images[k - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, val in enumerate(self.images, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.images)

    def to_json(self) -> list[int]:
        return list(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse comma-separated one-line notation such as ``"2,3,1"``."""
        parts = [p.strip() for p in text.split(",")]
        images = []
        for pos, part in enumerate(parts, start=1):
            try:
                images.append(int(part))
            except ValueError:
                raise ValueError(
                    f"bad permutation entry {part!r} at position {pos}"
                ) from None
        return cls(tuple(images))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """Functional composition, ``compose(u, v)(k) == u(v(k))``.

    >>> compose(Permutation((2, 1, 3)), Permutation((1, 3, 2)))
    Permutation(images=(2, 3, 1))
    """
    if u.n != v.n:
        raise ValueError(f"degree mismatch: {u.n} vs {v.n}")
    ui = u.images
    return Permutation(tuple(ui[k - 1] for k in v.images))


def length(w: Permutation) -> int:
    """Coxeter length, the number of inversions.

    >>> length(Permutation((3, 2, 1)))
    3
    """
    images = w.images
    n = len(images)
    return sum(
        1 for s in range(n) for t in range(s + 1, n) if images[s] > images[t]
    )


@lru_cache(maxsize=200_000)
def _rank_table(images: tuple[int, ...]) -> tuple[int, ...]:
    """Flat table t[(p-1)*n + (q-1)] = #{s <= p : w(s) >= q}."""
    n = len(images)
    table = [0] * (n * n)
    prev_row = [0] * n
    for p in range(1, n + 1):
        val = images[p - 1]
        base = (p - 1) * n
        for q in range(1, n + 1):
            table[base + q - 1] = prev_row[q - 1] + (1 if val >= q else 0)
        prev_row = table[base : base + n]
    return tuple(table)


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat order via the rank-count criterion.

    u <= v holds iff for every prefix length p and threshold q the count
    #{s <= p : u(s) >= q} is at most the corresponding count for v. The
    subword characterization is kept as a test oracle only.
    """
    if u.n != v.n:
        raise ValueError(f"degree mismatch: {u.n} vs {v.n}")
    tu = _rank_table(u.images)
    tv = _rank_table(v.images)
    return all(x <= y for x, y in zip(tu, tv))


def longest_element(n: int) -> Permutation:
    """The longest element w0 = [n, n-1, ..., 1]."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return Permutation(tuple(range(n, 0, -1)))


def longest_parabolic(n: int) -> Permutation:
    """The longest element of S_{n-1} inside S_n, [n-1, ..., 1, n]."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return Permutation(tuple(range(n - 1, 0, -1)) + (n,))


def simple_reflection(i: int, n: int) -> Permutation:
    """The adjacent transposition swapping i and i+1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple reflection index {i} outside 1..{n - 1}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def w_cycle(i: int, j: int, n: int) -> Permutation:
    """The cycle sending i -> i-1 -> ... -> j -> i (or i -> i+1 -> ... -> j).

    Identity when i == j, and ``w_cycle(i, j, n)`` is inverse to
    ``w_cycle(j, i, n)``.

    >>> w_cycle(1, 3, 3)
    Permutation(images=(2, 3, 1))
    >>> w_cycle(3, 1, 3)
    Permutation(images=(3, 1, 2))
    """
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"cycle endpoints ({i},{j}) outside 1..{n}")
    images = list(range(1, n + 1))
    if i != j:
        step = 1 if i < j else -1
        chain = list(range(i, j + step, step))
        for pos, nxt in zip(chain, chain[1:]):
            images[pos - 1] = nxt
        images[chain[-1] - 1] = chain[0]
    return Permutation(tuple(images))


def v_cycle(i: int, j: int, n: int) -> Permutation:
    """Reindexing of the cycles with both indices running over 2..n.

    The family {v_cycle(i, j, n) : i, j in 2..n} coincides with the set of
    all non-identity cycles {w_cycle(i, j, n) : i != j}, without repeats.
    """
    if not (2 <= i <= n and 2 <= j <= n):
        raise ValueError(f"v-cycle indices ({i},{j}) outside 2..{n}")
    if i <= j:
        return w_cycle(i - 1, j, n)
    return w_cycle(i, j - 1, n)


def x_rep(i: int, n: int) -> Permutation:
    """Minimal-length coset representative: fixes 1..i-1, sends i to n and
    k to k-1 for k > i.

    >>> x_rep(2, 4)
    Permutation(images=(1, 4, 2, 3))
    >>> x_rep(4, 4).is_identity()
    True
    """
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside 1..{n}")
    images = list(range(1, i)) + [n] + list(range(i, n))
    return Permutation(tuple(images))


def y_rep(i: int, n: int) -> Permutation:
    """Maximal-length coset representative, ``longest_parabolic(n) * x_rep(i, n)``."""
    return compose(longest_parabolic(n), x_rep(i, n))


def bracket_set(i: int, n: int) -> frozenset[int]:
    """The window {i, i+1} clipped to {2, ..., n}.

    >>> sorted(bracket_set(1, 5)), sorted(bracket_set(3, 5)), sorted(bracket_set(5, 5))
    ([2], [3, 4], [5])
    """
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside 1..{n}")
    return frozenset({i, i + 1} & set(range(2, n + 1)))


def is_min_coset_rep(x: Permutation) -> bool:
    """True iff x has minimal length in its coset of S_{n-1} in S_n.

    Equivalent to the inverse being increasing on the values 1..n-1.
    """
    inv = x.inverse().images
    return all(inv[r - 1] < inv[r] for r in range(1, x.n - 1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for images in _raw_permutations(range(1, n + 1)):
        yield Permutation(images)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
