"""Words over the integer alphabet [r] and their rearrangement classes.

A word is a finite sequence of letters from ``{1, ..., r}``.  The
rearrangement class of a word is the set of all words with the same letter
multiplicities; it is described by a composition ``(c(1), ..., c(r))`` of
non-negative letter counts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True, slots=True)
class Alphabet:
    """The alphabet [r] = {1, ..., r}."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.size}")

    def letters(self) -> range:
        return range(1, self.size + 1)


@dataclass(frozen=True, slots=True)
class Word:
    """A word over [size]; ``letters`` may be empty (the empty word)."""

    letters: tuple[int, ...]
    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"alphabet size must be >= 1, got {self.size}")
        for x in self.letters:
            if not 1 <= x <= self.size:
                raise ValueError(f"letter {x} outside alphabet [{self.size}]")

    @classmethod
    def parse(cls, text: str, size: int) -> "Word":
        """Parse the whitespace-separated text form; "" is the empty word."""
        parts = text.split()
        return cls(tuple(int(p) for p in parts), size)

    def text(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> int:
        return self.letters[i]


@dataclass(frozen=True, slots=True)
class Composition:
    """Letter-count vector ``(c(1), ..., c(r))`` of a rearrangement class."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts:
            raise ValueError("composition needs at least one part")
        for c in self.counts:
            if c < 0:
                raise ValueError(f"negative count {c}")

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Parse the comma-separated text form, e.g. "1,1,1"."""
        return cls(tuple(int(p) for p in text.split(",")))

    def text(self) -> str:
        return ",".join(str(c) for c in self.counts)

    @property
    def size(self) -> int:
        """Alphabet size r."""
        return len(self.counts)

    @property
    def weight(self) -> int:
        """Total number of letters n."""
        return sum(self.counts)


def composition_of(w: Word) -> Composition:
    """Letter multiplicities of ``w`` over its alphabet."""
    counts = [0] * w.size
    for x in w.letters:
        counts[x - 1] += 1
    return Composition(tuple(counts))


def class_size(c: Composition) -> int:
    """Number of words in the rearrangement class: n! / prod c(i)!."""
    n = c.weight
    denom = math.prod(math.factorial(k) for k in c.counts)
    return math.factorial(n) // denom


def enumerate_class(c: Composition) -> Iterator[Word]:
    """Yield every word of the rearrangement class in increasing lex order."""
    r = c.size
    n = c.weight
    counts = list(c.counts)
    buf: list[int] = []

    def rec() -> Iterator[Word]:
        if len(buf) == n:
            yield Word(tuple(buf), r)
            return
        for x in range(1, r + 1):
            if counts[x - 1]:
                counts[x - 1] -= 1
                buf.append(x)
                yield from rec()
                buf.pop()
                counts[x - 1] += 1

    return rec()


def words_of_length(r: int, n: int) -> Iterator[Word]:
    """All r**n words of length n over [r], in lex order."""
    for tup in itertools.product(range(1, r + 1), repeat=n):
        yield Word(tup, r)


def compositions_of_weight(r: int, n: int) -> Iterator[Composition]:
    """All compositions of n into r non-negative parts, in lex order."""
    if r < 1:
        raise ValueError("need at least one part")
    if r == 1:
        yield Composition((n,))
        return
    for first in range(n + 1):
        for rest in compositions_of_weight(r - 1, n - first):
            yield Composition((first,) + rest.counts)
