"""Faro words, faro permutations and their block decomposition.

A k-ary faro word is an interlacing ``u1 v1 u2 v2 ...`` of two nondecreasing
words over ``[1, k]`` whose lengths differ by at most one.  Equivalently the
letters satisfy ``w[i] <= w[i + 2]`` everywhere.

Words are plain tuples of ints.  The arity is never inferred from the letters;
every operation that depends on it takes it explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, NamedTuple, Sequence

from .errors import DomainError

Word = tuple[int, ...]


def _check_letters(letters: Sequence[int], k: int, low: int = 1) -> None:
    if k < 1:
        raise DomainError(f"arity must be >= 1, got {k}")
    for i, x in enumerate(letters):
        if not low <= x <= k + low - 1:
            raise DomainError(
                f"letter {x} at position {i + 1} outside [{low}, {k + low - 1}]"
            )


def is_faro_word(letters: Sequence[int], k: int) -> bool:
    """True iff ``letters`` is a k-ary faro word.

    Raises DomainError when a letter falls outside ``[1, k]``.
    """
    _check_letters(letters, k)
    return all(letters[i] <= letters[i + 2] for i in range(len(letters) - 2))


def is_nondecreasing(letters: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(letters, letters[1:]))


def faro_shuffle(u: Sequence[int], v: Sequence[int]) -> Word:
    """Interlace ``u`` and ``v`` as ``u1 v1 u2 v2 ...``."""
    if not 0 <= len(u) - len(v) <= 1:
        raise DomainError(
            f"need 0 <= |u| - |v| <= 1, got |u|={len(u)}, |v|={len(v)}"
        )
    if not is_nondecreasing(u):
        raise DomainError(f"u is not nondecreasing: {tuple(u)}")
    if not is_nondecreasing(v):
        raise DomainError(f"v is not nondecreasing: {tuple(v)}")
    out = [0] * (len(u) + len(v))
    out[0::2] = u
    out[1::2] = v
    return tuple(out)


def deinterleave(w: Sequence[int]) -> tuple[Word, Word]:
    """Split a word into its odd-position and even-position subsequences."""
    return tuple(w[0::2]), tuple(w[1::2])


def faro_word_count(n: int, k: int) -> int:
    """|S_{n,k}| from the product of two multiset counts."""
    if n < 0 or k < 1:
        return 0
    return math.comb(n // 2 + k - 1, k - 1) * math.comb((n + 1) // 2 + k - 1, k - 1)


def enumerate_faro_words(n: int, k: int) -> Iterator[Word]:
    """All k-ary faro words of length n, in lexicographic order."""
    if n < 0:
        raise DomainError(f"length must be >= 0, got {n}")
    if k < 1:
        raise DomainError(f"arity must be >= 1, got {k}")
    # Extending a prefix only needs the letter two places back as a lower bound,
    # so a depth-first walk over letters in increasing order is lexicographic.
    word = [0] * n

    def walk(i: int) -> Iterator[Word]:
        if i == n:
            yield tuple(word)
            return
        low = word[i - 2] if i >= 2 else 1
        for x in range(low, k + 1):
            word[i] = x
            yield from walk(i + 1)

    yield from walk(0)


def is_faro_permutation(letters: Sequence[int]) -> bool:
    n = len(letters)
    return sorted(letters) == list(range(1, n + 1)) and all(
        letters[i] < letters[i + 2] for i in range(n - 2)
    )


def enumerate_faro_permutations(n: int) -> Iterator[Word]:
    """All faro permutations of length n, in lexicographic order.

    A faro permutation is fixed by the set of values at odd positions, so the
    stream has C(n, floor(n/2)) elements.
    """
    if n < 0:
        raise DomainError(f"length must be >= 0, got {n}")
    n_odd = (n + 1) // 2
    words = []
    for odd in combinations(range(1, n + 1), n_odd):
        rest = tuple(x for x in range(1, n + 1) if x not in set(odd))
        words.append(faro_shuffle(odd, rest))
    words.sort()
    return iter(words)


def enumerate_multisets(m: int, k: int) -> Iterator[Word]:
    """Nondecreasing words of length m over [1, k]."""
    return combinations_with_replacement(range(1, k + 1), m)


# --- block decomposition -------------------------------------------------------


class Block(NamedTuple):
    """A singleton ``(x,)`` or a pair ``(j, i)`` with ``j > i``."""

    values: tuple[int, ...]

    @property
    def is_pair(self) -> bool:
        return len(self.values) == 2

    def __str__(self) -> str:
        body = format_word(self.values)
        return f"({body})" if self.is_pair else body


def singleton(x: int) -> Block:
    return Block((x,))


def pair(j: int, i: int) -> Block:
    if not j > i:
        raise DomainError(f"pair values must be strictly decreasing, got {j}{i}")
    return Block((j, i))


def block_decomposition(w: Sequence[int]) -> list[Block]:
    """Decompose a faro word into pairs (adjacent descents) and singletons.

    A faro word has no two overlapping descents (that would be a 321 factor),
    so a left-to-right greedy scan is the unique decomposition.
    """
    blocks = []
    i = 0
    while i < len(w):
        if i + 1 < len(w) and w[i] > w[i + 1]:
            blocks.append(Block((w[i], w[i + 1])))
            i += 2
        else:
            blocks.append(Block((w[i],)))
            i += 1
    return blocks


def join_blocks(blocks: Sequence[Block]) -> Word:
    return tuple(x for b in blocks for x in b.values)


def lattice_leq(p: Block, q: Block) -> bool:
    """The faro lattice order: ``pq`` is a faro word and not a single pair."""
    pq = p.values + q.values
    if len(pq) == 2 and pq[0] > pq[1]:
        return False
    return all(pq[i] <= pq[i + 2] for i in range(len(pq) - 2))


def lattice_blocks(k: int) -> list[Block]:
    """All blocks over [1, k]: singletons and strictly decreasing pairs."""
    out = [singleton(x) for x in range(1, k + 1)]
    out += [pair(j, i) for j in range(2, k + 1) for i in range(1, j)]
    return out


# --- pattern counting on words --------------------------------------------------


def _standardize(values: Sequence[int]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(set(values)), start=1)}
    return tuple(ranks[v] for v in values)


def _check_pattern(p: Sequence[int]) -> tuple[int, ...]:
    if len(p) == 0:
        raise DomainError("empty pattern")
    return _standardize(p)


def count_consecutive_pattern(w: Sequence[int], p: Sequence[int]) -> int:
    """Number of factors of ``w`` order-isomorphic to ``p``.

    Equal letters in the pattern must match equal letters, so ``11`` counts
    adjacent equal letters only.
    """
    target = _check_pattern(p)
    m = len(target)
    return sum(
        1 for i in range(len(w) - m + 1) if _standardize(w[i:i + m]) == target
    )


def count_classical_pattern(w: Sequence[int], p: Sequence[int]) -> int:
    """Number of subsequences of ``w`` order-isomorphic to ``p``."""
    target = _check_pattern(p)
    return sum(
        1
        for idx in combinations(range(len(w)), len(target))
        if _standardize([w[i] for i in idx]) == target
    )


def avoids_classical(w: Sequence[int], p: Sequence[int]) -> bool:
    target = _check_pattern(p)
    return not any(
        _standardize([w[i] for i in idx]) == target
        for idx in combinations(range(len(w)), len(target))
    )


def reverse_complement(w: Sequence[int], k: int) -> Word:
    """Reverse the word and replace each letter x by k + 1 - x."""
    _check_letters(w, k)
    return tuple(k + 1 - x for x in reversed(w))


# --- text format -----------------------------------------------------------------


def format_word(w: Sequence[int], k: int | None = None) -> str:
    """Digits when every letter fits in one digit, comma-separated otherwise."""
    big = (k is not None and k > 9) or any(x > 9 or x < 0 for x in w)
    return ",".join(map(str, w)) if big else "".join(map(str, w))


def parse_word(text: str, k: int) -> Word:
    """Parse the text format; ``k`` selects digit or comma form."""
    text = text.strip()
    if text in ("", "-", "ε", "e"):
        return ()
    if "," in text or k > 9:
        try:
            letters = tuple(int(t) for t in text.split(","))
        except ValueError:
            raise DomainError(f"malformed word {text!r}") from None
    else:
        if not text.isdigit():
            raise DomainError(f"malformed word {text!r}")
        letters = tuple(int(c) for c in text)
    return letters


@dataclass(frozen=True)
class FaroWord:
    """A validated faro word together with its arity."""

    letters: Word
    arity: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not is_faro_word(self.letters, self.arity):
            raise DomainError(f"{format_word(self.letters)} is not a faro word")

    @classmethod
    def parse(cls, text: str, arity: int) -> "FaroWord":
        return cls(parse_word(text, arity), arity)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters, self.arity)
