"""
Positive braid words and the closure-preserving moves used on them.

A word on ``n`` strands is a tuple of generator indices in ``1..n-1``; the letter
``i`` stands for the positive generator sigma_i.
"""

from __future__ import annotations

import dataclasses
import itertools
import re
from collections import deque
from typing import Iterator


class SearchExhausted(RuntimeError):
    """No word with an adjacent square exists in the reachable class."""


@dataclasses.dataclass(frozen=True)
class PositiveBraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        for pos, i in enumerate(self.letters):
            if not 1 <= i <= self.strands - 1:
                raise ValueError(
                    f"generator index {i} at letter {pos + 1} out of range 1..{self.strands - 1}"
                )

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return f"{self.strands}: " + " ".join(map(str, self.letters)) if self.letters else f"{self.strands}:"

    def without(self, *positions: int) -> PositiveBraidWord:
        """Drop the letters at the given 0-based positions."""
        drop = set(positions)
        return PositiveBraidWord(self.strands, tuple(x for p, x in enumerate(self.letters) if p not in drop))

    def counts(self) -> dict[int, int]:
        c = {i: 0 for i in range(1, self.strands)}
        for x in self.letters:
            c[x] += 1
        return c

    def has_full_support(self) -> bool:
        return not missing_generators(self)

    def square_position(self) -> int | None:
        """0-based index j with letters[j] == letters[j+1], smallest first."""
        for j in range(len(self.letters) - 1):
            if self.letters[j] == self.letters[j + 1]:
                return j
        return None


_TORUS = re.compile(r"^\s*T\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$", re.IGNORECASE)


def parse_word(text: str) -> PositiveBraidWord:
    """
    Parse ``"n: l1 l2 ... lk"`` (``T(p,q)`` is accepted as a torus shorthand).

    >>> parse_word("3: 1 2 1 2")
    PositiveBraidWord(strands=3, letters=(1, 2, 1, 2))
    """
    m = _TORUS.match(text)
    if m:
        return torus_word(int(m.group(1)), int(m.group(2)))
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"expected 'n: l1 l2 ...', no ':' found in {text!r}")
    try:
        n = int(head.strip())
    except ValueError:
        raise ValueError(f"bad strand count {head.strip()!r} at position 0") from None
    letters = []
    for m in re.finditer(r"\S+", tail):
        tok = m.group().strip(",")
        if not tok:
            continue
        try:
            letters.append(int(tok))
        except ValueError:
            raise ValueError(f"bad letter {tok!r} at position {len(head) + 1 + m.start()}") from None
    return PositiveBraidWord(n, tuple(letters))


def parse_letters(strands: int, csv: str) -> PositiveBraidWord:
    """Parse the ``--strands N --word 1,2,1`` flag form."""
    letters = []
    pos = 0
    for tok in csv.split(","):
        t = tok.strip()
        if t:
            try:
                letters.append(int(t))
            except ValueError:
                raise ValueError(f"bad letter {t!r} at position {pos}") from None
        pos += len(tok) + 1
    return PositiveBraidWord(strands, tuple(letters))


def missing_generators(w: PositiveBraidWord) -> set[int]:
    present = set(w.letters)
    return {i for i in range(1, w.strands) if i not in present}


def closure_components(w: PositiveBraidWord) -> int:
    """Number of components of the closure: cycles of the underlying permutation."""
    perm = list(range(w.strands))
    for i in w.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    seen = [False] * w.strands
    cycles = 0
    for s in range(w.strands):
        if not seen[s]:
            cycles += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
    return cycles


def factor_single_occurrence(w: PositiveBraidWord) -> list[PositiveBraidWord]:
    """
    Split the closure into connected summands at generators that occur exactly once.

    Unknotted factors (one strand, no letters) are dropped, so an empty result means
    the closure is the unknot.
    """
    if missing_generators(w):
        raise ValueError(f"word {w} lacks full support; its closure is split")
    out: list[PositiveBraidWord] = []
    stack = [w]
    while stack:
        cur = stack.pop()
        if cur.strands == 1:
            continue
        counts = cur.counts()
        single = next((i for i in range(1, cur.strands) if counts[i] == 1), None)
        if single is None:
            out.append(cur)
            continue
        # Rotate so sigma_single is last; letters below and above it commute.
        pos = cur.letters.index(single)
        rotated = cur.letters[pos + 1:] + cur.letters[:pos]
        lower = PositiveBraidWord(single, tuple(x for x in rotated if x < single))
        upper = PositiveBraidWord(cur.strands - single, tuple(x - single for x in rotated if x > single))
        # Reversed push keeps the lower factor first in the output.
        stack.append(upper)
        stack.append(lower)
    return out


def cyclic_canonical(w: PositiveBraidWord) -> PositiveBraidWord:
    return PositiveBraidWord(w.strands, min_rotation(w.letters))


def min_rotation(letters: tuple[int, ...]) -> tuple[int, ...]:
    if not letters:
        return letters
    return min(letters[k:] + letters[:k] for k in range(len(letters)))


def _moves(letters: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Far commutations and braid relations at every position of every rotation."""
    n = len(letters)
    for k in range(n):
        r = letters[k:] + letters[:k]
        for p in range(n - 1):
            a, b = r[p], r[p + 1]
            if abs(a - b) >= 2:
                yield r[:p] + (b, a) + r[p + 2:]
        for p in range(n - 2):
            a, b, c = r[p], r[p + 1], r[p + 2]
            if a == c and abs(a - b) == 1:
                yield r[:p] + (b, a, b) + r[p + 3:]


def _square_rotation(letters: tuple[int, ...]) -> tuple[int, ...] | None:
    n = len(letters)
    if n < 2:
        return None
    for k in range(n):
        r = letters[k:] + letters[:k]
        if any(r[p] == r[p + 1] for p in range(n - 1)):
            return r
    return None


def find_square_rewrite(w: PositiveBraidWord) -> PositiveBraidWord:
    """
    Breadth-first search over the conjugacy-and-relations class of ``w`` for a word
    carrying two equal adjacent letters. Cyclic rotation is folded into the class:
    states are deduplicated by minimal rotation and every rotation is expanded.
    """
    if missing_generators(w):
        raise ValueError(f"word {w} lacks full support")
    if any(c < 2 for c in w.counts().values()):
        raise ValueError(f"word {w} has a generator occurring fewer than twice")
    if w.square_position() is not None:
        return w
    start = w.letters
    seen = {min_rotation(start)}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        hit = _square_rotation(cur)
        if hit is not None:
            return PositiveBraidWord(w.strands, hit)
        for nxt in _moves(cur):
            key = min_rotation(nxt)
            if key not in seen:
                seen.add(key)
                queue.append(nxt)
    raise SearchExhausted(f"no square found for {w} among {len(seen)} cyclic classes")


def connected_sum_word(a: PositiveBraidWord, b: PositiveBraidWord) -> PositiveBraidWord:
    shift = a.strands - 1
    return PositiveBraidWord(a.strands + b.strands - 1, a.letters + tuple(x + shift for x in b.letters))


def torus_word(p: int, q: int) -> PositiveBraidWord:
    if p < 2 or q < 1:
        raise ValueError(f"torus word needs p >= 2 and q >= 1, got ({p}, {q})")
    return PositiveBraidWord(p, tuple(range(1, p)) * q)


def enumerate_words(max_strands: int, max_len: int, include_unknots: bool = False) -> Iterator[PositiveBraidWord]:
    """
    Full-support words with ``2 <= n <= max_strands`` and ``1 <= len <= max_len``, one
    per cyclic class (the minimal rotation), ordered by strands, length, then letters.
    Words closing to the unknot are skipped unless ``include_unknots``.
    """
    if max_strands < 1 or max_len < 1:
        raise ValueError("bounds must be >= 1")
    for n in range(2, max_strands + 1):
        gens = range(1, n)
        for length in range(n - 1, max_len + 1):
            for letters in itertools.product(gens, repeat=length):
                if len(set(letters)) != n - 1:
                    continue
                if min_rotation(letters) != letters:
                    continue
                w = PositiveBraidWord(n, letters)
                if not include_unknots and not factor_single_occurrence(w):
                    continue
                yield w
