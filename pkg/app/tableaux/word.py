"""Words over {○,∗,•} = {-1,0,+1}.

A word is an ASEP state and a composition at the same time. Text input
accepts any mix of the encodings below; output uses b/s/o.

  •  b  +  1     first-class particle
  ∗  s  0  *     second-class particle
  ○  o  -  -1    hole
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

from ..errors import EngineError


class InvalidWord(EngineError):
    pass


class InvalidSector(EngineError):
    pass


_LETTER = {1: "b", 0: "s", -1: "o"}
_GLYPH = {1: "•", 0: "∗", -1: "○"}
_SINGLE = {"b": 1, "•": 1, "s": 0, "∗": 0, "*": 0, "0": 0, "o": -1, "○": -1}


@dataclass(frozen=True)
class Word:
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        for x in self.entries:
            if x not in (-1, 0, 1):
                raise InvalidWord(f"Entry {x!r} outside {{-1,0,1}}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def r(self) -> int:
        return sum(1 for x in self.entries if x == 0)

    @property
    def norm(self) -> int:
        return self.n + self.r

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.entries + tuple(other))

    def __str__(self) -> str:
        return "".join(_LETTER[x] for x in self.entries)

    def glyphs(self) -> str:
        return "".join(_GLYPH[x] for x in self.entries)

    def spaced(self) -> str:
        return " ".join(_LETTER[x] for x in self.entries)

    def without(self, positions: Iterable[int]) -> "Word":
        """Subword dropping the given 1-based positions."""
        drop = set(positions)
        return Word(tuple(x for i, x in enumerate(self.entries, start=1) if i not in drop))

    def reflected(self) -> "Word":
        """Reverse the word and exchange • with ○."""
        return Word(tuple(-x for x in reversed(self.entries)))


def parse_word(text: Union[str, Sequence[int], Word]) -> Word:
    if isinstance(text, Word):
        return text
    if not isinstance(text, str):
        return Word(tuple(int(x) for x in text))
    s = "".join(ch for ch in text if not ch.isspace() and ch != ",")
    out: List[int] = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch in "+-" and i + 1 < len(s) and s[i + 1] == "1":
            out.append(1 if ch == "+" else -1)
            i += 2
            continue
        if ch == "+" or ch == "1":
            out.append(1)
        elif ch == "-":
            out.append(-1)
        elif ch in _SINGLE:
            out.append(_SINGLE[ch])
        else:
            raise InvalidWord(f"Unknown letter {ch!r} in {text!r}")
        i += 1
    return Word(tuple(out))


def words_with(n: int, r: int) -> List[Word]:
    """All words of length n with exactly r zeros, in a fixed order (• < ∗ < ○ per slot)."""
    if n < 0 or r < 0 or r > n:
        raise InvalidSector(f"No words of length {n} with {r} zeros")
    return [Word(w) for w in product((1, 0, -1), repeat=n) if w.count(0) == r]
