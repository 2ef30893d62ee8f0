"""Rhombic staircase tableaux: fillings, weights, independent validation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from ..errors import EngineError
from .diagram import HRHOMBUS, SQUARE, VRHOMBUS, RhombicDiagram, Tile, build_diagram, strips_from_geometry
from .word import Word, parse_word

ALPHA, BETA, GAMMA, DELTA = "alpha", "beta", "gamma", "delta"
LETTERS = (ALPHA, BETA, GAMMA, DELTA)

# letter -> slot in a weight exponent vector (alpha, beta, gamma, delta, t)
LETTER_SLOT = {ALPHA: 0, BETA: 1, GAMMA: 2, DELTA: 3}
T_SLOT = 4

# fill letters that empty the rest of the strip
NORTH_BLOCKERS = (ALPHA, GAMMA)
WEST_BLOCKERS = (BETA, DELTA)


class InvalidTableau(EngineError):
    pass


def allowed_letters(diagram: RhombicDiagram, tile: Tile) -> Tuple[Optional[str], ...]:
    """Options in enumeration order: empty first, then alphabetical letters."""
    if tile.kind == SQUARE and tile.border_label is not None:
        return (ALPHA, DELTA) if diagram.word[tile.border_label - 1] == 1 else (BETA, GAMMA)
    if tile.kind == SQUARE:
        return (None,) + LETTERS
    if tile.kind == HRHOMBUS:
        return (None, ALPHA, GAMMA)
    return (None, BETA, DELTA)


def tile_t_power(kind: str, letter: Optional[str], right: Optional[str], below: Optional[str]) -> int:
    """Power of t carried by one tile.

    `right` / `below` are the nearest nonempty letters to the tile's right in
    its west-strip and below it in its north-strip (None if there is none).
    """
    if kind == HRHOMBUS:
        if letter == ALPHA:
            return 1
        if letter is None:
            if below == ALPHA:
                return 2
            if below in (BETA, DELTA):
                return 1
        return 0
    if kind == VRHOMBUS:
        if letter == BETA:
            return 1
        if letter is None:
            if right == BETA:
                return 2
            if right in (ALPHA, GAMMA):
                return 1
        return 0
    if letter is None:
        if right in (ALPHA, GAMMA) and below in (ALPHA, DELTA):
            return 1
        if right == BETA:
            return 1
    return 0


@dataclass(frozen=True)
class Tableau:
    diagram: RhombicDiagram
    # one entry per tile id; None = empty
    content: Tuple[Optional[str], ...]

    @property
    def word(self) -> Word:
        return self.diagram.word

    def letter(self, tile_id: int) -> Optional[str]:
        return self.content[tile_id]


def _fill(diagram: RhombicDiagram) -> Iterator[Tuple[Tuple[Optional[str], ...], Tuple[int, ...]]]:
    """Depth-first over tiles in id order, yielding (content, weight exponents).

    Tile ids run south-east to north-west inside every strip, so when a tile
    is reached the nearest nonempty tile right of it and below it are already
    fixed: they are the last letters placed in its two strips.
    """
    tiles = diagram.tiles
    content: List[Optional[str]] = [None] * len(tiles)
    west_last: Dict[int, Optional[str]] = {k: None for k in diagram.west_strips}
    north_last: Dict[int, Optional[str]] = {k: None for k in diagram.north_strips}
    exps = [0, 0, 0, 0, 0]

    def visit(k: int) -> Iterator[Tuple[Tuple[Optional[str], ...], Tuple[int, ...]]]:
        if k == len(tiles):
            yield tuple(content), tuple(exps)
            return
        tile = tiles[k]
        right = west_last[tile.west_strip] if tile.west_strip is not None else None
        below = north_last[tile.north_strip] if tile.north_strip is not None else None
        options = allowed_letters(diagram, tile)
        if right in WEST_BLOCKERS or below in NORTH_BLOCKERS:
            options = (None,) if None in options else ()
        for letter in options:
            tp = tile_t_power(tile.kind, letter, right, below)
            exps[T_SLOT] += tp
            content[k] = letter
            if letter is not None:
                exps[LETTER_SLOT[letter]] += 1
                if tile.west_strip is not None:
                    west_last[tile.west_strip] = letter
                if tile.north_strip is not None:
                    north_last[tile.north_strip] = letter
            yield from visit(k + 1)
            if letter is not None:
                exps[LETTER_SLOT[letter]] -= 1
                if tile.west_strip is not None:
                    west_last[tile.west_strip] = right
                if tile.north_strip is not None:
                    north_last[tile.north_strip] = below
            content[k] = None
            exps[T_SLOT] -= tp

    yield from visit(0)


def enumerate_tableaux(word: Word) -> List[Tableau]:
    if word.n == 0:
        return []
    diagram = build_diagram(word)
    return [Tableau(diagram, content) for content, _ in _fill(diagram)]


def weight_counter(diagram: RhombicDiagram) -> Counter:
    """Multiset of weight exponent vectors over all tableaux of the diagram."""
    acc: Counter = Counter()
    for _, exps in _fill(diagram):
        acc[exps] += 1
    return acc


def _nearest(content: Sequence[Optional[str]], strip: Sequence[int], tile_id: int) -> Optional[str]:
    pos = strip.index(tile_id)
    for tid in reversed(strip[:pos]):
        if content[tid] is not None:
            return content[tid]
    return None


def weight_exponents(tab: Tableau) -> Tuple[int, ...]:
    """Scan every tile against its strips; exponents of (alpha, beta, gamma, delta, t)."""
    d = tab.diagram
    exps = [0, 0, 0, 0, 0]
    for tile in d.tiles:
        letter = tab.content[tile.id]
        right = _nearest(tab.content, d.west_strips[tile.west_strip], tile.id) if tile.west_strip is not None else None
        below = _nearest(tab.content, d.north_strips[tile.north_strip], tile.id) if tile.north_strip is not None else None
        if letter is not None:
            exps[LETTER_SLOT[letter]] += 1
        exps[T_SLOT] += tile_t_power(tile.kind, letter, right, below)
    return tuple(exps)


def weight(tab: Tableau) -> "WeightedCount":
    from .genpoly import WeightedCount

    return WeightedCount.from_counter(Counter({weight_exponents(tab): 1}))


def validate_tableau(tab: Tableau) -> List[str]:
    """Re-check a tableau against strips rebuilt from tile geometry. Returns problems."""
    problems: List[str] = []
    d = tab.diagram
    by_id = {t.id: t for t in d.tiles}
    west, north = strips_from_geometry(d)

    if sorted(west) != sorted(d.west_strips.values()):
        problems.append("west strips disagree with geometry")
    if sorted(north) != sorted(d.north_strips.values()):
        problems.append("north strips disagree with geometry")

    for strip in north:
        kinds = [by_id[i].kind for i in strip]
        if HRHOMBUS in kinds and SQUARE in kinds[kinds.index(HRHOMBUS):]:
            problems.append(f"north strip {strip} is not squares-then-rhombi")
        blocked = False
        for tid in strip:
            if blocked and tab.content[tid] is not None:
                problems.append(f"tile {tid} above alpha/gamma is filled")
            if tab.content[tid] in NORTH_BLOCKERS:
                blocked = True
    for strip in west:
        blocked = False
        for tid in strip:
            if blocked and tab.content[tid] is not None:
                problems.append(f"tile {tid} left of beta/delta is filled")
            if tab.content[tid] in WEST_BLOCKERS:
                blocked = True

    for tile in d.tiles:
        letter = tab.content[tile.id]
        if tile.kind == HRHOMBUS and letter not in (None, ALPHA, GAMMA):
            problems.append(f"horizontal rhombus {tile.id} holds {letter}")
        if tile.kind == VRHOMBUS and letter not in (None, BETA, DELTA):
            problems.append(f"vertical rhombus {tile.id} holds {letter}")
        if tile.kind == SQUARE and tile.border_label is not None:
            need = (ALPHA, DELTA) if d.word[tile.border_label - 1] == 1 else (BETA, GAMMA)
            if letter not in need:
                problems.append(f"border square {tile.border_label} holds {letter}")

    labels = sorted(t.border_label for t in d.tiles if t.border_label is not None)
    expected = [i for i in range(1, d.word.n + 1) if _has_border_tile(d.word, i)]
    if labels != expected:
        problems.append(f"border labels {labels} != {expected}")
    for tile in d.tiles:
        if tile.border_label is not None:
            is_square = tile.kind == SQUARE
            if is_square != (d.word[tile.border_label - 1] != 0):
                problems.append(f"border tile {tile.border_label} has kind {tile.kind}")
    return problems


def _has_border_tile(word: Word, pos: int) -> bool:
    return word[pos - 1] != 0 or any(x != 0 for x in word)


def tableau_to_json(tab: Tableau) -> Dict[str, Any]:
    from .genpoly import WeightedCount

    wt = WeightedCount.from_counter(Counter({weight_exponents(tab): 1}))
    return {
        "word": str(tab.word),
        "tiles": [
            {"id": t.id, "kind": t.kind, "label": t.border_label, "letter": tab.content[t.id]}
            for t in tab.diagram.tiles
        ],
        "weight": wt.value.to_json(),
    }


def tableau_text(tab: Tableau) -> str:
    cells = []
    for t in tab.diagram.tiles:
        letter = tab.content[t.id]
        mark = "." if letter is None else letter[0]
        cells.append(mark)
    return "".join(cells)


_MARKS = {letter[0]: letter for letter in LETTERS}


def _checked(diagram: RhombicDiagram, content: Sequence[Optional[str]]) -> Tableau:
    if len(content) != len(diagram.tiles):
        raise InvalidTableau(f"{len(content)} letters for {len(diagram.tiles)} tiles")
    tab = Tableau(diagram, tuple(content))
    problems = validate_tableau(tab)
    if problems:
        raise InvalidTableau("; ".join(problems[:3]))
    return tab


def tableau_from_text(word: Word, text: str) -> Tableau:
    """Inverse of tableau_text: one mark per tile in id order, '.' for empty."""
    content = []
    for mark in text.strip():
        if mark == ".":
            content.append(None)
        elif mark in _MARKS:
            content.append(_MARKS[mark])
        else:
            raise InvalidTableau(f"Unknown tile mark {mark!r}")
    return _checked(build_diagram(word), content)


def tableau_from_json(obj: Dict[str, Any]) -> Tableau:
    """Inverse of tableau_to_json; kinds, labels and the weight are recomputed."""
    try:
        diagram = build_diagram(parse_word(obj["word"]))
        letters = {int(tile["id"]): tile.get("letter") for tile in obj["tiles"]}
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidTableau(f"Malformed tableau JSON: {e}") from e
    if set(letters) != {t.id for t in diagram.tiles}:
        raise InvalidTableau("Tile ids do not match the diagram of the word")
    for letter in letters.values():
        if letter is not None and letter not in LETTERS:
            raise InvalidTableau(f"Unknown letter {letter!r}")
    return _checked(diagram, [letters[t.id] for t in diagram.tiles])
