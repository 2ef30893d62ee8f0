"""Rhombic diagrams and their distinguished tiling.

The south-east border of Γ(μ) is read off the word: a south step then a west
step for every • or ○, one south-west step for every ∗. The north-west border
is all west steps, then all south-west steps, then all south steps. The tiling
is produced by sweeping the border path into the north-west one with adjacent
step swaps; every swap lays down one tile:

- south/west swap      -> square
- south/south-west     -> vertical rhombus (two vertical edges)
- south-west/west      -> horizontal rhombus (two horizontal edges)

South steps are swept first (rightmost letter first), then south-west steps.
This order puts every north-strip's squares below its horizontal rhombi, which
is the distinguished tiling. Tile ids follow the sweep order, which is also
south-east to north-west inside every strip.

Coordinates: unit west (-1,0), south (0,-1) and south-west (-1,-1) steps
starting at the origin, so tile centres sit on the half-integer grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .word import InvalidWord, Word

SQUARE = "square"
HRHOMBUS = "horizontal-rhombus"
VRHOMBUS = "vertical-rhombus"

Point = Tuple[Fraction, Fraction]

_STEP = {"S": (0, -1), "W": (-1, 0), "D": (-1, -1)}


@dataclass(frozen=True)
class Tile:
    id: int
    kind: str
    # (a, b) for a square, (a, c) for a vertical rhombus, (c, b) for a horizontal one;
    # a, b are positions of • / ○ letters and c the position of a ∗.
    indices: Tuple[int, int]
    center: Point
    vertices: Tuple[Point, Point, Point, Point]
    west_strip: Optional[int] = None
    north_strip: Optional[int] = None
    border_label: Optional[int] = None


@dataclass(frozen=True)
class RhombicDiagram:
    word: Word
    tiles: Tuple[Tile, ...]
    # strip id -> tile ids, west strips right-to-left, north strips bottom-to-top
    west_strips: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    north_strips: Dict[int, Tuple[int, ...]] = field(default_factory=dict)

    @property
    def size(self) -> Tuple[int, int]:
        return self.word.n, self.word.r

    def border_tiles(self) -> Dict[int, Tile]:
        return {t.border_label: t for t in self.tiles if t.border_label is not None}

    def tile_at(self, x: float, y: float) -> Tile:
        for t in self.tiles:
            if t.center == (x, y):
                return t
        raise KeyError(f"No tile centred at ({x}, {y})")

    def count(self, kind: str) -> int:
        return sum(1 for t in self.tiles if t.kind == kind)


def _add(p: Point, v: Tuple[int, int]) -> Point:
    return (p[0] + v[0], p[1] + v[1])


def _border_label_target(word: Word, pos: int) -> Optional[Tuple[str, Tuple[int, int]]]:
    if word[pos - 1] != 0:
        return SQUARE, (pos, pos)
    below = [i for i in range(1, pos) if word[i - 1] != 0]
    if below:
        return VRHOMBUS, (below[-1], pos)
    above = [i for i in range(pos + 1, word.n + 1) if word[i - 1] != 0]
    if above:
        return HRHOMBUS, (pos, above[0])
    return None


def build_diagram(word: Word) -> RhombicDiagram:
    if word.n == 0:
        raise InvalidWord("Rhombic diagrams need a nonempty word")

    path: List[Tuple[str, int]] = []
    for pos, x in enumerate(word, start=1):
        if x:
            path += [("S", pos), ("W", pos)]
        else:
            path.append(("D", pos))

    raw: List[Tuple[str, Tuple[int, int], Point, Tuple[Point, ...]]] = []

    def swap(k: int) -> None:
        p: Point = (Fraction(0), Fraction(0))
        for step, _ in path[:k]:
            p = _add(p, _STEP[step])
        (s1, l1), (s2, l2) = path[k], path[k + 1]
        v1, v2 = _STEP[s1], _STEP[s2]
        far = _add(_add(p, v1), v2)
        center = ((p[0] + far[0]) / 2, (p[1] + far[1]) / 2)
        verts = (p, _add(p, v1), far, _add(p, v2))
        pair = s1 + s2
        if pair == "SW":
            raw.append((SQUARE, (l1, l2), center, verts))
        elif pair == "SD":
            raw.append((VRHOMBUS, (l1, l2), center, verts))
        elif pair == "DW":
            raw.append((HRHOMBUS, (l1, l2), center, verts))
        else:
            raise AssertionError(f"unexpected swap {pair}")
        path[k], path[k + 1] = path[k + 1], path[k]

    def sweep(step: str, stop_at: str) -> None:
        labels = [l for s, l in path if s == step]
        for label in reversed(labels):
            k = path.index((step, label))
            while k + 1 < len(path) and path[k + 1][0] not in stop_at:
                swap(k)
                k += 1

    sweep("S", "S")
    sweep("D", "DS")

    targets = {}
    for pos in range(1, word.n + 1):
        tgt = _border_label_target(word, pos)
        if tgt is not None:
            targets[tgt] = pos

    tiles: List[Tile] = []
    west: Dict[int, List[int]] = {}
    north: Dict[int, List[int]] = {}
    for tid, (kind, idx, center, verts) in enumerate(raw):
        w = idx[0] if kind in (SQUARE, VRHOMBUS) else None
        nstrip = idx[1] if kind in (SQUARE, HRHOMBUS) else None
        if w is not None:
            west.setdefault(w, []).append(tid)
        if nstrip is not None:
            north.setdefault(nstrip, []).append(tid)
        tiles.append(Tile(tid, kind, idx, center, verts, w, nstrip, targets.get((kind, idx))))

    return RhombicDiagram(
        word=word,
        tiles=tuple(tiles),
        west_strips={k: tuple(v) for k, v in sorted(west.items())},
        north_strips={k: tuple(v) for k, v in sorted(north.items())},
    )


def strips_from_geometry(diagram: RhombicDiagram) -> Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]]]:
    """Recover west and north strips from shared edges only.

    West strips glue squares and vertical rhombi along vertical edges, ordered
    right to left; north strips glue squares and horizontal rhombi along
    horizontal edges, ordered bottom to top.
    """

    def edges(tile: Tile, horizontal: bool) -> List[frozenset]:
        v = tile.vertices
        out = []
        for i in range(4):
            p, q = v[i], v[(i + 1) % 4]
            is_h = p[1] == q[1]
            is_v = p[0] == q[0]
            if (horizontal and is_h) or (not horizontal and is_v):
                out.append(frozenset((p, q)))
        return out

    def group(kinds: Tuple[str, ...], horizontal: bool) -> List[List[int]]:
        parent = {t.id: t.id for t in diagram.tiles if t.kind in kinds}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        owner: Dict[frozenset, int] = {}
        for t in diagram.tiles:
            if t.kind not in kinds:
                continue
            for e in edges(t, horizontal):
                if e in owner:
                    parent[find(t.id)] = find(owner[e])
                else:
                    owner[e] = t.id
        groups: Dict[int, List[int]] = {}
        for tid in parent:
            groups.setdefault(find(tid), []).append(tid)
        return list(groups.values())

    by_id = {t.id: t for t in diagram.tiles}
    west = [tuple(sorted(g, key=lambda i: -by_id[i].center[0])) for g in group((SQUARE, VRHOMBUS), False)]
    north = [tuple(sorted(g, key=lambda i: by_id[i].center[1])) for g in group((SQUARE, HRHOMBUS), True)]
    return sorted(west), sorted(north)
