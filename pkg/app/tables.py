"""Transcribed epsilon-step rows for the fixed reduced word of w0.

Rows are grouped by block in the order the reflections act: the block of
s_l comes first and block (i+1, i) lists the steps through s_i read right
to left.  Entries are weights in fundamental-weight coordinates.
"""
from typing import Dict, List, Tuple

from app.root_data import RootSystemData, Weight

Block = Tuple[Weight, ...]


def _w(rank: int, terms: Dict[int, int]) -> Weight:
    vec = [0] * rank
    for i, c in terms.items():
        vec[i - 1] += c
    return tuple(vec)


def _a_block(rank: int, l: int, i: int) -> Block:
    rows = []
    for m in range(l, l - i, -1):
        rows.append(_w(rank, {m: -1}) if m == l else _w(rank, {m: -1, m + 1: 1}))
    return tuple(rows)


def _d_block(rank: int, l: int, i: int) -> Block:
    if i == 1:
        return (_w(rank, {l: -1}),)
    if i == 2:
        return (_w(rank, {l - 1: -1}),)
    rows = []
    start = l + 1 - i
    for m in range(start, l):
        rows.append(_w(rank, {m: -1}) if m == start else _w(rank, {m: -1, m - 1: 1}))
    rows.append(_w(rank, {l: -1}))
    rows.append(_w(rank, {l - 2: -1, l - 1: 1, l: 1}))
    for m in range(l - 3, start - 1, -1):
        rows.append(_w(rank, {m: -1, m + 1: 1}))
    return tuple(rows)


_E6_BLOCK = [
    {1: -1}, {2: -1, 1: 1}, {3: -1, 2: 1}, {5: -1, 3: 1}, {6: -1, 5: 1},
    {4: -1}, {3: -1, 4: 1}, {5: -1, 3: 1, 6: 1}, {2: -1}, {3: -1, 2: 1, 5: 1},
    {1: -1}, {2: -1, 1: 1, 3: 1}, {4: -1}, {3: -1, 2: 1, 4: 1}, {5: -1, 3: 1},
    {6: -1, 5: 1},
]

_E7_BLOCK = [
    {7: -1}, {6: -1, 7: 1}, {5: -1, 6: 1}, {3: -1, 5: 1}, {2: -1, 3: 1},
    {4: -1}, {3: -1, 2: 1, 4: 1}, {5: -1, 3: 1}, {6: -1, 5: 1}, {7: -1, 6: 1},
    {1: -1}, {2: -1, 1: 1}, {3: -1, 2: 1}, {5: -1, 3: 1}, {6: -1, 5: 1, 7: 1},
    {4: -1}, {3: -1, 4: 1}, {5: -1, 3: 1, 6: 1}, {2: -1}, {3: -1, 2: 1, 5: 1},
    {1: -1}, {2: -1, 1: 1, 3: 1}, {4: -1}, {3: -1, 2: 1, 4: 1}, {5: -1, 3: 1},
    {6: -1, 5: 1}, {7: -1, 6: 1},
]


def _e8_block() -> List[Dict[int, int]]:
    first = [dict(t) for t in _E7_BLOCK]
    first[0] = {7: -1, 8: 1}
    second = [dict(t) for t in _E7_BLOCK]
    second[9] = {7: -1, 6: 1, 8: 1}
    return [{8: -1}] + first + [{8: -1, 7: 1}] + second + [{8: -1, 7: 1}]


def strict_steps(rs: RootSystemData) -> List[Block]:
    """Blocks in application order for (s + rho, theta) < p"""
    l = rs.rank
    if rs.kind == "A":
        return [_a_block(l, l, i) for i in range(l, 0, -1)]
    if rs.kind == "D":
        return [_d_block(l, l, i) for i in range(l, 0, -1)]
    blocks = [_d_block(l, 5, i) for i in range(5, 0, -1)]
    extra = [_E6_BLOCK]
    if l >= 7:
        extra.insert(0, _E7_BLOCK)
    if l == 8:
        extra.insert(0, _e8_block())
    return [tuple(_w(l, t) for t in rows) for rows in extra] + blocks


def wall_substitutions(rs: RootSystemData) -> Dict[int, Dict[int, int]]:
    """Chain position -> correction added to the strict entry on the wall (s + rho, theta) = p"""
    l = rs.rank
    if rs.kind == "A":
        subs = {l - 1: {1: -1}}
        if l >= 2:
            subs[2 * l - 2] = {1: 1}
        return subs
    if rs.kind == "D":
        return {2 * l - 3: {1: -1}, 2 * l - 2: {1: 1}}
    return {
        6: {15: {6: -1}, 20: {6: 1}},
        7: {26: {7: -1}, 31: {7: 1}},
        8: {28: {8: -1}, 29: {8: 1}},
    }[l]


def expected_steps(rs: RootSystemData, wall: bool = False) -> List[Block]:
    blocks = strict_steps(rs)
    if not wall:
        return blocks
    subs = wall_substitutions(rs)
    out, position = [], 0
    for block in blocks:
        rows = []
        for entry in block:
            correction = subs.get(position)
            if correction:
                entry = tuple(a + b for a, b in zip(entry, _w(rs.rank, correction)))
            rows.append(entry)
            position += 1
        out.append(tuple(rows))
    return out


def format_step(vec) -> str:
    """-w1+w2 style rendering; the zero weight is 0"""
    terms = []
    for i, c in enumerate(vec, start=1):
        if c:
            size = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{'+' if c > 0 else '-'}{size}w{i}")
    return "".join(terms) or "0"


def dump_steps(rs: RootSystemData, blocks: List[Block]) -> str:
    """One line per block: the reflections in acting order, then the steps"""
    letters = [tuple(reversed(b)) for b in reversed(rs.blocks)]
    lines = [
        " ".join(map(str, word)) + ": " + ", ".join(format_step(e) for e in block)
        for word, block in zip(letters, blocks)
    ]
    return "\n".join(lines)
