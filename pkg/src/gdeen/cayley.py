"""Brute-force ground truth: group enumeration and Cayley-graph geodesics.

The table is built by breadth-first search from the identity under *left*
multiplication by the positive generating alphabet (no inverses), so
``dist[g]`` is the minimal number of letters whose product is g.  This is
the oracle against which the normal-form lengths are certified.

Elements are stored in canonical order, lexicographic on (perm, exps), so
indices are reproducible across runs.  Tables can be persisted to a small
binary cache; the cache is an optimization only, never an oracle.
"""

from __future__ import annotations

import struct
from collections import deque
from dataclasses import dataclass

from .errors import BadFormat, EnumerationTooLarge, NotInGroup
from .group import GroupElement, Params, identity, mul
from .words import Sym, alphabet, generator

__all__ = [
    "GroupTable",
    "enumerate_group",
    "geodesic_distance",
    "regular_representation",
    "save_table",
    "load_table",
]

DEFAULT_CAP = 10**6

_CACHE_MAGIC = b"GDEENTBL"
_CACHE_VERSION = 1


@dataclass(frozen=True)
class GroupTable:
    params: Params
    elements: tuple[GroupElement, ...]
    index: dict[GroupElement, int]
    dist: tuple[int, ...]

    def __len__(self):
        return len(self.elements)


def enumerate_group(params: Params, cap: int = DEFAULT_CAP) -> GroupTable:
    order = params.order()
    if order > cap:
        raise EnumerationTooLarge(
            f"|G({params.de},{params.e},{params.n})| = {order} exceeds cap {cap}"
        )
    gens = [generator(params, sym) for sym in alphabet(params)]
    start = identity(params)
    dist_map: dict[GroupElement, int] = {start: 0}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        dg = dist_map[g]
        for x in gens:
            h = mul(x, g)
            if h not in dist_map:
                dist_map[h] = dg + 1
                queue.append(h)
    assert len(dist_map) == order, "alphabet failed to generate the predicted group"
    elements = tuple(sorted(dist_map, key=lambda g: (g.perm, g.exps)))
    index = {g: i for i, g in enumerate(elements)}
    dist = tuple(dist_map[g] for g in elements)
    return GroupTable(params, elements, index, dist)


def geodesic_distance(table: GroupTable, g: GroupElement) -> int:
    try:
        return table.dist[table.index[g]]
    except KeyError:
        raise NotInGroup(f"{g} is not in the table for {table.params}") from None


def regular_representation(table: GroupTable, sym: Sym) -> list[int]:
    """Left translation by one generator as a permutation of table indices.

    Position i maps to index(x * elements[i]); composing the permutation
    for t1 and then the one for t0 therefore gives the permutation of the
    product t0*t1.
    """
    x = generator(table.params, sym)
    return [table.index[mul(x, g)] for g in table.elements]


def save_table(table: GroupTable, path) -> None:
    """Persist a table: magic, format version, (d, e, n), then per element
    the permutation, exponents and BFS distance as u32 fields."""
    p = table.params
    with open(path, "wb") as fh:
        fh.write(_CACHE_MAGIC)
        fh.write(struct.pack("<5I", _CACHE_VERSION, p.d, p.e, p.n, len(table)))
        for g, dist in zip(table.elements, table.dist):
            fh.write(struct.pack(f"<{2 * p.n + 1}I", *g.perm, *g.exps, dist))


def load_table(path, params: Params | None = None) -> GroupTable:
    """Load a cached table; validates header, version and, when given,
    the expected parameters."""
    with open(path, "rb") as fh:
        if fh.read(8) != _CACHE_MAGIC:
            raise BadFormat("not a gdeen table cache (bad magic)")
        version, d, e, n, count = struct.unpack("<5I", fh.read(20))
        if version != _CACHE_VERSION:
            raise BadFormat(f"unsupported table cache version {version}")
        p = Params(d, e, n)
        if params is not None and p != params:
            raise BadFormat(f"cache holds {p}, expected {params}")
        if count != p.order():
            raise BadFormat("cache element count does not match the group order")
        elements = []
        dist = []
        row = struct.Struct(f"<{2 * n + 1}I")
        for _ in range(count):
            vals = row.unpack(fh.read(row.size))
            elements.append(GroupElement(p, tuple(vals[:n]), tuple(vals[n : 2 * n])))
            dist.append(vals[2 * n])
    index = {g: i for i, g in enumerate(elements)}
    return GroupTable(p, tuple(elements), index, tuple(dist))
