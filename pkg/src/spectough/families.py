"""Textual family specs shared by the CLI subcommands.

Grammar (params after a colon):

    petersen
    complete:N        cycle:N        path:N          (N may be a range A..B)
    complete_multipartite:N1,N2,...
    gnp:N,P           (seed supplied separately; count gives a batch)
    kss1:S            (complete bipartite with parts S and S+1; S may be A..B)
"""

from __future__ import annotations

from typing import Iterator

from .graphs import (Graph, SplitMix64, complete, complete_multipartite,
                     cycle, gnp, path, petersen)


def _int_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def generate_family(spec: str, seed: int = 0, count: int = 1) -> Iterator[Graph]:
    """Yield the graphs described by one family spec string."""
    name, _, params = spec.partition(":")
    name = name.strip().lower()
    if name == "petersen":
        yield petersen()
        return
    if name in ("complete", "cycle", "path"):
        maker = {"complete": complete, "cycle": cycle, "path": path}[name]
        for n in _int_range(params):
            yield maker(n)
        return
    if name == "complete_multipartite":
        sizes = [int(x) for x in params.split(",") if x.strip()]
        yield complete_multipartite(sizes)
        return
    if name == "kss1":
        for s in _int_range(params):
            yield complete_multipartite([s, s + 1])
        return
    if name == "gnp":
        parts = params.split(",")
        if len(parts) != 2:
            raise ValueError("gnp spec needs gnp:N,P")
        n, p = int(parts[0]), float(parts[1])
        seeder = SplitMix64(seed)
        for _ in range(count):
            yield gnp(n, p, seeder.next_u64())
        return
    raise ValueError(f"unknown family {name!r}")
