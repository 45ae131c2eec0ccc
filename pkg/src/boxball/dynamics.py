"""Automaton states and their time evolutions.

A state is a half-infinite array of boxes holding letters; only a finite
prefix is stored and the implicit tail is vacuum.  Evolutions are carrier
sweeps: a row carrier of some capacity gives the time evolution, and the
two-slot column carrier (seeded with a 2) gives the decoding pass that
removes one letter per sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .crystals import ColumnPair, CountVector
from .isomorphisms import (
    box_col_core,
    col_box_core,
    col_row_core,
    combinatorial_r,
    row_box_core,
    row_col_core,
)


class InvalidWordError(ValueError):
    """The (monochrome path, word) pair is not the image of any decoding."""


def _parse_letter(ch: str, pos: int) -> int:
    if ch == ".":
        return 1
    if ch.isdigit() and ch != "0" and ch != "1":
        return int(ch)
    raise ValueError(f"bad path character {ch!r} at position {pos}")


@dataclass(frozen=True)
class BasicPath:
    """Capacity-one boxes; letter 1 is empty.  Trailing vacuum is trimmed."""

    sites: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.n}")
        if any(not 1 <= v <= self.n for v in self.sites):
            raise ValueError(f"letters must lie in 1..{self.n}: {self.sites}")
        k = len(self.sites)
        while k > 0 and self.sites[k - 1] == 1:
            k -= 1
        if k != len(self.sites):
            object.__setattr__(self, "sites", self.sites[:k])

    @classmethod
    def from_string(cls, text: str, n: int | None = None) -> "BasicPath":
        sites = tuple(_parse_letter(c, k + 1) for k, c in enumerate(text))
        if n is None:
            n = max([2, *sites])
        return cls(sites, n)

    def render(self, width: int | None = None) -> str:
        body = "".join("." if v == 1 else str(v) for v in self.sites)
        if width is not None and width > len(body):
            body += "." * (width - len(body))
        return body

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class InhomPath:
    """Boxes of varying capacities; site i is a count vector summing to its
    capacity.  Boxes beyond the prefix all have `tail_capacity`."""

    sites: tuple[CountVector, ...]
    n: int
    tail_capacity: int = 1

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.n}")
        if self.tail_capacity < 1:
            raise ValueError("tail capacity must be >= 1")
        sites = tuple(tuple(c) for c in self.sites)
        for k, c in enumerate(sites):
            if len(c) != self.n or any(v < 0 for v in c) or sum(c) < 1:
                raise ValueError(f"bad count vector at site {k + 1}: {c}")
        k = len(sites)
        vac = _vacuum_counts(self.tail_capacity, self.n)
        while k > 0 and sites[k - 1] == vac:
            k -= 1
        object.__setattr__(self, "sites", sites[:k])

    @property
    def capacities(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.sites)

    def render(self) -> str:
        return "".join("[" + ",".join(str(v) for v in c) + "]" for c in self.sites)

    def __str__(self) -> str:
        return self.render()


Path = Union[BasicPath, InhomPath]


def _vacuum_counts(capacity: int, n: int) -> CountVector:
    return (capacity,) + (0,) * (n - 1)


def _counts_to_entries(counts: CountVector) -> tuple[int, ...]:
    out = []
    for letter, c in enumerate(counts, start=1):
        out.extend([letter] * c)
    return tuple(out)


def _entries_to_counts(entries: tuple[int, ...], n: int) -> CountVector:
    out = [0] * n
    for v in entries:
        out[v - 1] += 1
    return tuple(out)


def _is_vacuum(counts: CountVector) -> bool:
    return all(v == 0 for v in counts[1:])


def front(p: Path) -> int:
    """1-based position of the rightmost non-vacuum box; 0 for vacuum paths."""
    if isinstance(p, BasicPath):
        return len(p.sites)
    for k in range(len(p.sites), 0, -1):
        if not _is_vacuum(p.sites[k - 1]):
            return k
    return 0


def ball_count(p: Path) -> int:
    if isinstance(p, BasicPath):
        return sum(1 for v in p.sites if v >= 2)
    return sum(sum(c[1:]) for c in p.sites)


def initial_carrier(n: int) -> ColumnPair:
    """The decoding carrier in its seeded state."""
    return ColumnPair(1, 2, n)


@dataclass(frozen=True)
class TraceStep:
    site: int
    tag: str
    carrier_before: tuple
    carrier_after: tuple
    site_before: object
    site_after: object


@dataclass(frozen=True)
class EvolutionTrace:
    before: Path
    after: Path
    steps: tuple[TraceStep, ...] = field(default=())


def replay_trace(trace: EvolutionTrace) -> Path:
    """Rebuild the output path from the recorded per-site results."""
    after = [s.site_after for s in trace.steps]
    if isinstance(trace.before, BasicPath):
        return BasicPath(tuple(after), trace.before.n)
    return InhomPath(tuple(after), trace.before.n, trace.before.tail_capacity)


# ---------------------------------------------------------------------------
# the letter-moving evolution on basic paths


def move_letter(p: BasicPath, letter: int) -> BasicPath:
    """Move every box holding `letter` once, leftmost first, each to its
    nearest empty box on the right; boxes already moved stay frozen."""
    if not 2 <= letter <= p.n:
        raise ValueError(f"letter must lie in 2..{p.n}, got {letter}")
    sites = list(p.sites)
    positions = [k for k, v in enumerate(sites) if v == letter]
    for pos in positions:
        j = pos + 1
        while j < len(sites) and sites[j] != 1:
            j += 1
        if j == len(sites):
            sites.append(letter)
        else:
            sites[j] = letter
        sites[pos] = 1
    return BasicPath(tuple(sites), p.n)


def time_evolution(p: BasicPath) -> BasicPath:
    """One time step: move colours from the largest letter down to 2."""
    for letter in range(p.n, 1, -1):
        p = move_letter(p, letter)
    return p


# ---------------------------------------------------------------------------
# carrier sweeps


def carrier_evolution(p: Path, capacity: int | None = None, want_trace: bool = False):
    """Sweep a row carrier of the given capacity across the path.

    `capacity=None` means unbounded, realized as the total ball count
    (beyond which the evolution is stable).  Returns the new path, or
    (path, trace) when tracing.
    """
    if capacity is not None and capacity < 1:
        raise ValueError("carrier capacity must be >= 1")
    cap = capacity if capacity is not None else max(1, ball_count(p))
    steps: list[TraceStep] = []
    if isinstance(p, BasicPath):
        carrier = (1,) * cap
        out = []
        sweep = list(p.sites)
        guard = len(p.sites) + ball_count(p) + 2
        k = 0
        while k < len(sweep) or any(v != 1 for v in carrier):
            site = sweep[k] if k < len(sweep) else 1
            emitted, new_carrier, tag = row_box_core(carrier, site)
            out.append(emitted)
            if want_trace:
                steps.append(TraceStep(k + 1, tag, carrier, new_carrier, site, emitted))
            carrier = new_carrier
            k += 1
            if k > guard:
                raise RuntimeError("carrier sweep failed to unload; this is a bug")
        result: Path = BasicPath(tuple(out), p.n)
    else:
        carrier = _vacuum_counts(cap, p.n)
        vac = _vacuum_counts(p.tail_capacity, p.n)
        out = []
        guard = len(p.sites) + ball_count(p) + 2
        k = 0
        while k < len(p.sites) or not _is_vacuum(carrier):
            site = p.sites[k] if k < len(p.sites) else vac
            new_site, new_carrier = combinatorial_r(carrier, site)
            out.append(new_site)
            if want_trace:
                steps.append(TraceStep(k + 1, "R", carrier, new_carrier, site, new_site))
            carrier = new_carrier
            k += 1
            if k > guard:
                raise RuntimeError("carrier sweep failed to unload; this is a bug")
        result = InhomPath(tuple(out), p.n, p.tail_capacity)
    if want_trace:
        return result, EvolutionTrace(p, result, tuple(steps))
    return result


def decoding_pass(p: Path, want_trace: bool = False):
    """One pass of the decoding carrier; returns (path, outgoing carrier).

    The carrier starts as (1,2), deposits its 2 somewhere, and leaves with
    the removed letter in its bottom slot.  Beyond the front the carrier
    is inert, so the sweep stops at most one box past it.
    """
    steps: list[TraceStep] = []
    top, bottom = 1, 2
    if isinstance(p, BasicPath):
        out = []
        for k, site in enumerate(p.sites):
            emitted, t2, b2, tag = col_box_core(top, bottom, site)
            out.append(emitted)
            if want_trace:
                steps.append(TraceStep(k + 1, tag, (top, bottom), (t2, b2), site, emitted))
            top, bottom = t2, b2
        k = len(p.sites)
        while top != 1:
            emitted, t2, b2, tag = col_box_core(top, bottom, 1)
            out.append(emitted)
            if want_trace:
                steps.append(TraceStep(k + 1, tag, (top, bottom), (t2, b2), 1, emitted))
            top, bottom = t2, b2
            k += 1
            if k > len(p.sites) + 1:
                raise RuntimeError("decoding carrier failed to settle; this is a bug")
        result: Path = BasicPath(tuple(out), p.n)
    else:
        out = []
        vac = _vacuum_counts(p.tail_capacity, p.n)
        k = 0
        while k < len(p.sites) or top != 1:
            counts = p.sites[k] if k < len(p.sites) else vac
            entries = _counts_to_entries(counts)
            new_entries, t2, b2, tag = col_row_core(top, bottom, entries)
            new_counts = _entries_to_counts(new_entries, p.n)
            out.append(new_counts)
            if want_trace:
                steps.append(
                    TraceStep(k + 1, tag, (top, bottom), (t2, b2), counts, new_counts)
                )
            top, bottom = t2, b2
            k += 1
            if k > len(p.sites) + 1:
                raise RuntimeError("decoding carrier failed to settle; this is a bug")
        result = InhomPath(tuple(out), p.n, p.tail_capacity)
    carrier = ColumnPair(1, bottom, p.n)
    if want_trace:
        return result, carrier, EvolutionTrace(p, result, tuple(steps))
    return result, carrier


def encoding_pass(p: Path, removed_letter: int) -> Path:
    """Inverse of `decoding_pass`: push the carrier (1, letter) back through
    the path right to left.  The carrier must emerge at the left end in its
    seeded state (1,2); otherwise the pair is not decodable and the call
    raises InvalidWordError."""
    if not 2 <= removed_letter <= p.n:
        raise InvalidWordError(f"word letters must lie in 2..{p.n}, got {removed_letter}")
    top, bottom = 1, removed_letter
    if isinstance(p, BasicPath):
        out = []
        for site in reversed(p.sites):
            t2, b2, orig, _ = box_col_core(site, top, bottom)
            out.append(orig)
            top, bottom = t2, b2
        if (top, bottom) != (1, 2):
            raise InvalidWordError(
                f"carrier emerged as ({top},{bottom}), not (1,2); word is not decodable"
            )
        return BasicPath(tuple(reversed(out)), p.n)
    out = []
    for counts in reversed(p.sites):
        entries = _counts_to_entries(counts)
        t2, b2, orig_entries, _ = row_col_core(entries, top, bottom)
        out.append(_entries_to_counts(orig_entries, p.n))
        top, bottom = t2, b2
    if (top, bottom) != (1, 2):
        raise InvalidWordError(
            f"carrier emerged as ({top},{bottom}), not (1,2); word is not decodable"
        )
    return InhomPath(tuple(reversed(out)), p.n, p.tail_capacity)
