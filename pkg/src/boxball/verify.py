"""Brute-force oracles and fixture checks for the algebraic identities.

The master oracle builds each pair isomorphism independently of the closed
forms: match highest weight elements by weight, then propagate along
lowering edges.  Everything else reduces to exhaustive or seeded-random
domain scans that report the first counterexample instead of raising.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .crystals import (
    ColumnPair,
    RowTableau,
    Shape,
    TensorElement,
    counts_to_row,
    highest_weights,
    is_highest_weight,
    iter_tensor,
    lowering,
    tensor_size,
    weight_of,
)
from .isomorphisms import apply_word, swap_adjacent, swap_pair


@dataclass(frozen=True)
class RelationReport:
    relation: str
    domain: int
    counterexample: str | None
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json_dict(self) -> dict:
        doc = {
            "relation": self.relation,
            "domain": self.domain,
            "result": "pass" if self.passed else "fail",
            "elapsed": round(self.elapsed, 6),
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return doc


@dataclass(frozen=True)
class DecompositionFixture:
    shapes: tuple[Shape, ...]
    n: int
    expected: tuple[tuple[Shape, int], ...]


# ---------------------------------------------------------------------------
# random element helpers (seeded; shared with the test suite)


def random_factor(rng: random.Random, shape: Shape, n: int):
    shape = tuple(shape)
    if shape == (1, 1):
        a, b = sorted(rng.sample(range(1, n + 1), 2))
        return ColumnPair(a, b, n)
    return RowTableau(tuple(sorted(rng.choices(range(1, n + 1), k=shape[0]))), n)


def random_tensor(rng: random.Random, shapes, n: int) -> TensorElement:
    return TensorElement(tuple(random_factor(rng, s, n) for s in shapes))


def random_basic_path(rng: random.Random, n: int, max_len: int = 60, max_balls: int = 25):
    from .dynamics import BasicPath

    length = rng.randint(1, max_len)
    balls = rng.randint(0, min(max_balls, length))
    positions = rng.sample(range(length), balls)
    sites = [1] * length
    for k in positions:
        sites[k] = rng.randint(2, n)
    return BasicPath(tuple(sites), n)


def random_inhom_path(
    rng: random.Random,
    n: int,
    max_sites: int = 14,
    cap_range: tuple[int, int] = (1, 4),
):
    from .dynamics import InhomPath

    sites = []
    for _ in range(rng.randint(1, max_sites)):
        cap = rng.randint(*cap_range)
        counts = [0] * n
        counts[0] = cap
        for _ in range(rng.randint(0, cap)):
            letter = rng.randint(2, n)
            counts[0] -= 1
            counts[letter - 1] += 1
        sites.append(tuple(counts))
    return InhomPath(tuple(sites), n, rng.randint(*cap_range))


# ---------------------------------------------------------------------------
# the master oracle


def isomorphism_table(
    shape_a: Shape, shape_b: Shape, n: int
) -> dict[TensorElement, TensorElement]:
    """Construct the pair isomorphism from crystal structure alone.

    Highest weight elements of equal weight are matched (weights must be
    multiplicity free on both sides), then images propagate along lowering
    edges until the whole domain is covered."""
    left = list(iter_tensor([shape_a, shape_b], n))
    hw_left = [t for t in left if is_highest_weight(t)]
    hw_right: dict[tuple, TensorElement] = {}
    for t in iter_tensor([shape_b, shape_a], n):
        if is_highest_weight(t):
            w = weight_of(t)
            if w in hw_right:
                raise ValueError(f"weight {w} has multiplicity > 1; pair is unsupported")
            hw_right[w] = t
    if len(hw_left) != len(hw_right):
        raise ValueError("highest weight counts differ; pair is unsupported")
    mapping: dict[TensorElement, TensorElement] = {}
    stack = []
    for u in hw_left:
        w = weight_of(u)
        if w not in hw_right:
            raise ValueError(f"no partner of weight {w}")
        mapping[u] = hw_right[w]
        stack.append(u)
    while stack:
        t = stack.pop()
        img = mapping[t]
        for i in range(1, n):
            a = lowering(i, t)
            b = lowering(i, img)
            if (a is None) != (b is None):
                raise ValueError(f"lowering mismatch at {t} / {img}, index {i}")
            if a is None:
                continue
            if a in mapping:
                if mapping[a] != b:
                    raise ValueError(f"inconsistent propagation at {a}")
            else:
                mapping[a] = b
                stack.append(a)
    if len(mapping) != len(left):
        raise ValueError("domain not covered from highest weight elements")
    return mapping


def check_swap_against_oracle(shape_a: Shape, shape_b: Shape, n: int) -> RelationReport:
    """Closed-form swap versus the oracle mapping, on the full pair domain."""
    t0 = time.perf_counter()
    table = isomorphism_table(shape_a, shape_b, n)
    counterexample = None
    for t, expected in table.items():
        res = swap_pair(t.factors[0], t.factors[1])
        got = TensorElement((res.left, res.right))
        if got != expected:
            counterexample = f"{t} -> {got}, oracle says {expected}"
            break
    return RelationReport(
        f"oracle[{shape_a}x{shape_b}, n={n}]",
        len(table),
        counterexample,
        time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# symmetric group relations


def _domain(shapes, n: int, mode: str, seed: int | None, count: int | None):
    if mode == "exhaustive":
        return list(iter_tensor(shapes, n))
    rng = random.Random(seed)
    return [random_tensor(rng, shapes, n) for _ in range(count or 100)]


def check_symmetric_group(
    shapes,
    n: int,
    mode: str = "exhaustive",
    seed: int | None = None,
    count: int | None = None,
) -> RelationReport:
    """Involution, far commutation and braid relation for the swaps."""
    t0 = time.perf_counter()
    elements = _domain(shapes, n, mode, seed, count)
    k = len(tuple(shapes))
    counterexample = None
    for t in elements:
        for i in range(1, k):
            if swap_adjacent(swap_adjacent(t, i), i) != t:
                counterexample = f"swap_{i}^2 != id at {t}"
                break
        if counterexample:
            break
        for i in range(1, k - 1):
            lhs = apply_word(t, [i, i + 1, i])
            rhs = apply_word(t, [i + 1, i, i + 1])
            if lhs != rhs:
                counterexample = f"braid fails at position {i} on {t}: {lhs} vs {rhs}"
                break
        if counterexample:
            break
        for i in range(1, k):
            for j in range(i + 2, k):
                if apply_word(t, [i, j]) != apply_word(t, [j, i]):
                    counterexample = f"far commutation fails at ({i},{j}) on {t}"
                    break
            if counterexample:
                break
        if counterexample:
            break
    label = ",".join(str(tuple(s)) for s in shapes)
    return RelationReport(
        f"symmetric-group[{label}; n={n}; {mode}]",
        len(elements),
        counterexample,
        time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# fixture chains: the two six-step cycles on row x box x column (n=3) and
# their count-vector analogues on row x row x column


def _chain_fixtures_row_box_col(n: int = 3, ell: int = 3):
    from .crystals import box, col, row, tensor, vacuum_row

    u = vacuum_row(ell, n)
    chain1 = [
        tensor(u, box(1, n), col(2, 3, n)),
        tensor(box(1, n), u, col(2, 3, n)),
        tensor(box(1, n), col(1, 2, n), row((1, 1, 3), n)),
        tensor(col(1, 2, n), box(1, n), row((1, 1, 3), n)),
        tensor(col(1, 2, n), u, box(3, n)),
        tensor(u, col(1, 2, n), box(3, n)),
        tensor(u, box(1, n), col(2, 3, n)),
    ]
    chain2 = [
        tensor(u, box(2, n), col(1, 3, n)),
        tensor(box(1, n), row((1, 1, 2), n), col(1, 3, n)),
        tensor(box(1, n), col(2, 3, n), u),
        tensor(col(1, 2, n), box(3, n), u),
        tensor(col(1, 2, n), row((1, 1, 3), n), box(1, n)),
        tensor(u, col(2, 3, n), box(1, n)),
        tensor(u, box(2, n), col(1, 3, n)),
    ]
    return [("chain-1", chain1), ("chain-2", chain2)]


def _chain_fixtures_two_rows_col(l1: int, l2: int, x: int, n: int = 3):
    from .crystals import col, tensor

    def rw(c1, c2, c3):
        return counts_to_row((c1, c2, c3) + (0,) * (n - 3), n)

    chain1 = [
        tensor(rw(l1, 0, 0), rw(l2 - x, x, 0), col(2, 3, n)),
        tensor(rw(l2, 0, 0), rw(l1 - x, x, 0), col(2, 3, n)),
        tensor(rw(l2, 0, 0), col(1, 2, n), rw(l1 - x - 1, x, 1)),
        tensor(col(1, 2, n), rw(l2, 0, 0), rw(l1 - x - 1, x, 1)),
        tensor(col(1, 2, n), rw(l1, 0, 0), rw(l2 - x - 1, x, 1)),
        tensor(rw(l1, 0, 0), col(1, 2, n), rw(l2 - x - 1, x, 1)),
        tensor(rw(l1, 0, 0), rw(l2 - x, x, 0), col(2, 3, n)),
    ]
    chain2 = [
        tensor(rw(l1, 0, 0), rw(l2 - x - 1, x + 1, 0), col(1, 3, n)),
        tensor(rw(l2, 0, 0), rw(l1 - x - 1, x + 1, 0), col(1, 3, n)),
        tensor(rw(l2, 0, 0), col(2, 3, n), rw(l1 - x, x, 0)),
        tensor(col(1, 2, n), rw(l2 - 1, 0, 1), rw(l1 - x, x, 0)),
        tensor(col(1, 2, n), rw(l1 - 1, 0, 1), rw(l2 - x, x, 0)),
        tensor(rw(l1, 0, 0), col(2, 3, n), rw(l2 - x, x, 0)),
        tensor(rw(l1, 0, 0), rw(l2 - x - 1, x + 1, 0), col(1, 3, n)),
    ]
    return [
        (f"count-chain-1[l1={l1},l2={l2},x={x}]", chain1),
        (f"count-chain-2[l1={l1},l2={l2},x={x}]", chain2),
    ]


def check_highest_weight_chains() -> RelationReport:
    """Replay the fixture cycles, asserting every intermediate exactly.

    Each cycle alternates swaps at positions 1 and 2 six times and must
    return to its starting highest weight element."""
    t0 = time.perf_counter()
    fixtures = list(_chain_fixtures_row_box_col())
    for x in (0, 1):
        fixtures.extend(_chain_fixtures_two_rows_col(3, 2, x))
    counterexample = None
    total = 0
    for name, chain in fixtures:
        if not is_highest_weight(chain[0]):
            counterexample = f"{name}: start {chain[0]} is not highest weight"
            break
        cur = chain[0]
        for step in range(6):
            cur = swap_adjacent(cur, 1 if step % 2 == 0 else 2)
            total += 1
            if cur != chain[step + 1]:
                counterexample = (
                    f"{name} step {step + 1}: got {cur}, expected {chain[step + 1]}"
                )
                break
        if counterexample:
            break
    return RelationReport(
        "highest-weight-chains", total, counterexample, time.perf_counter() - t0
    )


# ---------------------------------------------------------------------------
# the two carrier compositions


def composition_words(n_carriers: int, n_boxes: int) -> tuple[list[int], list[int]]:
    """The two swap words that move a row past carriers-then-boxes versus
    boxes-then-carriers; they must agree as maps."""
    N, L = n_carriers, n_boxes
    x: list[int] = []
    for t in range(1, N + 1):
        x.extend(range(L + t - 1, t - 1, -1))
    x.extend(range(N + L, 0, -1))
    y: list[int] = list(range(N + L, 0, -1))
    for t in range(1, N + 1):
        y.extend(range(L + t, t, -1))
    return x, y


def check_carrier_composition(
    ell: int,
    n_carriers: int,
    n_boxes: int,
    n: int,
    mode: str = "exhaustive",
    seed: int | None = None,
    count: int | None = None,
) -> RelationReport:
    t0 = time.perf_counter()
    shapes = [(ell,)] + [(1, 1)] * n_carriers + [(1,)] * n_boxes
    elements = _domain(shapes, n, mode, seed, count)
    word_x, word_y = composition_words(n_carriers, n_boxes)
    counterexample = None
    for t in elements:
        if apply_word(t, word_x) != apply_word(t, word_y):
            counterexample = f"compositions differ on {t}"
            break
    return RelationReport(
        f"carrier-composition[l={ell},N={n_carriers},L={n_boxes},n={n};{mode}]",
        len(elements),
        counterexample,
        time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# decomposition fixtures


def _as_weight(shape: Shape, n: int) -> tuple[int, ...]:
    return tuple(shape) + (0,) * (n - len(shape))


def _valid_partition(shape: Shape, n: int) -> bool:
    return (
        len(shape) <= n
        and all(v > 0 for v in shape)
        and all(a >= b for a, b in zip(shape, shape[1:]))
    )


def row_box_fixture(ell: int, n: int) -> DecompositionFixture:
    expected = [((ell + 1,), 1), ((ell, 1), 1)]
    return DecompositionFixture(
        ((ell,), (1,)), n, tuple((s, m) for s, m in expected if _valid_partition(s, n))
    )


def row_box_col_fixture(ell: int, n: int) -> DecompositionFixture:
    expected = [
        ((ell, 1, 1, 1), 1),
        ((ell, 2, 1), 1),
        ((ell + 1, 2), 1),
        ((ell + 2, 1), 1),
        ((ell + 1, 1, 1), 2),
    ]
    return DecompositionFixture(
        ((ell,), (1,), (1, 1)),
        n,
        tuple((s, m) for s, m in expected if _valid_partition(s, n)),
    )


def two_rows_col_fixture(l1: int, l2: int, n: int) -> DecompositionFixture:
    expected: list[tuple[Shape, int]] = []
    for x in range(1, l2 + 1):
        expected.append(((l1 + l2 - x, x, 1, 1), 1))
    for x in range(0, l2 + 1):
        expected.append(((l1 + l2 - x + 1, x + 1), 1))
    for x in range(0, l2):
        expected.append(((l1 + l2 - x, x + 1, 1), 2))
    expected.append(((l1, l2 + 1, 1), 1))
    return DecompositionFixture(
        ((l1,), (l2,), (1, 1)),
        n,
        tuple((s, m) for s, m in expected if _valid_partition(s, n)),
    )


def check_decomposition(fixture: DecompositionFixture) -> RelationReport:
    """Highest-weight weight multiset versus the fixture's summand list."""
    t0 = time.perf_counter()
    grouped = highest_weights(fixture.shapes, fixture.n)
    got = {w: len(elems) for w, elems in grouped.items()}
    expected = {_as_weight(s, fixture.n): m for s, m in fixture.expected}
    counterexample = None
    if got != expected:
        missing = {w: m for w, m in expected.items() if got.get(w) != m}
        extra = {w: m for w, m in got.items() if expected.get(w) != m}
        counterexample = f"expected {missing}, found {extra}"
    label = "x".join(str(tuple(s)) for s in fixture.shapes)
    return RelationReport(
        f"decomposition[{label}, n={fixture.n}]",
        tensor_size(fixture.shapes, fixture.n),
        counterexample,
        time.perf_counter() - t0,
    )


def standard_decomposition_fixtures() -> list[DecompositionFixture]:
    return [
        row_box_fixture(2, 3),
        row_box_col_fixture(3, 5),
        row_box_col_fixture(3, 3),
        two_rows_col_fixture(3, 2, 5),
        two_rows_col_fixture(3, 2, 3),
        two_rows_col_fixture(2, 2, 3),
    ]
