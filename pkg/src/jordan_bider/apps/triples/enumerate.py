"""
Brute-force enumeration of triple homomorphisms between algebras over
the same prime field.

Candidates are all p^(n1 * n2) matrices, visited in lexicographic order
of the flattened images (row i is f(e_i)). The search is sharded on the
first entry; shards run in worker processes when asked and are merged
back in shard order, so the result never depends on the worker count.
Workers get plain integer tables because field elements do not pickle.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, product
from typing import NamedTuple

from tqdm import tqdm

from ...internal.console import status
from ...internal.errors import BudgetExceeded, InputError
from ...internal.settings import settings
from ..algebras.models import JordanAlgebra
from ..algebras.operations import is_perfect, second_derived
from ..linalg.maps import LinearMap
from .analysis import is_triple_hom, triple_hom_report
from .models import SignCounts, SweepReport, TripleHom

IntTable = tuple[tuple[tuple[int, ...], ...], ...]


class SearchPayload(NamedTuple):
    p: int
    n1: int
    n2: int
    # coordinates of (e_x o e_y) o e_z in J1, indexed [x][y][z]
    triples: tuple[tuple[tuple[tuple[int, ...], ...], ...], ...]
    target: IntTable


def _int_table(j: JordanAlgebra) -> IntTable:
    return tuple(tuple(tuple(int(c) for c in entry) for entry in row) for row in j.table)


def _multiply(table: IntTable, u: tuple[int, ...], v: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * len(table)
    for i, a in enumerate(u):
        if not a:
            continue
        row = table[i]
        for x, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for k, c in enumerate(row[x]):
                if c:
                    out[k] += ab * c
    return tuple(value % p for value in out)


def _payload(j1: JordanAlgebra, j2: JordanAlgebra) -> SearchPayload:
    assert j1.field.p is not None
    p = j1.field.p
    source = _int_table(j1)
    n1 = j1.dim
    units = [tuple(int(k == z) for k in range(n1)) for z in range(n1)]
    triples = tuple(
        tuple(
            tuple(_multiply(source, source[x][y], units[z], p) for z in range(n1))
            for y in range(n1)
        )
        for x in range(n1)
    )
    return SearchPayload(p=p, n1=n1, n2=j2.dim, triples=triples, target=_int_table(j2))


def _passes(payload: SearchPayload, flat: tuple[int, ...]) -> bool:
    p, n1, n2 = payload.p, payload.n1, payload.n2
    images = [flat[i * n2 : (i + 1) * n2] for i in range(n1)]
    pairs = [
        [_multiply(payload.target, images[x], images[y], p) for y in range(n1)]
        for x in range(n1)
    ]
    for x, y, z in product(range(n1), repeat=3):
        lhs = [0] * n2
        for t, c in enumerate(payload.triples[x][y][z]):
            if c:
                for k, a in enumerate(images[t]):
                    lhs[k] += c * a
        rhs = _multiply(payload.target, pairs[x][y], images[z], p)
        if tuple(value % p for value in lhs) != rhs:
            return False
    return True


def scan_shard(payload: SearchPayload, first: int) -> list[tuple[int, ...]]:
    """
    Every passing candidate whose first entry is ``first``, in order.
    """
    rest = payload.n1 * payload.n2 - 1
    return [
        (first, *tail)
        for tail in product(range(payload.p), repeat=rest)
        if _passes(payload, (first, *tail))
    ]


def _scan_shard_args(args: tuple[SearchPayload, int]) -> list[tuple[int, ...]]:
    return scan_shard(*args)


def _check_fields(j1: JordanAlgebra, j2: JordanAlgebra) -> None:
    if not j1.field.is_prime or j1.field != j2.field:
        raise InputError(
            f"enumeration needs both algebras over one prime field, got {j1.field.label} and {j2.field.label}"
        )


def enumerate_triple_homs(
    j1: JordanAlgebra,
    j2: JordanAlgebra,
    budget: int | None = None,
    workers: int = 1,
    quiet: bool = True,
) -> list[TripleHom]:
    _check_fields(j1, j2)
    budget = budget if budget is not None else settings.enumeration_budget
    p = j1.field.p
    assert p is not None
    entries = j1.dim * j2.dim
    estimate = p**entries
    if estimate > budget:
        raise BudgetExceeded(estimate, budget)
    status(f"checking {estimate} candidate maps of dimension {j1.dim} -> {j2.dim} over {j1.field.label}", quiet)

    field = j1.field
    if entries == 0:
        zero = LinearMap.zero(field, j1.dim, j2.dim)
        return [TripleHom(source=j1, target=j2, f=zero)]

    payload = _payload(j1, j2)
    shards = [(payload, first) for first in range(p)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(
                tqdm(executor.map(_scan_shard_args, shards), total=p, disable=quiet)
            )
    else:
        results = [_scan_shard_args(shard) for shard in tqdm(shards, disable=quiet)]

    found = []
    for shard in results:
        for flat in shard:
            f = LinearMap.from_flat(field, j1.dim, j2.dim, [field.scalar(a) for a in flat])
            found.append(TripleHom(source=j1, target=j2, f=f))
    status(f"found {len(found)} triple homomorphisms", quiet)
    return found


def sweep_triple_homs(
    j1: JordanAlgebra,
    j2: JordanAlgebra,
    budget: int | None = None,
    workers: int = 1,
    quiet: bool = True,
) -> SweepReport:
    """
    Classify every triple hom J1 -> J2 and collect the maps that meet the
    perfect / zero-annihilator hypotheses without a global sign.
    """
    homs = enumerate_triple_homs(j1, j2, budget=budget, workers=workers, quiet=quiet)
    reports = [triple_hom_report(j1, j2, h.f) for h in homs]
    perfect = is_perfect(j1)

    signs = Counter(r.sign.sign for r in reports)
    under = [r for r in reports if r.hypotheses_hold]
    signs_under = Counter(r.sign.sign for r in under)

    second = second_derived(j1)
    target_second = second_derived(j2)
    images_inside = all(
        target_second.contains(h.f.apply(b)) for h in homs for b in second.basis
    )
    classes: dict[tuple, list[LinearMap]] = defaultdict(list)
    for h in homs:
        classes[tuple(h.f.apply(b) for b in second.basis)].append(h.f)
    differences_triple = True
    for members in classes.values():
        for f1, f2 in combinations(members, 2):
            difference = f1.subtract(f2)
            if not is_triple_hom(j1, j2, difference).holds:
                differences_triple = False

    special_only_zero = None
    if perfect:
        special_only_zero = all(h.f.is_zero for h, r in zip(homs, reports) if r.special)

    return SweepReport(
        source_name=j1.name,
        target_name=j2.name,
        field_label=j1.field.label,
        source_perfect=perfect,
        total=len(homs),
        maps=tuple(h.f for h in homs),
        meeting_hypotheses=len(under),
        signs=SignCounts(**{str(k): v for k, v in signs.items()}),
        signs_under_hypotheses=SignCounts(**{str(k): v for k, v in signs_under.items()}),
        homomorphisms=sum(r.is_hom for r in reports),
        counterexamples=tuple(h.f for h, r in zip(homs, reports) if r.counterexample),
        sign_matches_hom=all(r.sign_matches_hom for r in reports),
        squared_identity_holds=all(r.squared_identity for r in under),
        special_only_zero=special_only_zero,
        images_in_second_derived=images_inside,
        differences_triple=differences_triple,
        restriction_classes=len(classes),
    )
