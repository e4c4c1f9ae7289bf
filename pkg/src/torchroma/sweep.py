"""Oracle-versus-solver sweep over every class of bounded order."""

from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .chroma_oracle import classify
from .lattice_canon import enumerate_order
from .solver import SolveBudget, chromatic_number_exact
from .torus_graph import TorusParams, build_graph, classify_edges


@dataclass(frozen=True)
class ClassResult:
    params: TorusParams
    oracle: Optional[int]
    exact: Optional[int]

    @property
    def ok(self) -> bool:
        return self.oracle == self.exact


@dataclass
class SweepReport:
    max_n: int
    results: List[ClassResult] = field(default_factory=list)

    @property
    def mismatches(self) -> List[ClassResult]:
        return [c for c in self.results if not c.ok]

    def counts(self) -> Dict[int, Counter]:
        table: Dict[int, Counter] = defaultdict(Counter)
        for c in self.results:
            table[c.params.n]["loops" if c.exact is None else c.exact] += 1
        return table

    def table(self) -> str:
        cols = ["loops", 3, 4, 5, 6, 7]
        lines = ["   n " + "".join(f"{str(c):>7}" for c in cols)]
        for n, row in sorted(self.counts().items()):
            lines.append(f"{n:4d} " + "".join(f"{row.get(c, 0):7d}" for c in cols))
        return "\n".join(lines)


def check_class(p: TorusParams, budget: Optional[SolveBudget] = None) -> ClassResult:
    verdict = classify(p)
    g = build_graph(p)
    if classify_edges(g).has_loops:
        return ClassResult(p, verdict.chi, None)
    return ClassResult(p, verdict.chi, chromatic_number_exact(g, budget))


def _check(args: Tuple[TorusParams, Optional[SolveBudget]]) -> ClassResult:
    return check_class(*args)


def verify_sweep(max_n: int, budget: Optional[SolveBudget] = None, jobs: int = 1) -> SweepReport:
    """Compare the classification with the exact solver on every class of order <= max_n.

    Raises ``BudgetExceeded`` if any single decision runs out of budget.
    """
    if max_n < 1:
        raise ValueError("max_n must be positive")
    classes = [p for n in range(1, max_n + 1) for p in enumerate_order(n)]
    work = [(p, budget) for p in classes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check, work, chunksize=8))
    else:
        results = [_check(w) for w in work]
    results.sort(key=lambda c: (c.params.n, c.params))
    return SweepReport(max_n, results)
