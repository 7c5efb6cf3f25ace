"""Seed mutation and rank-2 cluster sequences.

A seed is a skew-symmetric integer exchange matrix together with a cluster
of Laurent polynomials written in the initial variables.  Because every
mutation step constructs the new cluster entry through exact division, the
Laurent property is checked as a by-product: if the division ever fails,
that failure is surfaced, never absorbed.

The rank-2 recurrence engine is deliberately independent of the general
mutation engine; their agreement for b = c = 2 is itself a test.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .laurent import LaurentPoly, NotLaurentError, default_variables, laurent_gens

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Seed:
    """Exchange matrix + cluster, immutable; mutation returns a new seed."""

    matrix: Matrix
    cluster: tuple[LaurentPoly, ...]

    def __post_init__(self):
        n = len(self.cluster)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("exchange matrix shape does not match cluster size")
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != -self.matrix[j][i]:
                    raise ValueError(
                        f"matrix is not skew-symmetric at ({i}, {j})"
                    )
        vars0 = self.cluster[0].variables if n else ()
        if any(x.variables != vars0 for x in self.cluster):
            raise ValueError("cluster entries use different variable lists")

    @property
    def rank(self) -> int:
        return len(self.cluster)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.cluster[0].variables

    @classmethod
    def initial(cls, matrix) -> Seed:
        """The seed whose cluster is the initial variables x1..xn."""
        matrix = tuple(tuple(int(v) for v in row) for row in matrix)
        names = default_variables(len(matrix))
        return cls(matrix, laurent_gens(names))

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "B": [list(row) for row in self.matrix],
            "cluster": [str(x) for x in self.cluster],
        }

    @classmethod
    def from_json(cls, data: dict) -> Seed:
        from .laurent import parse_laurent

        rank = int(data["rank"])
        names = tuple(data.get("vars", default_variables(rank)))
        matrix = tuple(tuple(int(v) for v in row) for row in data["B"])
        cluster = tuple(parse_laurent(text, names) for text in data["cluster"])
        return cls(matrix, cluster)


def mutate_seed(seed: Seed, k: int) -> Seed:
    """Mutate in direction k (1-based).

    The new k-th cluster entry is the exchange binomial divided exactly by
    the old entry; the matrix transforms by the standard rule.  A failed
    division propagates as NotLaurentError.
    """
    n = seed.rank
    if not 1 <= k <= n:
        raise ValueError(f"direction {k} out of range 1..{n}")
    kk = k - 1
    B = seed.matrix
    plus = LaurentPoly.one(seed.variables)
    minus = LaurentPoly.one(seed.variables)
    for i in range(n):
        b = B[i][kk]
        if b > 0:
            plus = plus * seed.cluster[i] ** b
        elif b < 0:
            minus = minus * seed.cluster[i] ** (-b)
    new_entry = (plus + minus).exact_div(seed.cluster[kk])
    new_cluster = tuple(
        new_entry if i == kk else seed.cluster[i] for i in range(n)
    )
    new_matrix = tuple(
        tuple(
            -B[i][j]
            if i == kk or j == kk
            else B[i][j] + (abs(B[i][kk]) * B[kk][j] + B[i][kk] * abs(B[kk][j])) // 2
            for j in range(n)
        )
        for i in range(n)
    )
    return Seed(new_matrix, new_cluster)


@dataclass(frozen=True)
class Rank2Params:
    b: int
    c: int

    def __post_init__(self):
        if self.b < 1 or self.c < 1:
            raise ValueError("rank-2 exponents must be >= 1")


def rank2_sequence(params: Rank2Params | tuple[int, int], count: int) -> list[LaurentPoly]:
    """x1, x2, ..., x_count from x_{i-1} x_{i+1} = 1 + x_i^{b or c}.

    The exponent is b for odd i and c for even i; x3 is produced by the
    i = 2 relation.  Every step is an exact division in Z[x1^{+-1}, x2^{+-1}].
    """
    if not isinstance(params, Rank2Params):
        params = Rank2Params(*params)
    if count < 2:
        raise ValueError("count must be at least 2")
    x1, x2 = laurent_gens(("x1", "x2"))
    seq = [x1, x2]
    for i in range(2, count):
        exponent = params.b if i % 2 == 1 else params.c
        numerator = seq[i - 1] ** exponent + 1
        seq.append(numerator.exact_div(seq[i - 2]))
    return seq


@dataclass(frozen=True)
class MutationStep:
    step: int
    direction: int
    laurent: bool
    max_abs_exponent: int
    term_count: int
    error: str | None = None


@dataclass
class MutationReport:
    """Per-step record of a mutation path; a NotLaurent failure ends the path."""

    steps: list[MutationStep] = field(default_factory=list)
    final_seed: Seed | None = None

    @property
    def passed(self) -> bool:
        return all(s.laurent for s in self.steps)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "steps": [
                {
                    "step": s.step,
                    "direction": s.direction,
                    "laurent": s.laurent,
                    "max_abs_exponent": s.max_abs_exponent,
                    "term_count": s.term_count,
                    **({"error": s.error} if s.error else {}),
                }
                for s in self.steps
            ],
        }

    def to_table(self) -> str:
        lines = [f"{'step':>4}  {'dir':>3}  {'laurent':>7}  {'max|exp|':>8}  {'terms':>5}"]
        for s in self.steps:
            lines.append(
                f"{s.step:>4}  {s.direction:>3}  {str(s.laurent):>7}  "
                f"{s.max_abs_exponent:>8}  {s.term_count:>5}"
            )
        lines.append(f"result: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return json.dumps(self.to_json())


def check_laurent_phenomenon(seed: Seed, path: list[int]) -> MutationReport:
    """Apply the path; record Laurent-ness and exponent growth per step."""
    report = MutationReport()
    current = seed
    for idx, k in enumerate(path, start=1):
        try:
            current = mutate_seed(current, k)
        except NotLaurentError as err:
            report.steps.append(
                MutationStep(idx, k, False, 0, 0, error=str(err))
            )
            report.final_seed = current
            return report
        report.steps.append(
            MutationStep(
                idx,
                k,
                True,
                max(x.max_abs_exponent() for x in current.cluster),
                max(x.term_count for x in current.cluster),
            )
        )
    report.final_seed = current
    return report


def iterate_mutations(seed: Seed, depth: int, max_terms: int = 5000):
    """Breadth-first enumeration of distinct seeds reachable within depth.

    Yields (path, seed) pairs.  Seeds whose largest cluster entry exceeds
    the term budget are reported but not expanded further (the rank-2
    algebras here are of infinite type and grow without bound).
    """
    seen = {seed}
    queue = deque([((), seed)])
    while queue:
        path, current = queue.popleft()
        yield path, current
        if len(path) >= depth:
            continue
        if max(x.term_count for x in current.cluster) > max_terms:
            continue
        for k in range(1, current.rank + 1):
            nxt = mutate_seed(current, k)
            if nxt not in seen:
                seen.add(nxt)
                queue.append((path + (k,), nxt))
