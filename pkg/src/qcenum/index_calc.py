"""Index arithmetic: which shift periods a subcode can have.

For a primitive element of F_{q^n}, the least positive power landing in the
subfield F_{q^d} is (q^n - 1)/(q^d - 1).  A dual zero exponent i reaches that
subfield after lcm(i, step)/i further steps; folding these contributions under
lcm across all zeros yields the full achievable index set.
"""

import math
from dataclasses import dataclass
from itertools import product

from .numth import CodeSpec, InvalidParameterError, divisors_of


def subfield_index(q: int, n: int, d: int) -> int:
    """Multiplicative index (q^n - 1)/(q^d - 1) of F_{q^d}* inside F_{q^n}*.

    Equivalently the least e > 0 with alpha^e in F_{q^d} for alpha primitive;
    alpha^e is then itself primitive in F_{q^d}.
    """
    if d < 1 or n % d != 0:
        raise InvalidParameterError(f"d = {d} does not divide n = {n}")
    return (q**n - 1) // (q**d - 1)


def index_contribution(zero: int, step: int) -> int:
    """Least ell > 0 such that zero * ell is a multiple of step.

    This is lcm(zero, step)/zero = step/gcd(zero, step), the shift period a
    single dual zero forces when its subspace lives exactly over the subfield
    with the given step.
    """
    if zero < 1 or step < 1:
        raise InvalidParameterError(f"need positive zero and step, got {zero}, {step}")
    return step // math.gcd(zero, step)


@dataclass(frozen=True)
class ContributionMatrix:
    """Per-(divisor, zero) shift contributions for a code spec.

    rows[d][j] is the contribution of spec.zeros[j] for a subspace maximally
    defined over F_{q^d}.
    """

    spec: CodeSpec
    divisors: tuple[int, ...]
    rows: dict[int, tuple[int, ...]]

    def column(self, zero: int) -> tuple[int, ...]:
        j = self.spec.zeros.index(zero)
        return tuple(self.rows[d][j] for d in self.divisors)


def contribution_matrix(spec: CodeSpec) -> ContributionMatrix:
    divs = tuple(divisors_of(spec.n))
    rows = {
        d: tuple(
            index_contribution(i, subfield_index(spec.q, spec.n, d)) for i in spec.zeros
        )
        for d in divs
    }
    return ContributionMatrix(spec=spec, divisors=divs, rows=rows)


@dataclass(frozen=True)
class IndexSet:
    """Achievable proper shift indices, ascending; always contains 1.

    Selections whose combined lcm equals the full length N are not indices of
    proper quasi-cyclic structure; excluded_n records whether any exist.
    """

    values: tuple[int, ...]
    excluded_n: bool

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, x) -> bool:
        return x in self.values

    def __len__(self) -> int:
        return len(self.values)


def index_set(spec: CodeSpec) -> IndexSet:
    """All indices achievable by some choice of subspaces, with N removed.

    Runs the same per-zero lcm fold as the multiplicity engine, but on bare
    sets: each zero contributes either 1 (zero subspace) or one of its
    per-divisor contributions.  Every contribution option has positive
    multiplicity, so this support equals the support of the full count fold.
    """
    matrix = contribution_matrix(spec)
    reachable = {1}
    for i in spec.zeros:
        options = {1} | {matrix.rows[d][spec.zeros.index(i)] for d in matrix.divisors}
        reachable = {math.lcm(a, b) for a in reachable for b in options}
    excluded = spec.N in reachable
    reachable.discard(spec.N)
    return IndexSet(values=tuple(sorted(reachable)), excluded_n=excluded)


def index_set_combinations(spec: CodeSpec) -> set[int]:
    """Debug form of index_set: literal lcms over all nonempty selections.

    Picks at most one (divisor, contribution) entry per zero column, at least
    one column overall, and collects the lcms with N discarded.  Used only to
    cross-check the fold.
    """
    matrix = contribution_matrix(spec)
    columns = [
        [matrix.rows[d][j] for d in matrix.divisors] for j in range(spec.s)
    ]
    values = set()
    for picks in product(*[[None] + col for col in columns]):
        chosen = [x for x in picks if x is not None]
        if not chosen:
            continue
        values.add(math.lcm(*chosen))
    values.discard(spec.N)
    return values
