"""Parameter planning: pick a Hanoi graph (plus blow-up) realizing a target (n, epsilon).

Given n and an exact rational epsilon, the planner chooses m with
2^(2^m) <= n < 2^(2^(m+1)) and splits m = a + b so that

    2^(2b) / 2^(2^a)  <=  eps_sel  <  2^(2(b+1)) / 2^(2^(a-1)),

then sets r = 2^(2^a), k = 2^b.  Those intervals tile [1/2^(2^m), 1), so the
split is unique; the scan still runs from the largest b down (larger k means
larger critical distance).  When n is exactly 2^(2^m) the selection runs at
epsilon itself and no blow-up is needed; otherwise it runs at epsilon/2 and
the base graph is blown up to exactly n vertices.  Very small epsilon
(epsilon < 2/sqrt(n)) degenerates to K_n, which is the k = 1 Hanoi graph on n
values.

Every inequality is evaluated by big-integer cross-multiplication; no
floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hanoi import HanoiParams


class OutOfRange(ValueError):
    """epsilon outside [1/n, 1]; nothing can be planned."""


@dataclass(frozen=True)
class Plan:
    """A planned construction: parameters, predicted critical distance, blow-up split.

    ``within_hypothesis`` records whether epsilon <= 1/log2(n) (the regime the
    asymptotic guarantee is stated for); planning proceeds either way.
    ``k_bound_ok`` is the exact check k >= log2(base_n) / (6 log2(1/eps_sel)).
    """

    n_target: int
    epsilon: Fraction
    degenerate: bool
    r: int
    k: int
    base_n: int
    predicted_d: int
    copy_floor: int
    copy_ceil: int
    ceil_count: int
    selection_epsilon: Fraction
    within_hypothesis: bool
    k_bound_ok: bool
    m: int | None = None
    a: int | None = None
    b: int | None = None

    def params(self) -> HanoiParams:
        """Generation parameters for the base graph (always proper states)."""
        return HanoiParams(self.r, self.k, proper=True)

    @property
    def needs_blow_up(self) -> bool:
        return self.base_n != self.n_target

    def to_json_dict(self) -> dict:
        return {
            "n_target": self.n_target,
            "epsilon": f"{self.epsilon.numerator}/{self.epsilon.denominator}",
            "degenerate": self.degenerate,
            "m": self.m,
            "a": self.a,
            "b": self.b,
            "r": self.r,
            "k": self.k,
            "base_n": self.base_n,
            "predicted_d": self.predicted_d,
            "copy_counts": {
                "floor": self.copy_floor,
                "ceil": self.copy_ceil,
                "ceil_vertices": self.ceil_count,
            },
            "selection_epsilon": (
                f"{self.selection_epsilon.numerator}/{self.selection_epsilon.denominator}"
            ),
            "within_hypothesis": self.within_hypothesis,
            "k_bound_ok": self.k_bound_ok,
        }


def _k_bound_ok(k: int, base_n: int, sel: Fraction) -> bool:
    # k >= log2(base_n) / (6 log2(1/sel))  <=>  (1/sel)^(6k) >= base_n
    p, q = sel.numerator, sel.denominator
    return q ** (6 * k) >= base_n * p ** (6 * k)


def plan_parameters(n: int, epsilon) -> Plan:
    """Plan a construction for an n-vertex graph that is epsilon-distance-uniform.

    Raises :class:`OutOfRange` when epsilon is outside [1/n, 1].  A plan whose
    epsilon exceeds 1/log2(n) is still produced, flagged via
    ``within_hypothesis`` (callers may warn; acceptance still holds at desk
    scale).
    """
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    eps = Fraction(epsilon)
    if eps < Fraction(1, n) or eps > 1:
        raise OutOfRange(f"epsilon {eps} outside [1/{n}, 1]")
    p, q = eps.numerator, eps.denominator
    within = n**p <= 2**q  # eps <= 1 / log2(n)

    if p * p * n < 4 * q * q:  # eps < 2 / sqrt(n): constant d suffices, take K_n
        return Plan(
            n_target=n,
            epsilon=eps,
            degenerate=True,
            r=n,
            k=1,
            base_n=n,
            predicted_d=1,
            copy_floor=1,
            copy_ceil=1,
            ceil_count=0,
            selection_epsilon=eps,
            within_hypothesis=within,
            k_bound_ok=_k_bound_ok(1, n, eps),
        )

    m = 0
    while 2 ** (2 ** (m + 1)) <= n:
        m += 1
    base_n = 2 ** (2**m)
    direct = base_n == n
    sel = eps if direct else eps / 2
    sp, sq = sel.numerator, sel.denominator

    chosen = None
    for b in range(m, -1, -1):
        a = m - b
        # 2^(2b) / 2^(2^a) <= sel
        lower_ok = sq * 2 ** (2 * b) <= sp * 2 ** (2**a)
        # sel < 2^(2(b+1)) / 2^(2^(a-1)), squared to keep a = 0 integral
        upper_ok = sp * sp * 2 ** (2**a) < sq * sq * 2 ** (4 * b + 4)
        if lower_ok and upper_ok:
            chosen = (a, b)
            break
    if chosen is None:
        raise OutOfRange(f"no (a, b) split of m={m} fits epsilon {sel}")
    a, b = chosen
    r = 2 ** (2**a)
    k = 2**b
    if direct:
        floor = ceil = 1
        ceil_count = 0
    else:
        floor, ceil_count = divmod(n, base_n)
        ceil = floor + 1 if ceil_count else floor
    return Plan(
        n_target=n,
        epsilon=eps,
        degenerate=False,
        r=r,
        k=k,
        base_n=base_n,
        predicted_d=2**k - 1,
        copy_floor=floor,
        copy_ceil=ceil,
        ceil_count=ceil_count,
        selection_epsilon=sel,
        within_hypothesis=within,
        k_bound_ok=_k_bound_ok(k, base_n, sel),
        m=m,
        a=a,
        b=b,
    )
