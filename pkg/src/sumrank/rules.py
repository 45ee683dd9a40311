"""Registry of non-existence criteria for linear perfect sum-rank codes.

Each criterion applies to the regime of t equal n x n blocks over F_q with
q = p^alpha, takes a parameter set (q, n, t, d[, dim]) and returns a guarded
verdict: inapplicable parameters always yield Inconclusive, never a spurious
exclusion.  Guards use exact integer arithmetic throughout; the two
transcendental thresholds e^3 and e^4 are replaced by the smallest integers
strictly exceeding them (21 and 55), which is conservative and decidable.

``evaluate_all`` runs the full registry plus the ball-volume divisibility
test and a packing/Singleton consistency report, and aggregates: the
parameters are excluded as soon as any single criterion fires.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from typing import Callable, Iterable, Optional, Sequence

from .bounds import (
    QPowerExpr,
    compare_q_power,
    packing_bound,
    perfection_divisibility,
    singleton_bound,
)
from .combinat import PrimePowerField, p_adic_valuation
from .volumes import BlockProfile, ball_volume, congruence_poly, space_size

# Smallest integers strictly greater than e^3 and e^4.
E3_CUTOFF = 21
E4_CUTOFF = 55


class Conclusion(enum.Enum):
    NON_EXISTENT = "NonExistent"
    NECESSARY_CONDITION_VIOLATED = "NecessaryConditionViolated"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ParamSet:
    """Parameters of a putative perfect code in t equal n x n blocks.

    The packing radius k = floor((d-1)/2) is always derived, never stored,
    so it cannot drift out of sync with d.
    """

    field: PrimePowerField
    n: int
    t: int
    d: int
    dim: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n < 1 or self.t < 1:
            raise ValueError("n and t must be positive")
        if not 1 <= self.d <= self.t * self.n:
            raise ValueError(
                f"d must be in 1..{self.t * self.n} for this profile, got {self.d}"
            )
        if self.dim is not None and not 0 <= self.dim <= self.t * self.n * self.n:
            raise ValueError("dim out of range for this profile")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def k(self) -> int:
        return (self.d - 1) // 2

    def profile(self) -> BlockProfile:
        return BlockProfile.equal_square(self.field, self.n, self.t)


@dataclass(frozen=True)
class RuleVerdict:
    """Outcome of one criterion on one parameter set."""

    rule_id: str
    statement: str
    applicable: bool
    conclusion: Conclusion
    witness: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if not self.applicable and self.conclusion is not Conclusion.INCONCLUSIVE:
            raise ValueError("inapplicable rules must be inconclusive")


def _witness(**kv: object) -> tuple[tuple[str, str], ...]:
    return tuple((k, str(v)) for k, v in kv.items())


def _inconclusive(rule_id: str, statement: str) -> RuleVerdict:
    return RuleVerdict(rule_id, statement, False, Conclusion.INCONCLUSIVE)


def _in_regime(params: ParamSet) -> bool:
    # The criteria are stated for blocks of size at least 2; unit blocks
    # (the Hamming regime, where perfect codes do exist) are out of scope.
    return params.n >= 2


_STMT_T2_LARGE_RADIUS = (
    "Two equal square blocks with q >= 5 and packing radius >= 6 admit no "
    "perfect code."
)


def rule_t2_large_radius(params: ParamSet) -> RuleVerdict:
    rid = "t2_large_radius"
    if not (_in_regime(params) and params.t == 2 and params.q >= 5 and params.k >= 6):
        return _inconclusive(rid, _STMT_T2_LARGE_RADIUS)
    return RuleVerdict(
        rid,
        _STMT_T2_LARGE_RADIUS,
        True,
        Conclusion.NON_EXISTENT,
        _witness(q=params.q, k=params.k),
    )


_STMT_T2_LARGE_FIELD = (
    "Two equal square blocks with q >= 21 (q above e^3) and packing radius "
    "1..5 admit no perfect code."
)


def rule_t2_large_field(params: ParamSet) -> RuleVerdict:
    rid = "t2_large_field"
    if not (
        _in_regime(params)
        and params.t == 2
        and params.q >= E3_CUTOFF
        and 1 <= params.k <= 5
    ):
        return _inconclusive(rid, _STMT_T2_LARGE_FIELD)
    return RuleVerdict(
        rid,
        _STMT_T2_LARGE_FIELD,
        True,
        Conclusion.NON_EXISTENT,
        _witness(q=params.q, k=params.k, q_threshold=E3_CUTOFF),
    )


_STMT_T2_Q2_Q3 = (
    "Two equal square blocks over F_2 (n >= 4, radius != 2) or F_3 (n >= 3) "
    "admit no perfect code, via radius-specific closed forms for small radii "
    "and the exact inequality q^((k^2-2k-1)/2) > k(k+1)^2 for large radii."
)


def rule_t2_q2_q3(params: ParamSet) -> RuleVerdict:
    rid = "t2_q2_q3"
    k = params.k
    if not (_in_regime(params) and params.t == 2 and k >= 1):
        return _inconclusive(rid, _STMT_T2_Q2_Q3)
    if params.q == 2 and params.n >= 4 and k != 2:
        small = k in (1, 3, 4, 5)
    elif params.q == 3 and params.n >= 3:
        small = k in (1, 2, 3, 4)
    else:
        return _inconclusive(rid, _STMT_T2_Q2_Q3)
    if small:
        return RuleVerdict(
            rid,
            _STMT_T2_Q2_Q3,
            True,
            Conclusion.NON_EXISTENT,
            _witness(q=params.q, k=k, route="closed-form volume comparison"),
        )
    # Large radius: perfection would force q^((k^2-2k-1)/2) <= k(k+1)^2;
    # certify the strict reverse inequality exactly.
    rhs = QPowerExpr(1, k * k - 2 * k - 1, 2)
    if compare_q_power(k * (k + 1) ** 2, rhs, params.q) < 0:
        return RuleVerdict(
            rid,
            _STMT_T2_Q2_Q3,
            True,
            Conclusion.NON_EXISTENT,
            _witness(
                q=params.q,
                k=k,
                route="exact power inequality",
                inequality=f"{k}*{k + 1}^2 < q^(({k}^2-2*{k}-1)/2)",
            ),
        )
    return _inconclusive(rid, _STMT_T2_Q2_Q3)


_STMT_RADIUS1 = (
    "Packing radius 1 with q > t + 1 admits no perfect code in t equal "
    "square blocks."
)


def rule_radius1_large_q(params: ParamSet) -> RuleVerdict:
    rid = "radius1_large_q"
    if not (_in_regime(params) and params.k == 1 and params.q > params.t + 1):
        return _inconclusive(rid, _STMT_RADIUS1)
    return RuleVerdict(
        rid,
        _STMT_RADIUS1,
        True,
        Conclusion.NON_EXISTENT,
        _witness(q=params.q, t_plus_1=params.t + 1),
    )


_STMT_RADIUS2_CONGRUENCE = (
    "Distance 5 or 6: a perfect code forces (t-1)(t-2)/2 = 0 mod q (q odd "
    "or q = 2); a nonzero residue excludes existence."
)


def rule_radius2_congruence(params: ParamSet) -> RuleVerdict:
    rid = "radius2_congruence"
    if not (
        _in_regime(params)
        and params.d in (5, 6)
        and (params.q % 2 == 1 or params.q == 2)
    ):
        return _inconclusive(rid, _STMT_RADIUS2_CONGRUENCE)
    residue = congruence_poly(params.t, 2) % params.q
    if residue != 0:
        return RuleVerdict(
            rid,
            _STMT_RADIUS2_CONGRUENCE,
            True,
            Conclusion.NON_EXISTENT,
            _witness(
                t=params.t,
                congruence=f"(t-1)(t-2)/2 = {residue} mod {params.q}",
            ),
        )
    return RuleVerdict(
        rid,
        _STMT_RADIUS2_CONGRUENCE,
        True,
        Conclusion.INCONCLUSIVE,
        _witness(t=params.t, congruence=f"(t-1)(t-2)/2 = 0 mod {params.q}"),
    )


_STMT_DIM_MULTIPLE = (
    "Distance 5 or 6: the dimension of a perfect code must be a multiple of "
    "the block size n."
)


def rule_dim_divisibility(params: ParamSet) -> RuleVerdict:
    rid = "dim_multiple_of_n"
    if not (_in_regime(params) and params.d in (5, 6) and params.dim is not None):
        return _inconclusive(rid, _STMT_DIM_MULTIPLE)
    remainder = params.dim % params.n
    if remainder != 0:
        return RuleVerdict(
            rid,
            _STMT_DIM_MULTIPLE,
            True,
            Conclusion.NECESSARY_CONDITION_VIOLATED,
            _witness(n=params.n, dim=params.dim, remainder=remainder),
        )
    return RuleVerdict(
        rid,
        _STMT_DIM_MULTIPLE,
        True,
        Conclusion.INCONCLUSIVE,
        _witness(n=params.n, dim=params.dim, remainder=0),
    )


_STMT_LARGE_RADIUS = (
    "q >= 55 (q above e^4), t > 1, and packing radius >= 3t (d odd) or "
    ">= 7t/4 with n > t (d even): no perfect code."
)


def rule_large_radius(params: ParamSet) -> RuleVerdict:
    rid = "large_radius_vs_blocks"
    k = params.k
    if _in_regime(params) and params.t > 1 and params.q >= E4_CUTOFF:
        if params.d % 2 == 1 and k >= 3 * params.t:
            return RuleVerdict(
                rid,
                _STMT_LARGE_RADIUS,
                True,
                Conclusion.NON_EXISTENT,
                _witness(parity="odd", k=k, threshold=3 * params.t),
            )
        if params.d % 2 == 0 and params.n > params.t and 4 * k >= 7 * params.t:
            return RuleVerdict(
                rid,
                _STMT_LARGE_RADIUS,
                True,
                Conclusion.NON_EXISTENT,
                # The even-distance variant rests on an abbreviated argument;
                # flag it so downstream audits can weight it accordingly.
                _witness(
                    parity="even",
                    four_k=4 * k,
                    threshold=7 * params.t,
                    confidence="reduced",
                ),
            )
    return _inconclusive(rid, _STMT_LARGE_RADIUS)


_STMT_CHAR_DIVIDES_T = (
    "When the characteristic p exceeds the packing radius k, perfection "
    "forces gcd(t, q) = 1; p dividing t excludes existence."
)


def rule_char_divides_t(params: ParamSet) -> RuleVerdict:
    rid = "char_divides_blocks"
    k = params.k
    if not (_in_regime(params) and k >= 1 and params.p > k):
        return _inconclusive(rid, _STMT_CHAR_DIVIDES_T)
    if params.t % params.p == 0:
        return RuleVerdict(
            rid,
            _STMT_CHAR_DIVIDES_T,
            True,
            Conclusion.NON_EXISTENT,
            _witness(p=params.p, t=params.t, gcd_condition=f"{params.p} | {params.t}"),
        )
    return RuleVerdict(
        rid,
        _STMT_CHAR_DIVIDES_T,
        True,
        Conclusion.INCONCLUSIVE,
        _witness(p=params.p, t=params.t),
    )


_STMT_FALLING_PRODUCT = (
    "When the characteristic p exceeds the packing radius k, perfection "
    "forces (t-1)(t-2)...(t-k) = 0 mod q; a nonzero product excludes "
    "existence."
)


def rule_falling_product(params: ParamSet) -> RuleVerdict:
    rid = "falling_product_mod_q"
    k = params.k
    if not (_in_regime(params) and k >= 1 and params.p > k):
        return _inconclusive(rid, _STMT_FALLING_PRODUCT)
    product = 1
    for i in range(1, k + 1):
        product *= params.t - i
    residue = product % params.q
    if residue != 0:
        return RuleVerdict(
            rid,
            _STMT_FALLING_PRODUCT,
            True,
            Conclusion.NON_EXISTENT,
            _witness(
                t=params.t,
                k=k,
                congruence=f"(t-1)...(t-{k}) = {residue} mod {params.q}",
            ),
        )
    return RuleVerdict(
        rid,
        _STMT_FALLING_PRODUCT,
        True,
        Conclusion.INCONCLUSIVE,
        _witness(t=params.t, k=k, congruence=f"(t-1)...(t-{k}) = 0 mod {params.q}"),
    )


_STMT_BALL_RESIDUE = (
    "The radius-k ball volume is congruent to P(t, k) = "
    "1 + sum_{i<=k} (-1)^i C(t, i) modulo q; if P(t, k) is nonzero mod p, "
    "no linear perfect code exists over any field of characteristic p."
)


def rule_ball_residue_mod_char(params: ParamSet) -> RuleVerdict:
    rid = "ball_residue_mod_char"
    k = params.k
    # Radius 0 is excluded: the whole space is a trivial perfect code there.
    if not (_in_regime(params) and k >= 1):
        return _inconclusive(rid, _STMT_BALL_RESIDUE)
    value = congruence_poly(params.t, k)
    if value % params.p != 0:
        extras = {}
        if value != 0:
            extras["valuation_at_p"] = p_adic_valuation(value, params.p)
        return RuleVerdict(
            rid,
            _STMT_BALL_RESIDUE,
            True,
            Conclusion.NON_EXISTENT,
            _witness(
                P=value,
                residue=f"P(t,k) = {value % params.p} mod {params.p}",
                **extras,
            ),
        )
    return RuleVerdict(
        rid,
        _STMT_BALL_RESIDUE,
        True,
        Conclusion.INCONCLUSIVE,
        _witness(P=value, residue=f"P(t,k) = 0 mod {params.p}"),
    )


Rule = Callable[[ParamSet], RuleVerdict]

RULE_REGISTRY: tuple[tuple[str, Rule], ...] = (
    ("t2_large_radius", rule_t2_large_radius),
    ("t2_large_field", rule_t2_large_field),
    ("t2_q2_q3", rule_t2_q2_q3),
    ("radius1_large_q", rule_radius1_large_q),
    ("radius2_congruence", rule_radius2_congruence),
    ("dim_multiple_of_n", rule_dim_divisibility),
    ("large_radius_vs_blocks", rule_large_radius),
    ("char_divides_blocks", rule_char_divides_t),
    ("falling_product_mod_q", rule_falling_product),
    ("ball_residue_mod_char", rule_ball_residue_mod_char),
)


_STMT_DIVISIBILITY = (
    "A linear perfect code forces the radius-k ball volume to be an exact "
    "power of q (and any perfect code forces it to divide the space size)."
)

_STMT_PACKING = (
    "Sphere-packing and Singleton-like bounds evaluated for reference; "
    "informational, never exclusionary on its own."
)


def _divisibility_verdict(params: ParamSet) -> RuleVerdict:
    rid = "ball_volume_power_of_q"
    verdict = perfection_divisibility(params.profile(), params.d)
    if verdict.passed:
        return RuleVerdict(
            rid,
            _STMT_DIVISIBILITY,
            True,
            Conclusion.INCONCLUSIVE,
            _witness(
                ball=verdict.ball,
                exponent=verdict.exponent,
                forced_dim=verdict.code_dimension,
                divides_space=verdict.divides_space,
            ),
        )
    return RuleVerdict(
        rid,
        _STMT_DIVISIBILITY,
        True,
        Conclusion.NON_EXISTENT,
        _witness(
            ball=verdict.ball,
            failure=f"{verdict.ball} is not a power of {params.q}",
            divides_space=verdict.divides_space,
        ),
    )


def _packing_verdict(params: ParamSet) -> RuleVerdict:
    rid = "packing_and_singleton"
    profile = params.profile()
    packing = packing_bound(profile, params.d)
    singleton = singleton_bound(profile, params.d)
    ball = ball_volume(profile, params.k).ball_volume
    assert packing >= 1 and packing * ball <= space_size(profile)
    return RuleVerdict(
        rid,
        _STMT_PACKING,
        True,
        Conclusion.INCONCLUSIVE,
        _witness(
            packing_bound=packing,
            singleton_bound=singleton.bound,
            singleton_j=singleton.j,
            singleton_delta=singleton.delta,
            ball=ball,
        ),
    )


@dataclass(frozen=True)
class EvaluationResult:
    params: ParamSet
    verdicts: tuple[RuleVerdict, ...]
    aggregate: Conclusion = dc_field(init=False)

    def __post_init__(self) -> None:
        conclusions = {v.conclusion for v in self.verdicts}
        if Conclusion.NON_EXISTENT in conclusions:
            agg = Conclusion.NON_EXISTENT
        elif Conclusion.NECESSARY_CONDITION_VIOLATED in conclusions:
            agg = Conclusion.NECESSARY_CONDITION_VIOLATED
        else:
            agg = Conclusion.INCONCLUSIVE
        object.__setattr__(self, "aggregate", agg)


def evaluate_all(params: ParamSet) -> EvaluationResult:
    """Run every registered criterion plus the divisibility and packing
    checks, in fixed order."""
    verdicts = [fn(params) for _, fn in RULE_REGISTRY]
    verdicts.append(_divisibility_verdict(params))
    verdicts.append(_packing_verdict(params))
    return EvaluationResult(params, tuple(verdicts))


@dataclass(frozen=True)
class SweepRow:
    q: int
    n: int
    t: int
    d: int
    valid: bool
    result: Optional[EvaluationResult]


def sweep(
    q_range: Iterable[int],
    n_range: Iterable[int],
    t_range: Iterable[int],
    d_range: Iterable[int],
) -> list[SweepRow]:
    """One evaluation per (q, n, t, d) tuple, in deterministic nested order.

    Tuples whose distance exceeds the maximum sum-rank weight t*n cannot
    carry a code at all; they are emitted as invalid rows rather than
    silently dropped, so row counts match the requested grid.
    """
    d_values = list(d_range)
    t_values = list(t_range)
    n_values = list(n_range)
    rows: list[SweepRow] = []
    for q in q_range:
        ppf = PrimePowerField.from_order(q)
        for n in n_values:
            for t in t_values:
                for d in d_values:
                    if not 1 <= d <= t * n:
                        rows.append(SweepRow(q, n, t, d, False, None))
                        continue
                    params = ParamSet(ppf, n, t, d)
                    rows.append(SweepRow(q, n, t, d, True, evaluate_all(params)))
    return rows
