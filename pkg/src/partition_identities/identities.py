"""Both sides of every identity, built as exact polynomials or rationals.

Builders never compare: they return (lhs, rhs) value pairs so the sweep
engine can show both sides verbatim when they disagree.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import List, Optional, Tuple, Union

from .genbinom import gen_binom
from .partitions import Partition, enumerate_partitions
from .polynomials import (
    Polynomial,
    binom_poly,
    binom_rat,
    falling_factorial_eval,
    rising_factorial_eval,
)

SideValue = Union[Polynomial, Fraction]
SidePair = Tuple[SideValue, SideValue]


class IdentityId(Enum):
    CLASSICAL = "CLASSICAL"
    CONJ1 = "CONJ1"
    CONJ2 = "CONJ2"
    CONJ3 = "CONJ3"
    CONJ4 = "CONJ4"
    CONST_TERM = "CONST_TERM"
    TOP_COEFF = "TOP_COEFF"
    BINOMIAL_TYPE = "BINOMIAL_TYPE"
    HOCKEY_STICK = "HOCKEY_STICK"


class Form(Enum):
    SIGNED = "SIGNED"
    UNSIGNED = "UNSIGNED"


#: which of (r, s, form) each identity accepts; n is always required.
_PARAMS = {
    IdentityId.CLASSICAL: (False, False, True),
    IdentityId.CONJ1: (True, True, True),
    IdentityId.CONJ2: (False, True, True),
    IdentityId.CONJ3: (True, True, False),
    IdentityId.CONJ4: (True, True, False),
    IdentityId.CONST_TERM: (True, True, False),
    IdentityId.TOP_COEFF: (True, True, False),
    IdentityId.BINOMIAL_TYPE: (False, True, False),
    IdentityId.HOCKEY_STICK: (True, False, False),
}


@dataclass(frozen=True)
class IdentityCase:
    """One identity plus its integer parameters.

    For HOCKEY_STICK the pair (n, r) plays the role of (N, k).
    """

    identity_id: IdentityId
    n: int
    r: Optional[int] = None
    s: Optional[int] = None
    form: Optional[Form] = None

    def __post_init__(self) -> None:
        wants_r, wants_s, wants_form = _PARAMS[self.identity_id]
        name = self.identity_id.value
        if self.n < 1:
            raise ValueError(f"{name}: n must be >= 1")
        if wants_r != (self.r is not None):
            raise ValueError(f"{name}: parameter r {'required' if wants_r else 'not applicable'}")
        if wants_s != (self.s is not None):
            raise ValueError(f"{name}: parameter s {'required' if wants_s else 'not applicable'}")
        if wants_form != (self.form is not None):
            raise ValueError(f"{name}: form {'required' if wants_form else 'not applicable'}")
        if self.r is not None and self.r < 1:
            raise ValueError(f"{name}: r must be >= 1")
        if self.s is not None:
            s_min = 0 if self.identity_id is IdentityId.CONJ3 else 1
            if self.s < s_min:
                raise ValueError(f"{name}: s must be >= {s_min}")

    def __str__(self) -> str:
        fields = [f"n={self.n}"]
        if self.r is not None:
            fields.append(f"r={self.r}")
        if self.s is not None:
            fields.append(f"s={self.s}")
        if self.form is not None:
            fields.append(f"form={self.form.value}")
        return f"{self.identity_id.value}({','.join(fields)})"

    _CASE_RE = re.compile(r"^\s*([A-Z_0-9]+)\s*\(([^)]*)\)\s*$")

    @classmethod
    def parse(cls, text: str) -> "IdentityCase":
        """Parse e.g. "CONJ1(n=5,r=3,s=2,form=SIGNED)"."""
        m = cls._CASE_RE.match(text)
        if not m:
            raise ValueError(f"malformed identity case {text!r}")
        try:
            identity_id = IdentityId(m.group(1))
        except ValueError as exc:
            raise ValueError(f"unknown identity {m.group(1)!r}") from exc
        kwargs: dict = {}
        body = m.group(2).strip()
        for item in body.split(",") if body else []:
            key, _, value = item.partition("=")
            key = key.strip()
            value = value.strip()
            if key in ("n", "r", "s"):
                kwargs[key] = int(value)
            elif key == "form":
                kwargs["form"] = Form(value)
            else:
                raise ValueError(f"unknown parameter {key!r}")
        return cls(identity_id, **kwargs)


def _pochhammer_sum(mu: Partition, s: int) -> Fraction:
    """sum_i (mu_i)_s over the parts of mu."""
    return sum(
        (rising_factorial_eval(p, s) for p in mu.parts), Fraction(0)
    )


def classical_sides(n: int, form: Form) -> SidePair:
    """The classical expansion of binom(X, n) over partitions of n."""
    lhs = Polynomial()
    for mu in enumerate_partitions(n):
        coeff = Fraction(1, mu.z_value())
        if form is Form.SIGNED and (n - mu.length) % 2 == 1:
            coeff = -coeff
        lhs = lhs + Polynomial([0] * mu.length + [coeff])
    if form is Form.SIGNED:
        rhs = binom_poly(0, n)
    else:
        rhs = binom_poly(n - 1, n)
    return lhs, rhs


def _conj1_lhs(n: int, r: int, s: int, form: Form) -> Polynomial:
    lhs = Polynomial()
    # terms with l(mu) > r vanish (row-covering coefficient is zero)
    for mu in enumerate_partitions(n, 0, r):
        g = gen_binom(mu, r)
        if g == 0:
            continue
        coeff = Fraction(g, mu.z_value()) * _pochhammer_sum(mu, s)
        if form is Form.SIGNED and (r - mu.length) % 2 == 1:
            coeff = -coeff
        lhs = lhs + Polynomial([0] * (mu.length - 1) + [coeff])
    return lhs


def conj1_sides(n: int, r: int, s: int, form: Form) -> SidePair:
    """Conjecture 1: degree r-1 polynomial identity; zero on both sides for r > n."""
    lhs = _conj1_lhs(n, r, s, form)
    prefactor = factorial(s - 1) * binom_rat(n + s - 1, n - r)
    if form is Form.SIGNED:
        bracket = binom_poly(0, r) - binom_poly(-s, r)
    else:
        bracket = binom_poly(r + s - 1, r) - binom_poly(r - 1, r)
    rhs = bracket * prefactor
    return lhs, rhs


def conj2_sides(n: int, s: int, form: Form) -> SidePair:
    """Conjecture 2, the r = n specialization with the covering count gone."""
    lhs = Polynomial()
    for mu in enumerate_partitions(n):
        coeff = Fraction(1, mu.z_value()) * _pochhammer_sum(mu, s)
        if form is Form.SIGNED and (n - mu.length) % 2 == 1:
            coeff = -coeff
        lhs = lhs + Polynomial([0] * (mu.length - 1) + [coeff])
    pref = Fraction(factorial(s - 1))
    if form is Form.SIGNED:
        rhs = (binom_poly(0, n) - binom_poly(-s, n)) * pref
    else:
        rhs = (binom_poly(n + s - 1, n) - binom_poly(n - 1, n)) * pref
    return lhs, rhs


def _length_r_sum(n: int, r: int, s: int) -> Fraction:
    """(r-1)! sum over |mu|=n, l(mu)=r of [sum_i m_i (i)_s] / [prod_i m_i!]."""
    total = Fraction(0)
    for mu in enumerate_partitions(n, r, r):
        mults = mu.multiplicities()
        numer = sum(
            (m * rising_factorial_eval(i, s) for i, m in mults.items()),
            Fraction(0),
        )
        denom = 1
        for m in mults.values():
            denom *= factorial(m)
        total += numer / denom
    return factorial(r - 1) * total


def conj3_sides(n: int, r: int, s: int) -> SidePair:
    """Conjecture 3: the X^{r-1} coefficient identity, as exact rationals."""
    lhs = _length_r_sum(n, r, s)
    rhs = factorial(s) * binom_rat(n + s - 1, n - r)
    return lhs, rhs


def conj4_sides(n: int, r: int, s: int) -> SidePair:
    """Conjecture 4: same LHS, with the RHS resummed over first parts."""
    lhs = _length_r_sum(n, r, s)
    rhs = sum(
        (
            binom_rat(n - i - 1, r - 2) * rising_factorial_eval(i, s)
            for i in range(1, n - r + 2)
        ),
        Fraction(0),
    )
    return lhs, rhs


def const_term_sides(n: int, r: int, s: int) -> SidePair:
    """Constant-term identity: only mu = (n) contributes at X^0."""
    sign = -1 if r % 2 == 1 else 1
    lhs = sign * Fraction(binom_rat(n, r), n) * rising_factorial_eval(n, s)
    rhs = (
        factorial(s - 1)
        * binom_rat(n + s - 1, n - r)
        * binom_rat(-s, r)
    )
    return lhs, rhs


def top_coeff_checks(n: int, r: int, s: int) -> List[SidePair]:
    """Leading coefficients of the conjecture-1 RHS against closed forms.

    Returns (extracted, closed-form) pairs for X^{r-1} and, when r >= 2,
    X^{r-2}.  Both carry the full (s-1)! binom(n+s-1, n-r) prefactor.
    """
    _, rhs = conj1_sides(n, r, s, Form.SIGNED)
    prefactor = factorial(s - 1) * binom_rat(n + s - 1, n - r)
    pairs = [
        (rhs.coefficient(r - 1), prefactor * Fraction(r * s, factorial(r)))
    ]
    if r >= 2:
        closed = prefactor * Fraction(
            -r * (r - 1) * s * (r + s - 1), 2 * factorial(r)
        )
        pairs.append((rhs.coefficient(r - 2), closed))
    return pairs


def hockey_stick_sides(big_n: int, k: int) -> SidePair:
    """Column-sum identity C(N, k) = sum_{i=1}^{N-1} C(i, k-1).

    Fails at k = 1 under the usual conventions; meaningful for k >= 2.
    """
    lhs = binom_rat(big_n, k)
    rhs = sum(
        (binom_rat(i, k - 1) for i in range(1, big_n)), Fraction(0)
    )
    return lhs, rhs


def binomial_type_sides(n: int, s: int) -> SidePair:
    """[X+s]_n = sum_k C(n,k) [X]_{n-k} [s]_k, as polynomials in X."""
    from .polynomials import falling_factorial_poly

    lhs = falling_factorial_poly(s, n)
    rhs = Polynomial()
    for k in range(n + 1):
        rhs = rhs + falling_factorial_poly(0, n - k) * (
            binom_rat(n, k) * falling_factorial_eval(s, k)
        )
    return lhs, rhs


def sign_flip_check(n: int, r: int, s: int) -> bool:
    """X -> -X carries the UNSIGNED form onto (-1)^{r-1} times the SIGNED one."""
    signed_lhs, signed_rhs = conj1_sides(n, r, s, Form.SIGNED)
    unsigned_lhs, unsigned_rhs = conj1_sides(n, r, s, Form.UNSIGNED)
    sign = Fraction(-1) ** (r - 1)
    return (
        unsigned_lhs.substitute_neg_x() == signed_lhs * sign
        and unsigned_rhs.substitute_neg_x() == signed_rhs * sign
    )


def case_sides(case: IdentityCase) -> List[SidePair]:
    """All (lhs, rhs) pairs for one case; a single pair except TOP_COEFF."""
    iid = case.identity_id
    if iid is IdentityId.CLASSICAL:
        return [classical_sides(case.n, case.form)]
    if iid is IdentityId.CONJ1:
        return [conj1_sides(case.n, case.r, case.s, case.form)]
    if iid is IdentityId.CONJ2:
        return [conj2_sides(case.n, case.s, case.form)]
    if iid is IdentityId.CONJ3:
        return [conj3_sides(case.n, case.r, case.s)]
    if iid is IdentityId.CONJ4:
        return [conj4_sides(case.n, case.r, case.s)]
    if iid is IdentityId.CONST_TERM:
        return [const_term_sides(case.n, case.r, case.s)]
    if iid is IdentityId.TOP_COEFF:
        return top_coeff_checks(case.n, case.r, case.s)
    if iid is IdentityId.BINOMIAL_TYPE:
        return [binomial_type_sides(case.n, case.s)]
    if iid is IdentityId.HOCKEY_STICK:
        return [hockey_stick_sides(case.n, case.r)]
    raise AssertionError(f"unhandled identity {iid}")
