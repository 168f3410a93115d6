"""Sweep engine: expand parameter grids, evaluate cases, report exactly.

Cases are independent pure computations, so the pool parallelizes across
cases only and merges results back into the deterministic grid order.
"""
from __future__ import annotations

import concurrent.futures
import csv
import io
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import partitions
from .identities import Form, IdentityCase, IdentityId, case_sides
from .polynomials import Polynomial, format_rational

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_CONFIG_ERROR = 2

STATUS_VERIFIED = "VERIFIED"
STATUS_COUNTEREXAMPLE = "COUNTEREXAMPLE"
STATUS_SKIPPED = "SKIPPED"

SerializedSide = Union[str, List[str]]


class ConfigError(ValueError):
    """Invalid sweep configuration; reported before any evaluation."""


@dataclass(frozen=True)
class SweepConfig:
    identity_ids: Tuple[IdentityId, ...]
    n_range: Tuple[int, int]
    r_range: Tuple[int, int] = (1, 1)
    s_range: Tuple[int, int] = (1, 1)
    form: Optional[Form] = None  # None means BOTH
    worker_count: int = 1
    oracle_limit: int = 16
    perturb: bool = False  # test fixture: corrupt every RHS

    def validate(self) -> None:
        if not self.identity_ids:
            raise ConfigError("no identities selected")
        for name, (lo, hi) in (
            ("n", self.n_range),
            ("r", self.r_range),
            ("s", self.s_range),
        ):
            if lo > hi:
                raise ConfigError(f"empty {name} range {lo}..{hi}")
            floor = 0 if name == "s" and IdentityId.CONJ3 in self.identity_ids else 1
            if lo < floor:
                raise ConfigError(f"{name} range must start at {floor} or above")
        if self.worker_count < 1:
            raise ConfigError("worker_count must be >= 1")
        if self.oracle_limit < 1:
            raise ConfigError("oracle_limit must be >= 1")

    def to_dict(self) -> Dict:
        return {
            "identity_ids": [i.value for i in self.identity_ids],
            "n_range": list(self.n_range),
            "r_range": list(self.r_range),
            "s_range": list(self.s_range),
            "form": self.form.value if self.form else "BOTH",
            "worker_count": self.worker_count,
            "oracle_limit": self.oracle_limit,
            "perturb": self.perturb,
        }


@dataclass
class CaseResult:
    case: IdentityCase
    status: str
    lhs: SerializedSide
    rhs: SerializedSide
    elapsed_ms: float

    def to_dict(self) -> Dict:
        return {
            "case": str(self.case),
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class Report:
    config: SweepConfig
    results: List[CaseResult] = field(default_factory=list)
    total_ms: float = 0.0

    @property
    def summary(self) -> Dict[str, int]:
        counts = {"verified": 0, "counterexamples": 0, "skipped": 0}
        for res in self.results:
            if res.status == STATUS_VERIFIED:
                counts["verified"] += 1
            elif res.status == STATUS_COUNTEREXAMPLE:
                counts["counterexamples"] += 1
            else:
                counts["skipped"] += 1
        return counts

    @property
    def exit_code(self) -> int:
        return EXIT_COUNTEREXAMPLE if self.summary["counterexamples"] else EXIT_OK

    def counterexamples(self) -> List[CaseResult]:
        return [r for r in self.results if r.status == STATUS_COUNTEREXAMPLE]

    def to_dict(self) -> Dict:
        return {
            "config": self.config.to_dict(),
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary,
            "total_ms": self.total_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["case", "status", "lhs", "rhs", "elapsed_ms"])
        for res in self.results:
            writer.writerow(
                [
                    str(res.case),
                    res.status,
                    _csv_side(res.lhs),
                    _csv_side(res.rhs),
                    res.elapsed_ms,
                ]
            )
        return buf.getvalue()

    def content_dict(self) -> Dict:
        """Report content with timing fields removed, for determinism checks."""
        data = self.to_dict()
        data.pop("total_ms")
        data["config"].pop("worker_count")
        for res in data["results"]:
            res.pop("elapsed_ms")
        return data


def _csv_side(side: SerializedSide) -> str:
    if isinstance(side, list):
        return "|".join(side)
    return side


def serialize_side(value) -> SerializedSide:
    """Rational -> "p/q" string; polynomial -> coefficient array."""
    if isinstance(value, Polynomial):
        return value.to_strings()
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    raise TypeError(f"cannot serialize side {value!r}")


def _is_skipped(case: IdentityCase) -> bool:
    # conventions probed but not asserted: CONJ4 at r=1 (lower binomial
    # index -1) and the hockey stick at k=1
    if case.identity_id is IdentityId.CONJ4 and case.r == 1:
        return True
    if case.identity_id is IdentityId.HOCKEY_STICK and case.r == 1:
        return True
    return False


def compare_case(case: IdentityCase, perturb: bool = False) -> CaseResult:
    """Evaluate one case and compare both sides by exact canonical equality."""
    start = time.perf_counter()
    pairs = case_sides(case)
    if perturb:
        pairs = [(lhs, rhs + 1) for lhs, rhs in pairs]
    if _is_skipped(case):
        status = STATUS_SKIPPED
    elif all(lhs == rhs for lhs, rhs in pairs):
        status = STATUS_VERIFIED
    else:
        status = STATUS_COUNTEREXAMPLE
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if len(pairs) == 1:
        lhs, rhs = (serialize_side(v) for v in pairs[0])
    else:
        lhs = [_csv_side(serialize_side(l)) for l, _ in pairs]
        rhs = [_csv_side(serialize_side(r)) for _, r in pairs]
    return CaseResult(case, status, lhs, rhs, elapsed_ms)


def _applicable_forms(iid: IdentityId, form: Optional[Form]) -> List[Optional[Form]]:
    if iid in (IdentityId.CLASSICAL, IdentityId.CONJ1, IdentityId.CONJ2):
        if form is None:
            return [Form.SIGNED, Form.UNSIGNED]
        return [form]
    return [None]


def expand_cases(config: SweepConfig) -> List[IdentityCase]:
    """Grid cases in deterministic (identity_id, n, r, s, form) order."""
    cases: List[IdentityCase] = []
    ids = sorted(set(config.identity_ids), key=lambda i: list(IdentityId).index(i))
    n_lo, n_hi = config.n_range
    r_lo, r_hi = config.r_range
    s_lo, s_hi = config.s_range
    for iid in ids:
        uses_r = iid in (
            IdentityId.CONJ1,
            IdentityId.CONJ3,
            IdentityId.CONJ4,
            IdentityId.CONST_TERM,
            IdentityId.TOP_COEFF,
            IdentityId.HOCKEY_STICK,
        )
        uses_s = iid not in (IdentityId.CLASSICAL, IdentityId.HOCKEY_STICK)
        for n in range(n_lo, n_hi + 1):
            for r in range(r_lo, r_hi + 1) if uses_r else [None]:
                for s in range(s_lo, s_hi + 1) if uses_s else [None]:
                    if s == 0 and iid is not IdentityId.CONJ3:
                        continue
                    for fm in _applicable_forms(iid, config.form):
                        cases.append(IdentityCase(iid, n, r, s, fm))
    return cases


def run_sweep(config: SweepConfig) -> Report:
    """Evaluate every grid case exactly once and aggregate the report."""
    config.validate()
    cases = expand_cases(config)
    partitions.warm_cache(range(config.n_range[0], config.n_range[1] + 1))
    start = time.perf_counter()
    if config.worker_count == 1 or len(cases) < 2:
        results = [compare_case(c, config.perturb) for c in cases]
    else:
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=config.worker_count
        ) as pool:
            results = list(
                pool.map(
                    compare_case,
                    cases,
                    [config.perturb] * len(cases),
                    chunksize=max(1, len(cases) // (config.worker_count * 4)),
                )
            )
    total_ms = (time.perf_counter() - start) * 1000.0
    return Report(config=config, results=results, total_ms=total_ms)
