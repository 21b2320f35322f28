"""Per-prime driver: representation -> classification -> equation -> tower."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields

from .arith import is_prime, primes_1_mod_8
from .classgroup import Classification, class_data
from .dioph import DEFAULT_U_LIMIT, DiophSolution, solve
from .errors import DomainError, SearchExhausted
from .represent import CaseLabel, Representation, classify_by_e, representation
from .tower import TowerData, build_tower, describe_fields, unit_label, with_unit


def validate_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p % 8 == 5:
        raise DomainError(
            f"p = {p} is 5 mod 8: h = 2 mod 4 and the Hilbert class field of "
            f"Q(sqrt{2 * p}) is the genus field Q(sqrt2, sqrt{p}); nothing to construct"
        )
    if p % 8 != 1:
        raise DomainError(f"p = {p} is not 1 mod 8")


@dataclass
class Construction:
    rep: Representation
    case: CaseLabel
    cls: Classification
    sol: DiophSolution | None = None
    tower: TowerData | None = None

    def report(self) -> dict:
        return describe_fields(self.rep, self.case, self.cls, self.sol, self.tower)


def classify(p: int, keep_cycles: bool = False) -> Construction:
    validate_prime(p)
    rep = representation(p)
    return Construction(rep, classify_by_e(rep), class_data(p, keep_cycles))


def construct(p: int, u_limit: int = DEFAULT_U_LIMIT) -> Construction:
    """Full pipeline; the octic step only runs in the H8PLUS case.

    Raises SearchExhausted when no solution exists below u_limit.
    """
    c = classify(p)
    if c.case is CaseLabel.H8PLUS:
        c.sol = solve(c.rep, u_limit)
        c.tower = with_unit(build_tower(c.rep, c.sol))
    return c


@dataclass(frozen=True)
class SurveyRow:
    p: int
    e: int
    f: int
    case: str
    h: int
    h_plus: int
    h2: int
    h2_plus: int
    norm_eps: int
    solved: bool
    u: int | None = None
    t: int | None = None
    s: int | None = None
    r: int | None = None
    scale: int | None = None
    eps_exponent: str | None = None
    mod4_square: bool | None = None

    def as_dict(self) -> dict:
        return asdict(self)


SURVEY_FIELDS = tuple(f.name for f in fields(SurveyRow))


def survey_row(p: int, u_limit: int = DEFAULT_U_LIMIT) -> SurveyRow:
    try:
        c = construct(p, u_limit)
    except SearchExhausted:
        c = classify(p)
    base = dict(
        p=p,
        e=c.rep.e,
        f=c.rep.f,
        case=c.case.value,
        h=c.cls.h,
        h_plus=c.cls.h_plus,
        h2=c.cls.h2,
        h2_plus=c.cls.h2_plus,
        norm_eps=c.cls.norm_eps,
        solved=c.sol is not None,
    )
    if c.sol is None or c.tower is None:
        return SurveyRow(**base)
    label = c.tower.eps_label
    return SurveyRow(
        **base,
        u=c.sol.u,
        t=c.sol.t,
        s=c.sol.s,
        r=c.sol.r,
        scale=c.sol.scale,
        eps_exponent=None if label is None else unit_label(*label),
        mod4_square=label is not None,
    )


def _row_task(args: tuple[int, int]) -> SurveyRow:
    return survey_row(*args)


def survey(pmin: int, pmax: int, u_limit: int = DEFAULT_U_LIMIT, jobs: int = 1) -> list[SurveyRow]:
    """Rows for every prime p = 1 mod 8 in [pmin, pmax], ordered by p."""
    primes = primes_1_mod_8(pmin, pmax)
    tasks = [(p, u_limit) for p in primes]
    if jobs <= 1 or len(tasks) < 2:
        return [_row_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_row_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
