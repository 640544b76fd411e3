"""Exact machinery for coset bounds of unit equations over function fields."""

from .bounds import DomainError, corollary_bound, degenerate_subsets, proposition_bound, theorem_bound
from .dependence import (
    RelationVector,
    SystemInstance,
    find_relation,
    rank_exact,
    rank_series,
    s_membership,
    v_membership,
    wronskian,
)
from .exact_arith import (
    FactoredRationalFunction,
    PoleError,
    Polynomial,
    RationalFunction,
    choose_basepoint,
    expand_factored,
    rat_binomial,
    rf_eval,
    rf_shift,
)
from .power_maps import OnePlusSeries, SeriesTuple, pow_u, tuple_pow, unit_decompose
from .series import NotAUnit, PoleAtOrigin, TruncatedSeries, rf_to_series, series_add, series_derive, series_inv, series_mul
from .unit_search import (
    CosetReport,
    EquationInstance,
    GroupSpec,
    IndependenceError,
    SolutionRecord,
    coset_classify,
    enumerate_solutions,
    group_rank,
    independence_check,
    is_nondegenerate,
    verify_bound,
)

__version__ = "0.1.0"
