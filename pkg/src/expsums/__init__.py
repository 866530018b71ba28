"""Exact verification toolkit for power-sum and exponential power-sum
identities, Bernoulli-number retrieval, and a desk-scale Dirichlet L-series
magnitude check."""

from .bernoulli import (
    BernoulliTable,
    RetrievalDetail,
    bernoulli_oracle,
    bernoulli_table,
    retrieve_bernoulli,
    retrieve_bernoulli_detail,
)
from .compositions import (
    Composition,
    DecreasingChain,
    chain_to_composition,
    composition_to_chain,
    enumerate_chains,
    enumerate_compositions,
    enumerate_compositions_length,
    gessel_coefficient_bruteforce,
    gessel_coefficient_series,
)
from .dirichlet import (
    AlkanReport,
    DirichletCharacter,
    LSeriesValue,
    UnitGroupStructure,
    alkan_check,
    alkan_sweep,
    enumerate_characters,
    gauss_sum,
    l_value,
    s_sum,
    unit_group_structure,
)
from .errors import (
    ConsistencyError,
    DivergenceError,
    ParityError,
    PreconditionError,
    SizeLimitError,
)
from .exact import (
    CyclotomicElement,
    Polynomial,
    Rational,
    binomial,
    cyclo_root_power,
    cyclotomic_polynomial,
    format_rational,
    multinomial,
    parse_rational,
    poly_coefficient,
    polynomial_from_points,
)
from .exp_sums import (
    ExpSumQuery,
    FloatResidual,
    SweepResult,
    chain_coefficient_sum,
    eq3_residual_poly,
    exp_power_sum_complex,
    exp_power_sum_cyclo,
    prop1_residual_complex,
    prop1_residual_cyclo,
    run_coefficient_check,
    run_eq3,
    run_prop1_exact,
    run_prop1_float,
)
from .power_sums import (
    eq4_check,
    faulhaber_polynomial,
    h_faulhaber,
    h_naive,
    h_polynomial,
    h_recurrence,
    odd_recurrence_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "AlkanReport",
    "BernoulliTable",
    "Composition",
    "ConsistencyError",
    "CyclotomicElement",
    "DecreasingChain",
    "DirichletCharacter",
    "DivergenceError",
    "ExpSumQuery",
    "FloatResidual",
    "LSeriesValue",
    "ParityError",
    "Polynomial",
    "PreconditionError",
    "Rational",
    "RetrievalDetail",
    "SizeLimitError",
    "SweepResult",
    "UnitGroupStructure",
    "alkan_check",
    "alkan_sweep",
    "bernoulli_oracle",
    "bernoulli_table",
    "binomial",
    "chain_coefficient_sum",
    "chain_to_composition",
    "composition_to_chain",
    "cyclo_root_power",
    "cyclotomic_polynomial",
    "enumerate_chains",
    "enumerate_characters",
    "enumerate_compositions",
    "enumerate_compositions_length",
    "eq3_residual_poly",
    "eq4_check",
    "exp_power_sum_complex",
    "exp_power_sum_cyclo",
    "faulhaber_polynomial",
    "format_rational",
    "gauss_sum",
    "gessel_coefficient_bruteforce",
    "gessel_coefficient_series",
    "h_faulhaber",
    "h_naive",
    "h_polynomial",
    "h_recurrence",
    "l_value",
    "multinomial",
    "odd_recurrence_polynomial",
    "parse_rational",
    "poly_coefficient",
    "polynomial_from_points",
    "prop1_residual_complex",
    "prop1_residual_cyclo",
    "retrieve_bernoulli",
    "retrieve_bernoulli_detail",
    "run_coefficient_check",
    "run_eq3",
    "run_prop1_exact",
    "run_prop1_float",
    "s_sum",
    "unit_group_structure",
]
