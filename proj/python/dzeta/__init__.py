"""Quenched average free energy of the zero-dimensional random-field phi^4 model.

The heavy lifting lives in the compiled extension ``dzeta._core``; this
package re-exports its public surface.
"""

from ._core import (
    EULER_GAMMA,
    ConvergenceError,
    DisorderDistribution,
    FreeEnergyReport,
    McConfig,
    McEstimate,
    ModelParams,
    MomentGrowthReport,
    MomentGrowthRow,
    MomentTable,
    PhiSplit,
    QuadratureConfig,
    QuadratureResult,
    SeriesConfig,
    action,
    annealed_value,
    compensated_sum,
    ein_series,
    exp_integral_e1,
    integrate_finite,
    integrate_real_line,
    log_partition_function,
    moment,
    moment_bound_constants,
    moment_table,
    partition_function,
    phi,
    phi_split,
    quenched_direct,
    quenched_free_energy,
    quenched_mc,
    remainder,
    remainder_bound,
    series_term,
    verify_moment_growth,
)

__all__ = [
    "EULER_GAMMA",
    "ConvergenceError",
    "DisorderDistribution",
    "FreeEnergyReport",
    "McConfig",
    "McEstimate",
    "ModelParams",
    "MomentGrowthReport",
    "MomentGrowthRow",
    "MomentTable",
    "PhiSplit",
    "QuadratureConfig",
    "QuadratureResult",
    "SeriesConfig",
    "action",
    "annealed_value",
    "compensated_sum",
    "ein_series",
    "exp_integral_e1",
    "integrate_finite",
    "integrate_real_line",
    "log_partition_function",
    "moment",
    "moment_bound_constants",
    "moment_table",
    "partition_function",
    "phi",
    "phi_split",
    "quenched_direct",
    "quenched_free_energy",
    "quenched_mc",
    "remainder",
    "remainder_bound",
    "series_term",
    "verify_moment_growth",
]

__version__ = "0.1.0"
