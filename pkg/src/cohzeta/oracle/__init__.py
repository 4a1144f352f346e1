"""Brute-force enumeration oracles over small finite fields."""

from ._backend import BACKEND
from .enumerate import (
    DEFAULT_GUARD,
    GuardExceeded,
    Subspace,
    cotype,
    default_guard,
    echelon_estimate,
    enumerate_submodules,
    module_type,
)
from .fields import FieldSpec, as_field
from .modules import (
    ModuleSpec,
    extension_space,
    hall_module,
    inert_m1_quotient,
    order_module,
)
from .ops import (
    CSV_COLUMNS,
    OracleResult,
    hall_count_oracle,
    hall_table,
    moebius_oracle,
    moebius_to_top,
    quot_zeta_oracle_inert_m1,
    saturating_subspace_count_oracle,
    saturation_zeta_oracle,
    timed,
    write_csv,
)

__all__ = [
    "BACKEND",
    "CSV_COLUMNS",
    "DEFAULT_GUARD",
    "FieldSpec",
    "GuardExceeded",
    "ModuleSpec",
    "OracleResult",
    "Subspace",
    "as_field",
    "cotype",
    "default_guard",
    "echelon_estimate",
    "enumerate_submodules",
    "extension_space",
    "hall_count_oracle",
    "hall_module",
    "hall_table",
    "inert_m1_quotient",
    "module_type",
    "moebius_oracle",
    "moebius_to_top",
    "order_module",
    "quot_zeta_oracle_inert_m1",
    "saturating_subspace_count_oracle",
    "saturation_zeta_oracle",
    "timed",
    "write_csv",
]
