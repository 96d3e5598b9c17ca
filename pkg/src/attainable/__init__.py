"""Attainable partitions, their generating functions, and imaginary quadratic class groups."""

from .bijection import (
    TriangularMultiset,
    triangular_partitions,
    triangular_to_zero,
    zero_to_triangular,
)
from .class_group import (
    ClassGroupStructure,
    QuadForm,
    SurveyReport,
    class_group_structure,
    class_number,
    compose,
    is_fundamental_discriminant,
    reduced_forms,
    survey,
)
from .enumeration import (
    CountsTable,
    attainable_partitions,
    count_attainable,
    count_zero_cyclicity,
    counts_table,
    partitions,
    z,
)
from .errors import PreconditionError
from .group_invariants import (
    PGroupShape,
    Prediction,
    aut_order,
    cohen_lenstra_weight,
    predicted_count,
    predicted_cumulative,
    weight_asymptotic_exponent,
)
from .partitions import (
    Partition,
    cyclicity_index,
    extremal_long_partition,
    is_attainable,
    max_attainable_length,
    min_cyclicity_partition,
    part_bound,
    primary_addition,
    secondary_addition,
)
from .series import (
    PowerSeries,
    attainable_series,
    inverse_one_minus_qk,
    multiply,
    triangular_series,
    zero_cyclicity_series,
)

__version__ = "0.1.0"
