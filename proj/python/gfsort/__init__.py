"""Sorting by guessing functions.

Thin re-export of the compiled extension: linear value-to-position
mappers (two-terminals and statistical), the per-box refinement, the
one- and two-pass sorting pipelines, seeded data generation, and the
benchmark harness.
"""

from ._core import (  # noqa: F401
    BenchConfig,
    BenchRow,
    BoxTable,
    DegenerateMapper,
    DistributionArray,
    DistributionSpec,
    EmptyBox,
    EmptyBoxStats,
    EmptyInput,
    Error,
    InvalidSpec,
    IoError,
    MapperKind,
    NonFiniteKey,
    OutOfRange,
    ParseError,
    RecordFile,
    RefinedMapper,
    SortStats,
    StatisticalMapper,
    TwoTerminalMapper,
    __version__,
    build_distribution_array,
    build_statistical_mapper,
    build_two_terminal_mapper,
    derive_seed,
    describe,
    empty_box_experiment,
    empty_box_experiment_stats,
    generate,
    insertion_sort,
    local_tangent,
    map_g1,
    map_g2,
    map_stat,
    quicksort_baseline,
    read_record_file,
    render_key,
    run_bench,
    scatter,
    sort_one_pass,
    sort_two_pass,
    validate,
    verify_sorted_permutation,
    write_csv,
    write_record_file,
)
