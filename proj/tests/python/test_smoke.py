"""Smoke tests for the gfsort Python bindings.

These keep to the seams: every exported surface gets touched, correctness
heavy-lifting stays in the C++ test suites.
"""

import math
import random

import pytest

import gfsort


def test_version():
    assert gfsort.__version__ == "1.0.0"


# ---------------------------------------------------------------------------
# Sorting pipelines.
# ---------------------------------------------------------------------------


def _random_records(n, seed):
    rng = random.Random(seed)
    return [rng.uniform(-2e7, 2e7) for _ in range(n)]


@pytest.mark.parametrize("pipeline", [gfsort.sort_one_pass, gfsort.sort_two_pass])
@pytest.mark.parametrize(
    "kind", [gfsort.MapperKind.two_terminal, gfsort.MapperKind.statistical]
)
def test_pipelines_match_python_sorted(pipeline, kind):
    records = _random_records(4096, seed=17)
    out, stats = pipeline(records, kind)
    assert out == sorted(records)
    assert stats.n_records == len(records)
    assert stats.max_occupancy >= 1
    assert stats.elapsed_map >= 0.0
    assert stats.elapsed_cleanup >= 0.0
    assert gfsort.verify_sorted_permutation(out, records)


def test_trivial_and_duplicate_inputs():
    assert gfsort.sort_one_pass([])[0] == []
    assert gfsort.sort_two_pass([3.0])[0] == [3.0]
    out, stats = gfsort.sort_one_pass([5.0] * 100)
    assert out == [5.0] * 100
    assert stats.max_occupancy == 100


def test_baseline_sorts():
    records = _random_records(1000, seed=3)
    assert gfsort.quicksort_baseline(records) == sorted(records)
    assert gfsort.insertion_sort(records[:50]) == sorted(records[:50])


def test_verify_rejects_wrong_output():
    assert not gfsort.verify_sorted_permutation([1.0, 2.0], [2.0, 3.0])
    assert not gfsort.verify_sorted_permutation([2.0, 1.0], [2.0, 1.0])


# ---------------------------------------------------------------------------
# Mappers.
# ---------------------------------------------------------------------------


def test_two_terminal_mapper_basics():
    mapper = gfsort.TwoTerminalMapper(x_min=0.0, x_max=8.0, n_boxes=5)
    assert mapper.k_global == 0.5
    assert mapper.map(0.0) == 1
    assert mapper.map(8.0) == 5
    assert mapper.map(3.0) == 2
    with pytest.raises(gfsort.OutOfRange):
        mapper.map(9.0)


def test_refined_mapper_positions():
    # Records spread over terminals [0, 9] with five boxes; the refined
    # mapper places each record inside its box's slot window.
    records = [0.0, 0.5, 1.5, 5.0, 7.9]
    mapper = gfsort.TwoTerminalMapper(0.0, 9.0, 5)
    table = gfsort.scatter(records, mapper)
    occupancies = [table.occupancy(b) for b in range(1, 6)]
    dist = gfsort.build_distribution_array(occupancies)
    refined = gfsort.RefinedMapper(mapper, dist)
    assert [gfsort.map_g2(refined, x) for x in records] == [1, 1, 2, 4, 5]


def test_statistical_mapper():
    mapper = gfsort.StatisticalMapper(mean=0.0, sigma=1.0, n_boxes=600)
    assert mapper.k_global == 100.0
    assert mapper.map(0.0) == 301
    assert mapper.map(5.0) == 600  # clamped above
    assert mapper.map(-4.0) == 1   # clamped below

    built = gfsort.build_statistical_mapper([-1.0, 1.0])
    assert built.mean == 0.0
    assert built.sigma == 1.0


def test_error_hierarchy():
    with pytest.raises(gfsort.EmptyInput):
        gfsort.build_two_terminal_mapper([])
    with pytest.raises(gfsort.InvalidSpec):
        gfsort.TwoTerminalMapper(0.0, 1.0, 0)
    degenerate = gfsort.TwoTerminalMapper(1.0, 1.0, 4)
    assert degenerate.degenerate
    with pytest.raises(gfsort.DegenerateMapper):
        degenerate.map(1.0)
    # Every library exception is a subclass of gfsort.Error.
    for exc in (gfsort.EmptyInput, gfsort.InvalidSpec, gfsort.OutOfRange,
                gfsort.DegenerateMapper, gfsort.EmptyBox, gfsort.ParseError,
                gfsort.IoError, gfsort.NonFiniteKey):
        assert issubclass(exc, gfsort.Error)


# ---------------------------------------------------------------------------
# Data generation.
# ---------------------------------------------------------------------------


def test_generate_is_deterministic():
    spec = gfsort.DistributionSpec()
    spec.kind = "uniform"
    spec.n = 512
    spec.seed = 99
    first = gfsort.generate(spec)
    assert first == gfsort.generate(spec)
    assert len(first) == 512
    assert all(spec.lo <= x < spec.hi for x in first)

    spec.kind = "constant"
    spec.value = 2.5
    assert gfsort.generate(spec) == [2.5] * 512

    with pytest.raises(gfsort.InvalidSpec):
        spec.kind = "zipf"


def test_describe_and_derive_seed():
    spec = gfsort.DistributionSpec()
    spec.kind = "gaussian"
    spec.n = 10
    spec.seed = 4
    line = gfsort.describe(spec)
    assert "gaussian" in line and "seed=4" in line and "xoshiro256++" in line
    assert gfsort.derive_seed(42, 7, 3) == 0x189DFF478E405EC5


# ---------------------------------------------------------------------------
# Benchmarks and the scatter census.
# ---------------------------------------------------------------------------


def test_empty_box_experiment_near_one_over_e():
    fraction = gfsort.empty_box_experiment(2**14, 3, seed=5)
    assert abs(fraction - math.exp(-1.0)) < 0.02
    stats = gfsort.empty_box_experiment_stats(2**14, 3, seed=5)
    assert stats.empty_fraction == fraction
    assert abs(stats.mean_occupancy - 1.0 / (1.0 - math.exp(-1.0))) < 0.05


def test_run_bench_row(tmp_path):
    config = gfsort.BenchConfig()
    config.algorithms = ["gf1"]
    config.scales = [8]
    config.trials = 1
    config.warmup = 0
    rows = gfsort.run_bench(config)
    assert len(rows) == 1
    row = rows[0]
    assert row.algorithm == "gf1"
    assert row.scale == 256
    assert row.distribution == "uniform"
    assert row.elapsed_s >= 0.0

    csv_path = tmp_path / "rows.csv"
    gfsort.write_csv(str(csv_path), rows)
    text = csv_path.read_text()
    assert text.startswith(
        "algorithm,scale,distribution,trial,seed,elapsed_s,"
        "empty_box_fraction,max_occupancy,cleanup_moves\n"
    )
    assert "gf1,256,uniform,0," in text


# ---------------------------------------------------------------------------
# Record files.
# ---------------------------------------------------------------------------


def test_record_file_round_trip(tmp_path):
    path = tmp_path / "records.txt"
    keys = [1.0, -0.5, 1e-300, 2e7]
    gfsort.write_record_file(str(path), keys, comments=["from the smoke test"])
    back = gfsort.read_record_file(str(path))
    assert back.comments == ["from the smoke test"]
    assert back.keys == keys

    assert gfsort.render_key(0.1) == "0.1"
    assert gfsort.render_key(-0.0) == "-0"

    path.write_text("1\nnan\n")
    with pytest.raises(gfsort.NonFiniteKey):
        gfsort.read_record_file(str(path))
