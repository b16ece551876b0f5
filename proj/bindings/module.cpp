// Python bindings for the guessing-function sorting library.
//
// The extension is the `gfsort._core` module; the `gfsort` package
// re-exports everything here. Sequences cross the boundary as
// std::vector<double> copies — plenty for experimentation and the smoke
// tests; the C++ CLI is the tool for bulk runs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "gfsort/bench.hpp"
#include "gfsort/datagen.hpp"
#include "gfsort/error.hpp"
#include "gfsort/mapping.hpp"
#include "gfsort/record_io.hpp"
#include "gfsort/sort.hpp"

namespace py = pybind11;

namespace {

// Sort a copy through one pipeline; hand back (sorted, stats).
std::pair<std::vector<gfsort::Key>, gfsort::SortStats> run_pipeline(
    std::vector<gfsort::Key> records, bool two_pass, gfsort::MapperKind kind) {
    const gfsort::SortStats stats =
        two_pass ? gfsort::sort_two_pass(records, kind)
                 : gfsort::sort_one_pass(records, kind);
    return {std::move(records), stats};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "sorting by guessing functions: mappers, pipelines, benchmarks";
    m.attr("__version__") = "1.0.0";

    // Base first so the leaf translators (registered later, tried first)
    // win over it.
    static py::exception<gfsort::Error> error_exc(m, "Error");
    py::register_exception<gfsort::EmptyInput>(m, "EmptyInput", error_exc.ptr());
    py::register_exception<gfsort::NonFiniteKey>(m, "NonFiniteKey",
                                                 error_exc.ptr());
    py::register_exception<gfsort::OutOfRange>(m, "OutOfRange", error_exc.ptr());
    py::register_exception<gfsort::DegenerateMapper>(m, "DegenerateMapper",
                                                     error_exc.ptr());
    py::register_exception<gfsort::EmptyBox>(m, "EmptyBox", error_exc.ptr());
    py::register_exception<gfsort::InvalidSpec>(m, "InvalidSpec",
                                                error_exc.ptr());
    py::register_exception<gfsort::ParseError>(m, "ParseError", error_exc.ptr());
    py::register_exception<gfsort::IoError>(m, "IoError", error_exc.ptr());

    py::enum_<gfsort::MapperKind>(m, "MapperKind")
        .value("two_terminal", gfsort::MapperKind::two_terminal)
        .value("statistical", gfsort::MapperKind::statistical);

    py::class_<gfsort::TwoTerminalMapper>(m, "TwoTerminalMapper")
        .def(py::init<gfsort::Key, gfsort::Key, std::size_t>(), py::arg("x_min"),
             py::arg("x_max"), py::arg("n_boxes"))
        .def_property_readonly("x_min", &gfsort::TwoTerminalMapper::x_min)
        .def_property_readonly("x_max", &gfsort::TwoTerminalMapper::x_max)
        .def_property_readonly("n_boxes", &gfsort::TwoTerminalMapper::n_boxes)
        .def_property_readonly("k_global", &gfsort::TwoTerminalMapper::k_global)
        .def_property_readonly("degenerate",
                               &gfsort::TwoTerminalMapper::degenerate)
        .def("map", &gfsort::TwoTerminalMapper::map, py::arg("x"));

    py::class_<gfsort::StatisticalMapper>(m, "StatisticalMapper")
        .def(py::init<double, double, std::size_t>(), py::arg("mean"),
             py::arg("sigma"), py::arg("n_boxes"))
        .def_property_readonly("mean", &gfsort::StatisticalMapper::mean)
        .def_property_readonly("sigma", &gfsort::StatisticalMapper::sigma)
        .def_property_readonly("n_boxes", &gfsort::StatisticalMapper::n_boxes)
        .def_property_readonly("k_global", &gfsort::StatisticalMapper::k_global)
        .def_property_readonly("origin", &gfsort::StatisticalMapper::origin)
        .def_property_readonly("degenerate",
                               &gfsort::StatisticalMapper::degenerate)
        .def("map", &gfsort::StatisticalMapper::map, py::arg("x"));

    py::class_<gfsort::DistributionArray>(m, "DistributionArray")
        .def(py::init([](const std::vector<std::uint64_t>& occupancies) {
                 return gfsort::DistributionArray(
                     std::span<const std::uint64_t>(occupancies));
             }),
             py::arg("occupancies"))
        .def_property_readonly("n_boxes", &gfsort::DistributionArray::n_boxes)
        .def_property_readonly("total", &gfsort::DistributionArray::total)
        .def("a", &gfsort::DistributionArray::a, py::arg("n"))
        .def("occupancy", &gfsort::DistributionArray::occupancy, py::arg("n"));

    py::class_<gfsort::RefinedMapper>(m, "RefinedMapper")
        .def(py::init<gfsort::TwoTerminalMapper, gfsort::DistributionArray>(),
             py::arg("base"), py::arg("dist"))
        .def_property_readonly("base", &gfsort::RefinedMapper::base)
        .def("local_tangent", &gfsort::RefinedMapper::local_tangent, py::arg("n"))
        .def("position",
             [](const gfsort::RefinedMapper& self, gfsort::Key x) {
                 return self.position(x);
             },
             py::arg("x"));

    py::class_<gfsort::BoxTable>(m, "BoxTable")
        .def_property_readonly("n_boxes", &gfsort::BoxTable::n_boxes)
        .def_property_readonly("n_records", &gfsort::BoxTable::n_records)
        .def_property_readonly("empty_boxes", &gfsort::BoxTable::empty_boxes)
        .def_property_readonly("max_occupancy", &gfsort::BoxTable::max_occupancy)
        .def("occupancy", &gfsort::BoxTable::occupancy, py::arg("n"))
        .def("box",
             [](const gfsort::BoxTable& self, std::size_t n) {
                 const auto view = self.box(n);
                 return std::vector<gfsort::Key>(view.begin(), view.end());
             },
             py::arg("n"))
        .def("record_box", &gfsort::BoxTable::record_box, py::arg("i"));

    m.def("build_two_terminal_mapper",
          [](const std::vector<gfsort::Key>& records) {
              return gfsort::build_two_terminal_mapper(records);
          },
          py::arg("records"));
    m.def("build_statistical_mapper",
          [](const std::vector<gfsort::Key>& records) {
              return gfsort::build_statistical_mapper(records);
          },
          py::arg("records"));
    m.def("build_distribution_array",
          [](const std::vector<std::uint64_t>& occupancies) {
              return gfsort::build_distribution_array(occupancies);
          },
          py::arg("occupancies"));
    m.def("map_g1", &gfsort::map_g1, py::arg("mapper"), py::arg("x"));
    m.def("map_stat", &gfsort::map_stat, py::arg("mapper"), py::arg("x"));
    m.def("map_g2", &gfsort::map_g2, py::arg("mapper"), py::arg("x"));
    m.def("local_tangent", &gfsort::local_tangent, py::arg("mapper"),
          py::arg("n"));
    m.def("scatter",
          [](const std::vector<gfsort::Key>& records,
             const gfsort::TwoTerminalMapper& mapper) {
              return gfsort::scatter<gfsort::TwoTerminalMapper>(records, mapper);
          },
          py::arg("records"), py::arg("mapper"));
    m.def("scatter",
          [](const std::vector<gfsort::Key>& records,
             const gfsort::StatisticalMapper& mapper) {
              return gfsort::scatter<gfsort::StatisticalMapper>(records, mapper);
          },
          py::arg("records"), py::arg("mapper"));

    py::class_<gfsort::SortStats>(m, "SortStats")
        .def_readonly("n_records", &gfsort::SortStats::n_records)
        .def_readonly("empty_boxes", &gfsort::SortStats::empty_boxes)
        .def_readonly("max_occupancy", &gfsort::SortStats::max_occupancy)
        .def_readonly("cleanup_moves", &gfsort::SortStats::cleanup_moves)
        .def_readonly("g2_clamps", &gfsort::SortStats::g2_clamps)
        .def_readonly("elapsed_map", &gfsort::SortStats::elapsed_map)
        .def_readonly("elapsed_cleanup", &gfsort::SortStats::elapsed_cleanup);

    m.def("sort_one_pass",
          [](std::vector<gfsort::Key> records, gfsort::MapperKind kind) {
              return run_pipeline(std::move(records), false, kind);
          },
          py::arg("records"), py::arg("kind") = gfsort::MapperKind::two_terminal,
          "Returns (sorted, stats).");
    m.def("sort_two_pass",
          [](std::vector<gfsort::Key> records, gfsort::MapperKind kind) {
              return run_pipeline(std::move(records), true, kind);
          },
          py::arg("records"), py::arg("kind") = gfsort::MapperKind::two_terminal,
          "Returns (sorted, stats).");
    m.def("insertion_sort",
          [](std::vector<gfsort::Key> records) {
              gfsort::insertion_sort(records);
              return records;
          },
          py::arg("records"));
    m.def("quicksort_baseline",
          [](std::vector<gfsort::Key> records) {
              gfsort::quicksort_baseline(records);
              return records;
          },
          py::arg("records"));
    m.def("verify_sorted_permutation",
          [](const std::vector<gfsort::Key>& sorted,
             const std::vector<gfsort::Key>& original) {
              return gfsort::verify_sorted_permutation(sorted, original);
          },
          py::arg("sorted"), py::arg("original"));

    py::class_<gfsort::DistributionSpec>(m, "DistributionSpec")
        .def(py::init<>())
        .def_property(
            "kind",
            [](const gfsort::DistributionSpec& self) {
                return std::string(gfsort::dist_kind_name(self.kind));
            },
            [](gfsort::DistributionSpec& self, const std::string& name) {
                self.kind = gfsort::dist_kind_from_name(name);
            })
        .def_readwrite("n", &gfsort::DistributionSpec::n)
        .def_readwrite("seed", &gfsort::DistributionSpec::seed)
        .def_readwrite("lo", &gfsort::DistributionSpec::lo)
        .def_readwrite("hi", &gfsort::DistributionSpec::hi)
        .def_readwrite("mean", &gfsort::DistributionSpec::mean)
        .def_readwrite("sigma", &gfsort::DistributionSpec::sigma)
        .def_readwrite("value", &gfsort::DistributionSpec::value)
        .def_readwrite("centers", &gfsort::DistributionSpec::centers)
        .def_readwrite("weights", &gfsort::DistributionSpec::weights)
        .def_readwrite("spread", &gfsort::DistributionSpec::spread);

    m.def("validate", &gfsort::validate, py::arg("spec"));
    m.def("generate", &gfsort::generate, py::arg("spec"));
    m.def("describe", &gfsort::describe, py::arg("spec"));
    m.def("derive_seed", &gfsort::derive_seed, py::arg("base"), py::arg("stream"),
          py::arg("index"));

    py::class_<gfsort::BenchConfig>(m, "BenchConfig")
        .def(py::init<>())
        .def_property(
            "algorithms",
            [](const gfsort::BenchConfig& self) {
                std::vector<std::string> names;
                for (const auto a : self.algorithms)
                    names.emplace_back(gfsort::algorithm_name(a));
                return names;
            },
            [](gfsort::BenchConfig& self, const std::vector<std::string>& names) {
                self.algorithms.clear();
                for (const auto& name : names)
                    self.algorithms.push_back(gfsort::algorithm_from_name(name));
            })
        .def_readwrite("scales", &gfsort::BenchConfig::scales)
        .def_readwrite("distribution", &gfsort::BenchConfig::distribution)
        .def_readwrite("trials", &gfsort::BenchConfig::trials)
        .def_readwrite("warmup", &gfsort::BenchConfig::warmup);

    py::class_<gfsort::BenchRow>(m, "BenchRow")
        .def_property_readonly(
            "algorithm",
            [](const gfsort::BenchRow& self) {
                return std::string(gfsort::algorithm_name(self.algorithm));
            })
        .def_readonly("scale", &gfsort::BenchRow::scale)
        .def_property_readonly(
            "distribution",
            [](const gfsort::BenchRow& self) {
                return std::string(gfsort::dist_kind_name(self.distribution));
            })
        .def_readonly("trial", &gfsort::BenchRow::trial)
        .def_readonly("seed", &gfsort::BenchRow::seed)
        .def_readonly("elapsed_s", &gfsort::BenchRow::elapsed_s)
        .def_readonly("empty_box_fraction", &gfsort::BenchRow::empty_box_fraction)
        .def_readonly("max_occupancy", &gfsort::BenchRow::max_occupancy)
        .def_readonly("cleanup_moves", &gfsort::BenchRow::cleanup_moves);

    py::class_<gfsort::EmptyBoxStats>(m, "EmptyBoxStats")
        .def_readonly("empty_fraction", &gfsort::EmptyBoxStats::empty_fraction)
        .def_readonly("mean_occupancy", &gfsort::EmptyBoxStats::mean_occupancy);

    m.def("run_bench", &gfsort::run_bench, py::arg("config"));
    m.def("empty_box_experiment", &gfsort::empty_box_experiment, py::arg("n"),
          py::arg("trials"), py::arg("seed") = std::uint64_t{1});
    m.def("empty_box_experiment_stats", &gfsort::empty_box_experiment_stats,
          py::arg("n"), py::arg("trials"), py::arg("seed") = std::uint64_t{1});
    m.def("write_csv",
          [](const std::string& path, const std::vector<gfsort::BenchRow>& rows) {
              gfsort::write_csv(path, rows);
          },
          py::arg("path"), py::arg("rows"));

    py::class_<gfsort::RecordFile>(m, "RecordFile")
        .def_readonly("comments", &gfsort::RecordFile::comments)
        .def_readonly("keys", &gfsort::RecordFile::keys);

    m.def("read_record_file", &gfsort::read_record_file, py::arg("path"));
    m.def("write_record_file",
          [](const std::string& path, const std::vector<gfsort::Key>& keys,
             const std::vector<std::string>& comments) {
              gfsort::write_record_file(path, keys, comments);
          },
          py::arg("path"), py::arg("keys"),
          py::arg("comments") = std::vector<std::string>{});
    m.def("render_key", &gfsort::render_key, py::arg("x"));
}
