#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <fstream>
#include <optional>

#include "indexradix/arith.hpp"
#include "indexradix/baselines.hpp"
#include "indexradix/bench.hpp"
#include "indexradix/errors.hpp"
#include "indexradix/fraction.hpp"
#include "indexradix/index_repr.hpp"
#include "indexradix/parallel.hpp"

namespace py = pybind11;
namespace ir = indexradix;

namespace {

// Python ints cross the boundary as hex text.
ir::Natural to_natural(const py::int_& value) {
  if (value < py::int_(0)) throw py::value_error("expected a non-negative integer");
  const std::string hex = py::str(py::module_::import("builtins").attr("format")(value, "x"));
  return ir::Natural::from_hex(hex);
}

py::int_ to_int(const ir::Natural& n) {
  const std::string hex = n.to_hex();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(hex.c_str(), nullptr, 16));
}

std::vector<ir::Index> to_vector(const ir::IndexList& list) {
  return {list.begin(), list.end()};
}

py::dict record_dict(const ir::BenchRecord& r) {
  py::dict d;
  d["algorithm"] = std::string(ir::algorithm_name(r.algorithm));
  d["bits"] = r.bits;
  d["median_seconds"] = r.median_seconds;
  d["repetitions"] = r.repetitions;
  d["correct"] = r.correct;
  d["seed"] = r.seed;
  d["includes_conversion"] = r.includes_conversion;
  return d;
}

ir::Aggregation parse_aggregation(const std::string& name) {
  if (name == "integer_sum") return ir::Aggregation::integer_sum;
  if (name == "index_concat") return ir::Aggregation::index_concat;
  throw ir::ParseError("unknown aggregation '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integer arithmetic on sparse radix-2 index lists";

  auto base = py::register_exception<ir::Error>(m, "IndexRadixError", PyExc_ValueError);
  py::register_exception<ir::ParseError>(m, "ParseError", base);
  py::register_exception<ir::DomainError>(m, "DomainError", base);
  py::register_exception<ir::IndexOverflow>(m, "IndexOverflow", base);
  py::register_exception<ir::CapacityExceeded>(m, "CapacityExceeded", base);
  py::register_exception<ir::MaxCpuExceeded>(m, "MaxCpuExceeded", base);
  py::register_exception<ir::InsufficientData>(m, "InsufficientData", base);
  py::register_exception<ir::BenchCorrectnessError>(m, "BenchCorrectnessError", base);
  py::register_exception<ir::JobError>(m, "JobError", base);

  m.def("deconstruct", [](const py::int_& n) { return to_vector(ir::deconstruct(to_natural(n))); },
        py::arg("n"), "Descending set-bit positions of n.");
  m.def("reconstruct",
        [](const std::vector<ir::Index>& indices) { return to_int(ir::reconstruct_sum(indices)); },
        py::arg("indices"), "Sum of 2**i; duplicates count multiply.");
  m.def("normalize",
        [](const std::vector<ir::Index>& bag) { return to_vector(ir::normalize(bag)); },
        py::arg("bag"));
  m.def("add_indices",
        [](std::vector<ir::Index> a, std::vector<ir::Index> b) {
          return to_vector(ir::add(ir::IndexList::from_descending(std::move(a)),
                                   ir::IndexList::from_descending(std::move(b))));
        },
        py::arg("a"), py::arg("b"));
  m.def("multiply_indices",
        [](std::vector<ir::Index> a, std::vector<ir::Index> b) {
          return to_vector(ir::multiply_indices(ir::IndexList::from_descending(std::move(a)),
                                                ir::IndexList::from_descending(std::move(b))));
        },
        py::arg("a"), py::arg("b"));
  m.def("add",
        [](const py::int_& a, const py::int_& b) {
          return to_int(ir::reconstruct_sum(
              ir::add(ir::deconstruct(to_natural(a)), ir::deconstruct(to_natural(b)))));
        },
        py::arg("a"), py::arg("b"));
  m.def("multiply",
        [](const py::int_& a, const py::int_& b) {
          const ir::Natural x = to_natural(a), y = to_natural(b);
          ir::Natural product;
          {
            py::gil_scoped_release release;
            product = ir::multiply_integers(x, y);
          }
          return to_int(product);
        },
        py::arg("a"), py::arg("b"));
  m.def("schoolbook_multiply",
        [](const py::int_& a, const py::int_& b) {
          return to_int(ir::schoolbook_mul(to_natural(a), to_natural(b)));
        },
        py::arg("a"), py::arg("b"));
  m.def("karatsuba_multiply",
        [](const py::int_& a, const py::int_& b, std::size_t cutoff_limbs) {
          return to_int(ir::karatsuba_mul(to_natural(a), to_natural(b),
                                          ir::KaratsubaOptions{cutoff_limbs}));
        },
        py::arg("a"), py::arg("b"), py::arg("cutoff_limbs") = 32);
  m.def("ntt_multiply",
        [](const py::int_& a, const py::int_& b) {
          return to_int(ir::ntt_mul(to_natural(a), to_natural(b)));
        },
        py::arg("a"), py::arg("b"));

  m.def("parallel_multiply",
        [](const py::int_& a, const py::int_& b, std::size_t parts_a, std::size_t parts_b,
           std::size_t max_cpu, std::size_t workers, const std::string& aggregation,
           std::size_t threads) {
          ir::ParallelOptions options;
          options.worker_count = workers;
          options.aggregation = parse_aggregation(aggregation);
          options.dispatch.thread_limit = threads;
          const ir::Natural x = to_natural(a), y = to_natural(b);
          ir::ParallelResult r;
          {
            py::gil_scoped_release release;
            r = ir::parallel_multiply_detailed(x, y, parts_a, parts_b, max_cpu, options);
          }
          return py::make_tuple(to_int(r.product), r.task_count());
        },
        py::arg("a"), py::arg("b"), py::arg("parts_a"), py::arg("parts_b"), py::arg("max_cpu"),
        py::arg("workers") = 0, py::arg("aggregation") = "integer_sum", py::arg("threads") = 0,
        "Returns (product, task_count).");
  m.def("split",
        [](std::vector<ir::Index> indices, std::size_t size) {
          return ir::split(ir::IndexList::from_descending(std::move(indices)), size).parts();
        },
        py::arg("indices"), py::arg("partition_size"));

  m.def("dec2binary",
        [](const std::string& text, std::size_t sensitivity) {
          const auto f = ir::dec2binary(text, sensitivity);
          return std::vector<ir::Index>(f.indices().begin(), f.indices().end());
        },
        py::arg("fraction"), py::arg("sensitivity") = ir::kDefaultSensitivity);
  m.def("reconstruct_fraction",
        [](std::vector<ir::Index> indices) {
          const std::size_t bound = std::max<std::size_t>(indices.size(), 1);
          return ir::reconstruct_fraction(
              ir::FractionIndexList::from_descending(std::move(indices), bound));
        },
        py::arg("indices"));

  m.def("gen_operand",
        [](std::size_t bits, std::uint64_t seed) { return to_int(ir::gen_operand(bits, seed)); },
        py::arg("bits"), py::arg("seed"));
  m.def("run_bench",
        [](std::vector<std::size_t> bits, const std::vector<std::string>& algorithms,
           std::size_t repetitions, std::uint64_t seed,
           std::optional<std::filesystem::path> output, bool include_conversion) {
          ir::BenchConfig cfg;
          cfg.bit_sizes = std::move(bits);
          for (const auto& name : algorithms) cfg.algorithms.push_back(ir::parse_algorithm(name));
          cfg.repetitions = repetitions;
          cfg.rng_seed = seed;
          cfg.include_conversion = include_conversion;
          if (output) cfg.output = *output;
          std::vector<ir::BenchRecord> records;
          {
            py::gil_scoped_release release;
            records = ir::run_bench(cfg);
          }
          py::list out;
          for (const auto& r : records) out.append(record_dict(r));
          return out;
        },
        py::arg("bits"), py::arg("algorithms"), py::arg("repetitions") = 3, py::arg("seed") = 1,
        py::arg("output") = py::none(), py::arg("include_conversion") = false);
  m.def("read_csv",
        [](const std::filesystem::path& path) {
          std::ifstream in(path, std::ios::binary);
          if (!in) throw py::value_error("cannot open " + path.string());
          py::list out;
          for (const auto& r : ir::read_csv(in)) out.append(record_dict(r));
          return out;
        },
        py::arg("path"));
  m.def("crossover_report",
        [](const std::filesystem::path& csv) {
          std::ifstream in(csv, std::ios::binary);
          if (!in) throw py::value_error("cannot open " + csv.string());
          const auto report = ir::crossover_report(ir::read_csv(in));
          return py::make_tuple(report.text(), report.to_json().dump());
        },
        py::arg("csv"), "Returns (text, json_text) for a bench CSV.");
  m.attr("CSV_HEADER") = std::string(ir::kBenchCsvHeader);
}
