#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "indexradix/arith.hpp"
#include "indexradix/bench.hpp"
#include "indexradix/errors.hpp"
#include "indexradix/fraction.hpp"
#include "indexradix/index_repr.hpp"
#include "indexradix/parallel.hpp"

namespace indexradix::cli {

namespace {

// Thrown for bad arguments detected after CLI11 parsing.
struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// "@path" reads the argument from a file.
std::string argument_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return trim(read_file(arg.substr(1)));
  return arg;
}

Natural number_arg(const std::string& arg) { return parse_number(argument_text(arg)); }

NumberFormat output_format(bool hex) {
  return hex ? NumberFormat::hex : NumberFormat::decimal;
}

std::size_t thread_limit_from_env() {
  const char* value = std::getenv("INDEXRADIX_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(value, &end, 10);
  if (*end != '\0' || n == 0 || value[0] == '-') {
    throw UsageError("INDEXRADIX_THREADS must be a positive integer");
  }
  return static_cast<std::size_t>(n);
}

struct NumberOpts {
  std::string a;
  std::string b;
  bool hex = false;
};

struct PmulOpts {
  NumberOpts numbers;
  std::size_t parts_a = 1;
  std::size_t parts_b = 1;
  std::size_t max_cpu = 0;
  std::size_t workers = 0;
  std::string trace;
  Aggregation aggregation = Aggregation::integer_sum;
  WorkerMultiplier multiplier = WorkerMultiplier::poly_index;
};

struct FracOpts {
  std::string text;
  std::size_t sensitivity = kDefaultSensitivity;
  bool real = false;
};

struct BenchOpts {
  std::string profile = "ci";
  std::string config;
  std::vector<std::size_t> bits;
  int min_exp = -1;
  int max_exp = -1;
  std::vector<std::string> algorithms;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out = "bench.csv";
  bool out_set = false;
  std::string report_json;
  bool include_conversion = false;
};

void cmd_pmul(const PmulOpts& o, std::ostream& out) {
  ParallelOptions options;
  options.worker_count = o.workers;
  options.aggregation = o.aggregation;
  options.dispatch.multiplier = o.multiplier;
  options.dispatch.thread_limit = thread_limit_from_env();
  const std::size_t max_cpu =
      o.max_cpu != 0 ? o.max_cpu : std::numeric_limits<std::size_t>::max();
  const ParallelResult result =
      parallel_multiply_detailed(number_arg(o.numbers.a), number_arg(o.numbers.b),
                                 o.parts_a, o.parts_b, max_cpu, options);
  if (!o.trace.empty()) {
    std::ofstream trace(o.trace, std::ios::binary);
    if (!trace) throw std::runtime_error("cannot write trace to " + o.trace);
    trace << trace_json(result) << '\n';
  }
  out << format_number(result.product, output_format(o.numbers.hex)) << '\n';
}

void cmd_frac(const FracOpts& o, std::ostream& out) {
  const std::string text = argument_text(o.text);
  if (o.real) {
    const RealIndexLists lists = deconstruct_real(text, o.sensitivity);
    out << "{\"integer\":" << to_json(lists.integer)
        << ",\"fraction\":" << to_json(lists.fraction) << "}\n";
  } else {
    out << to_json(dec2binary(text, o.sensitivity)) << '\n';
  }
}

BenchConfig bench_config(const BenchOpts& o) {
  BenchConfig cfg;
  if (o.profile == "ci") {
    cfg = ci_profile();
  } else if (o.profile == "long") {
    cfg = long_profile();
  } else {
    throw UsageError("unknown profile '" + o.profile + "' (expected ci or long)");
  }
  if (!o.config.empty()) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(o.config));
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(std::string("bench config is not valid JSON: ") + e.what());
    }
    cfg = bench_config_from_json(doc);
    if (cfg.output.empty() || o.out_set) cfg.output = o.out;
  } else {
    cfg.output = o.out;
  }
  if (!o.bits.empty()) cfg.bit_sizes = o.bits;
  if (o.min_exp >= 0 || o.max_exp >= 0) {
    if (o.min_exp < 0 || o.max_exp < 0 || o.min_exp > o.max_exp) {
      throw UsageError("--min-exp and --max-exp must be given together, min <= max");
    }
    cfg.bit_sizes = power_of_two_grid(static_cast<unsigned>(o.min_exp),
                                      static_cast<unsigned>(o.max_exp));
  }
  if (!o.algorithms.empty()) {
    cfg.algorithms.clear();
    for (const auto& name : o.algorithms) cfg.algorithms.push_back(parse_algorithm(name));
  }
  if (o.reps != 0) cfg.repetitions = o.reps;
  if (o.seed_set) cfg.rng_seed = o.seed;
  if (o.include_conversion) cfg.include_conversion = true;
  cfg.validate();
  return cfg;
}

void cmd_bench(const BenchOpts& o, std::ostream& out, std::ostream& err) {
  const BenchConfig cfg = bench_config(o);
  const std::vector<BenchRecord> records = run_bench(cfg);
  out << "wrote " << records.size() << " records to " << cfg.output.string() << '\n';
  try {
    const CrossoverReport report = crossover_report(records);
    out << report.text();
    if (!o.report_json.empty()) {
      std::ofstream json(o.report_json, std::ios::binary);
      if (!json) throw std::runtime_error("cannot write " + o.report_json);
      json << report.to_json().dump(2) << '\n';
    }
  } catch (const InsufficientData& e) {
    err << "no crossover report: " << e.what() << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer arithmetic on sparse radix-2 index lists", "indexradix"};
  app.require_subcommand(1);

  std::string number;
  bool hex = false;
  auto* deconstruct_cmd = app.add_subcommand("deconstruct", "Print the index list of a number");
  deconstruct_cmd->add_option("number", number, "decimal, 0x-hex, or @file")->required();

  std::string list_text;
  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Print the number an index list denotes");
  reconstruct_cmd->add_option("indices", list_text, "JSON array, a,b,c, or @file")
      ->required();
  reconstruct_cmd->add_flag("--hex", hex, "print 0x-hex");

  NumberOpts binary;
  auto* add_cmd = app.add_subcommand("add", "Add two numbers in the index domain");
  auto* mul_cmd = app.add_subcommand("mul", "Multiply two numbers in the index domain");
  for (auto* cmd : {add_cmd, mul_cmd}) {
    cmd->add_option("a", binary.a)->required();
    cmd->add_option("b", binary.b)->required();
    cmd->add_flag("--hex", binary.hex, "print 0x-hex");
  }

  PmulOpts pmul;
  auto* pmul_cmd = app.add_subcommand("pmul", "Partitioned multiplication over workers");
  pmul_cmd->add_option("a", pmul.numbers.a)->required();
  pmul_cmd->add_option("b", pmul.numbers.b)->required();
  pmul_cmd->add_flag("--hex", pmul.numbers.hex, "print 0x-hex");
  pmul_cmd->add_option("--parts-a", pmul.parts_a, "estimated partitions of a")
      ->check(CLI::PositiveNumber);
  pmul_cmd->add_option("--parts-b", pmul.parts_b, "estimated partitions of b")
      ->check(CLI::PositiveNumber);
  pmul_cmd->add_option("--max-cpu", pmul.max_cpu,
                       "task limit (default: none)")
      ->check(CLI::PositiveNumber);
  pmul_cmd->add_option("--workers", pmul.workers, "logical workers (default: one per task)")
      ->check(CLI::PositiveNumber);
  pmul_cmd->add_option("--trace", pmul.trace, "write a JSON task trace");
  const std::map<std::string, Aggregation> aggregations{
      {"integer_sum", Aggregation::integer_sum}, {"index_concat", Aggregation::index_concat}};
  pmul_cmd->add_option("--aggregation", pmul.aggregation)
      ->transform(CLI::CheckedTransformer(aggregations));
  const std::map<std::string, WorkerMultiplier> multipliers{
      {"poly_index", WorkerMultiplier::poly_index},
      {"karatsuba", WorkerMultiplier::karatsuba},
      {"ntt", WorkerMultiplier::ntt}};
  pmul_cmd->add_option("--multiplier", pmul.multiplier)
      ->transform(CLI::CheckedTransformer(multipliers));

  FracOpts frac;
  auto* frac_cmd = app.add_subcommand("frac", "Negative index list of a decimal fraction");
  frac_cmd->add_option("value", frac.text, "e.g. 0.390625")->required();
  frac_cmd->add_option("--sensitivity", frac.sensitivity, "maximum fraction bits")
      ->check(CLI::PositiveNumber);
  frac_cmd->add_flag("--real", frac.real, "accept an integer part too");

  BenchOpts bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the multipliers and report crossovers");
  bench_cmd->add_option("--profile", bench.profile, "ci (2^2..2^14) or long (2^2..2^17)");
  bench_cmd->add_option("--config", bench.config, "JSON bench config");
  bench_cmd->add_option("--bits", bench.bits, "explicit bit sizes")->delimiter(',');
  bench_cmd->add_option("--min-exp", bench.min_exp)->check(CLI::Range(0, 40));
  bench_cmd->add_option("--max-exp", bench.max_exp)->check(CLI::Range(0, 40));
  bench_cmd->add_option("--algorithms", bench.algorithms)->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps)->check(CLI::PositiveNumber);
  auto* seed_opt = bench_cmd->add_option("--seed", bench.seed);
  auto* out_opt = bench_cmd->add_option("--out", bench.out, "CSV path");
  bench_cmd->add_option("--report-json", bench.report_json, "write the report as JSON");
  bench_cmd->add_flag("--include-conversion", bench.include_conversion,
                      "time deconstruct/reconstruct with poly_index");

  std::vector<const char*> argv{"indexradix"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  bench.seed_set = seed_opt->count() > 0;
  bench.out_set = out_opt->count() > 0;

  // Buffered so that failures leave stdout untouched.
  std::ostringstream result;
  try {
    if (*deconstruct_cmd) {
      result << to_json(deconstruct(number_arg(number))) << '\n';
    } else if (*reconstruct_cmd) {
      result << format_number(reconstruct_sum(parse_index_values(argument_text(list_text))),
                              output_format(hex))
             << '\n';
    } else if (*add_cmd) {
      const IndexList sum =
          add(deconstruct(number_arg(binary.a)), deconstruct(number_arg(binary.b)));
      result << format_number(reconstruct_sum(sum), output_format(binary.hex)) << '\n';
    } else if (*mul_cmd) {
      result << format_number(multiply_integers(number_arg(binary.a), number_arg(binary.b)),
                              output_format(binary.hex))
             << '\n';
    } else if (*pmul_cmd) {
      cmd_pmul(pmul, result);
    } else if (*frac_cmd) {
      cmd_frac(frac, result);
    } else if (*bench_cmd) {
      cmd_bench(bench, result, err);
    }
  } catch (const MaxCpuExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kMaxCpu;
  } catch (const BenchCorrectnessError& e) {
    err << "error: " << e.what() << '\n';
    return kBenchIncorrect;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  out << result.str();
  out.flush();
  return kOk;
}

}  // namespace indexradix::cli
