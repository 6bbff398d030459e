#include "indexradix/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "indexradix/arith.hpp"
#include "indexradix/baselines.hpp"
#include "indexradix/errors.hpp"
#include "indexradix/index_repr.hpp"

namespace indexradix {

namespace {

constexpr Algorithm kAllAlgorithms[] = {Algorithm::poly_index, Algorithm::karatsuba,
                                        Algorithm::ntt, Algorithm::schoolbook};

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Keeps results observable so the timed calls are not optimized away.
volatile std::size_t g_sink = 0;

template <typename Call>
double median_seconds_per_call(Call&& call, std::size_t repetitions,
                               double min_batch_seconds) {
  using Clock = std::chrono::steady_clock;
  auto time_batch = [&](std::size_t iterations) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < iterations; ++i) g_sink = g_sink + call();
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  std::size_t iterations = 1;
  for (double t = time_batch(1); t < min_batch_seconds && iterations < (1U << 30);) {
    iterations *= 2;
    t = time_batch(iterations);
  }

  std::vector<double> samples;
  samples.reserve(repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) {
    samples.push_back(time_batch(iterations) / static_cast<double>(iterations));
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  const double median = samples.size() % 2 == 1
                            ? samples[mid]
                            : 0.5 * (samples[mid - 1] + samples[mid]);
  // A batch below timer resolution still costs something.
  return std::max(median, 1e-12);
}

struct OperandPair {
  std::size_t bits;
  std::uint64_t seed;
  Natural a;
  Natural b;
  Natural reference;  // schoolbook product
};

BenchRecord measure(Algorithm algorithm, const OperandPair& pair,
                    const BenchConfig& cfg) {
  BenchRecord record;
  record.algorithm = algorithm;
  record.bits = pair.bits;
  record.repetitions = cfg.repetitions;
  record.seed = pair.seed;
  record.includes_conversion =
      algorithm == Algorithm::poly_index && cfg.include_conversion;

  const Natural& a = pair.a;
  const Natural& b = pair.b;
  Natural product;
  Natural expected = pair.reference;

  switch (algorithm) {
    case Algorithm::poly_index:
      if (cfg.include_conversion) {
        product = multiply_integers(a, b);
        record.median_seconds = median_seconds_per_call(
            [&] { return multiply_integers(a, b).limb_count(); }, cfg.repetitions,
            cfg.min_batch_seconds);
      } else {
        const IndexList av = deconstruct(a);
        const IndexList bv = deconstruct(b);
        product = reconstruct_sum(multiply_indices(av, bv));
        record.median_seconds = median_seconds_per_call(
            [&] { return multiply_indices(av, bv).size(); }, cfg.repetitions,
            cfg.min_batch_seconds);
      }
      break;
    case Algorithm::karatsuba:
      product = karatsuba_mul(a, b);
      record.median_seconds = median_seconds_per_call(
          [&] { return karatsuba_mul(a, b).limb_count(); }, cfg.repetitions,
          cfg.min_batch_seconds);
      break;
    case Algorithm::ntt:
      product = ntt_mul(a, b);
      record.median_seconds = median_seconds_per_call(
          [&] { return ntt_mul(a, b).limb_count(); }, cfg.repetitions,
          cfg.min_batch_seconds);
      break;
    case Algorithm::schoolbook:
      // Checked against an independent route rather than against itself.
      expected = karatsuba_mul(a, b);
      product = schoolbook_mul(a, b);
      record.median_seconds = median_seconds_per_call(
          [&] { return schoolbook_mul(a, b).limb_count(); }, cfg.repetitions,
          cfg.min_batch_seconds);
      break;
  }
  verify_product(algorithm, pair.bits, product, expected);
  record.correct = true;
  return record;
}

bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("expected true/false, got '" + std::string(s) + "'");
}

template <typename T>
T parse_unsigned(std::string_view s) {
  const std::string text(s);
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || text.front() == '-' || *end != '\0' || errno != 0) {
    throw ParseError("expected an unsigned integer, got '" + text + "'");
  }
  return static_cast<T>(v);
}

double parse_double(std::string_view s) {
  const std::string text(s);
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0') {
    throw ParseError("expected a number, got '" + text + "'");
  }
  return v;
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::poly_index:
      return "poly_index";
    case Algorithm::karatsuba:
      return "karatsuba";
    case Algorithm::ntt:
      return "ntt";
    case Algorithm::schoolbook:
      return "schoolbook";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == name) return a;
  }
  throw ParseError("unknown algorithm '" + std::string(name) + "'");
}

void BenchConfig::validate() const {
  if (repetitions == 0) throw DomainError("repetitions must be at least 1");
  for (std::size_t i = 0; i < bit_sizes.size(); ++i) {
    if (bit_sizes[i] == 0) throw DomainError("bit sizes must be positive");
    if (i > 0 && bit_sizes[i - 1] >= bit_sizes[i]) {
      throw DomainError("bit sizes must be strictly ascending");
    }
  }
  if (!bit_sizes.empty() && algorithms.empty()) {
    throw DomainError("no algorithms selected");
  }
}

std::vector<std::size_t> power_of_two_grid(unsigned min_exponent,
                                           unsigned max_exponent) {
  std::vector<std::size_t> grid;
  for (unsigned e = min_exponent; e <= max_exponent; ++e) {
    grid.push_back(std::size_t{1} << e);
  }
  return grid;
}

BenchConfig ci_profile() {
  BenchConfig cfg;
  cfg.bit_sizes = power_of_two_grid(2, 14);
  cfg.algorithms = {Algorithm::poly_index, Algorithm::karatsuba, Algorithm::ntt};
  return cfg;
}

BenchConfig long_profile() {
  BenchConfig cfg = ci_profile();
  cfg.bit_sizes = power_of_two_grid(2, 17);
  return cfg;
}

BenchConfig bench_config_from_json(const nlohmann::json& doc) {
  BenchConfig cfg = ci_profile();
  try {
    if (doc.contains("bit_sizes")) {
      cfg.bit_sizes = doc.at("bit_sizes").get<std::vector<std::size_t>>();
    }
    if (doc.contains("repetitions")) {
      cfg.repetitions = doc.at("repetitions").get<std::size_t>();
    }
    if (doc.contains("algorithms")) {
      cfg.algorithms.clear();
      for (const auto& name : doc.at("algorithms")) {
        cfg.algorithms.push_back(parse_algorithm(name.get<std::string>()));
      }
    }
    if (doc.contains("seed")) cfg.rng_seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("output")) cfg.output = doc.at("output").get<std::string>();
    if (doc.contains("include_conversion")) {
      cfg.include_conversion = doc.at("include_conversion").get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid bench config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

Natural gen_operand(std::size_t bits, std::uint64_t seed) {
  if (bits == 0) throw DomainError("operand bit size must be positive");
  std::mt19937_64 engine(seed);
  std::vector<Limb> limbs((bits + kLimbBits - 1) / kLimbBits);
  for (std::size_t i = 0; i < limbs.size(); i += 2) {
    const std::uint64_t word = engine();
    limbs[i] = static_cast<Limb>(word);
    if (i + 1 < limbs.size()) limbs[i + 1] = static_cast<Limb>(word >> kLimbBits);
  }
  const unsigned top_bits = static_cast<unsigned>((bits - 1) % kLimbBits) + 1;
  Limb& top = limbs.back();
  if (top_bits < kLimbBits) top &= (Limb{1} << top_bits) - 1;
  top |= Limb{1} << (top_bits - 1);
  return Natural::from_limbs(std::move(limbs));
}

std::uint64_t pair_seed(std::uint64_t rng_seed, std::size_t bits) noexcept {
  return splitmix64(rng_seed ^ splitmix64(bits));
}

void verify_product(Algorithm algorithm, std::size_t bits, const Natural& product,
                    const Natural& expected) {
  if (product != expected) {
    throw BenchCorrectnessError(std::string(algorithm_name(algorithm)) +
                                " produced a wrong product at " +
                                std::to_string(bits) + " bits");
  }
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  cfg.validate();
  std::vector<OperandPair> pairs;
  pairs.reserve(cfg.bit_sizes.size());
  for (std::size_t bits : cfg.bit_sizes) {
    const std::uint64_t seed = pair_seed(cfg.rng_seed, bits);
    Natural a = gen_operand(bits, seed);
    Natural b = gen_operand(bits, seed + 1);
    Natural reference = schoolbook_mul(a, b);
    pairs.push_back({bits, seed, std::move(a), std::move(b), std::move(reference)});
  }

  std::vector<BenchRecord> records;
  records.reserve(pairs.size() * cfg.algorithms.size());
  for (Algorithm algorithm : cfg.algorithms) {
    for (const OperandPair& pair : pairs) {
      records.push_back(measure(algorithm, pair, cfg));
    }
  }
  if (!cfg.output.empty()) write_csv(cfg.output, records);
  return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kBenchCsvHeader << '\n';
  char seconds[32];
  for (const BenchRecord& r : records) {
    std::snprintf(seconds, sizeof seconds, "%.17g", r.median_seconds);
    out << algorithm_name(r.algorithm) << ',' << r.bits << ',' << seconds << ','
        << r.repetitions << ',' << (r.correct ? "true" : "false") << ','
        << r.seed << ',' << (r.includes_conversion ? "true" : "false") << '\n';
  }
}

void write_csv(const std::filesystem::path& path,
               std::span<const BenchRecord> records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(out, records);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader) {
    throw ParseError("bench CSV header mismatch");
  }
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 7) throw ParseError("bench CSV row has wrong field count");
    BenchRecord r;
    r.algorithm = parse_algorithm(fields[0]);
    r.bits = parse_unsigned<std::size_t>(fields[1]);
    r.median_seconds = parse_double(fields[2]);
    r.repetitions = parse_unsigned<std::size_t>(fields[3]);
    r.correct = parse_bool(fields[4]);
    r.seed = parse_unsigned<std::uint64_t>(fields[5]);
    r.includes_conversion = parse_bool(fields[6]);
    records.push_back(r);
  }
  return records;
}

CrossoverReport crossover_report(std::span<const BenchRecord> records) {
  std::vector<Algorithm> order;
  std::map<Algorithm, std::map<std::size_t, double>> timings;
  for (const BenchRecord& r : records) {
    if (!timings.contains(r.algorithm)) order.push_back(r.algorithm);
    timings[r.algorithm][r.bits] = r.median_seconds;
  }
  if (order.size() < 2) {
    throw InsufficientData("crossover analysis needs at least two algorithms");
  }

  CrossoverReport report;
  for (Algorithm incumbent : order) {
    for (Algorithm challenger : order) {
      if (incumbent == challenger) continue;
      const auto& inc = timings[incumbent];
      const auto& chal = timings[challenger];
      std::vector<std::size_t> shared;
      for (const auto& [bits, _] : inc) {
        if (chal.contains(bits)) shared.push_back(bits);
      }
      if (shared.size() < 2) {
        throw InsufficientData(std::string(algorithm_name(incumbent)) + " and " +
                               std::string(algorithm_name(challenger)) +
                               " share fewer than two sizes");
      }
      Crossover c{incumbent, challenger, std::nullopt, shared.size()};
      for (auto it = shared.rbegin(); it != shared.rend(); ++it) {
        if (chal.at(*it) >= inc.at(*it)) break;
        c.bits = *it;
      }
      report.crossovers.push_back(c);
    }
  }

  std::map<std::size_t, std::vector<std::pair<double, Algorithm>>> by_size;
  for (Algorithm a : order) {
    for (const auto& [bits, seconds] : timings[a]) by_size[bits].push_back({seconds, a});
  }
  for (auto& [bits, entries] : by_size) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    RankingRow row{bits, {}};
    for (const auto& [_, a] : entries) row.fastest_first.push_back(a);
    report.ranking.push_back(std::move(row));
  }
  return report;
}

std::string CrossoverReport::text() const {
  std::ostringstream out;
  out << "crossovers (challenger faster than incumbent from the given size on)\n";
  for (const Crossover& c : crossovers) {
    out << "  " << algorithm_name(c.challenger) << " vs "
        << algorithm_name(c.incumbent) << ": ";
    if (c.bits) {
      out << *c.bits << " bits";
    } else {
      out << "none in range";
    }
    out << " (" << c.shared_points << " shared sizes)\n";
  }
  out << "ranking (fastest first)\n";
  for (const RankingRow& row : ranking) {
    out << "  " << row.bits << " bits:";
    for (std::size_t i = 0; i < row.fastest_first.size(); ++i) {
      out << (i == 0 ? " " : " < ") << algorithm_name(row.fastest_first[i]);
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json CrossoverReport::to_json() const {
  nlohmann::json doc;
  doc["crossovers"] = nlohmann::json::array();
  for (const Crossover& c : crossovers) {
    doc["crossovers"].push_back({
        {"incumbent", algorithm_name(c.incumbent)},
        {"challenger", algorithm_name(c.challenger)},
        {"bits", c.bits ? nlohmann::json(*c.bits) : nlohmann::json(nullptr)},
        {"shared_points", c.shared_points},
    });
  }
  doc["ranking"] = nlohmann::json::array();
  for (const RankingRow& row : ranking) {
    nlohmann::json names = nlohmann::json::array();
    for (Algorithm a : row.fastest_first) names.push_back(algorithm_name(a));
    doc["ranking"].push_back({{"bits", row.bits}, {"fastest_first", names}});
  }
  return doc;
}

}  // namespace indexradix
