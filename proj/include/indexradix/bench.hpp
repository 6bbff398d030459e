#pragma once
// bench.hpp - Timing harness for the multiplication algorithms.
//
// Each (algorithm, bit size) point multiplies one deterministic operand pair:
// a calibrated batch of calls is timed per repetition (after an untimed
// warm-up), the per-call median over repetitions is recorded, and one product
// is checked against an independent multiplier.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "indexradix/natural.hpp"

namespace indexradix {

enum class Algorithm { poly_index, karatsuba, ntt, schoolbook };

std::string_view algorithm_name(Algorithm algorithm) noexcept;
// Throws ParseError for an unknown name.
Algorithm parse_algorithm(std::string_view name);

struct BenchConfig {
  std::vector<std::size_t> bit_sizes;
  std::size_t repetitions = 3;
  std::vector<Algorithm> algorithms;
  std::uint64_t rng_seed = 1;
  // CSV destination; empty means no file is written.
  std::filesystem::path output;
  // Time deconstruct/reconstruct along with the poly_index product.
  bool include_conversion = false;
  // Minimum wall time of one timed batch.
  double min_batch_seconds = 2e-4;

  // Throws DomainError on non-positive or non-ascending sizes, zero
  // repetitions, or an empty algorithm list with a non-empty grid.
  void validate() const;
};

// Powers of two 2^min_exponent .. 2^max_exponent.
std::vector<std::size_t> power_of_two_grid(unsigned min_exponent,
                                           unsigned max_exponent);
// 2^2 .. 2^14 with poly_index, karatsuba and ntt.
BenchConfig ci_profile();
// 2^2 .. 2^17; minutes rather than seconds.
BenchConfig long_profile();
// Reads the JSON form {"bit_sizes": [...], "repetitions": 3,
// "algorithms": [...], "seed": 1, "output": "...", "include_conversion": false}.
// Missing keys keep the ci_profile() values.
BenchConfig bench_config_from_json(const nlohmann::json& doc);

struct BenchRecord {
  Algorithm algorithm = Algorithm::poly_index;
  std::size_t bits = 0;
  double median_seconds = 0.0;
  std::size_t repetitions = 0;
  bool correct = false;
  std::uint64_t seed = 0;
  bool includes_conversion = false;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

// Uniform random integer with exactly `bits` bits (top bit forced to 1),
// deterministic in (bits, seed). Throws DomainError if bits is zero.
Natural gen_operand(std::size_t bits, std::uint64_t seed);

// Seed of the operand pair used at grid point `bits`: operands are
// gen_operand(bits, s) and gen_operand(bits, s + 1).
std::uint64_t pair_seed(std::uint64_t rng_seed, std::size_t bits) noexcept;

// Throws BenchCorrectnessError if `product` differs from `expected`.
void verify_product(Algorithm algorithm, std::size_t bits, const Natural& product,
                    const Natural& expected);

// Runs the configured grid and writes the CSV when cfg.output is set.
// Throws BenchCorrectnessError on any wrong product and std::runtime_error if
// the output cannot be written.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

inline constexpr std::string_view kBenchCsvHeader =
    "algorithm,bits,median_seconds,repetitions,correct,seed,includes_conversion";

void write_csv(std::ostream& out, std::span<const BenchRecord> records);
void write_csv(const std::filesystem::path& path,
               std::span<const BenchRecord> records);
// Throws ParseError on a wrong header or malformed row.
std::vector<BenchRecord> read_csv(std::istream& in);

struct Crossover {
  Algorithm incumbent;
  Algorithm challenger;
  // Smallest shared size from which the challenger is faster at every larger
  // shared size; empty when that never happens in range.
  std::optional<std::size_t> bits;
  std::size_t shared_points = 0;
};

struct RankingRow {
  std::size_t bits = 0;
  std::vector<Algorithm> fastest_first;
};

struct CrossoverReport {
  std::vector<Crossover> crossovers;
  std::vector<RankingRow> ranking;

  std::string text() const;
  nlohmann::json to_json() const;
};

// Crossovers for every ordered pair of algorithms in `records`, plus the
// per-size ranking. Throws InsufficientData if fewer than two algorithms are
// present or any pair shares fewer than two sizes.
CrossoverReport crossover_report(std::span<const BenchRecord> records);

}  // namespace indexradix
