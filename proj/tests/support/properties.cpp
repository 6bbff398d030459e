#include "properties.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <limits>
#include <vector>

#include "indexradix/arith.hpp"
#include "indexradix/baselines.hpp"
#include "indexradix/index_repr.hpp"
#include "indexradix/parallel.hpp"
#include "oracle.hpp"

namespace properties {

namespace {

using namespace indexradix;
using oracle::from_mpz;
using oracle::set_bits;
using oracle::to_mpz;

template <typename Case>
SuiteResult run_suite(std::size_t cases, Case&& one_case) {
  SuiteResult result;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < cases; ++k) {
    std::string failure;
    try {
      failure = one_case(k);
    } catch (const std::exception& e) {
      failure = std::string("threw: ") + e.what();
    }
    ++result.cases;
    if (!failure.empty() && result.failures++ == 0) {
      result.first_failure = "case " + std::to_string(k) + ": " + failure;
    }
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<Index> as_vector(const IndexList& list) {
  return {list.begin(), list.end()};
}

std::string hex(const mpz_class& z) { return "0x" + z.get_str(16); }

}  // namespace

SuiteResult round_trip(std::size_t cases, std::uint64_t seed, std::size_t max_bits) {
  oracle::Source src(seed);
  return run_suite(cases, [&](std::size_t k) -> std::string {
    const mpz_class z = src.with_bits(src.uniform(1, max_bits));
    const Natural n = from_mpz(z);
    const IndexList list = deconstruct(n);
    if (to_mpz(reconstruct_sum(list)) != z) return "reconstruct_sum differs for " + hex(z);
    if (k % 16 == 0 && to_mpz(reconstruct_strings(list)) != z) {
      return "reconstruct_strings differs for " + hex(z);
    }
    return {};
  });
}

SuiteResult popcount_length(std::size_t cases, std::uint64_t seed, std::size_t max_bits) {
  oracle::Source src(seed);
  return run_suite(cases, [&](std::size_t) -> std::string {
    const mpz_class z = src.up_to(max_bits);
    const IndexList list = deconstruct(from_mpz(z));
    if (!is_canonical(list.indices())) return "non-canonical list for " + hex(z);
    if (list.size() != mpz_popcount(z.get_mpz_t())) return "length != popcount for " + hex(z);
    if (as_vector(list) != set_bits(z)) return "set bits differ for " + hex(z);
    return {};
  });
}

SuiteResult add_homomorphism(std::size_t cases, std::uint64_t seed, std::size_t max_bits) {
  oracle::Source src(seed);
  return run_suite(cases, [&](std::size_t) -> std::string {
    const mpz_class a = src.up_to(max_bits);
    const mpz_class b = src.up_to(max_bits);
    const IndexList sum = add(deconstruct(from_mpz(a)), deconstruct(from_mpz(b)));
    if (as_vector(sum) != set_bits(a + b)) return "add(" + hex(a) + ", " + hex(b) + ")";
    return {};
  });
}

SuiteResult multiply_homomorphism(std::size_t cases, std::uint64_t seed,
                                  std::size_t max_bits) {
  oracle::Source src(seed);
  return run_suite(cases, [&](std::size_t) -> std::string {
    const mpz_class a = src.up_to(max_bits);
    const mpz_class b = src.up_to(max_bits);
    const IndexList product =
        multiply_indices(deconstruct(from_mpz(a)), deconstruct(from_mpz(b)));
    if (as_vector(product) != set_bits(a * b)) {
      return "multiply(" + hex(a) + ", " + hex(b) + ")";
    }
    return {};
  });
}

SuiteResult multiplier_agreement(std::size_t cases, std::uint64_t seed,
                                 std::size_t max_bits) {
  oracle::Source src(seed);
  return run_suite(cases, [&](std::size_t) -> std::string {
    const mpz_class a = src.up_to(max_bits);
    const mpz_class b = src.up_to(max_bits);
    const Natural na = from_mpz(a);
    const Natural nb = from_mpz(b);
    const mpz_class expected = a * b;
    const std::string operands = " for " + std::to_string(mpz_sizeinbase(a.get_mpz_t(), 2)) +
                                 "x" + std::to_string(mpz_sizeinbase(b.get_mpz_t(), 2)) +
                                 " bits";
    if (to_mpz(multiply_integers(na, nb)) != expected) return "poly index" + operands;
    if (to_mpz(schoolbook_mul(na, nb)) != expected) return "schoolbook" + operands;
    if (to_mpz(karatsuba_mul(na, nb)) != expected) return "karatsuba" + operands;
    if (to_mpz(ntt_mul(na, nb)) != expected) return "ntt" + operands;
    return {};
  });
}

SuiteResult parallel_equivalence(std::size_t cases, std::uint64_t seed,
                                 std::size_t max_bits, std::size_t invariance_every) {
  oracle::Source src(seed);
  constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();
  // 0 stands for "one worker per task".
  constexpr std::size_t kPools[] = {1, 2, 8, 0};

  auto options_for = [](std::size_t pool, Aggregation aggregation) {
    ParallelOptions options;
    options.worker_count = pool;
    options.aggregation = aggregation;
    options.dispatch.thread_limit = pool == 0 ? 8 : std::min<std::size_t>(pool, 8);
    return options;
  };

  return run_suite(cases, [&](std::size_t k) -> std::string {
    const mpz_class a = src.up_to(max_bits);
    const mpz_class b = src.up_to(max_bits);
    const Natural na = from_mpz(a);
    const Natural nb = from_mpz(b);
    const std::size_t pa = src.log_uniform(1, std::max<std::size_t>(1, na.popcount()));
    const std::size_t pb = src.log_uniform(1, std::max<std::size_t>(1, nb.popcount()));
    const std::size_t pool = kPools[src.uniform(0, 3)];
    const std::string where = " (pa=" + std::to_string(pa) + ", pb=" + std::to_string(pb) +
                              ", pool=" + std::to_string(pool) + ")";

    const Natural expected = multiply_integers(na, nb);
    if (to_mpz(expected) != a * b) return "multiply_integers disagrees with GMP" + where;
    const ParallelResult first = parallel_multiply_detailed(
        na, nb, pa, pb, kNoLimit, options_for(pool, Aggregation::integer_sum));
    if (first.product != expected) return "parallel product differs" + where;
    if (first.task_count() != first.parts_a * first.parts_b) return "task count" + where;

    if (k % invariance_every != 0) return {};
    for (std::size_t other : kPools) {
      for (Aggregation agg : {Aggregation::integer_sum, Aggregation::index_concat}) {
        const ParallelResult r =
            parallel_multiply_detailed(na, nb, pa, pb, kNoLimit, options_for(other, agg));
        if (r.product != expected) {
          return "product changed with pool " + std::to_string(other) + where;
        }
        if (r.partials.size() != first.partials.size()) return "partial count" + where;
        for (std::size_t i = 0; i < r.partials.size(); ++i) {
          if (r.partials[i].task_id != first.partials[i].task_id ||
              r.partials[i].product != first.partials[i].product) {
            return "partial products depend on the pool" + where;
          }
        }
      }
    }
    return {};
  });
}

SuiteResult normalize_laws(std::size_t cases, std::uint64_t seed) {
  oracle::Source src(seed);
  return run_suite(cases, [&](std::size_t) -> std::string {
    const std::size_t size = src.uniform(0, 300);
    Index range = 0;
    Index offset = 0;
    switch (src.uniform(0, 2)) {
      case 0:
        range = static_cast<Index>(src.uniform(1, 64));
        break;
      case 1:
        range = static_cast<Index>(src.uniform(1, 5000));
        break;
      default:
        range = static_cast<Index>(src.uniform(1, 2000));
        offset = static_cast<Index>(src.uniform(0, std::size_t{1} << 50));
        break;
    }
    std::vector<Index> bag(size);
    for (Index& e : bag) e = offset + static_cast<Index>(src.uniform(0, range - 1));

    const IndexList normal = normalize(bag);
    if (!is_canonical(normal.indices())) return "non-canonical result";

    // Compare values relative to the offset so huge indices stay cheap.
    std::vector<Index> relative_bag(bag);
    for (Index& e : relative_bag) e -= offset;
    std::vector<Index> relative_normal = as_vector(normal);
    for (Index& e : relative_normal) e -= offset;
    if (relative_normal != set_bits(oracle::sum_of_powers(relative_bag))) {
      return "value changed, bag size " + std::to_string(size);
    }

    if (normalize(normal.indices()) != normal) return "not idempotent";
    std::shuffle(bag.begin(), bag.end(), src.engine());
    if (normalize(bag) != normal) return "depends on entry order";

    if (size <= 64) {
      std::vector<Index> reference = simplify_reference(bag);
      std::sort(reference.rbegin(), reference.rend());
      if (reference != as_vector(normal)) return "reference simplifier disagrees";
    }
    return {};
  });
}

}  // namespace properties
