#include "indexradix/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <json.hpp>
#include <thread>

#include "indexradix/arith.hpp"
#include "indexradix/baselines.hpp"

namespace indexradix {

namespace {

IndexList ascending_to_list(const std::vector<Index>& part) {
  return IndexList::adopt(std::vector<Index>(part.rbegin(), part.rend()));
}

IndexList run_job(const ParallelJob& job, WorkerMultiplier multiplier) {
  switch (multiplier) {
    case WorkerMultiplier::karatsuba:
      return deconstruct(karatsuba_mul(reconstruct_sum(job.a_part),
                                       reconstruct_sum(job.b_part)));
    case WorkerMultiplier::ntt:
      return deconstruct(
          ntt_mul(reconstruct_sum(job.a_part), reconstruct_sum(job.b_part)));
    case WorkerMultiplier::poly_index:
      break;
  }
  return multiply_indices(job.a_part, job.b_part);
}

std::string describe(std::exception_ptr error) {
  try {
    std::rethrow_exception(error);
  } catch (const std::exception& e) {
    return e.what();
  } catch (...) {
    return "unknown failure";
  }
}

}  // namespace

std::size_t PartitionSet::total_entries() const noexcept {
  std::size_t total = 0;
  for (const auto& part : parts_) total += part.size();
  return total;
}

PartitionSet split(const IndexList& list, std::size_t partition_size) {
  if (partition_size == 0) throw DomainError("partition size must be at least 1");
  std::vector<std::vector<Index>> parts;
  parts.reserve(list.size() / partition_size + 1);
  std::vector<Index> current;
  current.reserve(partition_size);
  for (std::size_t k = list.size(); k-- > 0;) {
    current.push_back(list[k]);
    if (current.size() == partition_size) {
      parts.push_back(std::move(current));
      current = {};
      current.reserve(partition_size);
    }
  }
  if (!current.empty()) parts.push_back(std::move(current));
  return PartitionSet(std::move(parts));
}

std::vector<ParallelJob> make_jobs(const PartitionSet& a, const PartitionSet& b) {
  std::vector<IndexList> b_lists;
  b_lists.reserve(b.size());
  for (const auto& part : b.parts()) b_lists.push_back(ascending_to_list(part));

  std::vector<ParallelJob> jobs;
  jobs.reserve(a.size() * b.size());
  for (std::size_t row = 0; row < a.size(); ++row) {
    const IndexList a_list = ascending_to_list(a[row]);
    for (std::size_t column = 0; column < b.size(); ++column) {
      jobs.push_back(ParallelJob{a_list, b_lists[column], TaskId{row, column}});
    }
  }
  return jobs;
}

JobError::JobError(TaskId task_id, const std::string& message)
    : Error("task (" + std::to_string(task_id.row) + "," +
            std::to_string(task_id.column) + ") failed: " + message),
      task_id_(task_id) {}

std::vector<PartialProduct> dispatch(std::span<const ParallelJob> jobs,
                                     std::size_t worker_count,
                                     const DispatchOptions& options) {
  if (worker_count == 0) throw DomainError("worker count must be at least 1");
  const std::size_t n = jobs.size();
  std::vector<PartialProduct> results(n);
  std::vector<std::exception_ptr> errors(n);
  // Jobs after the earliest failure seen so far are skipped; earlier ones
  // still run so the reported failure does not depend on scheduling.
  std::atomic<std::size_t> first_failure{n};

  std::size_t thread_cap = options.thread_limit != 0
                               ? options.thread_limit
                               : std::max(1U, std::thread::hardware_concurrency());
  const std::size_t active_workers = std::min(worker_count, n);
  const std::size_t threads = std::max<std::size_t>(
      1, std::min(thread_cap, active_workers));

  // Logical worker w owns jobs w, w + worker_count, ...; thread t runs the
  // logical workers congruent to t modulo the thread count.
  auto run_thread = [&](std::size_t t) {
    for (std::size_t w = t; w < active_workers; w += threads) {
      for (std::size_t k = w; k < n; k += worker_count) {
        if (k > first_failure.load(std::memory_order_relaxed)) return;
        try {
          results[k] = PartialProduct{jobs[k].task_id, w,
                                      run_job(jobs[k], options.multiplier)};
        } catch (...) {
          errors[k] = std::current_exception();
          std::size_t seen = first_failure.load(std::memory_order_relaxed);
          while (k < seen && !first_failure.compare_exchange_weak(seen, k)) {
          }
        }
      }
    }
  };

  if (threads == 1) {
    run_thread(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run_thread, t);
  }

  for (std::size_t k = 0; k < n; ++k) {
    if (errors[k]) throw JobError(jobs[k].task_id, describe(errors[k]));
  }
  return results;
}

std::size_t partition_size_for(std::size_t length,
                               std::size_t estimated_partitions) {
  if (estimated_partitions == 0) {
    throw DomainError("estimated partition count must be at least 1");
  }
  return std::max<std::size_t>(1, length / estimated_partitions);
}

Natural aggregate(std::span<const PartialProduct> partials,
                  Aggregation aggregation) {
  if (aggregation == Aggregation::index_concat) {
    std::vector<Index> bag;
    for (const auto& p : partials) {
      bag.insert(bag.end(), p.product.begin(), p.product.end());
    }
    return reconstruct_sum(normalize(bag));
  }
  Natural sum;
  for (const auto& p : partials) sum += reconstruct_sum(p.product);
  return sum;
}

ParallelResult parallel_multiply_detailed(const Natural& a, const Natural& b,
                                          std::size_t estimated_partitions_a,
                                          std::size_t estimated_partitions_b,
                                          std::size_t max_cpu,
                                          const ParallelOptions& options) {
  if (max_cpu == 0) throw DomainError("max_cpu must be at least 1");
  const IndexList av = deconstruct(a);
  const IndexList bv = deconstruct(b);

  ParallelResult result;
  result.partition_size_a = partition_size_for(av.size(), estimated_partitions_a);
  result.partition_size_b = partition_size_for(bv.size(), estimated_partitions_b);
  const PartitionSet a_parts = split(av, result.partition_size_a);
  const PartitionSet b_parts = split(bv, result.partition_size_b);
  result.parts_a = a_parts.size();
  result.parts_b = b_parts.size();

  const std::size_t required = result.parts_a * result.parts_b;
  if (required > max_cpu) throw MaxCpuExceeded(required, max_cpu);

  result.jobs = make_jobs(a_parts, b_parts);
  result.worker_count = options.worker_count != 0
                            ? options.worker_count
                            : std::max<std::size_t>(1, result.jobs.size());
  result.partials = dispatch(result.jobs, result.worker_count, options.dispatch);
  result.product = aggregate(result.partials, options.aggregation);
  return result;
}

Natural parallel_multiply(const Natural& a, const Natural& b,
                          std::size_t estimated_partitions_a,
                          std::size_t estimated_partitions_b,
                          std::size_t max_cpu, const ParallelOptions& options) {
  return parallel_multiply_detailed(a, b, estimated_partitions_a,
                                    estimated_partitions_b, max_cpu, options)
      .product;
}

std::string trace_json(const ParallelResult& result) {
  nlohmann::json tasks = nlohmann::json::array();
  for (std::size_t k = 0; k < result.partials.size(); ++k) {
    const auto& partial = result.partials[k];
    const auto& job = result.jobs[k];
    tasks.push_back({
        {"task_id", {partial.task_id.row, partial.task_id.column}},
        {"a_part_size", job.a_part.size()},
        {"b_part_size", job.b_part.size()},
        {"partial_product", reconstruct_sum(partial.product).to_decimal()},
        {"worker", partial.worker},
    });
  }
  nlohmann::json doc = {
      {"partition_size_a", result.partition_size_a},
      {"partition_size_b", result.partition_size_b},
      {"parts_a", result.parts_a},
      {"parts_b", result.parts_b},
      {"task_count", result.task_count()},
      {"worker_count", result.worker_count},
      {"tasks", std::move(tasks)},
  };
  return doc.dump(2);
}

}  // namespace indexradix
