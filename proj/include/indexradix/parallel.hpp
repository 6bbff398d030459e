#pragma once
// parallel.hpp - Partitioned multiplication over independent workers.
//
// Both operands' index lists are cut into sub-arrays, every (a-part, b-part)
// pair becomes one job, jobs are handed to workers round-robin, and the
// partial products are summed by the controller. Jobs share no mutable state
// and only return values, so the result does not depend on scheduling.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "indexradix/errors.hpp"
#include "indexradix/index_repr.hpp"
#include "indexradix/natural.hpp"

namespace indexradix {

// Sub-arrays of a parent index list. Each part is ascending because parts are
// filled by popping from the tail of the descending parent.
class PartitionSet {
 public:
  PartitionSet() = default;
  explicit PartitionSet(std::vector<std::vector<Index>> parts)
      : parts_(std::move(parts)) {}

  const std::vector<std::vector<Index>>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<Index>& operator[](std::size_t i) const { return parts_[i]; }
  // Sum of the part lengths; equals the parent's popcount.
  std::size_t total_entries() const noexcept;

  friend bool operator==(const PartitionSet&, const PartitionSet&) = default;

 private:
  std::vector<std::vector<Index>> parts_;
};

// Cuts `list` into parts of `partition_size` entries (the last part may be
// shorter, none is empty). Throws DomainError if partition_size is zero.
PartitionSet split(const IndexList& list, std::size_t partition_size);

struct TaskId {
  std::size_t row = 0;     // index into the a-partitions
  std::size_t column = 0;  // index into the b-partitions

  friend auto operator<=>(const TaskId&, const TaskId&) = default;
};

struct ParallelJob {
  IndexList a_part;
  IndexList b_part;
  TaskId task_id;
};

// Row-major Cartesian grid of part pairs.
std::vector<ParallelJob> make_jobs(const PartitionSet& a, const PartitionSet& b);

// Per-job multiplication routine.
enum class WorkerMultiplier { poly_index, karatsuba, ntt };

struct PartialProduct {
  TaskId task_id;
  std::size_t worker = 0;
  IndexList product;
};

// Raised when a job fails; carries the failing job's id. The original
// exception message is kept in what().
class JobError : public Error {
 public:
  JobError(TaskId task_id, const std::string& message);
  TaskId task_id() const noexcept { return task_id_; }

 private:
  TaskId task_id_;
};

// Logical worker assigned to the job at `position` in task order.
constexpr std::size_t round_robin_worker(std::size_t position,
                                         std::size_t worker_count) noexcept {
  return position % worker_count;
}

struct DispatchOptions {
  WorkerMultiplier multiplier = WorkerMultiplier::poly_index;
  // Upper bound on OS threads backing the logical workers; 0 means
  // std::thread::hardware_concurrency().
  std::size_t thread_limit = 0;
};

// Runs every job exactly once. Job k goes to logical worker
// round_robin_worker(k, worker_count); logical workers are multiplexed onto at
// most thread_limit threads. Results come back in job order. The first failing
// job (in job order) is rethrown as JobError. Throws DomainError if
// worker_count is zero.
std::vector<PartialProduct> dispatch(std::span<const ParallelJob> jobs,
                                     std::size_t worker_count,
                                     const DispatchOptions& options = {});

enum class Aggregation {
  integer_sum,   // reconstruct each partial product, then add integers
  index_concat,  // concatenate partial index lists, normalize once
};

struct ParallelOptions {
  // 0 gives every task its own logical worker.
  std::size_t worker_count = 0;
  Aggregation aggregation = Aggregation::integer_sum;
  DispatchOptions dispatch;
};

struct ParallelResult {
  Natural product;
  std::size_t partition_size_a = 0;
  std::size_t partition_size_b = 0;
  std::size_t parts_a = 0;
  std::size_t parts_b = 0;
  std::size_t worker_count = 0;
  std::vector<ParallelJob> jobs;
  std::vector<PartialProduct> partials;

  std::size_t task_count() const noexcept { return jobs.size(); }
};

// Partition size for a list of `length` entries split into roughly
// `estimated_partitions` parts: floor(length / estimate), at least 1.
std::size_t partition_size_for(std::size_t length,
                               std::size_t estimated_partitions);

// Exact a * b. Throws MaxCpuExceeded when parts_a * parts_b > max_cpu,
// DomainError when an estimate or max_cpu is zero, and JobError if a worker
// fails.
ParallelResult parallel_multiply_detailed(const Natural& a, const Natural& b,
                                          std::size_t estimated_partitions_a,
                                          std::size_t estimated_partitions_b,
                                          std::size_t max_cpu,
                                          const ParallelOptions& options = {});

Natural parallel_multiply(const Natural& a, const Natural& b,
                          std::size_t estimated_partitions_a,
                          std::size_t estimated_partitions_b,
                          std::size_t max_cpu,
                          const ParallelOptions& options = {});

// Sums partial products according to `aggregation`.
Natural aggregate(std::span<const PartialProduct> partials, Aggregation aggregation);

// JSON task trace: one object per task with task id, part sizes, partial
// product (decimal) and worker id.
std::string trace_json(const ParallelResult& result);

}  // namespace indexradix
