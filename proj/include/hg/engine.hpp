/*
Copyright (c) 2026 The hybridgraph Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Bulk-synchronous engine over a PartitionSet. Each superstep runs a
// compute phase on every partition, then a communication phase that moves
// whole outbox/inbox value arrays between partitions, then a vote. Values
// written during superstep i become visible to compute at superstep i+1.

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <concepts>
#include <cstring>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include <omp.h>

#include "hg/partition.hpp"
#include "hg/run_report.hpp"

namespace hg {

enum class Direction {
  // Compute folds into neighbour slots; outboxes are shipped to the owners'
  // inboxes and scattered into their state.
  kPush,
  // Owners publish boundary vertices' state into their inboxes, which are
  // copied into the referencing partitions' outbox slots before compute;
  // compute then reads remote neighbours from those slots.
  kPull,
};

template <typename Msg>
concept Payload = std::is_trivially_copyable_v<Msg> && std::equality_comparable<Msg>;

template <Payload Msg>
using CombineFn = Msg (*)(const Msg&, const Msg&);

// Folds `value` into `slot` with a compare-and-swap loop. Returns true when
// the stored value changed.
template <Payload Msg>
bool atomic_fold(Msg& slot, const Msg& value, CombineFn<Msg> combine) {
  std::atomic_ref<Msg> ref(slot);
  Msg expected = ref.load(std::memory_order_relaxed);
  for (;;) {
    const Msg desired = combine(expected, value);
    if (desired == expected) return false;
    if (ref.compare_exchange_weak(expected, desired, std::memory_order_acq_rel,
                                  std::memory_order_relaxed)) {
      return true;
    }
  }
}

template <Payload Msg>
class PartitionContext;

template <Payload Msg>
struct AlgorithmSpec {
  std::string name;
  Direction direction = Direction::kPush;
  Msg identity{};
  CombineFn<Msg> combine = nullptr;
  std::function<void(PartitionContext<Msg>&)> init;
  // Returns true to vote for termination.
  std::function<bool(PartitionContext<Msg>&)> compute;
  // PUSH only; defaults to folding every inbox value into state.
  std::function<void(PartitionContext<Msg>&)> scatter;
  std::function<void(PartitionContext<Msg>&)> collect;
  std::function<void()> finalize;
  std::optional<std::size_t> max_supersteps;
};

struct EngineOptions {
  // Throttle sleeps are stretched by this factor so emulated rates well
  // above the machine's native speed still bind.
  double time_dilation = 1.0;
  // Run partitions' phases on separate threads.
  bool concurrent_partitions = true;
};

template <Payload Msg>
class PartitionContext {
 public:
  PartitionContext(const PartitionSet& set, std::size_t id,
                   const AlgorithmSpec<Msg>& spec)
      : set_(&set),
        part_(&set.parts[id]),
        spec_(&spec),
        state_(part_->vertex_count(), spec.identity),
        outbox_values_(set.size()),
        inbox_values_(set.size()),
        // More threads than cores only adds contention.
        threads_(std::max(1u, std::min(part_->element.worker_count,
                                       static_cast<unsigned>(omp_get_num_procs())))) {
    for (std::size_t q = 0; q < set.size(); ++q) {
      outbox_values_[q].assign(part_->outbox_ids[q].size(), spec.identity);
      inbox_values_[q].assign(part_->inbox_ids[q].size(), spec.identity);
    }
  }

  const Partition& partition() const noexcept { return *part_; }
  const PartitionSet& partitions() const noexcept { return *set_; }
  std::size_t id() const noexcept { return part_->id; }
  std::size_t superstep() const noexcept { return superstep_; }
  unsigned workers() const noexcept { return part_->element.worker_count; }
  // Threads actually used for the vertex loop.
  unsigned threads() const noexcept { return threads_; }
  const Msg& identity() const noexcept { return spec_->identity; }
  Msg combine(const Msg& a, const Msg& b) const { return spec_->combine(a, b); }

  // Per-vertex slots S, indexed by local id.
  std::span<Msg> state() noexcept { return state_; }
  std::span<const Msg> state() const noexcept { return state_; }

  std::span<Msg> outbox(std::size_t peer) noexcept { return outbox_values_[peer]; }
  std::span<const Msg> outbox(std::size_t peer) const noexcept {
    return outbox_values_[peer];
  }
  std::span<Msg> inbox(std::size_t peer) noexcept { return inbox_values_[peer]; }
  std::span<const Msg> inbox(std::size_t peer) const noexcept {
    return inbox_values_[peer];
  }

  // Reads a local slot other workers may be folding into.
  Msg load(vid_t local) const {
    if (threads_ == 1) return state_[local];
    return std::atomic_ref<Msg>(const_cast<Msg&>(state_[local]))
        .load(std::memory_order_relaxed);
  }

  // Folds `value` into the neighbour's slot: local state when the entry is
  // local, the outbox slot otherwise. Linearizable per slot; returns true
  // when the slot changed.
  bool fold(EncodedTarget target, const Msg& value) {
    return fold_into(slot(target), value);
  }
  bool fold_local(vid_t local, const Msg& value) {
    assert(local < state_.size());
    return fold_into(state_[local], value);
  }

  // Current value of a neighbour: local state, or (in PULL mode) the value
  // pulled into the outbox slot this superstep.
  const Msg& read(EncodedTarget target) const {
    if (target.partition() == part_->id) {
      assert(target.payload() < state_.size());
      return state_[target.payload()];
    }
    assert(target.payload() < outbox_values_[target.partition()].size());
    return outbox_values_[target.partition()][target.payload()];
  }

  // Folds every inbox value into state. on_change(local_id) fires for each
  // vertex whose slot changed.
  template <typename OnChange>
  void scatter_inbox(OnChange&& on_change) {
    for (std::size_t q = 0; q < inbox_values_.size(); ++q) {
      const auto& ids = part_->inbox_ids[q];
      const auto& values = inbox_values_[q];
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (values[i] == spec_->identity) continue;
        Msg& s = state_[ids[i]];
        const Msg merged = spec_->combine(s, values[i]);
        if (!(merged == s)) {
          s = merged;
          on_change(ids[i]);
        }
      }
    }
  }
  void scatter_inbox() {
    scatter_inbox([](vid_t) {});
  }

  // Runs fn(local_id, work) -> bool over every local vertex on this
  // element's workers and returns the AND of all results. fn adds the edges
  // it touched to `work`; the total is charged to count_edges.
  template <typename Fn>
  bool for_each_vertex(Fn&& fn) {
    const auto n = static_cast<std::int64_t>(part_->vertex_count());
    bool all = true;
    eid_t work = 0;
    const int threads = static_cast<int>(threads_);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1024) \
    reduction(&& : all) reduction(+ : work) if (threads > 1)
    for (std::int64_t v = 0; v < n; ++v) {
      const bool r = fn(static_cast<vid_t>(v), work);
      all = all && r;
    }
    count_edges(work);
    return all;
  }

  // Processed-edge count drives the throttle and the rate calibration.
  void count_edges(eid_t n) noexcept {
    edges_.fetch_add(n, std::memory_order_relaxed);
  }
  eid_t edges_counted() const noexcept {
    return edges_.load(std::memory_order_relaxed);
  }

  void abort(std::string reason) {
    std::lock_guard lock(abort_mutex_);
    if (!aborted_) {
      aborted_ = true;
      abort_reason_ = std::move(reason);
    }
  }
  bool aborted() const noexcept { return aborted_; }
  const std::string& abort_reason() const noexcept { return abort_reason_; }

 private:
  template <Payload>
  friend class Engine;

  Msg& slot(EncodedTarget target) {
    if (target.partition() == part_->id) {
      assert(target.payload() < state_.size());
      return state_[target.payload()];
    }
    assert(target.payload() < outbox_values_[target.partition()].size());
    return outbox_values_[target.partition()][target.payload()];
  }

  bool fold_into(Msg& s, const Msg& value) {
    if (threads_ == 1) {
      const Msg merged = spec_->combine(s, value);
      if (merged == s) return false;
      s = merged;
      return true;
    }
    return atomic_fold(s, value, spec_->combine);
  }

  const PartitionSet* set_;
  const Partition* part_;
  const AlgorithmSpec<Msg>* spec_;
  std::vector<Msg> state_;
  std::vector<std::vector<Msg>> outbox_values_;
  std::vector<std::vector<Msg>> inbox_values_;
  unsigned threads_;
  std::size_t superstep_ = 0;
  std::atomic<eid_t> edges_{0};
  std::mutex abort_mutex_;
  bool aborted_ = false;
  std::string abort_reason_;
};

template <Payload Msg>
class Engine {
 public:
  explicit Engine(const PartitionSet& set, EngineOptions options = {})
      : set_(&set), options_(options) {}

  RunReport run(AlgorithmSpec<Msg>& spec) {
    if (!spec.combine) throw ConfigurationError("algorithm has no combine operator");
    if (!spec.compute) throw ConfigurationError("algorithm has no compute callback");
    if (!(options_.time_dilation > 0.0)) {
      throw ConfigurationError("time dilation must be positive");
    }
    const std::size_t k = set_->size();
    contexts_.clear();
    contexts_.reserve(k);
    for (std::size_t p = 0; p < k; ++p) {
      contexts_.push_back(std::make_unique<PartitionContext<Msg>>(*set_, p, spec));
    }

    RunReport report;
    report.algorithm = spec.name;
    report.vertex_count = set_->global_vertex_count;
    report.edge_count = set_->global_edge_count;
    report.reduced = set_->reduced;
    report.time_dilation = options_.time_dilation;

    if (spec.init) {
      for_each_partition([&](PartitionContext<Msg>& ctx) { spec.init(ctx); });
    }

    const auto loop_start = Clock::now();
    std::vector<double> compute_ms(k), comm_ms(k);
    std::vector<std::uint64_t> bytes(k);
    std::vector<eid_t> edges(k);
    std::vector<char> votes(k);
    for (std::size_t step = 0;; ++step) {
      std::fill(compute_ms.begin(), compute_ms.end(), 0.0);
      std::fill(comm_ms.begin(), comm_ms.end(), 0.0);
      std::fill(bytes.begin(), bytes.end(), 0);
      for (auto& ctx : contexts_) {
        ctx->superstep_ = step;
        ctx->edges_.store(0, std::memory_order_relaxed);
      }

      // A lone partition has nobody to talk to.
      if (spec.direction == Direction::kPull && k > 1) {
        communicate_pull(comm_ms, bytes);
      }

      for_each_partition([&](PartitionContext<Msg>& ctx) {
        const auto t0 = Clock::now();
        if (spec.direction == Direction::kPush) {
          for (auto& values : ctx.outbox_values_) {
            std::fill(values.begin(), values.end(), spec.identity);
          }
        }
        votes[ctx.id()] = spec.compute(ctx) ? 1 : 0;
        throttle(ctx, t0);
        compute_ms[ctx.id()] = elapsed_ms(t0);
        edges[ctx.id()] = ctx.edges_counted();
      });

      const bool aborted = any_aborted();
      const bool finished =
          std::all_of(votes.begin(), votes.end(), [](char v) { return v != 0; });
      if (spec.direction == Direction::kPush && !finished && !aborted && k > 1) {
        communicate_push(spec, comm_ms, bytes);
      }

      for (std::size_t p = 0; p < k; ++p) {
        report.ledger.push_back(
            {step, p, compute_ms[p], comm_ms[p], bytes[p], edges[p]});
      }
      report.supersteps = step + 1;
      if (aborted) {
        report.aborted = true;
        report.error = first_abort_reason();
        break;
      }
      if (finished) break;
      if (spec.max_supersteps && step + 1 >= *spec.max_supersteps) break;
    }
    report.total_ms = elapsed_ms(loop_start);

    if (!report.aborted && spec.collect) {
      for (auto& ctx : contexts_) spec.collect(*ctx);
    }
    if (spec.finalize) spec.finalize();
    summarize(report);
    return report;
  }

  // Contexts of the last run, for inspection.
  const PartitionContext<Msg>& context(std::size_t p) const { return *contexts_.at(p); }

 private:
  using Clock = std::chrono::steady_clock;

  static double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
  }

  template <typename Fn>
  void for_each_partition(Fn&& fn) {
    const std::size_t k = contexts_.size();
    std::vector<std::exception_ptr> errors(k);
    auto guarded = [&](std::size_t p) {
      try {
        fn(*contexts_[p]);
      } catch (...) {
        errors[p] = std::current_exception();
      }
    };
    if (!options_.concurrent_partitions || k == 1) {
      for (std::size_t p = 0; p < k; ++p) guarded(p);
    } else {
      std::vector<std::jthread> threads;
      threads.reserve(k);
      for (std::size_t p = 0; p < k; ++p) threads.emplace_back(guarded, p);
    }
    for (std::size_t p = 0; p < k; ++p) {
      if (!errors[p]) continue;
      try {
        std::rethrow_exception(errors[p]);
      } catch (const std::exception& e) {
        contexts_[p]->abort(e.what());
      } catch (...) {
        contexts_[p]->abort("unknown error in callback");
      }
    }
  }

  bool any_aborted() const {
    return std::any_of(contexts_.begin(), contexts_.end(),
                       [](const auto& c) { return c->aborted(); });
  }

  std::string first_abort_reason() const {
    for (const auto& c : contexts_) {
      if (c->aborted()) {
        return "partition " + std::to_string(c->id()) + ": " + c->abort_reason();
      }
    }
    return {};
  }

  void throttle(PartitionContext<Msg>& ctx, Clock::time_point start) const {
    const auto& rate = ctx.partition().element.throttle;
    if (!rate) return;
    const double target_s = options_.time_dilation *
                            static_cast<double>(ctx.edges_counted()) / *rate;
    const auto deadline =
        start + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(target_s));
    std::this_thread::sleep_until(deadline);
  }

  void communicate_push(const AlgorithmSpec<Msg>& spec, std::vector<double>& comm_ms,
                        std::vector<std::uint64_t>& bytes) {
    for_each_partition([&](PartitionContext<Msg>& ctx) {
      const auto t0 = Clock::now();
      const std::size_t p = ctx.id();
      for (std::size_t q = 0; q < contexts_.size(); ++q) {
        if (q == p) continue;
        const auto& src = contexts_[q]->outbox_values_[p];
        auto& dst = ctx.inbox_values_[q];
        std::copy(src.begin(), src.end(), dst.begin());
        bytes[p] += src.size() * sizeof(Msg);
      }
      if (spec.scatter) {
        spec.scatter(ctx);
      } else {
        ctx.scatter_inbox();
      }
      comm_ms[p] += elapsed_ms(t0);
    });
  }

  void communicate_pull(std::vector<double>& comm_ms, std::vector<std::uint64_t>& bytes) {
    for_each_partition([&](PartitionContext<Msg>& ctx) {
      const auto t0 = Clock::now();
      const auto& part = ctx.partition();
      for (std::size_t q = 0; q < contexts_.size(); ++q) {
        const auto& ids = part.inbox_ids[q];
        auto& values = ctx.inbox_values_[q];
        for (std::size_t i = 0; i < ids.size(); ++i) values[i] = ctx.state_[ids[i]];
      }
      comm_ms[ctx.id()] += elapsed_ms(t0);
    });
    for_each_partition([&](PartitionContext<Msg>& ctx) {
      const auto t0 = Clock::now();
      const std::size_t p = ctx.id();
      for (std::size_t q = 0; q < contexts_.size(); ++q) {
        if (q == p) continue;
        const auto& src = contexts_[q]->inbox_values_[p];
        auto& dst = ctx.outbox_values_[q];
        std::copy(src.begin(), src.end(), dst.begin());
        bytes[p] += src.size() * sizeof(Msg);
      }
      comm_ms[p] += elapsed_ms(t0);
    });
  }

  const PartitionSet* set_;
  EngineOptions options_;
  std::vector<std::unique_ptr<PartitionContext<Msg>>> contexts_;
};

}  // namespace hg
