#pragma once

#include "espn/ivf.hpp"
#include "espn/store.hpp"

namespace espn {

/// Knobs for one query run. delta (clusters scanned before the prefetch
/// snapshot) derives from prefetch_step_pct: round(nprobe * step / 100),
/// at least 1.
struct PipelineConfig {
  std::uint32_t nprobe = 0;          // eta, clusters scanned in total
  double prefetch_step_pct = 10.0;   // (0, 100]
  std::uint32_t rerank_count = 0;    // R, docs re-ranked with MaxSim
  std::uint32_t final_k = 10;        // length of the returned list
  std::uint32_t prefetch_top_k = 0;  // prefetched id list size; 0 -> R
  std::uint32_t candidate_k = 0;     // ANN candidate list length; 0 -> max(R, final_k)
  float alpha = 1.0f;                // CLS scaling in the aggregate score
  bool prefetch_enabled = true;
  bool partial_rerank_enabled = false;

  std::uint32_t effective_prefetch_top_k() const {
    return prefetch_top_k ? prefetch_top_k : rerank_count;
  }
  std::uint32_t effective_candidate_k() const {
    return candidate_k ? candidate_k : std::max(rerank_count, final_k);
  }
  std::uint32_t delta() const;  // prefetch snapshot point, in clusters
};

/// Throws InvalidInputError when the config cannot run against the index.
void validate_config(const PipelineConfig& config, const IvfIndex& index);

/// Timing and accounting for one query. Times are wall-clock seconds; byte
/// counters are exact and deterministic.
struct QueryStats {
  QueryId query_id = 0;
  double ann_time = 0.0;             // full scan: plan + delta + lambda stages
  double prefetch_time = 0.0;        // prefetch worker: fetch stage
  double early_rerank_time = 0.0;    // prefetch worker: MaxSim stage
  double critical_fetch_time = 0.0;  // missed-doc fetch on the critical path
  double rerank_time = 0.0;          // critical-path MaxSim + merge + sort
  double total_time = 0.0;

  std::uint64_t prefetched_count = 0;  // ids fetched by the prefetcher
  std::uint64_t needed_count = 0;      // top-R of the final candidates
  std::uint64_t missed_count = 0;      // needed but not prefetched
  double hit_rate = 0.0;               // |prefetched ∩ needed| / |needed|

  std::uint64_t prefetch_bytes = 0;        // transferred by the prefetcher
  std::uint64_t critical_fetch_bytes = 0;  // transferred on the critical path
  std::uint64_t critical_blocks_read = 0;
  std::uint64_t needed_payload_bytes = 0;  // Σ byte_length over needed docs
};

/// Runs the staged pipeline for one query:
///   scan delta clusters -> snapshot -> [prefetch + early re-rank || scan
///   lambda clusters] -> finish -> fetch misses -> re-rank -> merge -> rank.
/// The returned list is identical (bit-exact scores) with prefetching on or
/// off; prefetching only moves I/O off the critical path.
std::pair<RankedList, QueryStats> run_query(const QueryEmbedding& query,
                                            const IvfIndex& index,
                                            const StoreHandle& store,
                                            const PipelineConfig& config);

struct BatchStats {
  std::size_t n_queries = 0;
  double mean_latency = 0.0;
  double p50_latency = 0.0;
  double p99_latency = 0.0;
  double wall_time = 0.0;
  std::uint64_t total_critical_fetch_bytes = 0;
};

struct BatchResult {
  std::vector<RankedList> rankings;  // per query, in input order
  std::vector<QueryStats> stats;
  BatchStats batch;
};

/// Executes queries with at most `concurrency` in flight. Per-query results
/// are identical to serial run_query calls; only timing differs.
BatchResult run_batch(std::span<const QueryEmbedding> queries,
                      const IvfIndex& index, const StoreHandle& store,
                      const PipelineConfig& config, std::size_t concurrency);

struct HitRatePoint {
  double step_pct = 0.0;
  double mean_hit_rate = 0.0;
};

/// Sweeps prefetch_step over `steps` (each in (0, 100]) and reports the mean
/// hit rate per step across the query set.
std::vector<HitRatePoint> measure_hit_rate(
    std::span<const QueryEmbedding> queries, const IvfIndex& index,
    const StoreHandle& store, const PipelineConfig& base,
    std::span<const double> steps);

}  // namespace espn
