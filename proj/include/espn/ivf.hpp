#pragma once

#include <filesystem>
#include <span>

#include "espn/types.hpp"

namespace espn {

/// In-memory inverted-file index over CLS vectors, inner-product metric.
/// Immutable after training; safe for shared reads from any thread.
struct IvfIndex {
  std::uint32_t d_cls = 0;
  std::vector<float> centroids;  // nlist x d_cls, row-major

  struct InvList {
    std::vector<DocId> ids;
    std::vector<float> vectors;  // ids.size() x d_cls, row-major
  };
  std::vector<InvList> lists;

  std::size_t nlist() const { return lists.size(); }
  std::size_t size() const;  // total indexed docs
  std::span<const float> centroid(std::size_t c) const {
    return {centroids.data() + c * d_cls, d_cls};
  }
};

/// k-means training plus list assignment. Every vector lands in the list of
/// its nearest centroid. Deterministic for a fixed seed.
/// Requires vectors.size() >= nlist and consistent dimensions.
IvfIndex train_ivf(const std::vector<ClsVector>& vectors, std::size_t nlist,
                   std::size_t max_iters, std::uint64_t seed);

/// Single-file persistence: "ESPNIVF1" header, centroid block, per-list
/// (length, ids, vectors) blocks. Little-endian throughout.
void save_ivf(const IvfIndex& index, const std::filesystem::path& path);
IvfIndex load_ivf(const std::filesystem::path& path);

struct Candidate {
  DocId doc_id = 0;
  float cls_score = 0.0f;
};

/// Candidates sorted by (cls_score desc, doc_id asc), deduplicated, plus the
/// number of clusters visited when the snapshot was taken.
struct CandidateList {
  std::vector<Candidate> entries;
  std::size_t clusters_visited = 0;
};

/// Staged scan over one query. The visitation plan (clusters by descending
/// centroid score) is fixed at creation; advance() walks it and maintains a
/// bounded top-K heap. A cursor is owned by one query; snapshot() may be
/// called from another thread as long as no advance is in flight.
class SearchCursor {
 public:
  SearchCursor(const IvfIndex& index, std::span<const float> query_cls,
               std::size_t nprobe, std::size_t k);

  /// Scans the next n_clusters lists in plan order.
  void advance(std::size_t n_clusters);

  /// Current heap contents, sorted and truncated to top_k. Does not mutate.
  CandidateList snapshot(std::size_t top_k) const;

  /// Final candidates; requires the cursor fully advanced to nprobe.
  CandidateList finish(std::size_t k) const;

  std::size_t clusters_visited() const { return visited_; }
  std::size_t nprobe() const { return plan_.size(); }
  std::size_t capacity() const { return capacity_; }

 private:
  const IvfIndex* index_;
  std::vector<float> query_;
  std::vector<std::uint32_t> plan_;
  std::size_t visited_ = 0;
  std::size_t capacity_;
  std::vector<Candidate> heap_;  // min-heap, worst candidate on top
};

/// Builds the visitation plan for the nprobe highest-scoring centroids.
SearchCursor begin_search(const IvfIndex& index,
                          std::span<const float> query_cls, std::size_t nprobe,
                          std::size_t k);

}  // namespace espn
