#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace espn {

struct KMeansResult {
  std::vector<float> centroids;          // k x dim, row-major
  std::vector<std::uint32_t> assignment;  // per input vector, nearest centroid
  std::size_t iterations = 0;
  bool converged = false;
};

/// Lloyd's k-means with k-means++ seeding over squared L2 distance.
/// Deterministic for a fixed seed. Empty clusters are repaired by splitting
/// the largest cluster's centroid. Stops when no assignment changes or when
/// max_iters is reached.
KMeansResult kmeans(const float* data, std::size_t n, std::size_t dim,
                    std::size_t k, std::size_t max_iters, std::uint64_t seed);

/// Index of the centroid nearest to `vec` in squared L2; ties resolve to the
/// lowest index.
std::uint32_t nearest_centroid(const float* vec, const float* centroids,
                               std::size_t k, std::size_t dim);

}  // namespace espn
