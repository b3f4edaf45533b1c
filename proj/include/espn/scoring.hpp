#pragma once

#include "espn/types.hpp"

namespace espn {

/// Late-interaction similarity: for each query token, the maximum dot
/// product over all document tokens, summed over query tokens in ascending
/// index order. All accumulation is fp32 so results are bit-reproducible.
float maxsim_score(const QueryEmbedding& query, const EmbeddingMatrix& doc);

/// Fused first/second-stage score: alpha * cls_score + bow_score.
/// alpha is the learned scaling applied to the CLS side.
float aggregate_score(float cls_score, float bow_score, float alpha);

/// Sorts scored docs by (score desc, doc_id asc). Duplicate ids and
/// non-finite scores are rejected.
RankedList rank(std::vector<ScoredDoc> scored);

/// fp32 dot product accumulated in ascending index order.
float dot_f32(std::span<const float> a, std::span<const float> b);

}  // namespace espn
