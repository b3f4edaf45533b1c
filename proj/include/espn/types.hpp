#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace espn {

using DocId = std::uint32_t;
using QueryId = std::uint32_t;

/// One document's bag-of-words token embeddings: t rows by d columns,
/// row-major fp32. This is the re-ranking payload.
struct EmbeddingMatrix {
  DocId doc_id = 0;
  std::uint32_t rows = 0;  // t, number of token vectors (>= 1 once ingested)
  std::uint32_t cols = 0;  // d, embedding dimension
  std::vector<float> values;

  std::span<const float> row(std::uint32_t i) const {
    return {values.data() + std::size_t(i) * cols, cols};
  }
};

/// Single dense per-document vector used for first-stage candidate search.
struct ClsVector {
  DocId doc_id = 0;
  std::vector<float> values;
};

/// Query-side embeddings: one CLS vector plus a q x d token matrix.
struct QueryEmbedding {
  QueryId query_id = 0;
  std::vector<float> cls;
  std::uint32_t rows = 0;  // q, number of query tokens
  std::uint32_t cols = 0;  // d
  std::vector<float> tokens;

  std::span<const float> row(std::uint32_t i) const {
    return {tokens.data() + std::size_t(i) * cols, cols};
  }
};

struct ScoredDoc {
  DocId doc_id = 0;
  float score = 0.0f;
};

/// Ordered (doc_id, score) pairs: strictly sorted by score descending,
/// doc_id ascending on equal scores, no duplicate ids.
struct RankedList {
  std::vector<ScoredDoc> entries;
};

/// query_id -> set of relevant doc ids. Ordered so that metric averages
/// accumulate in a fixed order.
using Qrels = std::map<QueryId, std::set<DocId>>;

/// Ranked results keyed by query, the unit of quality evaluation.
using ResultsByQuery = std::map<QueryId, RankedList>;

/// Ingestion-time validation: t >= 1, every value finite.
/// Throws InvalidInputError.
void validate_embedding(const EmbeddingMatrix& doc);
void validate_cls(const ClsVector& cls);
void validate_query(const QueryEmbedding& query);

}  // namespace espn
