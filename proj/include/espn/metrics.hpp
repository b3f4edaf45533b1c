#pragma once

#include <filesystem>
#include <istream>

#include "espn/types.hpp"

namespace espn {

/// Mean reciprocal rank of the first relevant doc within the top k, averaged
/// over the queries listed in qrels. Queries without results count as 0.
double mrr_at_k(const ResultsByQuery& results, const Qrels& qrels, int k);

/// Mean over qrels queries of |relevant docs in top k| / |relevant docs|.
double recall_at_k(const ResultsByQuery& results, const Qrels& qrels, int k);

/// TREC-style qrels: whitespace-separated `query_id 0 doc_id relevance`
/// lines; relevance > 0 marks the doc relevant. Blank lines are skipped.
Qrels load_qrels(std::istream& in);
Qrels load_qrels(const std::filesystem::path& path);

}  // namespace espn
