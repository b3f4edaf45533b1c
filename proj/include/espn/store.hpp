#pragma once

#include <filesystem>
#include <memory>
#include <optional>

#include "espn/types.hpp"

namespace espn {

enum class ReadMode { direct, buffered, mmap };

/// Per-document location inside the packed data file.
struct ManifestRecord {
  std::uint64_t byte_offset = 0;
  std::uint32_t byte_length = 0;  // exact payload bytes, no padding
  std::uint32_t token_count = 0;
};

/// In-memory offsets table for one store. Doc ids are dense [0, count).
/// Record layout in the data file: CLS values immediately followed by the
/// BOW rows, record start padded to `alignment`.
struct StoreManifest {
  std::uint32_t version = 1;
  std::uint32_t d = 0;
  std::uint32_t d_cls = 0;
  std::uint32_t value_width = 0;  // bytes per value: 2 (fp16) or 4 (fp32)
  std::uint32_t alignment = 0;    // 1, 512 or 4096
  std::vector<ManifestRecord> records;

  std::uint64_t count() const { return records.size(); }
  std::uint32_t record_bytes(std::uint32_t token_count) const {
    return (d_cls + token_count * d) * value_width;
  }
};

/// Paths derived from the store base name.
struct StorePaths {
  std::filesystem::path data;           // <base>.espn
  std::filesystem::path manifest;       // <base>.manifest
  std::filesystem::path manifest_json;  // <base>.manifest.json
};
StorePaths store_paths(const std::filesystem::path& base);

/// Writes the packed data file plus binary and JSON manifests.
/// Requires consistent dims, t >= 1 per doc, doc ids dense [0, n), every
/// value finite, alignment in {1, 512, 4096}, value_width in {2, 4}.
StoreManifest build_store(const std::vector<ClsVector>& cls,
                          const std::vector<EmbeddingMatrix>& docs,
                          const std::filesystem::path& base,
                          std::uint32_t alignment, std::uint32_t value_width);

void save_manifest(const StoreManifest& m, const StorePaths& paths);
StoreManifest load_manifest(const std::filesystem::path& manifest_path);

struct FetchedDoc {
  ClsVector cls;
  EmbeddingMatrix bow;
};

/// Batched read result. Docs are in request order regardless of I/O
/// completion order. bytes_read counts bytes actually transferred
/// (aligned-rounded in direct mode, payload bytes otherwise); blocks_read
/// counts device blocks touched (block = alignment in direct mode, 4096
/// otherwise).
struct FetchResult {
  std::vector<FetchedDoc> docs;
  std::uint64_t bytes_read = 0;
  std::uint64_t blocks_read = 0;
  double wall_time = 0.0;  // seconds
};

struct StoreOptions {
  ReadMode mode = ReadMode::buffered;
  std::size_t queue_depth = 16;  // concurrent reads in flight per batch
};

/// Read handle over an immutable store. Shareable across threads;
/// fetch_batch is reentrant.
class StoreHandle {
 public:
  ~StoreHandle();
  StoreHandle(StoreHandle&&) noexcept;
  StoreHandle& operator=(StoreHandle&&) noexcept;
  StoreHandle(const StoreHandle&) = delete;
  StoreHandle& operator=(const StoreHandle&) = delete;

  const StoreManifest& manifest() const { return manifest_; }
  ReadMode mode() const { return options_.mode; }

  /// Reads and decodes the requested docs, many reads in flight at once.
  /// Duplicate ids are allowed; unknown ids raise InvalidInputError listing
  /// the offenders.
  FetchResult fetch_batch(std::span<const DocId> doc_ids) const;

  friend StoreHandle open_store(const std::filesystem::path& base,
                                const StoreOptions& options);

 private:
  StoreHandle() = default;

  StoreManifest manifest_;
  StoreOptions options_;
  int fd_ = -1;
  void* map_ = nullptr;  // mmap mode only
  std::uint64_t file_size_ = 0;
};

/// Opens a store in the chosen read mode. Direct mode requires
/// alignment >= 512 and a filesystem that honours O_DIRECT.
StoreHandle open_store(const std::filesystem::path& base,
                       const StoreOptions& options = {});

}  // namespace espn
