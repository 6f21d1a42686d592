#pragma once

#include "partlog/sequence.hpp"

#include <filesystem>
#include <optional>

namespace partlog {

// Sequence cache file, one file per (family, generator version):
//
//   partlog-seq v1 family=<canonical> start=<i> count=<n>
//   <num>[/<den>]          one canonical rational per line, base 10
//
// Round-trips bit-exactly. Writes go to a temp file in the same directory
// followed by an atomic rename, so concurrent writers never leave a torn
// file behind.

struct CacheConfig {
    std::filesystem::path dir;

    // PARTLOG_CACHE_DIR when set, else ".partlog-cache" under the cwd.
    static CacheConfig from_env();
};

std::filesystem::path cache_path(const CacheConfig& config, const std::string& label,
                                 const std::string& version = kGeneratorVersion);

void write_sequence_file(const std::filesystem::path& path, const ExactSequence& seq);
ExactSequence read_sequence_file(const std::filesystem::path& path);

/// Loads the cached run when it covers `upto`, otherwise generates, rewrites
/// the cache, and returns the fresh run.
ExactSequence cached_generate(const CacheConfig& config, const PartitionFamily& family,
                              std::size_t upto);

}  // namespace partlog
