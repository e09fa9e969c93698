#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "signclass/bigint.hpp"
#include "signclass/partition.hpp"

namespace signclass {

inline constexpr std::uint32_t kCacheFormatVersion = 1;

class CacheFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheVersionError : public CacheFormatError {
 public:
  using CacheFormatError::CacheFormatError;
};

/// Persisted values chi^lambda_gamma for one fixed gamma.
///
/// Layout (little-endian): magic "SGNCLASS", u32 version, u64 n,
/// u32 len(gamma) + u64 parts, u64 record count, then records sorted in
/// canonical (descending) lambda order, each u32 len(lambda) + u64 parts,
/// u8 sign, u32 byte count, big-endian magnitude bytes.
struct CacheBatch {
  Part n = 0;
  Partition gamma;
  std::vector<std::pair<Partition, BigInt>> records;
};

void write_cache_batch(std::ostream& out, CacheBatch batch);
CacheBatch read_cache_batch(std::istream& in);

std::filesystem::path cache_batch_path(const std::filesystem::path& dir, const Partition& gamma);

/// Writes via a temporary file and rename so readers never see a torn file.
void save_cache_batch(const std::filesystem::path& file, CacheBatch batch);

/// std::nullopt if the file does not exist.
std::optional<CacheBatch> load_cache_batch(const std::filesystem::path& file);

}  // namespace signclass
