#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "signclass/bigint.hpp"
#include "signclass/character_table.hpp"
#include "signclass/partition.hpp"

namespace signclass {

inline constexpr Part kDefaultTableLimit = 22;

struct CacheStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;

  CacheStats& operator+=(const CacheStats& o) {
    hits += o.hits;
    misses += o.misses;
    return *this;
  }
};

/// Evaluates chi^lambda_gamma for one fixed cycle type gamma and any lambda.
///
/// Uses the Murnaghan-Nakayama expansion, always stripping the largest
/// remaining cycle first. Intermediate values are memoized on
/// (lambda, suffix index into gamma), so evaluating a whole column of the
/// character table shares work across rows. An evaluator is not thread
/// safe; give each worker its own.
class MnEvaluator {
 public:
  explicit MnEvaluator(Partition gamma, bool use_cache = true);

  /// Throws std::invalid_argument if |lambda| != |gamma|.
  BigInt value(const Partition& lambda);

  /// Pre-populates a top-level value, e.g. from a persisted batch.
  void seed(const Partition& lambda, BigInt value);

  /// All memoized top-level values chi^lambda_gamma.
  std::vector<std::pair<Partition, BigInt>> top_level_values() const;

  const Partition& gamma() const { return gamma_; }
  CacheStats stats() const { return stats_; }

 private:
  struct Key {
    Partition lambda;
    std::size_t suffix;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<Partition>{}(k.lambda) * 31 + k.suffix;
    }
  };

  BigInt eval(const Partition& lambda, std::size_t suffix);

  Partition gamma_;
  std::vector<Part> remaining_;  // remaining_[k] = sum of gamma parts from k on
  bool use_cache_;
  std::unordered_map<Key, BigInt, KeyHash> memo_;
  CacheStats stats_;
};

/// chi^lambda_gamma with a private cold cache.
BigInt mn_value(const Partition& lambda, const Partition& gamma);

using SnCharacterTable = CharacterTable<BigInt, Partition, Partition>;

/// Full table over partitions of n in reverse-lexicographic order on both
/// axes. Throws ResourceLimitError if n exceeds `limit`.
SnCharacterTable sn_character_table(Part n, Part limit = kDefaultTableLimit);

/// True iff chi^{lambda'}_gamma = (-1)^{n - r(gamma)} chi^lambda_gamma for
/// all lambda, gamma of n.
bool conjugate_twist_check(Part n, Part limit = kDefaultTableLimit);

}  // namespace signclass
