#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include "signclass/bigint.hpp"

namespace signclass {

using Part = std::int64_t;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Partitions are immutable values. They index both the conjugacy classes
/// (as cycle types) and the irreducible characters of the symmetric group.
/// Ordering is lexicographic on the parts, so "reverse-lexicographic
/// order" is plain descending order.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<Part> parts);
  /// Sorts into weakly decreasing order. Throws std::invalid_argument on
  /// a zero or negative entry.
  explicit Partition(std::vector<Part> parts);

  /// Wraps parts that are already weakly decreasing and positive.
  static Partition from_sorted(std::vector<Part> parts);

  /// |lambda|, the number being partitioned.
  Part size() const { return size_; }
  /// Number of (non-zero) parts.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// 0-based access; returns 0 past the last part.
  Part operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::span<const Part> parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<Part> parts_;
  Part size_ = 0;
};

Partition make_partition(std::span<const Part> raw);

Partition conjugate(const Partition& p);
bool is_self_conjugate(const Partition& p);

/// Hook length of the cell in row `row`, column `col` (both 1-based).
/// Throws std::out_of_range if the cell is not in the Young diagram.
Part hook_length(const Partition& p, std::size_t row, std::size_t col);

// ---------------------------------------------------------------------------
// Beta-sets

/// First-column hook lengths of a partition padded to `length()+padding` rows.
struct BetaSet {
  std::vector<Part> elements;  // strictly decreasing, all >= 0
  std::size_t padding = 0;
};

BetaSet beta_set(const Partition& p, std::size_t padding = 0);
Partition from_beta_set(std::span<const Part> elements);

// ---------------------------------------------------------------------------
// Rim hooks

struct RimHookRemoval {
  std::size_t row = 0;     // 1-based row of the hook's corner cell
  std::size_t column = 0;  // 1-based column of the hook's corner cell
  Part hook_length = 0;
  int leg_parity = 1;      // (-1)^(leg length)
  Partition result;
};

/// All rim hooks of length q, ordered by ascending corner row.
std::vector<RimHookRemoval> rim_hooks_of_length(const Partition& p, Part q);

// ---------------------------------------------------------------------------
// Cores and quotients

struct CoreQuotient {
  Partition core;
  std::vector<Partition> quotient;  // exactly q components
  Part weight = 0;
};

Partition q_core(const Partition& p, Part q);

/// Core and quotient read off an abacus with a multiple of q beads, so the
/// runner labelling does not depend on the number of parts.
CoreQuotient q_quotient(const Partition& p, Part q);

/// Inverse of q_quotient. Throws std::invalid_argument if `core` has a
/// q-hook or `quotient` does not have q components.
Partition from_core_and_quotient(const Partition& core, std::span<const Partition> quotient, Part q);

// ---------------------------------------------------------------------------
// Diagonal hooks

/// (h_{1,1}, h_{2,2}, ...) over the Durfee square.
std::vector<Part> diagonal_hooks(const Partition& p);

/// The self-conjugate partition with the given diagonal hooks. Throws
/// std::invalid_argument unless the hooks are odd and strictly decreasing.
Partition from_diagonal_hooks(std::span<const Part> hooks);

// ---------------------------------------------------------------------------
// Enumeration

/// Every partition of n exactly once, largest first (reverse-lexicographic).
class PartitionsOf {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    explicit iterator(Part n);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    Partition current_;
    bool done_ = true;
  };

  explicit PartitionsOf(Part n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  Part n_;
};

inline PartitionsOf partitions_of(Part n) { return PartitionsOf(n); }
std::vector<Partition> all_partitions(Part n);

// ---------------------------------------------------------------------------
// Predicates on cycle types

enum class Parity { even, odd };

/// Parity of a permutation with cycle type p: even iff n - r is even.
Parity permutation_parity(const Partition& p);
inline bool is_even(const Partition& p) { return permutation_parity(p) == Parity::even; }

bool has_distinct_odd_parts(const Partition& p);

/// z_p = prod_v v^{m_v} m_v!, the order of the centralizer in S_n.
BigInt centralizer_order(const Partition& p);

BigInt factorial(Part n);

}  // namespace signclass

template <>
struct std::hash<signclass::Partition> {
  std::size_t operator()(const signclass::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : p) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
