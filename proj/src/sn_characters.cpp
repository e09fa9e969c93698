#include "signclass/sn_characters.hpp"

#include <stdexcept>
#include <string>

namespace signclass {

MnEvaluator::MnEvaluator(Partition gamma, bool use_cache) : gamma_(std::move(gamma)), use_cache_(use_cache) {
  remaining_.assign(gamma_.length() + 1, 0);
  for (std::size_t k = gamma_.length(); k-- > 0;) remaining_[k] = remaining_[k + 1] + gamma_[k];
}

BigInt MnEvaluator::value(const Partition& lambda) {
  if (lambda.size() != gamma_.size()) {
    throw std::invalid_argument("size mismatch: |lambda| = " + std::to_string(lambda.size()) +
                                ", |gamma| = " + std::to_string(gamma_.size()));
  }
  return eval(lambda, 0);
}

void MnEvaluator::seed(const Partition& lambda, BigInt value) {
  if (lambda.size() != gamma_.size()) throw std::invalid_argument("seeded value has the wrong size");
  memo_.insert_or_assign(Key{lambda, 0}, std::move(value));
}

std::vector<std::pair<Partition, BigInt>> MnEvaluator::top_level_values() const {
  std::vector<std::pair<Partition, BigInt>> out;
  for (const auto& [key, v] : memo_) {
    if (key.suffix == 0) out.emplace_back(key.lambda, v);
  }
  return out;
}

BigInt MnEvaluator::eval(const Partition& lambda, std::size_t suffix) {
  if (suffix == gamma_.length()) return 1;  // only the empty partition reaches here
  // One-row and one-column shapes are the trivial and sign characters.
  if (lambda.length() == 1) return 1;
  if (lambda[0] == 1) {
    const auto n_minus_r = remaining_[suffix] - static_cast<Part>(gamma_.length() - suffix);
    return n_minus_r % 2 == 0 ? 1 : -1;
  }

  Key key{lambda, suffix};
  if (use_cache_) {
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.hits;
      return it->second;
    }
    ++stats_.misses;
  }

  BigInt total = 0;
  for (const auto& hook : rim_hooks_of_length(lambda, gamma_[suffix])) {
    auto sub = eval(hook.result, suffix + 1);
    if (hook.leg_parity > 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  if (use_cache_) memo_.emplace(std::move(key), total);
  return total;
}

BigInt mn_value(const Partition& lambda, const Partition& gamma) {
  MnEvaluator evaluator(gamma);
  return evaluator.value(lambda);
}

SnCharacterTable sn_character_table(Part n, Part limit) {
  if (n < 1) throw std::invalid_argument("character table needs n >= 1");
  if (n > limit) {
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the table limit " + std::to_string(limit));
  }
  auto parts = all_partitions(n);
  SnCharacterTable table(parts, parts);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    MnEvaluator column(parts[j]);
    for (std::size_t i = 0; i < parts.size(); ++i) table(i, j) = column.value(parts[i]);
  }
  return table;
}

bool conjugate_twist_check(Part n, Part limit) {
  const auto table = sn_character_table(n, limit);
  const auto& keys = table.row_keys();
  std::unordered_map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);

  for (std::size_t j = 0; j < table.cols(); ++j) {
    const auto& gamma = table.col_keys()[j];
    const int sign = is_even(gamma) ? 1 : -1;
    for (std::size_t i = 0; i < table.rows(); ++i) {
      const auto i_conj = index.at(conjugate(keys[i]));
      if (table(i_conj, j) != sign * table(i, j)) return false;
    }
  }
  return true;
}

}  // namespace signclass
