#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace signclass {

/// Raised when a request exceeds a configured size guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major table of exact character values with labelled axes.
template <class Scalar, class RowKey, class ColKey>
class CharacterTable {
 public:
  using scalar_type = Scalar;

  CharacterTable() = default;
  CharacterTable(std::vector<RowKey> rows, std::vector<ColKey> cols)
      : rows_(std::move(rows)), cols_(std::move(cols)), data_(rows_.size() * cols_.size()) {}

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_.size(); }

  const std::vector<RowKey>& row_keys() const { return rows_; }
  const std::vector<ColKey>& col_keys() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_.size() + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_.size() + j]; }

 private:
  std::vector<RowKey> rows_;
  std::vector<ColKey> cols_;
  std::vector<Scalar> data_;
};

}  // namespace signclass
