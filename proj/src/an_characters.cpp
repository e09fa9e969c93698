#include "signclass/an_characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "signclass/text_io.hpp"

namespace signclass {

char to_char(SplitLabel label) {
  switch (label) {
    case SplitLabel::plus:
      return '+';
    case SplitLabel::minus:
      return '-';
    case SplitLabel::none:
      break;
  }
  return ' ';
}

AnIrreducible AnIrreducible::restricted(const Partition& lambda) {
  if (is_self_conjugate(lambda)) throw std::invalid_argument("a restricted pair needs lambda != lambda'");
  return {Kind::restricted_pair, std::max(lambda, conjugate(lambda)), SplitLabel::none};
}

AnIrreducible AnIrreducible::split_constituent(const Partition& lambda, SplitLabel label) {
  if (!is_self_conjugate(lambda)) throw std::invalid_argument("split characters need a self-conjugate lambda");
  if (label == SplitLabel::none) throw std::invalid_argument("split characters need a + or - label");
  return {Kind::split, lambda, label};
}

std::string to_string(const AnClass& c) {
  auto s = to_string(c.gamma);
  if (c.split) s += to_char(c.label);
  return s;
}

std::string to_string(const AnIrreducible& chi) {
  auto s = to_string(chi.lambda);
  if (chi.kind == AnIrreducible::Kind::split) s += to_char(chi.label);
  return s;
}

std::vector<AnClass> an_classes(Part n) {
  if (n < 2) throw std::invalid_argument("A_n classes need n >= 2");
  std::vector<AnClass> out;
  for (const auto& gamma : partitions_of(n)) {
    if (!is_even(gamma)) continue;
    if (has_distinct_odd_parts(gamma)) {
      out.push_back({gamma, true, SplitLabel::plus});
      out.push_back({gamma, true, SplitLabel::minus});
    } else {
      out.push_back({gamma, false, SplitLabel::none});
    }
  }
  return out;
}

std::vector<AnIrreducible> an_irreducibles(Part n) {
  if (n < 2) throw std::invalid_argument("A_n characters need n >= 2");
  std::vector<AnIrreducible> out;
  for (const auto& lambda : partitions_of(n)) {
    if (is_self_conjugate(lambda)) {
      out.push_back(AnIrreducible::split_constituent(lambda, SplitLabel::plus));
      out.push_back(AnIrreducible::split_constituent(lambda, SplitLabel::minus));
    } else if (lambda > conjugate(lambda)) {
      out.push_back(AnIrreducible::restricted(lambda));
    }
  }
  return out;
}

int epsilon(const Partition& lambda) {
  if (!is_self_conjugate(lambda)) throw std::invalid_argument("epsilon needs a self-conjugate partition");
  const auto d = static_cast<Part>(diagonal_hooks(lambda).size());
  return ((lambda.size() - d) / 2) % 2 == 0 ? 1 : -1;
}

BigInt an_centralizer_order(const AnClass& cls) {
  auto z = centralizer_order(cls.gamma);
  return cls.split ? z : BigInt(z / 2);
}

BigInt an_class_size(const AnClass& cls) { return factorial(cls.gamma.size()) / 2 / an_centralizer_order(cls); }

namespace {

QuadraticValue halve(const BigInt& v, const AnIrreducible& chi, const AnClass& cls) {
  if (v % 2 != 0) {
    throw std::logic_error("chi^" + to_string(chi.lambda) + " on " + to_string(cls.gamma) + " is odd (" + v.str() +
                           ") but must split evenly");
  }
  return QuadraticValue(BigInt(v / 2));
}

}  // namespace

QuadraticValue an_char_value(const AnIrreducible& chi, const AnClass& cls, const BigInt& sn_value) {
  if (chi.lambda.size() != cls.gamma.size()) throw std::invalid_argument("size mismatch between character and class");
  if (!is_even(cls.gamma)) throw std::invalid_argument(to_string(cls.gamma) + " is not an A_n cycle type");
  if (chi.kind == AnIrreducible::Kind::restricted_pair) return QuadraticValue(sn_value);

  const auto hooks = diagonal_hooks(chi.lambda);
  const bool diagonal_class =
      cls.split && std::equal(hooks.begin(), hooks.end(), cls.gamma.begin(), cls.gamma.end());
  if (!diagonal_class) return halve(sn_value, chi, cls);

  // (eps +- sqrt(eps * gamma_1 ... gamma_r)) / 2, + when the labels match.
  const int eps = epsilon(chi.lambda);
  if (sn_value != eps) {
    throw std::logic_error("chi^" + to_string(chi.lambda) + " on its diagonal-hook class is " + sn_value.str() +
                           ", expected " + std::to_string(eps));
  }
  BigInt radicand = eps;
  for (auto part : cls.gamma) radicand *= part;
  const int branch = chi.label == cls.label ? 1 : -1;
  return QuadraticValue::from_parts(eps, branch, radicand);
}

QuadraticValue an_char_value(const AnIrreducible& chi, const AnClass& cls) {
  return an_char_value(chi, cls, mn_value(chi.lambda, cls.gamma));
}

AnCharacterTable an_character_table(Part n, Part limit) {
  if (n < 2) throw std::invalid_argument("A_n character table needs n >= 2");
  if (n > limit) {
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the table limit " + std::to_string(limit));
  }
  AnCharacterTable table(an_irreducibles(n), an_classes(n));
  const auto& chars = table.row_keys();
  const auto& classes = table.col_keys();
  for (std::size_t j = 0; j < classes.size(); ++j) {
    MnEvaluator column(classes[j].gamma);
    for (std::size_t i = 0; i < chars.size(); ++i) {
      table(i, j) = an_char_value(chars[i], classes[j], column.value(chars[i].lambda));
    }
  }
  return table;
}

QuadraticSum an_inner_product(const AnCharacterTable& table, std::size_t i, std::size_t j) {
  QuadraticSum sum;
  for (std::size_t k = 0; k < table.cols(); ++k) {
    sum.add_product(an_class_size(table.col_keys()[k]), table(i, k), table(j, k).conj());
  }
  return sum;
}

bool an_rows_orthonormal(const AnCharacterTable& table) {
  if (table.cols() == 0) return false;
  const auto order = factorial(table.col_keys().front().gamma.size()) / 2;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = i; j < table.rows(); ++j) {
      if (!an_inner_product(table, i, j).equals(i == j ? order : BigInt(0))) return false;
    }
  }
  return true;
}

}  // namespace signclass
