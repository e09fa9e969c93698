#pragma once

#include <string>
#include <vector>

#include "signclass/bigint.hpp"
#include "signclass/character_table.hpp"
#include "signclass/partition.hpp"
#include "signclass/quadratic.hpp"
#include "signclass/sn_characters.hpp"

namespace signclass {

/// Label of a split class or character. Unsplit objects carry `none`.
enum class SplitLabel { none, plus, minus };

char to_char(SplitLabel label);

/// A conjugacy class of A_n: an even cycle type, split in two (labels +
/// and -) exactly when its parts are odd and distinct.
struct AnClass {
  Partition gamma;
  bool split = false;
  SplitLabel label = SplitLabel::none;

  friend bool operator==(const AnClass&, const AnClass&) = default;
};

/// An irreducible character of A_n: either the common restriction of
/// chi^lambda and chi^{lambda'} (lambda != lambda', stored with the
/// lexicographically larger member), or one of the two constituents
/// chi^{lambda,+-} of a self-conjugate lambda.
struct AnIrreducible {
  enum class Kind { restricted_pair, split };

  Kind kind = Kind::restricted_pair;
  Partition lambda;
  SplitLabel label = SplitLabel::none;

  static AnIrreducible restricted(const Partition& lambda);
  static AnIrreducible split_constituent(const Partition& lambda, SplitLabel label);

  friend bool operator==(const AnIrreducible&, const AnIrreducible&) = default;
};

/// "3,1" for unsplit objects, "3,1+" / "3,1-" for split ones.
std::string to_string(const AnClass& c);
std::string to_string(const AnIrreducible& chi);

/// Even cycle types of n in reverse-lexicographic order, + before -.
std::vector<AnClass> an_classes(Part n);

/// Restricted pairs and split constituents in reverse-lexicographic order
/// of the representative; same count as an_classes(n).
std::vector<AnIrreducible> an_irreducibles(Part n);

/// (-1)^((n - d)/2), d the number of diagonal hooks. Throws
/// std::invalid_argument unless lambda is self-conjugate.
int epsilon(const Partition& lambda);

/// Number of elements of A_n in the class.
BigInt an_class_size(const AnClass& cls);
BigInt an_centralizer_order(const AnClass& cls);

/// The value of chi on cls given the S_n value chi^lambda_gamma.
/// Throws std::logic_error if a value that must halve to an integer is odd.
QuadraticValue an_char_value(const AnIrreducible& chi, const AnClass& cls, const BigInt& sn_value);

/// Same, evaluating chi^lambda_gamma with a fresh cache.
QuadraticValue an_char_value(const AnIrreducible& chi, const AnClass& cls);

using AnCharacterTable = CharacterTable<QuadraticValue, AnIrreducible, AnClass>;

AnCharacterTable an_character_table(Part n, Part limit = kDefaultTableLimit);

/// sum_classes |C| chi_i(C) conj(chi_j(C)), exactly.
QuadraticSum an_inner_product(const AnCharacterTable& table, std::size_t i, std::size_t j);

/// True iff the inner product of every row pair equals |A_n| delta_ij.
bool an_rows_orthonormal(const AnCharacterTable& table);

}  // namespace signclass
