#include "signclass/classification.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

namespace signclass {

namespace {

bool shape_is(std::span<const Part> g, std::initializer_list<Part> want) {
  return std::equal(g.begin(), g.end(), want.begin(), want.end());
}

std::optional<std::string> sign_tail_family(std::span<const Part> t) {
  switch (t.size()) {
    case 0:
      return "()";
    case 2:
      if (shape_is(t, {1, 1})) return "1,1";
      break;
    case 3:
      if (t[0] >= 2 && t[1] == t[0] - 1 && t[2] == 1) return "a,a-1,1";
      break;
    case 4:
      if (shape_is(t, {3, 2, 1, 1})) return "3,2,1,1";
      if (shape_is(t, {5, 3, 2, 1})) return "5,3,2,1";
      if (t[1] == t[0] - 1 && t[3] == 1) {
        if (t[2] == 2 && t[0] >= 4) return "a,a-1,2,1";
        if (t[2] == 3 && t[0] >= 5) return "a,a-1,3,1";
      }
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace

SignMembership in_sign_set(const Partition& gamma) {
  const auto g = gamma.parts();
  const auto r = g.size();

  // suffix[i] = gamma_{i+1} + ... + gamma_r (0-based i)
  std::vector<Part> suffix(r + 1, 0);
  for (std::size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] + g[i];

  // The dominance condition must hold for every i <= s, so the admissible
  // s form an initial range 0..max_s.
  std::size_t max_s = 0;
  while (max_s < r && g[max_s] > suffix[max_s + 1]) ++max_s;

  const std::size_t first = r > 4 ? r - 4 : 0;
  for (std::size_t s = first; s <= max_s; ++s) {
    if (auto family = sign_tail_family(g.subspan(s))) return {true, s, std::move(family)};
  }
  return {};
}

SignBarMembership in_sign_bar_set(const Partition& gamma) {
  const auto g = gamma.parts();
  if (shape_is(g, {1, 1, 1})) return {true, "1,1,1"};
  if (shape_is(g, {2, 2})) return {true, "2,2"};
  if (shape_is(g, {2, 2, 1})) return {true, "2,2,1"};
  if (shape_is(g, {5, 4, 3, 2, 1})) return {true, "5,4,3,2,1"};

  if (g.empty()) return {};
  const Part a = g[0];
  if (g.size() == 4 && a >= 6 && g[1] == a - 1 && g[2] == 4 && g[3] == 1) return {true, "a,a-1,4,1"};
  if (g.size() == 5 && (a == 6 || a >= 8) && shape_is(g, {a, a - 3, 2, 1, 1})) return {true, "a,a-3,2,1,1"};
  if (g.size() == 5 && ((9 <= a && a <= 10) || a >= 12) && shape_is(g, {a, a - 5, 3, 2, 1})) {
    return {true, "a,a-5,3,2,1"};
  }
  if (g.size() == 3) {
    const Part b = g[1];
    if (b + 1 <= a && a <= 2 * b - 2 && g[2] == a - b + 1) return {true, "a,b,a-b+1"};
  }
  if (g.size() == 4) {
    const Part b = g[1];
    if (b + 2 <= a && a <= 2 * b && g[2] == a - b - 1 && g[3] == 1) return {true, "a,b,a-b-1,1"};
  }
  return {};
}

bool is_sn_sign_partition_closed_form(const Partition& gamma) { return in_sign_set(gamma).member; }

bool is_an_sign_partition_closed_form(const Partition& gamma) {
  if (gamma.size() < 2) throw std::invalid_argument("A_n-sign partitions are defined for n >= 2");
  return classify(gamma).an_sign_partition;
}

ClassificationResult classify(const Partition& gamma) {
  ClassificationResult out;
  out.partition = gamma;
  auto sign = in_sign_set(gamma);
  out.in_sign = sign.member;
  out.sign_split_index = sign.split_index;
  auto bar = in_sign_bar_set(gamma);
  out.in_sign_bar = bar.member;
  out.sign_bar_family = std::move(bar.family);
  out.is_even = is_even(gamma);
  out.distinct_odd = has_distinct_odd_parts(gamma);
  out.sn_sign_partition = out.in_sign;
  out.an_sign_partition = (out.in_sign || out.in_sign_bar) && out.is_even && !out.distinct_odd;
  return out;
}

}  // namespace signclass
