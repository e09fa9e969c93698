#include "signclass/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace signclass {

namespace {

Part sum_of(const std::vector<Part>& parts) {
  Part s = 0;
  for (auto v : parts) s += v;
  return s;
}

// Number of parts >= j, i.e. the j-th part of the conjugate (j is 1-based).
Part conjugate_part(const Partition& p, Part j) {
  Part count = 0;
  for (auto v : p) {
    if (v < j) break;
    ++count;
  }
  return count;
}

bool contains_desc(const std::vector<Part>& desc, Part value) {
  return std::binary_search(desc.begin(), desc.end(), value, std::greater<>());
}

}  // namespace

Partition::Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (auto v : parts_) {
    if (v < 1) throw std::invalid_argument("partition parts must be positive, got " + std::to_string(v));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = sum_of(parts_);
}

Partition Partition::from_sorted(std::vector<Part> parts) {
  Partition p;
  p.parts_ = std::move(parts);
  p.size_ = sum_of(p.parts_);
  return p;
}

Partition make_partition(std::span<const Part> raw) { return Partition(std::vector<Part>(raw.begin(), raw.end())); }

Partition conjugate(const Partition& p) {
  std::vector<Part> out;
  if (p.empty()) return {};
  out.reserve(static_cast<std::size_t>(p[0]));
  for (Part j = 1; j <= p[0]; ++j) out.push_back(conjugate_part(p, j));
  return Partition::from_sorted(std::move(out));
}

bool is_self_conjugate(const Partition& p) {
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (conjugate_part(p, static_cast<Part>(i + 1)) != p[i]) return false;
  }
  // Lengths agree: conjugate has p[0] parts, p has length() parts.
  return p.empty() || p[0] == static_cast<Part>(p.length());
}

Part hook_length(const Partition& p, std::size_t row, std::size_t col) {
  if (row < 1 || row > p.length() || col < 1 || static_cast<Part>(col) > p[row - 1]) {
    throw std::out_of_range("cell (" + std::to_string(row) + "," + std::to_string(col) +
                            ") is not in the Young diagram");
  }
  const auto i = static_cast<Part>(row);
  const auto j = static_cast<Part>(col);
  return p[row - 1] - j + conjugate_part(p, j) - i + 1;
}

BetaSet beta_set(const Partition& p, std::size_t padding) {
  BetaSet b;
  b.padding = padding;
  const auto rows = static_cast<Part>(p.length() + padding);
  b.elements.reserve(static_cast<std::size_t>(rows));
  for (Part i = 0; i < rows; ++i) b.elements.push_back(p[static_cast<std::size_t>(i)] + rows - 1 - i);
  return b;
}

Partition from_beta_set(std::span<const Part> elements) {
  std::vector<Part> e(elements.begin(), elements.end());
  std::sort(e.begin(), e.end(), std::greater<>());
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
    throw std::invalid_argument("beta-set elements must be distinct");
  }
  if (!e.empty() && e.back() < 0) throw std::invalid_argument("beta-set elements must be non-negative");
  std::vector<Part> parts;
  const auto m = static_cast<Part>(e.size());
  for (Part i = 0; i < m; ++i) {
    Part v = e[static_cast<std::size_t>(i)] - (m - 1 - i);
    if (v == 0) break;
    parts.push_back(v);
  }
  return Partition::from_sorted(std::move(parts));
}

std::vector<RimHookRemoval> rim_hooks_of_length(const Partition& p, Part q) {
  if (q < 1) throw std::invalid_argument("hook length must be positive");
  std::vector<RimHookRemoval> out;
  if (q > p.size()) return out;
  const auto beta = beta_set(p).elements;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const Part x = beta[k];
    const Part gap = x - q;
    if (gap < 0 || contains_desc(beta, gap)) continue;

    // Beads strictly between the gap and x give the leg length; beads
    // below the gap fix the column of the corner cell.
    Part between = 0;
    Part below = 0;
    for (auto y : beta) {
      if (y > gap && y < x) ++between;
      if (y < gap) ++below;
    }
    auto moved = beta;
    moved[k] = gap;

    RimHookRemoval r;
    r.row = k + 1;
    r.column = static_cast<std::size_t>(1 + gap - below);
    r.hook_length = q;
    r.leg_parity = (between % 2 == 0) ? 1 : -1;
    r.result = from_beta_set(moved);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// Beads per runner for a beta-set, as levels (position / q) in decreasing order.
std::vector<std::vector<Part>> runners(std::span<const Part> beta, Part q) {
  std::vector<std::vector<Part>> out(static_cast<std::size_t>(q));
  for (auto x : beta) out[static_cast<std::size_t>(x % q)].push_back(x / q);
  for (auto& r : out) std::sort(r.begin(), r.end(), std::greater<>());
  return out;
}

std::size_t padded_length(std::size_t length, Part q) {
  const auto uq = static_cast<std::size_t>(q);
  return (length + uq - 1) / uq * uq;
}

}  // namespace

Partition q_core(const Partition& p, Part q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  const auto beta = beta_set(p).elements;
  const auto beads = runners(beta, q);
  std::vector<Part> core;
  for (Part i = 0; i < q; ++i) {
    const auto count = static_cast<Part>(beads[static_cast<std::size_t>(i)].size());
    for (Part level = 0; level < count; ++level) core.push_back(i + q * level);
  }
  return from_beta_set(core);
}

CoreQuotient q_quotient(const Partition& p, Part q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  const auto rows = padded_length(p.length(), q);
  const auto beta = beta_set(p, rows - p.length()).elements;
  const auto beads = runners(beta, q);

  CoreQuotient cq;
  std::vector<Part> core;
  for (Part i = 0; i < q; ++i) {
    const auto& levels = beads[static_cast<std::size_t>(i)];
    const auto count = static_cast<Part>(levels.size());
    std::vector<Part> parts;
    for (Part j = 0; j < count; ++j) {
      Part v = levels[static_cast<std::size_t>(j)] - (count - 1 - j);
      if (v > 0) parts.push_back(v);
    }
    for (Part level = 0; level < count; ++level) core.push_back(i + q * level);
    auto component = Partition::from_sorted(std::move(parts));
    cq.weight += component.size();
    cq.quotient.push_back(std::move(component));
  }
  cq.core = from_beta_set(core);
  return cq;
}

Partition from_core_and_quotient(const Partition& core, std::span<const Partition> quotient, Part q) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (quotient.size() != static_cast<std::size_t>(q)) {
    throw std::invalid_argument("quotient must have exactly q components");
  }
  if (!rim_hooks_of_length(core, q).empty()) throw std::invalid_argument("core argument has a q-hook");

  auto rows = padded_length(core.length(), q);
  auto counts = [&] {
    std::vector<std::size_t> c(static_cast<std::size_t>(q));
    for (auto x : beta_set(core, rows - core.length()).elements) ++c[static_cast<std::size_t>(x % q)];
    return c;
  };
  auto c = counts();
  for (;;) {
    bool fits = true;
    for (std::size_t i = 0; i < c.size(); ++i) fits = fits && c[i] >= quotient[i].length();
    if (fits) break;
    rows += static_cast<std::size_t>(q);
    for (auto& v : c) ++v;
  }

  std::vector<Part> beta;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto count = static_cast<Part>(c[i]);
    for (Part j = 0; j < count; ++j) {
      const Part level = quotient[i][static_cast<std::size_t>(j)] + count - 1 - j;
      beta.push_back(static_cast<Part>(i) + q * level);
    }
  }
  return from_beta_set(beta);
}

std::vector<Part> diagonal_hooks(const Partition& p) {
  std::vector<Part> out;
  for (std::size_t i = 1; i <= p.length() && p[i - 1] >= static_cast<Part>(i); ++i) {
    out.push_back(hook_length(p, i, i));
  }
  return out;
}

Partition from_diagonal_hooks(std::span<const Part> hooks) {
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    if (hooks[i] < 1 || hooks[i] % 2 == 0) throw std::invalid_argument("diagonal hooks must be odd and positive");
    if (i > 0 && hooks[i] >= hooks[i - 1]) throw std::invalid_argument("diagonal hooks must be strictly decreasing");
  }
  // Frobenius coordinates (a_1..a_d | a_1..a_d) with a_k = (h_k - 1) / 2.
  const auto d = static_cast<Part>(hooks.size());
  std::vector<Part> arms;
  for (auto h : hooks) arms.push_back((h - 1) / 2);

  std::vector<Part> parts;
  for (Part k = 1; k <= d; ++k) parts.push_back(arms[static_cast<std::size_t>(k - 1)] + k);
  // Rows below the Durfee square mirror the columns to its right.
  const Part rows = d == 0 ? 0 : arms[0] + 1;
  for (Part k = d + 1; k <= rows; ++k) {
    Part len = 0;
    for (Part i = 1; i <= d; ++i) {
      if (arms[static_cast<std::size_t>(i - 1)] + i >= k) ++len;
    }
    parts.push_back(len);
  }
  return Partition::from_sorted(std::move(parts));
}

PartitionsOf::iterator::iterator(Part n) : done_(false) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative number");
  current_ = n == 0 ? Partition() : Partition::from_sorted({n});
}

PartitionsOf::iterator& PartitionsOf::iterator::operator++() {
  std::vector<Part> a(current_.begin(), current_.end());
  Part freed = 0;
  while (!a.empty() && a.back() == 1) {
    a.pop_back();
    ++freed;
  }
  if (a.empty()) {
    done_ = true;
    current_ = Partition();
    return *this;
  }
  const Part k = a.back() - 1;
  a.back() = k;
  ++freed;
  while (freed >= k) {
    a.push_back(k);
    freed -= k;
  }
  if (freed > 0) a.push_back(freed);
  current_ = Partition::from_sorted(std::move(a));
  return *this;
}

std::vector<Partition> all_partitions(Part n) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(n)) out.push_back(p);
  return out;
}

Parity permutation_parity(const Partition& p) {
  return (p.size() - static_cast<Part>(p.length())) % 2 == 0 ? Parity::even : Parity::odd;
}

bool has_distinct_odd_parts(const Partition& p) {
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (p[i] % 2 == 0) return false;
    if (i > 0 && p[i] == p[i - 1]) return false;
  }
  return true;
}

BigInt centralizer_order(const Partition& p) {
  BigInt z = 1;
  std::size_t i = 0;
  while (i < p.length()) {
    std::size_t j = i;
    while (j < p.length() && p[j] == p[i]) ++j;
    const auto m = static_cast<Part>(j - i);
    z *= boost::multiprecision::pow(BigInt(p[i]), static_cast<unsigned>(m)) * factorial(m);
    i = j;
  }
  return z;
}

BigInt factorial(Part n) {
  BigInt f = 1;
  for (Part k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace signclass
