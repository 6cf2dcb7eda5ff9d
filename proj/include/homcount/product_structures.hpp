#pragma once

/**
 * @file product_structures.hpp
 * @brief Direct products Z_{m_1} x ... x Z_{m_k} of cyclic groups and rings.
 *
 * Covers component-wise surjection counts, idempotents, the distribution of
 * element orders via lcm-constrained divisor tuples, and maximal-order
 * element counts. A full homomorphism count over residue matrices is kept
 * alongside as a separate oracle, because the component-wise count only
 * covers maps that send factor i into factor i.
 *
 * Moduli equal to 1 are legal everywhere and contribute neutral factors.
 */

#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homcount/arith.hpp"
#include "homcount/cyclic_homs.hpp"

namespace homcount {

/// Ordered sequence of cyclic moduli. Order matters: component-wise maps pair
/// index i with index i.
class ProductGroup {
 public:
  explicit ProductGroup(std::vector<Modulus> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw invalid_input("ProductGroup: at least one modulus required");
    for (auto m : moduli_) detail::require_positive(m, "ProductGroup modulus");
  }
  ProductGroup(std::initializer_list<Modulus> moduli)
      : ProductGroup(std::vector<Modulus>(moduli)) {}

  /// Parses "4,6" (or a bare "12" for a cyclic group).
  static ProductGroup parse(std::string_view text) {
    std::vector<Modulus> moduli;
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
      Modulus value = 0;
      const auto* first = token.data();
      const auto* last = token.data() + token.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (token.empty() || ec != std::errc{} || ptr != last || value == 0) {
        throw invalid_input("malformed group descriptor '" + std::string(text) +
                            "': expected positive integers separated by commas");
      }
      moduli.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return ProductGroup(std::move(moduli));
  }

  std::span<const Modulus> moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  Modulus operator[](std::size_t i) const { return moduli_[i]; }
  bool is_cyclic_presentation() const { return moduli_.size() == 1; }

  NaturalCount order() const {
    NaturalCount out = 1;
    for (auto m : moduli_) out *= m;
    return out;
  }

  /// Order as a machine word, for enumeration loops that must stay in budget.
  std::uint64_t order_within(std::uint64_t budget, const char* what) const {
    const NaturalCount n = order();
    if (n > budget) {
      throw budget_exceeded(std::string(what) + ": group of order " + n.str() +
                            " exceeds budget of " + std::to_string(budget));
    }
    return static_cast<std::uint64_t>(n);
  }

  std::string descriptor(char separator = ',') const {
    std::string out;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      if (i > 0) out += separator;
      out += std::to_string(moduli_[i]);
    }
    return out;
  }

  friend auto operator<=>(const ProductGroup&, const ProductGroup&) = default;

 private:
  std::vector<Modulus> moduli_;
};

struct ProductElement {
  std::vector<std::uint64_t> components;

  friend auto operator<=>(const ProductElement&, const ProductElement&) = default;
};

struct DivisorTuple {
  std::vector<Modulus> entries;
  Modulus lcm_value = 1;

  friend bool operator==(const DivisorTuple&, const DivisorTuple&) = default;
};

namespace detail {

/// Odometer over the Cartesian product of index ranges [0, sizes[i]),
/// last index fastest. Stops early if fn returns false.
template <class Fn>
void for_each_index_tuple(std::span<const std::size_t> sizes, Fn&& fn) {
  for (auto s : sizes) {
    if (s == 0) return;
  }
  std::vector<std::size_t> idx(sizes.size(), 0);
  while (true) {
    if (!fn(std::as_const(idx))) return;
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < sizes[pos]) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (idx.empty()) return;
  }
}

inline void require_same_rank(const ProductGroup& g, const ProductGroup& h, const char* what) {
  if (g.rank() != h.rank()) {
    throw invalid_input(std::string(what) + ": rank mismatch (" + std::to_string(g.rank()) +
                        " vs " + std::to_string(h.rank()) + ")");
  }
}

}  // namespace detail

/// Visits every element of the group in lexicographic order.
template <class Fn>
void for_each_element(const ProductGroup& g, Fn&& fn, std::uint64_t budget = default_work_budget) {
  g.order_within(budget, "for_each_element");
  std::vector<std::size_t> sizes(g.moduli().begin(), g.moduli().end());
  ProductElement element{std::vector<std::uint64_t>(g.rank(), 0)};
  detail::for_each_index_tuple(sizes, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) element.components[i] = idx[i];
    fn(std::as_const(element));
    return true;
  });
}

inline ProductElement make_element(const ProductGroup& g, std::vector<std::uint64_t> components) {
  if (components.size() != g.rank()) {
    throw invalid_input("make_element: component count does not match group rank");
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i] >= g[i]) {
      throw invalid_input("make_element: component " + std::to_string(i) + " not reduced mod " +
                          std::to_string(g[i]));
    }
  }
  return ProductElement{std::move(components)};
}

/// lcm of the component orders.
inline std::uint64_t element_order(const ProductGroup& g, const ProductElement& x) {
  if (x.components.size() != g.rank()) {
    throw invalid_input("element_order: component count does not match group rank");
  }
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    out = lcm_checked(out, element_order(x.components[i], g[i]));
  }
  return out;
}

/// Maximal element order M = lcm(m_1, ..., m_k).
inline std::uint64_t group_exponent(const ProductGroup& g) { return lcm_many(g.moduli()); }

/// Divisor tuples (d_1 | m_1, ..., d_k | m_k) whose lcm equals d, in
/// lexicographic order of the per-component ascending divisor lists.
inline std::vector<DivisorTuple> enumerate_divisor_tuples(const ProductGroup& g, std::uint64_t d) {
  detail::require_positive(d, "enumerate_divisor_tuples");
  std::vector<DivisorTuple> out;
  if (group_exponent(g) % d != 0) return out;

  std::vector<std::vector<std::uint64_t>> lists;
  std::vector<std::size_t> sizes;
  for (auto m : g.moduli()) {
    lists.push_back(divisors(m));
    sizes.push_back(lists.back().size());
  }
  std::vector<Modulus> entries(g.rank());
  detail::for_each_index_tuple(sizes, [&](const std::vector<std::size_t>& idx) {
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      entries[i] = lists[i][idx[i]];
      l = lcm_checked(l, entries[i]);
    }
    if (l == d) out.push_back({entries, l});
    return true;
  });
  return out;
}

/// Number of elements of order d: sum over divisor tuples with lcm d of
/// phi(d_1) * ... * phi(d_k). Zero when d does not divide the exponent.
inline NaturalCount count_elements_of_order(const ProductGroup& g, std::uint64_t d) {
  detail::require_positive(d, "count_elements_of_order");
  NaturalCount out = 0;
  for (const auto& tuple : enumerate_divisor_tuples(g, d)) {
    NaturalCount term = 1;
    for (auto di : tuple.entries) term *= totient(di);
    out += term;
  }
  return out;
}

inline NaturalCount count_maximal_order_elements(const ProductGroup& g) {
  return count_elements_of_order(g, group_exponent(g));
}

/// Component-wise surjection count with the reason it is zero, if it is.
struct ComponentwiseSurjections {
  NaturalCount count = 0;
  /// First index i with n_i not dividing m_i.
  std::optional<std::size_t> blocking_index;

  std::string status() const {
    if (!blocking_index) return "ok";
    return "no component-wise surjection: target modulus at index " +
           std::to_string(*blocking_index) + " does not divide its source modulus";
  }
};

/// prod phi(n_i) over k-tuples of surjections Z_{m_i} -> Z_{n_i}.
inline ComponentwiseSurjections count_componentwise_surjective_homs(const ProductGroup& source,
                                                                    const ProductGroup& target) {
  detail::require_same_rank(source, target, "count_componentwise_surjective_homs");
  ComponentwiseSurjections out;
  for (std::size_t i = 0; i < source.rank(); ++i) {
    if (source[i] % target[i] != 0) {
      out.blocking_index = i;
      out.count = 0;
      return out;
    }
  }
  out.count = 1;
  for (auto n : target.moduli()) out.count *= totient(n);
  return out;
}

/// 2^(omega(m_1) + ... + omega(m_k)).
inline NaturalCount count_product_idempotents(const ProductGroup& r) {
  unsigned total = 0;
  for (auto m : r.moduli()) total += omega(m);
  return pow2(total);
}

/// Elements whose every component is idempotent, lexicographic.
inline std::vector<ProductElement> enumerate_product_idempotents(
    const ProductGroup& r, std::uint64_t budget = default_work_budget) {
  r.order_within(budget, "enumerate_product_idempotents");
  std::vector<std::vector<std::uint64_t>> lists;
  std::vector<std::size_t> sizes;
  for (auto m : r.moduli()) {
    lists.push_back(enumerate_idempotents(m, budget));
    sizes.push_back(lists.back().size());
  }
  std::vector<ProductElement> out;
  detail::for_each_index_tuple(sizes, [&](const std::vector<std::size_t>& idx) {
    ProductElement e{std::vector<std::uint64_t>(idx.size())};
    for (std::size_t i = 0; i < idx.size(); ++i) e.components[i] = lists[i][idx[i]];
    out.push_back(std::move(e));
    return true;
  });
  return out;
}

struct MatrixHomCount {
  NaturalCount total = 0;
  /// Present only when image testing fit in the budget.
  std::optional<NaturalCount> surjective;
};

/**
 * Counts every group homomorphism G -> H by enumerating residue matrices
 * (a_ji), a_ji in Z_{n_j} with m_i * a_ji = 0 (mod n_j). Column i is the image
 * of the i-th generator of G.
 *
 * Refuses with budget_exceeded when the matrix count passes the budget.
 * Surjections are counted by mapping every element of G and checking the
 * image covers H, but only when |G| * total fits the budget too.
 */
inline MatrixHomCount enumerate_all_group_homs_matrix(const ProductGroup& source,
                                                      const ProductGroup& target,
                                                      std::uint64_t budget = default_work_budget) {
  const std::size_t k = source.rank();
  const std::size_t l = target.rank();

  // Cell (j, i) stored at j * k + i.
  std::vector<std::vector<std::uint64_t>> cells(k * l);
  std::vector<std::size_t> sizes(k * l);
  NaturalCount matrices = 1;
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      auto& cell = cells[j * k + i];
      const std::uint64_t g = std::gcd(source[i], target[j]);
      const std::uint64_t step = target[j] / g;
      for (std::uint64_t t = 0; t < g; ++t) cell.push_back(t * step);
      sizes[j * k + i] = cell.size();
      matrices *= g;
    }
  }
  if (matrices > budget) {
    throw budget_exceeded("enumerate_all_group_homs_matrix: " + matrices.str() +
                          " homomorphisms exceed budget of " + std::to_string(budget));
  }

  const NaturalCount source_order = source.order();
  const NaturalCount target_order = target.order();
  const bool test_images = source_order * matrices <= budget;

  MatrixHomCount out;
  NaturalCount surjective = 0;
  std::uint64_t h_order = 0;
  std::vector<char> hit;
  if (test_images) {
    h_order = static_cast<std::uint64_t>(target_order);
    hit.resize(h_order);
  }

  detail::for_each_index_tuple(sizes, [&](const std::vector<std::size_t>& idx) {
    ++out.total;
    if (!test_images || target_order > source_order) return true;
    std::fill(hit.begin(), hit.end(), 0);
    std::uint64_t covered = 0;
    for_each_element(
        source,
        [&](const ProductElement& x) {
          // Mixed-radix index of the image in H.
          std::uint64_t code = 0;
          for (std::size_t j = 0; j < l; ++j) {
            std::uint64_t y = 0;
            for (std::size_t i = 0; i < k; ++i) {
              y = (y + detail::mul_mod(cells[j * k + i][idx[j * k + i]], x.components[i],
                                       target[j])) % target[j];
            }
            code = code * target[j] + y;
          }
          if (!hit[code]) {
            hit[code] = 1;
            ++covered;
          }
        },
        budget);
    if (covered == h_order) ++surjective;
    return true;
  });
  if (test_images) out.surjective = surjective;
  return out;
}

}  // namespace homcount
