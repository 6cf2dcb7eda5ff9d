#pragma once

// Divisibility of surjection counts by ring-homomorphism counts.
//
// Cyclic case: 2^omega(n) divides phi(n) exactly when n is not exceptional,
// where exceptional means n = 2 * alpha with alpha odd and every prime of alpha
// congruent to 3 mod 4 (n = 2 included). The sweep asserts this biconditional.
//
// Product case: 2^(sum omega(n_i)) against the number of maximal-order elements
// of S = Z_{n_1} x ... x Z_{n_k}. The stated failure condition is only a flag;
// sweeps report every combination of flag and outcome.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "homcount/arith.hpp"
#include "homcount/product_structures.hpp"

namespace homcount {

namespace detail {

/// Odd, and every prime divisor is 3 mod 4. Vacuously true for 1.
inline bool odd_with_primes_3_mod_4(std::uint64_t n) {
  if (n % 2 == 0) return false;
  for (const auto& pp : factorize(n)) {
    if (pp.prime % 4 != 3) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_exceptional(std::uint64_t n) {
  detail::require_positive(n, "is_exceptional");
  return n % 4 == 2 && detail::odd_with_primes_3_mod_4(n / 2);
}

struct ClassificationRecord {
  std::uint64_t n = 1;
  unsigned omega = 0;
  NaturalCount phi = 1;
  NaturalCount ring_hom_count = 1;
  NaturalCount surj_hom_count = 1;
  bool divides = true;
  bool exceptional = false;
  bool agrees = true;

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

inline ClassificationRecord check_main_theorem(std::uint64_t n) {
  detail::require_positive(n, "check_main_theorem");
  const auto f = factorize(n);
  ClassificationRecord r;
  r.n = n;
  r.omega = static_cast<unsigned>(f.size());
  r.phi = totient(f);
  r.ring_hom_count = pow2(r.omega);
  r.surj_hom_count = r.phi;
  r.divides = homcount::divides(r.ring_hom_count, r.surj_hom_count);
  r.exceptional = is_exceptional(n);
  r.agrees = r.divides == !r.exceptional;
  return r;
}

struct CyclicSweepReport {
  std::vector<ClassificationRecord> records;
  std::size_t regular = 0;
  std::size_t exceptional = 0;
  std::vector<std::uint64_t> disagreements;

  bool ok() const { return disagreements.empty(); }
};

/// Records for 2 <= n <= max_n, ascending.
inline CyclicSweepReport sweep_cyclic(std::uint64_t max_n) {
  if (max_n < 2) {
    throw invalid_input("sweep_cyclic: max_n must be at least 2, got " + std::to_string(max_n));
  }
  CyclicSweepReport report;
  report.records.reserve(max_n - 1);
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    auto r = check_main_theorem(n);
    (r.exceptional ? report.exceptional : report.regular) += 1;
    if (!r.agrees) report.disagreements.push_back(n);
    report.records.push_back(std::move(r));
  }
  return report;
}

enum class ProductClass {
  held,                  // divides, condition not met
  flagged_and_failed,
  flagged_and_held,
  unflagged_and_failed,
};

inline constexpr std::array<ProductClass, 4> all_product_classes{
    ProductClass::held, ProductClass::flagged_and_failed, ProductClass::flagged_and_held,
    ProductClass::unflagged_and_failed};

inline constexpr std::string_view to_string(ProductClass c) {
  switch (c) {
    case ProductClass::held: return "held";
    case ProductClass::flagged_and_failed: return "flagged_and_failed";
    case ProductClass::flagged_and_held: return "flagged_and_held";
    case ProductClass::unflagged_and_failed: return "unflagged_and_failed";
  }
  return "unknown";
}

inline ProductClass classify(bool flagged, bool divides) {
  if (flagged) return divides ? ProductClass::flagged_and_held : ProductClass::flagged_and_failed;
  return divides ? ProductClass::held : ProductClass::unflagged_and_failed;
}

/// Some n_i = 2 and some other n_j odd with every prime divisor 3 mod 4.
inline bool product_failure_condition(const ProductGroup& s) {
  const auto moduli = s.moduli();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] != 2) continue;
    for (std::size_t j = 0; j < moduli.size(); ++j) {
      if (j != i && detail::odd_with_primes_3_mod_4(moduli[j])) return true;
    }
  }
  return false;
}

struct ProductDivisibilityRecord {
  ProductGroup moduli;
  NaturalCount ring_hom_count = 1;
  NaturalCount max_order_count = 1;
  bool divides = true;
  bool failure_condition = false;
  ProductClass classification = ProductClass::held;
  /// Brute-force count of maximal-order elements; absent when over budget.
  std::optional<NaturalCount> oracle_max_order_count;

  bool verified() const {
    return oracle_max_order_count && *oracle_max_order_count == max_order_count;
  }
  bool oracle_disagrees() const {
    return oracle_max_order_count && *oracle_max_order_count != max_order_count;
  }
};

/// Brute force: scan every element and count those of order lcm(n_1, ..., n_k).
inline NaturalCount count_maximal_order_elements_by_scan(const ProductGroup& s,
                                                         std::uint64_t budget = default_work_budget) {
  const std::uint64_t exponent = group_exponent(s);
  NaturalCount out = 0;
  for_each_element(
      s, [&](const ProductElement& x) { if (element_order(s, x) == exponent) ++out; }, budget);
  return out;
}

inline ProductDivisibilityRecord check_product_theorem(const ProductGroup& s,
                                                       std::uint64_t budget = default_work_budget) {
  ProductDivisibilityRecord r{s};
  r.ring_hom_count = count_product_idempotents(s);
  r.max_order_count = count_maximal_order_elements(s);
  r.divides = homcount::divides(r.ring_hom_count, r.max_order_count);
  r.failure_condition = product_failure_condition(s);
  r.classification = classify(r.failure_condition, r.divides);
  if (s.order() <= budget) r.oracle_max_order_count = count_maximal_order_elements_by_scan(s, budget);
  return r;
}

struct ProductSweepReport {
  std::vector<ProductDivisibilityRecord> records;
  std::array<std::size_t, all_product_classes.size()> tallies{};
  std::size_t unverified = 0;
  std::vector<ProductGroup> oracle_disagreements;

  std::size_t tally(ProductClass c) const { return tallies[static_cast<std::size_t>(c)]; }
  bool ok() const { return oracle_disagreements.empty(); }
};

inline constexpr std::size_t max_sweep_rank = 3;
inline constexpr std::uint64_t max_sweep_modulus = 12;

/**
 * One record per multiset of moduli drawn from 2..max_modulus with 1..max_k
 * factors, ordered by rank and then lexicographically (each multiset written
 * non-decreasing).
 */
inline ProductSweepReport sweep_products(std::size_t max_k, std::uint64_t max_modulus) {
  if (max_k < 1 || max_k > max_sweep_rank) {
    throw invalid_input("sweep_products: max_k must be in 1.." + std::to_string(max_sweep_rank));
  }
  if (max_modulus < 2 || max_modulus > max_sweep_modulus) {
    throw invalid_input("sweep_products: max_modulus must be in 2.." +
                        std::to_string(max_sweep_modulus));
  }
  ProductSweepReport report;
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<Modulus> moduli(k, 2);
    while (true) {
      auto r = check_product_theorem(ProductGroup(moduli));
      ++report.tallies[static_cast<std::size_t>(r.classification)];
      if (!r.oracle_max_order_count) ++report.unverified;
      if (r.oracle_disagrees()) report.oracle_disagreements.push_back(r.moduli);
      report.records.push_back(std::move(r));

      // Next non-decreasing tuple.
      std::size_t pos = k;
      while (pos > 0 && moduli[pos - 1] == max_modulus) --pos;
      if (pos == 0) break;
      ++moduli[pos - 1];
      std::fill(moduli.begin() + static_cast<std::ptrdiff_t>(pos), moduli.end(), moduli[pos - 1]);
    }
  }
  return report;
}

}  // namespace homcount
