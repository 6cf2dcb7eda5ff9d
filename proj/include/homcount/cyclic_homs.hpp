#pragma once

// Homomorphisms Z_m -> Z_n.
//
// A group homomorphism is fixed by the image a of 1, subject to m*a = 0 in Z_n.
// A ring homomorphism (additive and multiplicative, not necessarily unital)
// additionally needs a*a = a. The enumerate_* functions scan all of Z_n and
// serve as the brute-force side of every closed form here.

#include <cstdint>
#include <numeric>
#include <vector>

#include "homcount/arith.hpp"

namespace homcount {

struct CyclicHomWitness {
  Modulus source_modulus = 1;
  Modulus target_modulus = 1;
  std::uint64_t generator_image = 0;

  /// x -> a*x (mod n).
  std::uint64_t operator()(std::uint64_t x) const {
    return detail::mul_mod(generator_image, x, target_modulus);
  }

  friend bool operator==(const CyclicHomWitness&, const CyclicHomWitness&) = default;
};

struct RingHomWitness {
  Modulus source_modulus = 1;
  Modulus target_modulus = 1;
  std::uint64_t generator_image = 0;
  bool idempotent_image = true;

  std::uint64_t operator()(std::uint64_t x) const {
    return detail::mul_mod(generator_image, x, target_modulus);
  }

  friend bool operator==(const RingHomWitness&, const RingHomWitness&) = default;
};

namespace detail {

inline void require_moduli(Modulus m, Modulus n, const char* what) {
  require_positive(m, what);
  require_positive(n, what);
}

/// Visits every a in [0, n) with c*a mod n and a*a mod n, both maintained
/// incrementally: c*(a+1) = c*a + c and (a+1)^2 = a^2 + 2a + 1.
template <class Fn>
void scan_residues(Modulus n, std::uint64_t c, Fn&& fn) {
  auto add_mod = [n](std::uint64_t x, std::uint64_t y) {
    // x, y < n; n <= 2^63 keeps x + y from wrapping.
    const std::uint64_t s = x + y;
    return s >= n ? s - n : s;
  };
  std::uint64_t c_times_a = 0;
  std::uint64_t square = 0;
  for (std::uint64_t a = 0; a < n; ++a) {
    fn(a, c_times_a, square);
    c_times_a = add_mod(c_times_a, c);
    // 2a + 1 mod n, split to stay in range.
    square = add_mod(add_mod(square, a), add_mod(a, 1 % n));
  }
}

}  // namespace detail

/// Additive order of a in Z_n, n / gcd(a, n).
inline std::uint64_t element_order(std::uint64_t a, Modulus n) {
  detail::require_positive(n, "element_order");
  if (a >= n) {
    throw invalid_input("element_order: residue " + std::to_string(a) + " not reduced mod " +
                        std::to_string(n));
  }
  return n / std::gcd(a, n);
}

/// Every homomorphism Z_m -> Z_n, ascending by generator image. Length gcd(m, n).
inline std::vector<CyclicHomWitness> enumerate_group_homs(
    Modulus m, Modulus n, std::uint64_t budget = default_work_budget) {
  detail::require_moduli(m, n, "enumerate_group_homs");
  require_budget(n, budget, "enumerate_group_homs");
  std::vector<CyclicHomWitness> out;
  detail::scan_residues(n, m % n, [&](std::uint64_t a, std::uint64_t m_times_a, std::uint64_t) {
    if (m_times_a == 0) out.push_back({m, n, a});
  });
  return out;
}

/// phi(n) when n | m, otherwise 0: a surjection sends 1 to a generator of Z_n,
/// and generators have order n, which must divide m.
inline NaturalCount count_surjective_group_homs(Modulus m, Modulus n) {
  detail::require_moduli(m, n, "count_surjective_group_homs");
  if (m % n != 0) return 0;
  return totient(n);
}

/// Brute force: witnesses whose generator image has order n.
inline NaturalCount count_surjective_group_homs_by_enumeration(
    Modulus m, Modulus n, std::uint64_t budget = default_work_budget) {
  NaturalCount out = 0;
  for (const auto& w : enumerate_group_homs(m, n, budget)) {
    if (element_order(w.generator_image, n) == n) ++out;
  }
  return out;
}

/// Residues a in [0, n) with a*a = a, ascending.
inline std::vector<std::uint64_t> enumerate_idempotents(
    Modulus n, std::uint64_t budget = default_work_budget) {
  detail::require_positive(n, "enumerate_idempotents");
  require_budget(n, budget, "enumerate_idempotents");
  std::vector<std::uint64_t> out;
  detail::scan_residues(n, 0, [&](std::uint64_t a, std::uint64_t, std::uint64_t square) {
    if (square == a) out.push_back(a);
  });
  return out;
}

/// Every ring homomorphism Z_m -> Z_n (the zero map included), ascending.
inline std::vector<RingHomWitness> enumerate_ring_homs(
    Modulus m, Modulus n, std::uint64_t budget = default_work_budget) {
  detail::require_moduli(m, n, "enumerate_ring_homs");
  require_budget(n, budget, "enumerate_ring_homs");
  std::vector<RingHomWitness> out;
  detail::scan_residues(n, m % n, [&](std::uint64_t a, std::uint64_t m_times_a, std::uint64_t square) {
    if (square == a && m_times_a == 0) out.push_back({m, n, a, true});
  });
  return out;
}

/// 2^omega(n). Only stated for n | m; anything else is a precondition
/// violation and callers should fall back to enumerate_ring_homs.
inline NaturalCount count_ring_homs_closed_form(Modulus m, Modulus n) {
  detail::require_moduli(m, n, "count_ring_homs_closed_form");
  if (m % n != 0) {
    throw precondition_violation("count_ring_homs_closed_form: closed form requires n | m, got m=" +
                                 std::to_string(m) + " n=" + std::to_string(n));
  }
  return pow2(omega(n));
}

}  // namespace homcount
