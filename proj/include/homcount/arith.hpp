#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer primitives used by every counting routine.
 *
 * Moduli are machine words (desk scale, n <= 10^9 or so). Counts are
 * arbitrary-precision naturals: products over many cyclic factors multiply
 * totients and powers of two, and those must never wrap.
 *
 * Factorization is deterministic trial division up to sqrt(n).
 */

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homcount/errors.hpp"

namespace homcount {

using Modulus = std::uint64_t;

/// Arbitrary-precision count. Every count produced here is a product or sum
/// of non-negative terms; nothing subtracts.
using NaturalCount = boost::multiprecision::checked_cpp_int;

inline std::string to_string(const NaturalCount& value) { return value.str(); }

namespace detail {

inline void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw invalid_input(std::string(what) + ": argument must be positive, got 0");
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw arithmetic_overflow("product of " + std::to_string(a) + " and " + std::to_string(b) +
                              " overflows 64 bits");
  }
  return out;
}

/// (a * b) mod n without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a % n) * (b % n) % n);
}

}  // namespace detail

/// Deterministic primality by trial division.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

struct PrimePower {
  std::uint64_t prime = 2;
  unsigned exponent = 1;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition. An empty sequence stands for 1.
class Factorization {
 public:
  Factorization() = default;

  /// Validates canonical form: strictly increasing primes, exponents >= 1.
  explicit Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto& pp = pairs_[i];
      if (pp.exponent == 0) throw invalid_input("Factorization: exponent must be >= 1");
      if (!is_prime(pp.prime)) {
        throw invalid_input("Factorization: " + std::to_string(pp.prime) + " is not prime");
      }
      if (i > 0 && pairs_[i - 1].prime >= pp.prime) {
        throw invalid_input("Factorization: primes must be strictly increasing");
      }
    }
  }

  std::span<const PrimePower> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  /// Reconstructs the integer.
  std::uint64_t value() const {
    std::uint64_t out = 1;
    for (const auto& [p, e] : pairs_) {
      for (unsigned i = 0; i < e; ++i) out = detail::checked_mul(out, p);
    }
    return out;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

inline Factorization factorize(std::uint64_t n) {
  detail::require_positive(n, "factorize");
  std::vector<PrimePower> pairs;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) pairs.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) strip(d);
  if (n > 1) pairs.push_back({n, 1});
  return Factorization(std::move(pairs));
}

/// Euler's totient as prod p^(e-1) (p - 1).
inline NaturalCount totient(const Factorization& f) {
  NaturalCount out = 1;
  for (const auto& [p, e] : f) {
    out *= p - 1;
    for (unsigned i = 1; i < e; ++i) out *= p;
  }
  return out;
}

inline NaturalCount totient(std::uint64_t n) {
  detail::require_positive(n, "totient");
  return totient(factorize(n));
}

/// Number of distinct prime divisors; omega(1) = 0.
inline unsigned omega(std::uint64_t n) {
  detail::require_positive(n, "omega");
  return static_cast<unsigned>(factorize(n).size());
}

inline NaturalCount pow2(unsigned k) { return NaturalCount(1) << k; }

/// True iff d divides n exactly. d = 0 divides only 0.
inline bool divides(const NaturalCount& d, const NaturalCount& n) {
  if (d == 0) return n == 0;
  return n % d == 0;
}

/// All divisors, ascending, built from exponent vectors of the factorization.
inline std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  detail::require_positive(n, "divisors");
  return divisors(factorize(n));
}

inline std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  return detail::checked_mul(a / std::gcd(a, b), b);
}

inline std::uint64_t lcm_many(std::span<const std::uint64_t> values) {
  if (values.empty()) throw invalid_input("lcm_many: empty sequence");
  std::uint64_t out = 1;
  for (auto v : values) {
    detail::require_positive(v, "lcm_many");
    out = lcm_checked(out, v);
  }
  return out;
}

inline std::uint64_t lcm_many(std::initializer_list<std::uint64_t> values) {
  return lcm_many(std::span<const std::uint64_t>(values.begin(), values.size()));
}

inline unsigned two_adic_valuation(std::uint64_t n) {
  detail::require_positive(n, "two_adic_valuation");
  return static_cast<unsigned>(std::countr_zero(n));
}

inline unsigned two_adic_valuation(const NaturalCount& n) {
  if (n == 0) throw invalid_input("two_adic_valuation: argument must be positive, got 0");
  return static_cast<unsigned>(boost::multiprecision::lsb(n));
}

}  // namespace homcount
