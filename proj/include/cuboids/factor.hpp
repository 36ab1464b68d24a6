#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cuboids {

// Exact integer used for all counts. Unbounded, so folds over factorizations
// with many distinct primes never overflow.
using BigInt = boost::multiprecision::cpp_int;

// One p^e term of a prime factorization.
struct PrimePower {
  std::uint64_t prime = 2;
  std::uint64_t exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime factorization: primes strictly increasing and verified prime,
// exponents >= 1. The empty factorization represents N = 1.
class Factorization {
 public:
  Factorization() = default;

  // Throws std::invalid_argument if the term list violates an invariant.
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  // Exact reconstructed N; may exceed 64 bits for hand-built factorizations.
  BigInt value() const;

  // "2^6 * 3^7 * 5^6"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

// Deterministic over the whole 64-bit range (Miller-Rabin on a fixed witness
// set, no probabilistic answers).
bool is_prime(std::uint64_t n);

// Canonical factorization of n >= 1 via trial division by small primes plus
// Pollard rho (Brent cycle finding) for the remaining 64-bit cofactors.
// factor(1) is the empty factorization. Throws std::domain_error on n = 0.
Factorization factor(std::uint64_t n);

// Smallest-prime-factor table over 2..limit. One uint32 per entry, so memory
// is 4*(limit+1) bytes and limit must stay below 2^32. Immutable after
// construction and safe to share across threads.
class SpfSieve {
 public:
  // Throws std::domain_error if limit < 2, std::length_error if limit >= 2^32.
  explicit SpfSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }

  // Smallest prime factor of n, 2 <= n <= limit.
  std::uint32_t smallest_factor(std::uint64_t n) const;

  // Factorization by repeated smallest-factor division, 1 <= n <= limit.
  Factorization factorize(std::uint64_t n) const;

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
};

}  // namespace cuboids
