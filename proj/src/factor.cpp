#include "cuboids/factor.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cuboids {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Single Miller-Rabin round; n odd, n > 2, n - 1 = d * 2^r.
bool witness_passes(u64 n, u64 a, u64 d, int r) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent-style Pollard rho. Returns a nontrivial factor of composite odd n.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1, saved = 2;
    u64 power = 1, lam = 1;
    while (d == 1) {
      if (lam == power) {
        x = y;
        power *= 2;
        lam = 0;
      }
      // batch gcd every 64 steps
      u64 q = 1;
      u64 steps = std::min<u64>(64, power - lam);
      saved = y;
      for (u64 i = 0; i < steps; ++i) {
        y = mul_mod(y, y, n) + c;
        if (y >= n) y -= n;
        u64 diff = x > y ? x - y : y - x;
        q = mul_mod(q, diff, n);  // diff == 0 zeroes q and forces the redo below
      }
      lam += steps;
      d = std::gcd(q, n);
    }
    if (d == n) {
      // redo the last batch one step at a time
      y = saved;
      d = 1;
      while (d == 1) {
        y = mul_mod(y, y, n) + c;
        if (y >= n) y -= n;
        u64 diff = x > y ? x - y : y - x;
        d = std::gcd(diff == 0 ? n : diff, n);
      }
    }
    if (d != n) return d;
    // cycle collapsed for this c, try the next offset
  }
}

void factor_into(u64 n, std::map<u64, u64>& out) {
  while (n > 1) {
    if (is_prime(n)) {
      ++out[n];
      return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    n /= d;
  }
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  // This witness set is deterministic for all n < 3.3 * 10^24, well past 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!witness_passes(n, a, d, r)) return false;
  }
  return true;
}

Factorization factor(u64 n) {
  if (n == 0) throw std::domain_error("zero has no factorization");
  std::map<u64, u64> exps;
  // strip small primes cheaply before handing the cofactor to rho
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull, 79ull, 83ull,
                89ull, 97ull}) {
    while (n % p == 0) {
      ++exps[p];
      n /= p;
    }
  }
  factor_into(n, exps);
  std::vector<PrimePower> factors;
  factors.reserve(exps.size());
  for (const auto& [p, e] : exps) factors.push_back({p, e});
  return Factorization(std::move(factors));
}

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  u64 last = 1;
  for (const auto& [p, e] : factors_) {
    if (p <= last) throw std::invalid_argument("primes must be strictly increasing");
    if (e == 0) throw std::invalid_argument("exponents must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    last = p;
  }
}

BigInt Factorization::value() const {
  BigInt n = 1;
  for (const auto& [p, e] : factors_) {
    for (u64 i = 0; i < e; ++i) n *= p;
  }
  return n;
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) os << " * ";
    os << factors_[i].prime;
    if (factors_[i].exponent != 1) os << '^' << factors_[i].exponent;
  }
  return os.str();
}

SpfSieve::SpfSieve(u64 limit) : limit_(limit) {
  if (limit < 2) throw std::domain_error("sieve limit must be >= 2");
  if (limit >= (u64{1} << 32)) throw std::length_error("sieve limit must fit 32 bits");
  spf_.assign(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;  // composite, already marked
    for (u64 j = i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

std::uint32_t SpfSieve::smallest_factor(u64 n) const {
  if (n < 2 || n > limit_) throw std::domain_error("value outside sieve range");
  return spf_[n];
}

Factorization SpfSieve::factorize(u64 n) const {
  if (n < 1 || n > limit_) throw std::domain_error("value outside sieve range");
  std::vector<PrimePower> factors;
  while (n > 1) {
    u64 p = spf_[n];
    u64 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  return Factorization(std::move(factors));
}

}  // namespace cuboids
