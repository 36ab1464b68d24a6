#include "cuboids/counting.hpp"

#include <stdexcept>

namespace cuboids {

namespace {

// Exact division with a consistency check; every closed form below is an
// integer-valued rational, so a nonzero remainder signals an implementation bug.
BigInt exact_div(BigInt numerator, unsigned denominator) {
  if (numerator % denominator != 0) {
    throw std::logic_error("closed-form numerator not divisible by " + std::to_string(denominator));
  }
  return numerator / denominator;
}

}  // namespace

ExponentDecomposition decompose_exponent(std::uint64_t n) {
  return {n / 6, static_cast<unsigned>(n % 6)};
}

int product_set_cardinality(SymmetryClass a, SymmetryClass b) {
  if (a == SymmetryClass::AllEqual || b == SymmetryClass::AllEqual) return 1;
  if (a == SymmetryClass::TwoEqual && b == SymmetryClass::TwoEqual) return 2;
  if (a == SymmetryClass::AllDistinct && b == SymmetryClass::AllDistinct) return 6;
  return 3;  // one two-equal, one all-distinct
}

TripleClassCounts base_class_counts(std::uint64_t n) {
  const auto [s64, alpha] = decompose_exponent(n);
  const BigInt s = s64;
  const BigInt s2 = s * s;
  switch (alpha) {
    case 0: return {1, 3 * s, 3 * s2};
    case 1: return {0, 3 * s + 1, 3 * s2 + s};
    case 2: return {0, 3 * s + 2, 3 * s2 + 2 * s};
    case 3: return {1, 3 * s + 1, 3 * s2 + 3 * s + 1};
    case 4: return {0, 3 * s + 3, 3 * s2 + 4 * s + 1};
    default: return {0, 3 * s + 3, 3 * s2 + 5 * s + 2};  // alpha == 5
  }
}

TripleClassCounts class_counts(const Factorization& fac, std::vector<FoldStep>* trace) {
  TripleClassCounts acc{1, 0, 0};  // identity: the triple (1,1,1)
  for (const PrimePower& term : fac.factors()) {
    const TripleClassCounts base = base_class_counts(term.exponent);
    acc = merge_class_counts(acc, base);
    if (trace != nullptr) {
      trace->push_back({term, decompose_exponent(term.exponent), base, acc});
    }
  }
  return acc;
}

BigInt cuboid_count(const Factorization& fac) { return class_counts(fac).total(); }

BigInt divisor_count(const Factorization& fac) {
  BigInt d = 1;
  for (const PrimePower& term : fac.factors()) d *= BigInt(term.exponent) + 1;
  return d;
}

BigInt rectangle_count(const Factorization& fac) {
  const BigInt d = divisor_count(fac);
  bool square = true;
  for (const PrimePower& term : fac.factors()) square = square && term.exponent % 2 == 0;
  // d is odd exactly when N is a perfect square, so both branches divide evenly.
  return square ? (d + 1) / 2 : d / 2;
}

BigInt cuboid_count_prime_power(std::uint64_t n) {
  const BigInt v = n;
  unsigned constant = 0;
  switch (n % 6) {
    case 0: constant = 12; break;
    case 1:
    case 5: constant = 5; break;
    case 2:
    case 4: constant = 8; break;
    case 3: constant = 9; break;
  }
  return exact_div(v * v + 6 * v + constant, 12);
}

BigInt cuboid_count_two_prime_powers(std::uint64_t n, std::uint64_t m) {
  if (m == 0) return cuboid_count_prime_power(n);
  if (n == 0) return cuboid_count_prime_power(m);

  const BigInt a = n;
  const BigInt b = m;
  // numerator of w(n,m) over 24
  const BigInt w = 2 * a * a + 2 * b * b + 12 * a * b + 3 * a * a * b + 3 * a * b * b + a * a * b * b;

  const unsigned rn = n % 6;
  const unsigned rm = m % 6;
  BigInt numerator;
  if (rn == 0) {
    if (rm == 0) {
      numerator = 24 + 12 * a + 12 * b + w;
    } else if (rm == 1 || rm == 5) {
      numerator = (a + 2) * (b + 1) * (a * b + 2 * a + b + 5);
    } else if (rm == 2 || rm == 4) {
      numerator = (a + 2) * (b + 2) * (a * b + a + b + 4);
    } else {  // rm == 3
      numerator = 18 + 9 * a + 12 * b + w;
    }
  } else if (rn == 1 || rn == 5) {
    if (rm % 2 == 0) {
      numerator = (a + 1) * (b + 2) * (a * b + a + 2 * b + 5);
    } else {
      numerator = (a + 1) * (b + 1) * (a * b + 2 * a + 2 * b + 7);
    }
  } else if (rn == 2 || rn == 4) {
    if (rm % 2 == 0) {
      numerator = (a + 2) * (b + 2) * (a * b + a + b + 4);
    } else {
      numerator = (a + 2) * (b + 1) * (a * b + 2 * a + b + 5);
    }
  } else {  // rn == 3
    if (rm == 0) {
      numerator = 18 + 12 * a + 9 * b + w;
    } else if (rm == 1 || rm == 5) {
      numerator = (a + 1) * (b + 1) * (a * b + 2 * a + 2 * b + 7);
    } else if (rm == 2 || rm == 4) {
      numerator = (a + 1) * (b + 2) * (a * b + a + 2 * b + 5);
    } else {  // rm == 3
      numerator = 15 + 9 * a + 9 * b + w;
    }
  }
  return exact_div(numerator, 24);
}

BigInt cuboid_count_squarefree(std::uint64_t k) {
  if (k == 0) throw std::domain_error("squarefree count needs at least one prime");
  BigInt power = 1;
  for (std::uint64_t i = 1; i < k; ++i) power *= 3;
  return (power + 1) / 2;  // 3^(k-1) is odd, so this is exact
}

}  // namespace cuboids
