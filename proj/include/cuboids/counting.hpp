#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "cuboids/factor.hpp"

namespace cuboids {

// A prime exponent n written as n = 6s + alpha with alpha in 0..5. The pair
// indexes the base class-count table below.
struct ExponentDecomposition {
  std::uint64_t s = 0;
  unsigned alpha = 0;

  friend bool operator==(const ExponentDecomposition&, const ExponentDecomposition&) = default;
};

ExponentDecomposition decompose_exponent(std::uint64_t n);

// Symmetry class of an unordered triple (A, B, C).
enum class SymmetryClass { AllEqual, TwoEqual, AllDistinct };

// Number of distinct cuboids obtained by matching the coordinates of a triple
// of class a with a triple of class b in every order without reuse:
// 6 when both are all-distinct, 3 for all-distinct against two-equal,
// 2 for two-equal against two-equal, 1 as soon as one side is all-equal.
int product_set_cardinality(SymmetryClass a, SymmetryClass b);

// Counts of canonical triples split by symmetry class: f all equal, g exactly
// two equal, h all distinct. O(N) is the total f + g + h.
template <typename Int>
struct BasicTripleClassCounts {
  Int f{};
  Int g{};
  Int h{};

  Int total() const { return f + g + h; }

  friend bool operator==(const BasicTripleClassCounts&, const BasicTripleClassCounts&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BasicTripleClassCounts& c) {
    return os << "(f=" << c.f << " g=" << c.g << " h=" << c.h << ")";
  }
};

using TripleClassCounts = BasicTripleClassCounts<BigInt>;

// Class counts of the triples (p^i, p^j, p^k), i <= j <= k, i + j + k = n,
// for any prime p, from the closed table in n = 6s + alpha:
//
//   alpha   f   g        h
//     0     1   3s       3s^2
//     1     0   3s + 1   3s^2 + s
//     2     0   3s + 2   3s^2 + 2s
//     3     1   3s + 1   3s^2 + 3s + 1
//     4     0   3s + 3   3s^2 + 4s + 1
//     5     0   3s + 3   3s^2 + 5s + 2
TripleClassCounts base_class_counts(std::uint64_t n);

// Combine the class counts of two coprime factor sets into the counts of their
// product. Coprimality is the caller's responsibility; the operation itself is
// commutative and has (1,0,0) as identity. Exact arithmetic: the library-wide
// instantiation uses BigInt, so results never wrap.
template <typename Int>
BasicTripleClassCounts<Int> merge_class_counts(const BasicTripleClassCounts<Int>& a,
                                               const BasicTripleClassCounts<Int>& b) {
  BasicTripleClassCounts<Int> out;
  out.f = a.f * b.f;
  out.g = a.f * b.g + a.g * (b.f + b.g);
  out.h = 6 * (a.h * b.h) + a.g * b.g + a.f * b.h + a.h * b.f +
          3 * (a.g * b.h + a.h * b.g);
  return out;
}

// One step of the class-count fold, retained for the CLI --explain trace.
struct FoldStep {
  PrimePower term;               // prime power consumed at this step
  ExponentDecomposition decomp;  // its exponent as 6s + alpha
  TripleClassCounts base;        // base table row for that exponent
  TripleClassCounts merged;      // accumulated counts after this step
};

// Left fold of base_class_counts over the factorization in canonical prime
// order, seeded with the identity (1,0,0). The result is order-independent;
// the fixed order only pins the trace layout.
TripleClassCounts class_counts(const Factorization& fac, std::vector<FoldStep>* trace = nullptr);

// O(N): number of triples A <= B <= C with A*B*C = N.
BigInt cuboid_count(const Factorization& fac);

// R(N): number of pairs a <= b with a*b = N. Equals (d(N)+1)/2 when every
// exponent is even (N a perfect square) and d(N)/2 otherwise.
BigInt rectangle_count(const Factorization& fac);

// d(N): product of (exponent + 1).
BigInt divisor_count(const Factorization& fac);

// Closed form for O(p^n), dispatching on n mod 6. n = 0 yields O(1) = 1.
BigInt cuboid_count_prime_power(std::uint64_t n);

// Closed form for O(p^n * q^m) with p != q prime, dispatching on
// (n mod 6, m mod 6). n = 0 or m = 0 falls back to the prime-power form.
BigInt cuboid_count_two_prime_powers(std::uint64_t n, std::uint64_t m);

// Closed form for squarefree N with k >= 1 distinct prime factors:
// (3^(k-1) + 1) / 2. Throws std::domain_error on k = 0.
BigInt cuboid_count_squarefree(std::uint64_t k);

}  // namespace cuboids
