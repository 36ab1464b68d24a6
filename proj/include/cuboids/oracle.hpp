#pragma once

#include <cstdint>
#include <vector>

#include "cuboids/counting.hpp"

namespace cuboids::oracle {

// Brute-force ground truth for the counting formulas. Deliberately naive:
// divisor-bounded loops over candidates, sharing no code with the counting
// module, so that agreement between the two is meaningful evidence.

struct Triple {
  std::uint64_t a = 1, b = 1, c = 1;  // a <= b <= c, a*b*c = N

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct Pair {
  std::uint64_t a = 1, b = 1;  // a <= b, a*b = N

  friend bool operator==(const Pair&, const Pair&) = default;
};

// All triples a <= b <= c with a*b*c = n, lexicographically sorted. The outer
// loop runs a up to n^(1/3) and the inner loop b up to sqrt(n/a), so cost
// grows like n^(2/3); intended for n up to ~10^6, usable to 10^9 and beyond.
// Throws std::domain_error on n = 0.
std::vector<Triple> enumerate_triples(std::uint64_t n);

// Class counts (f, g, h) of enumerate_triples(n).
TripleClassCounts classify_triples(std::uint64_t n);

// All pairs a <= b with a*b = n, sorted. Throws std::domain_error on n = 0.
std::vector<Pair> enumerate_rectangles(std::uint64_t n);

}  // namespace cuboids::oracle
