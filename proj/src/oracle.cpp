#include "cuboids/oracle.hpp"

#include <stdexcept>

namespace cuboids::oracle {

std::vector<Triple> enumerate_triples(std::uint64_t n) {
  if (n == 0) throw std::domain_error("no triples for n = 0");
  std::vector<Triple> out;
  // division-form bounds avoid overflow: a <= n/a/a iff a^3 <= n
  for (std::uint64_t a = 1; a <= n / a / a; ++a) {
    if (n % a != 0) continue;
    const std::uint64_t rest = n / a;
    for (std::uint64_t b = a; b <= rest / b; ++b) {
      if (rest % b == 0) out.push_back({a, b, rest / b});
    }
  }
  return out;
}

TripleClassCounts classify_triples(std::uint64_t n) {
  TripleClassCounts counts{0, 0, 0};
  for (const Triple& t : enumerate_triples(n)) {
    if (t.a == t.b && t.b == t.c) {
      ++counts.f;
    } else if (t.a == t.b || t.b == t.c) {
      ++counts.g;  // t.a == t.c would force all three equal, given a <= b <= c
    } else {
      ++counts.h;
    }
  }
  return counts;
}

std::vector<Pair> enumerate_rectangles(std::uint64_t n) {
  if (n == 0) throw std::domain_error("no rectangles for n = 0");
  std::vector<Pair> out;
  for (std::uint64_t a = 1; a <= n / a; ++a) {
    if (n % a == 0) out.push_back({a, n / a});
  }
  return out;
}

}  // namespace cuboids::oracle
