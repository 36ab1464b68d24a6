#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cuboids/factor.hpp"

namespace cuboids::cli {

// Parse a factored input expression "p1^e1*p2^e2*..." into a canonical
// Factorization. Bare primes mean exponent 1, whitespace around '*' and '^'
// is ignored, terms may come in any order. Composite bases, duplicate primes
// and zero exponents are rejected with std::invalid_argument.
Factorization parse_factored_expr(const std::string& text);

// Run the command line given argv-style arguments (without the program name).
// Returns the process exit status: 0 iff the command completed with every
// internal cross-check passing.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cuboids::cli
