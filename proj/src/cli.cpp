#include "cuboids/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <new>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"

#include "cuboids/batch.hpp"
#include "cuboids/counting.hpp"
#include "cuboids/oracle.hpp"

namespace cuboids::cli {

namespace {

// Default cap on the smallest-prime-factor table: 2^24 entries = 64 MiB.
// Overridable through CUBOIDAL_SIEVE_LIMIT; values above the cap fall back to
// direct factoring per n.
constexpr std::uint64_t kDefaultSieveBudget = std::uint64_t{1} << 24;

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t sieve_budget() {
  if (const char* env = std::getenv("CUBOIDAL_SIEVE_LIMIT")) {
    return std::max<std::uint64_t>(parse_u64(env, "CUBOIDAL_SIEVE_LIMIT"), 2);
  }
  return kDefaultSieveBudget;
}

// Target of count/rect: either a decimal N to factor or a pre-factored
// expression (which also admits N beyond 64 bits).
Factorization resolve_target(const std::string& n_text, const std::string& factored) {
  if (!n_text.empty() && !factored.empty()) {
    throw std::invalid_argument("give either N or --factored, not both");
  }
  if (!factored.empty()) return parse_factored_expr(factored);
  if (n_text.empty()) throw std::invalid_argument("missing target: give N or --factored EXPR");
  const std::uint64_t n = parse_u64(n_text, "N");
  if (n == 0) throw std::domain_error("N must be >= 1");
  return factor(n);
}

void print_fold_trace(std::ostream& out, const Factorization& fac,
                      const std::vector<FoldStep>& steps, const TripleClassCounts& final_counts) {
  out << "N = " << fac.to_string() << '\n';
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const FoldStep& step = steps[i];
    out << step.term.prime << '^' << step.term.exponent << ": s=" << step.decomp.s
        << " alpha=" << step.decomp.alpha << " -> f=" << step.base.f << " g=" << step.base.g
        << " h=" << step.base.h << '\n';
    if (i > 0) {
      out << "  merge -> f=" << step.merged.f << " g=" << step.merged.g
          << " h=" << step.merged.h << '\n';
    }
  }
  out << "O(N) = " << final_counts.f << " + " << final_counts.g << " + " << final_counts.h
      << " = " << final_counts.total() << '\n';
}

int run_verify(std::uint64_t max, std::ostream& out) {
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 1; n <= max; ++n) {
    const Factorization fac = factor(n);
    bool ok = cuboid_count(fac) == oracle::enumerate_triples(n).size() &&
              rectangle_count(fac) == oracle::enumerate_rectangles(n).size();
    if (!ok) {
      ++mismatches;
      if (mismatches <= 10) out << "MISMATCH n=" << n << '\n';
    }
  }
  if (mismatches == 0) {
    out << "OK " << max << '/' << max << '\n';
    return 0;
  }
  out << "FAIL " << (max - mismatches) << '/' << max << '\n';
  return 1;
}

void run_table(std::uint64_t n_max, std::uint64_t m_max, std::ostream& out) {
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t m = 1; m <= m_max; ++m) {
      const BigInt closed = cuboid_count_two_prime_powers(n, m);
      const BigInt recursive = cuboid_count(Factorization({{2, n}, {3, m}}));
      if (closed != recursive) {
        throw std::logic_error("closed form disagrees with recursion at n=" + std::to_string(n) +
                               " m=" + std::to_string(m));
      }
      out << closed << (m == m_max ? '\n' : ' ');
    }
  }
}

void run_batch(std::uint64_t lo, std::uint64_t hi, ExportFormat format, ExportColumn column,
               const std::string& output, std::ostream& out) {
  if (lo < 1 || lo > hi) throw std::domain_error("need 1 <= LO <= HI");
  const std::uint64_t limit = std::max<std::uint64_t>(2, std::min(hi, sieve_budget()));
  const SpfSieve sieve(limit);

  std::ofstream file;
  std::ostream* os = &out;
  if (!output.empty() && output != "-") {
    file.open(output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + output);
    os = &file;
  }
  RecordWriter writer(*os, format, column);
  for_each_count(lo, hi, sieve, [&](const CountRecord& r) { writer.write(r); });
  writer.finish();
  os->flush();
  if (!*os) throw std::runtime_error("write failed: " + output);
}

}  // namespace

Factorization parse_factored_expr(const std::string& text) {
  const std::string_view whole = trimmed(text);
  if (whole.empty()) throw std::invalid_argument("empty factored expression");
  if (whole == "1") return Factorization{};  // empty product

  std::vector<PrimePower> terms;
  std::string_view rest = whole;
  while (true) {
    const std::size_t star = rest.find('*');
    const std::string_view term = trimmed(rest.substr(0, star));
    if (term.empty()) throw std::invalid_argument("empty term in factored expression");

    PrimePower pp;
    const std::size_t caret = term.find('^');
    if (caret == std::string_view::npos) {
      pp.prime = parse_u64(term, "prime");
      pp.exponent = 1;
    } else {
      pp.prime = parse_u64(trimmed(term.substr(0, caret)), "prime");
      pp.exponent = parse_u64(trimmed(term.substr(caret + 1)), "exponent");
    }
    terms.push_back(pp);
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }

  std::sort(terms.begin(), terms.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].prime == terms[i - 1].prime) {
      throw std::invalid_argument("duplicate prime " + std::to_string(terms[i].prime));
    }
  }
  return Factorization(std::move(terms));  // validates primality and exponents
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cuboids");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count integer-edge cuboids of volume N and rectangles of area N"};
  app.require_subcommand(1);
  int rc = 0;

  // count
  std::string count_n, count_factored;
  bool count_explain = false;
  auto* count = app.add_subcommand("count", "Print O(N), the number of cuboids of volume N");
  count->add_option("N", count_n, "volume, decimal integer >= 1");
  count->add_option("--factored", count_factored, "volume as \"p1^e1*p2^e2*...\"");
  count->add_flag("--explain", count_explain, "print the per-prime fold trace");
  count->callback([&] {
    const Factorization fac = resolve_target(count_n, count_factored);
    std::vector<FoldStep> trace;
    const TripleClassCounts counts = class_counts(fac, count_explain ? &trace : nullptr);
    if (count_explain) print_fold_trace(out, fac, trace, counts);
    out << counts.total() << '\n';
  });

  // rect
  std::string rect_n, rect_factored;
  auto* rect = app.add_subcommand("rect", "Print R(N), the number of rectangles of area N");
  rect->add_option("N", rect_n, "area, decimal integer >= 1");
  rect->add_option("--factored", rect_factored, "area as \"p1^e1*p2^e2*...\"");
  rect->callback([&] { out << rectangle_count(resolve_target(rect_n, rect_factored)) << '\n'; });

  // verify
  std::string verify_max = "1000";
  auto* verify = app.add_subcommand("verify", "Check the formulas against brute-force enumeration");
  verify->add_option("--max", verify_max, "check every N from 1 to this bound");
  verify->callback([&] {
    const std::uint64_t max = parse_u64(verify_max, "--max");
    if (max < 1) throw std::domain_error("--max must be >= 1");
    rc = run_verify(max, out);
  });

  // table
  std::string table_n, table_m;
  auto* table = app.add_subcommand("table", "Print O(p^n*q^m) for n <= N_MAX, m <= M_MAX");
  table->add_option("N_MAX", table_n, "rows")->required();
  table->add_option("M_MAX", table_m, "columns")->required();
  table->callback([&] {
    const std::uint64_t n_max = parse_u64(table_n, "N_MAX");
    const std::uint64_t m_max = parse_u64(table_m, "M_MAX");
    if (n_max < 1 || m_max < 1) throw std::domain_error("table bounds must be >= 1");
    run_table(n_max, m_max, out);
  });

  // batch
  std::string batch_lo, batch_hi, batch_format = "bfile", batch_column = "cuboid", batch_output;
  auto* batch = app.add_subcommand("batch", "Compute counts for a range and export them");
  batch->add_option("LO", batch_lo, "range start (>= 1)")->required();
  batch->add_option("HI", batch_hi, "range end")->required();
  batch->add_option("--format", batch_format, "bfile | csv | json");
  batch->add_option("--column", batch_column, "bfile value column: cuboid | rect | d");
  batch->add_option("--output,-o", batch_output, "output file (default stdout)");
  batch->callback([&] {
    run_batch(parse_u64(batch_lo, "LO"), parse_u64(batch_hi, "HI"),
              parse_export_format(batch_format), parse_export_column(batch_column),
              batch_output, out);
  });

  // list
  std::string list_n;
  bool list_rect = false;
  auto* list = app.add_subcommand("list", "Enumerate the triples (or rectangles) of volume N");
  list->add_option("N", list_n, "volume, decimal integer >= 1")->required();
  list->add_flag("--rect", list_rect, "list rectangle pairs instead of triples");
  list->callback([&] {
    const std::uint64_t n = parse_u64(list_n, "N");
    if (list_rect) {
      for (const oracle::Pair& p : oracle::enumerate_rectangles(n)) {
        out << p.a << ' ' << p.b << '\n';
      }
    } else {
      for (const oracle::Triple& t : oracle::enumerate_triples(n)) {
        out << t.a << ' ' << t.b << ' ' << t.c << '\n';
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const std::bad_alloc&) {
    err << "error: out of memory (reduce the range or CUBOIDAL_SIEVE_LIMIT)\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}

}  // namespace cuboids::cli
