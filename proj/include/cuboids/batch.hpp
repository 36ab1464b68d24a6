#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "cuboids/factor.hpp"

namespace cuboids {

// One row of a counts table. For any 64-bit n the four values fit in 64 bits
// with a wide margin (d(n) <= 103680 below 2^64 and the cuboid count is
// bounded by d(n)^2); the narrowing from BigInt is still checked.
struct CountRecord {
  std::uint64_t n = 1;
  std::uint64_t divisors = 1;    // d(n)
  std::uint64_t rectangles = 1;  // R(n)
  std::uint64_t cuboids = 1;     // O(n)

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

enum class ExportFormat { BFile, Csv, Json };
enum class ExportColumn { Cuboid, Rect, Divisors };

// "bfile" | "csv" | "json"; anything else throws std::invalid_argument.
ExportFormat parse_export_format(std::string_view name);
// "cuboid" | "rect" | "d"; anything else throws std::invalid_argument.
ExportColumn parse_export_column(std::string_view name);

// Emit one record per n in [lo, hi] in ascending order. Factorizations come
// from the sieve while n <= sieve.limit() and from direct factoring above it.
// Throws std::domain_error unless 1 <= lo <= hi.
void for_each_count(std::uint64_t lo, std::uint64_t hi, const SpfSieve& sieve,
                    const std::function<void(const CountRecord&)>& emit);

std::vector<CountRecord> batch_counts(std::uint64_t lo, std::uint64_t hi, const SpfSieve& sieve);

// Streaming export. Formats are byte-stable:
//   bfile  "n value\n" rows of the selected column, no header
//   csv    "n,d,rect,cuboid" header, then one row per record
//   json   array of {"n":..,"d":..,"rect":..,"cuboid":..} objects
// finish() closes the json array and must be called once after the last
// record (it is a no-op for the other formats).
class RecordWriter {
 public:
  RecordWriter(std::ostream& os, ExportFormat format, ExportColumn column);

  void write(const CountRecord& record);
  void finish();

 private:
  std::ostream& os_;
  ExportFormat format_;
  ExportColumn column_;
  bool any_ = false;
  bool finished_ = false;
};

void write_records(std::ostream& os, std::span<const CountRecord> records,
                   ExportFormat format, ExportColumn column);

}  // namespace cuboids
