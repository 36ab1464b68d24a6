#include "cuboids/batch.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "cuboids/counting.hpp"

namespace cuboids {

namespace {

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("count does not fit in 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

std::uint64_t column_value(const CountRecord& r, ExportColumn column) {
  switch (column) {
    case ExportColumn::Cuboid: return r.cuboids;
    case ExportColumn::Rect: return r.rectangles;
    default: return r.divisors;
  }
}

}  // namespace

ExportFormat parse_export_format(std::string_view name) {
  if (name == "bfile") return ExportFormat::BFile;
  if (name == "csv") return ExportFormat::Csv;
  if (name == "json") return ExportFormat::Json;
  throw std::invalid_argument("unknown export format: " + std::string(name));
}

ExportColumn parse_export_column(std::string_view name) {
  if (name == "cuboid") return ExportColumn::Cuboid;
  if (name == "rect") return ExportColumn::Rect;
  if (name == "d") return ExportColumn::Divisors;
  throw std::invalid_argument("unknown export column: " + std::string(name));
}

void for_each_count(std::uint64_t lo, std::uint64_t hi, const SpfSieve& sieve,
                    const std::function<void(const CountRecord&)>& emit) {
  if (lo < 1) throw std::domain_error("range must start at 1 or above");
  if (lo > hi) throw std::domain_error("range start exceeds range end");
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const Factorization fac = n <= sieve.limit() ? sieve.factorize(n) : factor(n);
    const TripleClassCounts counts = class_counts(fac);
    CountRecord record;
    record.n = n;
    record.divisors = to_u64(divisor_count(fac));
    record.rectangles = to_u64(rectangle_count(fac));
    record.cuboids = to_u64(counts.total());
    emit(record);
    if (n == std::numeric_limits<std::uint64_t>::max()) break;
  }
}

std::vector<CountRecord> batch_counts(std::uint64_t lo, std::uint64_t hi, const SpfSieve& sieve) {
  std::vector<CountRecord> records;
  if (hi >= lo) records.reserve(hi - lo + 1);
  for_each_count(lo, hi, sieve, [&](const CountRecord& r) { records.push_back(r); });
  return records;
}

RecordWriter::RecordWriter(std::ostream& os, ExportFormat format, ExportColumn column)
    : os_(os), format_(format), column_(column) {
  if (format_ == ExportFormat::Csv) os_ << "n,d,rect,cuboid\n";
  if (format_ == ExportFormat::Json) os_ << '[';
}

void RecordWriter::write(const CountRecord& r) {
  switch (format_) {
    case ExportFormat::BFile:
      os_ << r.n << ' ' << column_value(r, column_) << '\n';
      break;
    case ExportFormat::Csv:
      os_ << r.n << ',' << r.divisors << ',' << r.rectangles << ',' << r.cuboids << '\n';
      break;
    case ExportFormat::Json:
      os_ << (any_ ? ",\n  " : "\n  ") << "{\"n\": " << r.n << ", \"d\": " << r.divisors
          << ", \"rect\": " << r.rectangles << ", \"cuboid\": " << r.cuboids << '}';
      break;
  }
  any_ = true;
}

void RecordWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == ExportFormat::Json) os_ << (any_ ? "\n]\n" : "]\n");
}

void write_records(std::ostream& os, std::span<const CountRecord> records,
                   ExportFormat format, ExportColumn column) {
  RecordWriter writer(os, format, column);
  for (const CountRecord& r : records) writer.write(r);
  writer.finish();
}

}  // namespace cuboids
