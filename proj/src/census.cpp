#include "seqlab/census.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {

Rational predicted_density(std::uint32_t x, Modulus m) {
  const std::uint32_t mod = m.value();
  if (mod % 32 == 0)
    fail(ErrorCode::unsupported_modulus,
         "no density prediction for m divisible by 32 (m=" + std::to_string(mod) + ")");
  x %= mod;
  if (mod % 2 == 1) return Rational::of(1, mod);
  if (mod % 4 == 2) {
    if (x % 2 == 0) return Rational::of(2, 3ll * mod);
    return Rational::of(4, 3ll * mod);
  }
  // 4 | m, 32 does not divide m
  if (x % 4 == 0) return Rational::of(0, 1);
  return Rational::of(4, 3ll * mod);
}

CensusReport census_from_table(const ResidueTable& table, std::uint64_t limit) {
  if (limit < 1 || limit > table.limit())
    fail(ErrorCode::invalid_argument, "census limit out of table range");
  const std::uint32_t m = table.modulus().value();
  std::vector<std::uint64_t> counts(m, 0);
  if (table.narrow()) {
    const std::uint8_t* r = table.narrow_data().data();
    for (std::uint64_t k = 1; k <= limit; ++k) ++counts[r[k]];
  } else {
    const std::uint16_t* r = table.wide_data().data();
    for (std::uint64_t k = 1; k <= limit; ++k) ++counts[r[k]];
  }

  CensusReport report;
  report.m = m;
  report.limit = limit;
  report.classes.resize(m);
  const bool predictable = (m % 32 != 0);
  for (std::uint32_t x = 0; x < m; ++x) {
    ClassStat& s = report.classes[x];
    s.x = x;
    s.count = counts[x];
    s.empirical = static_cast<double>(counts[x]) / static_cast<double>(limit);
    if (predictable) {
      s.predicted = predicted_density(x, table.modulus());
      s.deviation = s.empirical - s.predicted->to_double();
      s.deviation_rel = s.predicted->num == 0 ? 0.0 : s.deviation / s.predicted->to_double();
      report.worst_abs_deviation = std::max(report.worst_abs_deviation, std::abs(s.deviation));
    }
  }
  return report;
}

CensusReport run_census(Modulus m, std::uint64_t limit) {
  return census_from_table(ResidueTable::stream(m, limit), limit);
}

namespace {

std::vector<std::uint32_t> scan_moduli(std::uint32_t max_m,
                                       std::vector<std::uint32_t>& skipped) {
  if (max_m < 2) fail(ErrorCode::invalid_argument, "scan needs max_m >= 2");
  std::vector<std::uint32_t> moduli;
  for (std::uint32_t m = 2; m <= max_m; ++m) {
    if (m % 32 == 0)
      skipped.push_back(m);
    else
      moduli.push_back(m);
  }
  return moduli;
}

void sort_reports(std::vector<CensusReport>& reports) {
  std::sort(reports.begin(), reports.end(), [](const CensusReport& a, const CensusReport& b) {
    if (a.worst_abs_deviation != b.worst_abs_deviation)
      return a.worst_abs_deviation > b.worst_abs_deviation;
    return a.m < b.m;
  });
}

}  // namespace

ScanResult deviation_scan(std::uint32_t max_m, std::uint64_t limit) {
  ScanResult result;
  std::vector<std::uint32_t> moduli = scan_moduli(max_m, result.skipped);
  result.reports.resize(moduli.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    try {
      result.reports[i] = run_census(Modulus::of(moduli[i]), limit);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  sort_reports(result.reports);
  return result;
}

ScanResult deviation_scan_serial(std::uint32_t max_m, std::uint64_t limit) {
  ScanResult result;
  for (std::uint32_t m : scan_moduli(max_m, result.skipped))
    result.reports.push_back(run_census(Modulus::of(m), limit));
  sort_reports(result.reports);
  return result;
}

namespace {

template <typename T>
BoundCheckResult bound_check_loop(const T* r, std::uint64_t limit) {
  static constexpr std::uint32_t kClasses[6] = {1, 2, 3, 5, 6, 7};
  std::uint64_t counts[8] = {0};
  for (std::uint64_t n = 1; n <= limit; ++n) {
    ++counts[r[n] & 7u];
    const double rhs = static_cast<double>(n) / 6.0 -
                       2.0 * std::log(static_cast<double>(n)) - 11.0;
    if (rhs < 0) continue;  // trivially satisfied, skip the per-class compares
    for (std::uint32_t x : kClasses) {
      if (!(static_cast<double>(counts[x]) > rhs)) return {false, n, x};
    }
  }
  return {};
}

}  // namespace

BoundCheckResult mod8_bound_check_from_table(const ResidueTable& table,
                                             std::uint64_t limit) {
  if (table.modulus().value() % 8 != 0)
    fail(ErrorCode::invalid_argument, "mod-8 bound check needs 8 | m");
  if (limit < 1 || limit > table.limit())
    fail(ErrorCode::invalid_argument, "bound check limit out of table range");
  if (table.narrow()) return bound_check_loop(table.narrow_data().data(), limit);
  return bound_check_loop(table.wide_data().data(), limit);
}

BoundCheckResult mod8_bound_check(std::uint64_t limit) {
  return mod8_bound_check_from_table(ResidueTable::stream(Modulus::of(8), limit), limit);
}

std::string census_csv(const std::vector<CensusReport>& reports) {
  std::ostringstream out;
  out << "m,x,count,N,empirical,predicted,deviation\n";
  out.precision(12);
  for (const CensusReport& report : reports) {
    for (const ClassStat& s : report.classes) {
      out << report.m << ',' << s.x << ',' << s.count << ',' << report.limit << ','
          << s.empirical << ',';
      if (s.predicted) out << s.predicted->str();
      out << ',';
      if (s.predicted) out << s.deviation;
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace seqlab
