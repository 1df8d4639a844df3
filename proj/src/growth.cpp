#include "seqlab/growth.hpp"

#include <mpfr.h>

#include <cmath>
#include <functional>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {

namespace {

constexpr long double kLn2 = 0.69314718055994530941723212145817657L;

long double log_of(const mpz_class& v) {
  const std::size_t bl = mpz_sizeinbase(v.get_mpz_t(), 2);
  if (bl <= 64)
    return logl(static_cast<long double>(mpz_get_ui(v.get_mpz_t())));
  mpz_class top = v >> static_cast<unsigned long>(bl - 64);
  // truncating below the top 64 bits costs < 2^-63 on the log scale
  return logl(static_cast<long double>(mpz_get_ui(top.get_mpz_t()))) +
         static_cast<long double>(bl - 64) * kLn2;
}

// Margin ln a_n - f(n) ln n at `prec` bits; *err receives a bound on the
// absolute arithmetic error of the result.
double mpfr_margin(const mpz_class& a_n, std::uint64_t n, mpfr_prec_t prec,
                   double* err) {
  mpfr_t la, ln_n, lln, ln2, c1, c2, f, tmp;
  mpfr_inits2(prec, la, ln_n, lln, ln2, c1, c2, f, tmp, static_cast<mpfr_ptr>(nullptr));

  mpfr_set_z(la, a_n.get_mpz_t(), MPFR_RNDN);
  mpfr_log(la, la, MPFR_RNDN);
  mpfr_set_ui(ln_n, n, MPFR_RNDN);
  mpfr_log(ln_n, ln_n, MPFR_RNDN);
  mpfr_log(lln, ln_n, MPFR_RNDN);
  mpfr_const_log2(ln2, MPFR_RNDN);
  mpfr_ui_div(c1, 1, ln2, MPFR_RNDN);
  mpfr_div_ui(c1, c1, 2, MPFR_RNDN);  // c1 = 1/(2 ln 2)
  mpfr_log(c2, ln2, MPFR_RNDN);
  mpfr_add_ui(c2, c2, 1, MPFR_RNDN);
  mpfr_div(c2, c2, ln2, MPFR_RNDN);
  mpfr_set_d(tmp, 0.5, MPFR_RNDN);
  mpfr_add(c2, c2, tmp, MPFR_RNDN);  // c2 = 1/2 + (1 + ln ln 2)/ln 2
  // f = c1 ln n - 2 c1 ln ln n + c2
  mpfr_mul(f, c1, ln_n, MPFR_RNDN);
  mpfr_mul(tmp, c1, lln, MPFR_RNDN);
  mpfr_mul_ui(tmp, tmp, 2, MPFR_RNDN);
  mpfr_sub(f, f, tmp, MPFR_RNDN);
  mpfr_add(f, f, c2, MPFR_RNDN);
  mpfr_mul(f, f, ln_n, MPFR_RNDN);  // threshold
  mpfr_sub(la, la, f, MPFR_RNDN);   // margin

  const double margin = mpfr_get_d(la, MPFR_RNDN);
  mpfr_clears(la, ln_n, lln, ln2, c1, c2, f, tmp, static_cast<mpfr_ptr>(nullptr));
  // ~15 correctly rounded ops on magnitudes < 2^9
  *err = std::ldexp(1.0, 14 - static_cast<int>(prec));
  return margin;
}

GrowthRecord check_one(const mpz_class& a_n, std::uint64_t n) {
  GrowthRecord rec;
  rec.n = n;
  const long double la = log_of(a_n);
  const long double ln_n = logl(static_cast<long double>(n));
  const long double threshold = growth_params::f(static_cast<long double>(n)) * ln_n;
  const long double margin = la - threshold;
  rec.log_a_n = static_cast<double>(la);
  rec.threshold = static_cast<double>(threshold);
  rec.margin = static_cast<double>(margin);
  const long double quick_err = 1e-12L;
  if (margin > quick_err) {
    rec.verdict = GrowthVerdict::pass;
    return rec;
  }
  if (margin < -quick_err) {
    rec.verdict = GrowthVerdict::fail;
    return rec;
  }
  for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
    double err = 0.0;
    const double m = mpfr_margin(a_n, n, prec, &err);
    if (m > err) {
      rec.margin = m;
      rec.verdict = GrowthVerdict::pass;
      return rec;
    }
    if (m < -err) {
      rec.margin = m;
      rec.verdict = GrowthVerdict::fail;
      return rec;
    }
  }
  rec.verdict = GrowthVerdict::indeterminate;
  return rec;
}

void require_range(const ExactPrefix& prefix, std::uint64_t from, std::uint64_t to) {
  if (from < 2 || from > to || to > prefix.limit())
    fail(ErrorCode::invalid_argument, "growth check needs 2 <= from <= to <= prefix limit");
}

}  // namespace

namespace growth_params {

long double c1() { return 1.0L / (2.0L * kLn2); }

long double c2() { return 0.5L + (1.0L + logl(kLn2)) / kLn2; }

long double f(long double n) {
  const long double ln_n = logl(n);
  return c1() * ln_n - 2.0L * c1() * logl(ln_n) + c2();
}

}  // namespace growth_params

std::vector<GrowthRecord> growth_lower_check(const ExactPrefix& prefix,
                                             std::uint64_t from, std::uint64_t to) {
  require_range(prefix, from, to);
  std::vector<GrowthRecord> records(to - from + 1);
#pragma omp parallel for schedule(static)
  for (long long n = static_cast<long long>(from); n <= static_cast<long long>(to); ++n)
    records[static_cast<std::size_t>(n - static_cast<long long>(from))] =
        check_one(prefix.value(static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(n));
  return records;
}

std::vector<GrowthRecord> growth_lower_check_serial(const ExactPrefix& prefix,
                                                    std::uint64_t from,
                                                    std::uint64_t to) {
  require_range(prefix, from, to);
  std::vector<GrowthRecord> records;
  records.reserve(to - from + 1);
  for (std::uint64_t n = from; n <= to; ++n)
    records.push_back(check_one(prefix.value(n), n));
  return records;
}

UpperBoundProbe upper_probe(const ExactPrefix& prefix, double epsilon,
                            std::uint64_t limit) {
  if (epsilon <= 0) fail(ErrorCode::invalid_argument, "probe needs epsilon > 0");
  if (limit < 2 || limit > prefix.limit())
    fail(ErrorCode::invalid_argument, "probe limit out of prefix range");
  UpperBoundProbe probe;
  probe.epsilon = epsilon;
  probe.limit = limit;
  long double best = -1e30L;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const long double ln_n = logl(static_cast<long double>(n));
    const long double v =
        log_of(prefix.value(n)) -
        (growth_params::f(static_cast<long double>(n)) + static_cast<long double>(epsilon)) * ln_n;
    if (v > best) {
      best = v;
      probe.argmax_n = n;
    }
  }
  probe.log_c_observed = static_cast<double>(best);
  probe.max_in_last_decade = probe.argmax_n * 10 > limit;
  return probe;
}

namespace {

constexpr double kSlack = 1e-9;

bool holds_lt(double lhs, double rhs) {
  // lhs < rhs with relative slack
  return lhs < rhs + kSlack * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

struct GridRange {
  double lo, hi;
};

std::vector<double> log_grid(GridRange r, int per_decade) {
  std::vector<double> xs;
  const double step = std::pow(10.0, 1.0 / per_decade);
  for (double x = r.lo; x <= r.hi; x *= step) xs.push_back(x);
  xs.push_back(r.hi);
  return xs;
}

LemmaVerdict grid_verdict(const std::string& id, std::uint64_t range,
                          const std::vector<double>& xs,
                          const std::function<bool(double)>& ok) {
  LemmaVerdict v;
  v.lemma_id = id;
  v.range_checked = range;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!ok(xs[i])) {
      v.pass = false;
      v.counterexample = {i, static_cast<std::uint64_t>(xs[i])};
      return v;
    }
  }
  return v;
}

LemmaVerdict int_verdict(const std::string& id, std::uint64_t lo, std::uint64_t hi,
                         const std::function<bool(std::uint64_t)>& ok) {
  LemmaVerdict v;
  v.lemma_id = id;
  v.range_checked = hi;
  std::uint64_t bad = detail::first_violation(lo, hi, ok);
  if (bad != detail::kNoViolation) {
    v.pass = false;
    v.counterexample = {bad};
  }
  return v;
}

}  // namespace

std::vector<LemmaVerdict> analytic_lemma_suite(int grid_per_decade) {
  if (grid_per_decade < 10)
    fail(ErrorCode::invalid_argument, "analytic suite needs >= 10 samples per decade");
  const double c1 = static_cast<double>(growth_params::c1());
  constexpr double kRealHi = 1e6;
  constexpr std::uint64_t kIntHi = 100000;
  std::vector<LemmaVerdict> verdicts;

  {  // f increases beyond x = 8
    const std::vector<double> xs = log_grid({8.0001, kRealHi}, grid_per_decade);
    LemmaVerdict v;
    v.lemma_id = "f-increasing";
    v.range_checked = static_cast<std::uint64_t>(kRealHi);
    for (std::size_t i = 1; i < xs.size(); ++i) {
      const double f0 = static_cast<double>(growth_params::f(xs[i - 1]));
      const double f1 = static_cast<double>(growth_params::f(xs[i]));
      if (xs[i] <= xs[i - 1]) continue;
      if (!holds_lt(f0, f1)) {
        v.pass = false;
        v.counterexample = {i};
        break;
      }
    }
    verdicts.push_back(std::move(v));
  }

  verdicts.push_back(grid_verdict(
      "log-over-linear", static_cast<std::uint64_t>(kRealHi),
      log_grid({200.0001, kRealHi}, grid_per_decade),
      [&](double x) { return holds_lt(2.0 * c1 * std::log(x) / x, 0.05); }));

  {  // ln x + a/(x+a) < ln(x+a) < ln x + a/x
    LemmaVerdict v;
    v.lemma_id = "log-shift-brackets";
    v.range_checked = static_cast<std::uint64_t>(kRealHi);
    const std::vector<double> xs = log_grid({1.0001, kRealHi}, grid_per_decade);
    const std::vector<double> as = log_grid({1e-3, kRealHi}, 3);
    for (std::size_t i = 0; v.pass && i < xs.size(); ++i) {
      for (std::size_t k = 0; k < as.size(); ++k) {
        const double x = xs[i], a = as[k];
        const double mid = std::log(x + a);
        if (!holds_lt(std::log(x) + a / (x + a), mid) ||
            !holds_lt(mid, std::log(x) + a / x)) {
          v.pass = false;
          v.counterexample = {i, k};
          break;
        }
      }
    }
    verdicts.push_back(std::move(v));
  }

  verdicts.push_back(grid_verdict(
      "log1p-lower", static_cast<std::uint64_t>(kRealHi),
      log_grid({1.0001, kRealHi}, grid_per_decade), [&](double x) {
        return holds_lt(1.0 / x - 1.0 / (2.0 * x * x), std::log1p(1.0 / x));
      }));

  verdicts.push_back(grid_verdict(
      "exp-lower", static_cast<std::uint64_t>(kRealHi),
      log_grid({0.5, kRealHi}, grid_per_decade), [&](double x) {
        return holds_lt(1.0 - 1.0 / (2.0 * x), std::exp(-1.0 / (2.0 * x)));
      }));

  verdicts.push_back(int_verdict("compound-to-e", 4, kIntHi, [&](std::uint64_t n) {
    const double half = std::log(static_cast<double>(n) / 2.0);
    const double x = half / std::log(2.0);
    const double lhs = std::exp(x * std::log1p(1.0 / x));
    return holds_lt(std::exp(1.0) - 1.0 / std::log(static_cast<double>(n)), lhs);
  }));

  verdicts.push_back(int_verdict("e-upper", 1, kIntHi, [&](std::uint64_t n) {
    const double lhs = std::exp(1.0);
    const double rhs = (static_cast<double>(n) + 1.0) *
                       std::log1p(1.0 / static_cast<double>(n));
    return holds_lt(lhs, std::exp(rhs));
  }));

  verdicts.push_back(int_verdict("loglog-halving", 2, kIntHi, [&](std::uint64_t n) {
    const double half = std::log((static_cast<double>(n) + 1.0) / 2.0);
    const double lhs = 2.0 * c1 * std::log(std::log(static_cast<double>(n))) - 1.0 / half;
    return holds_lt(lhs, 2.0 * c1 * std::log(half));
  }));

  verdicts.push_back(int_verdict("loglog-step", 2, kIntHi, [&](std::uint64_t n) {
    const double dn = static_cast<double>(n);
    const double lhs = std::log(std::log(dn + 1.0)) - std::log(std::log(dn));
    return holds_lt(lhs, 1.0 / (dn * std::log(dn)));
  }));

  verdicts.push_back(int_verdict("ratio-cap", 4, kIntHi, [&](std::uint64_t n) {
    const double dn = static_cast<double>(n);
    const double lhs = 2.0 * c1 * (dn + 2.0) * std::log(dn + 1.0) / (dn * std::log(dn));
    return holds_lt(lhs, 3.0);
  }));

  return verdicts;
}

const char* verdict_name(GrowthVerdict v) {
  switch (v) {
    case GrowthVerdict::pass:
      return "pass";
    case GrowthVerdict::fail:
      return "fail";
    default:
      return "indeterminate";
  }
}

std::string growth_csv(const std::vector<GrowthRecord>& records) {
  std::ostringstream out;
  out << "n,log_a_n,threshold,margin,verdict\n";
  out.precision(15);
  for (const GrowthRecord& r : records)
    out << r.n << ',' << r.log_a_n << ',' << r.threshold << ',' << r.margin << ','
        << verdict_name(r.verdict) << '\n';
  return out.str();
}

}  // namespace seqlab
