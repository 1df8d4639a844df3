#include "seqlab/certify.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>

#include <json.hpp>

#include "seqlab/error.hpp"

namespace seqlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t row_count_for(int j) {
  return (std::uint64_t{2} << j) - 2 - static_cast<std::uint64_t>(j);
}

std::uint64_t denominator_for(int j) { return (std::uint64_t{2} << j) - 2; }

// First-coordinate schedule in ascending value order; the family of every
// later coordinate is pinned by the first one.
std::vector<std::pair<std::uint32_t, int>> first_schedule(const AdmissibleTupleSpec& spec) {
  std::vector<std::pair<std::uint32_t, int>> firsts;
  for (int f = 0; f < static_cast<int>(spec.families.size()); ++f)
    for (std::uint32_t v : spec.families[f]) firsts.emplace_back(v, f);
  std::sort(firsts.begin(), firsts.end());
  return firsts;
}

// Per-thread scratch: the residues of every window row for the current
// partial tuple, one vector per level. Level i row t obeys
// r(i,t) = r(i,t-1) + r(i-1, floor(t/2)) with r(i,1) = b_i, which is how the
// search avoids dot products entirely.
class HitEvaluator {
 public:
  HitEvaluator(int j, std::uint32_t m, std::uint32_t x)
      : j_(j), m_(m), x_(x), rows_(static_cast<std::size_t>(j) + 1) {
    for (int i = 1; i <= j; ++i) rows_[static_cast<std::size_t>(i)].resize(std::size_t{1} << i);
  }

  // Evaluate level i for base residue b, counting rows congruent to x. Stops
  // early once the count reaches `allowance`; the level rows are complete
  // only when the returned count is below it.
  std::uint32_t eval_level(int i, std::uint32_t b, std::uint32_t allowance) {
    auto& cur = rows_[static_cast<std::size_t>(i)];
    cur[1] = b;
    std::uint32_t hits = (b == x_) ? 1u : 0u;
    if (hits >= allowance) return hits;
    const auto& prev = rows_[static_cast<std::size_t>(i) - 1];
    const std::uint32_t n_rows = (1u << i) - 1;
    for (std::uint32_t t = 2; t <= n_rows; ++t) {
      std::uint32_t v = cur[t - 1] + prev[t >> 1];
      if (v >= m_) v -= m_;
      cur[t] = v;
      if (v == x_ && ++hits >= allowance) return hits;
    }
    return hits;
  }

 private:
  int j_;
  std::uint32_t m_;
  std::uint32_t x_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

struct SearchShared {
  std::atomic<std::uint32_t> min{~std::uint32_t{0}};
  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> abort{false};

  std::uint64_t max_tuples = 0;
  double max_seconds = 0.0;
  Clock::time_point start;

  std::mutex merge_mutex;
  std::uint32_t best_count = ~std::uint32_t{0};
  std::vector<std::uint32_t> best_tuple;

  void fetch_min(std::uint32_t v) {
    std::uint32_t cur = min.load(std::memory_order_relaxed);
    while (v < cur &&
           !min.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
  }

  void offer_best(std::uint32_t count, const std::vector<std::uint32_t>& tuple) {
    fetch_min(count);
    std::lock_guard<std::mutex> lock(merge_mutex);
    if (count < best_count) {
      best_count = count;
      best_tuple = tuple;
    }
  }

  std::vector<std::uint32_t> snapshot_best() {
    std::lock_guard<std::mutex> lock(merge_mutex);
    return best_tuple;
  }

  // Returns true when the search should stop; called from flush points.
  bool over_budget() {
    if (max_tuples && examined.load(std::memory_order_relaxed) >= max_tuples) return true;
    if (max_seconds > 0 && seconds_since(start) >= max_seconds) return true;
    return false;
  }
};

class PartitionRun {
 public:
  PartitionRun(const AdmissibleTupleSpec& spec, std::uint32_t x, SearchShared& shared)
      : spec_(spec),
        shared_(shared),
        eval_(spec.j, spec.m, x),
        tuple_(static_cast<std::size_t>(spec.j)) {}

  // Prefix = family + fixed leading digits; explores the subtree below it.
  void run(int family, const std::vector<std::size_t>& prefix_digits) {
    run_inner(family, prefix_digits);
    flush();
  }

 private:
  void run_inner(int family, const std::vector<std::size_t>& prefix_digits) {
    family_ = family;
    const auto& vals = spec_.families[static_cast<std::size_t>(family)];
    std::uint32_t partial = 0;
    const int prefix_len = static_cast<int>(prefix_digits.size());
    for (int depth = 1; depth <= prefix_len; ++depth) {
      const std::uint32_t cur_min = shared_.min.load(std::memory_order_relaxed);
      if (partial >= cur_min) return;
      const std::uint32_t b = vals[prefix_digits[static_cast<std::size_t>(depth - 1)]];
      if (depth == spec_.j) note_leaf();
      const std::uint32_t h = eval_.eval_level(depth, b, cur_min - partial);
      partial += h;
      if (depth == spec_.j) {  // prefix is already a full tuple
        if (partial < cur_min) {
          tuple_[static_cast<std::size_t>(depth - 1)] = b;
          shared_.offer_best(partial, tuple_);
        }
        return;
      }
      if (partial >= cur_min) return;
      tuple_[static_cast<std::size_t>(depth - 1)] = b;
    }
    dfs(prefix_len + 1, partial);
  }

  void note_leaf() {
    if (++local_leaves_ >= 512) flush();
  }

  void flush() {
    if (local_leaves_) {
      shared_.examined.fetch_add(local_leaves_, std::memory_order_relaxed);
      local_leaves_ = 0;
    }
    if (shared_.over_budget()) shared_.abort.store(true, std::memory_order_relaxed);
  }

  void dfs(int depth, std::uint32_t partial) {
    if (shared_.abort.load(std::memory_order_relaxed)) return;
    const auto& vals = spec_.families[static_cast<std::size_t>(family_)];
    for (std::uint32_t b : vals) {
      const std::uint32_t cur_min = shared_.min.load(std::memory_order_relaxed);
      if (partial >= cur_min) return;  // nothing below can improve
      if (depth == spec_.j) note_leaf();
      const std::uint32_t h = eval_.eval_level(depth, b, cur_min - partial);
      const std::uint32_t p = partial + h;
      if (p >= cur_min) continue;  // pruned (rows possibly incomplete)
      tuple_[static_cast<std::size_t>(depth - 1)] = b;
      if (depth == spec_.j)
        shared_.offer_best(p, tuple_);
      else
        dfs(depth + 1, p);
    }
  }

  const AdmissibleTupleSpec& spec_;
  SearchShared& shared_;
  HitEvaluator eval_;
  std::vector<std::uint32_t> tuple_;
  int family_ = 0;
  std::uint64_t local_leaves_ = 0;
};

// One full greedy descent per first coordinate: at each level take the
// candidate adding the fewest hits. Cheap, and seeds the shared minimum with
// a real tuple before the exhaustive phase starts.
void greedy_seed(const AdmissibleTupleSpec& spec, std::uint32_t x, SearchShared& shared) {
  HitEvaluator ev(spec.j, spec.m, x);
  std::vector<std::uint32_t> tuple(static_cast<std::size_t>(spec.j));
  const std::uint32_t kFull = ~std::uint32_t{0};
  for (const auto& [first_b, family] : first_schedule(spec)) {
    const auto& vals = spec.families[static_cast<std::size_t>(family)];
    std::uint32_t partial = ev.eval_level(1, first_b, kFull);
    tuple[0] = first_b;
    for (int depth = 2; depth <= spec.j; ++depth) {
      std::uint32_t best_b = vals[0];
      std::uint32_t best_h = kFull;
      for (std::uint32_t b : vals) {
        const std::uint32_t h = ev.eval_level(depth, b, kFull);
        if (h < best_h) {
          best_h = h;
          best_b = b;
        }
      }
      if (best_b != vals.back()) ev.eval_level(depth, best_b, kFull);  // restore rows
      tuple[static_cast<std::size_t>(depth - 1)] = best_b;
      partial += best_h;
    }
    shared.examined.fetch_add(1, std::memory_order_relaxed);
    shared.offer_best(partial, tuple);
  }
}

// Lexicographically smallest tuple attaining e, by an in-order scan that
// abandons a branch as soon as it exceeds e. Runs after e is exact, so the
// first complete leaf that matches is the canonical witness.
class WitnessScan {
 public:
  WitnessScan(const AdmissibleTupleSpec& spec, std::uint32_t x, std::uint32_t e)
      : spec_(spec), e_(e), eval_(spec.j, spec.m, x),
        tuple_(static_cast<std::size_t>(spec.j)) {}

  std::vector<std::uint32_t> find() {
    for (const auto& [first_b, family] : first_schedule(spec_)) {
      family_ = family;
      const std::uint32_t h = eval_.eval_level(1, first_b, e_ - 0 + 1);
      if (h > e_) continue;
      tuple_[0] = first_b;
      if (spec_.j == 1) {
        if (h == e_) return tuple_;
        continue;
      }
      if (dfs(2, h)) return tuple_;
    }
    fail(ErrorCode::invalid_argument, "internal: no witness attains the computed minimum");
  }

 private:
  bool dfs(int depth, std::uint32_t partial) {
    const auto& vals = spec_.families[static_cast<std::size_t>(family_)];
    for (std::uint32_t b : vals) {
      const std::uint32_t h = eval_.eval_level(depth, b, e_ - partial + 1);
      const std::uint32_t p = partial + h;
      if (p > e_) continue;
      tuple_[static_cast<std::size_t>(depth - 1)] = b;
      if (depth == spec_.j) {
        if (p == e_) return true;
      } else if (dfs(depth + 1, p)) {
        return true;
      }
    }
    return false;
  }

  const AdmissibleTupleSpec& spec_;
  std::uint32_t e_;
  HitEvaluator eval_;
  std::vector<std::uint32_t> tuple_;
  int family_ = 0;
};

struct CheckpointState {
  std::set<std::uint64_t> completed;
  std::uint32_t min = ~std::uint32_t{0};
  std::vector<std::uint32_t> best_tuple;
  std::uint64_t examined = 0;
};

CheckpointState load_search_checkpoint(const std::string& path, std::uint32_t x,
                                       std::uint32_t m, int j, int prefix_len,
                                       std::uint64_t n_partitions) {
  CheckpointState state;
  std::ifstream in(path);
  if (!in) return state;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    fail(ErrorCode::invalid_argument, "unreadable search checkpoint: " + path);
  }
  if (doc.value("kind", "") != "certify-checkpoint" || doc.value("x", ~0u) != x ||
      doc.value("m", ~0u) != m || doc.value("j", -1) != j ||
      doc.value("prefix_len", -1) != prefix_len)
    fail(ErrorCode::invalid_argument,
         "search checkpoint " + path + " does not match this (x, m, j) instance");
  for (std::uint64_t pid : doc.at("completed").get<std::vector<std::uint64_t>>()) {
    if (pid >= n_partitions)
      fail(ErrorCode::invalid_argument, "search checkpoint partition id out of range");
    state.completed.insert(pid);
  }
  state.min = doc.value("min", ~std::uint32_t{0});
  state.examined = doc.value("tuples_examined", std::uint64_t{0});
  if (doc.contains("best_tuple"))
    state.best_tuple = doc.at("best_tuple").get<std::vector<std::uint32_t>>();
  return state;
}

void write_search_checkpoint(const std::string& path, std::uint32_t x, std::uint32_t m,
                             int j, int prefix_len, const std::set<std::uint64_t>& completed,
                             SearchShared& shared) {
  nlohmann::json doc;
  doc["kind"] = "certify-checkpoint";
  doc["x"] = x;
  doc["m"] = m;
  doc["j"] = j;
  doc["prefix_len"] = prefix_len;
  doc["completed"] = completed;
  doc["min"] = shared.min.load(std::memory_order_relaxed);
  doc["tuples_examined"] = shared.examined.load(std::memory_order_relaxed);
  doc["best_tuple"] = shared.snapshot_best();
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump();
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace

AdmissibleTupleSpec admissible_tuples(Modulus m, int j) {
  if (j < 1 || j > 24) fail(ErrorCode::invalid_argument, "admissible tuples need 1 <= j <= 24");
  if (m.odd_part() == 1)
    fail(ErrorCode::unsupported_modulus,
         "no admissible-tuple enumeration for pure powers of two (m=" +
             std::to_string(m.value()) + ")");
  AdmissibleTupleSpec spec;
  spec.m = m.value();
  spec.j = j;
  const std::uint32_t mod = m.value();
  if (mod % 2 == 1) {
    std::vector<std::uint32_t> all(mod);
    for (std::uint32_t v = 0; v < mod; ++v) all[v] = v;
    spec.families.push_back(std::move(all));
  } else if (mod % 4 == 2) {
    std::vector<std::uint32_t> odd;
    for (std::uint32_t v = 1; v < mod; v += 2) odd.push_back(v);
    spec.families.push_back(std::move(odd));
  } else {
    // base elements share one class mod 4
    for (std::uint32_t c : {1u, 3u}) {
      std::vector<std::uint32_t> vals;
      for (std::uint32_t v = c; v < mod; v += 4) vals.push_back(v);
      spec.families.push_back(std::move(vals));
    }
  }
  mpz_class per_family;
  mpz_ui_pow_ui(per_family.get_mpz_t(), spec.families[0].size(), static_cast<unsigned long>(j));
  spec.total_count = per_family * static_cast<unsigned long>(spec.families.size());
  return spec;
}

Certificate search_min_hits(std::uint32_t x, Modulus m, int j, const SearchOptions& options) {
  if (m.odd_part() < 3)
    fail(ErrorCode::unsupported_modulus, "search needs odd part >= 3");
  if (x >= m.value()) fail(ErrorCode::invalid_argument, "x must lie in [0, m)");
  const auto start = Clock::now();
  const AdmissibleTupleSpec spec = admissible_tuples(m, j);

  // Scratch rows per thread: 2^{j+1} residues.
  budget::Reservation scratch((std::uint64_t{2} << j) * 4 *
                              static_cast<std::uint64_t>(options.threads > 0
                                                             ? options.threads
                                                             : omp_get_max_threads()));

  const std::size_t family_size = spec.families[0].size();
  const int n_families = static_cast<int>(spec.families.size());

  // Static partitions: lex prefixes of the tuple space, enough of them to
  // keep every thread fed. Independent of thread count so checkpoints stay
  // portable across runs.
  int prefix_len = 1;
  std::uint64_t n_partitions = static_cast<std::uint64_t>(n_families) * family_size;
  while (n_partitions < 64 && prefix_len < j) {
    ++prefix_len;
    n_partitions *= family_size;
  }

  SearchShared shared;
  shared.max_tuples = options.max_tuples;
  shared.max_seconds = options.max_seconds;
  shared.start = start;

  CheckpointState resume;
  if (!options.checkpoint_path.empty()) {
    resume = load_search_checkpoint(options.checkpoint_path, x, m.value(), j, prefix_len,
                                    n_partitions);
    if (resume.min != ~std::uint32_t{0}) {
      shared.best_count = resume.min;
      shared.best_tuple = resume.best_tuple;
      shared.min.store(resume.min, std::memory_order_relaxed);
    }
    shared.examined.store(resume.examined, std::memory_order_relaxed);
  }

  greedy_seed(spec, x, shared);

  std::set<std::uint64_t> completed = resume.completed;
  std::mutex checkpoint_mutex;

  const long long parts = static_cast<long long>(n_partitions);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long pid = 0; pid < parts; ++pid) {
    if (resume.completed.count(static_cast<std::uint64_t>(pid))) continue;
    if (shared.abort.load(std::memory_order_relaxed)) continue;
    std::uint64_t rest = static_cast<std::uint64_t>(pid);
    const int family = static_cast<int>(rest % n_families);
    rest /= n_families;
    std::vector<std::size_t> digits(static_cast<std::size_t>(prefix_len));
    for (int d = prefix_len - 1; d >= 0; --d) {
      digits[static_cast<std::size_t>(d)] = rest % family_size;
      rest /= family_size;
    }
    PartitionRun run(spec, x, shared);
    run.run(family, digits);
    if (!options.checkpoint_path.empty() && !shared.abort.load(std::memory_order_relaxed)) {
      std::lock_guard<std::mutex> lock(checkpoint_mutex);
      completed.insert(static_cast<std::uint64_t>(pid));
      write_search_checkpoint(options.checkpoint_path, x, m.value(), j, prefix_len,
                              completed, shared);
    }
  }

  Certificate cert;
  cert.x = x;
  cert.m = m.value();
  cert.j = j;
  cert.denominator = denominator_for(j);
  cert.tuples_examined = shared.examined.load(std::memory_order_relaxed);
  cert.certified = !shared.abort.load(std::memory_order_relaxed);
  cert.e = shared.min.load(std::memory_order_relaxed);
  if (cert.certified) {
    WitnessScan scan(spec, x, static_cast<std::uint32_t>(cert.e));
    cert.witness = scan.find();
  } else {
    cert.witness = shared.best_tuple;
  }
  cert.elapsed_seconds = seconds_since(start);
  return cert;
}

namespace {

std::uint64_t dot_hits(const std::vector<std::uint32_t>& reduced, int j, std::uint32_t m,
                       std::uint32_t x, std::span<const std::uint32_t> tuple) {
  std::uint64_t hits = 0;
  const std::size_t rows = reduced.size() / static_cast<std::size_t>(j);
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint64_t sum = 0;
    const std::uint32_t* c = reduced.data() + r * static_cast<std::size_t>(j);
    for (int s = 0; s < j; ++s)
      sum += static_cast<std::uint64_t>(c[s]) * tuple[static_cast<std::size_t>(s)];
    if (sum % m == x) ++hits;
  }
  return hits;
}

}  // namespace

Certificate naive_min_hits(std::uint32_t x, Modulus m, int j) {
  if (m.odd_part() < 3)
    fail(ErrorCode::unsupported_modulus, "search needs odd part >= 3");
  if (x >= m.value()) fail(ErrorCode::invalid_argument, "x must lie in [0, m)");
  const auto start = Clock::now();
  const AdmissibleTupleSpec spec = admissible_tuples(m, j);
  const std::uint64_t rows = row_count_for(j);
  if (spec.total_count * static_cast<unsigned long>(rows) > 100000000)
    fail(ErrorCode::capacity,
         "naive enumeration capped at 1e8 tuple-row evaluations; use search_min_hits");
  const CoefficientTable table = CoefficientTable::build(j);
  const std::vector<std::uint32_t> reduced = table.reduce(m);

  Certificate cert;
  cert.x = x;
  cert.m = m.value();
  cert.j = j;
  cert.denominator = denominator_for(j);
  cert.certified = true;

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::uint32_t> tuple(static_cast<std::size_t>(j));
  for (const auto& [first_b, family] : first_schedule(spec)) {
    const auto& vals = spec.families[static_cast<std::size_t>(family)];
    tuple[0] = first_b;
    std::vector<std::size_t> digit(static_cast<std::size_t>(j), 0);
    while (true) {
      for (int s = 1; s < j; ++s) tuple[static_cast<std::size_t>(s)] = vals[digit[static_cast<std::size_t>(s)]];
      const std::uint64_t hits = dot_hits(reduced, j, cert.m, x, tuple);
      ++cert.tuples_examined;
      if (hits < best) {
        best = hits;
        cert.witness = tuple;
      }
      int s = j - 1;
      while (s >= 1 && ++digit[static_cast<std::size_t>(s)] == vals.size()) {
        digit[static_cast<std::size_t>(s)] = 0;
        --s;
      }
      if (s < 1) break;
    }
  }
  cert.e = best;
  cert.elapsed_seconds = seconds_since(start);
  return cert;
}

Rational density_bound(const Certificate& cert) {
  if (!cert.certified)
    fail(ErrorCode::invalid_argument,
         "density bound refused: certificate is a non-certified partial result");
  return Rational::of(static_cast<std::int64_t>(cert.e),
                      static_cast<std::int64_t>(cert.denominator));
}

double bound_curve(const Certificate& cert, std::uint64_t n) {
  if (n < 2) fail(ErrorCode::invalid_argument, "bound curve needs n >= 2");
  const double e = static_cast<double>(cert.e);
  const double dn = static_cast<double>(n);
  const double log_2j = static_cast<double>(cert.j) * std::log(2.0);
  return e / static_cast<double>(cert.denominator) * dn -
         (3.0 * e / log_2j) * std::log(dn) - e;
}

std::uint64_t evaluate_tuple_hits(const CoefficientTable& table, Modulus m,
                                  std::uint32_t x,
                                  std::span<const std::uint32_t> tuple) {
  if (static_cast<int>(tuple.size()) != table.j())
    fail(ErrorCode::invalid_argument, "tuple length must equal j");
  return dot_hits(table.reduce(m), table.j(), m.value(), x, tuple);
}

std::vector<WindowRef> enumerate_windows(std::uint64_t n, int j) {
  if (j < 1 || j > 24) fail(ErrorCode::invalid_argument, "windows need 1 <= j <= 24");
  std::vector<WindowRef> windows;
  for (int w = 1; static_cast<std::uint64_t>(j) * w < 63; ++w) {
    const std::uint64_t scale = std::uint64_t{1} << (static_cast<std::uint64_t>(j) * w);
    if (scale > n) break;
    const std::uint64_t k_lo = (n + 2 * scale - 1) / (2 * scale);  // ceil(n / 2^{jw+1})
    const std::uint64_t k_hi_plus = n / scale;                     // floor(n / 2^{jw})
    if (k_hi_plus < k_lo + 1) continue;
    for (std::uint64_t k = k_lo; k + 1 <= k_hi_plus; ++k) windows.push_back({k, w});
  }
  return windows;
}

LemmaVerdict verify_window_disjoint(std::uint64_t n, int j) {
  if (n < 8) fail(ErrorCode::invalid_argument, "window disjointness needs n >= 8");
  struct Interval {
    std::uint64_t lo, hi;
  };
  std::vector<Interval> intervals;
  for (const WindowRef& win : enumerate_windows(n, j)) {
    for (int i = 1; i <= j; ++i) {
      const std::uint64_t base = win.k << i;
      intervals.push_back({base + 1, base + (std::uint64_t{1} << i) - 1});
    }
  }
  LemmaVerdict v;
  v.lemma_id = "window-disjoint";
  v.range_checked = n;
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].lo < 3 || intervals[i].hi > n) {
      v.pass = false;
      v.counterexample = {intervals[i].lo, intervals[i].hi};
      return v;
    }
    if (i > 0 && intervals[i - 1].hi >= intervals[i].lo) {
      v.pass = false;
      v.counterexample = {intervals[i - 1].lo, intervals[i - 1].hi, intervals[i].lo,
                          intervals[i].hi};
      return v;
    }
  }
  return v;
}

LemmaVerdict empirical_window_check(const Certificate& cert, const ResidueTable& table,
                                    std::uint64_t N) {
  if (!cert.certified)
    fail(ErrorCode::invalid_argument, "empirical window check needs a certified result");
  if (table.modulus().value() != cert.m)
    fail(ErrorCode::invalid_argument, "table modulus must equal the certificate modulus");
  if (N < 8 || N > table.limit())
    fail(ErrorCode::invalid_argument, "window check range exceeds table");
  const std::uint32_t m = cert.m;
  const bool check_odd = (m % 2 == 0);
  const bool check_mod4 = (m % 4 == 0);
  LemmaVerdict v;
  v.lemma_id = "window-hits";
  v.range_checked = N;
  for (const WindowRef& win : enumerate_windows(N, cert.j)) {
    bool admissible = true;
    std::uint32_t first_mod4 = 0;
    for (int s = 1; s <= cert.j && admissible; ++s) {
      const std::uint32_t b = table[(win.k << s) + 1];
      if (check_odd && b % 2 == 0) admissible = false;
      if (check_mod4) {
        if (s == 1)
          first_mod4 = b % 4;
        else if (b % 4 != first_mod4)
          admissible = false;
      }
    }
    std::uint64_t hits = 0;
    for (int i = 1; i <= cert.j; ++i) {
      const std::uint64_t base = win.k << i;
      const std::uint64_t top = (std::uint64_t{1} << i) - 1;
      for (std::uint64_t t = 1; t <= top; ++t)
        if (table[base + t] == cert.x) ++hits;
    }
    if (!admissible || hits < cert.e) {
      v.pass = false;
      v.counterexample = {win.k, static_cast<std::uint64_t>(win.w)};
      return v;
    }
  }
  return v;
}

std::string certificate_json(const Certificate& cert) {
  nlohmann::json doc;
  doc["x"] = cert.x;
  doc["m"] = cert.m;
  doc["j"] = cert.j;
  doc["e"] = cert.e;
  doc["denominator"] = cert.denominator;
  doc["density_lower_bound"] =
      std::to_string(cert.e) + "/" + std::to_string(cert.denominator);
  doc["witness_tuple"] = cert.witness;
  doc["tuples_examined"] = cert.tuples_examined;
  doc["elapsed_seconds"] = cert.elapsed_seconds;
  doc["certified"] = cert.certified;
  return doc.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_argument, std::string("malformed certificate JSON: ") + e.what());
  }
  Certificate cert;
  try {
    cert.x = doc.at("x").get<std::uint32_t>();
    cert.m = doc.at("m").get<std::uint32_t>();
    cert.j = doc.at("j").get<int>();
    cert.e = doc.at("e").get<std::uint64_t>();
    cert.denominator = doc.at("denominator").get<std::uint64_t>();
    cert.witness = doc.at("witness_tuple").get<std::vector<std::uint32_t>>();
    cert.tuples_examined = doc.value("tuples_examined", std::uint64_t{0});
    cert.elapsed_seconds = doc.value("elapsed_seconds", 0.0);
    cert.certified = doc.at("certified").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::invalid_argument, std::string("incomplete certificate JSON: ") + e.what());
  }
  return cert;
}

}  // namespace seqlab
