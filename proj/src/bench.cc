// Copyright 2026-present the fpcsat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fpcsat/bench.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "fpcsat/oracle.h"
#include "fpcsat/solver.h"

namespace fpcsat::bench {
namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

// Unbiased draw from [0, bound) by rejection.
std::uint64_t draw(std::uint64_t& state, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = splitmix64(state);
  } while (x >= limit);
  return x % bound;
}

struct Fit {
  double slope = 0;
  double rss = 0;
};

Fit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  Fit f;
  f.slope = sxx > 0 ? sxy / sxx : 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + f.slope * (xs[i] - mx));
    f.rss += r * r;
  }
  return f;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kRandom3Sat:
      return "random3sat";
    case Family::kPigeonhole:
      return "pigeonhole";
    case Family::kCompleteMinusOne:
      return "complete-minus-one";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kRandom3Sat, Family::kPigeonhole, Family::kCompleteMinusOne}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Formula random_ksat(std::size_t n, std::size_t clauses, std::size_t k, std::uint64_t seed) {
  if (k > n) throw Error("random k-SAT needs k <= n");
  std::uint64_t state = seed;
  std::vector<Clause> out;
  out.reserve(clauses);
  std::vector<Var> picked;
  for (std::size_t c = 0; c < clauses; ++c) {
    picked.clear();
    std::vector<Literal> lits;
    while (picked.size() < k) {
      const auto v = static_cast<Var>(draw(state, n) + 1);
      if (std::find(picked.begin(), picked.end(), v) != picked.end()) continue;
      picked.push_back(v);
      lits.push_back(draw(state, 2) ? Literal::positive(v) : Literal::negative(v));
    }
    out.emplace_back(std::move(lits));
  }
  return Formula(std::move(out));
}

Formula pigeonhole(std::size_t pigeons, std::size_t holes) {
  auto var = [&](std::size_t i, std::size_t j) { return static_cast<Var>(i * holes + j + 1); };
  std::vector<Clause> out;
  for (std::size_t i = 0; i < pigeons; ++i) {
    std::vector<Literal> some_hole;
    for (std::size_t j = 0; j < holes; ++j) some_hole.push_back(Literal::positive(var(i, j)));
    out.emplace_back(std::move(some_hole));
  }
  for (std::size_t j = 0; j < holes; ++j) {
    for (std::size_t a = 0; a < pigeons; ++a) {
      for (std::size_t b = a + 1; b < pigeons; ++b) {
        out.push_back(Clause{Literal::negative(var(a, j)), Literal::negative(var(b, j))});
      }
    }
  }
  return Formula(std::move(out));
}

Formula complete_minus_one(std::size_t n, std::uint64_t seed, Clause* removed) {
  std::uint64_t state = seed;
  std::vector<Literal> lits;
  for (std::size_t p = 1; p <= n; ++p) {
    const auto v = static_cast<Var>(p);
    lits.push_back(draw(state, 2) ? Literal::negative(v) : Literal::positive(v));
  }
  Clause fpc(std::move(lits));
  if (removed) *removed = fpc;
  return complete_minus_power_set(VariableSet::range(n), fpc);
}

Formula make_instance(const BenchParams& p, std::size_t point, std::uint64_t seed) {
  const std::uint64_t mixed = seed ^ (0xD1B54A32D192ED03ULL * (point + 1));
  switch (p.family) {
    case Family::kRandom3Sat: {
      const auto m = static_cast<std::size_t>(std::llround(p.ratio * static_cast<double>(point)));
      return random_ksat(point, m, 3, mixed);
    }
    case Family::kPigeonhole:
      return pigeonhole(point + 1, point);
    case Family::kCompleteMinusOne:
      return complete_minus_one(point, mixed);
  }
  throw Error("unknown family");
}

std::string csv_row(const BenchRecord& r) {
  return r.family + "," + std::to_string(r.n) + "," + std::to_string(r.clause_count) + "," +
         std::to_string(r.seed) + "," + r.verdict + "," + fixed(r.elapsed_ms, 3) + "," +
         std::to_string(r.peak_nodes) + "," + std::to_string(r.eliminations) + "," + (r.timed_out ? "1" : "0");
}

std::vector<BenchRecord> run_family(const BenchParams& p, std::ostream* csv) {
  if (p.range_lo > p.range_hi) throw Error("empty range");
  if (p.seeds_per_point == 0) throw Error("seeds per point must be at least 1");

  struct Task {
    std::size_t point;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t point = p.range_lo; point <= p.range_hi; ++point) {
    for (std::size_t r = 0; r < p.seeds_per_point; ++r) tasks.push_back({point, p.seed + r});
  }

  std::vector<std::optional<BenchRecord>> results(tasks.size());
  std::size_t flushed = 0;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  if (csv) *csv << kCsvHeader << '\n' << std::flush;

  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& t = tasks[i];
      const Formula f = make_instance(p, t.point, t.seed);
      SolveConfig cfg;
      cfg.node_budget = p.node_budget;
      cfg.timeout = p.timeout;
      const auto res = check_sat(f, cfg);

      BenchRecord rec;
      rec.family = std::string(to_string(p.family));
      rec.n = variables_of(f).size();
      rec.clause_count = f.size();
      rec.seed = t.seed;
      rec.verdict = std::string(to_string(res.verdict));
      rec.elapsed_ms = p.omit_timing ? 0.0 : std::chrono::duration<double, std::milli>(res.stats.elapsed).count();
      rec.peak_nodes = res.stats.peak_nodes;
      rec.eliminations = res.stats.eliminations;
      rec.timed_out = res.stats.timed_out;

      std::lock_guard lock(mu);
      results[i] = std::move(rec);
      while (flushed < results.size() && results[flushed]) {
        if (csv) *csv << csv_row(*results[flushed]) << '\n' << std::flush;
        ++flushed;
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(p.workers, 1, std::max<std::size_t>(1, tasks.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<BenchRecord> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

GrowthReport fit_growth(std::span<const BenchRecord> records) {
  std::map<std::size_t, std::pair<std::vector<double>, std::vector<double>>> by_n;
  for (const auto& r : records) {
    if (r.timed_out || (r.verdict != "SAT" && r.verdict != "UNSAT")) continue;
    auto& [peaks, times] = by_n[r.n];
    peaks.push_back(static_cast<double>(r.peak_nodes));
    times.push_back(r.elapsed_ms);
  }
  if (by_n.size() < 4) {
    throw InsufficientDataError("growth fit needs at least 4 distinct n with finished runs, got " +
                                std::to_string(by_n.size()));
  }

  GrowthReport g;
  std::vector<double> ns, log_ns, log_peaks, log_times;
  for (const auto& [n, samples] : by_n) {
    GrowthPoint pt{n, median(samples.first), median(samples.second)};
    g.points.push_back(pt);
    ns.push_back(static_cast<double>(n));
    log_ns.push_back(std::log(static_cast<double>(std::max<std::size_t>(n, 1))));
    log_peaks.push_back(std::log(std::max(pt.median_peak_nodes, 1.0)));
    log_times.push_back(std::log(std::max(pt.median_elapsed_ms, 1e-3)));
  }

  const Fit poly = least_squares(log_ns, log_peaks);
  const Fit expo = least_squares(ns, log_peaks);
  g.peak_loglog_slope = poly.slope;
  g.elapsed_loglog_slope = least_squares(log_ns, log_times).slope;
  g.polynomial_fit_rss = poly.rss;
  g.exponential_fit_rss = expo.rss;

  for (std::size_t i = 1; i < g.points.size(); ++i) {
    const double dn = ns[i] - ns[i - 1];
    g.peak_ratios.push_back(std::exp((log_peaks[i] - log_peaks[i - 1]) / dn));
  }
  const std::size_t tail_from = g.peak_ratios.size() / 2;
  double log_sum = 0;
  for (std::size_t i = tail_from; i < g.peak_ratios.size(); ++i) log_sum += std::log(g.peak_ratios[i]);
  g.tail_ratio = std::exp(log_sum / static_cast<double>(g.peak_ratios.size() - tail_from));

  // A constant per-unit ratio is a straight line in (n, log peak); a ratio
  // decaying towards 1 is a straight line in (log n, log peak).
  g.label = expo.rss < poly.rss ? "exponential-consistent" : "polynomial-consistent";
  return g;
}

std::string format_growth(const GrowthReport& g) {
  std::string out;
  out += "points=" + std::to_string(g.points.size()) + "\n";
  for (const auto& pt : g.points) {
    out += "point.n" + std::to_string(pt.n) + "=median_peak_nodes:" + fixed(pt.median_peak_nodes, 1) +
           ",median_elapsed_ms:" + fixed(pt.median_elapsed_ms, 3) + "\n";
  }
  out += "peak_loglog_slope=" + fixed(g.peak_loglog_slope, 4) + "\n";
  out += "elapsed_loglog_slope=" + fixed(g.elapsed_loglog_slope, 4) + "\n";
  out += "peak_ratios=";
  for (std::size_t i = 0; i < g.peak_ratios.size(); ++i) {
    if (i) out += ',';
    out += fixed(g.peak_ratios[i], 4);
  }
  out += "\n";
  out += "tail_ratio=" + fixed(g.tail_ratio, 4) + "\n";
  out += "exponential_fit_rss=" + fixed(g.exponential_fit_rss, 6) + "\n";
  out += "polynomial_fit_rss=" + fixed(g.polynomial_fit_rss, 6) + "\n";
  out += "label=" + g.label + "\n";
  return out;
}

}  // namespace fpcsat::bench
