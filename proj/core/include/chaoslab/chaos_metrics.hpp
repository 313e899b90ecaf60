#pragma once

// Orbit-distance statistics: distribution functions, Li-Yorke and distributional
// chaos evidence at finite horizons, separated sets and omega-limit proxies.
//
// Nothing here decides a limit. liminf / limsup are replaced by the running
// min / max over an explicit horizon schedule, and every verdict carries it.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "chaoslab/rational.hpp"
#include "chaoslab/words.hpp"

namespace chaoslab::chaos {

using words::SymbolStream;
using words::Word;

template <class Point>
struct OrbitSource {
  std::function<Point(const Point&)> step;
  std::function<Rational(const Point&, const Point&)> dist;
  Rational diameter;
};

// dist(f^i x, f^i y) for 0 <= i < n
template <class Point>
std::vector<Rational> distance_sequence(const OrbitSource<Point>& src, Point x, Point y, std::size_t n) {
  std::vector<Rational> d;
  d.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.push_back(src.dist(x, y));
    if (i + 1 < n) {
      x = src.step(x);
      y = src.step(y);
    }
  }
  return d;
}

// Powers of two from `first` up to `last`, then `last` itself.
std::vector<std::uint64_t> horizon_schedule(std::uint64_t first, std::uint64_t last);

struct DistributionProfile {
  std::uint64_t horizon = 0;
  std::vector<Rational> breakpoints;
  std::vector<Rational> values;  // F^(horizon)(t) per breakpoint
  std::vector<std::uint64_t> schedule;
  std::vector<Rational> lower;  // min over schedule per breakpoint (proxy for F)
  std::vector<Rational> upper;  // max over schedule per breakpoint (proxy for F*)
};

// F^(n)(t) = |{0 <= i < n : d_i < t}| / n. The profile horizon is the last schedule
// entry, or d.size() when the schedule is empty.
DistributionProfile profile_from_distances(const std::vector<Rational>& d,
                                           const std::vector<Rational>& breakpoints,
                                           std::vector<std::uint64_t> schedule = {});

template <class Point>
DistributionProfile distribution(const OrbitSource<Point>& src, const Point& x, const Point& y,
                                 std::size_t n, const std::vector<Rational>& breakpoints,
                                 std::vector<std::uint64_t> schedule = {}) {
  if (n == 0) throw InvalidArgument("distribution needs n >= 1");
  return profile_from_distances(distance_sequence(src, x, y, n), breakpoints, std::move(schedule));
}

// --- shifts ---------------------------------------------------------------

// common[i] = length of the common prefix of sigma^i x and sigma^i y, capped at cap,
// for i < n. Needs both streams defined on [0, n + cap).
std::vector<std::size_t> agreement_runs(const SymbolStream& x, const SymbolStream& y,
                                        std::size_t n, std::size_t cap);

struct ShiftVerdict {
  std::vector<std::uint64_t> schedule;
  std::size_t k_max = 0;
  // indexed by k = 0..k_max, breakpoint t = 2^-k
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  bool dc3 = false;
  std::optional<std::size_t> witness_k;  // first k with upper - lower > delta
  Rational largest_gap;
  bool dc2 = false;
  bool dc1 = false;
};

// Evaluates F and F* proxies only at t = 2^-k, k <= k_max. Both F and F* are
// constant on (2^-(k+1), 2^-k], so these breakpoints see every value they take
// down to resolution 2^-(k_max+1).
ShiftVerdict classify_shift_pair(const SymbolStream& x, const SymbolStream& y, std::size_t k_max,
                                 const std::vector<std::uint64_t>& schedule,
                                 const Rational& delta = Rational(1, 8),
                                 const Rational& one_tol = Rational(0));

struct DensityTriple {
  std::uint64_t horizon = 0;
  std::uint64_t ones_x = 0;
  std::uint64_t ones_y = 0;
  std::uint64_t disagree = 0;
  Rational density_x() const { return ratio(ones_x, horizon); }
  Rational density_y() const { return ratio(ones_y, horizon); }
  Rational density_disagree() const { return ratio(disagree, horizon); }
};

// Counts on [0, n) for each n in the schedule.
std::vector<DensityTriple> dc3_density_criterion(const SymbolStream& x, const SymbolStream& y,
                                                 const std::vector<std::uint64_t>& schedule);

struct ReductionRow {
  std::uint64_t s = 0;
  std::uint64_t differ_xy = 0;  // windows k < s with x_[k,k+l) != y_[k,k+l)
  std::uint64_t differ_0y = 0;  // windows k < s with y_[k,k+l) != 0^l
  std::uint64_t touching = 0;   // windows k < s meeting a 1 of x
  bool within_bound() const {
    auto gap = differ_xy > differ_0y ? differ_xy - differ_0y : differ_0y - differ_xy;
    return gap <= touching;
  }
};

// Compares (x, y) with (0^inf, y) window by window; only windows meeting a 1 of x
// can change status, so |differ_xy - differ_0y| <= touching.
std::vector<ReductionRow> reduce_to_zero(const SymbolStream& x, const SymbolStream& y, std::size_t l,
                                         const std::vector<std::uint64_t>& schedule);

// --- Li-Yorke ---------------------------------------------------------------

struct LyVerdict {
  std::vector<std::uint64_t> schedule;
  Rational min_dist;
  Rational max_dist;
  Rational tail_max;  // max over [schedule[-2], schedule[-1])
  bool ly = false;
  bool asymptotic = false;
};

LyVerdict ly_from_distances(const std::vector<Rational>& d, const std::vector<std::uint64_t>& schedule,
                            const Rational& tol_low = Rational(1, 1024),
                            const Rational& tol_high = Rational(1, 4));

template <class Point>
LyVerdict ly_classify(const OrbitSource<Point>& src, const Point& x, const Point& y,
                      const std::vector<std::uint64_t>& schedule,
                      const Rational& tol_low = Rational(1, 1024),
                      const Rational& tol_high = Rational(1, 4)) {
  if (schedule.empty()) throw InvalidArgument("ly_classify needs a schedule");
  return ly_from_distances(distance_sequence(src, x, y, schedule.back()), schedule, tol_low, tol_high);
}

// --- entropy --------------------------------------------------------------

struct SeparatedCount {
  std::size_t count = 0;
  std::size_t n = 0;
  // (1/n) log count; informational only
  double entropy_estimate() const { return n == 0 || count == 0 ? 0.0 : std::log(double(count)) / double(n); }
};

// Greedy (f, n, eps)-separated subset of `sample`, taken in sample order:
// a point joins if its first n iterates stay more than eps away from every member's
// at some time. The count is a lower bound for s(f, n, eps).
template <class Point>
SeparatedCount separated_count(const OrbitSource<Point>& src, const std::vector<Point>& sample,
                               std::size_t n, const Rational& eps) {
  if (n == 0) throw InvalidArgument("separated_count needs n >= 1");
  std::vector<std::vector<Point>> orbits;
  for (const auto& p : sample) {
    std::vector<Point> o{p};
    for (std::size_t i = 1; i < n; ++i) o.push_back(src.step(o.back()));
    orbits.push_back(std::move(o));
  }
  std::vector<std::size_t> chosen;
  for (std::size_t a = 0; a < orbits.size(); ++a) {
    bool separated = true;
    for (std::size_t b : chosen) {
      bool apart = false;
      for (std::size_t i = 0; i < n && !apart; ++i) apart = src.dist(orbits[a][i], orbits[b][i]) > eps;
      if (!apart) {
        separated = false;
        break;
      }
    }
    if (separated) chosen.push_back(a);
  }
  return {chosen.size(), n};
}

// Length-word_len factors of x starting at tail_start or later and ending before prefix_len.
std::set<Word> omega_language(const SymbolStream& x, std::size_t word_len, std::size_t prefix_len,
                              std::size_t tail_start);

}  // namespace chaoslab::chaos
