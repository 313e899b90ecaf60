#include "chaoslab/chaos_metrics.hpp"

#include <algorithm>

namespace chaoslab::chaos {

std::vector<std::uint64_t> horizon_schedule(std::uint64_t first, std::uint64_t last) {
  if (first == 0 || first > last) throw InvalidArgument("horizon_schedule needs 1 <= first <= last");
  std::vector<std::uint64_t> s;
  std::uint64_t p = 1;
  while (p < first) p *= 2;
  for (; p < last; p *= 2) s.push_back(p);
  s.push_back(last);
  return s;
}

DistributionProfile profile_from_distances(const std::vector<Rational>& d,
                                           const std::vector<Rational>& breakpoints,
                                           std::vector<std::uint64_t> schedule) {
  if (d.empty()) throw InvalidArgument("empty distance sequence");
  if (schedule.empty()) schedule.push_back(d.size());
  if (!std::is_sorted(schedule.begin(), schedule.end()) || schedule.front() == 0 ||
      schedule.back() > d.size()) {
    throw InvalidArgument("schedule must be increasing within the distance sequence");
  }
  DistributionProfile prof;
  prof.horizon = schedule.back();
  prof.breakpoints = breakpoints;
  prof.schedule = schedule;
  for (const auto& t : breakpoints) {
    std::uint64_t count = 0;
    std::size_t next = 0;
    Rational lo, hi;
    for (std::uint64_t i = 0; i < prof.horizon; ++i) {
      if (d[i] < t) ++count;
      while (next < schedule.size() && schedule[next] == i + 1) {
        Rational f = ratio(count, i + 1);
        if (next == 0) {
          lo = hi = f;
        } else {
          lo = std::min(lo, f);
          hi = std::max(hi, f);
        }
        ++next;
      }
    }
    Rational at = ratio(count, prof.horizon);
    prof.values.push_back(at);
    prof.lower.push_back(lo);
    prof.upper.push_back(hi);
  }
  return prof;
}

std::vector<std::size_t> agreement_runs(const SymbolStream& x, const SymbolStream& y,
                                        std::size_t n, std::size_t cap) {
  std::vector<std::size_t> run(n + cap + 1, 0);
  for (std::size_t i = n + cap; i-- > 0;) {
    run[i] = x.at(i) == y.at(i) ? std::min(run[i + 1] + 1, cap) : 0;
  }
  run.resize(n);
  return run;
}

ShiftVerdict classify_shift_pair(const SymbolStream& x, const SymbolStream& y, std::size_t k_max,
                                 const std::vector<std::uint64_t>& schedule, const Rational& delta,
                                 const Rational& one_tol) {
  if (schedule.empty()) throw InvalidArgument("classify_shift_pair needs a schedule");
  ShiftVerdict v;
  v.schedule = schedule;
  v.k_max = k_max;
  auto run = agreement_runs(x, y, schedule.back(), k_max);

  // rho(sigma^i x, sigma^i y) < 2^-k  iff  the common prefix has length >= k
  std::vector<std::uint64_t> count(k_max + 1, 0);
  v.lower.assign(k_max + 1, Rational(0));
  v.upper.assign(k_max + 1, Rational(0));
  std::size_t next = 0;
  for (std::uint64_t i = 0; i < schedule.back(); ++i) {
    for (std::size_t k = 0; k <= k_max && k <= run[i]; ++k) ++count[k];
    while (next < schedule.size() && schedule[next] == i + 1) {
      for (std::size_t k = 0; k <= k_max; ++k) {
        Rational f = ratio(count[k], i + 1);
        if (next == 0) {
          v.lower[k] = v.upper[k] = f;
        } else {
          v.lower[k] = std::min(v.lower[k], f);
          v.upper[k] = std::max(v.upper[k], f);
        }
      }
      ++next;
    }
  }

  bool upper_one = true;
  bool lower_short = false;
  bool lower_zero = false;
  for (std::size_t k = 0; k <= k_max; ++k) {
    Rational gap = v.upper[k] - v.lower[k];
    if (gap > v.largest_gap) v.largest_gap = gap;
    if (gap > delta && !v.witness_k) v.witness_k = k;
    if (v.upper[k] < 1 - one_tol) upper_one = false;
    if (v.lower[k] < Rational(15, 16)) lower_short = true;
    if (v.lower[k] == 0) lower_zero = true;
  }
  v.dc3 = v.witness_k.has_value();
  v.dc2 = upper_one && lower_short;
  v.dc1 = v.dc2 && lower_zero;
  return v;
}

std::vector<DensityTriple> dc3_density_criterion(const SymbolStream& x, const SymbolStream& y,
                                                 const std::vector<std::uint64_t>& schedule) {
  std::vector<DensityTriple> out;
  DensityTriple cur;
  std::uint64_t i = 0;
  for (std::uint64_t n : schedule) {
    for (; i < n; ++i) {
      auto a = x.at(i), b = y.at(i);
      cur.ones_x += a == 1;
      cur.ones_y += b == 1;
      cur.disagree += a != b;
    }
    cur.horizon = n;
    out.push_back(cur);
  }
  return out;
}

std::vector<ReductionRow> reduce_to_zero(const SymbolStream& x, const SymbolStream& y, std::size_t l,
                                         const std::vector<std::uint64_t>& schedule) {
  if (l == 0) throw InvalidArgument("reduce_to_zero needs l >= 1");
  std::vector<ReductionRow> out;
  if (schedule.empty()) return out;
  const std::uint64_t last = schedule.back();
  Word xs = x.prefix(last + l), ys = y.prefix(last + l);
  // windows [k, k+l): sliding counts of x-ones, y-ones and disagreements
  std::uint64_t xo = 0, yo = 0, dif = 0;
  for (std::size_t j = 0; j < l; ++j) {
    xo += xs[j];
    yo += ys[j];
    dif += xs[j] != ys[j];
  }
  ReductionRow cur;
  std::size_t next = 0;
  for (std::uint64_t k = 0; k < last; ++k) {
    cur.differ_xy += dif > 0;
    cur.differ_0y += yo > 0;
    cur.touching += xo > 0;
    xo += xs[k + l] - xs[k];
    yo += ys[k + l] - ys[k];
    dif += (xs[k + l] != ys[k + l]);
    dif -= (xs[k] != ys[k]);
    while (next < schedule.size() && schedule[next] == k + 1) {
      cur.s = k + 1;
      out.push_back(cur);
      ++next;
    }
  }
  return out;
}

LyVerdict ly_from_distances(const std::vector<Rational>& d, const std::vector<std::uint64_t>& schedule,
                            const Rational& tol_low, const Rational& tol_high) {
  if (schedule.empty() || d.size() < schedule.back()) throw InvalidArgument("ly: schedule exceeds data");
  LyVerdict v;
  v.schedule = schedule;
  const std::uint64_t n = schedule.back();
  const std::uint64_t tail_from = schedule.size() >= 2 ? schedule[schedule.size() - 2] : 0;
  v.min_dist = v.max_dist = d[0];
  v.tail_max = d[tail_from];
  for (std::uint64_t i = 0; i < n; ++i) {
    v.min_dist = std::min(v.min_dist, d[i]);
    v.max_dist = std::max(v.max_dist, d[i]);
    if (i >= tail_from) v.tail_max = std::max(v.tail_max, d[i]);
  }
  v.ly = v.min_dist <= tol_low && v.max_dist >= tol_high;
  v.asymptotic = v.tail_max <= tol_low;
  return v;
}

std::set<Word> omega_language(const SymbolStream& x, std::size_t word_len, std::size_t prefix_len,
                              std::size_t tail_start) {
  if (tail_start >= prefix_len) throw InvalidArgument("omega_language needs tail_start < prefix_len");
  std::set<Word> out;
  Word p = x.prefix(prefix_len);
  for (std::size_t i = tail_start; i + word_len <= prefix_len; ++i) {
    out.emplace(p.begin() + static_cast<std::ptrdiff_t>(i),
                p.begin() + static_cast<std::ptrdiff_t>(i + word_len));
  }
  return out;
}

}  // namespace chaoslab::chaos
