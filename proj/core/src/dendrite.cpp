#include "chaoslab/dendrite.hpp"

#include <algorithm>
#include <random>

namespace chaoslab::dendrite {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("grid counts overflow 64 bits");
  return r;
}

GridParams complete(std::vector<std::uint64_t> m) {
  GridParams p;
  p.m = std::move(m);
  std::uint64_t prev_l = 0;
  for (std::size_t i = 0; i < p.m.size(); ++i) {
    std::uint64_t big_l = checked_mul(prev_l + 1, p.m[i]);
    p.L.push_back(big_l);
    prev_l += big_l;
    p.l.push_back(prev_l);
  }
  return p;
}

Rational foot(const DPoint& p) { return std::visit([](const auto& q) { return q.x; }, p); }

Rational y_of(const DPoint& p) {
  if (const auto* s = std::get_if<Spike>(&p)) return s->y;
  return Rational(0);
}

}  // namespace

GridParams GridParams::minimal(unsigned depth) {
  if (depth > 5) throw InvalidArgument("minimal multipliers overflow beyond level 5");
  std::vector<std::uint64_t> m{1};
  std::uint64_t l = 1;
  for (unsigned i = 1; i <= depth; ++i) {
    m.push_back(checked_mul(std::uint64_t{1} << (i - 1), l));
    l += checked_mul(l + 1, m.back());
  }
  return complete(std::move(m));
}

GridParams GridParams::with_multipliers(std::vector<std::uint64_t> m) {
  if (m.empty() || m[0] != 1) throw InvalidArgument("multipliers must start with m_0 = 1");
  auto p = complete(m);
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (m[i + 1] < checked_mul(std::uint64_t{1} << i, p.l[i])) {
      throw InvalidArgument("m_" + std::to_string(i + 1) + " below 2^" + std::to_string(i) + " l_" +
                            std::to_string(i));
    }
  }
  return p;
}

Grid::Grid(GridParams params, unsigned materialized) : params_(std::move(params)), materialized_(materialized) {
  if (params_.depth() < materialized_ + 1) throw InvalidArgument("multipliers do not reach the lazy level");
  z_.push_back({Rational(1, 2)});
  x_.push_back({Rational(0), Rational(1, 2), Rational(1)});
  for (unsigned n = 0; n < materialized_; ++n) {
    const auto& xs = x_[n];
    const std::uint64_t m = params_.m[n + 1];
    std::vector<Rational> zs, merged;
    zs.reserve(params_.L[n + 1]);
    merged.reserve(xs.size() + params_.L[n + 1]);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      merged.push_back(xs[i]);
      Rational width = xs[i + 1] - xs[i];
      for (std::uint64_t k = 1; k <= m; ++k) {
        Rational q = xs[i] + ratio(k, m + 1) * width;
        zs.push_back(q);
        merged.push_back(q);
      }
    }
    merged.push_back(xs.back());
    z_.push_back(std::move(zs));
    x_.push_back(std::move(merged));
  }
}

Rational Grid::z(unsigned n, std::uint64_t k) const {
  if (n > max_level()) throw BudgetExceeded("grid level " + std::to_string(n) + " beyond the lazy level");
  if (k < 1 || k > params_.L[n]) throw InvalidArgument("grid index out of range");
  if (n <= materialized_) return z_[n][k - 1];
  const std::uint64_t m = params_.m[n];
  const std::uint64_t i = (k - 1) / m, off = (k - 1) % m + 1;
  const auto& xs = x_[n - 1];
  Rational q = xs[i] + ratio(off, m + 1) * (xs[i + 1] - xs[i]);
  return q;
}

const std::vector<Rational>& Grid::level_points(unsigned n) const {
  if (n > materialized_) throw BudgetExceeded("level " + std::to_string(n) + " is not materialized");
  return z_[n];
}

const std::vector<Rational>& Grid::merged(unsigned n) const {
  if (n > materialized_) throw BudgetExceeded("level " + std::to_string(n) + " is not materialized");
  return x_[n];
}

// ---------------------------------------------------------------------------

std::array<Rational, 2> coords(const DPoint& p) { return {foot(p), y_of(p)}; }

std::string to_string(const DPoint& p) {
  if (const auto* s = std::get_if<Spike>(&p)) {
    return "(" + chaoslab::to_string(s->x) + "," + chaoslab::to_string(s->y) + ")";
  }
  return "(" + chaoslab::to_string(std::get<Base>(p).x) + ",0/1)";
}

DPoint spike(const Grid& g, unsigned n, std::uint64_t k, const Rational& y) {
  Rational x = g.z(n, k);
  if (y == 0) return Base{x};
  if (y < 0 || y > pow2_neg(n)) throw InvalidArgument("spike height out of range");
  return Spike{n, k, x, y};
}

DPoint top(const Grid& g, unsigned n, std::uint64_t k) { return spike(g, n, k, pow2_neg(n)); }

bool is_top(const DPoint& p) {
  const auto* s = std::get_if<Spike>(&p);
  return s && s->y == pow2_neg(s->n);
}

Rational phi(unsigned n, const Rational& y) { return 4 * (y - 3 * pow2_neg(n + 2)); }

std::pair<unsigned, std::uint64_t> next_foot(const Grid& g, unsigned n, std::uint64_t k) {
  const auto& big_l = g.params().L;
  if (n % 2 == 0) {
    if (k != big_l[n]) return {n, k + 1};
    if (n + 1 >= big_l.size()) throw BudgetExceeded("walk leaves the multiplier table");
    return {n + 1, big_l[n + 1]};
  }
  if (k != 1) return {n, k - 1};
  return {n + 1, 1};
}

DPoint apply_f(const DPoint& p, const Grid& g) {
  const auto* s = std::get_if<Spike>(&p);
  if (!s) return p;
  const Rational upper = 3 * pow2_neg(s->n + 2);
  const Rational lower = pow2_neg(s->n + 1);
  if (s->y >= upper) {
    auto [n2, k2] = next_foot(g, s->n, s->k);
    Rational h = phi(s->n, s->y);
    if (n2 != s->n) h /= 2;
    return spike(g, n2, k2, h);
  }
  if (s->y >= lower) {
    // linear from the own foot (at y = lower) to the next foot (at y = upper)
    auto [n2, k2] = next_foot(g, s->n, s->k);
    Rational t = (s->y - lower) / pow2_neg(s->n + 2);
    return Base{s->x + t * (g.z(n2, k2) - s->x)};
  }
  return Base{s->x};
}

Rational dist_d(const DPoint& a, const DPoint& b) {
  const auto* sa = std::get_if<Spike>(&a);
  const auto* sb = std::get_if<Spike>(&b);
  if (sa && sb && sa->n == sb->n && sa->k == sb->k) return abs(sa->y - sb->y);
  return y_of(a) + abs(foot(a) - foot(b)) + y_of(b);
}

Orbit orbit(const DPoint& start, std::size_t steps, const Grid& g) {
  Orbit o;
  o.points.reserve(steps + 1);
  o.points.push_back(start);
  for (std::size_t i = 0; i < steps; ++i) o.points.push_back(apply_f(o.points.back(), g));
  for (const auto& p : o.points) {
    if (const auto* s = std::get_if<Spike>(&p)) {
      o.itinerary.emplace_back(s->n, s->k);
    } else {
      o.itinerary.emplace_back(kBaseLevel, 0);
    }
  }
  return o;
}

chaos::OrbitSource<DPoint> orbit_source(const Grid& g) {
  return {[&g](const DPoint& p) { return apply_f(p, g); }, [](const DPoint& a, const DPoint& b) { return dist_d(a, b); },
          Rational(3)};
}

// ---------------------------------------------------------------------------

Rational w_bound(const GridParams& p, unsigned n) {
  return ratio(1, p.l.at(n) + 1) + pow2_neg(n);
}

WnCertificate wn_certificate(unsigned n, const Grid& g) {
  const auto& p = g.params();
  const std::uint64_t ln = p.l.at(n), m = p.m.at(n + 1);
  // the corner is where the level n+1 walk starts, i.e. the end nearer f^{l_n}(1/2,1)
  DPoint pt = top(g, 0, 1);
  for (std::uint64_t i = 1; i <= ln; ++i) pt = apply_f(pt, g);
  const DPoint right = Base{Rational(1)}, left = Base{Rational(0)};
  WnCertificate cert;
  cert.n = n;
  cert.corner = dist_d(pt, right) <= dist_d(pt, left) ? right : left;
  std::vector<Rational> d;
  for (std::uint64_t j = 1; j <= m; ++j) {
    pt = apply_f(pt, g);
    d.push_back(dist_d(pt, cert.corner));
    cert.max_dist = std::max(cert.max_dist, d.back());
  }
  cert.bound = w_bound(p, n);
  for (std::uint64_t j = 1; j <= m; ++j) {
    if (d[j - 1] > cert.bound) {
      cert.violating_j = j;
      break;
    }
  }
  cert.pass = !cert.violating_j;
  return cert;
}

std::vector<Dc1Row> dc1_certificate(const std::vector<unsigned>& ns, const DPoint& target, const Grid& g) {
  const auto& p = g.params();
  std::uint64_t last = 0;
  for (unsigned n : ns) last = std::max(last, p.l.at(n) + p.m.at(n + 1));
  std::vector<Rational> d;
  d.reserve(last + 1);
  DPoint pt = top(g, 0, 1);
  for (std::uint64_t i = 0; i <= last; ++i) {
    d.push_back(dist_d(pt, target));
    if (i < last) pt = apply_f(pt, g);
  }
  std::vector<Dc1Row> rows;
  for (unsigned n : ns) {
    Dc1Row r;
    r.n = n;
    const std::uint64_t ln = p.l[n], m = p.m[n + 1];
    r.horizon = ln + m;
    r.w = w_bound(p, n);
    Rational block_max(0);
    for (std::uint64_t i = 0; i < r.horizon; ++i) {
      r.within_w += d[i] < r.w;
      r.within_half += d[i] < Rational(1, 2);
    }
    for (std::uint64_t j = 1; j <= m; ++j) block_max = std::max(block_max, d[ln + j]);
    r.near = block_max <= r.w;
    if (r.near) {
      r.bound = ratio(m, r.horizon);
      r.pass = r.frac_w() >= r.bound;
    } else {
      r.bound = ratio(ln, r.horizon);
      r.pass = r.frac_half() <= r.bound;
    }
    rows.push_back(r);
  }
  return rows;
}

const char* to_string(AsymptoticStatus s) {
  switch (s) {
    case AsymptoticStatus::asymptotic:
      return "asymptotic";
    case AsymptoticStatus::eventually_fixed:
      return "eventually-fixed";
    case AsymptoticStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

AsymptoticResult asymptotics_check(const DPoint& x, const DPoint& y, const Rational& eps,
                                   std::uint64_t budget, const Grid& g) {
  AsymptoticResult res;
  DPoint a = x, b = y;
  std::optional<std::uint64_t> last_bad;
  for (std::uint64_t r = 0; r <= budget; ++r) {
    if (std::holds_alternative<Base>(a) || std::holds_alternative<Base>(b)) {
      if (a != b) {
        res.status = AsymptoticStatus::eventually_fixed;
        res.fixed_at = r;
        res.last_dist = dist_d(a, b);
        return res;
      }
    }
    res.last_dist = dist_d(a, b);
    if (res.last_dist >= eps) last_bad = r;
    if (r < budget) {
      a = apply_f(a, g);
      b = apply_f(b, g);
    }
  }
  if (!last_bad) {
    res.s = 0;
  } else if (*last_bad < budget) {
    res.s = *last_bad + 1;
  }
  res.status = res.s ? AsymptoticStatus::asymptotic : AsymptoticStatus::inconclusive;
  return res;
}

std::vector<TripleReport> no_infinite_ly_certificate(const std::vector<std::array<DPoint, 3>>& triples,
                                                     std::uint64_t budget, const Grid& g) {
  std::vector<TripleReport> out;
  for (const auto& t : triples) {
    TripleReport rep;
    rep.points = t;
    std::array<DPoint, 3> end = t;
    for (int i = 0; i < 3; ++i) {
      DPoint p = t[i];
      for (std::uint64_t r = 0; r <= budget; ++r) {
        if (std::holds_alternative<Base>(p)) {
          rep.fixed_at[i] = r;
          break;
        }
        if (r < budget) p = apply_f(p, g);
      }
      end[i] = p;
    }
    int unfixed = 0;
    for (int i = 0; i < 3; ++i) unfixed += !rep.fixed_at[i];
    for (int i = 0; i < 3 && !rep.witness; ++i) {
      for (int j = i + 1; j < 3 && !rep.witness; ++j) {
        if (!rep.fixed_at[i] || !rep.fixed_at[j]) continue;
        // base points are fixed; confirm one more step changes nothing
        Rational d0 = dist_d(end[i], end[j]);
        Rational d1 = dist_d(apply_f(end[i], g), apply_f(end[j], g));
        if (d0 == d1) {
          rep.witness = std::make_pair(i, j);
          rep.witness_dist = d0;
        }
      }
    }
    rep.pass = unfixed <= 1 && rep.witness.has_value();
    out.push_back(rep);
  }
  return out;
}

std::vector<std::array<DPoint, 3>> sample_triples(std::size_t count, std::uint64_t seed, const Grid& g) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  const unsigned levels = std::min(g.materialized(), 3u);
  auto top_point = [&]() {
    unsigned n = static_cast<unsigned>(pick(0, levels));
    return top(g, n, pick(1, g.params().L[n]));
  };
  auto lower_point = [&]() -> DPoint {
    if (pick(0, 3) == 0) {
      std::uint64_t b = pick(1, 64);
      return Base{ratio(pick(0, b), b)};
    }
    unsigned n = static_cast<unsigned>(pick(0, levels));
    std::uint64_t b = pick(2, 64);
    Rational y = ratio(pick(1, b - 1), b) * pow2_neg(n);
    return spike(g, n, pick(1, g.params().L[n]), y);
  };
  std::vector<std::array<DPoint, 3>> out;
  for (std::size_t i = 0; i < count; ++i) {
    DPoint first = pick(0, 1) == 0 ? top_point() : lower_point();
    DPoint second = lower_point();
    DPoint third = lower_point();
    out.push_back({first, second, third});
  }
  return out;
}

}  // namespace chaoslab::dendrite
