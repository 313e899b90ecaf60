// One line per acceptance criterion: "criterion N [PASS|FAIL] name: detail (seconds)".
// All comparisons are exact rationals or integer counts; there is no tolerance
// anywhere except the wall-clock limits below.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "chaoslab/chaos_metrics.hpp"
#include "chaoslab/dendrite.hpp"
#include "chaoslab/gehman.hpp"
#include "chaoslab/mixing_tower.hpp"
#include "chaoslab/omega_factory.hpp"
#include "chaoslab/spacing.hpp"

using namespace chaoslab;
using words::IntegerSet;
using words::SymbolStream;
using words::Word;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no wall-clock limit
  std::function<Outcome()> run;
};

std::string frac(std::uint64_t a, std::uint64_t b) { return std::to_string(a) + "/" + std::to_string(b); }

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

void info(const std::string& line) { std::cout << "info " << line << "\n"; }

// --- dendrite ---------------------------------------------------------------

Outcome grid_recurrences() {
  auto p = dendrite::GridParams::minimal();
  dendrite::Grid g(p);
  std::vector<std::uint64_t> l(p.l.begin(), p.l.begin() + 4), L(p.L.begin() + 1, p.L.begin() + 4);
  bool ok = l == std::vector<std::uint64_t>{1, 3, 27, 3051} && L == std::vector<std::uint64_t>{2, 24, 3024} &&
            g.level_points(1) == std::vector<Rational>{Rational(1, 4), Rational(3, 4)};
  return {ok, "l=(" + join(l) + ") L=(" + join(L) + ") Z1={" + to_string(g.level_points(1)[0]) + "," +
                  to_string(g.level_points(1)[1]) + "}"};
}

Outcome top_orbit() {
  dendrite::Grid g;
  const auto& p = g.params();
  dendrite::DPoint pt = dendrite::top(g, 0, 1);
  std::vector<std::uint64_t> finish;
  unsigned level = 0;
  bool tops = true;
  for (std::uint64_t s = 1; s <= p.l[3]; ++s) {
    pt = dendrite::apply_f(pt, g);
    const auto* sp = std::get_if<dendrite::Spike>(&pt);
    tops = tops && sp && dendrite::is_top(pt);
    if (sp && sp->n != level) {
      finish.push_back(s);
      level = sp->n;
    }
  }
  bool ok = tops && finish == std::vector<std::uint64_t>{1, 3, 27, 3051};
  return {ok, "levels 0..3 finish at steps " + join(finish) + (tops ? "" : "; orbit left the spike tops")};
}

Outcome wn_bound() {
  dendrite::Grid g;
  bool ok = true;
  std::string d;
  for (unsigned n = 0; n <= 2; ++n) {
    auto c = dendrite::wn_certificate(n, g);
    ok = ok && c.pass;
    d += (n ? "; " : "") + std::string("n=") + std::to_string(n) + " max " + to_string(c.max_dist) +
         " <= " + to_string(c.bound) + " at " + dendrite::to_string(c.corner);
  }
  return {ok, d};
}

Outcome dc1_desk_scale() {
  dendrite::Grid g;
  auto rows = dendrite::dc1_certificate({2, 3}, dendrite::Base{Rational(1)}, g);
  const auto& far = rows[0];   // horizon 135
  const auto& near = rows[1];  // horizon 27459
  bool far_ok = far.frac_half() <= Rational(1, 4);
  bool near_ok = near.frac_w() >= Rational(7, 8);
  auto mirror = dendrite::dc1_certificate({2, 3}, dendrite::Base{Rational(0)}, g);
  info("criterion 4 mirrored corner (0,0): within 1/2 at horizon 135 = " +
       frac(mirror[0].within_half, mirror[0].horizon) + ", within w_3 at horizon 27459 = " +
       frac(mirror[1].within_w, mirror[1].horizon));
  return {far_ok && near_ok,
          "to (1,0): within 1/2 at horizon " + std::to_string(far.horizon) + " = " +
              frac(far.within_half, far.horizon) + (far_ok ? " <= 1/4" : " > 1/4") + "; within w_3 = " +
              to_string(near.w) + " at horizon " + std::to_string(near.horizon) + " = " +
              frac(near.within_w, near.horizon) + (near_ok ? " >= 7/8" : " < 7/8") +
              "; simulated parity puts the n=2 block at (1,0) and the n=3 block at (0,0)"};
}

Outcome no_ly_triple() {
  dendrite::Grid g;
  auto reps = dendrite::no_infinite_ly_certificate(dendrite::sample_triples(100, 1, g), 4096, g);
  std::uint64_t good = 0, equal = 0;
  for (const auto& r : reps) {
    good += r.pass;
    equal += r.pass && r.witness_dist == 0;
  }
  return {good == 100 && reps.size() == 100,
          frac(good, reps.size()) + " triples with a non-LY pair (" + std::to_string(equal) +
              " eventually equal, " + std::to_string(good - equal) + " at constant positive distance)"};
}

// --- shift classification -----------------------------------------------------

struct Pair {
  SymbolStream x, y;
  std::uint64_t horizon;
  std::size_t k_max;
};

SymbolStream bits_stream(std::mt19937_64& rng, std::size_t n, unsigned one_in) {
  Word w(n);
  for (auto& s : w) s = rng() % one_in == 0;
  return SymbolStream::from_prefix(w);
}

// 1 on [b^i, 2 b^i)
SymbolStream blocks_stream(std::size_t base, std::size_t offset) {
  return SymbolStream::indicator([base, offset](std::size_t i) {
    i += offset;
    for (std::size_t p = 1; p <= i; p *= base) {
      if (i >= p && i < 2 * p) return true;
    }
    return false;
  });
}

std::vector<Pair> seeded_pairs() {
  std::mt19937_64 rng(2024);
  std::vector<Pair> out;
  auto pstar = IntegerSet::p_star();
  for (int i = 0; i < 50; ++i) {
    std::uint64_t h = 1000 + rng() % 9001;
    std::size_t k = 1 + rng() % 10;
    const std::size_t len = h + 16;
    switch (i % 5) {
      case 0:
        out.push_back({bits_stream(rng, len, 2), bits_stream(rng, len, 2), h, k});
        break;
      case 1:
        out.push_back({SymbolStream::constant(0), blocks_stream(4 + rng() % 5, rng() % 8), h, k});
        break;
      case 2:
        out.push_back({SymbolStream::from_prefix(spacing::random_word(pstar, len, rng)),
                       SymbolStream::from_prefix(spacing::random_word(pstar, len, rng)), h, k});
        break;
      case 3: {
        auto x = bits_stream(rng, len, 3);
        out.push_back({x, x.shifted(1 + rng() % 4), h, k});
        break;
      }
      default:
        out.push_back({bits_stream(rng, len, 2), blocks_stream(2 + rng() % 3, 0), h, k});
    }
  }
  return out;
}

// dense-grid brute force: F^(n)(t) for every t = j/4096 above 2^-(k_max+1)
struct DenseVerdict {
  bool dc3 = false;
  Rational gap;
};

DenseVerdict dense_classify(const Pair& p, const std::vector<std::uint64_t>& schedule) {
  const std::size_t cap = 12;
  const std::uint64_t grid = 4096;
  std::vector<std::uint64_t> hist(cap + 1, 0);  // hist[c]: indices with common prefix c (capped)
  std::vector<std::vector<std::uint64_t>> snaps;
  std::uint64_t i = 0;
  for (auto n : schedule) {
    for (; i < n; ++i) {
      std::size_t c = 0;
      while (c < cap && p.x.at(i + c) == p.y.at(i + c)) ++c;
      ++hist[c];
    }
    snaps.push_back(hist);
  }
  DenseVerdict v;
  const Rational floor_t = pow2_neg(static_cast<unsigned>(p.k_max + 1));
  for (std::uint64_t j = 1; j <= grid; ++j) {
    Rational t = ratio(j, grid);
    if (t <= floor_t) continue;
    Rational lo = 2, hi = -1;
    for (std::size_t s = 0; s < schedule.size(); ++s) {
      std::uint64_t below = 0;
      for (std::size_t c = 0; c <= cap; ++c) {
        Rational rho = c == cap ? Rational(0) : pow2_neg(static_cast<unsigned>(c + 1));
        if (rho < t) below += snaps[s][c];
      }
      Rational f = ratio(below, schedule[s]);
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
    v.gap = std::max(v.gap, Rational(hi - lo));
  }
  v.dc3 = v.gap > Rational(1, 8);
  return v;
}

Outcome shift_breakpoints() {
  std::uint64_t agree = 0, dc3 = 0;
  std::string first_bad;
  auto pairs = seeded_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    auto sched = chaos::horizon_schedule(64, p.horizon);
    auto v = chaos::classify_shift_pair(p.x, p.y, p.k_max, sched);
    auto d = dense_classify(p, sched);
    bool same = v.dc3 == d.dc3 && v.largest_gap == d.gap;
    agree += same;
    dc3 += d.dc3;
    if (!same && first_bad.empty()) first_bad = "; first disagreement at pair " + std::to_string(i);
  }
  return {agree == pairs.size(), frac(agree, pairs.size()) + " pairs agree on DC3 verdict and largest gap (" +
                                     std::to_string(dc3) + " DC3, " + std::to_string(pairs.size() - dc3) +
                                     " not)" + first_bad};
}

Outcome dc3_inequality() {
  auto pairs = seeded_pairs();
  // plus pairs of transitive points on distinct parts of P*
  auto d = spacing::ThickDecomposition::build(IntegerSet::p_star(), 3, 20000);
  std::vector<SymbolStream> z;
  for (std::uint64_t j = 1; j <= 3; ++j) z.push_back(spacing::transitive_point(d.part(j), 8, 20000));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) pairs.push_back({z[a], z[b].shifted(b), 10000, 8});
  }
  std::uint64_t rows = 0, bad = 0;
  for (const auto& p : pairs) {
    for (const auto& r : chaos::dc3_density_criterion(p.x, p.y, chaos::horizon_schedule(1, p.horizon))) {
      ++rows;
      bad += r.disagree > r.ones_x + r.ones_y;
    }
  }
  return {bad == 0, std::to_string(pairs.size()) + " pairs, " + std::to_string(rows) + " audited horizons, " +
                        std::to_string(bad) + " violations"};
}

// --- omega certificates -----------------------------------------------------------

Outcome omega_certificate() {
  omega::CertificateParams cp;
  cp.word_len = 2;
  cp.prefix_len = 100000;
  auto g = omega::build_gamma(3, IntegerSet::p_star(), 3, cp.word_budget, cp.prefix_len);
  std::uint64_t passed = 0, unrealizable = 0;
  std::string d, missing;
  for (std::uint64_t col = 1; col <= g.base.period(); ++col) {
    auto c = omega::scramble_certificate(g, g.base.column(col), cp);
    if (!c.realizable) {
      ++unrealizable;
      missing += (missing.empty() ? "" : " ") + omega::to_string(c.indices);
      continue;
    }
    passed += c.clause_a && c.clause_b && c.clause_c;
  }
  const auto total = g.base.period();
  d = frac(passed, total) + " subsets certified with clauses (a), (b), (c)";
  if (unrealizable) d += "; " + std::to_string(unrealizable) + " subsets need a part beyond the 3 available: " + missing;

  auto g2 = omega::build_gamma(2, IntegerSet::p_star(), 3, cp.word_budget, cp.prefix_len);
  std::uint64_t two = 0;
  for (std::uint64_t col = 1; col <= g2.base.period(); ++col) {
    two += omega::scramble_certificate(g2, g2.base.column(col), cp).verdict == Verdict::pass;
  }
  info("criterion 8 with N = 2 over the same 3 parts: " + frac(two, g2.base.period()) + " subsets certified");
  return {passed == total, d};
}

// --- spacing --------------------------------------------------------------------

bool member_oracle(const Word& w, const IntegerSet& p) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] && w[j] && !p.contains(j - i)) return false;
    }
  }
  return true;
}

Outcome spacing_weak_mixing() {
  bool ok = true;
  std::string d;
  for (const auto& [name, p] : {std::pair{"N", IntegerSet::naturals()}, std::pair{"P*", IntegerSet::p_star()}}) {
    auto r = spacing::weak_mixing_check(p, 2, 10000);
    bool lang_ok = true;
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1; n <= 10; ++n) {
      std::size_t brute = 0;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        Word w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = (v >> i) & 1;
        brute += member_oracle(w, p);
      }
      auto got = spacing::language(p, n).size();
      lang_ok = lang_ok && got == brute;
      sizes.push_back(got);
    }
    ok = ok && r.verdict == Verdict::pass && lang_ok;
    d += std::string(d.empty() ? "" : "; ") + name + ": " + to_string(r.verdict) + " (largest gap " +
         std::to_string(r.largest_gap) + "), |L_1..10| = " + join(sizes) + (lang_ok ? "" : " MISMATCH");
  }
  return {ok, d};
}

// --- mixing tower ---------------------------------------------------------------------

Outcome tower_stability() {
  auto t = tower::Tower::seed(tower::zero_shift(), 12);
  t.extend_to(4);
  std::vector<std::vector<std::uint64_t>> table(4, std::vector<std::uint64_t>(13, 0));
  for (std::size_t l = 0; l <= 3; ++l) {
    for (std::size_t n = 1; n <= 12; ++n) {
      for (const auto& w : t.language(l, n)) table[l][n] = std::max<std::uint64_t>(table[l][n], words::occurrences(w, 1));
    }
  }
  bool stable = true, sub = true;
  for (std::size_t l = 0; l <= 3; ++l) {
    for (std::size_t n = 1; n <= 10; ++n) stable = stable && table[l][n] == table[0][n];
    for (std::size_t a = 1; a <= 12; ++a) {
      for (std::size_t b = 1; a + b <= 12; ++b) sub = sub && table[l][a + b] <= table[l][a] + table[l][b];
    }
  }
  std::mt19937_64 rng(1);
  std::uint64_t mixing = 0;
  for (int i = 0; i < 10; ++i) {
    std::size_t k = 1 + rng() % 3;
    const auto& lang = t.language(k, k);
    std::vector<Word> ws(lang.begin(), lang.end());
    Word u = ws[rng() % ws.size()], v = ws[rng() % ws.size()];
    mixing += tower::mixing_check(t, k + 1, u, v, 16).verdict == Verdict::pass;
  }
  std::vector<std::uint64_t> phis(table[0].begin() + 1, table[0].begin() + 11);
  return {stable && sub && mixing == 10, std::string("phi^l_n = phi^0_n for l <= 3, n <= 10: ") +
                                             (stable ? "yes" : "no") + " (phi^0 = " + join(phis) +
                                             "); subadditive: " + (sub ? "yes" : "no") + "; mixing pairs " +
                                             frac(mixing, 10) + " with window 16"};
}

// --- Gehman ---------------------------------------------------------------------------

Outcome gehman_system() {
  auto p = IntegerSet::p_star();
  gehman::GehmanSystem sys([p](const Word& w) { return spacing::is_member(w, p); });
  std::mt19937_64 rng(1);
  const std::size_t steps = 64, horizon = 256;
  std::vector<SymbolStream> codes;
  for (int i = 0; i < 20; ++i) codes.push_back(SymbolStream::from_prefix(spacing::random_word(p, horizon + steps, rng)));
  auto conj = gehman::conjugacy_check(sys, codes, steps, horizon);

  bool root_one = true, flat = true;
  auto src = sys.orbit_source(horizon);
  std::vector<Rational> bps{Rational(1, 4), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
  for (const auto& c : codes) {
    root_one = root_one && gehman::dist(gehman::Root{}, gehman::EndPoint{c}, horizon) == 1;
    auto prof = chaos::distribution<gehman::GehmanPoint>(src, gehman::Root{}, gehman::EndPoint{c}, steps, bps,
                                                         chaos::horizon_schedule(1, steps));
    flat = flat && prof.lower == prof.upper;
  }

  bool fixity = true;
  for (int i = 0; i < 100; ++i) {
    Word addr = spacing::random_word(p, 1 + rng() % 10, rng);
    std::uint64_t den = 1 + rng() % 16;
    gehman::GehmanPoint pt = gehman::ArcPoint{addr, ratio(1 + rng() % den, den)};
    std::size_t k = 0;
    while (!std::holds_alternative<gehman::Root>(pt)) {
      pt = sys.apply(pt, horizon);
      ++k;
    }
    fixity = fixity && k == addr.size();
  }
  bool ok = conj.commutes && root_one && fixity && flat;
  return {ok, std::string("commutes over 64 steps: ") + (conj.commutes ? "yes" : "no") +
                  "; dist(root, endpoint) = 1: " + (root_one ? "yes" : "no") +
                  "; 100 arc points reach the root in depth steps: " + (fixity ? "yes" : "no") +
                  "; F = F* at 5 breakpoints: " + (flat ? "yes" : "no")};
}

// --- metric axioms -----------------------------------------------------------------------

Outcome metric_axioms() {
  std::mt19937_64 rng(99);
  std::uint64_t ultra = 0, dend = 0, geh = 0;
  for (int i = 0; i < 1000; ++i) {
    Word base(24);
    for (auto& s : base) s = rng() % 2;
    std::array<SymbolStream, 3> s{SymbolStream::constant(0), SymbolStream::constant(0), SymbolStream::constant(0)};
    for (auto& x : s) {
      Word w = base;
      for (std::size_t j = rng() % 24; j < 24; ++j) w[j] = rng() % 2;
      x = SymbolStream::from_prefix(w, rng() % 2);
    }
    auto rho = [](const SymbolStream& a, const SymbolStream& b) { return words::metric_rho(a, b, 64).value.value(); };
    ultra += rho(s[0], s[2]) <= std::max(rho(s[0], s[1]), rho(s[1], s[2]));
  }

  dendrite::Grid g;
  auto dpoint = [&]() -> dendrite::DPoint {
    if (rng() % 3 == 0) {
      std::uint64_t den = 1 + rng() % 128;
      return dendrite::Base{ratio(rng() % (den + 1), den)};
    }
    unsigned n = rng() % 4;
    std::uint64_t den = 1 + rng() % 32;
    return dendrite::spike(g, n, 1 + rng() % g.params().L[n], ratio(rng() % (den + 1), den) * pow2_neg(n));
  };
  for (int i = 0; i < 1000; ++i) {
    auto a = dpoint(), b = dpoint(), c = dpoint();
    dend += dendrite::dist_d(a, c) <= dendrite::dist_d(a, b) + dendrite::dist_d(b, c);
  }

  auto gpoint = [&]() -> gehman::GehmanPoint {
    switch (rng() % 3) {
      case 0:
        return gehman::Root{};
      case 1: {
        Word a(1 + rng() % 8);
        for (auto& s : a) s = rng() % 2;
        std::uint64_t den = 1 + rng() % 16;
        return gehman::ArcPoint{a, ratio(1 + rng() % den, den)};
      }
      default: {
        Word c(40);
        for (auto& s : c) s = rng() % 2;
        return gehman::EndPoint{SymbolStream::from_prefix(c)};
      }
    }
  };
  for (int i = 0; i < 1000; ++i) {
    auto a = gpoint(), b = gpoint(), c = gpoint();
    geh += gehman::dist(a, c, 64) <= gehman::dist(a, b, 64) + gehman::dist(b, c, 64);
  }
  return {ultra == 1000 && dend == 1000 && geh == 1000,
          "ultrametric " + frac(ultra, 1000) + "; dendrite triangle " + frac(dend, 1000) + "; Gehman triangle " +
              frac(geh, 1000)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "grid-recurrences", 1, grid_recurrences},
      {2, "top-orbit-itinerary", 60, top_orbit},
      {3, "wn-bound", 0, wn_bound},
      {4, "dc1-desk-scale", 300, dc1_desk_scale},
      {5, "no-ly-triple", 300, no_ly_triple},
      {6, "shift-breakpoint-oracle", 0, shift_breakpoints},
      {7, "dc3-density-inequality", 0, dc3_inequality},
      {8, "omega-certificate", 120, omega_certificate},
      {9, "spacing-weak-mixing", 60, spacing_weak_mixing},
      {10, "tower-phi-stability", 300, tower_stability},
      {11, "gehman-system", 60, gehman_system},
      {12, "metric-axioms", 0, metric_axioms},
  };

  int failures = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit";
    }
    failures += !o.pass;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << "criterion " << c.id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << o.detail
              << " (" << t.str() << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
