#include "chaoslab/experiments.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "chaoslab/chaos_metrics.hpp"
#include "chaoslab/dendrite.hpp"
#include "chaoslab/gehman.hpp"
#include "chaoslab/mixing_tower.hpp"
#include "chaoslab/omega_factory.hpp"
#include "chaoslab/spacing.hpp"
#include "chaoslab/words.hpp"

namespace chaoslab::experiments {

namespace {

using words::IntegerSet;
using words::SymbolStream;
using words::Word;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// count/horizon, unreduced, so the raw count stays visible
std::string frac(std::uint64_t count, std::uint64_t horizon) {
  return std::to_string(count) + "/" + std::to_string(horizon);
}

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ";") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

std::string yes(bool b) { return b ? "true" : "false"; }

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& kv) : kv_(kv) {}

  std::uint64_t uint(const std::string& key, std::uint64_t def) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return def;
    try {
      std::size_t used = 0;
      auto v = std::stoull(it->second, &used);
      if (used != it->second.size() || it->second.front() == '-') throw std::invalid_argument(key);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("config key " + key + " needs a non-negative integer, got '" + it->second + "'");
    }
  }

  Rational rational(const std::string& key, const Rational& def) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) return def;
    try {
      return parse_rational(it->second);
    } catch (const Error&) {
      throw ConfigError("config key " + key + " needs a rational num/den, got '" + it->second + "'");
    }
  }

  std::string str(const std::string& key, const std::string& def) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? def : it->second;
  }

 private:
  const std::map<std::string, std::string>& kv_;
};

class Budget {
 public:
  explicit Budget(std::optional<std::uint64_t> cap) : left_(cap) {}
  void charge(std::uint64_t iterates) {
    if (!left_) return;
    if (iterates > *left_) {
      throw BudgetExceeded("iterate budget exhausted: need " + std::to_string(iterates) + ", " +
                           std::to_string(*left_) + " left");
    }
    *left_ -= iterates;
  }

 private:
  std::optional<std::uint64_t> left_;
};

using Sink = std::vector<Check>;

// Runs one check body; budget and bound exhaustion turn into an inconclusive record.
void guarded(Sink& out, const std::string& name, const std::function<Check()>& body) {
  try {
    Check c = body();
    c.name = name;
    out.push_back(std::move(c));
  } catch (const BudgetExceeded& e) {
    out.push_back({name, Verdict::inconclusive, "budget", {{"reason", e.what()}}});
  }
}

Check make(bool ok, std::string value, std::map<std::string, std::string> w = {}) {
  return {"", ok ? Verdict::pass : Verdict::fail, std::move(value), std::move(w)};
}

IntegerSet named_set(const std::string& name) {
  if (name == "N") return IntegerSet::naturals();
  if (name == "P*") return IntegerSet::p_star();
  if (name == "2N") return IntegerSet::multiples_of(2);
  throw ConfigError("unknown set '" + name + "' (expected N, P* or 2N)");
}

// --- spacing-wm ---------------------------------------------------------------

void spacing_wm(const Params& p, Budget&, Sink& out) {
  const auto m = p.uint("m", 2);
  const auto bound = p.uint("gap_bound", 10000);
  const auto lang_max = p.uint("lang_max", 10);
  for (const char* name : {"N", "P*"}) {
    auto set = named_set(name);
    guarded(out, std::string("wm-") + name, [&] {
      auto r = spacing::weak_mixing_check(set, m, bound);
      Check c{"", r.verdict, std::to_string(r.largest_gap),
              {{"quadruples", std::to_string(r.quadruples_checked)},
               {"largest_gap", std::to_string(r.largest_gap)},
               {"gap_bound", std::to_string(bound)}}};
      if (r.stuck) {
        c.witnesses["stuck"] = words::to_string((*r.stuck)[0]) + ";" + words::to_string((*r.stuck)[1]) + ";" +
                               words::to_string((*r.stuck)[2]) + ";" + words::to_string((*r.stuck)[3]);
      }
      return c;
    });
    guarded(out, std::string("language-") + name, [&] {
      std::vector<std::size_t> sizes;
      bool ok = true;
      for (std::size_t n = 1; n <= lang_max; ++n) {
        auto lang = spacing::language(set, n);
        std::size_t brute = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
          Word w(n);
          for (std::size_t i = 0; i < n; ++i) w[i] = (bits >> (n - 1 - i)) & 1;
          brute += spacing::is_member(w, set);
        }
        ok = ok && brute == lang.size();
        sizes.push_back(lang.size());
      }
      return make(ok, std::to_string(sizes.empty() ? 0 : sizes.back()), {{"sizes", join(sizes)}});
    });
  }
}

// --- thick-decomp ---------------------------------------------------------------

void thick_decomp(const Params& p, Budget&, Sink& out) {
  auto set = named_set(p.str("set", "P*"));
  const auto parts = p.uint("parts", 3);
  const auto bound = p.uint("bound", 100000);
  std::optional<spacing::ThickDecomposition> d;
  try {
    d = spacing::ThickDecomposition::build(set, parts, bound);
  } catch (const BudgetExceeded& e) {
    out.push_back({"decompose", Verdict::inconclusive, "bound", {{"reason", e.what()}}});
    return;
  } catch (const InvalidArgument&) {
    throw;
  } catch (const Error& e) {
    out.push_back({"decompose", Verdict::inconclusive, "bound", {{"reason", e.what()}}});
    return;
  }
  guarded(out, "cover-disjoint", [&] {
    std::uint64_t members = 0, bad = 0;
    for (std::uint64_t m = 1; m <= bound; ++m) {
      unsigned hits = 0;
      for (std::uint64_t j = 1; j <= parts; ++j) hits += d->in_part(m, j);
      if (set.contains(m)) {
        ++members;
        bad += hits != 1;
      } else {
        bad += hits != 0;
      }
    }
    return make(bad == 0, std::to_string(members), {{"violations", std::to_string(bad)}});
  });
  std::vector<std::string> blocks;
  for (const auto& b : d->blocks()) {
    blocks.push_back("Q" + std::to_string(b.index) + "=" + std::to_string(b.start) + ".." + std::to_string(b.last()));
  }
  out.push_back({"blocks", Verdict::pass, std::to_string(d->blocks().size()), {{"blocks", join(blocks)}}});
  for (std::uint64_t j = 1; j <= parts; ++j) {
    guarded(out, "part-" + std::to_string(j) + "-thick", [&] {
      auto bs = d->blocks_of_part(j);
      std::vector<std::string> names;
      std::uint64_t longest = 0;
      auto pj = d->part(j);
      bool ok = !bs.empty();
      for (const auto& b : bs) {
        names.push_back(std::to_string(b.start) + ".." + std::to_string(b.last()));
        longest = std::max(longest, b.index + 1);
        ok = ok && words::is_thick(pj, b.index + 1, b.start).has_value();
      }
      return make(ok, std::to_string(longest), {{"blocks", join(names)}});
    });
  }
}

// --- omega-certificate -----------------------------------------------------------

void omega_certificate(const Params& p, Budget&, Sink& out) {
  const auto n = static_cast<unsigned>(p.uint("N", 2));
  auto set = named_set(p.str("set", "P*"));
  omega::CertificateParams cp;
  cp.word_len = p.uint("word_len", 2);
  cp.prefix_len = p.uint("prefix", 100000);
  cp.tail_start = p.uint("tail_start", 512);
  cp.word_budget = p.uint("word_budget", 8);
  const auto parts = p.uint("parts", 3);
  if (n < 2 || n > 8) throw ConfigError("N must be in [2, 8]");
  std::optional<omega::GammaFamily> g;
  try {
    g = omega::build_gamma(n, set, parts, cp.word_budget, cp.prefix_len);
  } catch (const InvalidArgument&) {
    throw;
  } catch (const Error& e) {
    out.push_back({"family", Verdict::inconclusive, "bound", {{"reason", e.what()}}});
    return;
  }
  for (std::uint64_t col = 1; col <= g->base.period(); ++col) {
    auto s = g->base.column(col);
    guarded(out, "scramble-" + omega::to_string(s), [&] {
      auto cert = omega::scramble_certificate(*g, s, cp);
      Check c{"", cert.verdict, "column " + std::to_string(cert.column),
              {{"column", std::to_string(cert.column)}, {"realizable", yes(cert.realizable)}}};
      if (cert.realizable) {
        c.witnesses["clause_a"] = yes(cert.clause_a);
        c.witnesses["clause_b"] = yes(cert.clause_b);
        c.witnesses["clause_c"] = yes(cert.clause_c);
        c.witnesses["proximality"] = to_string(cert.proximality);
        c.witnesses["language_size"] = std::to_string(cert.language_size);
      }
      if (cert.failure) c.witnesses["note"] = *cert.failure;
      return c;
    });
  }
}

// --- no-dc3-spacing --------------------------------------------------------------

void no_dc3_spacing(const Params& p, Budget&, Sink& out) {
  const auto pairs = p.uint("pairs", 10);
  const auto k_max = p.uint("k_max", 8);
  const auto horizon = p.uint("horizon", 100000);
  const auto parts = p.uint("parts", 3);
  // the transitive points pack their 1s densely near the start; F and F* only see the tail
  const auto from = p.uint("schedule_from", 4096);
  std::mt19937_64 rng(p.uint("seed", 1));
  auto set = IntegerSet::p_star();
  if (from == 0 || from > horizon) throw ConfigError("schedule_from must be in [1, horizon]");
  const std::uint64_t max_shift = 1024;
  const std::uint64_t len = horizon + k_max + max_shift + 1;
  std::optional<spacing::ThickDecomposition> d;
  try {
    d = spacing::ThickDecomposition::build(set, parts, len);
  } catch (const InvalidArgument&) {
    throw;
  } catch (const Error& e) {
    out.push_back({"decompose", Verdict::inconclusive, "bound", {{"reason", e.what()}}});
    return;
  }
  std::vector<SymbolStream> z;
  for (std::uint64_t j = 1; j <= parts; ++j) z.push_back(spacing::transitive_point(d->part(j), 8, len));
  auto schedule = chaos::horizon_schedule(from, horizon);
  for (std::uint64_t t = 0; t < pairs; ++t) {
    std::uint64_t i = rng() % parts, j = (i + 1 + rng() % (parts - 1 ? parts - 1 : 1)) % parts;
    std::uint64_t a = rng() % max_shift, b = rng() % max_shift;
    auto x = z[i].shifted(a), y = z[j].shifted(b);
    std::string tag = "pair-" + std::to_string(t);
    guarded(out, tag, [&] {
      auto v = chaos::classify_shift_pair(x, y, k_max, schedule);
      return make(!v.dc3, to_string(v.largest_gap),
                  {{"points", "P" + std::to_string(i + 1) + "+" + std::to_string(a) + ";P" + std::to_string(j + 1) +
                                  "+" + std::to_string(b)},
                   {"largest_gap", to_string(v.largest_gap)},
                   {"k_max", std::to_string(k_max)},
                   {"horizon", std::to_string(horizon)}});
    });
    guarded(out, tag + "-density-chain", [&] {
      auto rows = chaos::dc3_density_criterion(x, y, schedule);
      bool ok = std::all_of(rows.begin(), rows.end(),
                            [](const chaos::DensityTriple& r) { return r.disagree <= r.ones_x + r.ones_y; });
      const auto& last = rows.back();
      return make(ok, frac(last.disagree, last.horizon),
                  {{"ones_x", frac(last.ones_x, last.horizon)}, {"ones_y", frac(last.ones_y, last.horizon)}});
    });
  }
}

// --- mixing-tower ------------------------------------------------------------------

void mixing_tower(const Params& p, Budget&, Sink& out) {
  const auto cap = p.uint("cap", 12);
  const auto levels = p.uint("levels", 3);
  const auto n_max = p.uint("n_max", 10);
  const auto pairs = p.uint("pairs", 10);
  const auto window = p.uint("window", 16);
  std::mt19937_64 rng(p.uint("seed", 1));
  if (n_max > cap) throw ConfigError("n_max exceeds cap");
  if (levels + 1 > cap) throw ConfigError("levels too deep for the cap");
  auto t = tower::Tower::seed(tower::zero_shift(), cap);
  t.extend_to(levels + 1);

  guarded(out, "phi-stability", [&] {
    bool ok = true;
    std::vector<std::uint64_t> phis;
    for (std::size_t n = 1; n <= n_max; ++n) {
      phis.push_back(t.phi(0, n));
      for (std::size_t l = 1; l <= levels; ++l) ok = ok && t.phi(l, n) == t.phi(0, n);
    }
    return make(ok, join(phis), {{"levels", std::to_string(levels)}, {"n_max", std::to_string(n_max)}});
  });
  guarded(out, "phi-subadditive", [&] {
    bool ok = true;
    for (std::size_t l = 0; l <= levels; ++l) {
      for (std::size_t a = 1; a <= cap; ++a) {
        for (std::size_t b = 1; a + b <= cap; ++b) ok = ok && t.phi(l, a + b) <= t.phi(l, a) + t.phi(l, b);
      }
    }
    return make(ok, "cap " + std::to_string(cap));
  });
  {
    std::vector<std::size_t> betas;
    for (std::size_t l = 1; l <= levels + 1; ++l) betas.push_back(t.beta_min(l));
    out.push_back({"beta-min", Verdict::pass, join(betas), {}});
  }
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const std::size_t k = 1 + rng() % std::min<std::uint64_t>(levels, 3);
    const auto& lang = t.language(k, k);
    std::vector<Word> ws(lang.begin(), lang.end());
    Word u = ws[rng() % ws.size()], v = ws[rng() % ws.size()];
    guarded(out, "mixing-" + std::to_string(i), [&] {
      auto c = tower::mixing_check(t, k + 1, u, v, window);
      return Check{"", c.verdict, c.n0 ? std::to_string(*c.n0) : "none",
                   {{"u", words::to_string(u)}, {"v", words::to_string(v)}, {"level", std::to_string(k + 1)},
                    {"window", std::to_string(window)}}};
    });
  }
  guarded(out, "audit-W", [&] {
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 1; n <= 1024; n *= 2) ns.push_back(n);
    auto rows = tower::zero_density_audit(t, tower::powers_of_two_stream(), ns);
    bool ok = std::all_of(rows.begin(), rows.end(), [](const tower::AuditRow& r) { return r.ok(); });
    return make(ok, frac(rows.back().ones, rows.back().n), {{"phi_1024", std::to_string(rows.back().phi)}});
  });
}

// --- gehman-conjugacy --------------------------------------------------------------

void gehman_conjugacy(const Params& p, Budget& budget, Sink& out) {
  const auto n_codes = p.uint("codes", 20);
  const auto steps = p.uint("steps", 64);
  const auto horizon = p.uint("horizon", 256);
  const auto n_arcs = p.uint("arcs", 20);
  std::mt19937_64 rng(p.uint("seed", 1));
  auto set = IntegerSet::p_star();
  gehman::GehmanSystem sys([set](const Word& w) { return spacing::is_member(w, set); });
  std::vector<SymbolStream> codes;
  for (std::uint64_t i = 0; i < n_codes; ++i) {
    codes.push_back(SymbolStream::from_prefix(spacing::random_word(set, horizon + steps, rng)));
  }
  guarded(out, "commutation", [&] {
    budget.charge(n_codes * steps);
    auto r = gehman::conjugacy_check(sys, codes, steps, horizon);
    Check c = make(r.commutes, std::to_string(n_codes) + " codes x " + std::to_string(steps) + " steps");
    if (r.failure) c.witnesses["note"] = *r.failure;
    return c;
  });
  guarded(out, "metric-order", [&] {
    auto r = gehman::conjugacy_check(sys, codes, 0, horizon);
    return make(r.monotone, std::to_string(r.triples) + " triples");
  });
  guarded(out, "root-endpoint", [&] {
    bool ok = true;
    for (const auto& c : codes) ok = ok && gehman::dist(gehman::Root{}, gehman::EndPoint{c}, horizon) == 1;
    return make(ok, "1/1");
  });
  guarded(out, "arc-fixity", [&] {
    bool ok = true;
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < n_arcs; ++i) {
      Word addr = spacing::random_word(set, 1 + rng() % 8, rng);
      std::uint64_t den = 1 + rng() % 16;
      gehman::GehmanPoint pt = gehman::ArcPoint{addr, ratio(1 + rng() % den, den)};
      auto depth = gehman::eventually_fixed(pt);
      std::size_t k = 0;
      while (!std::holds_alternative<gehman::Root>(pt)) {
        pt = sys.apply(pt, horizon);
        ++k;
      }
      total += k;
      ok = ok && depth && *depth == addr.size() && k == addr.size();
    }
    budget.charge(total);
    return make(ok, std::to_string(n_arcs) + " arc points");
  });
  guarded(out, "root-endpoint-F", [&] {
    budget.charge(n_codes * steps);
    auto src = sys.orbit_source(horizon);
    std::vector<Rational> bps{Rational(1, 4), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    bool ok = true;
    for (const auto& c : codes) {
      auto prof = chaos::distribution<gehman::GehmanPoint>(src, gehman::Root{}, gehman::EndPoint{c}, steps, bps,
                                                           chaos::horizon_schedule(1, steps));
      ok = ok && prof.lower == prof.upper;
    }
    return make(ok, "F = F* at " + std::to_string(bps.size()) + " breakpoints");
  });
}

// --- dendrite ------------------------------------------------------------------------

void dendrite_dc1(const Params& p, Budget& budget, Sink& out) {
  const std::string target_name = p.str("target", "1,0");
  dendrite::DPoint target;
  if (target_name == "1,0") {
    target = dendrite::Base{Rational(1)};
  } else if (target_name == "0,0") {
    target = dendrite::Base{Rational(0)};
  } else {
    throw ConfigError("target must be 1,0 or 0,0");
  }
  dendrite::Grid g;
  const auto& gp = g.params();
  guarded(out, "grid", [&] {
    bool ok = true;
    for (unsigned n = 0; n <= g.materialized(); ++n) ok = ok && g.level_points(n).size() == gp.L[n];
    std::vector<std::uint64_t> ls(gp.l.begin(), gp.l.begin() + 4);
    return make(ok, join(ls), {{"m", join(std::vector<std::uint64_t>(gp.m.begin(), gp.m.begin() + 5))},
                               {"L", join(std::vector<std::uint64_t>(gp.L.begin(), gp.L.begin() + 4))}});
  });
  guarded(out, "top-orbit", [&] {
    budget.charge(gp.l[3] + 1);
    std::vector<std::uint64_t> finish;
    dendrite::DPoint pt = dendrite::top(g, 0, 1);
    unsigned level = 0;
    bool ok = true;
    for (std::uint64_t s = 1; s <= gp.l[3]; ++s) {
      pt = dendrite::apply_f(pt, g);
      const auto* sp = std::get_if<dendrite::Spike>(&pt);
      ok = ok && sp && dendrite::is_top(pt);
      if (sp && sp->n != level) {
        finish.push_back(s);
        level = sp->n;
      }
    }
    std::vector<std::uint64_t> want(gp.l.begin(), gp.l.begin() + 4);
    return make(ok && finish == want, join(finish));
  });
  for (unsigned n = 0; n <= 2; ++n) {
    guarded(out, "wn-" + std::to_string(n), [&] {
      budget.charge(gp.l[n] + gp.m[n + 1]);
      auto c = dendrite::wn_certificate(n, g);
      return make(c.pass, to_string(c.max_dist),
                  {{"corner", dendrite::to_string(c.corner)}, {"w", to_string(c.bound)}});
    });
  }
  try {
    budget.charge(gp.l[3] + gp.m[4]);
  } catch (const BudgetExceeded& e) {
    out.push_back({"dc1", Verdict::inconclusive, "budget", {{"reason", e.what()}}});
    return;
  }
  for (const auto& r : dendrite::dc1_certificate({2, 3}, target, g)) {
    out.push_back({r.near ? "dc1-close-frac" : "dc1-far-frac", r.pass ? Verdict::pass : Verdict::fail,
                   r.near ? frac(r.within_w, r.horizon) : frac(r.within_half, r.horizon),
                   {{"n", std::to_string(r.n)},
                    {"horizon", std::to_string(r.horizon)},
                    {"bound", to_string(r.bound)},
                    {"w", to_string(r.w)},
                    {"within_w", frac(r.within_w, r.horizon)},
                    {"within_half", frac(r.within_half, r.horizon)},
                    {"target", target_name}}});
  }
}

void dendrite_asymptotic(const Params& p, Budget& budget, Sink& out) {
  const Rational eps = p.rational("eps", Rational(1, 4));
  const auto steps = p.uint("steps", 5000);
  dendrite::Grid g;
  auto a = dendrite::top(g, 0, 1);
  guarded(out, "top-lag-1", [&] {
    budget.charge(2 * steps);
    auto r = dendrite::asymptotics_check(a, dendrite::apply_f(a, g), eps, steps, g);
    return Check{"",
                 r.status == dendrite::AsymptoticStatus::asymptotic ? Verdict::pass : Verdict::inconclusive,
                 r.s ? std::to_string(*r.s) : "none",
                 {{"eps", to_string(eps)}, {"steps", std::to_string(steps)}, {"status", to_string(r.status)},
                  {"last_dist", to_string(r.last_dist)}}};
  });
  guarded(out, "top-vs-lower", [&] {
    budget.charge(2 * steps);
    auto low = dendrite::spike(g, 0, 1, Rational(7, 8));
    auto r = dendrite::asymptotics_check(a, low, eps, steps, g);
    return make(r.status == dendrite::AsymptoticStatus::eventually_fixed,
                r.fixed_at ? std::to_string(*r.fixed_at) : "none", {{"status", to_string(r.status)}});
  });
}

void no_ly_triple(const Params& p, Budget& budget, Sink& out) {
  const auto n = p.uint("triples", 100);
  const auto steps = p.uint("steps", 4096);
  dendrite::Grid g;
  auto triples = dendrite::sample_triples(n, p.uint("seed", 1), g);
  guarded(out, "triples", [&] {
    budget.charge(3 * n * steps);
    auto reps = dendrite::no_infinite_ly_certificate(triples, steps, g);
    std::uint64_t good = 0;
    Check c;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (reps[i].pass) {
        ++good;
      } else if (!c.witnesses.count("first_failure")) {
        c.witnesses["first_failure"] = std::to_string(i);
      }
    }
    c.status = good == reps.size() ? Verdict::pass : Verdict::fail;
    c.value = frac(good, reps.size());
    c.witnesses["steps"] = std::to_string(steps);
    return c;
  });
}

struct Experiment {
  std::string name;
  std::vector<std::string> keys;
  void (*fn)(const Params&, Budget&, Sink&);
};

const std::vector<Experiment>& registry() {
  static const std::vector<Experiment> r = {
      {"spacing-wm", {"m", "gap_bound", "lang_max"}, spacing_wm},
      {"thick-decomp", {"set", "parts", "bound"}, thick_decomp},
      {"omega-certificate", {"N", "set", "parts", "word_len", "prefix", "tail_start", "word_budget"}, omega_certificate},
      {"no-dc3-spacing", {"pairs", "k_max", "horizon", "parts", "schedule_from", "seed"}, no_dc3_spacing},
      {"mixing-tower", {"cap", "levels", "n_max", "pairs", "window", "seed"}, mixing_tower},
      {"gehman-conjugacy", {"codes", "steps", "horizon", "arcs", "seed"}, gehman_conjugacy},
      {"dendrite-dc1", {"target"}, dendrite_dc1},
      {"dendrite-asymptotic", {"eps", "steps"}, dendrite_asymptotic},
      {"no-ly-triple", {"triples", "steps", "seed"}, no_ly_triple},
  };
  return r;
}

}  // namespace

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError("config line " + std::to_string(no) + ": empty key or value");
    if (!kv.emplace(key, value).second) throw ConfigError("config line " + std::to_string(no) + ": duplicate key " + key);
  }
  return kv;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : registry()) n.push_back(e.name);
    n.push_back("all");
    return n;
  }();
  return names;
}

Report run(const ExperimentConfig& config) {
  std::vector<const Experiment*> chosen;
  for (const auto& e : registry()) {
    if (config.experiment == "all" || config.experiment == e.name) chosen.push_back(&e);
  }
  if (chosen.empty()) throw ConfigError("unknown experiment '" + config.experiment + "'");
  std::set<std::string> allowed;
  for (const auto* e : chosen) allowed.insert(e->keys.begin(), e->keys.end());
  for (const auto& [k, v] : config.params) {
    if (!allowed.count(k)) throw ConfigError("config key '" + k + "' is not used by " + config.experiment);
  }

  Report rep;
  rep.experiment = config.experiment;
  rep.config = config.params;
  if (config.budget) rep.config["CHAOSLAB_BUDGET"] = std::to_string(*config.budget);
  Params params(config.params);
  Budget budget(config.budget);
  for (const auto* e : chosen) {
    Sink sink;
    e->fn(params, budget, sink);
    for (auto& c : sink) {
      if (chosen.size() > 1) c.name = e->name + "/" + c.name;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "structured-text") return Format::structured_text;
  if (name == "comma-separated-table") return Format::table;
  return std::nullopt;
}

std::string file_name(Format f) { return f == Format::table ? "report.csv" : "report.json"; }

int exit_code(const Report& report) {
  bool fail = false, inconclusive = false;
  for (const auto& c : report.checks) {
    fail = fail || c.status == Verdict::fail;
    inconclusive = inconclusive || c.status == Verdict::inconclusive;
  }
  if (fail) return 1;
  return inconclusive ? 3 : 0;
}

std::string emit(const Report& report, Format f) {
  if (f == Format::table) {
    std::string out = "check, value, status\n";
    for (const auto& c : report.checks) out += c.name + ", " + c.value + ", " + to_string(c.status) + "\n";
    return out;
  }
  nlohmann::json j;
  j["experiment"] = report.experiment;
  j["config"] = report.config;
  j["checks"] = nlohmann::json::array();
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"inconclusive", 0}};
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"value", c.value},
                           {"witnesses", c.witnesses}});
    ++counts[to_string(c.status)];
  }
  j["summary"] = counts;
  j["summary"]["exit_code"] = exit_code(report);
  return j.dump(2) + "\n";
}

}  // namespace chaoslab::experiments
