#include "chaoslab/mixing_tower.hpp"

#include <algorithm>

namespace chaoslab::tower {

namespace {

bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

Word powers_of_two_prefix(std::size_t n) {
  Word w(n, 0);
  for (std::size_t i = 1; i < n; i = 2 * i + 1) w[i] = 1;
  return w;
}

std::size_t ones(const Word& w) { return words::occurrences(w, 1); }

}  // namespace

BaseShift zero_shift() {
  return {"zero",
          [](const Word& w) { return std::all_of(w.begin(), w.end(), [](words::Symbol s) { return s == 0; }); },
          [](std::size_t) { return std::uint64_t{0}; }};
}

SymbolStream powers_of_two_stream() {
  return SymbolStream([](std::size_t i) { return static_cast<words::Symbol>(i >= 1 && is_pow2(i + 1)); });
}

bool in_powers_of_two_language(const Word& w) {
  if (ones(w) == 0) return true;
  // every factor shows up before position 8|w| + 16: multi-1 words only near the
  // start, single-1 words once gaps exceed 2|w|
  Word p = powers_of_two_prefix(8 * w.size() + 16);
  return std::search(p.begin(), p.end(), w.begin(), w.end()) != p.end();
}

std::uint64_t powers_of_two_phi(std::size_t n) {
  if (n == 0) return 0;
  Word p = powers_of_two_prefix(8 * n + 16);
  std::uint64_t cur = 0, best = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    cur += p[i];
    if (i >= n) cur -= p[i - n];
    best = std::max(best, cur);
  }
  return best;
}

// ---------------------------------------------------------------------------

Tower Tower::seed(BaseShift x, std::size_t cap) {
  if (cap < 2 || cap > 16) throw InvalidArgument("tower depth cap must be in [2, 16]");
  Tower t(std::move(x), cap);
  std::vector<std::set<Word>> level0(cap + 1);
  for (std::size_t n = 0; n <= cap; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      Word w(n);
      for (std::size_t i = 0; i < n; ++i) w[i] = (bits >> (n - 1 - i)) & 1;
      if (t.x_.contains(w)) level0[n].insert(w);
    }
    for (auto& [w, pos] : words::language_of_stream(powers_of_two_stream(), n, 8 * n + 16)) {
      level0[n].insert(w);
    }
  }
  t.langs_.push_back(std::move(level0));
  t.glue_.emplace_back();
  t.beta_.push_back(0);

  // density premise on the sampled scales
  Rational prev(2);
  for (std::size_t n = 1; n <= cap; n *= 2) {
    Rational r = ratio(t.phi(0, n), n);
    if (r > prev) throw Error("seed violates the density premise at n = " + std::to_string(n));
    prev = r;
  }
  if (Rational(static_cast<long>(t.phi(0, cap)), static_cast<long>(cap)) > Rational(1, 2)) {
    throw Error("seed violates the density premise at the depth cap");
  }
  return t;
}

void Tower::check_level(std::size_t level) const {
  if (level >= levels()) throw InvalidArgument("tower level " + std::to_string(level) + " not built");
}

const std::set<Word>& Tower::language(std::size_t level, std::size_t n) const {
  check_level(level);
  if (n > cap_) throw BudgetExceeded("language depth " + std::to_string(n) + " beyond cap");
  return langs_[level][n];
}

std::uint64_t Tower::phi(std::size_t level, std::size_t n) const {
  std::uint64_t best = 0;
  for (const auto& w : language(level, n)) best = std::max<std::uint64_t>(best, ones(w));
  return best;
}

std::uint64_t Tower::phi0(std::size_t n) const {
  if (n <= cap_) return phi(0, n);
  return std::max(x_.phi(n), powers_of_two_phi(n));
}

std::size_t Tower::beta_min(std::size_t j_level) const {
  if (j_level == 0 || j_level >= levels()) throw InvalidArgument("no such J level");
  return beta_[j_level];
}

const std::vector<Word>& Tower::glue(std::size_t j_level) const {
  if (j_level == 0 || j_level >= levels()) throw InvalidArgument("no such J level");
  return glue_[j_level];
}

void Tower::extend() {
  const std::size_t l = levels();
  std::vector<Word> glue;
  std::size_t beta = 0;
  if (l == 1) {
    glue = {Word{1}};
    beta = 2;
  } else {
    const auto& prev = language(l - 1, l - 1);
    glue.assign(prev.begin(), prev.end());
    const std::uint64_t need = 2 * phi(l - 1, l - 1);
    for (std::size_t b = 1; b <= (std::size_t{1} << 20); ++b) {
      if (phi0(b) > need) {
        beta = b;
        break;
      }
    }
    if (beta == 0) throw BudgetExceeded("no beta with phi_beta > " + std::to_string(need));
  }
  std::vector<std::set<Word>> next(cap_ + 1);
  for (std::size_t n = 0; n <= cap_; ++n) {
    next[n] = langs_[l - 1][n];
    auto extra = j_factors(glue, beta, n);
    next[n].insert(extra.begin(), extra.end());
  }
  langs_.push_back(std::move(next));
  glue_.push_back(std::move(glue));
  beta_.push_back(beta);
}

void Tower::extend_to(std::size_t level) {
  while (levels() <= level) extend();
}

bool Tower::in_seed(const Word& w) const { return x_.contains(w) || in_powers_of_two_language(w); }

bool Tower::in_j(std::size_t j_level, const Word& w) const {
  const auto& g = glue(j_level);
  const std::size_t beta = beta_min(j_level);
  std::vector<long> pos;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) pos.push_back(static_cast<long>(i));
  }
  if (pos.empty()) return true;
  const long len = static_cast<long>(w.size());
  const long gl = static_cast<long>(g.front().size());
  if (gl == 0) return false;

  // some glue word agrees with w on the overlap of [p, p + gl) and [0, len)
  auto fits = [&](long p) {
    for (const auto& u : g) {
      bool ok = true;
      for (long i = std::max(p, 0L); i < std::min(p + gl, len) && ok; ++i) ok = w[i] == u[i - p];
      if (ok) return true;
    }
    return false;
  };

  const long f = pos.front(), last = pos.back();
  // all 1s inside one glue word; the other one sits out of view
  for (long p = last - gl + 1; p <= f; ++p) {
    if (fits(p)) return true;
  }
  // 1s split between u at p and v at q >= p + gl + beta
  for (long p = f - gl + 1; p <= f; ++p) {
    auto r = std::find_if(pos.begin(), pos.end(), [&](long i) { return i >= p + gl; });
    if (r == pos.end()) continue;
    if (!fits(p)) continue;
    for (long q = std::max(p + gl + static_cast<long>(beta), last - gl + 1); q <= *r; ++q) {
      if (fits(q)) return true;
    }
  }
  return false;
}

bool Tower::contains(std::size_t level, const Word& w) const {
  check_level(level);
  if (in_seed(w)) return true;
  for (std::size_t k = 1; k <= level; ++k) {
    if (in_j(k, w)) return true;
  }
  return false;
}

std::set<Word> j_factors(const std::vector<Word>& glue, std::size_t beta, std::size_t n) {
  std::set<Word> out;
  for (const auto& u : glue) {
    for (const auto& v : glue) {
      for (std::size_t b = beta; b <= std::max(beta, n); ++b) {
        Word s(n, 0);
        s.insert(s.end(), u.begin(), u.end());
        s.resize(s.size() + b, 0);
        s.insert(s.end(), v.begin(), v.end());
        s.resize(s.size() + n, 0);
        for (std::size_t i = 0; i + n <= s.size(); ++i) {
          out.emplace(s.begin() + static_cast<std::ptrdiff_t>(i),
                      s.begin() + static_cast<std::ptrdiff_t>(i + n));
        }
      }
    }
  }
  return out;
}

SymbolStream j_point(const Word& u, std::size_t beta, const Word& v, std::size_t alpha) {
  Word w(alpha, 0);
  w.insert(w.end(), u.begin(), u.end());
  w.resize(w.size() + beta, 0);
  w.insert(w.end(), v.begin(), v.end());
  return SymbolStream::from_prefix(std::move(w));
}

MixingCertificate mixing_check(const Tower& t, std::size_t level, const Word& u, const Word& v,
                               std::size_t window, std::uint64_t search_cap) {
  MixingCertificate c;
  c.level = level;
  c.window = window;
  if (!t.contains(level, u) || !t.contains(level, v)) throw InvalidArgument("mixing_check words not in level");
  std::uint64_t streak = 0;
  for (std::uint64_t n = 0; n <= search_cap + window; ++n) {
    Word w = u;
    w.resize(w.size() + n, 0);
    w.insert(w.end(), v.begin(), v.end());
    streak = t.contains(level, w) ? streak + 1 : 0;
    if (streak == window + 1) {
      c.n0 = n - window;
      c.verdict = Verdict::pass;
      return c;
    }
  }
  return c;
}

std::vector<AuditRow> zero_density_audit(const Tower& t, const SymbolStream& y,
                                         const std::vector<std::uint64_t>& ns) {
  std::vector<AuditRow> out;
  std::uint64_t count = 0, i = 0;
  for (std::uint64_t n : ns) {
    for (; i < n; ++i) count += y.at(i);
    out.push_back({n, count, t.phi0(n)});
  }
  return out;
}

}  // namespace chaoslab::tower
