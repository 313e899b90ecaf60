#include "chaoslab/spacing.hpp"

#include <algorithm>

namespace chaoslab::spacing {

namespace {

std::vector<std::size_t> ones_of(std::span<const Symbol> w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 1) {
      out.push_back(i);
    } else if (w[i] != 0) {
      throw InvalidArgument("spacing shifts are binary");
    }
  }
  return out;
}

// membership of 1..n in P, index 0 unused
std::vector<bool> table(const SpacingSet& p, std::uint64_t n) {
  std::vector<bool> t(n + 1, false);
  for (std::uint64_t d = 1; d <= n; ++d) t[d] = p.contains(d);
  return t;
}

}  // namespace

bool is_member(std::span<const Symbol> w, const SpacingSet& p) {
  auto ones = ones_of(w);
  for (std::size_t a = 0; a < ones.size(); ++a) {
    for (std::size_t b = a + 1; b < ones.size(); ++b) {
      if (!p.contains(ones[b] - ones[a])) return false;
    }
  }
  return true;
}

std::vector<Word> language(const SpacingSet& p, std::size_t n, std::size_t guard) {
  if (n > guard) throw InvalidArgument("language length " + std::to_string(n) + " above guard");
  auto in_p = table(p, n);
  std::vector<Word> out;
  Word w;
  std::vector<std::size_t> ones;
  // depth-first in lexicographic order; a new 1 only needs checking against earlier 1s
  auto rec = [&](auto&& self) -> void {
    if (w.size() == n) {
      out.push_back(w);
      return;
    }
    std::size_t i = w.size();
    w.push_back(0);
    self(self);
    w.back() = 1;
    bool ok = std::all_of(ones.begin(), ones.end(), [&](std::size_t a) { return in_p[i - a]; });
    if (ok) {
      ones.push_back(i);
      self(self);
      ones.pop_back();
    }
    w.pop_back();
  };
  rec(rec);
  return out;
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("cantor_unpair is defined on n >= 1");
  // diagonal d holds a + b = d + 1, entries (1,d), (2,d-1), ...
  std::uint64_t d = 1;
  std::uint64_t before = 0;
  while (before + d < n) {
    before += d;
    ++d;
  }
  std::uint64_t pos = n - before;  // 1..d
  // n = 2 -> (1,2), n = 3 -> (2,1)
  return {pos, d + 1 - pos};
}

ThickDecomposition ThickDecomposition::build(const SpacingSet& p, std::uint64_t parts,
                                             std::uint64_t bound) {
  if (parts == 0) throw InvalidArgument("thick decomposition needs at least one part");
  std::vector<Block> blocks;
  std::uint64_t after = 0;  // blocks must start strictly after this
  for (std::uint64_t n = 2;; ++n) {
    std::uint64_t run = 0;
    std::optional<std::uint64_t> start;
    for (std::uint64_t m = after + 1; m <= bound + n; ++m) {
      run = p.contains(m) ? run + 1 : 0;
      if (run == n + 1) {
        start = m - n;
        break;
      }
    }
    if (!start || *start > bound) break;
    blocks.push_back({n, *start});
    after = *start + n;
  }
  ThickDecomposition d(p, parts, bound, std::move(blocks));
  for (std::uint64_t j = 1; j <= parts; ++j) {
    if (d.blocks_of_part(j).empty()) {
      throw Error("insufficient thickness below " + std::to_string(bound) + ": part " +
                  std::to_string(j) + " receives no block");
    }
  }
  return d;
}

std::optional<std::uint64_t> ThickDecomposition::block_of(std::uint64_t m) const {
  if (m > bound_) {
    bool inside = std::any_of(blocks_.begin(), blocks_.end(),
                              [&](const Block& b) { return b.start <= m && m <= b.last(); });
    if (!inside) throw BudgetExceeded("decomposition is exact only up to " + std::to_string(bound_));
  }
  if (!p_.contains(m)) return std::nullopt;
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), m,
                             [](std::uint64_t v, const Block& b) { return v < b.start; });
  if (it != blocks_.begin() && m <= std::prev(it)->last()) return std::prev(it)->index;
  return 1;
}

std::uint64_t ThickDecomposition::part_of_block(std::uint64_t n) const {
  return std::min(cantor_unpair(n).first, parts_);
}

bool ThickDecomposition::in_part(std::uint64_t m, std::uint64_t part) const {
  auto n = block_of(m);
  return n && part_of_block(*n) == part;
}

IntegerSet ThickDecomposition::part(std::uint64_t j) const {
  auto self = std::make_shared<const ThickDecomposition>(*this);
  return IntegerSet([self, j](std::uint64_t m) { return self->in_part(m, j); },
                    p_.label() + "_" + std::to_string(j));
}

std::vector<Block> ThickDecomposition::blocks_of_part(std::uint64_t j) const {
  std::vector<Block> out;
  for (const auto& b : blocks_) {
    if (part_of_block(b.index) == j) out.push_back(b);
  }
  return out;
}

// ---------------------------------------------------------------------------

Word random_word(const SpacingSet& p, std::size_t len, std::mt19937_64& rng) {
  auto in_p = table(p, len);
  Word w(len, 0);
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < len; ++i) {
    if (rng() % 2 == 0) continue;
    if (std::all_of(ones.begin(), ones.end(), [&](std::size_t a) { return in_p[i - a]; })) {
      w[i] = 1;
      ones.push_back(i);
    }
  }
  return w;
}

SymbolStream transitive_point(const SpacingSet& p, std::size_t word_budget, std::size_t bound) {
  if (word_budget == 0) throw InvalidArgument("transitive_point needs word_budget >= 1");
  auto in_p = table(p, bound);
  std::uint64_t hole = 1;  // least distance not in P
  while (hole <= bound && in_p[hole]) ++hole;

  std::vector<std::pair<Word, std::vector<std::size_t>>> round;
  for (std::size_t k = 1; k <= word_budget; ++k) {
    for (auto& w : language(p, k, std::max<std::size_t>(word_budget, 24))) {
      auto ones = ones_of(w);
      round.emplace_back(std::move(w), std::move(ones));
    }
  }

  Word z;
  z.reserve(bound);
  std::vector<std::size_t> ones;
  auto fits = [&](std::size_t s, const std::vector<std::size_t>& wo) {
    if (wo.empty() || ones.empty()) return true;
    if (s + wo.back() - ones.front() < hole) return true;
    for (std::size_t b : wo) {
      for (std::size_t a : ones) {
        if (!in_p[s + b - a]) return false;
      }
    }
    return true;
  };

  bool stuck = false;
  while (!stuck && z.size() < bound) {
    for (const auto& [w, wo] : round) {
      std::size_t len = z.size();
      std::optional<std::size_t> start;
      for (std::size_t s = len; s + w.size() <= bound; ++s) {
        if (fits(s, wo)) {
          start = s;
          break;
        }
      }
      if (!start) {
        stuck = true;
        break;
      }
      z.resize(*start, 0);
      z.insert(z.end(), w.begin(), w.end());
      for (std::size_t b : wo) ones.push_back(*start + b);
    }
  }
  z.resize(bound, 0);
  auto shared = std::make_shared<const Word>(std::move(z));
  return SymbolStream([shared](std::size_t i) { return (*shared)[i]; }, bound);
}

std::optional<std::uint64_t> common_gap(const SpacingSet& p, std::span<const Symbol> u1,
                                        std::span<const Symbol> u2, std::span<const Symbol> v1,
                                        std::span<const Symbol> v2, std::uint64_t bound) {
  auto ou1 = ones_of(u1), ou2 = ones_of(u2), ov1 = ones_of(v1), ov2 = ones_of(v2);
  auto ok = [&](std::uint64_t n, std::span<const Symbol> u, const std::vector<std::size_t>& ou,
                const std::vector<std::size_t>& ov) {
    for (std::size_t a : ou) {
      for (std::size_t b : ov) {
        if (!p.contains(u.size() - a + n + b)) return false;
      }
    }
    return true;
  };
  if (!is_member(u1, p) || !is_member(u2, p) || !is_member(v1, p) || !is_member(v2, p)) {
    return std::nullopt;
  }
  for (std::uint64_t n = 0; n <= bound; ++n) {
    if (ok(n, u1, ou1, ov1) && ok(n, u2, ou2, ov2)) return n;
  }
  return std::nullopt;
}

WeakMixingResult weak_mixing_check(const SpacingSet& p, std::size_t m, std::uint64_t bound) {
  auto lang = language(p, m);
  const std::size_t k = lang.size();
  // good[u * k + v][n]: u 0^n v is a language word
  std::vector<std::vector<bool>> good(k * k);
  auto in_p = table(p, bound + 2 * m);
  for (std::size_t u = 0; u < k; ++u) {
    auto ou = ones_of(lang[u]);
    for (std::size_t v = 0; v < k; ++v) {
      auto ov = ones_of(lang[v]);
      auto& g = good[u * k + v];
      g.assign(bound + 1, true);
      for (std::uint64_t n = 0; n <= bound; ++n) {
        for (std::size_t a : ou) {
          for (std::size_t b : ov) {
            if (!in_p[m - a + n + b]) g[n] = false;
          }
        }
      }
    }
  }

  WeakMixingResult res;
  res.verdict = Verdict::pass;
  for (std::size_t u1 = 0; u1 < k; ++u1) {
    for (std::size_t u2 = 0; u2 < k; ++u2) {
      for (std::size_t v1 = 0; v1 < k; ++v1) {
        for (std::size_t v2 = 0; v2 < k; ++v2) {
          ++res.quadruples_checked;
          const auto& g1 = good[u1 * k + v1];
          const auto& g2 = good[u2 * k + v2];
          std::optional<std::uint64_t> gap;
          for (std::uint64_t n = 0; n <= bound; ++n) {
            if (g1[n] && g2[n]) {
              gap = n;
              break;
            }
          }
          if (gap) {
            res.largest_gap = std::max(res.largest_gap, *gap);
          } else if (!res.stuck) {
            res.verdict = Verdict::inconclusive;
            res.stuck = std::array<Word, 4>{lang[u1], lang[u2], lang[v1], lang[v2]};
          }
        }
      }
    }
  }
  return res;
}

words::RhoResult proximality_estimate(const SpacingSet& p, const SymbolStream& x,
                                      std::size_t horizon, std::size_t rho_horizon) {
  if (horizon == 0 || rho_horizon == 0) throw InvalidArgument("proximality_estimate needs positive horizons");
  Word w = x.prefix(horizon + rho_horizon);
  if (!is_member(w, p)) throw InvalidArgument("stream prefix is not in the spacing shift");
  // zero run starting at each position, capped at rho_horizon
  std::vector<std::size_t> run(w.size() + 1, 0);
  for (std::size_t i = w.size(); i-- > 0;) run[i] = w[i] == 0 ? std::min(run[i + 1] + 1, rho_horizon) : 0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < horizon; ++i) best = std::max(best, run[i]);
  if (best >= rho_horizon) return {Dyadic::zero(), true};
  return {Dyadic::pow2_neg(static_cast<unsigned>(best + 1)), false};
}

}  // namespace chaoslab::spacing
