#include "chaoslab/omega_factory.hpp"

#include <algorithm>

#include "chaoslab/chaos_metrics.hpp"

namespace chaoslab::omega {

ColumnPatternFamily::ColumnPatternFamily(unsigned n) : n_(n) {
  if (n < 2 || n > 20) throw InvalidArgument("family size must be in [2, 20]");
}

std::uint64_t ColumnPatternFamily::mask_at(std::uint64_t j) const {
  if (j == 0) throw InvalidArgument("columns are one-based");
  std::uint64_t c = (j - 1) % period() + 1;
  return period() + 1 - c;
}

Subset ColumnPatternFamily::column(std::uint64_t j) const {
  Subset s;
  for (unsigned i = 1; i <= n_; ++i) {
    if (bit(i, j)) s.insert(i);
  }
  return s;
}

std::uint64_t ColumnPatternFamily::column_of(const Subset& s) const {
  if (s.empty()) throw InvalidArgument("the empty set has no column");
  std::uint64_t mask = 0;
  for (unsigned i : s) {
    if (i < 1 || i > n_) throw InvalidArgument("index outside the family");
    mask |= std::uint64_t{1} << (n_ - i);
  }
  return period() + 1 - mask;
}

bool ColumnPatternFamily::bit(unsigned i, std::uint64_t j) const {
  if (i < 1 || i > n_) throw InvalidArgument("index outside the family");
  return (mask_at(j) >> (n_ - i)) & 1;
}

SymbolStream ColumnPatternFamily::member(unsigned i) const {
  Word period_word;
  for (std::uint64_t j = 1; j <= period(); ++j) period_word.push_back(bit(i, j) ? 1 : 0);
  return SymbolStream::periodic(std::move(period_word));
}

SpacingSet q_set(const SymbolStream& x, const ThickDecomposition& d) {
  std::vector<bool> on(d.parts() + 1, false);
  std::string label = "Q[";
  for (std::uint64_t n = 1; n <= d.parts(); ++n) {
    on[n] = x.at(n - 1) == 1;
    if (on[n]) label += (label.back() == '[' ? "" : ",") + std::to_string(n);
  }
  label += "]";
  auto dd = std::make_shared<const ThickDecomposition>(d);
  return SpacingSet(
      [dd, on](std::uint64_t m) {
        auto block = dd->block_of(m);
        return block && on[dd->part_of_block(*block)];
      },
      label);
}

GammaFamily build_gamma(unsigned n, const SpacingSet& p, std::uint64_t parts, std::size_t word_budget,
                        std::size_t prefix_len) {
  ColumnPatternFamily base(n);
  auto d = ThickDecomposition::build(p, parts, prefix_len);
  GammaFamily g{base, d, {}, {}, prefix_len};
  for (unsigned i = 1; i <= n; ++i) {
    g.q_sets.push_back(q_set(base.member(i), d));
    g.members.push_back(spacing::transitive_point(g.q_sets.back(), word_budget, prefix_len));
  }
  return g;
}

ScrambleCertificate scramble_certificate(const GammaFamily& g, const Subset& indices,
                                         const CertificateParams& params) {
  ScrambleCertificate cert;
  cert.indices = indices;
  cert.column = g.base.column_of(indices);
  if (params.prefix_len > g.prefix_len) throw InvalidArgument("certificate prefix beyond family prefix");
  if (cert.column > g.decomposition.parts()) {
    cert.failure = "column " + std::to_string(cert.column) + " has no part below the decomposition size";
    return cert;
  }
  cert.realizable = true;
  const auto pj = g.decomposition.part(cert.column);

  auto fail = [&](const std::string& why) {
    if (!cert.failure) cert.failure = why;
  };

  // (a)
  auto lang = spacing::language(pj, params.word_len);
  cert.language_size = lang.size();
  cert.clause_a = true;
  for (unsigned i : indices) {
    auto seen = chaos::omega_language(g.members[i - 1], params.word_len, params.prefix_len, params.tail_start);
    for (const auto& w : lang) {
      if (!seen.count(w)) {
        cert.clause_a = false;
        fail("(a) word " + words::to_string(w) + " missing past " + std::to_string(params.tail_start) +
             " in y" + std::to_string(i));
      }
    }
  }

  // (b)
  std::vector<bool> in_pj(params.prefix_len, false);
  for (std::size_t m = 1; m < params.prefix_len; ++m) in_pj[m] = pj.contains(m);
  cert.clause_b = true;
  for (unsigned i = 1; i <= g.base.size(); ++i) {
    if (indices.count(i)) continue;
    std::vector<std::size_t> ones;
    Word y = g.members[i - 1].prefix(params.prefix_len);
    for (std::size_t k = params.tail_start; k < y.size(); ++k) {
      if (y[k] == 1) ones.push_back(k);
    }
    for (std::size_t a = 0; a < ones.size() && cert.clause_b; ++a) {
      for (std::size_t b = a + 1; b < ones.size(); ++b) {
        if (in_pj[ones[b] - ones[a]]) {
          cert.clause_b = false;
          fail("(b) y" + std::to_string(i) + " has 1s at " + std::to_string(ones[a]) + " and " +
               std::to_string(ones[b]));
          break;
        }
      }
    }
  }

  // (c)
  auto z = spacing::transitive_point(pj, params.word_budget, params.prox_horizon + params.rho_horizon);
  auto prox = spacing::proximality_estimate(pj, z, params.prox_horizon, params.rho_horizon);
  cert.proximality = prox.value;
  cert.clause_c = prox.value <= Dyadic::pow2_neg(params.tol_exponent);
  if (!cert.clause_c) fail("(c) closest approach to 0 is " + to_string(prox.value));

  cert.verdict = cert.clause_a && cert.clause_b && cert.clause_c ? Verdict::pass : Verdict::fail;
  return cert;
}

std::string to_string(const Subset& s) {
  std::string out = "{";
  for (unsigned i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

}  // namespace chaoslab::omega
