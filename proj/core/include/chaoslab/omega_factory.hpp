#pragma once

// Finite families of spacing-shift points whose omega-limit sets overlap in
// every prescribed pattern.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chaoslab/rational.hpp"
#include "chaoslab/spacing.hpp"
#include "chaoslab/words.hpp"

namespace chaoslab::omega {

using spacing::SpacingSet;
using spacing::ThickDecomposition;
using words::SymbolStream;
using words::Word;

using Subset = std::set<unsigned>;  // nonempty subset of {1..N}

/// N periodic streams; each period lists every nonempty S in {1..N} once.
///
/// Columns are the N-bit masks counted down from 2^N - 1, element 1 being the
/// most significant bit. For N = 2 the period is {1,2}, {1}, {2}, so
/// x^(1) = (110)^inf and x^(2) = (101)^inf.
class ColumnPatternFamily {
 public:
  explicit ColumnPatternFamily(unsigned n);

  unsigned size() const { return n_; }
  std::uint64_t period() const { return (std::uint64_t{1} << n_) - 1; }
  // the subset realized at one-based column j
  Subset column(std::uint64_t j) const;
  // one-based column inside the first period realizing s
  std::uint64_t column_of(const Subset& s) const;
  // x^(i)_j for one-based i and j
  bool bit(unsigned i, std::uint64_t j) const;
  SymbolStream member(unsigned i) const;

 private:
  std::uint64_t mask_at(std::uint64_t j) const;
  unsigned n_;
};

// Q_x: union of the parts P_n (n <= parts) with x_n = 1, n one-based.
SpacingSet q_set(const SymbolStream& x, const ThickDecomposition& d);

struct GammaFamily {
  ColumnPatternFamily base;
  ThickDecomposition decomposition;
  std::vector<SpacingSet> q_sets;       // Q_{x^(i)}, i = 1..N at index i-1
  std::vector<SymbolStream> members;    // y^(i) = transitive point of Sigma_{Q_{x^(i)}}
  std::size_t prefix_len = 0;           // members are exact on [0, prefix_len)
};

GammaFamily build_gamma(unsigned n, const SpacingSet& p, std::uint64_t parts, std::size_t word_budget,
                        std::size_t prefix_len);

struct ScrambleCertificate {
  Subset indices;
  std::uint64_t column = 0;
  bool realizable = false;  // column <= number of parts
  bool clause_a = false;    // L_wl(Sigma_{P_j}) seen past tail_start in each y^(i), i in S
  bool clause_b = false;    // no two 1s at a P_j distance past tail_start in y^(i), i not in S
  bool clause_c = false;    // a point of Sigma_{P_j} comes within tol of 0^inf
  std::optional<std::string> failure;  // first violated clause with its witness
  Dyadic proximality = Dyadic::zero();
  std::size_t language_size = 0;
  Verdict verdict = Verdict::inconclusive;
};

struct CertificateParams {
  std::size_t word_len = 2;
  std::size_t prefix_len = 100000;
  std::size_t tail_start = 512;
  std::size_t prox_horizon = 10000;
  std::size_t rho_horizon = 64;
  std::size_t word_budget = 8;
  unsigned tol_exponent = 10;  // clause (c) needs rho <= 2^-tol_exponent
};

ScrambleCertificate scramble_certificate(const GammaFamily& g, const Subset& indices,
                                         const CertificateParams& params);

std::string to_string(const Subset& s);

}  // namespace chaoslab::omega
