#pragma once

// Extending a zero-density shift X to a mixing shift with no DC3 pairs.
//
// X_0 = X u W, where W is the orbit closure of the indicator of {2^j : j >= 1}.
// X_l = X_{l-1} u J_l, J_l being the shifts of 0^a u 0^b v 0^inf with glue words
// u, v and b >= beta_min(l): for l = 1 the glue is {1} and beta_min = 2; for
// l >= 2 the glue is L_{l-1}(X_{l-1}) and beta_min is the least b with
// phi^0_b > 2 phi^{l-1}_{l-1}. Languages are materialized up to a depth cap;
// membership of longer words is decided from the generators directly.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chaoslab/rational.hpp"
#include "chaoslab/words.hpp"

namespace chaoslab::tower {

using words::SymbolStream;
using words::Word;

struct BaseShift {
  std::string name;
  std::function<bool(const Word&)> contains;
  std::function<std::uint64_t(std::size_t)> phi;  // max number of 1s in a length-n word
};

// X = {0^inf}
BaseShift zero_shift();

// index i (zero-based) holds 1 iff i + 1 = 2^j with j >= 1
SymbolStream powers_of_two_stream();

bool in_powers_of_two_language(const Word& w);

// phi_n of the powers-of-two shift
std::uint64_t powers_of_two_phi(std::size_t n);

class Tower {
 public:
  // Throws Error when the sampled density premise fails: phi^0_{2^j} / 2^j must be
  // nonincreasing for 2^j <= cap and phi^0_cap / cap <= 1/2.
  static Tower seed(BaseShift x, std::size_t cap = 12);

  std::size_t cap() const { return cap_; }
  // X_0 .. X_{levels()-1} are built
  std::size_t levels() const { return langs_.size(); }
  void extend();
  void extend_to(std::size_t level);

  // L_n(X_level), n <= cap
  const std::set<Word>& language(std::size_t level, std::size_t n) const;
  std::uint64_t phi(std::size_t level, std::size_t n) const;
  // phi^0_n for any n
  std::uint64_t phi0(std::size_t n) const;
  std::size_t beta_min(std::size_t j_level) const;
  const std::vector<Word>& glue(std::size_t j_level) const;

  bool in_seed(const Word& w) const;
  bool in_j(std::size_t j_level, const Word& w) const;
  // membership in L(X_level) for words of any length
  bool contains(std::size_t level, const Word& w) const;

 private:
  Tower(BaseShift x, std::size_t cap) : x_(std::move(x)), cap_(cap) {}
  void check_level(std::size_t level) const;

  BaseShift x_;
  std::size_t cap_;
  std::vector<std::vector<std::set<Word>>> langs_;  // [level][n]
  std::vector<std::vector<Word>> glue_;             // [j_level], index 0 unused
  std::vector<std::size_t> beta_;                   // [j_level], index 0 unused
};

// Factors of length n of 0^n u 0^b v 0^n for b in [beta, max(beta, n)].
std::set<Word> j_factors(const std::vector<Word>& glue, std::size_t beta, std::size_t n);

// 0^alpha u 0^beta v 0^inf
SymbolStream j_point(const Word& u, std::size_t beta, const Word& v, std::size_t alpha = 0);

struct MixingCertificate {
  Verdict verdict = Verdict::inconclusive;
  std::size_t level = 0;
  std::optional<std::uint64_t> n0;  // u 0^n v is in the language for n0 <= n <= n0 + window
  std::size_t window = 0;
};

MixingCertificate mixing_check(const Tower& t, std::size_t level, const Word& u, const Word& v,
                               std::size_t window, std::uint64_t search_cap = 4096);

struct AuditRow {
  std::uint64_t n = 0;
  std::uint64_t ones = 0;
  std::uint64_t phi = 0;  // phi^0_n
  bool ok() const { return ones <= phi; }
};

// ones in y_[0,n) against phi^0_n for each audited n
std::vector<AuditRow> zero_density_audit(const Tower& t, const SymbolStream& y,
                                         const std::vector<std::uint64_t>& ns);

}  // namespace chaoslab::tower
