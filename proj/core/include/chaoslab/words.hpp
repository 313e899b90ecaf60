#pragma once

// Finite and infinite words over small alphabets, the prefix metric on
// one-sided sequences, occurrence counts and finite-horizon density proxies.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chaoslab/rational.hpp"

namespace chaoslab::words {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  explicit Alphabet(std::vector<Symbol> symbols);
  static Alphabet binary() { return Alphabet({0, 1}); }

  bool contains(Symbol s) const;
  bool contains(std::span<const Symbol> w) const;
  std::span<const Symbol> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }

 private:
  std::vector<Symbol> symbols_;
};

// "10110" -> {1,0,1,1,0}; only digits are accepted.
Word word_from_string(std::string_view digits);
std::string to_string(std::span<const Symbol> w);
Word zeros(std::size_t n);
Word concat(std::span<const Symbol> a, std::span<const Symbol> b);

/// A one-sided infinite sequence given by a deterministic rule.
///
/// Index 0 is the first symbol (x_1 in one-based notation). Streams may carry a
/// validity bound: a rule that is only known exactly below `defined_upto()`
/// throws BudgetExceeded beyond it instead of guessing. Copies share the rule.
class SymbolStream {
 public:
  using Rule = std::function<Symbol(std::size_t)>;
  static constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

  explicit SymbolStream(Rule rule, std::size_t defined_upto = kUnbounded);

  static SymbolStream constant(Symbol s);
  // Finite word followed by `tail` forever.
  static SymbolStream from_prefix(Word prefix, Symbol tail = 0);
  // prefix then `period` repeated forever; `period` must be non-empty.
  static SymbolStream eventually_periodic(Word prefix, Word period);
  static SymbolStream periodic(Word period) { return eventually_periodic({}, std::move(period)); }
  // 1 exactly at the listed zero-based positions.
  static SymbolStream indicator(std::function<bool(std::size_t)> is_one,
                                std::size_t defined_upto = kUnbounded);

  Symbol at(std::size_t i) const;
  Symbol operator[](std::size_t i) const { return at(i); }
  Word prefix(std::size_t n) const;
  // x_[from, to)
  Word slice(std::size_t from, std::size_t to) const;
  // sigma^k
  SymbolStream shifted(std::size_t k) const;
  std::size_t defined_upto() const { return defined_upto_; }

 private:
  SymbolStream(std::shared_ptr<const Rule> rule, std::size_t offset, std::size_t defined_upto);

  std::shared_ptr<const Rule> rule_;
  std::size_t offset_ = 0;
  std::size_t defined_upto_ = kUnbounded;
};

// C[w]: streams whose prefix of length |w| equals w.
struct Cylinder {
  Word prefix;
  bool contains(const SymbolStream& s) const { return s.prefix(prefix.size()) == prefix; }
};

struct RhoResult {
  Dyadic value;
  // Prefixes agreed through the whole horizon; value is reported as 0 but the
  // streams were not shown equal.
  bool agree_to_horizon = false;
};

// rho(x,y) = 2^(-k) with k = 1 + length of the longest common prefix.
RhoResult metric_rho(const SymbolStream& x, const SymbolStream& y, std::size_t horizon);

std::size_t occurrences(std::span<const Symbol> w, Symbol a);

/// A subset of the positive integers given by a membership predicate.
class IntegerSet {
 public:
  using Predicate = std::function<bool(std::uint64_t)>;

  IntegerSet(Predicate membership, std::string label);

  static IntegerSet naturals();
  static IntegerSet multiples_of(std::uint64_t k);
  static IntegerSet finite(std::vector<std::uint64_t> members, std::string label = "finite");
  // Union over i >= 1 of {4^i, ..., 4^i + i - 1}; thick with thick complement.
  static IntegerSet p_star();
  static IntegerSet powers_of(std::uint64_t base, std::uint64_t min_exponent = 1);

  bool contains(std::uint64_t m) const { return m >= 1 && membership_(m); }
  std::vector<std::uint64_t> enumerate_upto(std::uint64_t n) const;
  std::uint64_t count_upto(std::uint64_t n) const;
  const std::string& label() const { return label_; }

 private:
  Predicate membership_;
  std::string label_;
};

struct DensityEstimate {
  std::uint64_t horizon = 0;
  Rational at_horizon;
  // running min / max of |A ∩ [1,n]| / n over the schedule horizon/2^j, j = 0..octaves
  Rational lower_est;
  Rational upper_est;
  std::vector<std::uint64_t> schedule;
};

DensityEstimate density(const IntegerSet& a, std::uint64_t horizon, unsigned octaves = 4);

// Least m <= search_bound with {m, ..., m + block_len - 1} inside `a`.
std::optional<std::uint64_t> is_thick(const IntegerSet& a, std::uint64_t block_len,
                                      std::uint64_t search_bound);

// All length-word_len factors of x_[0, prefix_len) with their zero-based start positions.
std::map<Word, std::vector<std::size_t>> language_of_stream(const SymbolStream& x,
                                                           std::size_t word_len,
                                                           std::size_t prefix_len);

}  // namespace chaoslab::words
