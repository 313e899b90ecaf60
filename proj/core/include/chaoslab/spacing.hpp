#pragma once

// Spacing shifts: binary sequences whose 1s sit at pairwise distances in P.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "chaoslab/rational.hpp"
#include "chaoslab/words.hpp"

namespace chaoslab::spacing {

using words::IntegerSet;
using words::Symbol;
using words::SymbolStream;
using words::Word;

using SpacingSet = IntegerSet;

bool is_member(std::span<const Symbol> w, const SpacingSet& p);

// L_n(Sigma_P) in lexicographic order. Throws InvalidArgument when n > guard.
std::vector<Word> language(const SpacingSet& p, std::size_t n, std::size_t guard = 24);

// Cantor diagonal pairing: 1 -> (1,1), 2 -> (1,2), 3 -> (2,1), 4 -> (1,3), ...
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n);

struct Block {
  std::uint64_t index;  // n, so the block is {start, ..., start + n}
  std::uint64_t start;
  std::uint64_t last() const { return start + index; }
};

/// Partition of a thick set P into `parts` pieces, each again thick.
///
/// Blocks Q_n (n >= 2) of n+1 consecutive members are chosen greedily with
/// minimal start subject to j_{n+1} > j_n + n; Q_1 holds everything else.
/// Block n goes to the first coordinate of cantor_unpair(n); with finitely many
/// parts, rows at or beyond the last part are folded into it.
/// Membership questions are exact only on [1, bound].
class ThickDecomposition {
 public:
  // Throws Error if some part receives no block Q_n (n >= 2) starting at or below bound.
  static ThickDecomposition build(const SpacingSet& p, std::uint64_t parts, std::uint64_t bound);

  std::uint64_t parts() const { return parts_; }
  std::uint64_t bound() const { return bound_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  // 1 for Q_1, n for Q_n; nullopt if m is not in P. Throws BudgetExceeded beyond bound.
  std::optional<std::uint64_t> block_of(std::uint64_t m) const;
  std::uint64_t part_of_block(std::uint64_t n) const;
  bool in_part(std::uint64_t m, std::uint64_t part) const;
  IntegerSet part(std::uint64_t j) const;
  // Blocks Q_n (n >= 2) assigned to part j, in order.
  std::vector<Block> blocks_of_part(std::uint64_t j) const;

 private:
  ThickDecomposition(SpacingSet p, std::uint64_t parts, std::uint64_t bound, std::vector<Block> blocks)
      : p_(std::move(p)), parts_(parts), bound_(bound), blocks_(std::move(blocks)) {}

  SpacingSet p_;
  std::uint64_t parts_;
  std::uint64_t bound_;
  std::vector<Block> blocks_;
};

// A word of L_len(Sigma_P): each position becomes 1 with probability 1/2 when that
// keeps the word in the language.
Word random_word(const SpacingSet& p, std::size_t len, std::mt19937_64& rng);

/// A point of Sigma_P whose orbit visits every enumerated word.
///
/// Rounds repeat forever: each round lists L_k(Sigma_P) for k = 1..word_budget in
/// lexicographic order, and each word is appended after the shortest run of 0s
/// keeping the prefix in the language. The result is exact on [0, bound); past
/// bound it throws. If some word cannot be placed with its end inside bound,
/// the remainder up to bound is filled with 0s.
SymbolStream transitive_point(const SpacingSet& p, std::size_t word_budget, std::size_t bound);

struct WeakMixingResult {
  Verdict verdict = Verdict::inconclusive;
  std::size_t quadruples_checked = 0;
  std::uint64_t largest_gap = 0;  // max over quadruples of the least working gap
  // u1, u2, v1, v2 for the first quadruple with no common gap below bound
  std::optional<std::array<Word, 4>> stuck;
};

// Least n <= bound with u1 0^n v1 and u2 0^n v2 both in L(Sigma_P).
std::optional<std::uint64_t> common_gap(const SpacingSet& p, std::span<const Symbol> u1,
                                        std::span<const Symbol> u2, std::span<const Symbol> v1,
                                        std::span<const Symbol> v2, std::uint64_t bound);

// Looks for a common n <= bound with u1 0^n v1 and u2 0^n v2 both in L(Sigma_P), for
// every quadruple over L_m. Zero gaps suffice: erasing 1s keeps words in the language.
WeakMixingResult weak_mixing_check(const SpacingSet& p, std::size_t m, std::uint64_t bound);

// min_{0 <= i < horizon} rho(sigma^i x, 0^inf), each distance scanned to rho_horizon.
// Throws InvalidArgument if the scanned prefix of x is not in Sigma_P.
words::RhoResult proximality_estimate(const SpacingSet& p, const SymbolStream& x,
                                      std::size_t horizon, std::size_t rho_horizon);

}  // namespace chaoslab::spacing
