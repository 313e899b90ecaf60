#pragma once

// The Gehman dendrite coded by binary addresses, its self-map g and the
// subdendrite D_X spanned by the endpoints coded by a subshift X.
//
// The arc B_{i_1..i_n} joins p_{i_1..i_{n-1}} (the root p when n = 1) to
// p_{i_1..i_n} and has length 2^-n, so every endpoint is at distance exactly 1
// from the root. g collapses the two depth-one arcs to p, maps B_{i_1..i_n}
// onto B_{i_2..i_n} keeping the arc parameter, and shifts endpoint codes.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "chaoslab/chaos_metrics.hpp"
#include "chaoslab/rational.hpp"
#include "chaoslab/words.hpp"

namespace chaoslab::gehman {

using words::SymbolStream;
using words::Word;

struct Root {};

// t in (0, 1]; t = 1 is the branch point p_address
struct ArcPoint {
  Word address;
  Rational t;
};

struct EndPoint {
  SymbolStream code;
};

using GehmanPoint = std::variant<Root, ArcPoint, EndPoint>;

GehmanPoint apply_g(const GehmanPoint& pt);

// arclength from the root
Rational height(const GehmanPoint& pt);

// Arclength distance. Endpoint codes are compared on [0, code_horizon); two
// endpoints agreeing there throw BudgetExceeded rather than being called equal.
Rational dist(const GehmanPoint& a, const GehmanPoint& b, std::size_t code_horizon);

// Steps until the orbit sits at the root; nullopt for endpoints, which never get there.
std::optional<std::size_t> eventually_fixed(const GehmanPoint& pt);

// D_X for X given by its language (a factorial, extendable set of words).
class GehmanSystem {
 public:
  explicit GehmanSystem(std::function<bool(const Word&)> in_language) : in_language_(std::move(in_language)) {}

  // Addresses must be words of X; endpoint codes are checked on [0, code_horizon).
  bool valid(const GehmanPoint& pt, std::size_t code_horizon) const;
  GehmanPoint apply(const GehmanPoint& pt, std::size_t code_horizon) const;

  chaos::OrbitSource<GehmanPoint> orbit_source(std::size_t code_horizon) const;

 private:
  std::function<bool(const Word&)> in_language_;
};

struct ConjugacyReport {
  bool commutes = true;  // g^k(x_c) = x_{sigma^k c} for all sampled codes, k <= steps
  bool monotone = true;  // rho order of codes agrees with the order of endpoint distances
  std::size_t triples = 0;
  std::optional<std::string> failure;
};

ConjugacyReport conjugacy_check(const GehmanSystem& sys, const std::vector<SymbolStream>& codes,
                                std::size_t steps, std::size_t code_horizon);

}  // namespace chaoslab::gehman
