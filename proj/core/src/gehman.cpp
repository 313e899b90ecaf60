#include "chaoslab/gehman.hpp"

#include <algorithm>

namespace chaoslab::gehman {

namespace {

// 1 - 2^-n: height of a branch point at depth n
Rational branch_height(std::size_t n) { return 1 - pow2_neg(static_cast<unsigned>(n)); }

std::size_t common_prefix(const Word& a, const SymbolStream& code) {
  std::size_t c = 0;
  while (c < a.size() && a[c] == code.at(c)) ++c;
  return c;
}

std::size_t common_prefix(const Word& a, const Word& b) {
  std::size_t c = 0;
  while (c < a.size() && c < b.size() && a[c] == b[c]) ++c;
  return c;
}

}  // namespace

GehmanPoint apply_g(const GehmanPoint& pt) {
  if (const auto* arc = std::get_if<ArcPoint>(&pt)) {
    if (arc->address.size() <= 1) return Root{};
    return ArcPoint{Word(arc->address.begin() + 1, arc->address.end()), arc->t};
  }
  if (const auto* e = std::get_if<EndPoint>(&pt)) return EndPoint{e->code.shifted(1)};
  return Root{};
}

Rational height(const GehmanPoint& pt) {
  if (const auto* arc = std::get_if<ArcPoint>(&pt)) {
    const std::size_t n = arc->address.size();
    return branch_height(n - 1) + arc->t * pow2_neg(static_cast<unsigned>(n));
  }
  if (std::holds_alternative<EndPoint>(pt)) return Rational(1);
  return Rational(0);
}

Rational dist(const GehmanPoint& a, const GehmanPoint& b, std::size_t code_horizon) {
  if (std::holds_alternative<Root>(a)) return height(b);
  if (std::holds_alternative<Root>(b)) return height(a);

  // both paths leave the root; find the height where they part
  const auto* aa = std::get_if<ArcPoint>(&a);
  const auto* ba = std::get_if<ArcPoint>(&b);
  if (aa && ba) {
    const std::size_t n = aa->address.size(), m = ba->address.size();
    const std::size_t c = common_prefix(aa->address, ba->address);
    if (c == n && c == m) return abs(aa->t - ba->t) * pow2_neg(static_cast<unsigned>(n));
    if (c == n) return height(b) - height(a);  // a lies on the path to b
    if (c == m) return height(a) - height(b);
    return height(a) + height(b) - 2 * branch_height(c);
  }
  if (aa || ba) {
    const ArcPoint& arc = aa ? *aa : *ba;
    const SymbolStream& code = aa ? std::get<EndPoint>(b).code : std::get<EndPoint>(a).code;
    const std::size_t c = common_prefix(arc.address, code);
    if (c == arc.address.size()) return 1 - height(GehmanPoint{arc});
    return height(GehmanPoint{arc}) + 1 - 2 * branch_height(c);
  }
  const auto& x = std::get<EndPoint>(a).code;
  const auto& y = std::get<EndPoint>(b).code;
  for (std::size_t c = 0; c < code_horizon; ++c) {
    if (x.at(c) != y.at(c)) return 2 * pow2_neg(static_cast<unsigned>(c));
  }
  throw BudgetExceeded("endpoint codes agree on the first " + std::to_string(code_horizon) + " symbols");
}

std::optional<std::size_t> eventually_fixed(const GehmanPoint& pt) {
  if (const auto* arc = std::get_if<ArcPoint>(&pt)) return arc->address.size();
  if (std::holds_alternative<EndPoint>(pt)) return std::nullopt;
  return 0;
}

bool GehmanSystem::valid(const GehmanPoint& pt, std::size_t code_horizon) const {
  if (const auto* arc = std::get_if<ArcPoint>(&pt)) {
    return !arc->address.empty() && arc->t > 0 && arc->t <= 1 && in_language_(arc->address);
  }
  if (const auto* e = std::get_if<EndPoint>(&pt)) return in_language_(e->code.prefix(code_horizon));
  return true;
}

GehmanPoint GehmanSystem::apply(const GehmanPoint& pt, std::size_t code_horizon) const {
  if (!valid(pt, code_horizon)) throw InvalidArgument("point outside the subdendrite");
  return apply_g(pt);
}

chaos::OrbitSource<GehmanPoint> GehmanSystem::orbit_source(std::size_t code_horizon) const {
  return {[](const GehmanPoint& p) { return apply_g(p); },
          [code_horizon](const GehmanPoint& a, const GehmanPoint& b) { return dist(a, b, code_horizon); },
          Rational(2)};
}

ConjugacyReport conjugacy_check(const GehmanSystem& sys, const std::vector<SymbolStream>& codes,
                                std::size_t steps, std::size_t code_horizon) {
  ConjugacyReport rep;
  for (std::size_t s = 0; s < codes.size() && rep.commutes; ++s) {
    GehmanPoint pt = EndPoint{codes[s]};
    for (std::size_t k = 0; k <= steps; ++k) {
      Word lhs = std::get<EndPoint>(pt).code.prefix(code_horizon);
      Word rhs = codes[s].shifted(k).prefix(code_horizon);
      if (lhs != rhs) {
        rep.commutes = false;
        rep.failure = "code " + std::to_string(s) + " differs after " + std::to_string(k) + " steps";
        break;
      }
      if (k < steps) pt = sys.apply(pt, code_horizon);
    }
  }

  auto rho_prefix = [&](const SymbolStream& x, const SymbolStream& y) {
    return words::metric_rho(x, y, code_horizon).value;
  };
  for (std::size_t a = 0; a < codes.size(); ++a) {
    for (std::size_t b = 0; b < codes.size(); ++b) {
      for (std::size_t c = b + 1; c < codes.size(); ++c) {
        if (a == b || a == c) continue;
        ++rep.triples;
        auto rab = rho_prefix(codes[a], codes[b]), rac = rho_prefix(codes[a], codes[c]);
        if (rab.is_zero() || rac.is_zero()) continue;  // indistinguishable at this horizon
        auto dab = dist(EndPoint{codes[a]}, EndPoint{codes[b]}, code_horizon);
        auto dac = dist(EndPoint{codes[a]}, EndPoint{codes[c]}, code_horizon);
        if ((rab < rac) != (dab < dac) || (rab == rac) != (dab == dac)) {
          rep.monotone = false;
          if (!rep.failure) rep.failure = "order mismatch on codes " + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c);
        }
      }
    }
  }
  return rep;
}

}  // namespace chaoslab::gehman
