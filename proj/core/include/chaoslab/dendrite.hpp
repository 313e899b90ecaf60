#pragma once

// A planar dendrite: the base segment I x {0} with vertical spikes of height
// 2^-n standing on the level-n grid points z_k^(n), and a map f on it that walks
// the spike tops level by level (rightwards on even levels, leftwards on odd
// ones), squashing everything below the top quarter of a spike onto the base.
//
// Distances are arclength along the dendrite. Everything is exact.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chaoslab/chaos_metrics.hpp"
#include "chaoslab/rational.hpp"

namespace chaoslab::dendrite {

/// m_i, L_i = (l_{i-1} + 1) m_i and l_i = L_0 + ... + L_i (so l_{-1} = 0).
struct GridParams {
  std::vector<std::uint64_t> m;
  std::vector<std::uint64_t> L;
  std::vector<std::uint64_t> l;

  // m_0 = 1, m_{i+1} = 2^i l_i, through level `depth`
  static GridParams minimal(unsigned depth = 5);
  // m given from m_0; throws InvalidArgument unless m_0 = 1 and m_{i+1} >= 2^i l_i
  static GridParams with_multipliers(std::vector<std::uint64_t> m);
  unsigned depth() const { return static_cast<unsigned>(m.size()) - 1; }
};

/// Levels up to `materialized` are stored; the next level is computed on demand
/// from the stored neighbours. Deeper levels throw BudgetExceeded.
class Grid {
 public:
  explicit Grid(GridParams params = GridParams::minimal(), unsigned materialized = 3);

  const GridParams& params() const { return params_; }
  unsigned materialized() const { return materialized_; }
  unsigned max_level() const { return materialized_ + 1; }

  // z_k^(n), k = 1..L_n
  Rational z(unsigned n, std::uint64_t k) const;
  // Z^(n) in index order
  const std::vector<Rational>& level_points(unsigned n) const;
  // x_0^(n) = 0 < ... < x_{l_n + 1}^(n) = 1
  const std::vector<Rational>& merged(unsigned n) const;

 private:
  GridParams params_;
  unsigned materialized_;
  std::vector<std::vector<Rational>> z_;
  std::vector<std::vector<Rational>> x_;
};

struct Base {
  Rational x;
  friend bool operator==(const Base&, const Base&) = default;
};

// The point (z_k^(n), y) with 0 < y <= 2^-n; x caches z_k^(n).
struct Spike {
  unsigned n = 0;
  std::uint64_t k = 1;
  Rational x;
  Rational y;
  friend bool operator==(const Spike&, const Spike&) = default;
};

using DPoint = std::variant<Base, Spike>;

// (x, y) as plain coordinates
std::array<Rational, 2> coords(const DPoint& p);
std::string to_string(const DPoint& p);

// Spike(n, k, y) with its foot looked up; y = 0 gives the base point.
DPoint spike(const Grid& g, unsigned n, std::uint64_t k, const Rational& y);
// A_{n,k}
DPoint top(const Grid& g, unsigned n, std::uint64_t k);
bool is_top(const DPoint& p);

// phi_n(y) = 4 (y - 3 * 2^-(n+2))
Rational phi(unsigned n, const Rational& y);

// The foot visited after spike (n, k) on the top walk.
std::pair<unsigned, std::uint64_t> next_foot(const Grid& g, unsigned n, std::uint64_t k);

DPoint apply_f(const DPoint& p, const Grid& g);

Rational dist_d(const DPoint& a, const DPoint& b);

struct Orbit {
  std::vector<DPoint> points;                                // f^0 .. f^steps
  // (level, index) of each spike visited; base points are recorded as (kBaseLevel, 0)
  std::vector<std::pair<unsigned, std::uint64_t>> itinerary;
};

inline constexpr unsigned kBaseLevel = ~0u;

// Throws BudgetExceeded if the walk needs a level beyond the grid.
Orbit orbit(const DPoint& start, std::size_t steps, const Grid& g);

chaos::OrbitSource<DPoint> orbit_source(const Grid& g);

// --- certificates -----------------------------------------------------------

// w_n = 1/(l_n + 1) + 2^-n
Rational w_bound(const GridParams& p, unsigned n);

struct WnCertificate {
  unsigned n = 0;
  DPoint corner;         // (1,0) or (0,0): the end where the level n+1 walk starts
  Rational max_dist;     // max over j = 1..m_{n+1} of dist(f^{l_n + j}(1/2,1), corner)
  Rational bound;        // w_n
  std::optional<std::uint64_t> violating_j;
  bool pass = false;
};

WnCertificate wn_certificate(unsigned n, const Grid& g);

struct Dc1Row {
  unsigned n = 0;
  std::uint64_t horizon = 0;  // l_n + m_{n+1}
  bool near = false;          // the block before the horizon hugs the target
  Rational w;                 // w_n
  std::uint64_t within_w = 0;     // i < horizon with dist(f^i(1/2,1), target) < w_n
  std::uint64_t within_half = 0;  // ... < 1/2
  Rational frac_w() const { return ratio(within_w, horizon); }
  Rational frac_half() const { return ratio(within_half, horizon); }
  // near: frac_w >= m_{n+1}/(l_n + m_{n+1}); far: frac_half <= l_n/(l_n + m_{n+1})
  Rational bound;
  bool pass = false;
};

// Closeness counts of the top orbit to `target` at the horizons l_n + m_{n+1}.
std::vector<Dc1Row> dc1_certificate(const std::vector<unsigned>& ns, const DPoint& target, const Grid& g);

enum class AsymptoticStatus { asymptotic, eventually_fixed, inconclusive };
const char* to_string(AsymptoticStatus s);

struct AsymptoticResult {
  AsymptoticStatus status = AsymptoticStatus::inconclusive;
  std::optional<std::uint64_t> s;  // dist < eps on [s, budget]
  std::optional<std::uint64_t> fixed_at;  // first step on the base, for either orbit
  Rational last_dist;
};

AsymptoticResult asymptotics_check(const DPoint& x, const DPoint& y, const Rational& eps,
                                   std::uint64_t budget, const Grid& g);

struct TripleReport {
  std::array<DPoint, 3> points;
  std::array<std::optional<std::uint64_t>, 3> fixed_at;  // first step on the base
  std::optional<std::pair<int, int>> witness;            // a pair that is not LY
  Rational witness_dist;                                  // its eventual constant distance
  bool pass = false;
};

// For each triple, at most one orbit may stay off the base within budget; two fixed
// orbits sit at constant distance from then on, so that pair is not Li-Yorke.
std::vector<TripleReport> no_infinite_ly_certificate(const std::vector<std::array<DPoint, 3>>& triples,
                                                     std::uint64_t budget, const Grid& g);

// Seeded triples: a spike top with probability 1/2, then two points below the tops
// (spikes with small-denominator heights or base points).
std::vector<std::array<DPoint, 3>> sample_triples(std::size_t count, std::uint64_t seed, const Grid& g);

}  // namespace chaoslab::dendrite
