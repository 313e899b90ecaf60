#include "chaoslab/words.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace chaoslab::words {

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidArgument("alphabet must be non-empty");
  std::set<Symbol> seen(symbols_.begin(), symbols_.end());
  if (seen.size() != symbols_.size()) throw InvalidArgument("alphabet has duplicate symbols");
}

bool Alphabet::contains(Symbol s) const {
  return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end();
}

bool Alphabet::contains(std::span<const Symbol> w) const {
  return std::all_of(w.begin(), w.end(), [&](Symbol s) { return contains(s); });
}

Word word_from_string(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') throw InvalidArgument("word symbols must be digits: " + std::string(digits));
    w.push_back(static_cast<Symbol>(c - '0'));
  }
  return w;
}

std::string to_string(std::span<const Symbol> w) {
  std::string s;
  s.reserve(w.size());
  for (Symbol c : w) s.push_back(static_cast<char>('0' + c));
  return s;
}

Word zeros(std::size_t n) { return Word(n, 0); }

Word concat(std::span<const Symbol> a, std::span<const Symbol> b) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// ---------------------------------------------------------------------------

SymbolStream::SymbolStream(Rule rule, std::size_t defined_upto)
    : rule_(std::make_shared<const Rule>(std::move(rule))), defined_upto_(defined_upto) {}

SymbolStream::SymbolStream(std::shared_ptr<const Rule> rule, std::size_t offset,
                           std::size_t defined_upto)
    : rule_(std::move(rule)), offset_(offset), defined_upto_(defined_upto) {}

SymbolStream SymbolStream::constant(Symbol s) {
  return SymbolStream([s](std::size_t) { return s; });
}

SymbolStream SymbolStream::from_prefix(Word prefix, Symbol tail) {
  auto p = std::make_shared<const Word>(std::move(prefix));
  return SymbolStream([p, tail](std::size_t i) { return i < p->size() ? (*p)[i] : tail; });
}

SymbolStream SymbolStream::eventually_periodic(Word prefix, Word period) {
  if (period.empty()) throw InvalidArgument("period must be non-empty");
  auto p = std::make_shared<const Word>(std::move(prefix));
  auto q = std::make_shared<const Word>(std::move(period));
  return SymbolStream([p, q](std::size_t i) {
    if (i < p->size()) return (*p)[i];
    return (*q)[(i - p->size()) % q->size()];
  });
}

SymbolStream SymbolStream::indicator(std::function<bool(std::size_t)> is_one,
                                     std::size_t defined_upto) {
  return SymbolStream([f = std::move(is_one)](std::size_t i) { return static_cast<Symbol>(f(i) ? 1 : 0); },
                      defined_upto);
}

Symbol SymbolStream::at(std::size_t i) const {
  if (i >= defined_upto_) {
    throw BudgetExceeded("stream queried at index " + std::to_string(i) +
                         " beyond its exact range " + std::to_string(defined_upto_));
  }
  return (*rule_)(offset_ + i);
}

Word SymbolStream::prefix(std::size_t n) const { return slice(0, n); }

Word SymbolStream::slice(std::size_t from, std::size_t to) const {
  Word w;
  if (to <= from) return w;
  w.reserve(to - from);
  for (std::size_t i = from; i < to; ++i) w.push_back(at(i));
  return w;
}

SymbolStream SymbolStream::shifted(std::size_t k) const {
  std::size_t bound = defined_upto_ == kUnbounded ? kUnbounded
                      : (defined_upto_ > k ? defined_upto_ - k : 0);
  return SymbolStream(rule_, offset_ + k, bound);
}

RhoResult metric_rho(const SymbolStream& x, const SymbolStream& y, std::size_t horizon) {
  if (horizon == 0) throw InvalidArgument("metric_rho needs horizon >= 1");
  for (std::size_t i = 0; i < horizon; ++i) {
    if (x.at(i) != y.at(i)) return {Dyadic::pow2_neg(static_cast<unsigned>(i + 1)), false};
  }
  return {Dyadic::zero(), true};
}

std::size_t occurrences(std::span<const Symbol> w, Symbol a) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

// ---------------------------------------------------------------------------

IntegerSet::IntegerSet(Predicate membership, std::string label)
    : membership_(std::move(membership)), label_(std::move(label)) {}

IntegerSet IntegerSet::naturals() {
  return IntegerSet([](std::uint64_t) { return true; }, "N");
}

IntegerSet IntegerSet::multiples_of(std::uint64_t k) {
  if (k == 0) throw InvalidArgument("multiples_of(0)");
  return IntegerSet([k](std::uint64_t m) { return m % k == 0; }, std::to_string(k) + "N");
}

IntegerSet IntegerSet::finite(std::vector<std::uint64_t> members, std::string label) {
  auto s = std::make_shared<const std::set<std::uint64_t>>(members.begin(), members.end());
  return IntegerSet([s](std::uint64_t m) { return s->count(m) > 0; }, std::move(label));
}

IntegerSet IntegerSet::p_star() {
  return IntegerSet(
      [](std::uint64_t m) {
        if (m < 4) return false;
        std::uint64_t power = 4;
        std::uint64_t i = 1;
        while (power <= m / 4) {
          power *= 4;
          ++i;
        }
        return m - power < i;
      },
      "P*");
}

IntegerSet IntegerSet::powers_of(std::uint64_t base, std::uint64_t min_exponent) {
  if (base < 2) throw InvalidArgument("powers_of needs base >= 2");
  return IntegerSet(
      [base, min_exponent](std::uint64_t m) {
        std::uint64_t e = 0;
        while (m % base == 0) {
          m /= base;
          ++e;
        }
        return m == 1 && e >= min_exponent;
      },
      "powers of " + std::to_string(base));
}

std::vector<std::uint64_t> IntegerSet::enumerate_upto(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (membership_(m)) out.push_back(m);
  }
  return out;
}

std::uint64_t IntegerSet::count_upto(std::uint64_t n) const {
  std::uint64_t c = 0;
  for (std::uint64_t m = 1; m <= n; ++m) c += membership_(m) ? 1 : 0;
  return c;
}

DensityEstimate density(const IntegerSet& a, std::uint64_t horizon, unsigned octaves) {
  if (horizon == 0) throw InvalidArgument("density needs horizon >= 1");
  DensityEstimate est;
  est.horizon = horizon;
  for (unsigned j = 0; j <= octaves; ++j) {
    std::uint64_t n = (horizon + (std::uint64_t{1} << j) - 1) >> j;
    if (n == 0) break;
    est.schedule.push_back(n);
  }
  std::reverse(est.schedule.begin(), est.schedule.end());

  // one pass; sample the running count at every scheduled n
  std::uint64_t count = 0;
  std::size_t next = 0;
  bool first = true;
  for (std::uint64_t m = 1; m <= horizon && next < est.schedule.size(); ++m) {
    if (a.contains(m)) ++count;
    while (next < est.schedule.size() && est.schedule[next] == m) {
      Rational r = ratio(count, m);
      if (first) {
        est.lower_est = est.upper_est = r;
        first = false;
      } else {
        if (r < est.lower_est) est.lower_est = r;
        if (r > est.upper_est) est.upper_est = r;
      }
      if (m == horizon) est.at_horizon = r;
      ++next;
    }
  }
  return est;
}

std::optional<std::uint64_t> is_thick(const IntegerSet& a, std::uint64_t block_len,
                                      std::uint64_t search_bound) {
  if (block_len == 0) throw InvalidArgument("is_thick needs block_len >= 1");
  std::uint64_t run = 0;
  for (std::uint64_t n = 1; n <= search_bound + block_len - 1; ++n) {
    run = a.contains(n) ? run + 1 : 0;
    if (run >= block_len) return n - block_len + 1;
  }
  return std::nullopt;
}

std::map<Word, std::vector<std::size_t>> language_of_stream(const SymbolStream& x,
                                                           std::size_t word_len,
                                                           std::size_t prefix_len) {
  if (word_len > prefix_len) throw InvalidArgument("word_len exceeds prefix_len");
  std::map<Word, std::vector<std::size_t>> out;
  Word p = x.prefix(prefix_len);
  for (std::size_t i = 0; i + word_len <= prefix_len; ++i) {
    out[Word(p.begin() + static_cast<std::ptrdiff_t>(i),
             p.begin() + static_cast<std::ptrdiff_t>(i + word_len))]
        .push_back(i);
  }
  return out;
}

}  // namespace chaoslab::words
