// Finite abelian groups, dual-group characters, diagonal actions.
//
// Characters are stored symbolically as integer exponent vectors in the dual
// group; no complex roots of unity are ever materialized.
#ifndef MILNOR_GROUP_HPP
#define MILNOR_GROUP_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/monomial.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

/// G = Z_{d1} x ... x Z_{dk}; the trivial group is orders = [] or all 1.
class AbelianGroup {
public:
  AbelianGroup() = default;

  explicit AbelianGroup(std::vector<unsigned long> orders) : orders_(std::move(orders)) {
    for (unsigned long d : orders_) {
      if (d == 0) throw Error("cyclic factor of order zero");
      if (d > 1000000000UL) throw CapExceeded("cyclic factor order above 10^9");
    }
  }

  std::size_t rank() const { return orders_.size(); }
  const std::vector<unsigned long>& orders() const { return orders_; }

  unsigned long long order() const {
    unsigned long long p = 1;
    for (unsigned long d : orders_) {
      if (p > (1ULL << 62) / d) throw CapExceeded("group order overflows");
      p *= d;
    }
    return p;
  }

  /// lcm of the cyclic orders.
  unsigned long long exponent() const {
    unsigned long long e = 1;
    for (unsigned long d : orders_) {
      const unsigned long long g = std::gcd(e, static_cast<unsigned long long>(d));
      const unsigned long long q = e / g;
      if (q > (1ULL << 62) / d) throw CapExceeded("group exponent overflows");
      e = q * d;
    }
    return e;
  }

  bool is_trivial() const {
    return std::all_of(orders_.begin(), orders_.end(), [](unsigned long d) { return d == 1; });
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

private:
  std::vector<unsigned long> orders_;
};

/// chi(g) = prod_j zeta_{dj}^{cj gj}, stored as the exponent tuple (cj).
class Character {
public:
  Character() = default;

  Character(const AbelianGroup& g, const std::vector<long long>& exponents) {
    if (exponents.size() != g.rank())
      throw DimensionMismatch("character exponent count does not match the group rank");
    c_.reserve(exponents.size());
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      const long long d = static_cast<long long>(g.orders()[j]);
      long long r = exponents[j] % d;
      if (r < 0) r += d;
      c_.push_back(static_cast<unsigned long>(r));
    }
  }

  static Character trivial(const AbelianGroup& g) {
    return Character(g, std::vector<long long>(g.rank(), 0));
  }

  const std::vector<unsigned long>& exponents() const { return c_; }

  bool is_trivial() const {
    return std::all_of(c_.begin(), c_.end(), [](unsigned long v) { return v == 0; });
  }

  friend bool operator==(const Character& a, const Character& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Character& a, const Character& b) { return a.c_ != b.c_; }

private:
  friend Character add(const AbelianGroup&, const Character&, const Character&);
  friend Character negate(const AbelianGroup&, const Character&);
  friend Character scaled(const AbelianGroup&, const Character&, unsigned long long);

  std::vector<unsigned long> c_;
};

struct CharacterLess {
  bool operator()(const Character& a, const Character& b) const {
    return a.exponents() < b.exponents();
  }
};

inline void require_group_dim(const AbelianGroup& g, const Character& c) {
  if (c.exponents().size() != g.rank())
    throw DimensionMismatch("character does not belong to the group");
}

inline Character add(const AbelianGroup& g, const Character& a, const Character& b) {
  require_group_dim(g, a);
  require_group_dim(g, b);
  Character r = a;
  for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] = (r.c_[j] + b.c_[j]) % g.orders()[j];
  return r;
}

inline Character negate(const AbelianGroup& g, const Character& a) {
  require_group_dim(g, a);
  Character r = a;
  for (std::size_t j = 0; j < r.c_.size(); ++j)
    r.c_[j] = r.c_[j] == 0 ? 0 : g.orders()[j] - r.c_[j];
  return r;
}

/// k * chi in the dual group.
inline Character scaled(const AbelianGroup& g, const Character& a, unsigned long long k) {
  require_group_dim(g, a);
  Character r = a;
  for (std::size_t j = 0; j < r.c_.size(); ++j) {
    const unsigned long long d = g.orders()[j];
    r.c_[j] = static_cast<unsigned long>((k % d) * (r.c_[j] % d) % d);
  }
  return r;
}

/// Order of chi in the dual group: lcm_j dj / gcd(dj, cj).
inline unsigned long long character_order(const AbelianGroup& g, const Character& c) {
  require_group_dim(g, c);
  unsigned long long ord = 1;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    const unsigned long long d = g.orders()[j];
    const unsigned long long comp = d / std::gcd(d, static_cast<unsigned long long>(c.exponents()[j]));
    const unsigned long long gg = std::gcd(ord, comp);
    ord = ord / gg * comp;
  }
  return ord;
}

/// Diagonal action: g acts by (chi_1(g) x_1, ..., chi_n(g) x_n).
struct ActionSpec {
  AbelianGroup group;
  std::vector<Character> chars;

  std::size_t nvars() const { return chars.size(); }

  bool nontrivial() const {
    return std::any_of(chars.begin(), chars.end(),
                       [](const Character& c) { return !c.is_trivial(); });
  }
};

/// Weight of x^a: sum_i a_i chi_i in the dual group (empty sum is trivial).
inline Character monomial_weight(const Monomial& m, const ActionSpec& a) {
  if (m.nvars() != a.nvars())
    throw DimensionMismatch("monomial dimension does not match the action");
  Character w = Character::trivial(a.group);
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0 || a.chars[i].is_trivial()) continue;
    w = add(a.group, w, scaled(a.group, a.chars[i], m[i]));
  }
  return w;
}

/// For a diagonal action, termwise invariance is equivalent to invariance of
/// the sum, since the action scales each monomial by a root of unity.
inline bool is_invariant(const Polynomial& f, const ActionSpec& a) {
  if (f.nvars() != a.nvars())
    throw DimensionMismatch("polynomial dimension does not match the action");
  for (const auto& [m, c] : f.terms())
    if (!monomial_weight(m, a).is_trivial()) return false;
  return true;
}

/// All terms of p carry weight w (vacuously true for p = 0).
inline bool is_weight_homogeneous(const Polynomial& p, const ActionSpec& a, const Character& w) {
  for (const auto& [m, c] : p.terms())
    if (!(monomial_weight(m, a) == w)) return false;
  return true;
}

/// Fixed points outside the origin exist iff some coordinate character is
/// trivial (that coordinate axis is then pointwise fixed).
inline bool has_fixed_points_outside_origin(const ActionSpec& a) {
  return std::any_of(a.chars.begin(), a.chars.end(),
                     [](const Character& c) { return c.is_trivial(); });
}

/// l(tau) = min over nontrivial chi_i of ord(chi_i).
///
/// A point with support S has stabilizer exactly the intersection of the
/// kernels ker chi_i over i in S, so its orbit length is [G : that kernel],
/// which is at least [G : ker chi_i] = ord(chi_i) for every i in S. The
/// minimum over non-fixed points is therefore attained on a coordinate axis.
/// orbit_length_oracle verifies this against direct enumeration.
inline unsigned long long shortest_orbit_length(const ActionSpec& a) {
  unsigned long long best = 0;
  for (const Character& c : a.chars) {
    if (c.is_trivial()) continue;
    const unsigned long long o = character_order(a.group, c);
    if (best == 0 || o < best) best = o;
  }
  if (best == 0) throw TrivialAction("the action is trivial: no non-fixed points");
  return best;
}

struct OrbitOracleOptions {
  unsigned long long max_group_order = 10000;
  std::size_t max_vars = 16;
};

/// Brute force: enumerate all nonempty supports S, intersect the character
/// kernels by direct enumeration of the group elements, discard fixed
/// supports, and return the minimal index [G : kernel].
inline unsigned long long orbit_length_oracle(const ActionSpec& a,
                                              const OrbitOracleOptions& opts = {}) {
  if (!a.nontrivial()) throw TrivialAction("the action is trivial: no non-fixed points");
  const unsigned long long size = a.group.order();
  if (size > opts.max_group_order) throw CapExceeded("group too large for the orbit oracle");
  if (a.nvars() > opts.max_vars) throw CapExceeded("too many variables for the orbit oracle");

  const std::size_t k = a.group.rank();
  const unsigned long long L = a.group.exponent();
  const std::size_t words = static_cast<std::size_t>((size + 63) / 64);

  // Kernel of each coordinate character as a bitset over the group elements.
  std::vector<std::vector<std::uint64_t>> kernels;
  kernels.reserve(a.nvars());
  std::vector<unsigned long long> digits(k, 0);
  for (const Character& c : a.chars) {
    std::vector<std::uint64_t> mask(words, 0);
    std::fill(digits.begin(), digits.end(), 0ULL);
    for (unsigned long long e = 0; e < size; ++e) {
      unsigned long long s = 0;
      for (std::size_t j = 0; j < k; ++j)
        s = (s + c.exponents()[j] % L * (digits[j] % L) % L * (L / a.group.orders()[j])) % L;
      if (s == 0) mask[e / 64] |= 1ULL << (e % 64);
      for (std::size_t j = 0; j < k; ++j) {  // mixed-radix increment
        if (++digits[j] < a.group.orders()[j]) break;
        digits[j] = 0;
      }
    }
    kernels.push_back(std::move(mask));
  }

  unsigned long long best = 0;
  const std::size_t n = a.nvars();
  std::vector<std::uint64_t> inter(words);
  for (std::size_t subset = 1; subset < (std::size_t{1} << n); ++subset) {
    std::fill(inter.begin(), inter.end(), ~std::uint64_t{0});
    for (std::size_t i = 0; i < n; ++i)
      if (subset & (std::size_t{1} << i))
        for (std::size_t w = 0; w < words; ++w) inter[w] &= kernels[i][w];
    unsigned long long card = 0;
    // Any intersected kernel mask has zero bits above the group size, so the
    // all-ones initialization cannot leak into the count.
    for (std::size_t w = 0; w < words; ++w)
      card += static_cast<unsigned long long>(std::popcount(inter[w]));
    if (card == size) continue;  // fixed support
    const unsigned long long len = size / card;
    if (best == 0 || len < best) best = len;
  }
  if (best == 0) throw TrivialAction("the action is trivial: no non-fixed points");
  return best;
}

}  // namespace milnor

#endif
