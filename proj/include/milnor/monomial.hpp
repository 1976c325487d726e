// Monomials as exponent vectors of a fixed ambient dimension.
#ifndef MILNOR_MONOMIAL_HPP
#define MILNOR_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "milnor/errors.hpp"

namespace milnor {

class Monomial {
public:
  Monomial() = default;

  /// The constant monomial 1 in an nvars-dimensional ring.
  explicit Monomial(std::size_t nvars) : e_(nvars, 0u) {}

  explicit Monomial(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}

  std::size_t nvars() const { return e_.size(); }
  const std::vector<unsigned>& exponents() const { return e_; }

  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }

  unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

  bool is_constant() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned v) { return v == 0; });
  }

  bool divides(const Monomial& m) const {
    require_same_dim(m);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    require_same_dim(m);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
    return r;
  }

  /// this / m; requires m.divides(*this).
  Monomial divided_by(const Monomial& m) const {
    require_same_dim(m);
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (m.e_[i] > r.e_[i]) throw Error("monomial division is not exact");
      r.e_[i] -= m.e_[i];
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    a.require_same_dim(b);
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
  void require_same_dim(const Monomial& m) const {
    if (e_.size() != m.e_.size())
      throw DimensionMismatch("monomials live in rings of different dimension");
  }

  std::vector<unsigned> e_;
};

/// Container ordering (independent of any local order): by total degree,
/// ties by lexicographically larger exponent vector first. Gives the usual
/// human reading order x^2, x*y, y^2 within a degree.
struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
  }
};

}  // namespace milnor

#endif
