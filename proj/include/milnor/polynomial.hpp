// Sparse multivariate polynomials over the exact rationals.
#ifndef MILNOR_POLYNOMIAL_HPP
#define MILNOR_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/monomial.hpp"
#include "milnor/rational.hpp"

namespace milnor {

/// Invariants: no stored coefficient is zero; every key has nvars() exponents.
/// All arithmetic is exact; there is no floating point anywhere in this module.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, MonomialKeyLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  static Polynomial from_term(Monomial m, const Rational& c) {
    Polynomial p(m.nvars());
    p.add_term(std::move(m), c);
    return p;
  }

  /// x_i as a polynomial.
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m[i] = 1;
    return from_term(std::move(m), Rational(1));
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Monomial(nvars_)); }

  /// Largest total degree of a term; 0 for the zero polynomial.
  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_) throw DimensionMismatch("term does not match the ambient ring");
    if (is_zero_rat(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_rat(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& g) {
    require_same_ring(g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& g) {
    require_same_ring(g);
    for (const auto& [m, c] : g.terms_) {
      Rational neg = -c;
      add_term(m, neg);
    }
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    if (is_zero_rat(c)) {
      terms_.clear();
    } else {
      for (auto& [m, coeff] : terms_) coeff *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.require_same_ring(g);
    Polynomial r(f.nvars_);
    for (const auto& [mf, cf] : f.terms_)
      for (const auto& [mg, cg] : g.terms_) {
        Rational c = cf * cg;
        r.add_term(mf * mg, c);
      }
    return r;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
  }
  friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

  /// Formal partial derivative with respect to variable i.
  Polynomial derivative(std::size_t i) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial n(m);
      n[i] -= 1;
      Rational scaled = c * static_cast<unsigned long>(m[i]);
      r.add_term(n, scaled);
    }
    return r;
  }

  /// Sum of the terms of total degree <= d.
  Polynomial jet(unsigned d) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() <= d) r.add_term(m, c);
    return r;
  }

  /// Image in a larger ring: variable i becomes variable i + offset.
  Polynomial embed(std::size_t new_nvars, std::size_t offset) const {
    if (offset + nvars_ > new_nvars) throw DimensionMismatch("embedding does not fit");
    Polynomial r(new_nvars);
    for (const auto& [m, c] : terms_) {
      Monomial n(new_nvars);
      for (std::size_t i = 0; i < nvars_; ++i) n[offset + i] = m[i];
      r.add_term(n, c);
    }
    return r;
  }

  /// Set x_i := 0 for every flagged variable (ambient ring unchanged).
  Polynomial substitute_zero(const std::vector<bool>& kill) const {
    if (kill.size() != nvars_) throw DimensionMismatch("substitution mask has wrong length");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      bool dies = false;
      for (std::size_t i = 0; i < nvars_ && !dies; ++i) dies = kill[i] && m[i] > 0;
      if (!dies) r.add_term(m, c);
    }
    return r;
  }

  /// Project onto the subring of the kept variables; every term must already
  /// be supported there.
  Polynomial select_vars(const std::vector<std::size_t>& keep) const {
    std::vector<bool> kept(nvars_, false);
    for (std::size_t i : keep) kept.at(i) = true;
    Polynomial r(keep.size());
    for (const auto& [m, c] : terms_) {
      Monomial n(keep.size());
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i] > 0 && !kept[i]) throw Error("term uses a variable outside the projection");
      for (std::size_t k = 0; k < keep.size(); ++k) n[k] = m[keep[k]];
      r.add_term(n, c);
    }
    return r;
  }

private:
  static bool is_zero_rat(const Rational& c) { return sgn(c) == 0; }

  void require_same_ring(const Polynomial& g) const {
    if (nvars_ != g.nvars_) throw DimensionMismatch("polynomials live in different rings");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// The n formal partial derivatives generating the Jacobian ideal.
inline std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
  std::vector<Polynomial> gens;
  gens.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
  return gens;
}

inline Polynomial jet(const Polynomial& f, unsigned d) { return f.jet(d); }

inline std::string to_string(const Monomial& m, const std::vector<std::string>& vars) {
  if (m.nvars() != vars.size()) throw DimensionMismatch("variable names do not match monomial");
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << "*";
    out << vars[i];
    if (m[i] > 1) out << "^" << m[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

/// Canonical text form; parse_polynomial(to_string(f, vars), vars) == f.
inline std::string to_string(const Polynomial& f, const std::vector<std::string>& vars) {
  if (f.nvars() != vars.size()) throw DimensionMismatch("variable names do not match polynomial");
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool neg = sgn(c) < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (m.is_constant()) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << "*";
      out << to_string(m, vars);
    }
    first = false;
  }
  return out.str();
}

}  // namespace milnor

#endif
