// Anti-graded reverse-lexicographic local monomial order.
#ifndef MILNOR_LOCAL_ORDER_HPP
#define MILNOR_LOCAL_ORDER_HPP

#include <cstddef>
#include <numeric>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/monomial.hpp"

namespace milnor {

enum class Ordering { less, equal, greater };

/// Local (tangent-cone) order: a monomial of strictly smaller total degree is
/// strictly greater, so the constant monomial 1 is the maximum. Ties at equal
/// degree are broken reverse-lexicographically along the variable priority:
/// m1 > m2 iff the last nonzero entry of exp(m1) - exp(m2), read in priority
/// sequence, is negative. The order is total and multiplicative.
class LocalOrder {
public:
  /// Priority = declaration order of the variables.
  explicit LocalOrder(std::size_t nvars) : prio_(nvars) {
    std::iota(prio_.begin(), prio_.end(), std::size_t{0});
  }

  /// priority[0] is the highest-priority variable index.
  explicit LocalOrder(std::vector<std::size_t> priority) : prio_(std::move(priority)) {
    std::vector<bool> seen(prio_.size(), false);
    for (std::size_t v : prio_) {
      if (v >= prio_.size() || seen[v]) throw Error("variable priority is not a permutation");
      seen[v] = true;
    }
  }

  std::size_t nvars() const { return prio_.size(); }
  const std::vector<std::size_t>& priority() const { return prio_; }

  Ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != prio_.size() || b.nvars() != prio_.size())
      throw DimensionMismatch("monomial dimension does not match the order");
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? Ordering::greater : Ordering::less;
    for (std::size_t k = prio_.size(); k-- > 0;) {
      const std::size_t v = prio_[k];
      if (a[v] != b[v]) return a[v] > b[v] ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::greater;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::less;
  }

private:
  std::vector<std::size_t> prio_;
};

inline Ordering compare(const Monomial& a, const Monomial& b, const LocalOrder& o) {
  return o.compare(a, b);
}

}  // namespace milnor

#endif
