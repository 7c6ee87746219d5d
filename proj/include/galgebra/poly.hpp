#ifndef GALGEBRA_POLY_HPP
#define GALGEBRA_POLY_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "galgebra/gf.hpp"
#include "galgebra/linalg.hpp"

namespace galg {

/// Univariate polynomial over a Field, dense coefficients with the constant
/// term first and no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  explicit Polynomial(Field f);  // zero polynomial
  Polynomial(Field f, std::vector<FieldElement> coeffs);
  static Polynomial from_ints(const Field& f, const std::vector<std::int64_t>& coeffs);
  static Polynomial x(const Field& f);
  static Polynomial constant(const Field& f, const FieldElement& c);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  FieldElement coeff(int i) const;  // zero beyond the degree
  FieldElement leading() const;
  const std::vector<FieldElement>& coeffs() const { return c_; }

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const FieldElement& c) const;
  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator/(const Polynomial& rhs) const { return divmod(rhs).first; }
  Polynomial operator%(const Polynomial& rhs) const { return divmod(rhs).second; }

  Polynomial monic() const;
  Polynomial derivative() const;
  FieldElement eval(const FieldElement& at) const;

 private:
  void trim();
  Field field_;
  std::vector<FieldElement> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);  // monic gcd
Polynomial pow_mod(Polynomial base, std::int64_t e, const Polynomial& m);
/// s with s*a ≡ gcd(a,m) mod m; for coprime a, m this is the inverse of a
/// modulo m. Throws when gcd(a, m) != 1.
Polynomial mod_inverse(const Polynomial& a, const Polynomial& m);

struct PolyFactor {
  Polynomial factor;  // monic irreducible
  int multiplicity;
};

/// Complete factorization over F_q: squarefree split (handling the char-p
/// p-th-power case), distinct-degree split via gcd(x^{q^d} - x, .), then
/// equal-degree split (deterministic root scan when d = 1 and q is small,
/// otherwise seeded Cantor-Zassenhaus; the trace map is used in
/// characteristic 2). The product of factor^multiplicity together with the
/// leading coefficient reproduces the input. Throws on the zero polynomial.
std::vector<PolyFactor> factor(const Polynomial& f, std::uint64_t seed = 0);

bool is_irreducible(const Polynomial& f);

/// Least-degree monic m with m(step)(v) = 0, where step applies a fixed linear
/// endomorphism; computed by Gaussian elimination on the Krylov sequence
/// v, step(v), step^2(v), ... The zero vector yields the unit polynomial.
Polynomial min_poly(const Vec& v, const std::function<Vec(const Vec&)>& step, const Field& f);

}  // namespace galg

#endif
