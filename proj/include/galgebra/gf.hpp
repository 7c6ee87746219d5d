#ifndef GALGEBRA_GF_HPP
#define GALGEBRA_GF_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace galg {

class FieldElement;

/// Finite field F_{p^n}. Elements are residues of F_p[x] modulo a monic
/// irreducible polynomial of degree n; the modulus is chosen as the
/// lexicographically least monic irreducible (coefficients compared from the
/// constant term up), so a given (p, n) always yields the same field model.
///
/// Field is an immutable shared handle; copying is cheap and thread-safe.
class Field {
 public:
  /// Builds F_{p^n}. Throws std::invalid_argument if p is not prime or n < 1,
  /// std::overflow_error if p^n exceeds 2^31.
  Field(std::int64_t p, int n);

  /// Builds F_{p^n} with an explicit monic modulus (length n+1, constant term
  /// first). The modulus is verified irreducible over F_p.
  Field(std::int64_t p, int n, std::vector<std::int64_t> modulus);

  std::int64_t characteristic() const { return rep_->p; }
  int degree() const { return rep_->n; }
  std::int64_t order() const { return rep_->q; }
  const std::vector<std::int64_t>& modulus() const { return rep_->modulus; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Embeds v mod p as a constant.
  FieldElement from_int(std::int64_t v) const;
  /// Element with the given residue coefficients (constant term first,
  /// at most n entries; entries are reduced mod p).
  FieldElement element(std::vector<std::int64_t> coeffs) const;
  /// Element whose coefficient vector is the base-p digits of label,
  /// 0 <= label < q. Inverse of label().
  FieldElement from_label(std::int64_t label) const;
  std::int64_t label(const FieldElement& a) const;
  /// All q elements in label order. Intended for small fields.
  std::vector<FieldElement> elements() const;

  /// Same mathematical field: equal p and equal modulus.
  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

 private:
  struct Rep {
    std::int64_t p;
    int n;
    std::int64_t q;
    std::vector<std::int64_t> modulus;
  };
  std::shared_ptr<const Rep> rep_;
  friend class FieldElement;
};

/// Element of a Field, in canonical form: exactly n coefficients, each in
/// [0, p). Equality is coefficient-wise. Immutable in practice; all operations
/// return new values.
class FieldElement {
 public:
  FieldElement() = default;  // detached; usable only after assignment

  const Field& field() const { return field_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

  /// Throws std::invalid_argument when the operands belong to different fields.
  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

 private:
  FieldElement(Field f, std::vector<std::int64_t> c);
  Field field_;
  std::vector<std::int64_t> c_;
  friend class Field;
  friend FieldElement inv(const FieldElement&);
  friend FieldElement pow(const FieldElement&, std::int64_t);
};

/// Multiplicative inverse; throws std::domain_error on zero.
FieldElement inv(const FieldElement& a);
/// a^e by square-and-multiply; negative e inverts first. a^0 = 1.
FieldElement pow(const FieldElement& a, std::int64_t e);
/// The p-power (Frobenius) map a -> a^p; applying it degree() times is the
/// identity.
FieldElement frobenius(const FieldElement& a);

bool is_prime(std::int64_t v);
/// Decomposes a prime power q = p^n; throws std::invalid_argument otherwise.
std::pair<std::int64_t, int> prime_power_decompose(std::int64_t q);

}  // namespace galg

#endif
