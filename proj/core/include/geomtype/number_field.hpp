#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "geomtype/poly.hpp"

namespace geomtype::alg {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Arithmetic context for the real algebraic number `lambda`: a squarefree
/// monic modulus q with q(lambda) = 0 plus an isolating interval. The modulus
/// need not be irreducible; sign queries stay exact via gcd splitting, so
/// element comparisons are decided by value, never by representative.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static FieldPtr create(Poly squarefree_monic_modulus, RootIsolation iso);
  static FieldPtr rationals(const Rat& value);

  int degree() const { return q_.degree(); }
  const Poly& modulus() const { return q_; }
  bool root_is_rational() const { return exact_; }
  Rat rational_root() const;  // requires root_is_rational()

  /// Exact sign of p(lambda) for p with deg p < deg q.
  int sign_of(const Poly& p) const;
  double to_double(const Poly& p) const;
  /// Current enclosure of lambda (refined as queries demand).
  RatInterval root_enclosure() const;

 private:
  NumberField(Poly q, RootIsolation iso);
  void refine_once() const;  // callers hold mu_
  int sign_by_interval(const Poly& p) const;

  Poly q_;
  mutable std::mutex mu_;
  mutable Rat lo_, hi_;
  mutable bool exact_;
};

/// An element of Q(lambda), stored as a polynomial in lambda reduced mod q.
class Elem {
 public:
  Elem() = default;
  Elem(FieldPtr field, Poly value) : f_(std::move(field)), p_(reduce(*f_, std::move(value))) {}
  static Elem of(FieldPtr field, const Rat& value) { return Elem(std::move(field), Poly::constant(value)); }
  static Elem lambda(FieldPtr field) { return Elem(std::move(field), Poly::monomial(1)); }

  const FieldPtr& field() const { return f_; }
  const Poly& rep() const { return p_; }
  bool is_zero() const { return sign() == 0; }
  int sign() const;
  bool is_rational() const;  // representative is a constant
  Rat rational() const;      // requires is_rational()
  double to_double() const { return f_->to_double(p_); }
  std::string str() const;

  Elem operator-() const;
  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b);
  Elem inverse() const;

  friend bool operator==(const Elem& a, const Elem& b) { return (a - b).sign() == 0; }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
  friend bool operator<(const Elem& a, const Elem& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Elem& a, const Elem& b) { return (a - b).sign() <= 0; }
  friend bool operator>(const Elem& a, const Elem& b) { return (a - b).sign() > 0; }
  friend bool operator>=(const Elem& a, const Elem& b) { return (a - b).sign() >= 0; }

  /// Total order on representatives (not values); for use as map keys after
  /// values have been normalized through arithmetic in one field.
  static int rep_compare(const Elem& a, const Elem& b);

 private:
  static Poly reduce(const NumberField& f, Poly p);
  FieldPtr f_;
  Poly p_;
};

}  // namespace geomtype::alg
