#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace geomtype::alg {

using Rat = mpq_class;

/// Closed rational interval, endpoints included.
struct RatInterval {
  Rat lo, hi;
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rat width() const { return hi - lo; }
};

/// Dense univariate polynomial over Q, coefficients low degree first,
/// kept normalized (no trailing zero coefficients; zero polynomial is {}).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& a);
  static Poly x_minus(const Rat& a);  // x - a
  static Poly monomial(int degree, const Rat& a = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const { return c_.back(); }
  const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }

  Rat eval(const Rat& x) const;
  RatInterval eval_interval(const RatInterval& x) const;
  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Euclidean division: *this = q*d + r with deg r < deg d. d must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd over Q (zero polynomial when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);

/// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd poly_ext_gcd(const Poly& a, const Poly& b);

/// Largest squarefree divisor (monic): p / gcd(p, p').
Poly squarefree_part(const Poly& p);

/// Sturm chain of a squarefree polynomial.
class SturmChain {
 public:
  explicit SturmChain(const Poly& squarefree);
  /// Number of real roots in the half-open interval (a, b].
  int count_roots(const Rat& a, const Rat& b) const;

 private:
  int variations_at(const Rat& x) const;
  std::vector<Poly> chain_;
};

/// Isolating interval (lo, hi] for the largest real root of a squarefree
/// polynomial with at least one real root; endpoints are non-roots except
/// that hi may equal the root when the root is rational (detected exactly).
struct RootIsolation {
  Rat lo, hi;
  bool exact = false;  // root == hi exactly
};
RootIsolation isolate_largest_real_root(const Poly& squarefree, const Rat& upper_bound);

}  // namespace geomtype::alg
