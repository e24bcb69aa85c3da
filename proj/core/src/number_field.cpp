#include "geomtype/number_field.hpp"

#include <cassert>
#include <sstream>

#include "geomtype/errors.hpp"

namespace geomtype::alg {

NumberField::NumberField(Poly q, RootIsolation iso)
    : q_(std::move(q)), lo_(iso.lo), hi_(iso.hi), exact_(iso.exact) {}

FieldPtr NumberField::create(Poly squarefree_monic_modulus, RootIsolation iso) {
  if (squarefree_monic_modulus.degree() < 1)
    throw Error("number field modulus must have degree >= 1");
  struct Make : NumberField {
    Make(Poly q, RootIsolation i) : NumberField(std::move(q), i) {}
  };
  return std::make_shared<const Make>(std::move(squarefree_monic_modulus), iso);
}

FieldPtr NumberField::rationals(const Rat& value) {
  RootIsolation iso;
  iso.lo = value - 1;
  iso.hi = value;
  iso.exact = true;
  return create(Poly::x_minus(value), iso);
}

Rat NumberField::rational_root() const {
  if (!exact_) throw Error("root is not known to be rational");
  return hi_;
}

RatInterval NumberField::root_enclosure() const {
  std::lock_guard<std::mutex> lock(mu_);
  return exact_ ? RatInterval{hi_, hi_} : RatInterval{lo_, hi_};
}

void NumberField::refine_once() const {
  if (exact_) return;
  Rat mid = (lo_ + hi_) / 2;
  int s = sgn(q_.eval(mid));
  if (s == 0) {
    lo_ = mid;
    hi_ = mid;
    exact_ = true;
    return;
  }
  if (s == sgn(q_.eval(hi_))) hi_ = mid;
  else lo_ = mid;
}

int NumberField::sign_by_interval(const Poly& p) const {
  std::lock_guard<std::mutex> lock(mu_);
  for (;;) {
    if (exact_) return sgn(p.eval(hi_));
    RatInterval e = p.eval_interval(RatInterval{lo_, hi_});
    if (!e.contains_zero()) return sgn(e.lo) > 0 ? 1 : -1;
    refine_once();
  }
}

int NumberField::sign_of(const Poly& p) const {
  if (p.is_zero()) return 0;
  if (exact_) {
    std::lock_guard<std::mutex> lock(mu_);
    return sgn(p.eval(hi_));
  }
  // Fast path: a few refinements usually separate a nonzero value from 0.
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (int i = 0; i < 3; ++i) {
      RatInterval e = p.eval_interval(RatInterval{lo_, hi_});
      if (!e.contains_zero()) return sgn(e.lo) > 0 ? 1 : -1;
      refine_once();
      if (exact_) return sgn(p.eval(hi_));
    }
  }
  // p(lambda) = 0 iff lambda is a root of gcd(p, q).
  Poly g = poly_gcd(p, q_);
  if (g.degree() == 0) return sign_by_interval(p);
  Poly h = q_.divmod(g).first;
  // Exactly one of g, h vanishes at lambda (q squarefree => g, h coprime).
  std::unique_lock<std::mutex> lock(mu_);
  for (;;) {
    if (exact_) {
      if (sgn(g.eval(hi_)) == 0) return 0;
      lock.unlock();
      return sign_by_interval(p);
    }
    RatInterval ge = g.eval_interval(RatInterval{lo_, hi_});
    RatInterval he = h.eval_interval(RatInterval{lo_, hi_});
    if (!he.contains_zero()) return 0;  // g(lambda) = 0
    if (!ge.contains_zero()) {
      lock.unlock();
      return sign_by_interval(p);
    }
    refine_once();
  }
}

double NumberField::to_double(const Poly& p) const {
  if (p.is_zero()) return 0.0;
  std::lock_guard<std::mutex> lock(mu_);
  if (exact_) return p.eval(hi_).get_d();
  const Rat target(mpz_class(1), mpz_class(1) << 70);
  for (;;) {
    RatInterval e = p.eval_interval(RatInterval{lo_, hi_});
    Rat w = e.width();
    Rat scale = std::max(Rat(1), std::max(abs(e.lo), abs(e.hi)));
    if (w < target * scale) {
      Rat mid = (e.lo + e.hi) / 2;
      return mid.get_d();
    }
    refine_once();
  }
}

Poly Elem::reduce(const NumberField& f, Poly p) {
  if (p.degree() < f.degree()) return p;
  return p.divmod(f.modulus()).second;
}

int Elem::sign() const {
  if (!f_) return 0;
  return f_->sign_of(p_);
}

bool Elem::is_rational() const { return p_.degree() <= 0; }

Rat Elem::rational() const {
  if (p_.is_zero()) return Rat(0);
  if (p_.degree() != 0) throw Error("element representative is not a constant");
  return p_[0];
}

std::string Elem::str() const {
  if (is_rational()) return p_.is_zero() ? "0" : p_[0].get_str();
  return p_.str("l");
}

Elem Elem::operator-() const {
  std::vector<Rat> c(p_.coeffs());
  for (auto& x : c) x = -x;
  Elem r;
  r.f_ = f_;
  r.p_ = Poly(std::move(c));
  return r;
}

static void require_same_field(const Elem& a, const Elem& b) {
  if (a.field() != b.field())
    throw Error("number field elements belong to different contexts");
}

Elem operator+(const Elem& a, const Elem& b) {
  require_same_field(a, b);
  return Elem(a.field(), a.rep() + b.rep());
}

Elem operator-(const Elem& a, const Elem& b) {
  require_same_field(a, b);
  return Elem(a.field(), a.rep() - b.rep());
}

Elem operator*(const Elem& a, const Elem& b) {
  require_same_field(a, b);
  return Elem(a.field(), a.rep() * b.rep());
}

Elem Elem::inverse() const {
  if (p_.is_zero()) throw DivisionByZero("inverse of zero");
  ExtGcd e = poly_ext_gcd(p_, f_->modulus());
  if (e.g.degree() == 0) return Elem(f_, e.s);
  // Zero divisor in a reducible modulus: invert against the cofactor that
  // still vanishes at lambda, or report a genuine division by zero.
  if (f_->sign_of(e.g.degree() < f_->degree() ? e.g : e.g.divmod(f_->modulus()).second) == 0)
    throw DivisionByZero("inverse of an element that vanishes at lambda");
  Poly h = f_->modulus().divmod(e.g).first;
  ExtGcd e2 = poly_ext_gcd(p_.divmod(h).second, h);
  if (e2.g.degree() != 0) throw Error("inverse: unexpected zero divisor");
  Elem r;
  r.f_ = f_;
  r.p_ = e2.s.degree() < f_->degree() ? e2.s : e2.s.divmod(f_->modulus()).second;
  return r;
}

Elem operator/(const Elem& a, const Elem& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

int Elem::rep_compare(const Elem& a, const Elem& b) {
  const auto& ca = a.rep().coeffs();
  const auto& cb = b.rep().coeffs();
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  for (size_t i = 0; i < ca.size(); ++i) {
    int c = cmp(ca[i], cb[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace geomtype::alg
