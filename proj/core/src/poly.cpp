#include "geomtype/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "geomtype/errors.hpp"

namespace geomtype::alg {

Poly Poly::constant(const Rat& a) { return Poly(std::vector<Rat>{a}); }

Poly Poly::x_minus(const Rat& a) { return Poly(std::vector<Rat>{-a, 1}); }

Poly Poly::monomial(int degree, const Rat& a) {
  std::vector<Rat> c(static_cast<size_t>(degree) + 1, Rat(0));
  c.back() = a;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatInterval Poly::eval_interval(const RatInterval& x) const {
  // Horner with interval products; exact rational endpoints.
  RatInterval acc{Rat(0), Rat(0)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rat p1 = acc.lo * x.lo, p2 = acc.lo * x.hi, p3 = acc.hi * x.lo, p4 = acc.hi * x.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    acc = RatInterval{lo + *it, hi + *it};
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rat> d(c_);
  const Rat lead = d.back();
  for (auto& x : d) x /= lead;
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rat> rem(c_);
  const int dd = d.degree();
  const int dn = degree();
  if (dn < dd) return {Poly(), *this};
  std::vector<Rat> quo(static_cast<size_t>(dn - dd) + 1, Rat(0));
  for (int k = dn - dd; k >= 0; --k) {
    Rat coef = rem[static_cast<size_t>(k + dd)] / d.leading();
    quo[static_cast<size_t>(k)] = coef;
    if (sgn(coef) == 0) continue;
    for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(k + i)] -= coef * d[i];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[static_cast<size_t>(i)];
    if (sgn(a) == 0) continue;
    if (!first) os << (sgn(a) > 0 ? " + " : " - ");
    else if (sgn(a) < 0) os << "-";
    Rat mag = abs(a);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  const Rat lead = r0.leading();
  auto scale = [&lead](const Poly& p) {
    std::vector<Rat> c(p.coeffs());
    for (auto& x : c) x /= lead;
    return Poly(std::move(c));
  };
  return {scale(r0), scale(s0), scale(t0)};
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero() || p.degree() == 0) return p.monic();
  Poly g = poly_gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

SturmChain::SturmChain(const Poly& squarefree) {
  chain_.push_back(squarefree);
  Poly d = squarefree.derivative();
  if (!d.is_zero()) chain_.push_back(d);
  while (chain_.size() >= 2 && chain_.back().degree() >= 1) {
    Poly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    std::vector<Rat> neg(r.coeffs());
    for (auto& x : neg) x = -x;
    chain_.push_back(Poly(std::move(neg)));
  }
}

int SturmChain::variations_at(const Rat& x) const {
  int prev = 0, var = 0;
  for (const auto& p : chain_) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
  return variations_at(a) - variations_at(b);
}

RootIsolation isolate_largest_real_root(const Poly& squarefree, const Rat& upper_bound) {
  // Cauchy-style bound as a fallback, capped below by the supplied bound.
  Rat bound = upper_bound;
  {
    Rat m(0);
    for (const auto& c : squarefree.coeffs()) m = std::max(m, abs(c));
    Rat cauchy = 1 + m / abs(squarefree.leading());
    bound = std::max(bound, cauchy);
  }
  SturmChain sturm(squarefree);
  const int total = sturm.count_roots(-bound, bound);
  if (total <= 0) throw Error("isolate_largest_real_root: no real root");
  // Shrink to an interval holding only the largest root.
  Rat lo = -bound, hi = bound;
  while (sturm.count_roots(lo, hi) > 1) {
    Rat mid = (lo + hi) / 2;
    if (sturm.count_roots(mid, hi) >= 1) lo = mid;
    else hi = mid;
  }
  // Endpoint hygiene: (lo, hi] with exactly one root inside.
  RootIsolation iso;
  iso.lo = lo;
  iso.hi = hi;
  if (sgn(squarefree.eval(hi)) == 0) {
    iso.exact = true;
    return iso;
  }
  // Detect a rational root by bisection collapse: refine a little and test
  // midpoints; exactness is decided only by an exact zero of the polynomial.
  for (int i = 0; i < 2; ++i) {
    Rat mid = (iso.lo + iso.hi) / 2;
    int sm = sgn(squarefree.eval(mid));
    if (sm == 0) {
      iso.lo = mid;
      iso.hi = mid;
      iso.exact = true;
      return iso;
    }
    if (sturm.count_roots(mid, iso.hi) >= 1) iso.lo = mid;
    else iso.hi = mid;
  }
  return iso;
}

}  // namespace geomtype::alg
