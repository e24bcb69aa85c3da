#include "geomtype/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "geomtype/gt_io.hpp"

namespace geomtype::equivalence {

bool Witness::is_equality() const {
  auto all_plus = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; });
  };
  return all_plus(eps) && all_plus(eps_prime);
}

Witness Witness::identity(int n) {
  Witness w;
  w.sigma.resize(static_cast<size_t>(n));
  std::iota(w.sigma.begin(), w.sigma.end(), 1);
  w.eps.assign(static_cast<size_t>(n), 1);
  w.eps_prime.assign(static_cast<size_t>(n), 1);
  return w;
}

SubrectangleRef Witness::map_ref(const GeometricType& src, const SubrectangleRef& r) const {
  const size_t i = static_cast<size_t>(r.rect - 1);
  if (r.kind == SlotKind::H) {
    int slot = eps[i] > 0 ? r.slot : src.h[i] + 1 - r.slot;
    return SubrectangleRef::h(sigma[i], slot);
  }
  int slot = eps_prime[i] > 0 ? r.slot : src.v[i] + 1 - r.slot;
  return SubrectangleRef::v(sigma[i], slot);
}

std::string Witness::to_json() const {
  std::ostringstream os;
  auto arr = [&os](const std::vector<int>& v) {
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  os << "{\"sigma\":";
  arr(sigma);
  os << ",\"eps\":";
  arr(eps);
  os << ",\"epsPrime\":";
  arr(eps_prime);
  os << "}";
  return os.str();
}

void require_legal(const GeometricType& g, const Witness& w) {
  const int n = g.rect_count();
  if (w.n() != n || static_cast<int>(w.eps.size()) != n ||
      static_cast<int>(w.eps_prime.size()) != n)
    throw IllegalMove("witness size does not match the type");
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (int s : w.sigma) {
    if (s < 1 || s > n || hit[static_cast<size_t>(s - 1)])
      throw IllegalMove("sigma is not a permutation");
    hit[static_cast<size_t>(s - 1)] = true;
  }
  int c = 0;
  for (int i = 0; i < n; ++i) {
    if ((w.eps[static_cast<size_t>(i)] != 1 && w.eps[static_cast<size_t>(i)] != -1) ||
        (w.eps_prime[static_cast<size_t>(i)] != 1 && w.eps_prime[static_cast<size_t>(i)] != -1))
      throw IllegalMove("orientation signs must be +1 or -1");
    int prod = w.eps[static_cast<size_t>(i)] * w.eps_prime[static_cast<size_t>(i)];
    if (c == 0) c = prod;
    else if (c != prod)
      throw IllegalMove("eps_i * eps'_i must be the same sign for every rectangle");
  }
}

GeometricType apply_witness(const GeometricType& g, const Witness& w) {
  require_legal(g, w);
  const int n = g.rect_count();
  GeometricType out;
  out.h.assign(static_cast<size_t>(n), 0);
  out.v.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    out.h[static_cast<size_t>(w.sigma[static_cast<size_t>(i)] - 1)] = g.h[static_cast<size_t>(i)];
    out.v[static_cast<size_t>(w.sigma[static_cast<size_t>(i)] - 1)] = g.v[static_cast<size_t>(i)];
  }
  for (const auto& m : g.maps) {
    MapEntry e;
    e.from = w.map_ref(g, m.from);
    e.to = w.map_ref(g, m.to);
    e.sign = w.eps[static_cast<size_t>(m.from.rect - 1)] *
             w.eps[static_cast<size_t>(m.to.rect - 1)] * m.sign;
    out.maps.push_back(e);
  }
  return out;
}

bool check_witness(const GeometricType& g1, const GeometricType& g2, const Witness& w) {
  if (g1.rect_count() != g2.rect_count()) return false;
  const int n = g1.rect_count();
  if (w.n() != n) return false;
  try {
    require_legal(g1, w);
  } catch (const IllegalMove&) {
    return false;
  }
  for (int i = 0; i < n; ++i) {
    int to = w.sigma[static_cast<size_t>(i)] - 1;
    if (g1.h[static_cast<size_t>(i)] != g2.h[static_cast<size_t>(to)]) return false;
    if (g1.v[static_cast<size_t>(i)] != g2.v[static_cast<size_t>(to)]) return false;
  }
  TypeIndex i1(g1), i2(g2);
  for (const auto& m : g1.maps) {
    SubrectangleRef img_h = w.map_ref(g1, m.from);
    SubrectangleRef expect = w.map_ref(g1, m.to);  // H(phi(h))
    if (i2.phi(img_h) != expect) return false;     // phi'(H(h)) = H(phi(h))
    int ei = w.eps[static_cast<size_t>(m.from.rect - 1)];
    int ej = w.eps[static_cast<size_t>(m.to.rect - 1)];
    int ei_p = w.eps_prime[static_cast<size_t>(m.from.rect - 1)];
    int ej_p = w.eps_prime[static_cast<size_t>(m.to.rect - 1)];
    if (i2.u(img_h) != ei * ej * m.sign) return false;
    if (i2.u(img_h) != ei_p * ej_p * m.sign) return false;
  }
  return true;
}

namespace {

/// Backtracking over pair-preserving sigma; calls f(sigma) at completions and
/// stops early when f returns true.
bool for_each_sigma(const GeometricType& g1, const GeometricType& g2,
                    const std::function<bool(const std::vector<int>&)>& f) {
  const int n = g1.rect_count();
  if (n != g2.rect_count()) return false;
  std::vector<int> sigma(static_cast<size_t>(n), 0);
  std::vector<bool> used(static_cast<size_t>(n), false);
  auto pairs_match = [&](int i, int j) {
    return g1.h[static_cast<size_t>(i)] == g2.h[static_cast<size_t>(j)] &&
           g1.v[static_cast<size_t>(i)] == g2.v[static_cast<size_t>(j)];
  };
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return f(sigma);
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)] || !pairs_match(i, j)) continue;
      used[static_cast<size_t>(j)] = true;
      sigma[static_cast<size_t>(i)] = j + 1;
      if (rec(i + 1)) return true;
      used[static_cast<size_t>(j)] = false;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::optional<Witness> is_equal(const GeometricType& g1, const GeometricType& g2) {
  if (!validate(g1).ok() || !validate(g2).ok())
    throw InvalidType("is_equal requires valid geometric types");
  std::optional<Witness> found;
  const int n = g1.rect_count();
  for_each_sigma(g1, g2, [&](const std::vector<int>& sigma) {
    Witness w;
    w.sigma = sigma;
    w.eps.assign(static_cast<size_t>(n), 1);
    w.eps_prime.assign(static_cast<size_t>(n), 1);
    if (check_witness(g1, g2, w)) {
      found = w;
      return true;
    }
    return false;
  });
  return found;
}

namespace {

std::optional<Witness> search_witness(const GeometricType& g1, const GeometricType& g2,
                                      std::vector<Witness>* collect_all) {
  if (!validate(g1).ok() || !validate(g2).ok())
    throw InvalidType("equivalence search requires valid geometric types");
  const int n = g1.rect_count();
  std::optional<Witness> found;
  for_each_sigma(g1, g2, [&](const std::vector<int>& sigma) {
    // eps free, eps' = c * eps: exactly the constant-product constraint.
    for (int c : {+1, -1}) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Witness w;
        w.sigma = sigma;
        w.eps.resize(static_cast<size_t>(n));
        w.eps_prime.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
          w.eps[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
          w.eps_prime[static_cast<size_t>(i)] = c * w.eps[static_cast<size_t>(i)];
        }
        if (check_witness(g1, g2, w)) {
          if (collect_all) collect_all->push_back(w);
          else {
            found = w;
            return true;
          }
        }
      }
    }
    return false;
  });
  return found;
}

}  // namespace

std::optional<Witness> is_equivalent(const GeometricType& g1, const GeometricType& g2) {
  return search_witness(g1, g2, nullptr);
}

std::vector<Witness> all_witnesses(const GeometricType& g1, const GeometricType& g2) {
  std::vector<Witness> all;
  search_witness(g1, g2, &all);
  return all;
}

Witness inverse_witness(const GeometricType& g1, const Witness& w) {
  const int n = w.n();
  Witness inv;
  inv.sigma.assign(static_cast<size_t>(n), 0);
  inv.eps.assign(static_cast<size_t>(n), 1);
  inv.eps_prime.assign(static_cast<size_t>(n), 1);
  (void)g1;
  for (int i = 0; i < n; ++i) {
    int img = w.sigma[static_cast<size_t>(i)];
    inv.sigma[static_cast<size_t>(img - 1)] = i + 1;
    inv.eps[static_cast<size_t>(img - 1)] = w.eps[static_cast<size_t>(i)];
    inv.eps_prime[static_cast<size_t>(img - 1)] = w.eps_prime[static_cast<size_t>(i)];
  }
  return inv;
}

Witness compose_witnesses(const GeometricType& g1, const Witness& w1, const Witness& w2) {
  const int n = w1.n();
  (void)g1;
  Witness out;
  out.sigma.resize(static_cast<size_t>(n));
  out.eps.resize(static_cast<size_t>(n));
  out.eps_prime.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int mid = w1.sigma[static_cast<size_t>(i)];
    out.sigma[static_cast<size_t>(i)] = w2.sigma[static_cast<size_t>(mid - 1)];
    out.eps[static_cast<size_t>(i)] =
        w1.eps[static_cast<size_t>(i)] * w2.eps[static_cast<size_t>(mid - 1)];
    out.eps_prime[static_cast<size_t>(i)] =
        w1.eps_prime[static_cast<size_t>(i)] * w2.eps_prime[static_cast<size_t>(mid - 1)];
  }
  return out;
}

GeneratorMove GeneratorMove::reindex(std::vector<int> sigma) {
  GeneratorMove m;
  m.kind = Kind::Reindex;
  m.sigma = std::move(sigma);
  return m;
}

GeneratorMove GeneratorMove::flip_both(int rect) {
  GeneratorMove m;
  m.kind = Kind::FlipBoth;
  m.rect = rect;
  return m;
}

GeneratorMove GeneratorMove::flip_all_stable() {
  GeneratorMove m;
  m.kind = Kind::FlipAllStable;
  return m;
}

GeneratorMove GeneratorMove::flip_all_unstable() {
  GeneratorMove m;
  m.kind = Kind::FlipAllUnstable;
  return m;
}

Witness move_witness(const GeometricType& g, const GeneratorMove& m) {
  const int n = g.rect_count();
  Witness w = Witness::identity(n);
  switch (m.kind) {
    case GeneratorMove::Kind::Reindex: {
      if (static_cast<int>(m.sigma.size()) != n) throw IllegalMove("reindex size mismatch");
      w.sigma = m.sigma;
      require_legal(g, w);
      for (int i = 0; i < n; ++i) {
        int j = w.sigma[static_cast<size_t>(i)] - 1;
        if (g.h[static_cast<size_t>(i)] != g.h[static_cast<size_t>(j)] ||
            g.v[static_cast<size_t>(i)] != g.v[static_cast<size_t>(j)])
          throw IllegalMove("reindex does not preserve the (h, v) pairs");
      }
      break;
    }
    case GeneratorMove::Kind::FlipBoth: {
      if (m.rect < 1 || m.rect > n) throw IllegalMove("flip_both rectangle out of range");
      w.eps[static_cast<size_t>(m.rect - 1)] = -1;
      w.eps_prime[static_cast<size_t>(m.rect - 1)] = -1;
      break;
    }
    case GeneratorMove::Kind::FlipAllStable:
      // Reverses the left-to-right (V) order in every rectangle.
      w.eps_prime.assign(static_cast<size_t>(n), -1);
      break;
    case GeneratorMove::Kind::FlipAllUnstable:
      // Reverses the bottom-to-top (H) order in every rectangle.
      w.eps.assign(static_cast<size_t>(n), -1);
      break;
  }
  return w;
}

GeometricType apply_move(const GeometricType& g, const GeneratorMove& m) {
  return apply_witness(g, move_witness(g, m));
}

std::vector<GeometricType> enumerate_class(const GeometricType& g) {
  if (!validate(g).ok()) throw InvalidType("enumerate_class requires a valid type");
  std::vector<GeometricType> members{g};
  std::vector<GeneratorMove> moves;
  for (int i = 1; i <= g.rect_count(); ++i) moves.push_back(GeneratorMove::flip_both(i));
  moves.push_back(GeneratorMove::flip_all_stable());
  moves.push_back(GeneratorMove::flip_all_unstable());
  auto known = [&members](const GeometricType& cand) {
    return std::any_of(members.begin(), members.end(),
                       [&cand](const GeometricType& m) { return is_equal(m, cand).has_value(); });
  };
  for (size_t at = 0; at < members.size(); ++at) {
    GeometricType cur = members[at];  // copy: members may reallocate
    for (const auto& mv : moves) {
      GeometricType next = apply_move(cur, mv);
      if (!known(next)) members.push_back(std::move(next));
    }
  }
  return members;
}

GeometricType canonical_form(const GeometricType& g) {
  std::vector<GeometricType> members = enumerate_class(g);
  std::string best;
  // Minimize over class members and all relabelings of each member.
  for (const auto& m : members) {
    const int n = m.rect_count();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      Witness w = Witness::identity(n);
      // perm as sigma: rectangle i -> position perm[i-1].
      w.sigma = perm;
      std::string s = serialize_gt(apply_witness(m, w));
      if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return parse_gt(best);
}

}  // namespace geomtype::equivalence
