#include "geomtype/geometric_type.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace geomtype {

std::string SubrectangleRef::str() const {
  std::ostringstream os;
  os << (kind == SlotKind::H ? 'H' : 'V') << rect << '.' << slot;
  return os.str();
}

int GeometricType::total_h() const { return std::accumulate(h.begin(), h.end(), 0); }
int GeometricType::total_v() const { return std::accumulate(v.begin(), v.end(), 0); }

ValidationReport validate(const GeometricType& g) {
  ValidationReport rep;
  auto flag = [&rep](const std::string& s) { rep.problems.push_back(s); };

  const int n = g.rect_count();
  if (n < 1) flag("n must be at least 1");
  if (g.v.size() != g.h.size())
    flag("rectangle lists h and v have different lengths");
  for (int i = 0; i < n; ++i) {
    if (g.h[static_cast<size_t>(i)] < 1)
      flag("h_" + std::to_string(i + 1) + " must be positive");
    if (i < static_cast<int>(g.v.size()) && g.v[static_cast<size_t>(i)] < 1)
      flag("v_" + std::to_string(i + 1) + " must be positive");
  }
  const int th = g.total_h();
  const int tv = g.total_v();
  if (th != tv)
    flag("sum mismatch: sum h_i = " + std::to_string(th) + " but sum v_i = " + std::to_string(tv));

  auto in_range = [&](const SubrectangleRef& r, SlotKind want) {
    if (r.kind != want) return false;
    if (r.rect < 1 || r.rect > n) return false;
    const auto& counts = want == SlotKind::H ? g.h : g.v;
    if (r.rect > static_cast<int>(counts.size())) return false;
    return r.slot >= 1 && r.slot <= counts[static_cast<size_t>(r.rect - 1)];
  };

  std::vector<int> seen_h(static_cast<size_t>(std::max(th, 0)), 0);
  std::vector<int> seen_v(static_cast<size_t>(std::max(tv, 0)), 0);
  std::vector<int> hoff(g.h.size() + 1, 0), voff(g.v.size() + 1, 0);
  for (size_t i = 0; i < g.h.size(); ++i) hoff[i + 1] = hoff[i] + std::max(g.h[i], 0);
  for (size_t i = 0; i < g.v.size(); ++i) voff[i + 1] = voff[i] + std::max(g.v[i], 0);

  for (const auto& m : g.maps) {
    if (!in_range(m.from, SlotKind::H)) {
      flag("map source " + m.from.str() + " is not a valid H reference");
    } else {
      int f = hoff[static_cast<size_t>(m.from.rect - 1)] + m.from.slot - 1;
      if (f < static_cast<int>(seen_h.size()) && ++seen_h[static_cast<size_t>(f)] > 1)
        flag("map source " + m.from.str() + " appears more than once");
    }
    if (!in_range(m.to, SlotKind::V)) {
      flag("map target " + m.to.str() + " is not a valid V reference");
    } else {
      int f = voff[static_cast<size_t>(m.to.rect - 1)] + m.to.slot - 1;
      if (f < static_cast<int>(seen_v.size()) && ++seen_v[static_cast<size_t>(f)] > 1)
        flag("map target " + m.to.str() + " is hit more than once");
    }
    if (m.sign != 1 && m.sign != -1)
      flag("orientation value for " + m.from.str() + " must be +1 or -1");
  }
  if (static_cast<int>(g.maps.size()) != th)
    flag("expected " + std::to_string(th) + " map entries, found " + std::to_string(g.maps.size()));
  if (th == tv) {
    for (int f = 0; f < th; ++f)
      if (seen_h[static_cast<size_t>(f)] == 0) {
        flag("phi is not total: some H reference has no image");
        break;
      }
    for (int f = 0; f < tv; ++f)
      if (seen_v[static_cast<size_t>(f)] == 0) {
        flag("phi is not onto: some V reference has no preimage");
        break;
      }
  }
  return rep;
}

TypeIndex::TypeIndex(const GeometricType& g) {
  ValidationReport rep = validate(g);
  if (!rep.ok()) throw InvalidType("invalid geometric type: " + rep.problems.front());
  n_ = g.rect_count();
  h_ = g.h;
  v_ = g.v;
  hoff_.assign(static_cast<size_t>(n_), 0);
  voff_.assign(static_cast<size_t>(n_), 0);
  for (int i = 1; i < n_; ++i) {
    hoff_[static_cast<size_t>(i)] = hoff_[static_cast<size_t>(i - 1)] + h_[static_cast<size_t>(i - 1)];
    voff_[static_cast<size_t>(i)] = voff_[static_cast<size_t>(i - 1)] + v_[static_cast<size_t>(i - 1)];
  }
  total_ = g.total_h();
  phi_.resize(static_cast<size_t>(total_));
  phi_inv_.resize(static_cast<size_t>(total_));
  u_.resize(static_cast<size_t>(total_));
  for (const auto& m : g.maps) {
    int hf = h_flat(m.from.rect, m.from.slot);
    int vf = v_flat(m.to.rect, m.to.slot);
    phi_[static_cast<size_t>(hf)] = m.to;
    phi_inv_[static_cast<size_t>(vf)] = m.from;
    u_[static_cast<size_t>(hf)] = m.sign;
  }
}

SubrectangleRef TypeIndex::h_ref(int flat) const {
  int rect = 1;
  while (rect < n_ && hoff_[static_cast<size_t>(rect)] <= flat) ++rect;
  return SubrectangleRef::h(rect, flat - hoff_[static_cast<size_t>(rect - 1)] + 1);
}

SubrectangleRef TypeIndex::v_ref(int flat) const {
  int rect = 1;
  while (rect < n_ && voff_[static_cast<size_t>(rect)] <= flat) ++rect;
  return SubrectangleRef::v(rect, flat - voff_[static_cast<size_t>(rect - 1)] + 1);
}

SubrectangleRef TypeIndex::phi(const SubrectangleRef& h) const {
  return phi_[static_cast<size_t>(h_flat(h.rect, h.slot))];
}

SubrectangleRef TypeIndex::phi_inv(const SubrectangleRef& v) const {
  return phi_inv_[static_cast<size_t>(v_flat(v.rect, v.slot))];
}

int TypeIndex::u(const SubrectangleRef& h) const {
  return u_[static_cast<size_t>(h_flat(h.rect, h.slot))];
}

std::pair<SubrectangleRef, int> return_image(const GeometricType& g, const SubrectangleRef& r) {
  if (r.kind != SlotKind::H) throw KindError("return_image expects an H reference");
  TypeIndex idx(g);
  return {idx.phi(r), idx.u(r)};
}

std::pair<SubrectangleRef, int> return_preimage(const GeometricType& g, const SubrectangleRef& r) {
  if (r.kind != SlotKind::V) throw KindError("return_preimage expects a V reference");
  TypeIndex idx(g);
  SubrectangleRef pre = idx.phi_inv(r);
  return {pre, idx.u(pre)};
}

GeometricType make_trivial() {
  GeometricType g;
  g.h = {1};
  g.v = {1};
  g.maps = {{SubrectangleRef::h(1, 1), SubrectangleRef::v(1, 1), +1}};
  return g;
}

GeometricType make_full_two() {
  GeometricType g;
  g.h = {2};
  g.v = {2};
  g.maps = {{SubrectangleRef::h(1, 1), SubrectangleRef::v(1, 1), +1},
            {SubrectangleRef::h(1, 2), SubrectangleRef::v(1, 2), +1}};
  return g;
}

GeometricType make_golden() {
  GeometricType g;
  g.h = {2, 1};
  g.v = {2, 1};
  g.maps = {{SubrectangleRef::h(1, 1), SubrectangleRef::v(1, 1), +1},
            {SubrectangleRef::h(1, 2), SubrectangleRef::v(2, 1), +1},
            {SubrectangleRef::h(2, 1), SubrectangleRef::v(1, 2), +1}};
  return g;
}

}  // namespace geomtype
