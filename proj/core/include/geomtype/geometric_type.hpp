#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geomtype/errors.hpp"

namespace geomtype {

enum class SlotKind : uint8_t { H, V };

/// One element of the set H ∪ V: the j-th horizontal (bottom to top) or
/// vertical (left to right) subrectangle of rectangle `rect`. 1-based.
struct SubrectangleRef {
  SlotKind kind = SlotKind::H;
  int rect = 0;
  int slot = 0;

  static SubrectangleRef h(int rect, int slot) { return {SlotKind::H, rect, slot}; }
  static SubrectangleRef v(int rect, int slot) { return {SlotKind::V, rect, slot}; }
  friend bool operator==(const SubrectangleRef&, const SubrectangleRef&) = default;
  friend auto operator<=>(const SubrectangleRef&, const SubrectangleRef&) = default;
  std::string str() const;
};

struct MapEntry {
  SubrectangleRef from;  // H-side
  SubrectangleRef to;    // V-side
  int sign = +1;         // u value
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

/// The combinatorial datum (n, h_i, v_i, phi, u). Kept as raw entries so that
/// candidate data can be held and inspected before validation.
struct GeometricType {
  std::vector<int> h;
  std::vector<int> v;
  std::vector<MapEntry> maps;

  int rect_count() const { return static_cast<int>(h.size()); }
  int total_h() const;
  int total_v() const;
  friend bool operator==(const GeometricType&, const GeometricType&) = default;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Checks every invariant of the definition; violations are report entries.
ValidationReport validate(const GeometricType& g);

/// Fast lookups over a valid type. Construction throws InvalidType otherwise.
class TypeIndex {
 public:
  explicit TypeIndex(const GeometricType& g);

  int rect_count() const { return n_; }
  int h_of(int rect) const { return h_[static_cast<size_t>(rect - 1)]; }
  int v_of(int rect) const { return v_[static_cast<size_t>(rect - 1)]; }
  int total() const { return total_; }

  int h_flat(int rect, int slot) const { return hoff_[static_cast<size_t>(rect - 1)] + slot - 1; }
  int v_flat(int rect, int slot) const { return voff_[static_cast<size_t>(rect - 1)] + slot - 1; }
  int flat(const SubrectangleRef& r) const {
    return r.kind == SlotKind::H ? h_flat(r.rect, r.slot) : v_flat(r.rect, r.slot);
  }
  SubrectangleRef h_ref(int flat) const;
  SubrectangleRef v_ref(int flat) const;

  SubrectangleRef phi(const SubrectangleRef& h) const;
  SubrectangleRef phi_inv(const SubrectangleRef& v) const;
  int u(const SubrectangleRef& h) const;

 private:
  int n_ = 0, total_ = 0;
  std::vector<int> h_, v_, hoff_, voff_;
  std::vector<SubrectangleRef> phi_;      // by H flat index
  std::vector<SubrectangleRef> phi_inv_;  // by V flat index
  std::vector<int> u_;                    // by H flat index
};

/// (phi(r), u(r)) for an H-kind ref; KindError otherwise.
std::pair<SubrectangleRef, int> return_image(const GeometricType& g, const SubrectangleRef& r);
/// (phi^{-1}(r), u(phi^{-1}(r))) for a V-kind ref; KindError otherwise.
std::pair<SubrectangleRef, int> return_preimage(const GeometricType& g, const SubrectangleRef& r);

// Canonical small instances used across tests and docs.
GeometricType make_trivial();   // n=1, h=v=(1)
GeometricType make_full_two();  // n=1, h=v=(2), identity phi
GeometricType make_golden();    // n=2, golden-mean partition

}  // namespace geomtype
