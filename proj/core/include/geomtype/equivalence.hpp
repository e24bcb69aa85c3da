#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geomtype/geometric_type.hpp"

namespace geomtype::equivalence {

/// A realized equivalence between two geometric types: a pair reindexing
/// sigma and per-rectangle orientation signs (eps for the H order, epsPrime
/// for the V order). The subrectangle bijection is induced.
struct Witness {
  std::vector<int> sigma;      // 1-based: rectangle i of the source maps to sigma[i-1]
  std::vector<int> eps;        // +1 keeps the H order of rectangle i, -1 reverses it
  std::vector<int> eps_prime;  // same for the V order

  int n() const { return static_cast<int>(sigma.size()); }
  bool is_equality() const;
  /// Image of a subrectangle reference under the induced bijection.
  SubrectangleRef map_ref(const GeometricType& src, const SubrectangleRef& r) const;
  std::string to_json() const;
  static Witness identity(int n);
};

/// Witness legality against a source type: eps*eps' constant, sigma a
/// permutation. Throws IllegalMove on structural problems.
void require_legal(const GeometricType& g, const Witness& w);

/// Builds the image type; is_equivalent(g, apply_witness(g, w)) holds by
/// construction for every legal witness.
GeometricType apply_witness(const GeometricType& g, const Witness& w);

/// Replays w as a subrectangle bijection and checks every axiom.
bool check_witness(const GeometricType& g1, const GeometricType& g2, const Witness& w);

std::optional<Witness> is_equal(const GeometricType& g1, const GeometricType& g2);
std::optional<Witness> is_equivalent(const GeometricType& g1, const GeometricType& g2);
/// Every witness between the two types (empty when not equivalent).
std::vector<Witness> all_witnesses(const GeometricType& g1, const GeometricType& g2);

Witness inverse_witness(const GeometricType& g1, const Witness& w);
/// w1 : g1 -> g2 followed by w2 : g2 -> g3.
Witness compose_witnesses(const GeometricType& g1, const Witness& w1, const Witness& w2);

struct GeneratorMove {
  enum class Kind { Reindex, FlipBoth, FlipAllStable, FlipAllUnstable };
  Kind kind = Kind::FlipAllStable;
  std::vector<int> sigma;  // Reindex only
  int rect = 0;            // FlipBoth only

  static GeneratorMove reindex(std::vector<int> sigma);
  static GeneratorMove flip_both(int rect);
  static GeneratorMove flip_all_stable();
  static GeneratorMove flip_all_unstable();
};

/// The witness realizing a move on g. Reindex demands matching (h, v) pairs.
Witness move_witness(const GeometricType& g, const GeneratorMove& m);
GeometricType apply_move(const GeometricType& g, const GeneratorMove& m);

/// Closure of {g} under the generator moves, deduplicated by is_equal.
std::vector<GeometricType> enumerate_class(const GeometricType& g);

/// Lexicographically least serialization over the equivalence class and all
/// relabelings; equal canonical forms characterize equivalence.
GeometricType canonical_form(const GeometricType& g);

}  // namespace geomtype::equivalence
