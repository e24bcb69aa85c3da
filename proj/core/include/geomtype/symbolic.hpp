#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "geomtype/geometric_type.hpp"
#include "geomtype/number_field.hpp"

namespace geomtype::symbolic {

/// M[i][j] counts the phi-images of rectangle i's horizontal subrectangles
/// landing in rectangle j; Mu carries the same counts weighted by u.
struct TransitionMatrix {
  std::vector<std::vector<long>> M;
  std::vector<std::vector<long>> Mu;
  int size() const { return static_cast<int>(M.size()); }
};

TransitionMatrix transition_matrix(const GeometricType& g);

struct Structure {
  bool irreducible = false;
  bool primitive = false;
};

Structure structure(const GeometricType& g);

/// Topological entropy of the subshift: log of the spectral radius of M.
double entropy(const GeometricType& g);

/// Number of closed edge paths of length m in the transition digraph,
/// i.e. trace(M^m).
mpz_class count_closed_words(const GeometricType& g, int m);

struct PerronData {
  double lambda = 0.0;
  std::vector<double> w;  // left eigenvector (widths), entries sum to 1
  std::vector<double> t;  // right eigenvector (heights), entries sum to 1
  bool exact = false;
  alg::FieldPtr field;  // present iff exact
  std::optional<alg::Elem> lambda_exact;
  std::vector<alg::Elem> w_exact, t_exact;
};

/// Perron data of an irreducible type. Exact in Q(lambda) while the working
/// modulus has degree <= 4, floating (residual < 1e-10) beyond that.
PerronData perron(const GeometricType& g);

/// Exact characteristic polynomial det(xI - M) of an integer matrix.
alg::Poly charpoly(const std::vector<std::vector<long>>& m);

/// Field context for lambda alone (also used by layout and cover).
struct LambdaField {
  alg::FieldPtr field;
  alg::Elem lambda;
};
LambdaField lambda_field(const GeometricType& g);

}  // namespace geomtype::symbolic
