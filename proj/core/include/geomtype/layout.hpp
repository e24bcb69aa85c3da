#pragma once

#include <vector>

#include "geomtype/geometric_type.hpp"
#include "geomtype/number_field.hpp"

namespace geomtype {

enum class LayoutMode { perron, uniform };

struct SlotSpan {
  alg::Elem lo, hi;
};

/// Affine piece of the return map on one horizontal subrectangle:
/// (x, y) -> (sx*x + ox, sy*y + oy), sending the H slot onto its phi image.
struct ReturnAffine {
  alg::Elem sx, ox, sy, oy;
};

/// Geometrisation data: every rectangle R_i as [0, w_i] x [0, t_i] with its
/// ordered subrectangle placements. In perron mode the return map pieces have
/// linear part exactly diag(1/lambda, lambda) up to the orientation flip.
struct Layout {
  LayoutMode mode = LayoutMode::uniform;
  alg::FieldPtr field;
  alg::Elem lambda;
  std::vector<alg::Elem> width, height;  // per rectangle, 0-based
  std::vector<SlotSpan> h_spans;         // y-intervals by H flat index
  std::vector<SlotSpan> v_spans;         // x-intervals by V flat index
  std::vector<ReturnAffine> ret;         // by H flat index
};

/// Builds the layout. Perron mode requires an irreducible transition matrix
/// (ReducibleError otherwise) and is exact over the working field of lambda.
Layout layout(const GeometricType& g, LayoutMode mode);

}  // namespace geomtype
