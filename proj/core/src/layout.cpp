#include "geomtype/layout.hpp"

#include "geomtype/symbolic.hpp"

namespace geomtype {

using alg::Elem;
using alg::Rat;

namespace {

Layout perron_layout(const GeometricType& g) {
  symbolic::Structure st = symbolic::structure(g);
  if (!st.irreducible) throw ReducibleError("perron layout requires an irreducible transition matrix");
  TypeIndex idx(g);
  symbolic::TransitionMatrix tm = symbolic::transition_matrix(g);
  symbolic::LambdaField lf = symbolic::lambda_field(g);

  Layout L;
  L.mode = LayoutMode::perron;
  L.field = lf.field;
  L.lambda = lf.lambda;

  // Exact eigenvectors over the working field, regardless of its degree;
  // the cover module applies its own degree policy.
  symbolic::PerronData pd;
  {
    // Solve kernels directly here to avoid the degree-4 exactness policy of
    // symbolic::perron(): layouts stay exact whenever a field exists.
    const size_t n = static_cast<size_t>(idx.rect_count());
    auto solve = [&](bool transpose) {
      std::vector<std::vector<Elem>> a(n, std::vector<Elem>(n));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          long entry = transpose ? tm.M[j][i] : tm.M[i][j];
          a[i][j] = Elem::of(lf.field, Rat(entry));
          if (i == j) a[i][j] = a[i][j] - lf.lambda;
        }
      std::vector<bool> col_used(n, false);
      std::vector<size_t> pivot_cols;
      size_t row = 0;
      for (size_t col = 0; col < n && row < n; ++col) {
        size_t pr = row;
        while (pr < n && a[pr][col].sign() == 0) ++pr;
        if (pr == n) continue;
        std::swap(a[pr], a[row]);
        Elem inv = a[row][col].inverse();
        for (size_t j = 0; j < n; ++j) a[row][j] = a[row][j] * inv;
        for (size_t i = 0; i < n; ++i) {
          if (i == row || a[i][col].sign() == 0) continue;
          Elem f = a[i][col];
          for (size_t j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
        }
        pivot_cols.push_back(col);
        col_used[col] = true;
        ++row;
      }
      if (pivot_cols.size() >= n) throw Error("layout: lambda is not an eigenvalue");
      size_t free_col = 0;
      while (free_col < n && col_used[free_col]) ++free_col;
      std::vector<Elem> vec(n, Elem::of(lf.field, Rat(0)));
      vec[free_col] = Elem::of(lf.field, Rat(1));
      for (size_t r = 0; r < pivot_cols.size(); ++r) vec[pivot_cols[r]] = -a[r][free_col];
      Elem sum = Elem::of(lf.field, Rat(0));
      for (const auto& x : vec) sum = sum + x;
      Elem sinv = sum.inverse();
      for (auto& x : vec) x = x * sinv;
      return vec;
    };
    pd.t_exact = solve(false);
    pd.w_exact = solve(true);
  }
  L.height = pd.t_exact;
  L.width = pd.w_exact;

  Elem lambda_inv = lf.lambda.inverse();
  const int n = idx.rect_count();
  L.h_spans.resize(static_cast<size_t>(idx.total()));
  L.v_spans.resize(static_cast<size_t>(idx.total()));
  L.ret.resize(static_cast<size_t>(idx.total()));

  for (int i = 1; i <= n; ++i) {
    Elem y = Elem::of(lf.field, Rat(0));
    for (int k = 1; k <= idx.h_of(i); ++k) {
      SubrectangleRef hr = SubrectangleRef::h(i, k);
      SubrectangleRef vr = idx.phi(hr);
      Elem hgt = L.height[static_cast<size_t>(vr.rect - 1)] * lambda_inv;
      L.h_spans[static_cast<size_t>(idx.h_flat(i, k))] = {y, y + hgt};
      y = y + hgt;
    }
    if (y != L.height[static_cast<size_t>(i - 1)])
      throw Error("layout: horizontal slots do not tile the rectangle height");
  }
  for (int j = 1; j <= n; ++j) {
    Elem x = Elem::of(lf.field, Rat(0));
    for (int l = 1; l <= idx.v_of(j); ++l) {
      SubrectangleRef vr = SubrectangleRef::v(j, l);
      SubrectangleRef hr = idx.phi_inv(vr);
      Elem wid = L.width[static_cast<size_t>(hr.rect - 1)] * lambda_inv;
      L.v_spans[static_cast<size_t>(idx.v_flat(j, l))] = {x, x + wid};
      x = x + wid;
    }
    if (x != L.width[static_cast<size_t>(j - 1)])
      throw Error("layout: vertical slots do not tile the rectangle width");
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= idx.h_of(i); ++k) {
      SubrectangleRef hr = SubrectangleRef::h(i, k);
      SubrectangleRef vr = idx.phi(hr);
      const SlotSpan& hs = L.h_spans[static_cast<size_t>(idx.h_flat(i, k))];
      const SlotSpan& vs = L.v_spans[static_cast<size_t>(idx.v_flat(vr.rect, vr.slot))];
      ReturnAffine r;
      if (idx.u(hr) > 0) {
        r.sx = lambda_inv;
        r.ox = vs.lo;
        r.sy = lf.lambda;
        r.oy = -(hs.lo * lf.lambda);
      } else {
        r.sx = -lambda_inv;
        r.ox = vs.hi;
        r.sy = -lf.lambda;
        r.oy = hs.hi * lf.lambda;
      }
      L.ret[static_cast<size_t>(idx.h_flat(i, k))] = r;
    }
  }
  return L;
}

Layout uniform_layout(const GeometricType& g) {
  TypeIndex idx(g);
  alg::FieldPtr f = alg::NumberField::rationals(Rat(1));
  Layout L;
  L.mode = LayoutMode::uniform;
  L.field = f;
  L.lambda = Elem::of(f, Rat(1));
  const int n = idx.rect_count();
  L.width.assign(static_cast<size_t>(n), Elem::of(f, Rat(1)));
  L.height.assign(static_cast<size_t>(n), Elem::of(f, Rat(1)));
  L.h_spans.resize(static_cast<size_t>(idx.total()));
  L.v_spans.resize(static_cast<size_t>(idx.total()));
  L.ret.resize(static_cast<size_t>(idx.total()));
  // Slot length = span / (2m + 1): equal slots separated by equal gaps.
  for (int i = 1; i <= n; ++i) {
    int m = idx.h_of(i);
    for (int k = 1; k <= m; ++k) {
      Rat den(2 * m + 1);
      L.h_spans[static_cast<size_t>(idx.h_flat(i, k))] = {Elem::of(f, Rat(2 * k - 1) / den),
                                                          Elem::of(f, Rat(2 * k) / den)};
    }
    m = idx.v_of(i);
    for (int l = 1; l <= m; ++l) {
      Rat den(2 * m + 1);
      L.v_spans[static_cast<size_t>(idx.v_flat(i, l))] = {Elem::of(f, Rat(2 * l - 1) / den),
                                                          Elem::of(f, Rat(2 * l) / den)};
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= idx.h_of(i); ++k) {
      SubrectangleRef hr = SubrectangleRef::h(i, k);
      SubrectangleRef vr = idx.phi(hr);
      const SlotSpan& hs = L.h_spans[static_cast<size_t>(idx.h_flat(i, k))];
      const SlotSpan& vs = L.v_spans[static_cast<size_t>(idx.v_flat(vr.rect, vr.slot))];
      Elem xr = vs.hi - vs.lo;                      // maps [0,1] onto the V span
      Elem yr = (hs.hi - hs.lo).inverse();          // maps the H span onto [0,1]
      ReturnAffine r;
      if (idx.u(hr) > 0) {
        r.sx = xr;
        r.ox = vs.lo;
        r.sy = yr;
        r.oy = -(hs.lo * yr);
      } else {
        r.sx = -xr;
        r.ox = vs.hi;
        r.sy = -yr;
        r.oy = hs.hi * yr;
      }
      L.ret[static_cast<size_t>(idx.h_flat(i, k))] = r;
    }
  }
  return L;
}

}  // namespace

Layout layout(const GeometricType& g, LayoutMode mode) {
  return mode == LayoutMode::perron ? perron_layout(g) : uniform_layout(g);
}

}  // namespace geomtype
