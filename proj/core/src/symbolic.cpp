#include "geomtype/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geomtype::symbolic {

using alg::Elem;
using alg::FieldPtr;
using alg::Poly;
using alg::Rat;

TransitionMatrix transition_matrix(const GeometricType& g) {
  TypeIndex idx(g);
  const int n = idx.rect_count();
  TransitionMatrix tm;
  tm.M.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
  tm.Mu = tm.M;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= idx.h_of(i); ++k) {
      SubrectangleRef hr = SubrectangleRef::h(i, k);
      SubrectangleRef vr = idx.phi(hr);
      tm.M[static_cast<size_t>(i - 1)][static_cast<size_t>(vr.rect - 1)] += 1;
      tm.Mu[static_cast<size_t>(i - 1)][static_cast<size_t>(vr.rect - 1)] += idx.u(hr);
    }
  }
  return tm;
}

namespace {

std::vector<std::vector<bool>> positivity(const std::vector<std::vector<long>>& m) {
  const size_t n = m.size();
  std::vector<std::vector<bool>> b(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) b[i][j] = m[i][j] > 0;
  return b;
}

std::vector<std::vector<bool>> bool_mul(const std::vector<std::vector<bool>>& a,
                                        const std::vector<std::vector<bool>>& b) {
  const size_t n = a.size();
  std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (size_t j = 0; j < n; ++j)
          if (b[k][j]) c[i][j] = true;
  return c;
}

bool strongly_connected(const std::vector<std::vector<bool>>& adj) {
  const size_t n = adj.size();
  auto reach = [&](bool transpose) {
    std::vector<bool> vis(n, false);
    std::vector<size_t> stack{0};
    vis[0] = true;
    while (!stack.empty()) {
      size_t x = stack.back();
      stack.pop_back();
      for (size_t y = 0; y < n; ++y) {
        bool edge = transpose ? adj[y][x] : adj[x][y];
        if (edge && !vis[y]) {
          vis[y] = true;
          stack.push_back(y);
        }
      }
    }
    return std::all_of(vis.begin(), vis.end(), [](bool v) { return v; });
  };
  return reach(false) && reach(true);
}

}  // namespace

Structure structure(const GeometricType& g) {
  TransitionMatrix tm = transition_matrix(g);
  auto adj = positivity(tm.M);
  Structure s;
  s.irreducible = strongly_connected(adj);
  // Wielandt bound: M primitive iff M^(n^2 - 2n + 2) is entrywise positive.
  const int n = tm.size();
  int exp = n * n - 2 * n + 2;
  auto acc = adj;
  for (int e = 1; e < exp; ++e) acc = bool_mul(acc, adj);
  s.primitive = true;
  for (const auto& row : acc)
    for (bool v : row) s.primitive = s.primitive && v;
  return s;
}

Poly charpoly(const std::vector<std::vector<long>>& m) {
  // Faddeev-LeVerrier over exact rationals:
  //   B_1 = A, c_{n-1} = -tr B_1, B_k = A(B_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(B_k)/k.
  const size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::vector<Rat> coef(n + 1, Rat(0));
  coef[n] = 1;
  std::vector<std::vector<Rat>> b = a;
  for (size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      std::vector<std::vector<Rat>> shifted = b;
      for (size_t i = 0; i < n; ++i) shifted[i][i] += coef[n - k + 1];
      std::vector<std::vector<Rat>> nb(n, std::vector<Rat>(n, Rat(0)));
      for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < n; ++l)
          if (sgn(a[i][l]) != 0)
            for (size_t j = 0; j < n; ++j) nb[i][j] += a[i][l] * shifted[l][j];
      b = std::move(nb);
    }
    Rat tr(0);
    for (size_t i = 0; i < n; ++i) tr += b[i][i];
    coef[n - k] = -tr / static_cast<long>(k);
  }
  return Poly(std::move(coef));
}

namespace {

Rat spectral_upper_bound(const std::vector<std::vector<long>>& m) {
  long best = 1;
  for (const auto& row : m) best = std::max(best, std::accumulate(row.begin(), row.end(), 0L));
  return Rat(best) + 1;
}

struct LambdaIsolation {
  Poly modulus;  // squarefree with integer roots other than lambda removed
  alg::RootIsolation iso;
};

LambdaIsolation isolate_lambda(const std::vector<std::vector<long>>& m) {
  Poly p = charpoly(m);
  Poly sf = alg::squarefree_part(p);
  alg::RootIsolation iso = alg::isolate_largest_real_root(sf, spectral_upper_bound(m));
  if (iso.exact) return {Poly::x_minus(iso.hi), iso};
  // Strip integer roots; the monic integer polynomial has only integer
  // rational roots. If one falls inside the isolating interval it IS lambda.
  Rat c0 = sf.coeffs().front();
  mpz_class cnum = c0.get_num();  // sf is monic with integer coefficients
  std::vector<long> candidates;
  if (sgn(cnum) == 0) {
    candidates.push_back(0);
  } else {
    mpz_class a = abs(cnum);
    for (mpz_class d(1); d * d <= a; ++d) {
      if (a % d == 0) {
        if (d.fits_slong_p()) candidates.push_back(d.get_si());
        mpz_class other = a / d;
        if (other.fits_slong_p()) candidates.push_back(other.get_si());
      }
    }
  }
  Poly cur = sf;
  for (long cand : candidates) {
    for (long r : {cand, -cand}) {
      Rat root(r);
      while (cur.degree() >= 1 && sgn(cur.eval(root)) == 0) {
        if (root > iso.lo && root <= iso.hi) {
          alg::RootIsolation ex;
          ex.lo = root - 1;
          ex.hi = root;
          ex.exact = true;
          return {Poly::x_minus(root), ex};
        }
        cur = cur.divmod(Poly::x_minus(root)).first;
      }
      if (r == 0) break;
    }
  }
  return {cur.monic(), iso};
}

}  // namespace

LambdaField lambda_field(const GeometricType& g) {
  TransitionMatrix tm = transition_matrix(g);
  LambdaIsolation li = isolate_lambda(tm.M);
  FieldPtr f = alg::NumberField::create(li.modulus, li.iso);
  return {f, Elem::lambda(f)};
}

double entropy(const GeometricType& g) {
  LambdaField lf = lambda_field(g);
  return std::log(lf.lambda.to_double());
}

mpz_class count_closed_words(const GeometricType& g, int m) {
  if (m < 1) throw Error("count_closed_words requires m >= 1");
  TransitionMatrix tm = transition_matrix(g);
  const size_t n = static_cast<size_t>(tm.size());
  std::vector<std::vector<mpz_class>> acc(n, std::vector<mpz_class>(n, 0));
  std::vector<std::vector<mpz_class>> base(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      base[i][j] = tm.M[i][j];
      acc[i][j] = tm.M[i][j];
    }
  for (int e = 1; e < m; ++e) {
    std::vector<std::vector<mpz_class>> nxt(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k)
        if (acc[i][k] != 0)
          for (size_t j = 0; j < n; ++j) nxt[i][j] += acc[i][k] * base[k][j];
    acc = std::move(nxt);
  }
  mpz_class tr(0);
  for (size_t i = 0; i < n; ++i) tr += acc[i][i];
  return tr;
}

namespace {

/// Kernel vector of (A - lambda I) over Q(lambda), normalized to sum 1.
std::vector<Elem> kernel_vector(const std::vector<std::vector<long>>& m, const FieldPtr& f,
                                const Elem& lambda, bool transpose) {
  const size_t n = m.size();
  std::vector<std::vector<Elem>> a(n, std::vector<Elem>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long entry = transpose ? m[j][i] : m[i][j];
      a[i][j] = Elem::of(f, Rat(entry));
      if (i == j) a[i][j] = a[i][j] - lambda;
    }
  // Forward elimination with exact pivots.
  std::vector<bool> col_used(n, false);
  size_t row = 0;
  std::vector<std::vector<Elem>> red = a;
  std::vector<size_t> pivot_cols;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t pr = row;
    while (pr < n && red[pr][col].sign() == 0) ++pr;
    if (pr == n) continue;
    std::swap(red[pr], red[row]);
    Elem inv = red[row][col].inverse();
    for (size_t j = 0; j < n; ++j) red[row][j] = red[row][j] * inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row) continue;
      if (red[i][col].sign() == 0) continue;
      Elem factor = red[i][col];
      for (size_t j = 0; j < n; ++j) red[i][j] = red[i][j] - factor * red[row][j];
    }
    pivot_cols.push_back(col);
    col_used[col] = true;
    ++row;
  }
  if (pivot_cols.size() >= n) throw Error("perron: kernel is trivial (lambda not an eigenvalue?)");
  size_t free_col = 0;
  while (free_col < n && col_used[free_col]) ++free_col;
  std::vector<Elem> vec(n, Elem::of(f, Rat(0)));
  vec[free_col] = Elem::of(f, Rat(1));
  for (size_t r = 0; r < pivot_cols.size(); ++r)
    vec[pivot_cols[r]] = -red[r][free_col];
  Elem sum = Elem::of(f, Rat(0));
  for (const auto& x : vec) sum = sum + x;
  if (sum.sign() == 0) throw Error("perron: eigenvector entries sum to zero");
  Elem inv = sum.inverse();
  for (auto& x : vec) x = x * inv;
  return vec;
}

std::vector<double> power_iteration(const std::vector<std::vector<long>>& m, bool transpose,
                                    double* lambda_out) {
  const size_t n = m.size();
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  double lam = 1.0;
  for (int it = 0; it < 20000; ++it) {
    std::vector<double> w(n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        double entry = static_cast<double>(transpose ? m[j][i] : m[i][j]);
        w[i] += entry * v[j];
      }
    // Shift keeps irreducible-but-periodic matrices converging.
    for (size_t i = 0; i < n; ++i) w[i] += v[i];
    double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= s;
    double delta = 0;
    for (size_t i = 0; i < n; ++i) delta = std::max(delta, std::fabs(w[i] - v[i]));
    v = std::move(w);
    lam = s - 1.0;
    if (delta < 1e-15 && it > 8) break;
  }
  if (lambda_out) *lambda_out = lam;
  return v;
}

}  // namespace

PerronData perron(const GeometricType& g) {
  Structure s = structure(g);
  if (!s.irreducible) throw ReducibleError("perron data requires an irreducible transition matrix");
  TransitionMatrix tm = transition_matrix(g);
  LambdaIsolation li = isolate_lambda(tm.M);
  PerronData pd;
  if (li.modulus.degree() <= 4) {
    FieldPtr f = alg::NumberField::create(li.modulus, li.iso);
    Elem lambda = Elem::lambda(f);
    pd.exact = true;
    pd.field = f;
    pd.lambda_exact = lambda;
    pd.t_exact = kernel_vector(tm.M, f, lambda, false);
    pd.w_exact = kernel_vector(tm.M, f, lambda, true);
    pd.lambda = lambda.to_double();
    for (const auto& x : pd.w_exact) pd.w.push_back(x.to_double());
    for (const auto& x : pd.t_exact) pd.t.push_back(x.to_double());
    for (const auto& x : pd.w_exact)
      if (x.sign() <= 0) throw Error("perron: left eigenvector not strictly positive");
    for (const auto& x : pd.t_exact)
      if (x.sign() <= 0) throw Error("perron: right eigenvector not strictly positive");
  } else {
    pd.exact = false;
    double lam = 0;
    pd.t = power_iteration(tm.M, false, &lam);
    pd.lambda = lam;
    pd.w = power_iteration(tm.M, true, nullptr);
  }
  return pd;
}

}  // namespace geomtype::symbolic
