#ifndef SP4FORMS_WM_HPP
#define SP4FORMS_WM_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gaussian_rational.hpp"

namespace sp4forms::nearhol {

/// Element of W_m = sym^m(C^2): coefficients c_0..c_m of sum c_j S^{m-j}T^j.
/// Scalar is GaussianRational on the exact side, complex<double> in the
/// numeric harness.
template <class K>
struct WmVec {
  std::vector<K> c;

  WmVec() = default;
  explicit WmVec(int m) : c(m + 1) {}

  int m() const { return static_cast<int>(c.size()) - 1; }

  bool is_zero() const {
    for (auto& x : c)
      if (!(x == K{})) return false;
    return true;
  }

  K& operator[](int j) { return c[j]; }
  const K& operator[](int j) const { return c[j]; }

  friend bool operator==(const WmVec& a, const WmVec& b) { return a.c == b.c; }

  WmVec& operator+=(const WmVec& o) {
    if (o.c.size() != c.size()) throw std::invalid_argument("WmVec size mismatch");
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += o.c[j];
    return *this;
  }
  friend WmVec operator*(const K& s, WmVec v) {
    for (auto& x : v.c) x = s * x;
    return v;
  }
};

template <class K>
struct Mat2 {
  K a, b, c, d;  // [[a,b],[c,d]]

  K det() const { return a * d - b * c; }
  Mat2 inverse() const {
    K dt = det();
    if (dt == K{}) throw std::invalid_argument("singular 2x2 matrix");
    K inv = K(1) / dt;
    return {inv * d, -(inv * b), -(inv * c), inv * a};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
};

/// Group action eta_{l,m}(g) P(S,T) = det(g)^l P((S,T) g).
/// Substitution (S,T) -> (g11 S + g21 T, g12 S + g22 T).
template <class K>
WmVec<K> eta_apply(const Mat2<K>& g, long ell, int m, const WmVec<K>& p) {
  if (p.m() != m) throw std::invalid_argument("eta_apply: wrong W_m length");
  K dt = g.det();
  if (dt == K{}) throw std::invalid_argument("eta_apply: singular matrix");
  // powers of the two linear forms u = g11 S + g21 T, w = g12 S + g22 T
  auto pow_form = [&](const K& s_coef, const K& t_coef, int e) {
    std::vector<K> poly(e + 1);  // coefficients in S^{e-j} T^j
    poly[0] = K(1);
    for (int step = 0; step < e; ++step) {
      std::vector<K> next(step + 2);
      for (int j = 0; j <= step; ++j) {
        next[j] += poly[j] * s_coef;
        next[j + 1] += poly[j] * t_coef;
      }
      poly = std::move(next);
    }
    return poly;
  };
  WmVec<K> out(m);
  for (int j = 0; j <= m; ++j) {
    if (p[j] == K{}) continue;
    auto up = pow_form(g.a, g.c, m - j);
    auto wp = pow_form(g.b, g.d, j);
    for (int x = 0; x <= m - j; ++x)
      for (int y = 0; y <= j; ++y) out[x + y] += p[j] * up[x] * wp[y];
  }
  K dpow(1);
  long e = ell >= 0 ? ell : -ell;
  K base = ell >= 0 ? dt : K(1) / dt;
  for (long i = 0; i < e; ++i) dpow = dpow * base;
  return dpow * out;
}

/// Derived (Lie algebra) action of M in gl2 on W_m:
/// l tr(M) P + (M11 S + M21 T) dP/dS + (M12 S + M22 T) dP/dT.
template <class K>
WmVec<K> eta_lie(const Mat2<K>& mm, long ell, int m, const WmVec<K>& p) {
  if (p.m() != m) throw std::invalid_argument("eta_lie: wrong W_m length");
  WmVec<K> out(m);
  K tr = mm.a + mm.d;
  for (int j = 0; j <= m; ++j) {
    if (p[j] == K{}) continue;
    out[j] += (K(ell) * tr + K(m - j) * mm.a + K(j) * mm.d) * p[j];
    if (j + 1 <= m) out[j + 1] += K(m - j) * mm.c * p[j];
    if (j - 1 >= 0) out[j - 1] += K(j) * mm.b * p[j];
  }
  return out;
}

using WmExact = WmVec<GaussianRational>;
using WmNum = WmVec<std::complex<double>>;

}  // namespace sp4forms::nearhol

#endif
