#ifndef SP4FORMS_NUMERIC_HPP
#define SP4FORMS_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

#include "lie_algebra.hpp"
#include "nearhol.hpp"
#include "wm.hpp"

namespace sp4forms::nearhol {

using cplx = std::complex<double>;

/// Point of the degree-2 Siegel upper half space in the coordinates
/// Z = [[tau, z],[z, tau']].
struct SiegelPoint {
  cplx tau, z, taup;
  double y, v, yp, delta;

  SiegelPoint(cplx tau_, cplx z_, cplx taup_)
      : tau(tau_), z(z_), taup(taup_), y(tau_.imag()), v(z_.imag()), yp(taup_.imag()),
        delta(y * yp - v * v) {
    if (!(y > 0) || !(yp > 0) || !(delta > 0))
      throw std::invalid_argument("point not in the Siegel upper half space");
  }
};

inline double pi() { return 3.14159265358979323846264338327950288; }

/// Numerically sums the modes: monomials at (y/(2 pi Delta), v/(2 pi Delta),
/// y'/(2 pi Delta)) times e^{2 pi i (a tau + b z + c tau')}.
inline WmNum evaluate(const NearHolForm& f, const SiegelPoint& zz) {
  WmNum out(f.m);
  double r0 = zz.y / (2 * pi() * zz.delta);
  double r1 = zz.v / (2 * pi() * zz.delta);
  double r2 = zz.yp / (2 * pi() * zz.delta);
  for (auto& [q, terms] : f.modes) {
    cplx phase = cplx(0, 2 * pi()) *
                 (rat_double(q.a) * zz.tau + rat_double(q.b) * zz.z + rat_double(q.c) * zz.taup);
    cplx eq = std::exp(phase);
    for (auto& [mono, w] : terms) {
      double rmon = std::pow(r0, mono[0]) * std::pow(r1, mono[1]) * std::pow(r2, mono[2]);
      for (int j = 0; j <= f.m; ++j) out[j] += w[j].to_complex() * (rmon * eq);
    }
  }
  return out;
}

enum class Partial { Tau, Zv, TauP, TauBar, ZvBar, TauPBar };

/// Exact-then-numeric Wirtinger partial of F at a point, via the scaled
/// rewrite operators T_x = (2 pi)^{-1}(2 i d/dx): dF/dx = -i pi T_x F.
inline WmNum eval_partial(const NearHolForm& f, const SiegelPoint& zz, Partial which) {
  NearHolForm g = NearHolForm::zero(f.ell, f.m, f.level);
  for (auto& [q, terms] : f.modes) {
    detail::ModeOps mo(q);
    detail::Components comp = detail::mode_components(terms, f.m);
    detail::Components res(f.m + 1);
    for (int j = 0; j <= f.m; ++j) {
      switch (which) {
        case Partial::Tau: res[j] = mo.t_tau(comp[j]); break;
        case Partial::Zv: res[j] = mo.t_z(comp[j]); break;
        case Partial::TauP: res[j] = mo.t_taup(comp[j]); break;
        case Partial::TauBar: res[j] = mo.tbar_tau(comp[j]); break;
        case Partial::ZvBar: res[j] = mo.tbar_z(comp[j]); break;
        case Partial::TauPBar: res[j] = mo.tbar_taup(comp[j]); break;
      }
    }
    ModeTerms t = detail::components_to_terms(res, f.m);
    if (!t.empty()) g.modes[q] = std::move(t);
  }
  WmNum val = evaluate(g, zz);
  cplx scale = cplx(0, -pi());
  for (auto& x : val.c) x *= scale;
  return val;
}

// ---------------------------------------------------------------------------
// Small real/complex matrix helpers for the group side
// ---------------------------------------------------------------------------

using Mat4d = std::array<std::array<double, 4>, 4>;
using Mat2c = Mat2<cplx>;

inline Mat4d mat4_mul(const Mat4d& a, const Mat4d& b) {
  Mat4d c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat4d mat4_identity() {
  Mat4d c{};
  for (int i = 0; i < 4; ++i) c[i][i] = 1.0;
  return c;
}

/// exp(t A) by scaling and squaring with a Taylor core.
inline Mat4d mat4_exp(const Mat4d& a, double t) {
  double norm = 0;
  for (auto& row : a)
    for (double x : row) norm += std::abs(x * t);
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.25) {
    scale *= 0.5;
    ++squarings;
  }
  Mat4d term = mat4_identity();
  Mat4d sum = mat4_identity();
  Mat4d at{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) at[i][j] = a[i][j] * t * scale;
  for (int k = 1; k <= 18; ++k) {
    term = mat4_mul(term, at);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) term[i][j] /= k, sum[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) sum = mat4_mul(sum, sum);
  return sum;
}

/// Real and imaginary parts of a basis matrix; both lie in sp4(R).
inline std::pair<Mat4d, Mat4d> basis_matrix_real_imag(lie::Sym s) {
  const lie::GMat4& m = lie::basis_matrix(s);
  Mat4d re{}, im{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      re[i][j] = rat_double(m[i][j].re);
      im[i][j] = rat_double(m[i][j].im);
    }
  return {re, im};
}

/// J(g, iI) = i C + D for real g = [[A,B],[C,D]].
inline Mat2c cocycle_at_i(const Mat4d& g) {
  Mat2c jc;
  jc.a = cplx(g[2][0], 0) * cplx(0, 1) + cplx(g[2][2], 0);
  jc.b = cplx(g[2][1], 0) * cplx(0, 1) + cplx(g[2][3], 0);
  jc.c = cplx(g[3][0], 0) * cplx(0, 1) + cplx(g[3][2], 0);
  jc.d = cplx(g[3][1], 0) * cplx(0, 1) + cplx(g[3][3], 0);
  return jc;
}

/// Moebius action g<iI> = (iA + B)(iC + D)^{-1}.
inline SiegelPoint act_on_i(const Mat4d& g) {
  Mat2c num{cplx(0, g[0][0]) + g[0][2], cplx(0, g[0][1]) + g[0][3],
            cplx(0, g[1][0]) + g[1][2], cplx(0, g[1][1]) + g[1][3]};
  Mat2c den = cocycle_at_i(g);
  Mat2c z = num * den.inverse();
  return SiegelPoint(z.a, (z.b + z.c) / 2.0, z.d);
}

/// b_Z, the Borel element with b_Z <iI> = Z.
inline Mat4d borel_section(const SiegelPoint& zz) {
  double x = zz.tau.real(), u = zz.z.real(), xp = zz.taup.real();
  double a = std::sqrt(zz.y - zz.v * zz.v / zz.yp);
  double b = std::sqrt(zz.yp);
  Mat4d t = mat4_identity();
  t[0][2] = x;
  t[0][3] = u;
  t[1][2] = u;
  t[1][3] = xp;
  Mat4d n = mat4_identity();
  n[0][1] = zz.v / zz.yp;
  n[3][2] = -zz.v / zz.yp;
  Mat4d d{};
  d[0][0] = a;
  d[1][1] = b;
  d[2][2] = 1.0 / a;
  d[3][3] = 1.0 / b;
  return mat4_mul(mat4_mul(t, n), d);
}

/// D_Z = J(b_Z, iI), real lower-triangular.
inline Mat2c siegel_cocycle(const SiegelPoint& zz) {
  double a = std::sqrt(zz.y - zz.v * zz.v / zz.yp);
  double b = std::sqrt(zz.yp);
  return {cplx(1.0 / a, 0), cplx(0, 0), cplx(-zz.v / (zz.yp * a), 0), cplx(1.0 / b, 0)};
}

/// Phi-vec(g) = eta(J(g,iI))^{-1} F(g<iI>).
inline WmNum phi_bar(const NearHolForm& f, const Mat4d& g) {
  WmNum val = evaluate(f, act_on_i(g));
  return eta_apply(cocycle_at_i(g).inverse(), f.ell, f.m, val);
}

inline double wm_norm(const WmNum& w) {
  double n = 0;
  for (auto& x : w.c) n = std::max(n, std::abs(x));
  return n;
}

struct NumcheckResult {
  double residual;
  double left_norm;
  double right_norm;
};

/// Compares the finite-difference left side eta(D_Z)(X Phi-vec)(b_Z) with
/// the closed-form right side of the root-vector action formulas. The
/// residual is ||L-R|| / max(1, ||L||, ||R||).
inline NumcheckResult numcheck_rootvector(const NearHolForm& f, lie::Sym x,
                                          const SiegelPoint& zz, double h) {
  using lie::Sym;
  if (x == Sym::Z || x == Sym::Zp)
    throw std::invalid_argument("numcheck covers the eight root vectors only");
  if (!(h > 0)) throw std::invalid_argument("step must be positive");

  Mat4d bz = borel_section(zz);
  auto [re, im] = basis_matrix_real_imag(x);
  auto diff = [&](const Mat4d& dir) {
    WmNum plus = phi_bar(f, mat4_mul(bz, mat4_exp(dir, h)));
    WmNum minus = phi_bar(f, mat4_mul(bz, mat4_exp(dir, -h)));
    WmNum out(f.m);
    for (int j = 0; j <= f.m; ++j) out[j] = (plus[j] - minus[j]) / (2 * h);
    return out;
  };
  WmNum dre = diff(re);
  WmNum dim_ = diff(im);
  WmNum xphi(f.m);
  for (int j = 0; j <= f.m; ++j) xphi[j] = dre[j] + cplx(0, 1) * dim_[j];
  Mat2c dz = siegel_cocycle(zz);
  WmNum left = eta_apply(dz, f.ell, f.m, xphi);

  // right side
  WmNum fz = evaluate(f, zz);
  auto conj_term = [&](cplx m11, cplx m12, cplx m21, cplx m22) {
    WmNum w = eta_apply(dz.inverse(), f.ell, f.m, fz);
    w = eta_lie(Mat2c{m11, m12, m21, m22}, f.ell, f.m, w);
    return eta_apply(dz, f.ell, f.m, w);
  };
  double v = zz.v, yp = zz.yp, delta = zz.delta;
  cplx two_i_over_yp = cplx(0, 2.0 / yp);
  auto combo = [&](Partial p1, double c1, Partial p2, double c2, Partial p3, double c3) {
    WmNum a = eval_partial(f, zz, p1);
    WmNum b = eval_partial(f, zz, p2);
    WmNum c = eval_partial(f, zz, p3);
    WmNum out(f.m);
    for (int j = 0; j <= f.m; ++j) out[j] = c1 * a[j] + c2 * b[j] + c3 * c[j];
    return out;
  };
  WmNum right(f.m);
  switch (x) {
    case Sym::NPlus:
      right = conj_term(0, 0, 1, 0);
      break;
    case Sym::NMinus: {
      WmNum t = conj_term(0, 1, 0, 0);
      for (auto& e : t.c) e = -e;
      right = t;
      break;
    }
    case Sym::P0Plus: {
      right = conj_term(0, 0, 0, 1);
      WmNum d = combo(Partial::Tau, v * v, Partial::Zv, v * yp, Partial::TauP, yp * yp);
      for (int j = 0; j <= f.m; ++j) right[j] += two_i_over_yp * d[j];
      break;
    }
    case Sym::P0Minus: {
      WmNum d = combo(Partial::TauBar, v * v, Partial::ZvBar, v * yp, Partial::TauPBar, yp * yp);
      for (int j = 0; j <= f.m; ++j) right[j] = -two_i_over_yp * d[j];
      break;
    }
    case Sym::P1Plus: {
      right = conj_term(0, 1, 1, 0);
      WmNum d = combo(Partial::Tau, 2 * v, Partial::Zv, yp, Partial::TauP, 0);
      cplx s = two_i_over_yp * std::sqrt(delta);
      for (int j = 0; j <= f.m; ++j) right[j] += s * d[j];
      break;
    }
    case Sym::P1Minus: {
      WmNum d = combo(Partial::TauBar, 2 * v, Partial::ZvBar, yp, Partial::TauPBar, 0);
      cplx s = -two_i_over_yp * std::sqrt(delta);
      for (int j = 0; j <= f.m; ++j) right[j] = s * d[j];
      break;
    }
    case Sym::XPlus: {
      right = conj_term(1, 0, 0, 0);
      WmNum d = eval_partial(f, zz, Partial::Tau);
      cplx s = two_i_over_yp * delta;
      for (int j = 0; j <= f.m; ++j) right[j] += s * d[j];
      break;
    }
    case Sym::XMinus: {
      WmNum d = eval_partial(f, zz, Partial::TauBar);
      cplx s = -two_i_over_yp * delta;
      for (int j = 0; j <= f.m; ++j) right[j] = s * d[j];
      break;
    }
    default:
      throw std::invalid_argument("numcheck covers the eight root vectors only");
  }

  double ln = wm_norm(left), rn = wm_norm(right);
  WmNum d(f.m);
  for (int j = 0; j <= f.m; ++j) d[j] = left[j] - right[j];
  return {wm_norm(d) / std::max({1.0, ln, rn}), ln, rn};
}

namespace detail_fd {

/// Mixed right-invariant derivative of the scalar lowest component of
/// Phi-vec along a word of real directions, by nested central differences.
/// Word letters are applied leftmost-outermost: (s1 s2 Phi)(g) =
/// d/dt d/du Phi(g e^{t s1} e^{u s2}).
inline cplx word_derivative_real(const NearHolForm& f, const Mat4d& g,
                                 const std::vector<Mat4d>& dirs, std::size_t at, double h) {
  if (at == dirs.size()) return phi_bar(f, g)[0];
  cplx plus = word_derivative_real(f, mat4_mul(g, mat4_exp(dirs[at], h)), dirs, at + 1, h);
  cplx minus = word_derivative_real(f, mat4_mul(g, mat4_exp(dirs[at], -h)), dirs, at + 1, h);
  return (plus - minus) / (2 * h);
}

/// Same for a word of complexified basis symbols, expanded multilinearly
/// into real and imaginary parts.
inline cplx word_derivative(const NearHolForm& f, const Mat4d& g, const std::vector<lie::Sym>& word,
                            double h) {
  std::size_t n = word.size();
  cplx total = 0;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Mat4d> dirs(n);
    int imag_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto [re, im] = basis_matrix_real_imag(word[i]);
      if (mask & (std::size_t(1) << i)) {
        dirs[i] = im;
        ++imag_count;
      } else {
        dirs[i] = re;
      }
    }
    cplx iphase = 1;
    for (int k = 0; k < imag_count % 4; ++k) iphase *= cplx(0, 1);
    total += iphase * word_derivative_real(f, g, dirs, 0, h);
  }
  return total;
}

}  // namespace detail_fd

/// Validates one classical navigation operator against the group action:
/// for Psi = E Phi with E the corresponding enveloping-algebra element, the
/// target-weight function eta(D_Z) vec-Psi(b_Z) (all derivatives by nested
/// central differences) must match the un-normalized operator applied to the
/// exact Fourier data. Needs m + len(E) small; intended for unit tests.
inline NumcheckResult numcheck_navigation(const NearHolForm& f, NavOp op, const SiegelPoint& zz,
                                          double h) {
  OpShift sh = op_shift(op);
  long m1 = f.m + sh.dm;
  if ((op == NavOp::U || op == NavOp::L) && f.m < 2)
    throw std::invalid_argument("numcheck_navigation: U/L need m >= 2");
  if (m1 < 0) throw std::invalid_argument("numcheck_navigation: target m negative");

  lie::LieElement elem = lie::nav_operator(op, f.m);
  Mat4d bz = borel_section(zz);
  WmNum vec_psi(static_cast<int>(m1));
  double factorial = 1;
  for (long j = 0; j <= m1; ++j) {
    if (j > 0) factorial *= j;
    cplx sum = 0;
    for (auto& [mono, coef] : elem.terms()) {
      std::vector<lie::Sym> word(j, lie::Sym::NMinus);
      auto tail = lie::LieElement::monomial_word(mono);
      word.insert(word.end(), tail.begin(), tail.end());
      sum += coef.to_complex() * detail_fd::word_derivative(f, bz, word, h);
    }
    vec_psi[static_cast<int>(j)] = (j % 2 ? -1.0 : 1.0) / factorial * sum;
  }
  WmNum left = eta_apply(siegel_cocycle(zz), f.ell + sh.dl, static_cast<int>(m1), vec_psi);

  NearHolForm g = apply_operator(op, f);
  WmNum right = evaluate(g, zz);
  double unscale = std::pow(2 * pi(), static_cast<double>(sh.dp));
  for (auto& x : right.c) x *= unscale;

  double ln = wm_norm(left), rn = wm_norm(right);
  WmNum d(static_cast<int>(m1));
  for (long j = 0; j <= m1; ++j)
    d[static_cast<int>(j)] = left[static_cast<int>(j)] - right[static_cast<int>(j)];
  return {wm_norm(d) / std::max({1.0, ln, rn}), ln, rn};
}

}  // namespace sp4forms::nearhol

#endif
