#ifndef SP4FORMS_NEARHOL_HPP
#define SP4FORMS_NEARHOL_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaussian_rational.hpp"
#include "nav_ops.hpp"
#include "wm.hpp"

namespace sp4forms::nearhol {

/// Exponents of the normalized nearly holomorphic variables
/// r0 = y/(2 pi Delta), r1 = v/(2 pi Delta), r2 = y'/(2 pi Delta).
using NHMono = std::array<int, 3>;

/// Fourier index Q = [[a, b/2],[b/2, c]];  Tr(QZ) = a tau + b z + c tau'.
struct FourierIndex {
  Rational a, b, c;

  friend bool operator<(const FourierIndex& x, const FourierIndex& y) {
    if (int t = cmp(x.a, y.a); t != 0) return t < 0;
    if (int t = cmp(x.b, y.b); t != 0) return t < 0;
    return cmp(x.c, y.c) < 0;
  }
  friend bool operator==(const FourierIndex& x, const FourierIndex& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }

  /// Q positive semidefinite: a,c >= 0 and 4ac - b^2 >= 0.
  bool positive_semidefinite() const { return a >= 0 && c >= 0 && 4 * a * c >= b * b; }
};

using ModeTerms = std::map<NHMono, WmExact>;

/// Truncated Fourier expansion of a W_m-valued nearly holomorphic form of
/// weight det^ell sym^m: finitely many modes Q, each a polynomial in the
/// normalized monomial variables with W_m coefficients.
struct NearHolForm {
  long ell = 0;
  int m = 0;
  long level = 1;
  std::map<FourierIndex, ModeTerms> modes;

  static NearHolForm zero(long ell_, int m_, long level_ = 1) {
    return NearHolForm{ell_, m_, level_, {}};
  }

  bool is_zero() const { return modes.empty(); }

  void add_term(const FourierIndex& q, const NHMono& mono, const WmExact& w) {
    if (w.m() != m) throw std::invalid_argument("W_m length mismatch");
    if (w.is_zero()) return;
    auto& slot = modes[q][mono];
    if (slot.c.empty()) slot = WmExact(m);
    slot += w;
    prune(q, mono);
  }

  void prune(const FourierIndex& q, const NHMono& mono) {
    auto qi = modes.find(q);
    if (qi == modes.end()) return;
    auto mi = qi->second.find(mono);
    if (mi != qi->second.end() && mi->second.is_zero()) qi->second.erase(mi);
    if (qi->second.empty()) modes.erase(qi);
  }

  void validate() const {
    if (m < 0 || level <= 0) throw std::invalid_argument("bad weight or level");
    for (auto& [q, terms] : modes) {
      for (const Rational* r : {&q.a, &q.b, &q.c})
        if (mpz_class(level) % r->get_den() != 0)
          throw std::invalid_argument("Fourier index denominator does not divide the level");
      for (auto& [mono, w] : terms) {
        if (mono[0] < 0 || mono[1] < 0 || mono[2] < 0)
          throw std::invalid_argument("negative monomial exponent");
        if (w.m() != m) throw std::invalid_argument("W_m length mismatch");
      }
    }
  }

  friend bool operator==(const NearHolForm& f, const NearHolForm& g) {
    return f.ell == g.ell && f.m == g.m && f.level == g.level && f.modes == g.modes;
  }
};

/// Max alpha+beta+gamma over stored monomials; 0 for the zero form.
inline int nearhol_degree(const NearHolForm& f) {
  int p = 0;
  for (auto& [q, terms] : f.modes)
    for (auto& [mono, w] : terms) p = std::max(p, mono[0] + mono[1] + mono[2]);
  return p;
}

/// All modes of g also appear in f (support monotonicity).
inline bool support_subset(const NearHolForm& g, const NearHolForm& f) {
  for (auto& [q, terms] : g.modes)
    if (f.modes.find(q) == f.modes.end()) return false;
  return true;
}

/// Fourier support condition at the standard cusp: every stored Q is
/// positive semidefinite. Cusps other than infinity are not visible in this
/// data model.
inline bool standard_cusp_semidefinite(const NearHolForm& f) {
  for (auto& [q, terms] : f.modes)
    if (!q.positive_semidefinite()) return false;
  return true;
}

namespace detail {

/// One component function of one mode: polynomial in (r0, r1, r2).
using Poly = std::map<NHMono, GaussianRational>;

inline void poly_add(Poly& acc, const NHMono& mono, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = acc.find(mono);
  if (it == acc.end()) {
    acc.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

inline Poly poly_scale(const GaussianRational& s, const Poly& p) {
  Poly out;
  if (s.is_zero()) return out;
  for (auto& [m, c] : p) out[m] = s * c;
  return out;
}

inline void poly_acc(Poly& acc, const Poly& p, const GaussianRational& s = GaussianRational(1)) {
  for (auto& [m, c] : p) poly_add(acc, m, s * c);
}

inline Poly shift(const Poly& p, int da, int db, int dc) {
  Poly out;
  for (auto& [m, c] : p) out[{m[0] + da, m[1] + db, m[2] + dc}] = c;
  return out;
}

/// Formal partials in the normalized variables; these are the renormalized
/// nearly holomorphic derivatives 2 pi dbar_0, 2 pi dbar_1, 2 pi dbar_2.
inline Poly d0(const Poly& p) {
  Poly out;
  for (auto& [m, c] : p)
    if (m[0] > 0) poly_add(out, {m[0] - 1, m[1], m[2]}, grat(m[0]) * c);
  return out;
}
inline Poly d1(const Poly& p) {
  Poly out;
  for (auto& [m, c] : p)
    if (m[1] > 0) poly_add(out, {m[0], m[1] - 1, m[2]}, grat(m[1]) * c);
  return out;
}
inline Poly d2(const Poly& p) {
  Poly out;
  for (auto& [m, c] : p)
    if (m[2] > 0) poly_add(out, {m[0], m[1], m[2] - 1}, grat(m[2]) * c);
  return out;
}

/// Mode-dependent scaled holomorphic derivatives acting on P * e^{2 pi i
/// (a tau + b z + c tau')}:  T_x = (2 pi)^{-1} (2 i d/dx).
struct ModeOps {
  GaussianRational twoa, twob, twoc;

  explicit ModeOps(const FourierIndex& q)
      : twoa(Rational(2 * q.a)), twob(Rational(2 * q.b)), twoc(Rational(2 * q.c)) {}

  Poly t_tau(const Poly& p) const {
    Poly out = poly_scale(-twoa, p);
    poly_acc(out, shift(d0(p), 0, 2, 0), grat(-1));
    poly_acc(out, shift(d1(p), 0, 1, 1), grat(-1));
    poly_acc(out, shift(d2(p), 0, 0, 2), grat(-1));
    return out;
  }
  Poly t_z(const Poly& p) const {
    Poly out = poly_scale(-twob, p);
    poly_acc(out, shift(d0(p), 1, 1, 0), grat(2));
    poly_acc(out, shift(d1(p), 1, 0, 1));
    poly_acc(out, shift(d1(p), 0, 2, 0));
    poly_acc(out, shift(d2(p), 0, 1, 1), grat(2));
    return out;
  }
  Poly t_taup(const Poly& p) const {
    Poly out = poly_scale(-twoc, p);
    poly_acc(out, shift(d0(p), 2, 0, 0), grat(-1));
    poly_acc(out, shift(d1(p), 1, 1, 0), grat(-1));
    poly_acc(out, shift(d2(p), 0, 2, 0), grat(-1));
    return out;
  }

  /// Antiholomorphic counterparts (e_Q invisible): (2 pi)^{-1}(2 i d/dxbar).
  Poly tbar_tau(const Poly& p) const {
    Poly out;
    poly_acc(out, shift(d0(p), 0, 2, 0));
    poly_acc(out, shift(d1(p), 0, 1, 1));
    poly_acc(out, shift(d2(p), 0, 0, 2));
    return out;
  }
  Poly tbar_z(const Poly& p) const {
    Poly out;
    poly_acc(out, shift(d0(p), 1, 1, 0), grat(-2));
    poly_acc(out, shift(d1(p), 1, 0, 1), grat(-1));
    poly_acc(out, shift(d1(p), 0, 2, 0), grat(-1));
    poly_acc(out, shift(d2(p), 0, 1, 1), grat(-2));
    return out;
  }
  Poly tbar_taup(const Poly& p) const {
    Poly out;
    poly_acc(out, shift(d0(p), 2, 0, 0));
    poly_acc(out, shift(d1(p), 1, 1, 0));
    poly_acc(out, shift(d2(p), 0, 2, 0));
    return out;
  }
};

using Components = std::vector<Poly>;

inline Components mode_components(const ModeTerms& terms, int m) {
  Components comp(m + 1);
  for (auto& [mono, w] : terms)
    for (int j = 0; j <= m; ++j)
      if (!w[j].is_zero()) comp[j][mono] = w[j];
  return comp;
}

inline ModeTerms components_to_terms(const Components& comp, int m1) {
  ModeTerms terms;
  for (int j = 0; j <= m1; ++j)
    for (auto& [mono, c] : comp[j]) {
      auto& slot = terms[mono];
      if (slot.c.empty()) slot = WmExact(m1);
      slot[j] += c;
    }
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  return terms;
}

/// One mode through one (2 pi)-normalized operator. F_i out of range are
/// zero; the component formulas are the classical ones with y/Delta -> r0
/// etc. and 2 i d/dx -> T_x.
inline Components apply_mode(NavOp op, long ell, int m, const ModeOps& mo,
                             const Components& f) {
  auto F = [&](int i) -> const Poly& {
    static const Poly empty;
    return (i < 0 || i > m) ? empty : f[i];
  };
  int m1 = m + op_shift(op).dm;
  Components g(std::max(m1, 0) + 1);
  switch (op) {
    case NavOp::P0m:
      for (int j = 0; j <= m1; ++j) {
        Poly& gj = g[j];
        poly_acc(gj, d2(F(j - 2)), grat(-1));
        poly_acc(gj, d1(F(j - 1)), grat(-1));
        poly_acc(gj, d0(F(j)), grat(-1));
      }
      break;
    case NavOp::L:
      for (int j = 0; j <= m1; ++j) {
        Poly& gj = g[j];
        poly_acc(gj, d2(F(j)), grat(-(long)(m - j) * (m - j - 1)));
        poly_acc(gj, d1(F(j + 1)), grat((long)(m - j - 1) * (j + 1)));
        poly_acc(gj, d0(F(j + 2)), grat(-(long)(j + 2) * (j + 1)));
      }
      break;
    case NavOp::U:
      for (int j = 0; j <= m1; ++j) {
        Poly& gj = g[j];
        GaussianRational lm1 = grat(ell - 1);
        {
          Poly t = poly_scale(lm1, shift(F(j), 1, 0, 0));
          poly_acc(t, mo.t_taup(F(j)));
          poly_acc(gj, t, grat((long)(m - j) * (m - j - 1)));
        }
        {
          Poly t = poly_scale(grat(2) * lm1, shift(F(j + 1), 0, 1, 0));
          poly_acc(t, mo.t_z(F(j + 1)), grat(-1));
          poly_acc(gj, t, grat((long)(m - j - 1) * (j + 1)));
        }
        {
          Poly t = poly_scale(lm1, shift(F(j + 2), 0, 0, 1));
          poly_acc(t, mo.t_tau(F(j + 2)));
          poly_acc(gj, t, grat((long)(j + 2) * (j + 1)));
        }
      }
      break;
    case NavOp::Xp:
      for (int j = 0; j <= m1; ++j) {
        Poly& gj = g[j];
        GaussianRational lm = grat(ell + m);
        {
          Poly t = poly_scale(lm, shift(F(j - 2), 1, 0, 0));
          poly_acc(t, mo.t_taup(F(j - 2)));
          poly_acc(gj, t);
        }
        {
          Poly t = poly_scale(grat(2) * lm, shift(F(j - 1), 0, 1, 0));
          poly_acc(t, mo.t_z(F(j - 1)), grat(-1));
          poly_acc(gj, t, grat(-1));
        }
        {
          Poly t = poly_scale(lm, shift(F(j), 0, 0, 1));
          poly_acc(t, mo.t_tau(F(j)));
          poly_acc(gj, t);
        }
      }
      break;
    case NavOp::Ep:
      for (int j = 0; j <= m1; ++j) {
        Poly& gj = g[j];
        GaussianRational k = grat(2 * ell + m - 2);
        {
          Poly t = poly_scale(k, shift(F(j - 1), 1, 0, 0));
          poly_acc(t, mo.t_taup(F(j - 1)), grat(2));
          poly_acc(gj, t, grat(m - j + 1));
        }
        {
          Poly t = poly_scale(-k, shift(F(j), 0, 1, 0));
          poly_acc(t, mo.t_z(F(j)));
          poly_acc(gj, t, grat(m - 2 * j));
        }
        {
          Poly t = poly_scale(k, shift(F(j + 1), 0, 0, 1));
          poly_acc(t, mo.t_tau(F(j + 1)), grat(2));
          poly_acc(gj, t, grat(-(long)(j + 1)));
        }
      }
      break;
    case NavOp::Em:
      for (int j = 0; j <= m1; ++j) {
        Poly& gj = g[j];
        poly_acc(gj, d2(F(j - 1)), grat(2 * (m + 1 - j)));
        poly_acc(gj, d1(F(j)), grat(m - 2 * j));
        poly_acc(gj, d0(F(j + 1)), grat(-2 * (long)(j + 1)));
      }
      break;
    case NavOp::Dp:
      for (int j = 0; j <= m1; ++j) {
        Poly& gj = g[j];
        poly_acc(gj, shift(F(j - 2), 2, 0, 0), grat((long)(m - j + 1) * (m - j + 2)));
        {
          Poly t = shift(mo.t_z(F(j - 1)), 1, 0, 0);
          poly_acc(t, shift(mo.t_taup(F(j - 1)), 0, 1, 0), grat(2));
          poly_acc(gj, t, grat(2 * (long)(m - j + 1)));
          poly_acc(gj, shift(F(j - 1), 1, 1, 0),
                   grat(-2 * (long)(m - 2 * j + 1) * (m - j + 1)));
        }
        {
          long cvv = 4L * j * j + 4L * ell * ell - 4L * j * m + (long)m * (m - 3) +
                     ell * (4L * m - 2);
          long cyy = (long)j * j - (long)j * m - (2L * ell - 1) * (ell + m);
          poly_acc(gj, shift(F(j), 0, 2, 0), grat(cvv));
          poly_acc(gj, shift(F(j), 1, 0, 1), grat(2 * cyy));
          poly_acc(gj, mo.t_tau(mo.t_taup(F(j))), grat(-4));
          poly_acc(gj, mo.t_z(mo.t_z(F(j))));
          poly_acc(gj, shift(mo.t_tau(F(j)), 1, 0, 0), grat(-2 * (2L * j + 2 * ell - 1)));
          poly_acc(gj, shift(mo.t_z(F(j)), 0, 1, 0), grat(-2 * ((long)m + 2 * ell - 1)));
          poly_acc(gj, shift(mo.t_taup(F(j)), 0, 0, 1),
                   grat(-2 * (2L * m - 2 * j + 2 * ell - 1)));
        }
        {
          Poly t = shift(mo.t_tau(F(j + 1)), 0, 1, 0);
          poly_acc(t, poly_scale(grat(1, 2), shift(mo.t_z(F(j + 1)), 0, 0, 1)));
          poly_acc(gj, t, grat(4 * (long)(j + 1)));
          poly_acc(gj, shift(F(j + 1), 0, 1, 1), grat(2 * (long)(m - 2 * j - 1) * (j + 1)));
        }
        poly_acc(gj, shift(F(j + 2), 0, 0, 2), grat((long)(j + 1) * (j + 2)));
      }
      break;
    case NavOp::Dm:
      for (int j = 0; j <= m1; ++j) {
        Poly& gj = g[j];
        poly_acc(gj, d1(d1(F(j))));
        poly_acc(gj, d0(d2(F(j))), grat(-4));
      }
      break;
  }
  return g;
}

}  // namespace detail

/// Applies one (2 pi)-normalized operator mode by mode. U and L on m < 2
/// give the zero form of the target weight.
inline NearHolForm apply_operator(NavOp op, const NearHolForm& f) {
  OpShift sh = op_shift(op);
  long ell1 = f.ell + sh.dl;
  int m1 = std::max(f.m + sh.dm, 0);
  if ((op == NavOp::U || op == NavOp::L) && f.m < 2)
    return NearHolForm::zero(ell1, m1, f.level);
  if (f.m + sh.dm < 0)
    throw std::invalid_argument(std::string("operator ") + op_token(op) +
                                " not defined on m = " + std::to_string(f.m));
  NearHolForm out = NearHolForm::zero(ell1, m1, f.level);
  for (auto& [q, terms] : f.modes) {
    detail::ModeOps mo(q);
    detail::Components comp = detail::mode_components(terms, f.m);
    detail::Components res = detail::apply_mode(op, f.ell, f.m, mo, comp);
    ModeTerms t = detail::components_to_terms(res, m1);
    if (!t.empty()) out.modes[q] = std::move(t);
  }
  return out;
}

/// Word applied right-to-left; weight bookkeeping follows the operator
/// table, m rebound from the current form at each step.
inline NearHolForm apply_word(const OperatorWord& word, NearHolForm f) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = apply_operator(*it, f);
  return f;
}

struct HoloReport {
  bool by_operators;
  bool by_degree;
  std::vector<std::string> witnesses;  // operators with nonzero image
};

/// Branch-appropriate operator criterion for holomorphy, plus the direct
/// degree-0 check. The two verdicts agreeing is itself a tested property.
inline HoloReport holomorphy_test(const NearHolForm& f) {
  HoloReport rep{true, nearhol_degree(f) == 0, {}};
  std::vector<NavOp> ops = {NavOp::P0m};
  if (f.m == 1) ops.push_back(NavOp::Em);
  if (f.m >= 2) {
    ops.push_back(NavOp::Em);
    ops.push_back(NavOp::L);
  }
  for (NavOp op : ops) {
    if (!apply_operator(op, f).is_zero()) {
      rep.by_operators = false;
      rep.witnesses.push_back(op_token(op));
    }
  }
  return rep;
}

/// Membership in M*_{3,m}: degree <= 1 and LF = E-F = 0. Only defined for
/// ell = 3.
inline bool mstar_test(const NearHolForm& f) {
  if (f.ell != 3) throw std::invalid_argument("mstar_test requires ell = 3");
  return nearhol_degree(f) <= 1 && apply_operator(NavOp::L, f).is_zero() &&
         apply_operator(NavOp::Em, f).is_zero();
}

enum class CoefficientMap { Identity, Conjugation };

/// Coefficient-wise field automorphism (supported: identity, complex
/// conjugation on Q(i)).
inline NearHolForm sigma_act(const NearHolForm& f, CoefficientMap sigma) {
  if (sigma == CoefficientMap::Identity) return f;
  NearHolForm out = f;
  for (auto& [q, terms] : out.modes)
    for (auto& [mono, w] : terms)
      for (auto& c : w.c) c = c.conj();
  return out;
}

}  // namespace sp4forms::nearhol

#endif
