#ifndef SP4FORMS_ENVELOPING_HPP
#define SP4FORMS_ENVELOPING_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lie_algebra.hpp"
#include "nav_ops.hpp"

namespace sp4forms::lie {

/// Exponent vector of a PBW monomial over the ten symbols, in the fixed
/// order Xp < P1p < P0p < Z < Zp < Np < Nm < Xm < P1m < P0m.
using PbwExp = std::array<int, kNumSyms>;

/// Element of U(sp4(C)): finite Q(i)-combination of PBW-ordered monomials.
/// Zero coefficients are never stored.
class LieElement {
 public:
  LieElement() = default;

  static LieElement zero() { return LieElement(); }

  static LieElement one() {
    LieElement e;
    e.terms_[PbwExp{}] = GaussianRational(1);
    return e;
  }

  static LieElement symbol(Sym s) {
    LieElement e;
    PbwExp m{};
    m[static_cast<int>(s)] = 1;
    e.terms_[m] = GaussianRational(1);
    return e;
  }

  static LieElement from_lincomb(const LinComb& lc) {
    LieElement e;
    for (auto& [s, c] : lc) e.add_term_sym(s, c);
    return e;
  }

  /// Normal-orders an arbitrary word of generators.
  static LieElement from_word(const std::vector<Sym>& word) {
    LieElement out;
    normal_order(word, GaussianRational(1), out);
    return out;
  }

  const std::map<PbwExp, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PbwExp& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_term_sym(Sym s, const GaussianRational& c) {
    PbwExp m{};
    m[static_cast<int>(s)] = 1;
    add_term(m, c);
  }

  LieElement& operator+=(const LieElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LieElement& operator-=(const LieElement& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const GaussianRational& c, const LieElement& e) {
    LieElement out;
    if (c.is_zero()) return out;
    for (auto& [m, t] : e.terms_) out.terms_[m] = c * t;
    return out;
  }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

  /// Product in U(g), result in normal form.
  friend LieElement operator*(const LieElement& a, const LieElement& b) {
    LieElement out;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        std::vector<Sym> w = monomial_word(ma);
        std::vector<Sym> wb = monomial_word(mb);
        w.insert(w.end(), wb.begin(), wb.end());
        normal_order(w, ca * cb, out);
      }
    return out;
  }

  /// Word of symbols of a monomial, left-to-right in PBW order.
  static std::vector<Sym> monomial_word(const PbwExp& m) {
    std::vector<Sym> w;
    for (int s = 0; s < kNumSyms; ++s)
      for (int e = 0; e < m[s]; ++e) w.push_back(static_cast<Sym>(s));
    return w;
  }

  /// Total ad-weight of a monomial (sum of factor roots).
  static std::pair<int, int> monomial_weight(const PbwExp& m) {
    int a = 0, b = 0;
    for (int s = 0; s < kNumSyms; ++s) {
      auto [w1, w2] = sym_weight(static_cast<Sym>(s));
      a += m[s] * w1;
      b += m[s] * w2;
    }
    return {a, b};
  }

  /// Image under the conjugate-linear anti-involution X -> -conj(X) of the
  /// real form (the adjoint for the invariant Hermitian form): root vectors
  /// swap sign and direction, Z and Z' are fixed.
  LieElement adjoint() const {
    LieElement out;
    for (auto& [m, c] : terms_) {
      std::vector<Sym> w = monomial_word(m);
      std::vector<Sym> rw;
      GaussianRational coeff = c.conj();
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Sym s = adjoint_sym(*it);
        if (s != Sym::Z && s != Sym::Zp) coeff = -coeff;
        rw.push_back(s);
      }
      normal_order(rw, coeff, out);
    }
    return out;
  }

  static Sym adjoint_sym(Sym s) {
    switch (s) {
      case Sym::XPlus: return Sym::XMinus;
      case Sym::XMinus: return Sym::XPlus;
      case Sym::P1Plus: return Sym::P1Minus;
      case Sym::P1Minus: return Sym::P1Plus;
      case Sym::P0Plus: return Sym::P0Minus;
      case Sym::P0Minus: return Sym::P0Plus;
      case Sym::NPlus: return Sym::NMinus;
      case Sym::NMinus: return Sym::NPlus;
      case Sym::Z: return Sym::Z;
      case Sym::Zp: return Sym::Zp;
    }
    throw std::logic_error("bad symbol");
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (int i = 0; i < kNumSyms; ++i)
        for (int e = 0; e < m[i]; ++e) s += std::string(".") + sym_name(static_cast<Sym>(i));
    }
    return s;
  }

 private:
  /// Rewrites coeff * word into normal order, accumulating into out.
  static void normal_order(const std::vector<Sym>& word, const GaussianRational& coeff,
                           LieElement& out) {
    if (coeff.is_zero()) return;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (static_cast<int>(word[i]) <= static_cast<int>(word[i + 1])) continue;
      std::vector<Sym> swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      normal_order(swapped, coeff, out);
      const LinComb& br = bracket(word[i], word[i + 1]);
      if (!br.empty()) {
        std::vector<Sym> reduced;
        reduced.reserve(word.size() - 1);
        reduced.insert(reduced.end(), word.begin(), word.begin() + i);
        reduced.push_back(Sym::Z);  // placeholder, replaced per bracket term
        reduced.insert(reduced.end(), word.begin() + i + 2, word.end());
        for (auto& [s, c] : br) {
          reduced[i] = s;
          normal_order(reduced, coeff * c, out);
        }
      }
      return;
    }
    PbwExp m{};
    for (Sym s : word) ++m[static_cast<int>(s)];
    out.add_term(m, coeff);
  }

  std::map<PbwExp, GaussianRational> terms_;
};

/// Convenience: normal form of a word given as symbols.
inline LieElement pbw_normal_form(const std::vector<Sym>& word) {
  return LieElement::from_word(word);
}

/// Casimir element, first form: (1/2)Z^2 + (1/2)Z'^2 - (1/2)(N+N- + N-N+)
/// + X+X- + X-X+ + (1/2)(P1+P1- + P1-P1+) + P0+P0- + P0-P0+.
inline LieElement casimir() {
  using S = Sym;
  auto w = [](S a, S b) { return LieElement::from_word({a, b}); };
  const GaussianRational half = grat(1, 2);
  LieElement e;
  e += half * w(S::Z, S::Z);
  e += half * w(S::Zp, S::Zp);
  e -= half * (w(S::NPlus, S::NMinus) + w(S::NMinus, S::NPlus));
  e += w(S::XPlus, S::XMinus) + w(S::XMinus, S::XPlus);
  e += half * (w(S::P1Plus, S::P1Minus) + w(S::P1Minus, S::P1Plus));
  e += w(S::P0Plus, S::P0Minus) + w(S::P0Minus, S::P0Plus);
  return e;
}

/// Casimir, commuted form: (1/2)Z^2 + (1/2)Z'^2 - Z - 2Z' - N-N+ + 2X+X-
/// + P1+P1- + 2P0+P0-. Must agree with casimir().
inline LieElement casimir_alt() {
  using S = Sym;
  auto w = [](S a, S b) { return LieElement::from_word({a, b}); };
  const GaussianRational half = grat(1, 2);
  LieElement e;
  e += half * w(S::Z, S::Z);
  e += half * w(S::Zp, S::Zp);
  e -= LieElement::symbol(S::Z);
  e -= grat(2) * LieElement::symbol(S::Zp);
  e -= w(S::NMinus, S::NPlus);
  e += grat(2) * w(S::XPlus, S::XMinus);
  e += w(S::P1Plus, S::P1Minus);
  e += grat(2) * w(S::P0Plus, S::P0Minus);
  return e;
}

/// The navigation operators as enveloping-algebra elements, with the given m
/// substituted. U and L are zero for m < 2 by convention.
inline LieElement nav_operator(NavOp op, long m) {
  using S = Sym;
  auto sym = [](S s) { return LieElement::symbol(s); };
  auto w = [](std::vector<Sym> v) { return LieElement::from_word(v); };
  switch (op) {
    case NavOp::P0m: return sym(S::P0Minus);
    case NavOp::Xp: return sym(S::XPlus);
    case NavOp::L:
      if (m < 2) return LieElement::zero();
      return grat(m * (m - 1)) * sym(S::XMinus) - grat(m - 1) * w({S::P1Minus, S::NMinus}) +
             w({S::P0Minus, S::NMinus, S::NMinus});
    case NavOp::U:
      if (m < 2) return LieElement::zero();
      return grat(m * (m - 1)) * sym(S::P0Plus) + grat(m - 1) * w({S::P1Plus, S::NMinus}) +
             w({S::XPlus, S::NMinus, S::NMinus});
    case NavOp::Ep:
      return grat(m + 2) * sym(S::P1Plus) + grat(2) * w({S::NMinus, S::XPlus});
    case NavOp::Em:
      return grat(m + 2) * sym(S::P1Minus) - grat(2) * w({S::NMinus, S::P0Minus});
    case NavOp::Dp:
      return w({S::P1Plus, S::P1Plus}) - grat(4) * w({S::XPlus, S::P0Plus});
    case NavOp::Dm:
      return w({S::P1Minus, S::P1Minus}) - grat(4) * w({S::XMinus, S::P0Minus});
  }
  throw std::logic_error("bad operator");
}

}  // namespace sp4forms::lie

#endif
