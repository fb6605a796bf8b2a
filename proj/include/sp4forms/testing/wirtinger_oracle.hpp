#ifndef SP4FORMS_TESTING_WIRTINGER_ORACLE_HPP
#define SP4FORMS_TESTING_WIRTINGER_ORACLE_HPP

#include <array>
#include <map>

#include "../gaussian_rational.hpp"

// Test-only oracle: exact symbolic differentiation of (y/Delta)^a (v/Delta)^b
// (y'/Delta)^c as rational functions in the independent coordinates y, v, y',
// with Delta = y y' - v^2 expanded as a polynomial. The antiholomorphic
// Wirtinger operators reduce to real partials:
//   dbar0 = -(v^2 d_y + v y' d_v + y'^2 d_y'),
//   dbar1 = +(2 v y d_y + (y y' + v^2) d_v + 2 v y' d_y'),
//   dbar2 = -(y^2 d_y + v y d_v + v^2 d_y'),
//   dbar3 = -(y d_y + v d_v + y' d_y'),
//   Dminus = Delta^2 d_v^2 - 4 Delta^2 d_y d_y' + 2 Delta (y d_y + v d_v + y' d_y').
// This path never touches the monomial rewrite rules it is checking.

namespace sp4forms::testing {

using Exps = std::array<int, 3>;  // exponents of y, v, y'

struct Poly3 {
  std::map<Exps, Rational> t;

  static Poly3 mono(int a, int b, int c, Rational coef = Rational(1)) {
    Poly3 p;
    if (coef != 0) p.t[{a, b, c}] = coef;
    return p;
  }

  void add(const Exps& e, const Rational& c) {
    if (c == 0) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  friend Poly3 operator+(Poly3 a, const Poly3& b) {
    for (auto& [e, c] : b.t) a.add(e, c);
    return a;
  }
  friend Poly3 operator*(const Rational& s, Poly3 p) {
    if (s == 0) return Poly3{};
    for (auto& [e, c] : p.t) c *= s;
    return p;
  }
  friend Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 out;
    for (auto& [ea, ca] : a.t)
      for (auto& [eb, cb] : b.t)
        out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
  }
  friend bool operator==(const Poly3& a, const Poly3& b) { return a.t == b.t; }

  Poly3 d_dy() const {
    Poly3 out;
    for (auto& [e, c] : t)
      if (e[0] > 0) out.add({e[0] - 1, e[1], e[2]}, e[0] * c);
    return out;
  }
  Poly3 d_dv() const {
    Poly3 out;
    for (auto& [e, c] : t)
      if (e[1] > 0) out.add({e[0], e[1] - 1, e[2]}, e[1] * c);
    return out;
  }
  Poly3 d_dyp() const {
    Poly3 out;
    for (auto& [e, c] : t)
      if (e[2] > 0) out.add({e[0], e[1], e[2] - 1}, e[2] * c);
    return out;
  }
};

inline Poly3 delta_poly() {
  Poly3 d = Poly3::mono(1, 0, 1);
  d.add({0, 2, 0}, Rational(-1));
  return d;
}

/// num / Delta^dpow
struct RatDelta {
  Poly3 num;
  int dpow = 0;

  static RatDelta nh_monomial(int a, int b, int c) {
    return {Poly3::mono(a, b, c), a + b + c};
  }

  friend bool operator==(const RatDelta& f, const RatDelta& g) {
    // cross-multiply by Delta powers
    Poly3 lhs = f.num, rhs = g.num;
    for (int i = f.dpow; i < std::max(f.dpow, g.dpow); ++i) lhs = lhs * delta_poly();
    for (int i = g.dpow; i < std::max(f.dpow, g.dpow); ++i) rhs = rhs * delta_poly();
    return lhs == rhs;
  }

  friend RatDelta operator+(const RatDelta& f, const RatDelta& g) {
    int d = std::max(f.dpow, g.dpow);
    Poly3 a = f.num, b = g.num;
    for (int i = f.dpow; i < d; ++i) a = a * delta_poly();
    for (int i = g.dpow; i < d; ++i) b = b * delta_poly();
    return {a + b, d};
  }
  friend RatDelta operator*(const Rational& s, RatDelta f) {
    f.num = s * f.num;
    return f;
  }
  friend RatDelta operator*(const Poly3& p, RatDelta f) {
    f.num = p * f.num;
    return f;
  }

  /// quotient rule against the given partial of Delta
  RatDelta partial(Poly3 (Poly3::*der)() const, const Poly3& ddelta) const {
    RatDelta out{(num.*der)(), dpow};
    if (dpow > 0) {
      Poly3 corr = Rational(-dpow) * (num * ddelta);
      out = out + RatDelta{corr, dpow + 1};
    }
    return out;
  }

  RatDelta d_dy() const { return partial(&Poly3::d_dy, Poly3::mono(0, 0, 1)); }
  RatDelta d_dv() const {
    return partial(&Poly3::d_dv, Poly3::mono(0, 1, 0, Rational(-2)));
  }
  RatDelta d_dyp() const { return partial(&Poly3::d_dyp, Poly3::mono(1, 0, 0)); }
};

inline RatDelta dbar0(const RatDelta& f) {
  return Rational(-1) * (Poly3::mono(0, 2, 0) * f.d_dy() + Poly3::mono(0, 1, 1) * f.d_dv() +
                         Poly3::mono(0, 0, 2) * f.d_dyp());
}
inline RatDelta dbar1(const RatDelta& f) {
  Poly3 mid = Poly3::mono(1, 0, 1);
  mid.add({0, 2, 0}, Rational(1));  // y y' + v^2
  return Poly3::mono(1, 1, 0, Rational(2)) * f.d_dy() + mid * f.d_dv() +
         Poly3::mono(0, 1, 1, Rational(2)) * f.d_dyp();
}
inline RatDelta dbar2(const RatDelta& f) {
  return Rational(-1) * (Poly3::mono(2, 0, 0) * f.d_dy() + Poly3::mono(1, 1, 0) * f.d_dv() +
                         Poly3::mono(0, 2, 0) * f.d_dyp());
}
inline RatDelta dbar3(const RatDelta& f) {
  return Rational(-1) * (Poly3::mono(1, 0, 0) * f.d_dy() + Poly3::mono(0, 1, 0) * f.d_dv() +
                         Poly3::mono(0, 0, 1) * f.d_dyp());
}
inline RatDelta dminus(const RatDelta& f) {
  Poly3 d2 = delta_poly() * delta_poly();
  RatDelta second = d2 * f.d_dv().d_dv() + Rational(-4) * (d2 * f.d_dy().d_dyp());
  RatDelta euler = Rational(-2) * (delta_poly() * dbar3(f));
  return second + euler;
}

}  // namespace sp4forms::testing

#endif
