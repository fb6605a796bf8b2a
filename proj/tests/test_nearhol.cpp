#include <doctest.h>

#include <random>

#include "sp4forms/checks.hpp"
#include "sp4forms/form_json.hpp"
#include "sp4forms/nearhol.hpp"
#include "sp4forms/wm.hpp"

using namespace sp4forms;
using namespace sp4forms::nearhol;

namespace {

NearHolForm const_mode(long ell, int m, long a, long b, long c, long level = 1) {
  NearHolForm f = NearHolForm::zero(ell, m, level);
  WmExact w(m);
  w[0] = grat(1);
  f.add_term(FourierIndex{rat(a), rat(b), rat(c)}, {0, 0, 0}, w);
  return f;
}

}  // namespace

TEST_CASE("eta actions on W_m") {
  using G = GaussianRational;
  Mat2<G> id{grat(1), grat(0), grat(0), grat(1)};
  WmExact p(3);
  p[0] = grat(2);
  p[2] = grat(-1);
  CHECK(eta_apply(id, 5, 3, p) == p);
  // diag(t,t) on W_0 scales by t^{2l}
  Mat2<G> tt{grat(3), grat(0), grat(0), grat(3)};
  WmExact c(0);
  c[0] = grat(7);
  WmExact scaled = eta_apply(tt, 2, 0, c);
  CHECK(scaled[0] == grat(7 * 81));
  // negative determinant powers stay exact
  WmExact inv = eta_apply(tt, -1, 0, c);
  CHECK(inv[0] == GaussianRational(rat(7, 9)));
  // derived action of Z: eigenvalue l + m - j on S^{m-j} T^j
  Mat2<G> zmat{grat(1), grat(0), grat(0), grat(0)};
  for (int m = 0; m <= 4; ++m)
    for (int j = 0; j <= m; ++j) {
      WmExact basis(m);
      basis[j] = grat(1);
      CHECK(eta_lie(zmat, 3, m, basis) == grat(3 + m - j) * basis);
    }
  // derived action of N-: -(m-j) S^{m-j-1} T^{j+1}
  Mat2<G> nminus{grat(0), grat(0), grat(-1), grat(0)};
  WmExact b2(3);
  b2[1] = grat(1);
  WmExact img = eta_lie(nminus, 0, 3, b2);
  WmExact expect(3);
  expect[2] = grat(-2);
  CHECK(img == expect);
  CHECK_THROWS_AS(eta_apply(Mat2<G>{grat(0), grat(0), grat(0), grat(0)}, 1, 0, c),
                  std::invalid_argument);
}

TEST_CASE("normalized nearly holomorphic derivatives") {
  // 2 pi dbar_0 on a monomial lowers the r0 exponent
  detail::Poly p;
  p[{3, 1, 2}] = grat(5);
  detail::Poly d = detail::d0(p);
  REQUIRE(d.size() == 1);
  CHECK(d.at({2, 1, 2}) == grat(15));
  CHECK(detail::d1(p).at({3, 0, 2}) == grat(5));
  CHECK(detail::d2(p).at({3, 1, 1}) == grat(10));
}

TEST_CASE("X+ on a scalar mode: frozen components") {
  long ell = 5, a = 2, b = 3, c = 1;
  NearHolForm f = const_mode(ell, 0, a, b, c);
  NearHolForm g = apply_operator(NavOp::Xp, f);
  CHECK(g.ell == ell);
  CHECK(g.m == 2);
  CHECK(nearhol_degree(g) == 1);
  auto& terms = g.modes.at(FourierIndex{rat(a), rat(b), rat(c)});
  CHECK(terms.at({0, 0, 1})[0] == grat(ell));   // l r2
  CHECK(terms.at({0, 0, 0})[0] == grat(-2 * a));
  CHECK(terms.at({0, 1, 0})[1] == grat(-2 * ell));  // -2 l r1
  CHECK(terms.at({0, 0, 0})[1] == grat(-2 * b));
  CHECK(terms.at({1, 0, 0})[2] == grat(ell));   // l r0
  CHECK(terms.at({0, 0, 0})[2] == grat(-2 * c));
}

TEST_CASE("operator conventions and degree bookkeeping") {
  NearHolForm f = const_mode(4, 0, 1, 0, 1);
  CHECK(apply_operator(NavOp::P0m, f).is_zero());  // holomorphic
  NearHolForm m1 = const_mode(4, 1, 1, 0, 1);
  CHECK(apply_operator(NavOp::U, m1).is_zero());  // m < 2 convention
  CHECK(apply_operator(NavOp::L, m1).is_zero());
  CHECK(apply_word({}, f) == f);
  NearHolForm dp = apply_operator(NavOp::Dp, f);
  CHECK(dp.ell == 6);
  CHECK(dp.m == 0);
  CHECK(nearhol_degree(dp) <= 2);
  CHECK(support_subset(dp, f));
}

TEST_CASE("nearhol_degree") {
  NearHolForm z = NearHolForm::zero(3, 2);
  CHECK(nearhol_degree(z) == 0);
  NearHolForm f = const_mode(3, 0, 1, 1, 1);
  CHECK(nearhol_degree(f) == 0);
  WmExact w(0);
  w[0] = grat(1);
  f.add_term(FourierIndex{rat(1), rat(1), rat(1)}, {1, 0, 1}, w);
  CHECK(nearhol_degree(f) == 2);
}

TEST_CASE("holomorphy test") {
  NearHolForm f = const_mode(4, 0, 1, 1, 1);
  HoloReport ok = holomorphy_test(f);
  CHECK(ok.by_operators);
  CHECK(ok.by_degree);
  CHECK(ok.witnesses.empty());

  NearHolForm g = f;
  WmExact w(0);
  w[0] = grat(2);
  g.add_term(FourierIndex{rat(1), rat(1), rat(1)}, {0, 0, 1}, w);  // an r2 term, m=0
  HoloReport bad = holomorphy_test(g);
  CHECK_FALSE(bad.by_degree);
  CHECK_FALSE(bad.by_operators);
  REQUIRE(bad.witnesses.size() == 1);
  CHECK(bad.witnesses[0] == "P0m");

  // m = 1 with E- witness
  NearHolForm h = NearHolForm::zero(3, 1, 1);
  WmExact w1(1);
  w1[0] = grat(1);
  h.add_term(FourierIndex{rat(1), rat(0), rat(1)}, {0, 0, 1}, w1);
  HoloReport rep = holomorphy_test(h);
  CHECK_FALSE(rep.by_operators);
  CHECK(std::find(rep.witnesses.begin(), rep.witnesses.end(), "Em") != rep.witnesses.end());
}

TEST_CASE("mstar test") {
  NearHolForm f = const_mode(3, 2, 1, 0, 1);
  CHECK(mstar_test(f));  // holomorphic, ell = 3
  NearHolForm deg2 = f;
  WmExact w(2);
  w[0] = grat(1);
  deg2.add_term(FourierIndex{rat(1), rat(0), rat(1)}, {1, 0, 1}, w);
  CHECK_FALSE(mstar_test(deg2));
  NearHolForm deg1 = f;
  deg1.add_term(FourierIndex{rat(1), rat(0), rat(1)}, {0, 0, 1}, w);
  CHECK_FALSE(apply_operator(NavOp::L, deg1).is_zero());
  CHECK_FALSE(mstar_test(deg1));
  CHECK_THROWS_AS(mstar_test(const_mode(4, 0, 1, 0, 1)), std::invalid_argument);
}

TEST_CASE("standard cusp support") {
  NearHolForm f = const_mode(4, 0, 1, 1, 1);
  CHECK(standard_cusp_semidefinite(f));
  NearHolForm g = const_mode(4, 0, 1, 3, 1);  // 4ac - b^2 < 0
  CHECK_FALSE(standard_cusp_semidefinite(g));
  NearHolForm h = const_mode(4, 0, -1, 0, 1);
  CHECK_FALSE(standard_cusp_semidefinite(h));
}

TEST_CASE("sigma action") {
  std::mt19937_64 rng(3);
  NearHolForm f = checks::random_form(rng, 3, 2, false);
  CHECK(sigma_act(f, CoefficientMap::Identity) == f);
  CHECK(sigma_act(sigma_act(f, CoefficientMap::Conjugation), CoefficientMap::Conjugation) == f);
  NearHolForm q = checks::random_form(rng, 3, 2, true);
  CHECK(sigma_act(q, CoefficientMap::Conjugation) == q);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    NearHolForm f = checks::random_form(rng, static_cast<long>(rng() % 6),
                                        static_cast<int>(rng() % 4), i % 2 == 0);
    std::string text = form_to_string(f);
    NearHolForm g = form_from_string(text);
    CHECK(g == f);
    CHECK(form_to_string(g) == text);
  }
  CHECK_THROWS(form_from_string("{\"ell\": 1}"));
  CHECK_THROWS(form_from_string("not json"));
  // the unnormalized layout is display-only: emits a symbolic 2 pi power per
  // term and is refused on input
  {
    std::mt19937_64 g2(9);
    NearHolForm f = checks::random_form(g2, 2, 1);
    nlohmann::json uj = form_to_json_unnormalized(f);
    for (auto& jmode : uj.at("modes"))
      for (auto& jt : jmode.at("terms")) {
        auto& abc = jt.at("abc");
        CHECK(jt.at("two_pi_power").get<int>() ==
              -(abc[0].get<int>() + abc[1].get<int>() + abc[2].get<int>()));
      }
    CHECK_THROWS(form_from_json(uj));
  }
  // denominator must divide the level
  CHECK_THROWS(form_from_string(
      R"({"ell":1,"m":0,"level":2,"modes":[{"Q":["1/3","0/1","0/1"],
          "terms":[{"abc":[0,0,0],"w":[{"re":"1/1","im":"0/1"}]}]}]})"));
}
