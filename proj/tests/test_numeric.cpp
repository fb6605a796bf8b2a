#include <doctest.h>

#include <random>

#include "sp4forms/checks.hpp"
#include "sp4forms/numeric.hpp"

using namespace sp4forms;
using namespace sp4forms::nearhol;

TEST_CASE("siegel point validation") {
  CHECK_THROWS_AS(SiegelPoint(cplx(0, -1), cplx(0, 0), cplx(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(SiegelPoint(cplx(0, 1), cplx(0, 2), cplx(0, 1)), std::invalid_argument);
}

TEST_CASE("borel section hits the point") {
  SiegelPoint zz(cplx(0.3, 1.2), cplx(-0.1, 0.25), cplx(0.6, 0.95));
  SiegelPoint back = act_on_i(borel_section(zz));
  CHECK(std::abs(back.tau - zz.tau) < 1e-12);
  CHECK(std::abs(back.z - zz.z) < 1e-12);
  CHECK(std::abs(back.taup - zz.taup) < 1e-12);
}

TEST_CASE("evaluate") {
  NearHolForm zero = NearHolForm::zero(3, 2);
  SiegelPoint iI(cplx(0, 1), cplx(0, 0), cplx(0, 1));
  WmNum z = evaluate(zero, iI);
  for (auto& c : z.c) CHECK(std::abs(c) == 0);

  // single holomorphic mode at Z = iI: e^{-2 pi (a + c)}
  NearHolForm f = NearHolForm::zero(4, 0, 1);
  WmExact w(0);
  w[0] = grat(3);
  f.add_term(FourierIndex{rat(1), rat(0), rat(2)}, {0, 0, 0}, w);
  WmNum val = evaluate(f, iI);
  CHECK(std::abs(val[0] - 3.0 * std::exp(-2 * pi() * 3.0)) < 1e-14);

  // an r2 coefficient at y = y' = 1, v = 0 contributes 1/(2 pi)
  NearHolForm g = NearHolForm::zero(4, 0, 1);
  g.add_term(FourierIndex{rat(0), rat(0), rat(0)}, {0, 0, 1}, w);
  WmNum val2 = evaluate(g, iI);
  CHECK(std::abs(val2[0] - 3.0 / (2 * pi())) < 1e-14);
}

TEST_CASE("numcheck root vectors") {
  std::mt19937_64 rng(17);
  SiegelPoint zz(cplx(0.1, 1.1), cplx(0.2, 0.1), cplx(-0.05, 0.9));

  // X- on a holomorphic form: right side vanishes, residual is the raw
  // finite difference and shrinks with h
  NearHolForm holo = checks::holomorphic_form(rng, 3, 1);
  auto res = numcheck_rootvector(holo, lie::Sym::XMinus, zz, 1e-4);
  CHECK(res.right_norm == 0.0);
  CHECK(res.residual < 1e-7);

  // N+ on an m = 0 form: both sides vanish identically
  NearHolForm scalar = checks::random_form(rng, 4, 0);
  auto res2 = numcheck_rootvector(scalar, lie::Sym::NPlus, zz, 1e-4);
  CHECK(res2.right_norm == 0.0);
  CHECK(res2.residual < 1e-9);

  // generic two-mode form: all eight formulas at the documented tolerance
  NearHolForm f = checks::random_form(rng, 2, 2, false);
  for (lie::Sym s : {lie::Sym::XPlus, lie::Sym::XMinus, lie::Sym::NPlus, lie::Sym::NMinus,
                     lie::Sym::P0Plus, lie::Sym::P0Minus, lie::Sym::P1Plus, lie::Sym::P1Minus}) {
    auto r = numcheck_rootvector(f, s, zz, 1e-4);
    CHECK(r.residual < 1e-5);
  }
  CHECK_THROWS_AS(numcheck_rootvector(f, lie::Sym::Z, zz, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(numcheck_rootvector(f, lie::Sym::XPlus, zz, 0.0), std::invalid_argument);
}

TEST_CASE("classical operators match the group action by nested differences") {
  std::mt19937_64 rng(41);
  SiegelPoint zz(cplx(0.1, 1.1), cplx(0.15, 0.2), cplx(-0.05, 0.95));
  struct Case {
    NavOp op;
    int m;
    int max_deg;
    double tol;
  };
  // the total differentiation order is m1 + |word|; tolerances widen with it
  std::vector<Case> cases = {
      {NavOp::Xp, 0, 1, 1e-4},  {NavOp::Xp, 1, 1, 1e-4},  {NavOp::P0m, 0, 1, 1e-4},
      {NavOp::Ep, 1, 1, 1e-4},  {NavOp::Em, 1, 1, 1e-4},  {NavOp::Dp, 0, 1, 1e-4},
      {NavOp::Dp, 1, 1, 1e-3},  {NavOp::Dm, 0, 2, 1e-4},  {NavOp::Dm, 1, 2, 1e-3},
      {NavOp::U, 2, 1, 1e-4},   {NavOp::L, 2, 1, 1e-3},   {NavOp::L, 3, 1, 1e-2},
  };
  for (auto c : cases) {
    CAPTURE(op_token(c.op));
    CAPTURE(c.m);
    NearHolForm f = checks::random_form(rng, 3, c.m, false, c.max_deg);
    if (c.max_deg == 2) {
      WmExact w(c.m);
      for (int j = 0; j <= c.m; ++j) w[j] = grat(2 + j);
      f.add_term(FourierIndex{rat(1, 4), rat(0), rat(1, 4)}, {0, 2, 0}, w);
      f.add_term(FourierIndex{rat(1, 4), rat(0), rat(1, 4)}, {1, 0, 1}, w);
    }
    auto r = numcheck_navigation(f, c.op, zz, 2e-3);
    CHECK(std::max(r.left_norm, r.right_norm) > 1e-4);  // informative case
    CHECK(r.residual < c.tol);
  }
  // E- and D- act as zero where the degree bookkeeping forces it
  NearHolForm low = checks::random_form(rng, 3, 0, false, 1);
  auto rz = numcheck_navigation(low, NavOp::Dm, zz, 2e-3);
  CHECK(rz.right_norm == 0.0);
  CHECK(rz.residual < 1e-6);
}

TEST_CASE("eval_partial matches finite differences of evaluate") {
  std::mt19937_64 rng(23);
  NearHolForm f = checks::random_form(rng, 3, 1, false);
  SiegelPoint zz(cplx(0.2, 1.05), cplx(-0.1, 0.2), cplx(0.15, 1.3));
  double h = 1e-5;
  auto fd = [&](Partial which) {
    // central differences in the appropriate real coordinate pair
    auto shift = [&](double dre, double dim, int slot) {
      cplx d(dre, dim);
      return SiegelPoint(zz.tau + (slot == 0 ? d : cplx(0)), zz.z + (slot == 1 ? d : cplx(0)),
                         zz.taup + (slot == 2 ? d : cplx(0)));
    };
    int slot = which == Partial::Tau || which == Partial::TauBar   ? 0
               : which == Partial::Zv || which == Partial::ZvBar ? 1
                                                                 : 2;
    bool bar = which == Partial::TauBar || which == Partial::ZvBar || which == Partial::TauPBar;
    WmNum fx_p = evaluate(f, shift(h, 0, slot)), fx_m = evaluate(f, shift(-h, 0, slot));
    WmNum fy_p = evaluate(f, shift(0, h, slot)), fy_m = evaluate(f, shift(0, -h, slot));
    WmNum out(f.m);
    for (int j = 0; j <= f.m; ++j) {
      cplx dx = (fx_p[j] - fx_m[j]) / (2 * h);
      cplx dy = (fy_p[j] - fy_m[j]) / (2 * h);
      out[j] = bar ? 0.5 * (dx + cplx(0, 1) * dy) : 0.5 * (dx - cplx(0, 1) * dy);
    }
    return out;
  };
  for (Partial p : {Partial::Tau, Partial::Zv, Partial::TauP, Partial::TauBar, Partial::ZvBar,
                    Partial::TauPBar}) {
    WmNum exact = eval_partial(f, zz, p);
    WmNum approx = fd(p);
    for (int j = 0; j <= f.m; ++j) CHECK(std::abs(exact[j] - approx[j]) < 1e-6);
  }
}
