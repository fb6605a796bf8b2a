#include <doctest.h>

#include <random>

#include "sp4forms/checks.hpp"
#include "sp4forms/nearhol.hpp"
#include "sp4forms/verma.hpp"

// Cross-module consistency: a word that returns to the lowest weight acts on
// the cyclic vector of N(l+m,l) by an exact rational scalar, and must act by
// the same scalar on every holomorphic form of weight (l,m). The
// (2 pi)-normalizations cancel because these words have total degree zero.

using namespace sp4forms;
using namespace sp4forms::nearhol;

namespace {

GaussianRational roundtrip_scalar(const OperatorWord& word, int ell, int m) {
  verma::VermaVector v = verma::navigate(word, verma::Weight{ell + m, ell});
  if (v.is_zero()) return GaussianRational(0);
  REQUIRE(v.terms.size() == 1);
  REQUIRE(v.terms.begin()->first == verma::VMono{0, 0, 0, 0});
  return v.terms.begin()->second;
}

NearHolForm scale_form(const GaussianRational& s, const NearHolForm& f) {
  NearHolForm out = NearHolForm::zero(f.ell, f.m, f.level);
  for (auto& [q, terms] : f.modes)
    for (auto& [mono, w] : terms) {
      WmExact sw = w;
      for (auto& x : sw.c) x = s * x;
      out.add_term(q, mono, sw);
    }
  return out;
}

}  // namespace

TEST_CASE("round-trip words act on holomorphic forms by the Verma scalar") {
  std::mt19937_64 rng(29);
  struct Probe {
    const char* word;
    int min_m;
  };
  std::vector<Probe> probes = {
      {"P0m,U", 0},  // ladder up then down
      {"L,Xp", 0},   // right then left
      {"Em,Ep", 0},  // diagonal degree-1 pair
      {"Dm,Dp", 0},  // diagonal degree-2 pair
  };
  for (int ell = 1; ell <= 4; ++ell)
    for (int m = 0; m <= 5; ++m)
      for (auto& probe : probes) {
        if (m < probe.min_m) continue;
        OperatorWord w = word_from_string(probe.word);
        GaussianRational s = roundtrip_scalar(w, ell, m);
        for (int trial = 0; trial < 3; ++trial) {
          NearHolForm f = checks::holomorphic_form(rng, ell, m);
          NearHolForm got = apply_word(w, f);
          NearHolForm expect = scale_form(s, f);
          CAPTURE(probe.word);
          CAPTURE(ell);
          CAPTURE(m);
          CHECK((got == expect || (got.is_zero() && expect.is_zero())));
        }
      }
}

TEST_CASE("apply_word weight and degree match the word signature") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    long ell = static_cast<long>(rng() % 5);
    int m = static_cast<int>(rng() % 5);
    NearHolForm f = checks::random_form(rng, ell, m);
    OperatorWord w;
    for (int i = 0, len = 1 + static_cast<int>(rng() % 3); i < len; ++i)
      w.push_back(static_cast<NavOp>(rng() % 8));
    structure::Signature sig = structure::op_signature(w, ell, m, nearhol_degree(f));
    if (sig.invalid || sig.zero_by_convention) continue;
    NearHolForm g = apply_word(w, f);
    CHECK(g.ell == sig.ell1);
    CHECK(g.m == sig.m1);
    CHECK(nearhol_degree(g) <= std::max<long>(sig.p1, 0));
    if (sig.p1 < 0) CHECK(g.is_zero());
  }
}

TEST_CASE("full round trip down to w0 matches classically") {
  std::mt19937_64 rng(31);
  for (int ell = 1; ell <= 3; ++ell)
    for (int m = 0; m <= 4; m += 2) {
      if (ell == 1 && m != 0) continue;
      for (int beta = 0; beta <= 1; ++beta) {
        OperatorWord w;
        w.insert(w.end(), m / 2, NavOp::P0m);
        w.insert(w.end(), beta, NavOp::Dm);
        w.insert(w.end(), beta, NavOp::Dp);
        w.insert(w.end(), m / 2, NavOp::U);
        GaussianRational s = roundtrip_scalar(w, ell, m);
        CHECK_FALSE(s.is_zero());
        NearHolForm f = checks::holomorphic_form(rng, ell, m);
        CHECK(apply_word(w, f) == scale_form(s, f));
      }
    }
}
