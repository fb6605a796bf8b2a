#include <doctest.h>

#include "sp4forms/structure.hpp"
#include "sp4forms/verma.hpp"

using namespace sp4forms;
using namespace sp4forms::structure;

TEST_CASE("op_signature") {
  Signature s0 = op_signature({}, 5, 3, 1);
  CHECK(s0.ell1 == 5);
  CHECK(s0.m1 == 3);
  CHECK(s0.p1 == 1);
  CHECK(s0.degree == 0);

  // D+^r U^s from (l, 2s, p) lands on (l+2s+2r, 0, p+2r+s)
  for (long r = 0; r <= 3; ++r)
    for (long s = 0; s <= 3; ++s) {
      OperatorWord w;
      w.insert(w.end(), r, NavOp::Dp);
      w.insert(w.end(), s, NavOp::U);
      Signature sig = op_signature(w, 4, 2 * s, 1);
      CHECK(sig.ell1 == 4 + 2 * s + 2 * r);
      CHECK(sig.m1 == 0);
      CHECK(sig.p1 == 1 + 2 * r + s);
      CHECK(sig.degree == 2 * r + s);
      CHECK_FALSE(sig.invalid);
    }

  Signature se = op_signature({NavOp::Ep}, 4, 1, 0);
  CHECK(se.ell1 == 5);
  CHECK(se.m1 == 1);
  CHECK(se.p1 == 1);
  CHECK(se.degree == 1);

  Signature sz = op_signature({NavOp::U}, 4, 1, 0);
  CHECK(sz.zero_by_convention);
  Signature sneg = op_signature({NavOp::L, NavOp::L}, 4, 2, 2);
  CHECK(sneg.invalid);  // passes through m < 0
}

TEST_CASE("index_set") {
  for (long ell = 1; ell <= 5; ++ell)
    for (long m = 0; m <= 3; ++m) {
      auto self = index_set(ell, m, ell, m);
      REQUIRE(self.size() == 1);
      CHECK(self[0].empty());
    }
  auto u = index_set(4, 0, 2, 2);
  REQUIRE(u.size() == 1);
  CHECK(word_to_string(u[0]) == "U");
  auto xd = index_set(3, 2, 1, 0);
  REQUIRE(xd.size() == 1);
  CHECK(word_to_string(xd[0]) == "Xp,Dp");
  CHECK(index_set(0, 0, 0, 0).size() == 1);
  CHECK(index_set(3, 0, 5, 0).empty());
  CHECK(index_set(3, 0, 2, 0).empty());  // parity
  // every emitted word lands on the target with at most one leading E+
  for (long ell = 1; ell <= 8; ++ell)
    for (long m = 0; m <= 4; ++m)
      for (long ellp = 1; ellp <= ell; ++ellp)
        for (long mp = 0; mp <= ell + m - ellp; ++mp)
          for (auto& w : index_set(ell, m, ellp, mp)) {
            Signature sig = op_signature(w, ellp, mp, 0);
            CHECK(sig.ell1 == ell);
            CHECK(sig.m1 == m);
            for (std::size_t i = 0; i < w.size(); ++i)
              if (w[i] == NavOp::Ep) CHECK(i == 0);
          }
}

TEST_CASE("degree bound") {
  CHECK(degree_bound(1, 0) == 0);
  CHECK(degree_bound(4, 3) == 4);
  // attained at odd scalar weights via D+^{(l-1)/2}
  auto words = index_set(3, 0, 1, 0);
  REQUIRE(words.size() == 1);
  CHECK(word_degree(words[0]) == degree_bound(3, 0));
  // at even scalar weights the l' = 1 column is empty (its only candidate
  // word annihilates L(1,1)), so the bound is strict: max degree l - 2
  long maxdeg = 0;
  for (long ellp = 1; ellp <= 4; ++ellp)
    for (long mp = 0; mp <= 4 - ellp; ++mp)
      for (auto& w : index_set(4, 0, ellp, mp)) maxdeg = std::max(maxdeg, word_degree(w));
  CHECK(maxdeg == 2);
}

TEST_CASE("cusp dimension bookkeeping") {
  DimTable zero;
  for (long ellp = 1; ellp <= 4; ++ellp)
    for (long mp = 0; mp <= 6; ++mp) zero.set(DimKind::S, ellp, mp, 0);
  auto z = cusp_dimension(4, 0, zero);
  REQUIRE(z.total.has_value());
  CHECK(*z.total == 0);

  DimTable indicator = zero;
  indicator.set(DimKind::S, 4, 0, 1);
  auto one = cusp_dimension(4, 0, indicator);
  REQUIRE(one.total.has_value());
  CHECK(*one.total == 1);

  DimTable d = zero;
  d.set(DimKind::S, 2, 2, 5);
  auto got = cusp_dimension(4, 0, d);
  REQUIRE(got.total.has_value());
  CHECK(*got.total == 5);  // the single word U
  auto capped = cusp_dimension(4, 0, d, 0);
  REQUIRE(capped.total.has_value());
  CHECK(*capped.total == 0);

  // missing entries are unresolved, not zero
  DimTable partial;
  partial.set(DimKind::S, 4, 0, 1);
  auto miss = cusp_dimension(4, 0, partial);
  CHECK_FALSE(miss.total.has_value());
  CHECK_FALSE(miss.unresolved.empty());
}

TEST_CASE("noncusp dimension bookkeeping") {
  DimTable t;
  for (long ellp = 1; ellp <= 4; ++ellp)
    for (long mp = 0; mp <= 6; ++mp)
      t.set(ellp == 3 ? DimKind::Mstar3 : DimKind::M, ellp, mp, 0);
  auto z = noncusp_dimension(4, 0, t);
  REQUIRE(z.total.has_value());
  CHECK(*z.total == 0);
  CHECK(*noncusp_dimension(0, 0, t).total == 1);
  CHECK(*noncusp_dimension(0, 5, t).total == 0);
  // the ell' = 3 column draws on M*_3
  DimTable s = t;
  s.set(DimKind::Mstar3, 3, 0, 2);
  auto got = noncusp_dimension(3, 2, s);  // X_{3,0}^{3,2} = {Xp}
  REQUIRE(got.total.has_value());
  CHECK(*got.total == 2);
}

TEST_CASE("scalar decomposition") {
  auto d2 = scalar_decomposition(2);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].ellp == 2);
  CHECK(d2[0].mp == 0);
  CHECK(d2[0].word.empty());

  auto d3 = scalar_decomposition(3);
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].ellp == 3);
  CHECK(d3[0].word.empty());
  CHECK(d3[1].ellp == 1);
  CHECK(word_to_string(d3[1].word) == "Dp");

  auto d4p0 = scalar_decomposition(4, 0);
  REQUIRE(d4p0.size() == 1);
  CHECK(d4p0[0].ellp == 4);

  // capped = uncapped filtered by word degree
  for (long ell = 1; ell <= 9; ++ell) {
    auto full = scalar_decomposition(ell);
    for (long p = 0; p <= degree_bound(ell, 0); ++p) {
      auto capped = scalar_decomposition(ell, p);
      std::size_t expect = 0;
      for (auto& tterm : full)
        if (word_degree(tterm.word) <= p) ++expect;
      CHECK(capped.size() == expect);
    }
  }
}

TEST_CASE("multiplicity bridge spot checks") {
  // |X^{l,m}_{l',m'}| = mult of rho_{(l+m,l)} in L((l'+m',l'))
  for (long ell = 1; ell <= 9; ++ell)
    for (long m = 0; m <= 4; ++m)
      for (long ellp = 1; ellp <= ell; ++ellp)
        for (long mp = 0; mp <= ell + m - ellp; ++mp)
          CHECK(static_cast<long>(index_set(ell, m, ellp, mp).size()) ==
                verma::ktype_multiplicity_L(
                    verma::Weight{static_cast<int>(ellp + mp), static_cast<int>(ellp)},
                    verma::Weight{static_cast<int>(ell + m), static_cast<int>(ell)}));
}

TEST_CASE("vk multiplicities") {
  auto v1 = vk_multiplicities(5, 2, 2);
  CHECK(v1.a == 5);
  CHECK(v1.b == 2);
  CHECK(v1.c == 0);
  auto v2 = vk_multiplicities(5, 2, 4);
  CHECK(v2.a == 3);
  CHECK(v2.b == 2);
  CHECK(v2.c == 2);
  CHECK_THROWS_AS(vk_multiplicities(0, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(vk_multiplicities(3, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(vk_multiplicities(-1, 0, 0), std::invalid_argument);
}

TEST_CASE("dimension table json") {
  auto t = dimtable_from_json(nlohmann::json::parse(
      R"({"dims":[{"ell":2,"m":2,"dim":5,"kind":"S"},
                  {"ell":3,"m":0,"dim":1,"kind":"Mstar3"},
                  {"ell":4,"m":0,"dim":2,"kind":"M"}]})"));
  CHECK(t.lookup(DimKind::S, 2, 2) == 5);
  CHECK(t.lookup(DimKind::Mstar3, 3, 0) == 1);
  CHECK(t.lookup(DimKind::M, 4, 0) == 2);
  CHECK_FALSE(t.lookup(DimKind::S, 1, 1).has_value());
  CHECK_THROWS(dimtable_from_json(nlohmann::json::parse(R"({"dims":[{"ell":1}]})")));
}
