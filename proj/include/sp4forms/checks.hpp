#ifndef SP4FORMS_CHECKS_HPP
#define SP4FORMS_CHECKS_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "enveloping.hpp"
#include "form_json.hpp"
#include "nearhol.hpp"
#include "numeric.hpp"
#include "structure.hpp"
#include "testing/wirtinger_oracle.hpp"
#include "verma.hpp"

namespace sp4forms::checks {

struct CheckResult {
  std::string name;
  bool pass = true;
  long cases = 0;
  std::string detail;
  double ms = 0;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    if (detail.size() < 400) detail += why;
  }
};

struct Options {
  bool full = true;
  std::uint64_t seed = 1;
};

// ---------------------------------------------------------------------------
// random form generation
// ---------------------------------------------------------------------------

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random truncated Fourier data: level-4 indices, monomials of degree <= 2,
/// small integer or half-integer coefficients. rational=true keeps all
/// coefficients in Q.
inline nearhol::NearHolForm random_form(std::mt19937_64& rng, long ell, int m,
                                        bool rational = true, int max_deg = 2) {
  using namespace nearhol;
  NearHolForm f = NearHolForm::zero(ell, m, 4);
  int nmodes = static_cast<int>(rand_int(rng, 1, 2));
  for (int i = 0; i < nmodes; ++i) {
    FourierIndex q{rat(rand_int(rng, 0, 2), 4), rat(rand_int(rng, -2, 2), 4),
                   rat(rand_int(rng, 0, 2), 4)};
    int nterms = static_cast<int>(rand_int(rng, 1, 2));
    for (int t = 0; t < nterms; ++t) {
      int a = static_cast<int>(rand_int(rng, 0, max_deg));
      int b = static_cast<int>(rand_int(rng, 0, max_deg - a));
      int c = static_cast<int>(rand_int(rng, 0, max_deg - a - b));
      WmExact w(m);
      for (int j = 0; j <= m; ++j) {
        GaussianRational coef(rat(rand_int(rng, -3, 3), rand_int(rng, 1, 2)));
        if (!rational) coef.im = rat(rand_int(rng, -2, 2), 2);
        w[j] = coef;
      }
      f.add_term(q, {a, b, c}, w);
    }
  }
  return f;
}

inline nearhol::NearHolForm holomorphic_form(std::mt19937_64& rng, long ell, int m) {
  return random_form(rng, ell, m, true, 0);
}

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
CheckResult timed(const std::string& name, F body) {
  CheckResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.ms = detail::elapsed_ms(t0);
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Lie consistency
// ---------------------------------------------------------------------------

inline CheckResult check_lie_consistency(const Options&) {
  using namespace lie;
  return detail::timed("1 Lie consistency", [&](CheckResult& r) {
    for (Sym s : all_syms()) {
      if (!mat_is_zero(symplectic_defect(basis_matrix(s))))
        r.fail(std::string(sym_name(s)) + " not in sp4");
      auto [w1, w2] = sym_weight(s);
      LieElement adz = LieElement::from_lincomb(bracket(Sym::Z, s));
      LieElement adzp = LieElement::from_lincomb(bracket(Sym::Zp, s));
      if (!(adz == grat(w1) * LieElement::symbol(s))) r.fail("ad Z weight wrong");
      if (!(adzp == grat(w2) * LieElement::symbol(s))) r.fail("ad Z' weight wrong");
      ++r.cases;
    }
    for (Sym x : all_syms())
      for (Sym y : all_syms()) {
        LieElement bxy = LieElement::from_lincomb(bracket(x, y));  // throws if not in span
        LieElement byx = LieElement::from_lincomb(bracket(y, x));
        if (!(bxy == grat(-1) * byx)) r.fail("antisymmetry failed");
        ++r.cases;
      }
    auto ad = [](Sym x, const LieElement& e) {
      LieElement out;
      for (auto& [mono, c] : e.terms()) {
        Sym y = Sym::Z;
        int found = 0;
        for (int i = 0; i < kNumSyms; ++i)
          if (mono[i]) {
            y = static_cast<Sym>(i);
            found += mono[i];
          }
        if (found != 1) throw std::logic_error("ad on non-linear element");
        out += c * LieElement::from_lincomb(bracket(x, y));
      }
      return out;
    };
    for (Sym x : all_syms())
      for (Sym y : all_syms())
        for (Sym z : all_syms()) {
          LieElement jac = ad(x, LieElement::from_lincomb(bracket(y, z)));
          jac += ad(y, LieElement::from_lincomb(bracket(z, x)));
          jac += ad(z, LieElement::from_lincomb(bracket(x, y)));
          if (!jac.is_zero()) r.fail("Jacobi failed");
          ++r.cases;
        }
  });
}

// ---------------------------------------------------------------------------
// 2. Casimir
// ---------------------------------------------------------------------------

inline CheckResult check_casimir(const Options& opt) {
  using namespace lie;
  using namespace verma;
  return detail::timed("2 Casimir", [&](CheckResult& r) {
    if (!(casimir() == casimir_alt())) r.fail("two Casimir forms differ");
    // centrality spot checks
    for (Sym s : {Sym::NPlus, Sym::XMinus, Sym::P1Plus}) {
      LieElement x = LieElement::symbol(s);
      if (!(x * casimir() == casimir() * x)) r.fail("Casimir not central");
    }
    int bound = opt.full ? 10 : 4;
    for (int k = -bound; k <= bound; ++k)
      for (int l = -bound; l <= k; ++l) {
        Weight lam{k, l};
        VermaVector w0 = cyclic_vector(lam);
        if (!(act(casimir(), w0) == GaussianRational(casimir_scalar(lam)) * w0))
          r.fail("Casimir scalar wrong at " + lam.str());
        ++r.cases;
      }
  });
}

// ---------------------------------------------------------------------------
// 3. Multiplicity formulas
// ---------------------------------------------------------------------------

inline CheckResult check_multiplicities(const Options& opt) {
  using namespace verma;
  return detail::timed("3 multiplicity formulas", [&](CheckResult& r) {
    int lbound = opt.full ? 3 : 1;
    int gapmax = opt.full ? 8 : 4;
    int box = opt.full ? 12 : 6;
    int kerbox = opt.full ? 7 : 4;
    long kernel_pairs = 0;
    for (int l = -lbound; l <= lbound; ++l)
      for (int gap = 0; gap <= gapmax; ++gap)
        for (int dx = 0; dx <= box; ++dx)
          for (int dy = 0; dy <= box; ++dy) {
            Weight lam{l + gap, l};
            Weight mu{lam.k + dx, lam.l + dy};
            if (weight_multiplicity(lam, mu) !=
                static_cast<long>(monomials_of_weight(lam, mu).size()))
              r.fail("multiplicity sum vs enumeration at " + lam.str() + mu.str());
            if (mu.dominant()) {
              long formula = ktype_multiplicity_N(lam, mu);
              if (formula != ktype_multiplicity_N_via_weights(lam, mu))
                r.fail("K-type closed form vs weight-space difference at " + lam.str() + mu.str());
              if (dx <= kerbox && dy <= kerbox) {
                if (formula != static_cast<long>(highest_weight_vectors(lam, mu).size()))
                  r.fail("kernel of N+ dimension mismatch at " + lam.str() + mu.str());
                ++kernel_pairs;
              }
            }
            ++r.cases;
          }
    if (kernel_pairs < (opt.full ? 200 : 50))
      r.fail("too few kernel pairs: " + std::to_string(kernel_pairs));
  });
}

// ---------------------------------------------------------------------------
// 4. Composition series
// ---------------------------------------------------------------------------

inline CheckResult check_composition_series(const Options& opt) {
  using namespace verma;
  return detail::timed("4 composition series", [&](CheckResult& r) {
    int bound = opt.full ? 8 : 5;
    int box = opt.full ? 12 : 6;
    for (int k = -bound; k <= bound; ++k)
      for (int l = -bound; l <= k; ++l) {
        Weight lam{k, l};
        if (is_irreducible(lam)) continue;
        Weight soc = socle_weight(lam);
        switch (region(lam)) {
          case RegionTag::A:
            if (soc != Weight{-k + 2, l}) r.fail("socle formula A");
            if (region(soc) != RegionTag::B) r.fail("A socle not in B");
            break;
          case RegionTag::B:
            if (soc != Weight{-l + 3, -k + 3}) r.fail("socle formula B");
            if (region(soc) != RegionTag::C) r.fail("B socle not in C");
            break;
          case RegionTag::C:
            if (soc != Weight{k, -l + 4}) r.fail("socle formula C");
            if (region(soc) != RegionTag::D) r.fail("C socle not in D");
            break;
          default: r.fail("reducible weight outside A/B/C at " + lam.str());
        }
        for (int dx = 0; dx < box; ++dx)
          for (int dy = 0; dy < box; ++dy) {
            Weight mu{k + dx, l + dy};
            if (!mu.dominant()) continue;
            if (ktype_multiplicity_N(lam, mu) !=
                ktype_multiplicity_L(lam, mu) + ktype_multiplicity_L(soc, mu))
              r.fail("exactness fails at " + lam.str() + mu.str());
            ++r.cases;
          }
      }
  });
}

// ---------------------------------------------------------------------------
// 5. Navigation
// ---------------------------------------------------------------------------

inline CheckResult check_navigation(const Options& opt) {
  using namespace verma;
  using lie::LieElement;
  return detail::timed("5 navigation", [&](CheckResult& r) {
    // ladder coefficients: P0- w_{i+1} = -(i+1)(l+i-1)(m-2i)(m-2i-1) w_i
    int lmax = opt.full ? 6 : 4, mmax = opt.full ? 8 : 5;
    for (int l = -2; l <= lmax; ++l)
      for (int m = 0; m <= mmax; ++m) {
        Weight lam{l + m, l};
        if (!lam.dominant()) continue;
        VermaVector wi = cyclic_vector(lam);
        for (int i = 0; 2 * (i + 1) <= m; ++i) {
          VermaVector wnext = act(lie::nav_operator(NavOp::U, m - 2 * i), wi);
          VermaVector lhs = act(lie::nav_operator(NavOp::P0m, 0), wnext);
          long coef = -static_cast<long>(i + 1) * (l + i - 1) * (m - 2 * i) * (m - 2 * i - 1);
          if (!(lhs == grat(coef) * wi))
            r.fail("ladder coefficient fails at l=" + std::to_string(l) + " m=" + std::to_string(m) +
                   " i=" + std::to_string(i));
          wi = wnext;
          ++r.cases;
        }
      }
    // round trip to w0 is nonvanishing
    int l11 = opt.full ? 4 : 3, m11 = opt.full ? 6 : 4, b11 = opt.full ? 2 : 1;
    for (int l = 1; l <= l11; ++l)
      for (int m = 0; m <= m11; m += 2) {
        if (l == 1 && m != 0) continue;
        for (int beta = 0; beta <= b11; ++beta) {
          Weight lam{l + m, l};
          OperatorWord w;
          w.insert(w.end(), m / 2, NavOp::P0m);
          w.insert(w.end(), beta, NavOp::Dm);
          w.insert(w.end(), beta, NavOp::Dp);
          w.insert(w.end(), m / 2, NavOp::U);
          VermaVector got = navigate(w, lam);
          bool just_w0 =
              got.terms.size() == 1 && got.terms.begin()->first == VMono{0, 0, 0, 0};
          if (!just_w0 || got.is_zero())
            r.fail("round trip vanishes at l=" + std::to_string(l) + " m=" + std::to_string(m) +
                   " beta=" + std::to_string(beta));
          ++r.cases;
        }
      }
    // operator identities on all hw vectors of sampled N(lambda)
    int lhw = opt.full ? 4 : 3, mhw = opt.full ? 4 : 2, boxhw = opt.full ? 6 : 4;
    for (int l = 2; l <= lhw; ++l)
      for (int m = 0; m <= mhw; ++m) {
        Weight lam{l + m, l};
        for (int dx = 0; dx <= boxhw; ++dx)
          for (int dy = 0; dy <= dx; ++dy) {
            Weight mu{lam.k + dx, lam.l + dy};
            if (!mu.dominant()) continue;
            for (const VermaVector& v : highest_weight_vectors(lam, mu)) {
              int y = mu.l, mv = mu.k - mu.l;
              auto run = [&](std::initializer_list<NavOp> w) {
                return navigate_from(OperatorWord(w), v, y, mv);
              };
              if (!(run({NavOp::Xp, NavOp::Ep}) == run({NavOp::Ep, NavOp::Xp})))
                r.fail("E+X+ = X+E+ fails at " + lam.str() + mu.str());
              if (!(run({NavOp::U, NavOp::Ep}) == run({NavOp::Ep, NavOp::U})))
                r.fail("UE+ = E+U fails at " + lam.str() + mu.str());
              if (!(run({NavOp::Dp, NavOp::Ep}) == run({NavOp::Ep, NavOp::Dp})))
                r.fail("D+E+ = E+D+ fails at " + lam.str() + mu.str());
              if (!(run({NavOp::U, NavOp::Dp}) == run({NavOp::Dp, NavOp::U})))
                r.fail("UD+ = D+U fails at " + lam.str() + mu.str());
              VermaVector lhs = run({NavOp::Xp, NavOp::U});
              lhs -= run({NavOp::U, NavOp::Xp});
              if (!(lhs == grat(mv + 1) * run({NavOp::Dp})))
                r.fail("X+U - UX+ = (m+1)D+ fails at " + lam.str() + mu.str());
              // closure: each step keeps N+ v = 0 and shifts the weight as tabulated
              for (int o = 0; o < 8; ++o) {
                NavOp op = static_cast<NavOp>(o);
                VermaVector img = run({op});
                if (!act(lie::Sym::NPlus, img).is_zero())
                  r.fail("highest-weight closure fails at " + lam.str() + mu.str());
                auto wgt = img.weight();
                OpShift sh = op_shift(op);
                if (wgt && *wgt != Weight{static_cast<int>(mu.k + sh.dl + sh.dm),
                                          static_cast<int>(mu.l + sh.dl)})
                  r.fail("operator weight shift wrong");
              }
              ++r.cases;
            }
          }
      }
  });
}

// ---------------------------------------------------------------------------
// 6. Index-set / multiplicity bridge
// ---------------------------------------------------------------------------

inline CheckResult check_multiplicity_bridge(const Options& opt) {
  using namespace structure;
  return detail::timed("6 index-set bridge", [&](CheckResult& r) {
    long bound = opt.full ? 20 : 12;
    for (long ell = 1; ell <= bound; ++ell)
      for (long m = 0; ell + m <= bound; ++m)
        for (long ellp = 1; ellp <= ell; ++ellp)
          for (long mp = 0; mp <= ell + m - ellp + 2; ++mp) {
            long words = static_cast<long>(index_set(ell, m, ellp, mp).size());
            long mult = verma::ktype_multiplicity_L(
                verma::Weight{static_cast<int>(ellp + mp), static_cast<int>(ellp)},
                verma::Weight{static_cast<int>(ell + m), static_cast<int>(ell)});
            if (words != mult)
              r.fail("bridge fails at (" + std::to_string(ell) + "," + std::to_string(m) +
                     ")<-(" + std::to_string(ellp) + "," + std::to_string(mp) + "): " +
                     std::to_string(words) + " vs " + std::to_string(mult));
            ++r.cases;
          }
  });
}

// ---------------------------------------------------------------------------
// 7. Degree bound
// ---------------------------------------------------------------------------

inline CheckResult check_degree_bound(const Options& opt) {
  using namespace structure;
  return detail::timed("7 degree bound", [&](CheckResult& r) {
    long bound = opt.full ? 20 : 12;
    bool attained = false;
    for (long ell = 1; ell <= bound; ++ell)
      for (long m = 0; ell + m <= bound; ++m) {
        long cap = degree_bound(ell, m);
        for (long ellp = 1; ellp <= ell; ++ellp)
          for (long mp = 0; mp <= ell + m - ellp; ++mp)
            for (auto& w : index_set(ell, m, ellp, mp)) {
              Signature sig = op_signature(w, ellp, mp, 0);
              if (sig.ell1 != ell || sig.m1 != m) r.fail("word lands off target");
              if (sig.invalid || sig.zero_by_convention) r.fail("emitted word degenerate");
              if (sig.p1 > cap) r.fail("degree bound violated");
              if (sig.p1 == cap) attained = true;
              ++r.cases;
            }
      }
    if (!attained) r.fail("degree bound never attained");
    // consistency of the scalar decomposition with the index sets
    for (long ell = 1; ell <= (opt.full ? 12 : 8); ++ell) {
      auto dec = scalar_decomposition(ell);
      std::map<std::pair<long, long>, long> dec_count, idx_count;
      for (auto& t : dec) ++dec_count[{t.ellp, t.mp}];
      for (long ellp = 1; ellp <= ell; ++ellp)
        for (long mp = 0; mp <= ell - ellp; ++mp) {
          long n = static_cast<long>(index_set(ell, 0, ellp, mp).size());
          if (n) idx_count[{ellp, mp}] = n;
        }
      if (dec_count != idx_count) r.fail("scalar decomposition differs from m=0 index sets");
      for (long p = 0; p <= degree_bound(ell, 0); ++p) {
        auto capped = scalar_decomposition(ell, p);
        std::size_t expect = 0;
        for (auto& t : dec)
          if (word_degree(t.word) <= p) ++expect;
        if (capped.size() != expect) r.fail("capped scalar decomposition wrong");
      }
      ++r.cases;
    }
  });
}

// ---------------------------------------------------------------------------
// 8. Nearly holomorphic calculus
// ---------------------------------------------------------------------------

inline CheckResult check_nearhol_calculus(const Options& opt) {
  using namespace nearhol;
  using namespace testing;
  return detail::timed("8 nearly holomorphic calculus", [&](CheckResult& r) {
    // monomial derivative rules, via the independent symbolic Wirtinger oracle
    int dmax = opt.full ? 5 : 3;
    for (int a = 0; a <= dmax; ++a)
      for (int b = 0; b <= dmax; ++b)
        for (int c = 0; c <= dmax; ++c) {
          RatDelta f = RatDelta::nh_monomial(a, b, c);
          RatDelta zero{};
          auto want = [&](int aa, int bb, int cc, long coef) {
            return coef == 0 ? zero : Rational(coef) * RatDelta::nh_monomial(aa, bb, cc);
          };
          if (!(dbar0(f) == want(a - 1, b, c, a))) r.fail("dbar0 rule fails");
          if (!(dbar1(f) == want(a, b - 1, c, b))) r.fail("dbar1 rule fails");
          if (!(dbar2(f) == want(a, b, c - 1, c))) r.fail("dbar2 rule fails");
          if (!(dbar3(f) == want(a, b, c, a + b + c))) r.fail("dbar3 rule fails");
          RatDelta dm = b >= 2 ? want(a, b - 2, c, static_cast<long>(b) * (b - 1)) : zero;
          if (a >= 1 && c >= 1) dm = dm + want(a - 1, b, c - 1, -4L * a * c);
          if (!(dminus(f) == dm)) r.fail("D- rule fails");
          ++r.cases;
        }
    // weight/degree bookkeeping, support monotonicity, holomorphy agreement
    std::mt19937_64 rng(opt.seed + 8);
    int nforms = opt.full ? 100 : 25;
    for (int i = 0; i < nforms; ++i) {
      long ell = rand_int(rng, 0, 5);
      int m = static_cast<int>(rand_int(rng, 0, 4));
      NearHolForm f = (i % 4 == 0) ? holomorphic_form(rng, ell, m) : random_form(rng, ell, m);
      int p = nearhol_degree(f);
      for (int o = 0; o < 8; ++o) {
        NavOp op = static_cast<NavOp>(o);
        NearHolForm g = apply_operator(op, f);
        OpShift sh = op_shift(op);
        bool convention_zero = (op == NavOp::U || op == NavOp::L) && f.m < 2;
        if (convention_zero) {
          if (!g.is_zero()) r.fail("U/L convention broken");
          continue;
        }
        if (g.ell != f.ell + sh.dl || g.m != f.m + sh.dm) r.fail("operator weight bookkeeping wrong");
        int p1 = p + sh.dp;
        if (p1 < 0 && !g.is_zero()) r.fail("negative target degree but nonzero image");
        if (nearhol_degree(g) > std::max(p1, 0)) r.fail("degree bookkeeping violated");
        if (!support_subset(g, f)) r.fail("support monotonicity violated");
      }
      HoloReport rep = holomorphy_test(f);
      if (rep.by_degree != rep.by_operators)
        r.fail("holomorphy criteria disagree: " + form_to_string(f));
      ++r.cases;
    }
  });
}

// ---------------------------------------------------------------------------
// 9. Arithmeticity
// ---------------------------------------------------------------------------

inline CheckResult check_arithmeticity(const Options& opt) {
  using namespace nearhol;
  return detail::timed("9 arithmeticity", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 9);
    int nforms = opt.full ? 60 : 15;
    for (int i = 0; i < nforms; ++i) {
      long ell = rand_int(rng, 1, 5);
      int m = static_cast<int>(rand_int(rng, 0, 4));
      NearHolForm f = random_form(rng, ell, m, true);
      int len = static_cast<int>(rand_int(rng, 1, 4));
      OperatorWord w;
      for (int j = 0; j < len; ++j)
        w.push_back(static_cast<NavOp>(rand_int(rng, 0, 3)));  // raising four
      NearHolForm g = apply_word(w, f);
      for (auto& [q, terms] : g.modes)
        for (auto& [mono, wm] : terms)
          for (auto& coef : wm.c)
            if (!coef.is_rational())
              r.fail("irrational output for word " + word_to_string(w));
      // conjugation equivariance on forms with genuinely complex coefficients
      NearHolForm h = random_form(rng, ell, m, false);
      NearHolForm lhs = sigma_act(apply_word(w, h), CoefficientMap::Conjugation);
      NearHolForm rhs = apply_word(w, sigma_act(h, CoefficientMap::Conjugation));
      if (!(lhs == rhs)) r.fail("conjugation equivariance fails");
      ++r.cases;
    }
  });
}

// ---------------------------------------------------------------------------
// 10. Classical commutations
// ---------------------------------------------------------------------------

inline CheckResult check_classical_commutations(const Options& opt) {
  using namespace nearhol;
  return detail::timed("10 classical commutations", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 10);
    int per_weight = opt.full ? 50 : 8;
    auto scaled = [](long s, const NearHolForm& f) {
      NearHolForm out = NearHolForm::zero(f.ell, f.m, f.level);
      for (auto& [q, terms] : f.modes)
        for (auto& [mono, w] : terms) {
          WmExact sw = w;
          for (auto& x : sw.c) x = grat(s) * x;
          out.add_term(q, mono, sw);
        }
      return out;
    };
    // zero forms produced by the U = L = 0 convention carry a clamped weight;
    // treat them as compatible with anything
    auto minus = [&](NearHolForm a, const NearHolForm& b) {
      if (a.is_zero()) a = NearHolForm::zero(b.ell, b.m, b.level);
      for (auto& [q, terms] : b.modes)
        for (auto& [mono, w] : terms) {
          WmExact neg = w;
          for (auto& x : neg.c) x = -x;
          a.add_term(q, mono, neg);
        }
      return a;
    };
    auto same = [](const NearHolForm& a, const NearHolForm& b) {
      return a == b || (a.is_zero() && b.is_zero());
    };
    for (long ell = 0; ell <= 5; ++ell)
      for (int m = 0; m <= 5; ++m)
        for (int i = 0; i < per_weight; ++i) {
          NearHolForm f = random_form(rng, ell, m);
          auto run = [&](std::initializer_list<NavOp> w) {
            return apply_word(OperatorWord(w), f);
          };
          if (!same(run({NavOp::Xp, NavOp::Ep}), run({NavOp::Ep, NavOp::Xp})))
            r.fail("E+X+ commutation fails");
          if (!same(run({NavOp::U, NavOp::Ep}), run({NavOp::Ep, NavOp::U})))
            r.fail("UE+ commutation fails");
          if (!same(run({NavOp::Dp, NavOp::Ep}), run({NavOp::Ep, NavOp::Dp})))
            r.fail("D+E+ commutation fails");
          if (!same(run({NavOp::U, NavOp::Dp}), run({NavOp::Dp, NavOp::U})))
            r.fail("UD+ commutation fails");
          NearHolForm lhs = minus(run({NavOp::Xp, NavOp::U}), run({NavOp::U, NavOp::Xp}));
          if (!same(lhs, scaled(m + 1, run({NavOp::Dp}))))
            r.fail("X+U - UX+ = (m+1)D+ fails at ell=" + std::to_string(ell) +
                   " m=" + std::to_string(m));
          ++r.cases;
        }
  });
}

// ---------------------------------------------------------------------------
// 11. Lie/classical correspondence (finite differences)
// ---------------------------------------------------------------------------

inline CheckResult check_rootvector_numerics(const Options& opt) {
  using namespace nearhol;
  return detail::timed("11 root-vector numerics", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 11);
    static const lie::Sym roots[8] = {lie::Sym::XPlus,  lie::Sym::XMinus, lie::Sym::NPlus,
                                      lie::Sym::NMinus, lie::Sym::P0Plus, lie::Sym::P0Minus,
                                      lie::Sym::P1Plus, lie::Sym::P1Minus};
    int triples = opt.full ? 20 : 6;
    auto rand_point = [&]() {
      auto u = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) / 9007199254740992.0);
      };
      double y = u(0.8, 1.5), yp = u(0.8, 1.5), v = u(-0.3, 0.3);
      return SiegelPoint(cplx(u(-0.5, 0.5), y), cplx(u(-0.5, 0.5), v), cplx(u(-0.5, 0.5), yp));
    };
    for (int i = 0; i < triples; ++i) {
      NearHolForm f;
      SiegelPoint zz = rand_point();
      lie::Sym x = roots[rand_int(rng, 0, 7)];
      NumcheckResult res{0, 0, 0};
      int attempts = 0;
      do {
        f = random_form(rng, rand_int(rng, 1, 4), static_cast<int>(rand_int(rng, 0, 3)), false);
        res = numcheck_rootvector(f, x, zz, 1e-4);
      } while (std::max(res.left_norm, res.right_norm) < 1e-3 && ++attempts < 20);
      if (!(res.residual < 1e-5))
        r.fail("residual " + std::to_string(res.residual) + " at h=1e-4 for " +
               lie::sym_name(x));
      double r1 = numcheck_rootvector(f, x, zz, 1e-3).residual;
      double r2 = numcheck_rootvector(f, x, zz, 5e-4).residual;
      bool quarter = (r1 < 1e-10 && r2 < 1e-10) || (r1 / r2 > 2.0 && r1 / r2 < 8.0);
      if (!quarter)
        r.fail("residual does not scale O(h^2): " + std::to_string(r1) + " -> " +
               std::to_string(r2));
      ++r.cases;
    }
  });
}

// ---------------------------------------------------------------------------
// 12. V_k solver
// ---------------------------------------------------------------------------

inline CheckResult check_vk_solver(const Options& opt) {
  using namespace structure;
  return detail::timed("12 V_k solver", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed + 12);
    int n = opt.full ? 200 : 50;
    for (int i = 0; i < n; ++i) {
      long m1 = rand_int(rng, 0, 6), m3 = rand_int(rng, 0, 6), star = rand_int(rng, 0, 12);
      bool feasible = (m3 <= star) && (star <= m1 + m3);
      try {
        VkMultiplicities v = vk_multiplicities(m1, m3, star);
        if (!feasible) r.fail("infeasible input accepted");
        if (v.a + v.c != m1 || v.b != m3 || v.b + v.c != star)
          r.fail("linear system not satisfied");
        if (v.a < 0 || v.b < 0 || v.c < 0) r.fail("negative multiplicity");
        if (star == m3 && v.c != 0) r.fail("c must vanish when M3* = M3");
      } catch (const std::invalid_argument&) {
        if (feasible) r.fail("feasible input rejected");
      }
      ++r.cases;
    }
  });
}

inline std::vector<CheckResult> run_all(const Options& opt) {
  return {check_lie_consistency(opt),    check_casimir(opt),
          check_multiplicities(opt),     check_composition_series(opt),
          check_navigation(opt),         check_multiplicity_bridge(opt),
          check_degree_bound(opt),       check_nearhol_calculus(opt),
          check_arithmeticity(opt),      check_classical_commutations(opt),
          check_rootvector_numerics(opt), check_vk_solver(opt)};
}

}  // namespace sp4forms::checks

#endif
