#ifndef SP4FORMS_VERMA_HPP
#define SP4FORMS_VERMA_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "enveloping.hpp"
#include "linalg.hpp"
#include "nav_ops.hpp"

namespace sp4forms::verma {

using lie::LieElement;
using lie::Sym;

/// Integral weight (value on Z, value on Z').
struct Weight {
  int k = 0;
  int l = 0;
  friend bool operator==(const Weight& a, const Weight& b) { return a.k == b.k && a.l == b.l; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    return a.k != b.k ? a.k < b.k : a.l < b.l;
  }
  bool dominant() const { return k >= l; }
  std::string str() const { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }
};

// ---------------------------------------------------------------------------
// Multiplicities
// ---------------------------------------------------------------------------

/// Number of ways to write (x,y) as a Z>=0 combination of (2,0),(1,1),(0,2).
inline long q_count(long x, long y) {
  if (x < 0 || y < 0 || ((x - y) % 2) != 0) return 0;
  return (std::min(x, y) + 2) / 2;
}

/// Same count by direct enumeration; test oracle for q_count.
inline long q_count_brute(long x, long y) {
  long n = 0;
  for (long a = 0; 2 * a <= x; ++a)
    for (long b = 0; a * 2 + b <= x && b <= y; ++b) {
      long ry = y - b;
      if (2 * a + b == x && ry % 2 == 0 && ry >= 0) ++n;
    }
  return n;
}

/// dim of the (x,y) weight space of N(lambda), via the finite sum over the
/// N- ladder.
inline long weight_multiplicity(Weight lambda, Weight mu) {
  if (!lambda.dominant()) throw std::invalid_argument("lambda not dominant");
  long total = 0;
  for (int n = 0; n <= lambda.k - lambda.l; ++n)
    total += q_count(mu.k - lambda.k + n, mu.l - lambda.l - n);
  return total;
}

/// Weight of the basis monomial X+^a P1+^b P0+^c N-^d w0 in N(lambda).
inline Weight monomial_weight(Weight lambda, int a, int b, int c, int d) {
  return Weight{lambda.k + 2 * a + b - d, lambda.l + b + 2 * c + d};
}

/// All basis monomials (a,b,c,d) of a given weight; brute-force companion to
/// weight_multiplicity.
inline std::vector<std::array<int, 4>> monomials_of_weight(Weight lambda, Weight mu) {
  std::vector<std::array<int, 4>> out;
  int dk = mu.k - lambda.k, dl = mu.l - lambda.l;
  for (int d = 0; d <= lambda.k - lambda.l; ++d) {
    // 2a + b = dk + d, b + 2c = dl - d
    int s1 = dk + d, s2 = dl - d;
    if (s1 < 0 || s2 < 0) continue;
    for (int b = s1 % 2; b <= std::min(s1, s2); b += 2) {
      if ((s2 - b) % 2 != 0) continue;
      out.push_back({(s1 - b) / 2, b, (s2 - b) / 2, d});
    }
  }
  return out;
}

/// K-type multiplicity of rho_mu in N(lambda), closed form.
inline long ktype_multiplicity_N(Weight lambda, Weight mu) {
  if (!lambda.dominant() || !mu.dominant()) throw std::invalid_argument("weights not dominant");
  long x = mu.k, y = mu.l, k = lambda.k, l = lambda.l;
  if (x < k || y < l || ((x - y) - (k - l)) % 2 != 0) return 0;
  if (y <= k) return (std::min(x - k, y - l) + 2) / 2;
  return std::min(x - k, y - l) / 2 - (y - k - 1) / 2;
}

/// K-type multiplicity of rho_mu in N(lambda) via m_mu - m_{mu+(1,-1)}.
inline long ktype_multiplicity_N_via_weights(Weight lambda, Weight mu) {
  return weight_multiplicity(lambda, mu) - weight_multiplicity(lambda, Weight{mu.k + 1, mu.l - 1});
}

// ---------------------------------------------------------------------------
// Regions, reducibility, composition series, unitarity
// ---------------------------------------------------------------------------

enum class RegionTag { A, B, C, D, IrreducibleWall };

inline const char* region_name(RegionTag r) {
  switch (r) {
    case RegionTag::A: return "A";
    case RegionTag::B: return "B";
    case RegionTag::C: return "C";
    case RegionTag::D: return "D";
    case RegionTag::IrreducibleWall: return "IrreducibleWall";
  }
  throw std::logic_error("bad region");
}

inline RegionTag region(Weight lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("lambda not dominant");
  int k = lambda.k, l = lambda.l;
  if (k <= 0) return RegionTag::A;
  if (k >= 2 && k + l <= 2) return RegionTag::B;
  if (l <= 1 && k + l >= 4) return RegionTag::C;
  if (l >= 3) return RegionTag::D;
  return RegionTag::IrreducibleWall;  // k=1, or k+l=3, or l=2
}

inline bool is_irreducible(Weight lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("lambda not dominant");
  return lambda.l >= 2 || lambda.k == 1 || lambda.k + lambda.l == 3;
}

enum class ModuleKind { N, L, NDual };

struct ModuleLabel {
  ModuleKind kind;
  Weight weight;
};

/// Composition series of N(lambda): socle first when reducible.
struct CompositionSeries {
  std::optional<ModuleLabel> socle;  // absent when irreducible
  ModuleLabel quotient;
};

inline Weight socle_weight(Weight lambda) {
  switch (region(lambda)) {
    case RegionTag::A: return Weight{-lambda.k + 2, lambda.l};          // s2 . lambda
    case RegionTag::B: return Weight{-lambda.l + 3, -lambda.k + 3};     // s2 s1 s2 . lambda
    case RegionTag::C: return Weight{lambda.k, -lambda.l + 4};          // s1 s2 s1 . lambda
    default: throw std::invalid_argument("N(lambda) is irreducible");
  }
}

inline CompositionSeries composition_series(Weight lambda) {
  if (is_irreducible(lambda)) return {std::nullopt, {ModuleKind::L, lambda}};
  return {ModuleLabel{ModuleKind::L, socle_weight(lambda)}, ModuleLabel{ModuleKind::L, lambda}};
}

/// K-type multiplicity of rho_mu in the irreducible quotient L(lambda), by
/// region recursion A -> B -> C -> D (at most three steps).
inline long ktype_multiplicity_L(Weight lambda, Weight mu) {
  if (is_irreducible(lambda)) return ktype_multiplicity_N(lambda, mu);
  return ktype_multiplicity_N(lambda, mu) - ktype_multiplicity_L(socle_weight(lambda), mu);
}

struct UnitaryFlags {
  bool square_integrable;
  bool tempered;
  bool unitarizable;
};

inline UnitaryFlags unitary_class(Weight lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("lambda not dominant");
  return {lambda.l >= 3, lambda.l >= 2,
          lambda.l >= 1 || (lambda.k == 0 && lambda.l == 0)};
}

/// Scalar by which the Casimir acts on N(lambda).
inline Rational casimir_scalar(Weight lambda) {
  long k = lambda.k, l = lambda.l;
  return rat(k * (k - 2) + l * (l - 4), 2);
}

// ---------------------------------------------------------------------------
// The module N(lambda) itself
// ---------------------------------------------------------------------------

/// Exponents (a,b,c,d) of the basis monomial X+^a P1+^b P0+^c N-^d w0.
using VMono = std::array<int, 4>;

/// Finite combination of basis monomials of N(lambda).
struct VermaVector {
  Weight lambda;
  std::map<VMono, GaussianRational> terms;

  bool is_zero() const { return terms.empty(); }

  void add(const VMono& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  VermaVector& operator+=(const VermaVector& o) {
    for (auto& [m, c] : o.terms) add(m, c);
    return *this;
  }
  VermaVector& operator-=(const VermaVector& o) {
    for (auto& [m, c] : o.terms) add(m, -c);
    return *this;
  }
  friend VermaVector operator*(const GaussianRational& c, const VermaVector& v) {
    VermaVector out{v.lambda, {}};
    if (c.is_zero()) return out;
    for (auto& [m, t] : v.terms) out.terms[m] = c * t;
    return out;
  }
  friend bool operator==(const VermaVector& a, const VermaVector& b) {
    return a.lambda == b.lambda && a.terms == b.terms;
  }

  /// Weight of the vector, if homogeneous.
  std::optional<Weight> weight() const {
    std::optional<Weight> w;
    for (auto& [m, c] : terms) {
      Weight mw = monomial_weight(lambda, m[0], m[1], m[2], m[3]);
      if (!w) w = mw;
      else if (*w != mw) return std::nullopt;
    }
    return w;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
           std::to_string(m[2]) + "," + std::to_string(m[3]) + "]";
    }
    return s;
  }
};

inline VermaVector cyclic_vector(Weight lambda) {
  if (!lambda.dominant()) throw std::invalid_argument("lambda not dominant");
  VermaVector v{lambda, {}};
  v.terms[{0, 0, 0, 0}] = GaussianRational(1);
  return v;
}

namespace detail {

/// Memo for single-symbol actions inside one act() call.
using ActMemo = std::map<std::pair<Sym, VMono>, std::map<VMono, GaussianRational>>;

inline void accumulate(std::map<VMono, GaussianRational>& acc, const VMono& m,
                       const GaussianRational& c) {
  if (c.is_zero()) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

std::map<VMono, GaussianRational> act_symbol_mono(Sym s, const VMono& mono, Weight lambda,
                                                  ActMemo& memo);

/// s applied to a combination of basis monomials.
inline std::map<VMono, GaussianRational> act_symbol_map(
    Sym s, const std::map<VMono, GaussianRational>& v, Weight lambda, ActMemo& memo) {
  std::map<VMono, GaussianRational> out;
  for (auto& [m, c] : v) {
    auto part = act_symbol_mono(s, m, lambda, memo);
    for (auto& [pm, pc] : part) accumulate(out, pm, c * pc);
  }
  return out;
}

/// Commutes s past the leading generator of the monomial; p- and N+ kill w0,
/// Z and Z' act by the ambient weight, N- is capped at d = k - l.
inline std::map<VMono, GaussianRational> act_symbol_mono_impl(Sym s, const VMono& mono,
                                                              Weight lambda, ActMemo& memo) {
  std::map<VMono, GaussianRational> out;
  const GaussianRational one(1);
  if (s == Sym::XPlus) {
    out[{mono[0] + 1, mono[1], mono[2], mono[3]}] = one;
    return out;
  }
  if (s == Sym::P1Plus) {
    out[{mono[0], mono[1] + 1, mono[2], mono[3]}] = one;
    return out;
  }
  if (s == Sym::P0Plus) {
    out[{mono[0], mono[1], mono[2] + 1, mono[3]}] = one;
    return out;
  }
  if (s == Sym::NMinus && mono[0] == 0 && mono[1] == 0 && mono[2] == 0) {
    // N-^{k-l+1} w0 = 0 inside F(lambda)
    if (mono[3] + 1 <= lambda.k - lambda.l) out[{0, 0, 0, mono[3] + 1}] = one;
    return out;
  }
  // peel the leftmost generator present
  int slot = mono[0] > 0 ? 0 : mono[1] > 0 ? 1 : mono[2] > 0 ? 2 : mono[3] > 0 ? 3 : -1;
  if (slot < 0) {
    // action on w0
    switch (s) {
      case Sym::Z: out[{0, 0, 0, 0}] = GaussianRational(lambda.k); break;
      case Sym::Zp: out[{0, 0, 0, 0}] = GaussianRational(lambda.l); break;
      case Sym::NMinus:
        if (lambda.k - lambda.l >= 1) out[{0, 0, 0, 1}] = one;
        break;
      default: break;  // N+, X-, P1-, P0- annihilate w0
    }
    return out;
  }
  static const Sym slot_sym[4] = {Sym::XPlus, Sym::P1Plus, Sym::P0Plus, Sym::NMinus};
  Sym t = slot_sym[slot];
  VMono rest = mono;
  --rest[slot];
  if (rest[slot] < 0) throw std::logic_error("bad monomial");
  // s . t rest = t (s . rest) + [s,t] . rest
  auto inner = act_symbol_mono(s, rest, lambda, memo);
  if (t == Sym::NMinus) {
    auto shifted = act_symbol_map(Sym::NMinus, inner, lambda, memo);
    for (auto& [m, c] : shifted) accumulate(out, m, c);
  } else {
    for (auto& [m, c] : inner) {
      VMono up = m;
      ++up[slot];
      accumulate(out, up, c);
    }
  }
  for (auto& [bs, bc] : lie::bracket(s, t)) {
    auto part = act_symbol_mono(bs, rest, lambda, memo);
    for (auto& [m, c] : part) accumulate(out, m, bc * c);
  }
  return out;
}

inline std::map<VMono, GaussianRational> act_symbol_mono(Sym s, const VMono& mono, Weight lambda,
                                                         ActMemo& memo) {
  auto key = std::make_pair(s, mono);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto res = act_symbol_mono_impl(s, mono, lambda, memo);
  memo[key] = res;
  return res;
}

}  // namespace detail

inline VermaVector act(Sym s, const VermaVector& v) {
  detail::ActMemo memo;
  VermaVector out{v.lambda, detail::act_symbol_map(s, v.terms, v.lambda, memo)};
  return out;
}

/// Exact action of an enveloping-algebra element. Each PBW monomial is
/// applied symbol by symbol, rightmost factor first.
inline VermaVector act(const LieElement& e, const VermaVector& v) {
  detail::ActMemo memo;
  VermaVector out{v.lambda, {}};
  for (auto& [pbw, coeff] : e.terms()) {
    std::map<VMono, GaussianRational> cur = v.terms;
    for (int s = lie::kNumSyms - 1; s >= 0 && !cur.empty(); --s)
      for (int rep = 0; rep < pbw[s] && !cur.empty(); ++rep)
        cur = detail::act_symbol_map(static_cast<Sym>(s), cur, v.lambda, memo);
    for (auto& [m, c] : cur) out.add(m, coeff * c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Highest weight vectors and navigation
// ---------------------------------------------------------------------------

/// Basis of ker(N+) on the mu weight space of N(lambda); its dimension is
/// the K-type multiplicity.
inline std::vector<VermaVector> highest_weight_vectors(Weight lambda, Weight mu) {
  std::vector<VMono> monos = monomials_of_weight(lambda, mu);
  if (monos.empty()) return {};
  std::vector<VMono> target = monomials_of_weight(lambda, Weight{mu.k + 1, mu.l - 1});
  std::map<VMono, std::size_t> index;
  for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = i;
  GMatrix mat(target.size(), monos.size());
  detail::ActMemo memo;
  for (std::size_t j = 0; j < monos.size(); ++j) {
    auto img = detail::act_symbol_mono(Sym::NPlus, monos[j], lambda, memo);
    for (auto& [m, c] : img) mat.at(index.at(m), j) = c;
  }
  std::vector<VermaVector> out;
  for (auto& coords : mat.kernel()) {
    VermaVector v{lambda, {}};
    for (std::size_t j = 0; j < monos.size(); ++j) v.add(monos[j], coords[j]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Weight bookkeeping for one navigation step applied to a highest weight
/// vector of weight (l+m, l).
inline void nav_step_weight(NavOp op, int& l, int& m) {
  OpShift sh = op_shift(op);
  l += sh.dl;
  m += sh.dm;
}

/// Applies a word of navigation operators to a vector, rightmost symbol first,
/// rebinding m to the current weight gap at each step.
inline VermaVector navigate_from(const OperatorWord& word, VermaVector v, int l, int m) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    v = act(lie::nav_operator(*it, m), v);
    nav_step_weight(*it, l, m);
  }
  return v;
}

/// navigate from the cyclic vector of N(lambda), lambda = (l+m, l).
inline VermaVector navigate(const OperatorWord& word, Weight lambda) {
  return navigate_from(word, cyclic_vector(lambda), lambda.l, lambda.k - lambda.l);
}

/// <X w0, X w0> for the invariant Hermitian form normalized by <w0,w0> = 1;
/// equals the Petersson proportionality constant of the word.
inline Rational petersson_constant(Weight lambda, const OperatorWord& word) {
  if (lambda.l <= 0) throw std::invalid_argument("petersson_constant requires l >= 1");
  for (NavOp op : word)
    if (op_is_raising(op) == false)
      throw std::invalid_argument("petersson word must use Xp, U, Ep, Dp only");
  // record the m bound at each application step
  int l = lambda.l, m = lambda.k - lambda.l;
  std::vector<long> bound_m(word.size());
  VermaVector v = cyclic_vector(lambda);
  for (std::size_t i = word.size(); i-- > 0;) {
    bound_m[i] = m;
    v = act(lie::nav_operator(word[i], m), v);
    nav_step_weight(word[i], l, m);
  }
  // apply the adjoints outermost-first: tau(E_1 ... E_r) = tau(E_r)...tau(E_1)
  for (std::size_t i = 0; i < word.size(); ++i)
    v = act(lie::nav_operator(word[i], bound_m[i]).adjoint(), v);
  if (v.is_zero()) return Rational(0);
  if (v.terms.size() != 1 || v.terms.begin()->first != VMono{0, 0, 0, 0})
    throw std::logic_error("contravariant pairing did not land on w0");
  const GaussianRational& c = v.terms.begin()->second;
  if (!c.is_rational()) throw std::logic_error("contravariant pairing not rational");
  if (c.re < 0) throw std::logic_error("contravariant form negative on unitarizable weight");
  return c.re;
}

}  // namespace sp4forms::verma

#endif
