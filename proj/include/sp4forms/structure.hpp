#ifndef SP4FORMS_STRUCTURE_HPP
#define SP4FORMS_STRUCTURE_HPP

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nav_ops.hpp"

namespace sp4forms::structure {

/// Weight/degree signature of a word applied at (ell, m, p), folded
/// rightmost symbol first.
struct Signature {
  long ell1, m1, p1;
  long degree;           // p1 - p
  bool zero_by_convention = false;  // U or L hit with m < 2
  bool invalid = false;             // passed through m < 0
};

inline Signature op_signature(const OperatorWord& word, long ell, long m, long p) {
  Signature s{ell, m, p, 0, false, false};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if ((*it == NavOp::U || *it == NavOp::L) && s.m1 < 2) s.zero_by_convention = true;
    OpShift sh = op_shift(*it);
    s.ell1 += sh.dl;
    s.m1 += sh.dm;
    s.p1 += sh.dp;
    if (s.m1 < 0) s.invalid = true;
  }
  s.degree = s.p1 - p;
  return s;
}

/// Degree of a word in the raising monoid (independent of the base point).
inline long word_degree(const OperatorWord& word) {
  long v = 0;
  for (NavOp op : word) v += op_shift(op).dp;
  return v;
}

namespace detail {

inline OperatorWord xdu_word(int a, int b, int c, bool e_plus) {
  OperatorWord w;
  if (e_plus) w.push_back(NavOp::Ep);
  w.insert(w.end(), a, NavOp::Xp);
  w.insert(w.end(), b, NavOp::Dp);
  w.insert(w.end(), c, NavOp::U);
  return w;
}

}  // namespace detail

/// The index sets carrying weight (l',m') holomorphic forms into weight
/// (l,m) nearly holomorphic forms. Words are X+^a D+^b U^c, possibly with a
/// single leading E+. For l' = 1 the set is a singleton or empty; the even-l
/// singleton exists only for m' >= 1 (for m' = 0 the would-be word kills
/// L(1,1), so it is excluded).
inline std::vector<OperatorWord> index_set(long ell, long m, long ellp, long mp) {
  std::vector<OperatorWord> out;
  if (ell == 0 && m == 0 && ellp == 0 && mp == 0) {
    out.push_back({});
    return out;
  }
  if (m < 0 || mp < 0) return out;
  if (ellp >= 2 && ell >= ellp) {
    // X+^a D+^b U^c : c <= m'/2, l'+m'+2a+2b = l+m, l'+2b+2c = l
    for (long c = 0; 2 * c <= mp; ++c) {
      long twob = ell - ellp - 2 * c;
      if (twob < 0 || twob % 2) continue;
      long b = twob / 2;
      long twoa = (ell + m) - (ellp + mp) - 2 * b;
      if (twoa < 0 || twoa % 2) continue;
      out.push_back(detail::xdu_word(static_cast<int>(twoa / 2), static_cast<int>(b),
                                     static_cast<int>(c), false));
    }
    // E+ X+^a D+^b U^c : c < m'/2, with the +1-shifted constraints
    for (long c = 0; 2 * c < mp; ++c) {
      long twob = ell - ellp - 2 * c - 1;
      if (twob < 0 || twob % 2) continue;
      long b = twob / 2;
      long twoa = (ell + m) - (ellp + mp) - 2 * b - 1;
      if (twoa < 0 || twoa % 2) continue;
      out.push_back(detail::xdu_word(static_cast<int>(twoa / 2), static_cast<int>(b),
                                     static_cast<int>(c), true));
    }
    return out;
  }
  if (ellp == 1 && ell >= 1) {
    if (mp > m || (m - mp) % 2 != 0) return out;
    if (ell % 2 == 1) {
      out.push_back(detail::xdu_word(static_cast<int>((m - mp) / 2),
                                     static_cast<int>((ell - 1) / 2), 0, false));
    } else if (mp >= 1) {
      out.push_back(detail::xdu_word(static_cast<int>((m - mp) / 2),
                                     static_cast<int>((ell - 2) / 2), 0, true));
    }
    return out;
  }
  return out;
}

/// Uniform bound on the nearly holomorphic degree of cusp forms of weight
/// (l, m): p = l - 1 + floor(m/2).
inline long degree_bound(long ell, long m) { return ell - 1 + m / 2; }

// ---------------------------------------------------------------------------
// Dimension bookkeeping
// ---------------------------------------------------------------------------

enum class DimKind { S, M, Mstar3 };

inline const char* dim_kind_name(DimKind k) {
  switch (k) {
    case DimKind::S: return "S";
    case DimKind::M: return "M";
    case DimKind::Mstar3: return "Mstar3";
  }
  throw std::logic_error("bad kind");
}

/// User-supplied dimensions of modular form spaces; the library never
/// computes these.
struct DimTable {
  std::map<std::pair<long, long>, long> s;       // dim S_{l,m}
  std::map<std::pair<long, long>, long> m;       // dim M_{l,m}
  std::map<long, long> mstar3;                   // dim M*_{3,m}

  std::optional<long> lookup(DimKind kind, long ell, long mm) const {
    switch (kind) {
      case DimKind::S: {
        auto it = s.find({ell, mm});
        return it == s.end() ? std::nullopt : std::optional<long>(it->second);
      }
      case DimKind::M: {
        auto it = m.find({ell, mm});
        return it == m.end() ? std::nullopt : std::optional<long>(it->second);
      }
      case DimKind::Mstar3: {
        auto it = mstar3.find(mm);
        return it == mstar3.end() ? std::nullopt : std::optional<long>(it->second);
      }
    }
    throw std::logic_error("bad kind");
  }

  void set(DimKind kind, long ell, long mm, long dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    switch (kind) {
      case DimKind::S: s[{ell, mm}] = dim; break;
      case DimKind::M: m[{ell, mm}] = dim; break;
      case DimKind::Mstar3:
        if (ell != 3) throw std::invalid_argument("Mstar3 entries must have ell = 3");
        mstar3[mm] = dim;
        break;
    }
  }
};

inline DimTable dimtable_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims"))
    throw std::invalid_argument("dimension table must be {\"dims\": [...]}");
  DimTable t;
  for (auto& e : j.at("dims")) {
    std::string kind = e.at("kind").get<std::string>();
    DimKind k;
    if (kind == "S") k = DimKind::S;
    else if (kind == "M") k = DimKind::M;
    else if (kind == "Mstar3") k = DimKind::Mstar3;
    else throw std::invalid_argument("unknown dim kind: " + kind);
    t.set(k, e.at("ell").get<long>(), e.at("m").get<long>(), e.at("dim").get<long>());
  }
  return t;
}

struct DimContribution {
  long ellp, mp;
  DimKind kind;
  long dim;        // -1 when unresolved
  long word_count; // words surviving the degree cap
};

struct DimBreakdown {
  std::optional<long> total;  // absent when any needed dimension is missing
  std::vector<DimContribution> parts;
  std::vector<std::pair<long, long>> unresolved;
};

namespace detail {

inline DimBreakdown dimension_sum(long ell, long m, const DimTable& dims, bool cusp,
                                  std::optional<long> cap) {
  DimBreakdown out;
  long total = 0;
  bool complete = true;
  for (long ellp = 1; ellp <= ell; ++ellp)
    for (long mp = 0; mp <= ell + m - ellp; ++mp) {
      auto words = index_set(ell, m, ellp, mp);
      long count = 0;
      for (auto& w : words)
        if (!cap || word_degree(w) <= *cap) ++count;
      if (count == 0) continue;
      DimKind kind = cusp ? DimKind::S : (ellp == 3 ? DimKind::Mstar3 : DimKind::M);
      auto dim = dims.lookup(kind, ellp, mp);
      DimContribution part{ellp, mp, kind, dim.value_or(-1), count};
      out.parts.push_back(part);
      if (!dim) {
        complete = false;
        out.unresolved.push_back({ellp, mp});
      } else {
        total += *dim * count;
      }
    }
  if (complete) out.total = total;
  return out;
}

}  // namespace detail

/// dim of the cuspidal space N_{l,m}(Gamma)^o (optionally capped at nearly
/// holomorphic degree p) from user-supplied cusp dimensions. Missing
/// entries are reported as unresolved, never treated as zero.
inline DimBreakdown cusp_dimension(long ell, long m, const DimTable& dims,
                                   std::optional<long> cap = std::nullopt) {
  return detail::dimension_sum(ell, m, dims, true, cap);
}

/// dim of the full space N_{l,m}(Gamma); the ell' = 3 column uses M*_{3,m'}
/// dimensions. For ell = 0 the answer is the constants-only one.
inline DimBreakdown noncusp_dimension(long ell, long m, const DimTable& dims,
                                      std::optional<long> cap = std::nullopt) {
  if (ell == 0) {
    DimBreakdown out;
    out.total = (m == 0) ? 1 : 0;
    return out;
  }
  if (ell < 0) {
    DimBreakdown out;
    out.total = 0;
    return out;
  }
  return detail::dimension_sum(ell, m, dims, false, cap);
}

// ---------------------------------------------------------------------------
// Scalar-valued decomposition and the V_k solver
// ---------------------------------------------------------------------------

struct ScalarTerm {
  long ellp, mp;
  OperatorWord word;
};

/// Building blocks of scalar-valued (m = 0) cusp forms of weight l:
/// D+^{(l-l'-m')/2} U^{m'/2} S_{l',m'}, plus D+^{(l-1)/2} S_{1,0} for odd l.
/// With a degree cap p, the ranges shrink to l' >= max(2, l-2p),
/// m' >= max(0, 2(l-l'-p)), and the S_{1,0} term needs p >= l-1.
inline std::vector<ScalarTerm> scalar_decomposition(long ell,
                                                    std::optional<long> cap = std::nullopt) {
  if (ell < 1) throw std::invalid_argument("scalar_decomposition requires ell >= 1");
  std::vector<ScalarTerm> out;
  long lo_ellp = cap ? std::max<long>(2, ell - 2 * *cap) : 2;
  for (long ellp = lo_ellp; ellp <= ell; ++ellp) {
    if ((ell - ellp) % 2) continue;
    long lo_mp = cap ? std::max<long>(0, 2 * (ell - ellp - *cap)) : 0;
    if (lo_mp % 2) ++lo_mp;
    for (long mp = lo_mp; mp <= ell - ellp; mp += 2) {
      OperatorWord w = detail::xdu_word(0, static_cast<int>((ell - ellp - mp) / 2),
                                        static_cast<int>(mp / 2), false);
      out.push_back({ellp, mp, std::move(w)});
    }
  }
  if (ell % 2 == 1 && (!cap || *cap >= ell - 1))
    out.push_back({1, 0, detail::xdu_word(0, static_cast<int>((ell - 1) / 2), 0, false)});
  return out;
}

struct VkMultiplicities {
  long a;  // copies of L(k,1)
  long b;  // copies of L(k,3)
  long c;  // copies of N(k,1)^dual
};

/// Solves a+c = dim M_{1,k-1}, b = dim M_{3,k-3}, b+c = dim M*_{3,k-3}.
/// Rejects infeasible inputs.
inline VkMultiplicities vk_multiplicities(long dim_m1, long dim_m3, long dim_m3star) {
  if (dim_m1 < 0 || dim_m3 < 0 || dim_m3star < 0)
    throw std::invalid_argument("vk_multiplicities: dimensions must be nonnegative");
  if (dim_m3star < dim_m3)
    throw std::invalid_argument("vk_multiplicities: need dim M3 <= dim M3*");
  if (dim_m3star > dim_m1 + dim_m3)
    throw std::invalid_argument("vk_multiplicities: need dim M3* <= dim M1 + dim M3");
  return {dim_m1 + dim_m3 - dim_m3star, dim_m3, dim_m3star - dim_m3};
}

}  // namespace sp4forms::structure

#endif
