#ifndef SP4FORMS_LIE_ALGEBRA_HPP
#define SP4FORMS_LIE_ALGEBRA_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaussian_rational.hpp"
#include "linalg.hpp"

namespace sp4forms::lie {

/// The ten basis symbols of sp4(C), listed in the PBW total order used for
/// normal forms: raising, Cartan, compact, lowering.
enum class Sym : int {
  XPlus = 0,
  P1Plus,
  P0Plus,
  Z,
  Zp,
  NPlus,
  NMinus,
  XMinus,
  P1Minus,
  P0Minus,
};

inline constexpr int kNumSyms = 10;

inline const char* sym_name(Sym s) {
  static const char* names[kNumSyms] = {"Xp", "P1p", "P0p", "Z",   "Zp",
                                        "Np", "Nm",  "Xm",  "P1m", "P0m"};
  return names[static_cast<int>(s)];
}

inline std::array<Sym, kNumSyms> all_syms() {
  std::array<Sym, kNumSyms> v{};
  for (int i = 0; i < kNumSyms; ++i) v[i] = static_cast<Sym>(i);
  return v;
}

/// ad-weight (eigenvalues under ad Z, ad Z') of each root/Cartan vector.
inline std::pair<int, int> sym_weight(Sym s) {
  switch (s) {
    case Sym::XPlus: return {2, 0};
    case Sym::P1Plus: return {1, 1};
    case Sym::P0Plus: return {0, 2};
    case Sym::Z: return {0, 0};
    case Sym::Zp: return {0, 0};
    case Sym::NPlus: return {1, -1};
    case Sym::NMinus: return {-1, 1};
    case Sym::XMinus: return {-2, 0};
    case Sym::P1Minus: return {-1, -1};
    case Sym::P0Minus: return {0, -2};
  }
  throw std::logic_error("bad symbol");
}

using GMat4 = std::array<std::array<GaussianRational, 4>, 4>;

namespace detail {

inline GMat4 make_matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  GMat4 m;
  int r = 0;
  for (auto& row : rows) {
    int c = 0;
    for (auto& e : row) m[r][c++] = e;
    ++r;
  }
  return m;
}

}  // namespace detail

/// The defining 4x4 matrices. Entries live in (1/2)Z[i].
inline const GMat4& basis_matrix(Sym s) {
  static const std::array<GMat4, kNumSyms> mats = [] {
    using detail::make_matrix;
    const GaussianRational O;
    const GaussianRational h = grat(1, 2);       // 1/2
    const GaussianRational mh = grat(-1, 2);     // -1/2
    const GaussianRational ih(rat(0), rat(1, 2));   // i/2
    const GaussianRational mih(rat(0), rat(-1, 2)); // -i/2
    const GaussianRational I(rat(0), rat(1));
    const GaussianRational mI(rat(0), rat(-1));
    std::array<GMat4, kNumSyms> m{};
    // Z = -i E13 + i E31
    m[static_cast<int>(Sym::Z)] = make_matrix({{O, O, mI, O}, {O, O, O, O}, {I, O, O, O}, {O, O, O, O}});
    // Z' = -i E24 + i E42
    m[static_cast<int>(Sym::Zp)] = make_matrix({{O, O, O, O}, {O, O, O, mI}, {O, O, O, O}, {O, I, O, O}});
    m[static_cast<int>(Sym::NPlus)] =
        make_matrix({{O, h, O, mih}, {mh, O, mih, O}, {O, ih, O, h}, {ih, O, mh, O}});
    m[static_cast<int>(Sym::NMinus)] =
        make_matrix({{O, h, O, ih}, {mh, O, ih, O}, {O, mih, O, h}, {mih, O, mh, O}});
    m[static_cast<int>(Sym::XPlus)] =
        make_matrix({{h, O, ih, O}, {O, O, O, O}, {ih, O, mh, O}, {O, O, O, O}});
    m[static_cast<int>(Sym::XMinus)] =
        make_matrix({{h, O, mih, O}, {O, O, O, O}, {mih, O, mh, O}, {O, O, O, O}});
    m[static_cast<int>(Sym::P1Plus)] =
        make_matrix({{O, h, O, ih}, {h, O, ih, O}, {O, ih, O, mh}, {ih, O, mh, O}});
    m[static_cast<int>(Sym::P1Minus)] =
        make_matrix({{O, h, O, mih}, {h, O, mih, O}, {O, mih, O, mh}, {mih, O, mh, O}});
    m[static_cast<int>(Sym::P0Plus)] =
        make_matrix({{O, O, O, O}, {O, h, O, ih}, {O, O, O, O}, {O, ih, O, mh}});
    m[static_cast<int>(Sym::P0Minus)] =
        make_matrix({{O, O, O, O}, {O, h, O, mih}, {O, O, O, O}, {O, mih, O, mh}});
    return m;
  }();
  return mats[static_cast<int>(s)];
}

inline GMat4 mat_mul(const GMat4& a, const GMat4& b) {
  GMat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < 4; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline GMat4 mat_sub(const GMat4& a, const GMat4& b) {
  GMat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[i][j] - b[i][j];
  return c;
}

inline bool mat_is_zero(const GMat4& a) {
  for (auto& row : a)
    for (auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

/// tM J2 + J2 M, zero exactly when M is in sp4(C).
inline GMat4 symplectic_defect(const GMat4& m) {
  GMat4 j{};
  j[0][2] = j[1][3] = GaussianRational(1);
  j[2][0] = j[3][1] = GaussianRational(-1);
  GMat4 mt{};
  for (int i = 0; i < 4; ++i)
    for (int jj = 0; jj < 4; ++jj) mt[i][jj] = m[jj][i];
  GMat4 lhs = mat_mul(mt, j);
  GMat4 rhs = mat_mul(j, m);
  for (int i = 0; i < 4; ++i)
    for (int jj = 0; jj < 4; ++jj) lhs[i][jj] += rhs[i][jj];
  return lhs;
}

/// Degree-1 element: linear combination of basis symbols.
using LinComb = std::vector<std::pair<Sym, GaussianRational>>;

namespace detail {

/// Coordinates of a matrix in the 10-symbol basis; throws if not in span.
inline LinComb coordinates(const GMat4& m) {
  GMatrix sys(16, kNumSyms);
  std::vector<GaussianRational> rhs(16);
  for (int s = 0; s < kNumSyms; ++s) {
    const GMat4& bm = basis_matrix(static_cast<Sym>(s));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) sys.at(i * 4 + j, s) = bm[i][j];
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rhs[i * 4 + j] = m[i][j];
  std::vector<GaussianRational> x = sys.solve(rhs);
  // verify the solve (the basis spans a 10-dim space inside 16-dim coords)
  GMat4 rec{};
  for (int s = 0; s < kNumSyms; ++s) {
    if (x[s].is_zero()) continue;
    const GMat4& bm = basis_matrix(static_cast<Sym>(s));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rec[i][j] += x[s] * bm[i][j];
  }
  if (!mat_is_zero(mat_sub(rec, m)))
    throw std::logic_error("matrix not in the span of the sp4 basis");
  LinComb out;
  for (int s = 0; s < kNumSyms; ++s)
    if (!x[s].is_zero()) out.emplace_back(static_cast<Sym>(s), x[s]);
  return out;
}

}  // namespace detail

/// [x,y] expanded in the basis. Structure constants are computed once from
/// the defining matrices and cached; never hand-entered.
inline const LinComb& bracket(Sym x, Sym y) {
  static const std::array<std::array<LinComb, kNumSyms>, kNumSyms> table = [] {
    std::array<std::array<LinComb, kNumSyms>, kNumSyms> t{};
    for (int i = 0; i < kNumSyms; ++i)
      for (int j = 0; j < kNumSyms; ++j) {
        const GMat4& a = basis_matrix(static_cast<Sym>(i));
        const GMat4& b = basis_matrix(static_cast<Sym>(j));
        t[i][j] = detail::coordinates(mat_sub(mat_mul(a, b), mat_mul(b, a)));
      }
    return t;
  }();
  return table[static_cast<int>(x)][static_cast<int>(y)];
}

}  // namespace sp4forms::lie

#endif
