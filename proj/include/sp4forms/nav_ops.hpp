#ifndef SP4FORMS_NAV_OPS_HPP
#define SP4FORMS_NAV_OPS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace sp4forms {

/// The eight navigation / differential operator symbols. Words over these
/// are applied right-to-left (composition order).
enum class NavOp : int { Xp = 0, U, Ep, Dp, P0m, L, Em, Dm };

inline const char* op_token(NavOp op) {
  static const char* tok[8] = {"Xp", "U", "Ep", "Dp", "P0m", "L", "Em", "Dm"};
  return tok[static_cast<int>(op)];
}

inline NavOp op_from_token(const std::string& s) {
  for (int i = 0; i < 8; ++i)
    if (s == op_token(static_cast<NavOp>(i))) return static_cast<NavOp>(i);
  throw std::invalid_argument("unknown operator token: " + s);
}

/// Per-symbol shifts of (ell, m, p) from the weight/degree table.
struct OpShift {
  int dl, dm, dp;
};

inline OpShift op_shift(NavOp op) {
  switch (op) {
    case NavOp::Xp: return {0, 2, 1};
    case NavOp::U: return {2, -2, 1};
    case NavOp::Ep: return {1, 0, 1};
    case NavOp::Dp: return {2, 0, 2};
    case NavOp::P0m: return {-2, 2, -1};
    case NavOp::L: return {0, -2, -1};
    case NavOp::Em: return {-1, 0, -1};
    case NavOp::Dm: return {-2, 0, -2};
  }
  throw std::logic_error("bad operator");
}

inline bool op_is_raising(NavOp op) {
  return op == NavOp::Xp || op == NavOp::U || op == NavOp::Ep || op == NavOp::Dp;
}

using OperatorWord = std::vector<NavOp>;

/// "Xp,Dp,U" -> word; empty string -> identity word.
inline OperatorWord word_from_string(const std::string& s) {
  OperatorWord w;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) w.push_back(op_from_token(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) w.push_back(op_from_token(cur));
  return w;
}

inline std::string word_to_string(const OperatorWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += op_token(w[i]);
  }
  return s;
}

}  // namespace sp4forms

#endif
