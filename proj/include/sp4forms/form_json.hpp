#ifndef SP4FORMS_FORM_JSON_HPP
#define SP4FORMS_FORM_JSON_HPP

#include <json.hpp>

#include "nearhol.hpp"

namespace sp4forms::nearhol {

using nlohmann::json;

inline json gaussian_to_json(const GaussianRational& g) {
  return json{{"re", rat_string(g.re)}, {"im", rat_string(g.im)}};
}

inline GaussianRational gaussian_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("coefficient must be {re, im}");
  return GaussianRational(rat_from_string(j.at("re").get<std::string>()),
                          rat_from_string(j.at("im").get<std::string>()));
}

/// Canonical emit: modes and terms in sorted order, rational strings in
/// lowest terms with explicit denominator. parse(emit(F)) == F bit-exactly.
inline json form_to_json(const NearHolForm& f) {
  json modes = json::array();
  for (auto& [q, terms] : f.modes) {
    json jterms = json::array();
    for (auto& [mono, w] : terms) {
      json jw = json::array();
      for (auto& c : w.c) jw.push_back(gaussian_to_json(c));
      jterms.push_back(json{{"abc", json::array({mono[0], mono[1], mono[2]})}, {"w", jw}});
    }
    modes.push_back(json{
        {"Q", json::array({rat_string(q.a), rat_string(q.b), rat_string(q.c)})},
        {"terms", jterms}});
  }
  return json{{"ell", f.ell}, {"m", f.m}, {"level", f.level}, {"modes", modes}};
}

inline NearHolForm form_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("form must be a JSON object");
  for (const char* key : {"ell", "m", "level", "modes"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("form missing key ") + key);
  NearHolForm f;
  f.ell = j.at("ell").get<long>();
  f.m = j.at("m").get<int>();
  f.level = j.at("level").get<long>();
  for (auto& jmode : j.at("modes")) {
    auto& jq = jmode.at("Q");
    if (!jq.is_array() || jq.size() != 3) throw std::invalid_argument("Q must be [a,b,c]");
    FourierIndex q{rat_from_string(jq[0].get<std::string>()),
                   rat_from_string(jq[1].get<std::string>()),
                   rat_from_string(jq[2].get<std::string>())};
    ModeTerms terms;
    for (auto& jt : jmode.at("terms")) {
      if (jt.contains("two_pi_power"))
        throw std::invalid_argument(
            "refusing a display-only unnormalized form; inputs use normalized variables");
      auto& jabc = jt.at("abc");
      if (!jabc.is_array() || jabc.size() != 3)
        throw std::invalid_argument("abc must be [alpha,beta,gamma]");
      NHMono mono{jabc[0].get<int>(), jabc[1].get<int>(), jabc[2].get<int>()};
      auto& jw = jt.at("w");
      if (!jw.is_array() || static_cast<int>(jw.size()) != f.m + 1)
        throw std::invalid_argument("w must have length m+1");
      WmExact w(f.m);
      for (int i = 0; i <= f.m; ++i) w[i] = gaussian_from_json(jw[i]);
      if (terms.count(mono)) throw std::invalid_argument("duplicate monomial in mode");
      if (!w.is_zero()) terms[mono] = std::move(w);
    }
    if (f.modes.count(q)) throw std::invalid_argument("duplicate Fourier index");
    if (!terms.empty()) f.modes[q] = std::move(terms);
  }
  f.validate();
  return f;
}

/// Display variant in the unnormalized variables y/Delta, v/Delta,
/// y'/Delta: each term picks up a factor (2 pi)^{-(alpha+beta+gamma)},
/// recorded symbolically in "two_pi_power". Display only; the parser does
/// not accept this layout.
inline json form_to_json_unnormalized(const NearHolForm& f) {
  json j = form_to_json(f);
  for (auto& jmode : j.at("modes"))
    for (auto& jt : jmode.at("terms")) {
      auto& abc = jt.at("abc");
      jt["two_pi_power"] =
          -(abc[0].get<int>() + abc[1].get<int>() + abc[2].get<int>());
    }
  return j;
}

inline std::string form_to_string(const NearHolForm& f) { return form_to_json(f).dump(1); }

inline NearHolForm form_from_string(const std::string& text) {
  return form_from_json(json::parse(text));
}

}  // namespace sp4forms::nearhol

#endif
