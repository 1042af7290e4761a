#pragma once

// Serialization of library values for the command line. Coefficients are
// always exact strings; term lists are JSON objects, so keys come out sorted.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nck/birkhoff.hpp"
#include "nck/ehrhart.hpp"
#include "nck/fqsym.hpp"
#include "nck/hopf.hpp"
#include "nck/nsym.hpp"

namespace nck::cli {

using json = nlohmann::json;

inline std::string coeff_str(long c) { return std::to_string(c); }
inline std::string coeff_str(const Rational& c) { return nck::to_string(c); }
inline std::string coeff_str(const MultiPoly& c) { return c.str(); }
inline std::string coeff_str(const RationalFn& c) { return c.str(); }
inline std::string coeff_str(const LaurentPoly& c) { return c.str(); }

inline std::string key_str(const Forest& f) { return f.str(); }
inline std::string key_str(const Composition& i) { return i.str(); }
inline std::string key_str(const std::vector<int>& w) { return format_sequence(w); }
// Tensor factors joined by '|'.
std::string key_str(const ForestTuple& t);
std::string key_str(const ForestPair& p);

template <class K, class R>
json terms_json(const LinComb<K, R>& c) {
  json out = json::object();
  for (const auto& [k, v] : c.terms()) out[key_str(k)] = coeff_str(v);
  return out;
}

template <class R>
json nsym_json(const NsymElem<R>& e) {
  return {{"basis", to_string(e.basis)}, {"terms", terms_json(e.terms)}};
}

template <class R>
json qsym_json(const QsymElem<R>& e) {
  return {{"basis", to_string(e.basis)}, {"terms", terms_json(e.terms)}};
}

template <class R>
json x_json(const XElem<R>& e) {
  return {{"basis", "X"}, {"terms", terms_json(e)}};
}

json codes_json(const std::vector<Forest>& fs);
json words_json(const std::vector<std::vector<int>>& ws);

// Indented plain-text rendering of a result payload.
void render_text(const json& j, std::ostream& out);

}  // namespace nck::cli
