#include "render.hpp"

#include <ostream>

namespace nck::cli {

std::string key_str(const ForestTuple& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "|" : "") + t[i].str();
  return s;
}

std::string key_str(const ForestPair& p) { return p.first.str() + "|" + p.second.str(); }

json codes_json(const std::vector<Forest>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.str());
  return out;
}

json words_json(const std::vector<std::vector<int>>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(format_sequence(w));
  return out;
}

namespace {

std::string scalar(const json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    return s.empty() ? "\"\"" : s;
  }
  return j.dump();
}

bool flat(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& v : j)
    if (v.is_structured()) return false;
  return true;
}

void render(const json& j, std::ostream& out, int indent) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      std::string key = k.empty() ? "\"\"" : k;
      if (v.is_object() && v.empty()) {
        out << pad << key << ": {}\n";
      } else if (v.is_array() && flat(v)) {
        out << pad << key << ": [";
        for (size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else if (v.is_structured()) {
        out << pad << key << ":\n";
        render(v, out, indent + 2);
      } else {
        out << pad << key << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        render(v, out, indent + 2);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

void render_text(const json& j, std::ostream& out) { render(j, out, 0); }

}  // namespace nck::cli
