#pragma once

// Report documents for the command-line tool: a version line, the command
// echo, a digest of the inputs and a results tree, rendered as text or JSON.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace arithtrace::cli {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kVersion = "arithtrace 0.1.0";

/// 64-bit FNV-1a over the concatenated input strings, each followed by a NUL.
inline std::string inputs_digest(const std::vector<std::string>& inputs) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const auto& s : inputs) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

namespace detail {

inline std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

inline bool is_scalar(const ojson& v) { return !v.is_object() && !v.is_array(); }

inline void render(std::ostringstream& os, const ojson& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (is_scalar(x)) {
        os << pad << k << ": " << scalar_text(x) << "\n";
      } else if (x.empty()) {
        os << pad << k << ": " << (x.is_array() ? "[]" : "{}") << "\n";
      } else if (x.is_array() && std::all_of(x.begin(), x.end(), is_scalar)) {
        os << pad << k << ": [";
        bool first = true;
        for (const auto& e : x) {
          os << (first ? "" : ", ") << scalar_text(e);
          first = false;
        }
        os << "]\n";
      } else {
        os << pad << k << ":\n";
        render(os, x, indent + 2);
      }
    }
    return;
  }
  if (v.is_array()) {
    for (const auto& x : v) {
      if (is_scalar(x)) {
        os << pad << "- " << scalar_text(x) << "\n";
      } else {
        os << pad << "-\n";
        render(os, x, indent + 2);
      }
    }
    return;
  }
  os << pad << scalar_text(v) << "\n";
}

}  // namespace detail

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  ojson results = ojson::object();

  std::string render(bool as_json) const {
    ojson doc;
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["inputs_digest"] = inputs_digest(inputs);
    doc["results"] = results;
    if (as_json) return doc.dump(2) + "\n";
    std::ostringstream os;
    detail::render(os, doc, 0);
    return os.str();
  }
};

}  // namespace arithtrace::cli
