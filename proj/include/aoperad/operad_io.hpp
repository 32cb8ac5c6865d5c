#pragma once

// Operad definition files (JSON).
//
//   {
//     "name": "comm",                       optional, defaults to "operad"
//     "group": "symmetric",                 "trivial" or "symmetric"
//     "max_arity": 4,                       optional, defaults to 4
//     "levels": {"0": ["*"], "1": ["*"], ...},
//     "action": {"2": [["*"]], ...},        optional; per arity n >= 2, one
//                                           list per generator s_1..s_{n-1}
//                                           giving the image of each label
//     "unit": "*",
//     "compose": [{"n": 2, "ks": [1, 1], "args": ["*", "*", "*"], "result": "*"}, ...]
//   }
//
// Every arity 0..max_arity needs a level.  A missing action entry is the
// trivial action.  "args" lists the outer label, then one label per input.
// Every composite of arity <= max_arity needs exactly one compose record.

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "aoperad/action_operad.hpp"
#include "aoperad/error.hpp"
#include "aoperad/g_operad.hpp"

namespace aoperad {

using LoadedOperad = std::variant<FiniteGOperad<TrivialElement>, FiniteGOperad<Permutation>>;

namespace detail {

using json = nlohmann::json;

inline const json& require(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

inline std::string require_string(const json& v, const std::string& where) {
  if (!v.is_string()) {
    throw ParseError(where + ": expected a string");
  }
  return v.get<std::string>();
}

inline std::size_t require_count(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(where + ": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline std::size_t arity_key(const std::string& key, const std::string& where) {
  std::size_t used = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (key.empty() || used != key.size() || key.front() == '-' || key.front() == '+') {
    throw ParseError(where + ": key '" + key + "' is not an arity");
  }
  return n;
}

struct Tables {
  std::size_t max_arity = 0;
  std::vector<std::vector<std::string>> levels;
  std::vector<std::vector<std::vector<std::size_t>>> generators;
  std::size_t unit = 0;
  std::map<std::vector<std::size_t>, std::size_t> compose;
};

inline std::size_t label_index(const std::vector<std::vector<std::string>>& levels, std::size_t n,
                               const json& v, const std::string& where) {
  const auto label = require_string(v, where);
  const auto& level = levels[n];
  const auto it = std::find(level.begin(), level.end(), label);
  if (it == level.end()) {
    throw ParseError(where + ": label '" + label + "' is not in level " + std::to_string(n));
  }
  return static_cast<std::size_t>(it - level.begin());
}

// Key of a composition record: outer index, then (arity, index) per input.
inline std::vector<std::size_t> compose_key(Op p, std::span<const Op> qs) {
  std::vector<std::size_t> key{p.arity, p.index};
  for (const auto& q : qs) {
    key.push_back(q.arity);
    key.push_back(q.index);
  }
  return key;
}

inline Tables read_tables(const json& doc, bool symmetric) {
  Tables t;
  t.max_arity = doc.contains("max_arity") ? require_count(doc.at("max_arity"), "max_arity") : 4;
  if (t.max_arity < 1) {
    throw ParseError("max_arity: must be at least 1 to hold the unit");
  }

  const auto& levels = require(doc, "levels", "document");
  if (!levels.is_object()) {
    throw ParseError("levels: expected an object keyed by arity");
  }
  t.levels.resize(t.max_arity + 1);
  std::vector<bool> seen(t.max_arity + 1, false);
  for (const auto& [key, value] : levels.items()) {
    const std::string where = "levels." + key;
    const auto n = arity_key(key, where);
    if (n > t.max_arity) {
      throw ParseError(where + ": arity exceeds max_arity " + std::to_string(t.max_arity));
    }
    if (!value.is_array()) {
      throw ParseError(where + ": expected a list of labels");
    }
    seen[n] = true;
    for (std::size_t i = 0; i < value.size(); ++i) {
      auto label = require_string(value[i], where + "[" + std::to_string(i) + "]");
      if (std::find(t.levels[n].begin(), t.levels[n].end(), label) != t.levels[n].end()) {
        throw ParseError(where + "[" + std::to_string(i) + "]: duplicate label '" + label + "'");
      }
      t.levels[n].push_back(std::move(label));
    }
  }
  for (std::size_t n = 0; n <= t.max_arity; ++n) {
    if (!seen[n]) {
      throw ParseError("levels: missing arity " + std::to_string(n));
    }
  }

  t.generators.resize(t.max_arity + 1);
  if (doc.contains("action")) {
    const auto& action = doc.at("action");
    if (!action.is_object()) {
      throw ParseError("action: expected an object keyed by arity");
    }
    if (!symmetric && !action.empty()) {
      throw ParseError("action: group 'trivial' acts trivially; remove the action tables");
    }
    for (const auto& [key, value] : action.items()) {
      const std::string where = "action." + key;
      const auto n = arity_key(key, where);
      if (n > t.max_arity) {
        throw ParseError(where + ": arity exceeds max_arity " + std::to_string(t.max_arity));
      }
      const std::size_t generators = n == 0 ? 0 : n - 1;
      if (!value.is_array() || value.size() != generators) {
        throw ParseError(where + ": expected " + std::to_string(generators) + " generator images");
      }
      for (std::size_t i = 0; i < generators; ++i) {
        const std::string gwhere = where + "[" + std::to_string(i) + "]";
        const auto& images = value[i];
        if (!images.is_array() || images.size() != t.levels[n].size()) {
          throw ParseError(gwhere + ": expected " + std::to_string(t.levels[n].size()) + " label images");
        }
        std::vector<std::size_t> image;
        for (std::size_t x = 0; x < images.size(); ++x) {
          image.push_back(label_index(t.levels, n, images[x], gwhere + "[" + std::to_string(x) + "]"));
        }
        t.generators[n].push_back(std::move(image));
      }
      if (const auto bad = coxeter_violation(t.levels[n].size(), t.generators[n]); !bad.empty()) {
        throw ParseError(where + ": not an action of Sigma_" + std::to_string(n) + ": " + bad);
      }
    }
  }

  t.unit = label_index(t.levels, 1, require(doc, "unit", "document"), "unit");

  const auto& compose = require(doc, "compose", "document");
  if (!compose.is_array()) {
    throw ParseError("compose: expected a list of records");
  }
  for (std::size_t r = 0; r < compose.size(); ++r) {
    const std::string where = "compose[" + std::to_string(r) + "]";
    const auto& rec = compose[r];
    const auto n = require_count(require(rec, "n", where), where + ".n");
    const auto& ks_json = require(rec, "ks", where);
    if (!ks_json.is_array() || ks_json.size() != n) {
      throw ParseError(where + ".ks: expected " + std::to_string(n) + " arities");
    }
    std::vector<std::size_t> ks;
    for (std::size_t i = 0; i < n; ++i) {
      ks.push_back(require_count(ks_json[i], where + ".ks[" + std::to_string(i) + "]"));
    }
    const std::size_t total = std::accumulate(ks.begin(), ks.end(), std::size_t{0});
    if (n > t.max_arity || total > t.max_arity) {
      throw ParseError(where + ": composite arity exceeds max_arity " + std::to_string(t.max_arity));
    }
    const auto& args = require(rec, "args", where);
    if (!args.is_array() || args.size() != n + 1) {
      throw ParseError(where + ".args: expected " + std::to_string(n + 1) + " labels (outer, then inputs)");
    }
    const Op p{n, label_index(t.levels, n, args[0], where + ".args[0]")};
    std::vector<Op> qs;
    for (std::size_t i = 0; i < n; ++i) {
      qs.push_back({ks[i], label_index(t.levels, ks[i], args[i + 1], where + ".args[" + std::to_string(i + 1) + "]")});
    }
    const auto result = label_index(t.levels, total, require(rec, "result", where), where + ".result");
    if (!t.compose.emplace(compose_key(p, qs), result).second) {
      throw ParseError(where + ": duplicate record");
    }
  }
  // Every composite within the bound must be present.
  std::mt19937_64 unused(0);
  for (std::size_t n = 0; n <= t.max_arity; ++n) {
    for (const auto& ks : bounded_signatures(n, t.max_arity, t.max_arity)) {
      std::vector<std::size_t> sizes{t.levels[n].size()};
      for (auto k : ks) {
        sizes.push_back(t.levels[k].size());
      }
      for_each_choice(sizes, std::numeric_limits<std::size_t>::max() / 2, unused,
                      [&](const std::vector<std::size_t>& ix) {
                        std::vector<Op> qs;
                        for (std::size_t i = 0; i < n; ++i) {
                          qs.push_back({ks[i], ix[i + 1]});
                        }
                        const Op p{n, ix[0]};
                        if (!t.compose.contains(compose_key(p, qs))) {
                          std::string args = t.levels[n][ix[0]];
                          for (const auto& q : qs) {
                            args += ", " + t.levels[q.arity][q.index];
                          }
                          throw ParseError("compose: missing record for n=" + std::to_string(n) + " args=[" + args +
                                           "]");
                        }
                      });
    }
  }
  return t;
}

template <class E>
void install_tables(FiniteGOperad<E>& P, Tables&& t) {
  P.unit = t.unit;
  auto table = std::make_shared<std::map<std::vector<std::size_t>, std::size_t>>(std::move(t.compose));
  P.compose_fn = [table](Op p, std::span<const Op> qs) { return table->at(compose_key(p, qs)); };
}

}  // namespace detail

// Parses and validates an operad document.  Errors name the offending field,
// e.g. "compose[3].args[1]: label 'x' is not in level 2"; JSON syntax errors
// carry line and column.
inline LoadedOperad load_operad(std::string_view text) {
  detail::json doc;
  try {
    doc = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("document: expected a JSON object");
  }
  const auto group = detail::require_string(detail::require(doc, "group", "document"), "group");
  const std::string name =
      doc.contains("name") ? detail::require_string(doc.at("name"), "name") : std::string("operad");
  try {
    if (group == "trivial") {
      auto t = detail::read_tables(doc, false);
      FiniteGOperad<TrivialElement> P;
      P.collection = plain_collection(name, t.levels);
      detail::install_tables(P, std::move(t));
      return P;
    }
    if (group == "symmetric") {
      auto t = detail::read_tables(doc, true);
      FiniteGOperad<Permutation> P;
      P.collection = collection_from_generators(name, t.levels, t.generators);
      detail::install_tables(P, std::move(t));
      return P;
    }
  } catch (const detail::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  throw ParseError("group: '" + group + "' is not supported (use \"trivial\" or \"symmetric\")");
}

inline LoadedOperad load_operad_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string() + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return load_operad(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace aoperad
