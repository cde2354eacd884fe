// Copyright 2026 The bilogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bilogic/model_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "json_values.hpp"

namespace bilogic {

using json = nlohmann::json;

std::string_view logic_name(Logic logic) noexcept {
  return logic == Logic::FourValued ? "bd4" : "lbd";
}

Logic parse_logic_name(std::string_view name) {
  if (name == "bd4") return Logic::FourValued;
  if (name == "lbd") return Logic::Fuzzy;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected bd4 or lbd)");
}

namespace {

[[noreturn]] void fail(const std::string& message) { throw ModelError("model file: " + message); }

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + " is missing \"" + key + "\"");
  return *it;
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where + " must be a string");
  return j.get<std::string>();
}

TruthValue read_value(const json& j, Logic logic, const std::string& where) {
  TruthValue v;
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.size() != 1 || std::string_view("TBNF").find(s[0]) == std::string_view::npos) {
      fail(where + ": unknown value \"" + s + "\" (expected T, B, N, F or [pos, neg])");
    }
    v = parse_truth_value(s);
  } else if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    try {
      v = TruthValue::fuzzy(j[0].get<double>(), j[1].get<double>());
    } catch (const CarrierError& e) {
      fail(where + ": " + e.what());
    }
    // corner arrays are corners in either mode
    if (v.is_corner()) v = v.to_four_valued();
  } else {
    fail(where + ": a value must be a glyph string or a [pos, neg] array");
  }
  if (logic == Logic::Fuzzy) return v.to_fuzzy();
  return v;  // non-corner values in bd4 are reported by validation
}

std::vector<std::string> split_tuple(const std::string& key, int arity) {
  std::vector<std::string> out;
  if (arity == 0) {
    if (!key.empty()) out.push_back(key);  // reported as a bad tuple
    return out;
  }
  std::size_t start = 0;
  while (true) {
    auto comma = key.find(',', start);
    out.push_back(key.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Model parse_model_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("the document must be a JSON object");

  Model m;
  try {
    m.logic = parse_logic_name(require_string(require(doc, "mode", "the document"), "\"mode\""));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  const json& domain = require(doc, "domain", "the document");
  if (!domain.is_array()) fail("\"domain\" must be an array of element names");
  for (const auto& e : domain) {
    std::string name = require_string(e, "a domain element");
    if (name.empty() || name.find(',') != std::string::npos) {
      fail("domain element \"" + name + "\" must be non-empty and contain no comma");
    }
    m.domain.push_back(std::move(name));
  }

  if (auto it = doc.find("constants"); it != doc.end()) {
    if (!it->is_object()) fail("\"constants\" must be an object");
    for (const auto& [name, element] : it->items()) {
      m.constants[name] = require_string(element, "constant \"" + name + "\"");
    }
  }

  if (auto it = doc.find("predicates"); it != doc.end()) {
    if (!it->is_object()) fail("\"predicates\" must be an object");
    for (const auto& [name, spec] : it->items()) {
      std::string where = "predicate \"" + name + "\"";
      if (!spec.is_object()) fail(where + " must be an object");
      PredicateInterpretation p;
      const json& arity = require(spec, "arity", where);
      if (!arity.is_number_integer() || arity.get<long long>() < 0 || arity.get<long long>() > 16) {
        fail(where + ": \"arity\" must be an integer between 0 and 16");
      }
      p.arity = arity.get<int>();
      p.default_value = read_value(require(spec, "default", where), m.logic, where + " default");
      if (auto map = spec.find("map"); map != spec.end()) {
        if (!map->is_object()) fail(where + ": \"map\" must be an object");
        for (const auto& [key, value] : map->items()) {
          auto tuple = split_tuple(key, p.arity);
          if (!p.values.emplace(tuple, read_value(value, m.logic, where + " at \"" + key + "\""))
                   .second) {
            fail(where + ": tuple \"" + key + "\" is listed twice");
          }
        }
      }
      m.predicates.emplace(name, std::move(p));
    }
  }
  return m;
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

std::string model_to_json(const Model& model, int indent) {
  return detail::model_json(model).dump(indent);
}

std::string value_to_json(const TruthValue& value) { return detail::value_json(value).dump(); }

namespace detail {

ordered_json value_json(const TruthValue& v) {
  if (v.is_corner()) return to_string(v.to_four_valued());
  return ordered_json::array({v.pos(), v.neg()});
}

ordered_json model_json(const Model& m) {
  ordered_json out;
  out["mode"] = logic_name(m.logic);
  out["domain"] = m.domain;
  ordered_json constants = ordered_json::object();
  for (const auto& [name, element] : m.constants) constants[name] = element;
  out["constants"] = std::move(constants);
  ordered_json preds = ordered_json::object();
  for (const auto& [name, p] : m.predicates) {
    ordered_json entry;
    entry["arity"] = p.arity;
    ordered_json map = ordered_json::object();
    for (const auto& [tuple, value] : p.values) {
      std::string key;
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) key += ',';
        key += tuple[i];
      }
      map[key] = value_json(value);
    }
    entry["map"] = std::move(map);
    entry["default"] = value_json(p.default_value);
    preds[name] = std::move(entry);
  }
  out["predicates"] = std::move(preds);
  return out;
}

ordered_json environment_json(const Environment& env) {
  ordered_json out = ordered_json::object();
  for (const auto& [var, element] : env) out[var] = element;
  return out;
}

}  // namespace detail

}  // namespace bilogic
