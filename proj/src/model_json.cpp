/* Copyright 2026 The cjhol Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <fstream>
#include <sstream>

#include "cjhol/formula.hpp"
#include "cjhol/model.hpp"
#include "json.hpp"

namespace cjhol {

namespace {

using nlohmann::json;

Prop read_prop(const json& j, const std::string& path, int n) {
  if (!j.is_array()) throw ModelError(path + ": expected an array of world indices");
  Prop p;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& w = j[k];
    const std::string here = path + "/" + std::to_string(k);
    if (!w.is_number_integer()) throw ModelError(here + ": expected a world index");
    const auto idx = w.get<long long>();
    if (idx < 0 || idx >= n)
      throw ModelError(here + ": world " + std::to_string(idx) + " out of range 0.." + std::to_string(n - 1));
    p = p | Prop::world(static_cast<int>(idx));
  }
  return p;
}

std::vector<Prop> read_prop_list(const json& j, const std::string& path, int n) {
  if (!j.is_array()) throw ModelError(path + ": expected an array");
  std::vector<Prop> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read_prop(j[k], path + "/" + std::to_string(k), n));
  return out;
}

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ModelError(path + ": missing field \"" + key + "\"");
  return *it;
}

json write_prop(Prop p, int n) {
  json out = json::array();
  for (int w = 0; w < n; ++w)
    if (p.contains(w)) out.push_back(w);
  return out;
}

}  // namespace

Loaded load(std::string_view text, bool allow_invalid) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("/: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("/: expected a JSON object");
  const json& worlds = field(doc, "worlds", "");
  if (!worlds.is_number_integer()) throw ModelError("/worlds: expected an integer");
  const auto n = worlds.get<long long>();
  if (n < 1 || n > kMaxWorlds)
    throw ModelError("/worlds: " + std::to_string(n) + " outside 1.." + std::to_string(kMaxWorlds));

  CJModel m;
  m.n = static_cast<int>(n);
  m.av = read_prop_list(field(doc, "av", ""), "/av", m.n);
  m.pv = read_prop_list(field(doc, "pv", ""), "/pv", m.n);
  if (m.av.size() != static_cast<std::size_t>(n)) throw ModelError("/av: expected " + std::to_string(n) + " entries");
  if (m.pv.size() != static_cast<std::size_t>(n)) throw ModelError("/pv: expected " + std::to_string(n) + " entries");

  RawOb raw;
  if (auto it = doc.find("ob"); it != doc.end()) {
    if (!it->is_array()) throw ModelError("/ob: expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string path = "/ob/" + std::to_string(k);
      const json& entry = (*it)[k];
      if (!entry.is_object()) throw ModelError(path + ": expected an object");
      const Prop context = read_prop(field(entry, "context", path), path + "/context", m.n);
      auto members = read_prop_list(field(entry, "members", path), path + "/members", m.n);
      auto& slot = raw[context];
      slot.insert(slot.end(), members.begin(), members.end());
    }
  }
  Canonicalized canon = canonicalize(raw, m.n);
  m.ob = std::move(canon.ob);

  if (auto it = doc.find("val"); it != doc.end()) {
    if (!it->is_object()) throw ModelError("/val: expected an object");
    for (const auto& [name, worlds_of] : it->items()) {
      if (!is_identifier(name)) throw ModelError("/val/" + name + ": not an atom name");
      m.val[name] = read_prop(worlds_of, "/val/" + name, m.n);
    }
  }

  if (!allow_invalid) {
    ValidationReport report = validate(m);
    if (!report.ok()) throw ValidationError(std::move(report));
  }
  return Loaded{std::move(m), std::move(canon.warnings)};
}

Loaded load_file(const std::string& path, bool allow_invalid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str(), allow_invalid);
}

std::string save(const CJModel& m) {
  json doc = json::object();
  doc["worlds"] = m.n;
  json av = json::array(), pv = json::array();
  for (int s = 0; s < m.n; ++s) {
    av.push_back(write_prop(m.av[s], m.n));
    pv.push_back(write_prop(m.pv[s], m.n));
  }
  doc["av"] = std::move(av);
  doc["pv"] = std::move(pv);
  json ob = json::array();
  for (const auto& [context, traces] : raw_ob(m)) {
    json members = json::array();
    for (Prop t : traces) members.push_back(write_prop(t, m.n));
    ob.push_back(json{{"context", write_prop(context, m.n)}, {"members", std::move(members)}});
  }
  doc["ob"] = std::move(ob);
  json val = json::object();
  for (const auto& [name, p] : m.val) val[name] = write_prop(p, m.n);
  doc["val"] = std::move(val);
  return doc.dump();
}

}  // namespace cjhol
