// SPDX-License-Identifier: MIT
// JSON reports and JSON interchange for arrangements.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dpl/arrangement.hpp"
#include "dpl/error.hpp"
#include "dpl/flag_complex.hpp"

namespace dpl {

using Json = nlohmann::ordered_json;

inline Json face_vector_json(const FaceVector& fv) {
  Json j = Json::object();
  for (const auto& [size, count] : fv) j[std::to_string(size)] = count;
  return j;
}

inline Json cycles_json(const Cycles& c) {
  Json j = Json::object();
  for (const auto& [i, w] : c) j[std::to_string(i)] = w;
  return j;
}

inline Json to_json(const Arrangement& a) {
  Json j;
  if (!a.name.empty()) j["name"] = a.name;
  j["indices"] = a.indices();
  j["disk_cycles"] = cycles_json(a.disk_cycles());
  j["crosscap_cycles"] = cycles_json(a.crosscap_cycles());
  j["genus"] = a.genus();
  j["f_vector"] = face_vector_json(a.face_vector());
  j["simple"] = is_simple(a);
  j["thin"] = is_thin(a);
  return j;
}

inline Cycles cycles_from_json(const Json& j) {
  Cycles c;
  for (const auto& [k, v] : j.items()) c[std::stoi(k)] = v.get<std::vector<int>>();
  return c;
}

// Accepts the object written by to_json; crosscap cycles may be omitted for
// simple arrangements.
inline Arrangement arrangement_from_json(const Json& j) {
  try {
    ArrangementText t;
    t.disk = cycles_from_json(j.at("disk_cycles"));
    if (j.contains("crosscap_cycles")) t.crosscap = cycles_from_json(j.at("crosscap_cycles"));
    if (j.contains("indices")) t.indices = j.at("indices").get<std::vector<int>>();
    else
      for (const auto& kv : t.disk) t.indices.push_back(kv.first);
    Arrangement a = arrangement_from_text(t);
    if (j.contains("name")) a.name = j.at("name").get<std::string>();
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad arrangement JSON: ") + e.what());
  }
}

inline Json error_json(const Error& e) {
  Json j;
  j["ok"] = false;
  j["error"] = to_string(e.code());
  j["message"] = e.what();
  return j;
}

}  // namespace dpl
