// SPDX-License-Identifier: MIT
// Named fixtures shipped as arrangement files.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dpl/arrangement.hpp"
#include "dpl/error.hpp"

#ifndef DPL_DATA_DIR
#define DPL_DATA_DIR "."
#endif

namespace dpl {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Root directory holding `catalog/` and `fixtures/`; the environment
// variable DPL_DATA_DIR overrides the build-time default.
inline std::filesystem::path data_dir() {
  if (const char* env = std::getenv("DPL_DATA_DIR"); env && *env) return env;
  return DPL_DATA_DIR;
}

struct Fixture {
  std::string name;
  std::string note;
  std::filesystem::path path;
  Arrangement arrangement;
  std::map<std::string, std::string> meta;

  std::optional<std::string> get(const std::string& key) const {
    auto it = meta.find(key);
    if (it == meta.end()) return std::nullopt;
    return it->second;
  }

  std::optional<int> get_int(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return std::stoi(*v);
  }

  // `2:3 4:15` style face vector.
  std::optional<FaceVector> expected_face_vector() const {
    auto v = get("f_vector");
    if (!v) return std::nullopt;
    FaceVector fv;
    std::istringstream is(*v);
    std::string tok;
    while (is >> tok) {
      const auto c = tok.find(':');
      if (c == std::string::npos) throw Error(ErrorCode::Parse, "bad face vector entry " + tok);
      fv[std::stoi(tok.substr(0, c))] = std::stoi(tok.substr(c + 1));
    }
    return fv;
  }

  std::vector<std::string> lines(const std::string& key) const {
    std::vector<std::string> out;
    auto v = get(key);
    if (!v) return out;
    std::istringstream is(*v);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
  }
};

inline Fixture load_fixture(const std::filesystem::path& p) {
  const std::string text = read_file(p);
  const ArrangementText t = parse_arrangement_text(text);
  Fixture f;
  f.name = p.stem().string();
  f.path = p;
  f.meta = t.meta;
  std::istringstream is(text);
  std::string first;
  std::getline(is, first);
  if (first.rfind("# ", 0) == 0) f.note = first.substr(2);
  f.arrangement = arrangement_from_text(t);
  f.arrangement.name = f.name;
  return f;
}

class Catalog {
 public:
  static Catalog load(const std::filesystem::path& dir = data_dir() / "catalog") {
    Catalog c;
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::UnknownFixture, "no catalog at " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.path().extension() == ".dpl") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& p : files) c.fixtures_.push_back(load_fixture(p));
    return c;
  }

  const Fixture& get(const std::string& name) const {
    for (const auto& f : fixtures_)
      if (f.name == name) return f;
    throw Error(ErrorCode::UnknownFixture, name);
  }

  const std::vector<Fixture>& all() const { return fixtures_; }

  // The thirteen simple three-curve classes, in catalog name order.
  std::vector<const Fixture*> simple_classes() const {
    std::vector<const Fixture*> out;
    for (const auto& f : fixtures_)
      if (f.name.size() >= 3 && f.name[0] == 'C' && std::isdigit(static_cast<unsigned char>(f.name[1])))
        out.push_back(&f);
    return out;
  }

 private:
  std::vector<Fixture> fixtures_;
};

}  // namespace dpl
