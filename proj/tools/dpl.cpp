// SPDX-License-Identifier: MIT
// Command-line front end: validation, isomorphism, chirotopes, extension
// checks, reconstruction, enumeration, the fixture catalog and DOT output.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dpl/arrangement.hpp"
#include "dpl/catalog.hpp"
#include "dpl/chirotope.hpp"
#include "dpl/error.hpp"
#include "dpl/flag_complex.hpp"
#include "dpl/json_io.hpp"
#include "dpl/mutation.hpp"

namespace fs = std::filesystem;
using dpl::Json;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A path to a `.dpl` or `.json` file, or the name of a catalog fixture.
dpl::Arrangement load_arrangement(const std::string& arg) {
  const fs::path p(arg);
  if (!fs::exists(p)) {
    try {
      return dpl::Catalog::load().get(arg).arrangement;
    } catch (const dpl::Error&) {
      throw UsageError("no such file or fixture: " + arg);
    }
  }
  const std::string text = dpl::read_file(p);
  dpl::Arrangement a;
  if (p.extension() == ".json") {
    try {
      a = dpl::arrangement_from_json(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw dpl::Error(dpl::ErrorCode::Parse, e.what());
    }
  } else {
    a = dpl::parse_arrangement(text);
  }
  if (a.name.empty()) a.name = p.stem().string();
  return a;
}

dpl::ClassNamer class_namer() {
  dpl::ClassNamer namer;
  const auto cat = dpl::Catalog::load();
  for (const auto* f : cat.simple_classes()) namer.add(f->name, f->arrangement);
  return namer;
}

dpl::Chirotope load_chirotope(const std::string& arg, const dpl::ClassNamer& namer) {
  if (!fs::exists(arg)) throw UsageError("no such file: " + arg);
  return dpl::parse_chirotope(dpl::read_file(arg), namer);
}

void print(const Json& j, bool human) { std::cout << (human ? j.dump(2) : j.dump()) << "\n"; }

Json diagnosis_json(const dpl::Diagnosis& d) {
  Json j;
  j["accepted"] = d.ok;
  if (!d.ok) {
    j["error"] = dpl::to_string(d.code);
    j["witness"] = d.witness;
    if (d.carrier) j["carrier"] = d.carrier;
    if (!d.carriers.empty()) j["carriers"] = d.carriers;
    if (d.flavor) j["cycle"] = std::string(1, d.flavor);
    j["message"] = d.message;
  }
  return j;
}

dpl::KeyOptions iso_options(bool indexed, bool oriented) {
  dpl::KeyOptions o;
  o.indexed = indexed;
  o.oriented = oriented;
  return o;
}

std::size_t env_state_limit() {
  if (const char* v = std::getenv("DPL_STATE_LIMIT"); v && *v) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("DPL_STATE_LIMIT is not a number: ") + v);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arrangements of double pseudolines"};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false;
  app.add_flag("--human", human, "Indented JSON and plain-text tables");

  // validate
  auto* validate = app.add_subcommand("validate", "Validate an arrangement file and report its invariants");
  std::string validate_file;
  validate->add_option("file", validate_file, "Arrangement file or fixture name")->required();

  // iso
  auto* iso = app.add_subcommand("iso", "Decide whether two arrangements are isomorphic");
  std::string iso_a, iso_b;
  bool iso_indexed = false, iso_oriented = false, iso_marked = false;
  std::optional<int> face_a, face_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();
  iso->add_flag("--indexed", iso_indexed, "Respect curve indices");
  iso->add_flag("--oriented", iso_oriented, "Respect curve orientations");
  iso->add_flag("--marked", iso_marked, "Compare as arrangements with a marked cell");
  iso->add_option("--face-a", face_a, "Marked cell of the first arrangement");
  iso->add_option("--face-b", face_b, "Marked cell of the second arrangement");

  // chirotope
  auto* chiro = app.add_subcommand("chirotope", "Print the chirotope of an arrangement");
  std::string chiro_file;
  chiro->add_option("file", chiro_file)->required();

  // check
  auto* check = app.add_subcommand("check", "Check that a chirotope extends on every k-subset");
  std::string check_file;
  std::size_t check_k = 0;
  int check_genus = 1;
  bool check_relations = false;
  check->add_option("file", check_file, "Chirotope file")->required();
  check->add_option("--k", check_k, "Subset size (default: all indices)");
  check->add_option("--genus", check_genus, "Required genus of extensions, 0 for any")->capture_default_str();
  check->add_flag("--relations", check_relations, "Also check the ternary and block relations");

  // reconstruct
  auto* recon = app.add_subcommand("reconstruct", "Rebuild the arrangement of a chirotope");
  std::string recon_file, recon_out;
  int recon_genus = 1;
  bool recon_all = false;
  recon->add_option("file", recon_file, "Chirotope file")->required();
  recon->add_option("-o,--output", recon_out, "Write the arrangement file here instead of stdout");
  recon->add_option("--genus", recon_genus, "Required genus, 0 for any")->capture_default_str();
  recon->add_flag("--all", recon_all, "Print every arrangement with this chirotope");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate arrangements by mutations");
  int en_n = 3;
  std::string en_setting = "projective";
  bool en_simple_only = false, en_non_simple = false, en_table = false;
  std::size_t en_limit = 0;
  unsigned en_threads = 1;
  std::uint64_t en_seed = 0;
  std::string en_emit;
  enumerate->add_option("--n", en_n, "Number of curves")->required()->check(CLI::Range(2, 9));
  enumerate->add_option("--setting", en_setting, "projective or moebius")
      ->check(CLI::IsMember({"projective", "moebius"}))
      ->capture_default_str();
  enumerate->add_flag("--simple-only", en_simple_only, "Only simple arrangements (the default)");
  enumerate->add_flag("--with-non-simple", en_non_simple, "Include arrangements with multiple crossings");
  enumerate->add_flag("--table", en_table, "Print a CSV census row");
  enumerate->add_option("--limit-states", en_limit, "Stop after this many classes (0: unlimited)");
  enumerate->add_option("--threads", en_threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  enumerate->add_option("--seed", en_seed, "Randomize the exploration order");
  enumerate->add_option("--emit-classes", en_emit, "Write one arrangement file per class into this directory");
  enumerate->get_option("--simple-only")->excludes("--with-non-simple");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "List the fixtures or print one of them");
  std::string cat_name;
  catalog->add_option("name", cat_name);

  // dot
  auto* dot = app.add_subcommand("dot", "Graphviz output of the flag graph or the dual graph");
  std::string dot_file, dot_graph = "flag";
  dot->add_option("file", dot_file)->required();
  dot->add_option("--graph", dot_graph)->check(CLI::IsMember({"flag", "dual"}))->capture_default_str();

  // stats
  auto* stats = app.add_subcommand("stats", "Cell structure, symmetry and mutation statistics");
  std::string stats_file;
  stats->add_option("file", stats_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) {
      try {
        const auto a = load_arrangement(validate_file);
        Json j;
        j["ok"] = true;
        j["genus"] = a.genus();
        j["f_vector"] = dpl::face_vector_json(a.face_vector());
        j["n"] = a.n();
        j["nodes"] = a.num_nodes();
        j["simple"] = dpl::is_simple(a);
        j["thin"] = dpl::is_thin(a);
        j["aut"] = dpl::automorphism_order(a.flags());
        j["orbits"] = dpl::orbit_count(a.flags());
        j["key"] = dpl::hex_key(a.key());
        print(j, human);
        return kOk;
      } catch (const dpl::Error& e) {
        if (e.code() == dpl::ErrorCode::Parse) throw;
        print(dpl::error_json(e), human);
        return kRejected;
      }
    }

    if (*iso) {
      const auto a = load_arrangement(iso_a);
      const auto b = load_arrangement(iso_b);
      bool same = false;
      Json j;
      if (iso_marked) {
        if (face_a.has_value() != face_b.has_value()) throw UsageError("--face-a and --face-b go together");
        auto opt = iso_options(iso_indexed, iso_oriented);
        if (face_a) {
          if (*face_a < 0 || *face_a >= a.flags().num_faces() || *face_b < 0 || *face_b >= b.flags().num_faces())
            throw UsageError("marked cell out of range");
          auto oa = opt, ob = opt;
          oa.marked_face = *face_a;
          ob.marked_face = *face_b;
          same = dpl::canonical_key(a.flags(), oa) == dpl::canonical_key(b.flags(), ob);
        } else {
          // Isomorphic for some choice of admissible marked cells.
          std::set<std::string> ka;
          for (int f : dpl::admissible_cells(a.flags())) {
            auto o = opt;
            o.marked_face = f;
            ka.insert(dpl::canonical_key(a.flags(), o));
          }
          for (int f : dpl::admissible_cells(b.flags())) {
            auto o = opt;
            o.marked_face = f;
            same = same || ka.count(dpl::canonical_key(b.flags(), o));
          }
        }
      } else {
        const auto opt = iso_options(iso_indexed, iso_oriented);
        same = dpl::canonical_key(a.flags(), opt) == dpl::canonical_key(b.flags(), opt);
      }
      j["isomorphic"] = same;
      j["indexed"] = iso_indexed;
      j["oriented"] = iso_oriented;
      j["marked"] = iso_marked;
      print(j, human);
      return same ? kOk : kRejected;
    }

    if (*chiro) {
      const auto a = load_arrangement(chiro_file);
      const auto namer = class_namer();
      const auto chi = dpl::chirotope_of(a);
      if (human) {
        std::cout << dpl::serialize(chi, namer);
        return kOk;
      }
      Json j;
      j["indices"] = chi.indices;
      Json entries = Json::object();
      for (const auto& [t, e] : chi.entries)
        entries[std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2])] = namer.name(e);
      j["entries"] = entries;
      print(j, false);
      return kOk;
    }

    if (*check) {
      const auto namer = class_namer();
      const auto chi = load_chirotope(check_file, namer);
      const std::size_t k = check_k ? check_k : chi.indices.size();
      if (k < 3 || k > chi.indices.size()) throw UsageError("--k must lie between 3 and the number of indices");
      dpl::ReconstructOptions opt;
      opt.genus = check_genus;
      auto d = dpl::check_k_chirotope(chi, k, opt);
      Json j = diagnosis_json(d);
      j["k"] = k;
      if (check_relations && d.ok) {
        const auto rel = dpl::relations_from(chi, opt);
        j["relations"] = diagnosis_json(rel.diagnosis);
        d.ok = rel.diagnosis.ok;
      }
      print(j, human);
      return d.ok ? kOk : kRejected;
    }

    if (*recon) {
      const auto namer = class_namer();
      const auto chi = load_chirotope(recon_file, namer);
      dpl::ReconstructOptions opt;
      opt.genus = recon_genus;
      const auto r = dpl::reconstruct_all(chi, opt);
      if (r.arrangements.empty() || (r.arrangements.size() > 1 && !recon_all)) {
        Json j = diagnosis_json(r.diagnosis);
        if (r.arrangements.size() > 1) {
          j["accepted"] = false;
          j["error"] = "Ambiguous";
          j["count"] = r.arrangements.size();
          j["message"] = "several arrangements share the chirotope; use --all or --genus";
        }
        print(j, human);
        return kRejected;
      }
      std::string text;
      for (std::size_t k = 0; k < r.arrangements.size(); ++k) {
        if (k) text += "\n";
        text += "#@ genus: " + std::to_string(r.arrangements[k].genus()) + "\n" + dpl::serialize(r.arrangements[k]);
      }
      if (recon_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(recon_out);
        if (!out) throw UsageError("cannot write " + recon_out);
        out << text;
      }
      return kOk;
    }

    if (*enumerate) {
      dpl::EnumOptions opt;
      opt.n = en_n;
      opt.setting = en_setting == "moebius" ? dpl::Setting::moebius : dpl::Setting::projective;
      opt.simple_only = !en_non_simple;
      opt.state_limit = en_limit ? en_limit : env_state_limit();
      opt.threads = en_threads;
      opt.shuffle_seed = en_seed;
      const auto res = dpl::enumerate(opt);
      if (!en_emit.empty()) {
        fs::create_directories(en_emit);
        for (std::size_t k = 0; k < res.classes.size(); ++k) {
          char name[32];
          std::snprintf(name, sizeof name, "class%05zu.dpl", k);
          std::ofstream out(fs::path(en_emit) / name);
          out << "#@ key: " << dpl::hex_key(res.keys[k]) << "\n" << dpl::serialize(res.classes[k]);
        }
      }
      if (en_table) {
        if (res.row) {
          const auto& r = *res.row;
          std::cout << r.n << "," << r.a << "," << r.b << "," << r.c << "," << r.d << "\n";
        } else {
          std::cout << en_n << "," << res.classes.size() << "\n";
        }
      } else {
        Json j;
        j["n"] = en_n;
        j["setting"] = en_setting;
        j["simple_only"] = opt.simple_only;
        j["complete"] = res.complete;
        j["classes"] = res.classes.size();
        j["flip_connected"] = res.flip_connected;
        if (res.row) j["census"] = {{"a", res.row->a}, {"b", res.row->b}, {"c", res.row->c}, {"d", res.row->d}};
        print(j, human);
      }
      return res.complete ? kOk : kRejected;
    }

    if (*catalog) {
      const auto cat = dpl::Catalog::load();
      if (cat_name.empty()) {
        Json list = Json::array();
        for (const auto& f : cat.all()) list.push_back({{"name", f.name}, {"note", f.note}});
        const fs::path fx = dpl::data_dir() / "fixtures";
        if (fs::is_directory(fx)) {
          std::vector<fs::path> files;
          for (const auto& e : fs::directory_iterator(fx)) files.push_back(e.path());
          std::sort(files.begin(), files.end());
          for (const auto& p : files) list.push_back({{"name", p.filename().string()}, {"note", "fixture file"}});
        }
        if (human) {
          for (const auto& e : list) std::cout << e["name"].get<std::string>() << "\t" << e["note"].get<std::string>() << "\n";
        } else {
          print(list, false);
        }
        return kOk;
      }
      const fs::path fx = dpl::data_dir() / "fixtures" / cat_name;
      if (fs::is_regular_file(fx)) {
        std::cout << dpl::read_file(fx);
        return kOk;
      }
      try {
        std::cout << dpl::read_file(cat.get(cat_name).path);
      } catch (const dpl::Error&) {
        throw UsageError("unknown fixture: " + cat_name);
      }
      return kOk;
    }

    if (*dot) {
      const auto a = load_arrangement(dot_file);
      std::cout << (dot_graph == "flag" ? dpl::flag_graph_dot(a.flags()) : dpl::dual_graph_dot(a.flags()));
      return kOk;
    }

    if (*stats) {
      const auto a = load_arrangement(stats_file);
      const auto& fc = a.flags();
      Json j = dpl::to_json(a);
      j["nodes"] = a.num_nodes();
      j["edges"] = fc.num_edges();
      j["faces"] = fc.num_faces();
      j["euler"] = fc.euler();
      j["aut"] = dpl::automorphism_order(fc);
      j["aut_indexed_oriented"] = dpl::automorphism_order(fc, dpl::key_options(dpl::KeyMode::indexed_oriented));
      j["orbits"] = dpl::orbit_count(fc);
      j["triangles"] = dpl::triangles(a).size();
      j["triple_points"] = dpl::triple_points(a).size();
      std::vector<int> martagons;
      for (int i : a.indices())
        if (dpl::is_martagon(a, i)) martagons.push_back(i);
      j["martagon_curves"] = martagons;
      if (a.genus() == 1) {
        const auto row = dpl::moebius_counts(a);
        j["admissible_cells"] = dpl::admissible_cells(fc);
        j["moebius"] = {{"a", row.a}, {"b", row.b}, {"c", row.c}, {"d", row.d}};
      }
      print(j, human);
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "dpl: " << e.what() << "\n";
    return kUsage;
  } catch (const dpl::Error& e) {
    if (e.code() == dpl::ErrorCode::Parse || e.code() == dpl::ErrorCode::UnknownFixture) {
      std::cerr << "dpl: " << e.what() << "\n";
      return kUsage;
    }
    print(dpl::error_json(e), human);
    return kRejected;
  }
  return kUsage;
}
