#include "dihedralsig/table.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

const KnotRecord& KnotTable::find(const std::string& name) const {
  for (const auto& k : knots)
    if (k.name == name) return k;
  throw InputError("knot '" + name + "' is not in the table");
}

KnotTable parse_table(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed knot table: ") + e.what());
  }
  KnotTable t;
  std::set<std::string> names;
  try {
    t.version = j.at("version").get<int>();
    for (const auto& k : j.at("knots")) {
      KnotRecord r;
      r.name = k.at("name").get<std::string>();
      if (!names.insert(r.name).second) throw InputError("duplicate knot name '" + r.name + "'");
      r.pd_source = k.value("pd_source", "");
      r.pd = k.at("pd").get<std::vector<std::array<long long, 4>>>();
      try {
        r.diagram = KnotDiagram::from_pd(r.pd);
        if (k.contains("braid") && !k.at("braid").is_null()) {
          BraidWord b{k.at("braid").at("k").get<int>(), k.at("braid").at("word").get<std::vector<int>>()};
          validate_braid(b);
          r.braid = b;
        }
      } catch (const InputError& e) {
        throw InputError("knot '" + r.name + "': " + e.what());
      }
      if (k.contains("bridge_n")) {
        r.bridge_n = k.at("bridge_n").get<int>();
        if (*r.bridge_n < 1) throw InputError("knot '" + r.name + "': bridge_n must be positive");
      }
      t.knots.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed knot table: ") + e.what());
  }
  return t;
}

KnotTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open knot table '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

std::string default_table_path() {
  if (const char* env = std::getenv("DIHEDRALSIG_TABLE"); env && *env) return env;
#ifdef DIHEDRALSIG_DEFAULT_TABLE
  return DIHEDRALSIG_DEFAULT_TABLE;
#else
  return "data/knots.json";
#endif
}

}  // namespace dihedralsig
