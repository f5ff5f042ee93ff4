#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dihedralsig/coverarith.hpp"
#include "dihedralsig/errors.hpp"
#include "dihedralsig/pipeline.hpp"

using namespace dihedralsig;

namespace {

struct Globals {
  std::string table;
  bool json = false;
  bool no_cache = false;
  std::optional<std::string> cache_dir;
};

struct KnotArgs {
  std::string name;
  std::string pd;
  std::string braid;
  bool unknot = false;
};

void add_knot_args(CLI::App* cmd, KnotArgs& k) {
  cmd->add_option("knot", k.name, "Knot name in the table");
  cmd->add_option("--pd", k.pd, "PD code instead of a table name");
  cmd->add_option("--braid", k.braid, "Braid word instead of a table name");
  cmd->add_flag("--unknot", k.unknot, "Use the 0-crossing unknot");
}

KnotRecord resolve_knot(const KnotArgs& a, const Globals& g) {
  const int given = !a.name.empty() + !a.pd.empty() + !a.braid.empty() + a.unknot;
  if (given != 1) throw InputError("give exactly one of: a knot name, --pd, --braid, --unknot");
  if (a.unknot) return adhoc_record("unknot", KnotDiagram::unknot());
  if (!a.pd.empty()) return adhoc_record("pd", parse_pd(a.pd));
  if (!a.braid.empty()) {
    const auto b = parse_braid(a.braid);
    return adhoc_record("braid", braid_closure(b), b);
  }
  return load_table(g.table).find(a.name);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void render(const Json& j, std::ostream& os, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
      if (e.is_object()) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !flat(v))) {
        os << pad << key << ":\n";
        render(v, os, indent + 2);
      } else {
        os << pad << key << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array() && !flat(j)) {
    for (const auto& v : j) {
      os << pad << "-\n";
      render(v, os, indent + 2);
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

void emit(const Json& j, const Globals& g) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    render(j, std::cout);
}

PipelineOptions options(const Globals& g, std::optional<int> bridge_n) {
  PipelineOptions o;
  if (!g.no_cache) o.cache = ResultCache(resolve_cache_dir(g.cache_dir));
  o.bridge_n = bridge_n;
  return o;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError("bad integer '" + tok + "' in list");
    }
  }
  return out;
}

Integer parse_integer(const std::string& s, const char* what) {
  try {
    return Integer(s);
  } catch (const std::exception&) {
    throw InputError(std::string(what) + " must be an integer (got '" + s + "')");
  }
}

Json batch(const std::string& path, const std::function<Json(const Json&)>& one) {
  Json in;
  try {
    in = Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed batch file: ") + e.what());
  }
  if (!in.is_array()) throw InputError("batch file must hold a JSON array");
  Json out = Json::array();
  for (const auto& item : in) {
    try {
      out.push_back({{"value", one(item)}});
    } catch (const Json::exception& e) {
      out.push_back({{"error", std::string("malformed entry: ") + e.what()}});
    } catch (const Error& e) {
      out.push_back({{"error", e.what()}});
    }
  }
  return out;
}

Integer item_integer(const Json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  return parse_integer(v.get<std::string>(), key);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral branched covers, Xi_p and the homotopy-ribbon obstruction"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.table = default_table_path();
  std::string cache_dir;
  app.add_option("--table", g.table, "Knot table (JSON)");
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--no-cache", g.no_cache, "Disable the result cache");
  app.add_option("--cache-dir", cache_dir, "Cache directory (DIHEDRALSIG_CACHE overrides)");

  int exit_code = 0;
  std::int64_t p = 3;
  std::optional<int> bridge;
  KnotArgs knot;
  std::string sigma_w_file;

  auto* color = app.add_subcommand("color", "Fox p-coloring census");
  add_knot_args(color, knot);
  color->add_option("--p", p, "Odd square-free modulus")->required();
  bool list = false;
  color->add_flag("--list", list, "List every coloring");

  auto* det = app.add_subcommand("det", "Determinant and double branched cover homology");
  add_knot_args(det, knot);

  auto* cover = app.add_subcommand("cover-h1", "Homology of the irregular dihedral covers");
  add_knot_args(cover, knot);
  cover->add_option("--p", p, "Odd square-free modulus")->required();
  cover->add_option("--n", bridge, "Bridge number override");

  auto* xi = app.add_subcommand("xi", "Characteristic classes and Xi_p certificates");
  add_knot_args(xi, knot);
  xi->add_option("--p", p, "Odd square-free modulus")->required();
  xi->add_option("--sigma-w-file", sigma_w_file, "JSON map from coloring id to sigma_W data");
  std::string lv, sigma_w, tl;
  std::optional<std::int64_t> rk;
  xi->add_option("--lv", lv, "L_V(kappa, kappa) for direct assembly");
  xi->add_option("--sigma-w", sigma_w, "sigma(W) for direct assembly");
  xi->add_option("--tl", tl, "Comma-separated Tristram-Levine signatures for direct assembly");
  xi->add_option("--rk", rk, "rk H_1(M) for the bound in direct assembly");

  auto* obstruct = app.add_subcommand("obstruct", "Homotopy-ribbon obstruction verdict");
  add_knot_args(obstruct, knot);
  obstruct->add_option("--p", p, "Odd square-free modulus")->required();
  obstruct->add_option("--sigma-w-file", sigma_w_file, "JSON map from coloring id to sigma_W data");
  obstruct->add_option("--n", bridge, "Bridge number override");

  auto* viro = app.add_subcommand("viro", "Signature of a branched cover");
  std::int64_t sheets = 1;
  std::string sigma_y = "0", e_b = "0", xi_value;
  std::vector<std::string> euler;
  std::string batch_file;
  viro->add_option("--n", sheets, "Sheet count");
  viro->add_option("--sigma-y", sigma_y, "Signature of the base");
  viro->add_option("--e", euler, "Branching index and Euler number as r:e (repeatable)");
  viro->add_option("--batch", batch_file, "JSON array of {n, sigma_Y, euler_numbers}");

  auto* sashka = app.add_subcommand("sashka", "Intersection homology signature of a dihedral cover");
  sashka->add_option("--p", p, "Odd modulus");
  sashka->add_option("--sigma-y", sigma_y, "Signature of the base");
  sashka->add_option("--e-b", e_b, "Self-intersection of the branch surface");
  sashka->add_option("--xi", xi_value, "Xi_p(K)");
  sashka->add_option("--batch", batch_file, "JSON array of {p, sigma_Y, e_B, xi}");

  auto* euler_cmd = app.add_subcommand("euler", "Intersection homology Euler characteristic");
  std::int64_t rank = 0;
  bool disk = false;
  euler_cmd->add_option("--p", p, "Odd modulus")->required();
  euler_cmd->add_option("--rk", rank, "rk H_1(M)");
  euler_cmd->add_flag("--disk", disk, "Euler characteristic of the cover of the disk complement");

  auto* report = app.add_subcommand("report", "Full report over the knot table");
  std::vector<std::int64_t> primes;
  std::string out_file;
  report->add_option("--p", primes, "Moduli (repeatable; default 3 5 7)");
  report->add_option("--out", out_file, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (!cache_dir.empty()) g.cache_dir = cache_dir;

  try {
    if (*color) {
      require_odd_square_free(p);
      emit(color_census(resolve_knot(knot, g), p, list), g);
    } else if (*det) {
      emit(det_report(resolve_knot(knot, g)), g);
    } else if (*cover) {
      emit(cover_report(resolve_knot(knot, g), p, options(g, bridge)), g);
    } else if (*xi) {
      if (!lv.empty() || !sigma_w.empty() || !tl.empty()) {
        if (lv.empty() || sigma_w.empty() || tl.empty())
          throw InputError("direct assembly needs --lv, --sigma-w and --tl");
        auto cert = assemble_xi(p, parse_integer(lv, "--lv"), parse_integer(sigma_w, "--sigma-w"), parse_int_list(tl));
        if (rk) apply_bound(cert, ribbon_bound(p, *rk));
        Json j = certificate_json(cert);
        if (p == 3 && rk) j["xi3_parity"] = to_string(xi3_parity_check(cert, *rk == 0));
        emit(j, g);
        if (cert.verdict == Verdict::indeterminate && rk) exit_code = 3;
      } else {
        const SigmaWInputs sw = sigma_w_file.empty() ? SigmaWInputs{} : load_sigma_w(sigma_w_file);
        emit(xi_report(resolve_knot(knot, g), p, sw, options(g, std::nullopt)), g);
      }
    } else if (*obstruct) {
      const SigmaWInputs sw = sigma_w_file.empty() ? SigmaWInputs{} : load_sigma_w(sigma_w_file);
      const Json j = obstruct_report(resolve_knot(knot, g), p, sw, options(g, bridge));
      emit(j, g);
      if (j.at("verdict") == "indeterminate") exit_code = 3;
    } else if (*viro) {
      auto one = [](const Json& item) {
        CoverSpec s;
        s.n = item.at("n").get<std::int64_t>();
        s.sigma_Y = item_integer(item, "sigma_Y");
        if (item.contains("euler_numbers"))
          for (const auto& [r, e] : item.at("euler_numbers").items())
            s.euler_numbers[std::stoll(r)] = e.is_number_integer() ? Integer(e.get<std::int64_t>())
                                                                    : parse_integer(e.get<std::string>(), "e");
        return integer_json(viro_signature(s));
      };
      if (!batch_file.empty()) {
        emit(batch(batch_file, one), g);
      } else {
        CoverSpec s;
        s.n = sheets;
        s.sigma_Y = parse_integer(sigma_y, "--sigma-y");
        for (const auto& term : euler) {
          const auto colon = term.find(':');
          if (colon == std::string::npos) throw InputError("--e expects r:e, got '" + term + "'");
          std::int64_t r = 0;
          try {
            r = std::stoll(term.substr(0, colon));
          } catch (const std::logic_error&) {
            throw InputError("bad branching index in '" + term + "'");
          }
          s.euler_numbers[r] += parse_integer(term.substr(colon + 1), "Euler number");
        }
        emit(Json{{"quantity", "signature"}, {"value", integer_json(viro_signature(s))}}, g);
      }
    } else if (*sashka) {
      auto one = [](const Json& item) {
        return integer_json(sashka_signature(item.at("p").get<std::int64_t>(), item_integer(item, "sigma_Y"),
                                             item_integer(item, "e_B"), item_integer(item, "xi")));
      };
      if (!batch_file.empty()) {
        emit(batch(batch_file, one), g);
      } else {
        if (xi_value.empty()) throw InputError("--xi is required");
        emit(Json{{"quantity", "sigma_IH"}, {"value", integer_json(sashka_signature(p, parse_integer(sigma_y, "--sigma-y"),
                                                              parse_integer(e_b, "--e-b"),
                                                              parse_integer(xi_value, "--xi")))}},
             g);
      }
    } else if (*euler_cmd) {
      if (disk)
        emit(Json{{"quantity", "disk_cover_euler"}, {"value", disk_cover_euler(p)}}, g);
      else
        emit(Json{{"quantity", "ih_euler_characteristic"}, {"value", ih_euler_characteristic(p, rank)}}, g);
    } else if (*report) {
      if (primes.empty()) primes = {3, 5, 7};
      for (auto q : primes) require_odd_square_free(q);
      const Json j = full_report(load_table(g.table), primes, options(g, std::nullopt));
      if (out_file.empty()) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::ofstream out(out_file);
        if (!out) throw InputError("cannot write '" + out_file + "'");
        out << j.dump(2) << "\n";
      }
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
