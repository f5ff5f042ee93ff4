#include "dihedralsig/pipeline.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "dihedralsig/coloring.hpp"
#include "dihedralsig/covers.hpp"
#include "dihedralsig/errors.hpp"
#include "dihedralsig/surfaces.hpp"

namespace dihedralsig {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json group_json(const AbelianGroup& g) {
  Json t = Json::array();
  for (const auto& v : g.torsion) t.push_back(integer_json(v));
  return {{"rank", g.rank}, {"torsion", t}, {"text", g.to_string()}};
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

namespace {

Json optional_integer(const std::optional<Integer>& v) { return v ? integer_json(*v) : Json(nullptr); }

Integer json_integer(const Json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError(std::string(what) + " must be an integer");
}

IntMatrix json_matrix(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  const std::size_t n = j.size();
  IntMatrix m(n, n == 0 ? 0 : j[0].size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw InputError("matrix rows must have equal length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = json_integer(j[i][c], "matrix entry");
  }
  return m;
}

std::vector<Coloring> surjective_only(const std::vector<Coloring>& all) {
  std::vector<Coloring> out;
  for (const auto& c : all)
    if (c.surjective) out.push_back(c);
  return out;
}

std::string orbit_id(std::size_t i) { return "orbit-" + std::to_string(i); }

Json cover_data(const KnotRecord& k, const Coloring& c, const PipelineOptions& opts) {
  const Json input = {{"pd", k.diagram.to_pd_string()}, {"p", c.p}, {"labels", c.labels}};
  if (auto hit = opts.cache.get("branched_homology", input)) return *hit;
  const auto h = branched_homology(k.diagram, c);
  Json value = {{"unbranched", group_json(h.unbranched)}, {"branched", group_json(h.branched)}};
  opts.cache.put("branched_homology", input, value);
  return value;
}

Json census_json(const SheetCensus& s) {
  Json fibers = Json::array();
  for (const auto& f : s.fibers) fibers.push_back({{"two_cycles", f.two_cycles}, {"fixed_points", f.fixed_points}});
  return {{"fibers", fibers},
          {"uniform", s.uniform},
          {"n", s.n},
          {"bridge_sphere_euler", s.bridge_sphere_euler},
          {"bridge_sphere_genus", s.bridge_sphere_genus}};
}

int bridge_for(const KnotRecord& k, const PipelineOptions& opts) {
  return opts.bridge_n ? *opts.bridge_n : k.bridge_number();
}

struct OrbitData {
  std::string id;
  Coloring coloring;
  std::size_t size = 0;
  Json cover;
  std::int64_t rank = 0;
};

std::vector<OrbitData> orbit_data(const KnotRecord& k, std::int64_t p, const PipelineOptions& opts) {
  const auto surj = surjective_only(fox_colorings(k.diagram, p));
  std::vector<OrbitData> out;
  const auto orbits = coloring_orbits(surj);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    OrbitData o;
    o.id = orbit_id(i);
    o.coloring = {p, orbits[i].representative, true};
    o.size = orbits[i].members.size();
    o.cover = cover_data(k, o.coloring, opts);
    o.rank = o.cover.at("branched").at("rank").get<std::int64_t>();
    out.push_back(std::move(o));
  }
  return out;
}

Json bounds_json(std::int64_t p, std::int64_t rk, int n) {
  Json b = {{"ribbon_bound", ribbon_bound(p, rk)}, {"bridge_n", n}};
  if (n >= 2) {
    b["bridge_bound"] = bridge_bound(p, n);
    b["genus_bound"] = genus_bound(p, n);
    b["rank_within_genus_bound"] = rk <= genus_bound(p, n);
  } else {
    b["bridge_bound"] = nullptr;
    b["genus_bound"] = nullptr;
  }
  return b;
}

XiCertificate build_certificate(const KnotRecord& k, std::int64_t p, const std::string& id, std::int64_t rk,
                                const SigmaWInputs& sw) {
  XiCertificate cert;
  cert.p = p;
  cert.coloring_id = id;
  std::vector<std::string> missing;
  const auto it = sw.find(id);
  const SigmaWEntry entry = it == sw.end() ? SigmaWEntry{} : it->second;

  std::optional<Integer> L_V = entry.L_V;
  if (!L_V) {
    if (!k.braid) {
      missing.push_back("L_V (no braid word for a Seifert matrix)");
    } else {
      const auto s = seifert_matrix(*k.braid);
      const auto classes = characteristic_classes(s, p);
      if (entry.class_index) {
        if (*entry.class_index >= classes.size())
          throw InputError("class index " + std::to_string(*entry.class_index) + " out of range for " + id);
        L_V = linking_self_value(s, classes[*entry.class_index]);
      } else if (classes.size() == 1) {
        L_V = linking_self_value(s, classes.front());
      } else {
        missing.push_back("L_V (" + std::to_string(classes.size()) + " characteristic classes; choose one)");
      }
    }
  }
  cert.L_V = L_V;
  cert.sigma_W = entry.sigma_W;
  if (!entry.sigma_W) missing.push_back("sigma_W");

  std::optional<std::vector<int>> tl = entry.tl;
  if (!tl && entry.kappa_seifert) {
    try {
      tl = tristram_levine_family(*entry.kappa_seifert, p);
    } catch (const IndeterminateError& e) {
      missing.push_back(std::string("tl (") + e.what() + ")");
    }
  } else if (!tl) {
    missing.push_back("tl (no Seifert matrix for kappa)");
  }
  if (tl) cert.tl = *tl;

  const Integer bound = ribbon_bound(p, rk);
  if (missing.empty()) {
    auto full = assemble_xi(p, *L_V, *entry.sigma_W, *tl);
    full.coloring_id = id;
    cert = std::move(full);
  } else {
    std::string note = "missing:";
    for (std::size_t i = 0; i < missing.size(); ++i) note += (i ? ", " : " ") + missing[i];
    cert.note = note;
  }
  apply_bound(cert, bound);
  return cert;
}

Json certificate_with_parity(const XiCertificate& c, std::int64_t rk) {
  Json j = certificate_json(c);
  if (c.p == 3) j["xi3_parity"] = to_string(xi3_parity_check(c, rk == 0));
  return j;
}

}  // namespace

Json certificate_json(const XiCertificate& c) {
  return {{"p", c.p},
          {"coloring_id", c.coloring_id},
          {"L_V", optional_integer(c.L_V)},
          {"sigma_W", optional_integer(c.sigma_W)},
          {"tl", c.tl},
          {"xi", optional_integer(c.xi)},
          {"bound", optional_integer(c.bound)},
          {"verdict", to_string(c.verdict)},
          {"note", c.note}};
}

SigmaWInputs parse_sigma_w(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed sigma_W file: ") + e.what());
  }
  if (!j.is_object()) throw InputError("sigma_W file must be a JSON object keyed by coloring id");
  SigmaWInputs out;
  try {
    for (const auto& [id, v] : j.items()) {
      SigmaWEntry e;
      if (v.is_number_integer() || v.is_string()) {
        e.sigma_W = json_integer(v, "sigma_W");
      } else if (v.is_object()) {
        if (v.contains("sigma_W")) e.sigma_W = json_integer(v.at("sigma_W"), "sigma_W");
        if (v.contains("class")) e.class_index = v.at("class").get<std::size_t>();
        if (v.contains("L_V")) e.L_V = json_integer(v.at("L_V"), "L_V");
        if (v.contains("tl")) e.tl = v.at("tl").get<std::vector<int>>();
        if (v.contains("kappa")) {
          const auto& kappa = v.at("kappa");
          if (kappa.contains("seifert")) {
            e.kappa_seifert = seifert_from_matrix(json_matrix(kappa.at("seifert"))).L;
          } else if (kappa.contains("braid")) {
            const auto& b = kappa.at("braid");
            const BraidWord w = b.is_string() ? parse_braid(b.get<std::string>())
                                              : BraidWord{b.at("k").get<int>(), b.at("word").get<std::vector<int>>()};
            e.kappa_seifert = seifert_matrix(w).L;
          } else {
            throw InputError("kappa needs a 'seifert' matrix or a 'braid'");
          }
        }
      } else {
        throw InputError("entry '" + id + "' must be an integer or an object");
      }
      out[id] = std::move(e);
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed sigma_W file: ") + e.what());
  }
  return out;
}

SigmaWInputs load_sigma_w(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open sigma_W file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sigma_w(ss.str());
}

KnotRecord adhoc_record(const std::string& name, const KnotDiagram& d, std::optional<BraidWord> braid) {
  KnotRecord r;
  r.name = name;
  r.pd_source = "command line";
  r.diagram = d;
  for (const auto& x : d.crossings()) r.pd.push_back({x[0], x[1], x[2], x[3]});
  r.braid = std::move(braid);
  return r;
}

Json color_census(const KnotRecord& k, std::int64_t p, bool list_colorings) {
  const auto all = fox_colorings(k.diagram, p);
  const auto surj = surjective_only(all);
  const auto orbits = coloring_orbits(surj);
  Json j = {{"knot", k.name}, {"p", p}, {"total", all.size()}, {"surjective", surj.size()}, {"orbits", orbits.size()}};
  Json reps = Json::array();
  for (std::size_t i = 0; i < orbits.size(); ++i)
    reps.push_back({{"id", orbit_id(i)}, {"representative", orbits[i].representative}, {"size", orbits[i].members.size()}});
  j["orbit_representatives"] = reps;
  if (list_colorings) {
    Json list = Json::array();
    for (const auto& c : all) list.push_back({{"labels", c.labels}, {"surjective", c.surjective}});
    j["colorings"] = list;
  }
  return j;
}

Json det_report(const KnotRecord& k) {
  Json j = {{"knot", k.name},
            {"crossings", k.diagram.crossing_count()},
            {"determinant", integer_json(determinant(k.diagram))},
            {"double_cover_homology", group_json(double_cover_homology(k.diagram))},
            {"goeritz_matrix", matrix_json(goeritz_matrix(k.diagram))},
            {"bridge_upper_bound", k.diagram.bridge_upper_bound()}};
  if (k.braid) {
    const auto s = seifert_matrix(*k.braid);
    Integer sd = s.symmetrized.determinant();
    if (sd < 0) sd = -sd;
    j["seifert"] = {{"braid", k.braid->to_string()},
                    {"genus", s.genus},
                    {"L", matrix_json(s.L)},
                    {"abs_det_symmetrized", integer_json(sd)}};
  }
  return j;
}

Json cover_report(const KnotRecord& k, std::int64_t p, const PipelineOptions& opts) {
  require_odd_square_free(p);
  const int n = bridge_for(k, opts);
  Json orbits = Json::array();
  for (auto& o : orbit_data(k, p, opts)) {
    Json e = {{"id", o.id}, {"representative", o.coloring.labels}, {"size", o.size}};
    e["branched_homology"] = o.cover;
    e["sheet_census"] = census_json(sheet_census(k.diagram, o.coloring, std::max(n, 1)));
    e["bounds"] = bounds_json(p, o.rank, n);
    orbits.push_back(e);
  }
  return {{"knot", k.name}, {"p", p}, {"orbits", orbits}};
}

Json xi_report(const KnotRecord& k, std::int64_t p, const SigmaWInputs& sw, const PipelineOptions& opts) {
  require_odd_square_free(p);
  Json j = {{"knot", k.name}, {"p", p}};
  if (k.braid) {
    const auto s = seifert_matrix(*k.braid);
    Json classes = Json::array();
    for (const auto& cc : characteristic_classes(s, p))
      classes.push_back(
          {{"xi", cc.xi}, {"primitive", cc.primitive}, {"L_V", integer_json(linking_self_value(s, cc))}});
    j["seifert_L"] = matrix_json(s.L);
    j["characteristic_classes"] = classes;
  } else {
    j["seifert_L"] = nullptr;
    j["characteristic_classes"] = nullptr;
  }
  Json certs = Json::array();
  for (auto& o : orbit_data(k, p, opts))
    certs.push_back(certificate_with_parity(build_certificate(k, p, o.id, o.rank, sw), o.rank));
  j["certificates"] = certs;
  return j;
}

Json obstruct_report(const KnotRecord& k, std::int64_t p, const SigmaWInputs& sw, const PipelineOptions& opts) {
  require_odd_square_free(p);
  const Integer det = determinant(k.diagram);
  const int n = bridge_for(k, opts);
  Json j = {{"knot", k.name}, {"p", p}, {"determinant", integer_json(det)}, {"p_divides_determinant", det % p == 0}};
  Json notes = Json::array();

  const auto all = fox_colorings(k.diagram, p);
  const auto surj = surjective_only(all);
  const auto lf = linking_form(k.diagram);
  Json mets = Json::array();
  const auto ms = metabolizers(lf);
  for (const auto& m : ms) mets.push_back({{"generators", m.generators}, {"order", m.elements.size()}});
  j["double_cover_homology"] = group_json(lf.group);
  j["metabolizers"] = mets;

  const auto data = orbit_data(k, p, opts);
  j["fox_colorings"] = {{"total", all.size()}, {"surjective", surj.size()}, {"orbits", data.size()}};

  Json orbits = Json::array();
  std::vector<XiCertificate> certs;
  for (const auto& o : data) {
    Json e = {{"id", o.id}, {"representative", o.coloring.labels}, {"size", o.size}};
    const bool passes = coloring_passes_metabolizer_filter(o.coloring, k.diagram);
    e["passes_metabolizer_filter"] = passes;
    e["branched_homology"] = o.cover;
    e["sheet_census"] = census_json(sheet_census(k.diagram, o.coloring, std::max(n, 1)));
    e["bounds"] = bounds_json(p, o.rank, n);
    if (passes) {
      auto cert = build_certificate(k, p, o.id, o.rank, sw);
      e["certificate"] = certificate_with_parity(cert, o.rank);
      certs.push_back(std::move(cert));
    } else {
      e["certificate"] = nullptr;
    }
    orbits.push_back(e);
  }
  j["orbits"] = orbits;

  Verdict v = Verdict::indeterminate;
  if (det % p != 0) {
    notes.push_back("p does not divide the determinant: there are no surjective p-colorings");
  } else if (surj.empty()) {
    throw InconsistencyError("p divides the determinant but no surjective coloring was found");
  } else if (certs.empty()) {
    notes.push_back("no coloring passes the metabolizer filter, so the ribbon inequality has no candidate; "
                    "bounds are reported but sliceness is not checked");
  } else {
    v = obstruction_verdict(certs);
    if (v == Verdict::indeterminate) notes.push_back("some certificate lacks inputs (sigma_W, L_V or tl)");
    if (v == Verdict::obstructed) notes.push_back("every candidate violates |Xi_p| <= rk H_1(M) + (p-1)/2: not homotopy ribbon");
  }
  j["verdict"] = to_string(v);
  j["notes"] = notes;
  return j;
}

Json full_report(const KnotTable& t, const std::vector<std::int64_t>& primes, const PipelineOptions& opts) {
  Json knots = Json::array();
  const SigmaWInputs none;
  for (const auto& k : t.knots) {
    Json e = det_report(k);
    Json per_p = Json::array();
    for (auto p : primes) {
      Json section = obstruct_report(k, p, none, opts);
      section.erase("knot");
      per_p.push_back(section);
    }
    e["primes"] = per_p;
    knots.push_back(e);
  }
  return {{"format", "dihedralsig-report"}, {"table_version", t.version}, {"primes", primes}, {"knots", knots}};
}

}  // namespace dihedralsig
