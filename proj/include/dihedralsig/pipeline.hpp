#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dihedralsig/cache.hpp"
#include "dihedralsig/linalg.hpp"
#include "dihedralsig/table.hpp"
#include "dihedralsig/xi.hpp"

namespace dihedralsig {

using Json = nlohmann::json;

Json integer_json(const Integer& v);
Json group_json(const AbelianGroup& g);
Json matrix_json(const IntMatrix& m);
Json certificate_json(const XiCertificate& c);

/// Per-coloring inputs for the certificate, keyed by coloring id ("orbit-0", ...).
struct SigmaWEntry {
  std::optional<Integer> sigma_W;
  std::optional<std::size_t> class_index;
  std::optional<Integer> L_V;
  std::optional<IntMatrix> kappa_seifert;
  std::optional<std::vector<int>> tl;
};
using SigmaWInputs = std::map<std::string, SigmaWEntry>;

/// Object mapping coloring ids to an integer sigma_W or to an object with
/// optional keys sigma_W, class, L_V, kappa {braid | seifert}, tl.
SigmaWInputs parse_sigma_w(const std::string& json_text);
SigmaWInputs load_sigma_w(const std::string& path);

struct PipelineOptions {
  ResultCache cache;
  std::optional<int> bridge_n;
};

Json color_census(const KnotRecord& k, std::int64_t p, bool list_colorings = false);
Json det_report(const KnotRecord& k);
Json cover_report(const KnotRecord& k, std::int64_t p, const PipelineOptions& opts);
Json xi_report(const KnotRecord& k, std::int64_t p, const SigmaWInputs& sw, const PipelineOptions& opts);
Json obstruct_report(const KnotRecord& k, std::int64_t p, const SigmaWInputs& sw, const PipelineOptions& opts);
Json full_report(const KnotTable& t, const std::vector<std::int64_t>& primes, const PipelineOptions& opts);

/// Record for a diagram given on the command line rather than by name.
KnotRecord adhoc_record(const std::string& name, const KnotDiagram& d, std::optional<BraidWord> braid = std::nullopt);

}  // namespace dihedralsig
