#include "dihedralsig/diagram.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

namespace {

struct Slot {
  std::size_t crossing;
  int slot;
  bool operator==(const Slot&) const = default;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

KnotDiagram KnotDiagram::unknot() {
  KnotDiagram d;
  d.derive();
  return d;
}

KnotDiagram KnotDiagram::from_pd(const std::vector<std::array<long long, 4>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) return unknot();
  if (n == 1) throw InputError("1-crossing diagrams are not accepted; use the 0-crossing unknot");

  std::map<long long, std::vector<Slot>> occ;
  for (std::size_t i = 0; i < n; ++i)
    for (int s = 0; s < 4; ++s) {
      if (raw[i][s] <= 0) throw InputError("arc labels must be positive integers");
      occ[raw[i][s]].push_back({i, s});
    }
  for (const auto& [label, where] : occ)
    if (where.size() != 2)
      throw InputError("arc " + std::to_string(label) + " appears " + std::to_string(where.size()) +
                       " times (expected exactly 2)");

  auto other_end = [&](long long label, Slot from) {
    const auto& w = occ.at(label);
    return w[0] == from ? w[1] : w[0];
  };

  // Walk the knot from the outgoing under-edge of crossing 0, fixing the
  // direction of every overstrand on the way.
  std::vector<int> over_in(n, -1);
  std::map<long long, std::size_t> order;
  Slot at{0, 2};
  const long long start = raw[0][2];
  while (true) {
    const long long e = raw[at.crossing][at.slot];
    if (order.count(e)) {
      if (e == start && at == Slot{0, 2}) break;
      throw InputError("arc " + std::to_string(e) + " is traversed twice");
    }
    order.emplace(e, order.size() + 1);
    const Slot next = other_end(e, at);
    if (next.slot == 2)
      throw InputError("arc " + std::to_string(e) + " enters a crossing through its outgoing understrand slot");
    if (next.slot == 1 || next.slot == 3) {
      if (over_in[next.crossing] != -1 && over_in[next.crossing] != next.slot)
        throw InputError("overstrand at crossing " + std::to_string(next.crossing + 1) +
                         " is traversed twice in the same direction");
      over_in[next.crossing] = next.slot;
    }
    at = {next.crossing, (next.slot + 2) % 4};
  }

  if (order.size() != occ.size()) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [label, where] : occ)
      parent[find_root(parent, where[0].crossing)] = find_root(parent, where[1].crossing);
    std::size_t roots = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (find_root(parent, i) == i) ++roots;
    if (roots > 1) throw InputError("diagram is disconnected");
    throw InputError("diagram is a link (more than one component)");
  }

  KnotDiagram d;
  d.crossings_.reserve(n);
  for (const auto& x : raw) {
    PdCrossing c{};
    for (int s = 0; s < 4; ++s) c[s] = static_cast<int>(order.at(x[s]));
    d.crossings_.push_back(c);
  }
  d.derive();
  return d;
}

void KnotDiagram::derive() {
  const std::size_t n = crossings_.size();
  strands_.clear();
  edge_strand_.assign(arc_count() + 1, 0);
  if (n == 0) {
    overpasses_ = seeds_ = 1;
    return;
  }
  const int edges = static_cast<int>(2 * n);
  auto succ = [edges](int e) { return e % edges + 1; };

  std::vector<bool> starts(edges + 1, false);
  std::vector<bool> under_head(edges + 1, false);
  for (const auto& x : crossings_) {
    starts[x[2]] = true;
    under_head[x[0]] = true;
  }
  int strand = -1;
  for (int e = 1; e <= edges; ++e) {
    if (starts[e]) ++strand;
    edge_strand_[e] = strand;
  }

  for (const auto& x : crossings_) {
    CrossingStrands cs;
    if (x[1] == succ(x[3])) {
      cs.sign = +1;
    } else if (x[3] == succ(x[1])) {
      cs.sign = -1;
    } else {
      throw InconsistencyError("overstrand edges are not consecutive");
    }
    cs.over = edge_strand_[x[1]];
    cs.under_in = edge_strand_[x[0]];
    cs.under_out = edge_strand_[x[2]];
    strands_.push_back(cs);
  }

  overpasses_ = 0;
  for (int e = 1; e <= edges; ++e) {
    const int prev = e == 1 ? edges : e - 1;
    if (!under_head[e] && under_head[prev]) ++overpasses_;
  }

  // Seed number by increasing subset size.
  const int strands = static_cast<int>(n);
  auto spans = [&](const std::vector<int>& seed) {
    std::vector<bool> known(strands, false);
    for (int s : seed) known[s] = true;
    int count = static_cast<int>(seed.size());
    bool progress = true;
    while (progress && count < strands) {
      progress = false;
      for (const auto& c : strands_) {
        if (!known[c.over]) continue;
        if (known[c.under_in] != known[c.under_out]) {
          known[c.under_in] = known[c.under_out] = true;
          ++count;
          progress = true;
        }
      }
    }
    return count == strands;
  };
  seeds_ = overpasses_;
  constexpr double kSearchBudget = 2e5;
  for (int k = 1; k < overpasses_ && k <= strands; ++k) {
    double combos = 1;
    for (int i = 0; i < k; ++i) combos = combos * (strands - i) / (i + 1);
    if (combos > kSearchBudget) break;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    bool found = false;
    while (true) {
      if (spans(idx)) {
        found = true;
        break;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == strands - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (found) {
      seeds_ = k;
      break;
    }
  }
}

std::vector<int> KnotDiagram::signs() const {
  std::vector<int> s;
  for (const auto& c : strands_) s.push_back(c.sign);
  return s;
}

int KnotDiagram::writhe() const {
  int w = 0;
  for (const auto& c : strands_) w += c.sign;
  return w;
}

KnotDiagram KnotDiagram::mirror() const {
  if (is_unknot()) return *this;
  std::vector<std::array<long long, 4>> raw;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto& x = crossings_[i];
    if (strands_[i].sign > 0)
      raw.push_back({x[3], x[0], x[1], x[2]});
    else
      raw.push_back({x[1], x[2], x[3], x[0]});
  }
  return from_pd(raw);
}

std::string KnotDiagram::to_pd_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const auto& x = crossings_[i];
    if (i) os << ' ';
    os << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ')';
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::array<long long, 4>> pd_from_json(const nlohmann::json& j) {
  const auto& pd = j.contains("pd") ? j.at("pd") : j;
  if (!pd.is_array()) throw InputError("JSON PD code must be an array of 4-element arrays");
  std::vector<std::array<long long, 4>> raw;
  for (const auto& x : pd) {
    if (!x.is_array() || x.size() != 4) throw InputError("each PD crossing needs exactly 4 arcs");
    std::array<long long, 4> c{};
    for (int s = 0; s < 4; ++s) {
      if (!x[s].is_number_integer()) throw InputError("PD arc labels must be integers");
      c[s] = x[s].get<long long>();
    }
    raw.push_back(c);
  }
  return raw;
}

class PdLexer {
 public:
  explicit PdLexer(std::string_view s) : s_(s) {}

  std::vector<std::array<long long, 4>> parse() {
    std::vector<std::array<long long, 4>> out;
    skip();
    bool wrapped = false;
    if (s_.substr(pos_, 2) == "PD") {
      pos_ += 2;
      skip();
      expect_open();
      wrapped = true;
    }
    while (true) {
      skip_separators();
      if (pos_ >= s_.size()) break;
      if (wrapped && (s_[pos_] == ']' || s_[pos_] == ')')) {
        ++pos_;
        skip();
        if (pos_ != s_.size()) fail("trailing characters after PD[...]");
        return out;
      }
      if (s_[pos_] != 'X') fail("expected 'X'");
      ++pos_;
      skip();
      const char close = expect_open();
      std::array<long long, 4> c{};
      for (int i = 0; i < 4; ++i) {
        skip();
        if (i) {
          if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected ','");
          ++pos_;
          skip();
        }
        c[i] = number();
      }
      skip();
      if (pos_ >= s_.size() || s_[pos_] != close) fail("expected closing bracket");
      ++pos_;
      out.push_back(c);
    }
    if (wrapped) fail("unterminated PD[...]");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("malformed PD code at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ',')) ++pos_;
  }
  char expect_open() {
    if (pos_ >= s_.size()) fail("expected '(' or '['");
    const char c = s_[pos_];
    if (c != '(' && c != '[') fail("expected '(' or '['");
    ++pos_;
    return c == '(' ? ')' : ']';
  }
  long long number() {
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected a positive integer");
    if (pos_ - begin > 12) fail("arc label too large");
    return std::stoll(std::string(s_.substr(begin, pos_ - begin)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotDiagram parse_pd(std::string_view text, bool allow_unknot) {
  text = trim(text);
  std::vector<std::array<long long, 4>> raw;
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    raw = pd_from_json(j);
  } else {
    raw = PdLexer(text).parse();
  }
  if (raw.empty() && !allow_unknot) throw InputError("empty PD code (the 0-crossing unknot must be requested explicitly)");
  return KnotDiagram::from_pd(raw);
}

// ---------------------------------------------------------------------------
// Braids

std::vector<int> BraidWord::closure_permutation() const {
  // where[s] = current position of the strand that started at position s
  std::vector<int> at(static_cast<std::size_t>(strands));
  std::iota(at.begin(), at.end(), 0);
  std::vector<int> who = at;  // who[pos] = starting position of strand now at pos
  for (int l : letters) {
    const int j = std::abs(l) - 1;
    std::swap(who[j], who[j + 1]);
  }
  for (int pos = 0; pos < strands; ++pos) at[who[pos]] = pos;
  return at;
}

int BraidWord::closure_components() const {
  const auto perm = closure_permutation();
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

BraidWord BraidWord::mirror() const {
  BraidWord m = *this;
  for (int& l : m.letters) l = -l;
  return m;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << "k=" << strands << ";";
  for (int l : letters) os << ' ' << l;
  return os.str();
}

void validate_braid(const BraidWord& b) {
  if (b.strands < 2) throw InputError("braids need at least 2 strands");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) > b.strands - 1)
      throw InputError("generator index " + std::to_string(l) + " out of range for " + std::to_string(b.strands) +
                       " strands");
  const int c = b.closure_components();
  if (c != 1) throw InputError("closure has " + std::to_string(c) + " components (not a knot)");
}

BraidWord parse_braid(std::string_view text) {
  text = trim(text);
  BraidWord b;
  if (!text.empty() && text.front() == '{') {
    try {
      const auto j = nlohmann::json::parse(text);
      const auto& br = j.contains("braid") ? j.at("braid") : j;
      b.strands = br.at("k").get<int>();
      b.letters = br.at("word").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed braid JSON: ") + e.what());
    }
  } else {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw InputError("braid must look like 'k=<strands>; w1 w2 ...'");
    std::string head(trim(text.substr(0, semi)));
    head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }), head.end());
    if (head.rfind("k=", 0) != 0) throw InputError("braid must start with 'k=<strands>;'");
    try {
      std::size_t used = 0;
      b.strands = std::stoi(head.substr(2), &used);
      if (used != head.size() - 2) throw InputError("bad strand count");
    } catch (const std::logic_error&) {
      throw InputError("bad strand count in braid");
    }
    std::istringstream is{std::string(text.substr(semi + 1))};
    std::string tok;
    while (is >> tok) {
      try {
        std::size_t used = 0;
        b.letters.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw InputError("bad braid letter '" + tok + "'");
      } catch (const std::logic_error&) {
        throw InputError("bad braid letter '" + tok + "'");
      }
    }
  }
  validate_braid(b);
  return b;
}

KnotDiagram braid_closure(const BraidWord& b) {
  validate_braid(b);
  long long next_label = 0;
  std::vector<long long> top(static_cast<std::size_t>(b.strands));
  for (auto& t : top) t = ++next_label;
  auto cur = top;
  std::vector<std::array<long long, 4>> raw;
  for (int l : b.letters) {
    const std::size_t j = static_cast<std::size_t>(std::abs(l) - 1);
    const long long left_in = cur[j], right_in = cur[j + 1];
    const long long left_out = ++next_label, right_out = ++next_label;
    // Strands run downward; for sigma_j the strand from the upper right passes over.
    if (l > 0)
      raw.push_back({left_in, left_out, right_out, right_in});
    else
      raw.push_back({right_in, left_in, left_out, right_out});
    cur[j] = left_out;
    cur[j + 1] = right_out;
  }
  std::map<long long, long long> glue;
  for (std::size_t i = 0; i < cur.size(); ++i) glue[cur[i]] = top[i];
  for (auto& x : raw)
    for (auto& e : x)
      if (auto it = glue.find(e); it != glue.end()) e = it->second;
  return KnotDiagram::from_pd(raw);
}

// ---------------------------------------------------------------------------
// Presentations

Word free_reduce(const Word& w) {
  Word out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

void GroupPresentation::validate() const {
  const int n = static_cast<int>(generator_count);
  for (const auto& r : relators)
    for (int g : r)
      if (g == 0 || std::abs(g) > n)
        throw InputError("relator mentions generator " + std::to_string(g) + " outside 1.." + std::to_string(n));
}

IntMatrix GroupPresentation::abelianization_matrix() const {
  IntMatrix m(relators.size(), generator_count);
  for (std::size_t i = 0; i < relators.size(); ++i)
    for (int g : relators[i]) m(i, static_cast<std::size_t>(std::abs(g) - 1)) += g > 0 ? 1 : -1;
  return m;
}

AbelianGroup GroupPresentation::abelianization() const { return cokernel(abelianization_matrix()); }

GroupPresentation wirtinger(const KnotDiagram& d) {
  GroupPresentation p;
  p.generator_count = d.strand_count();
  for (const auto& c : d.crossing_strands()) {
    const int o = c.over + 1, a = c.under_in + 1, out = c.under_out + 1;
    if (c.sign > 0)
      p.relators.push_back({-o, a, o, -out});
    else
      p.relators.push_back({o, a, -o, -out});
  }
  return p;
}

}  // namespace dihedralsig
