#include "dihedralsig/surfaces.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <boost/multiprecision/integer.hpp>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix rational_inverse(const IntMatrix& A) {
  const std::size_t n = A.rows();
  RationalMatrix m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(A(i, j));
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InconsistencyError("singular Goeritz matrix");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

Rational frac_part(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  Integer r = num % den;
  if (r < 0) r += den;
  return Rational(r, den);
}

struct EdgeEnds {
  std::map<int, std::vector<std::pair<std::size_t, int>>> at;

  explicit EdgeEnds(const KnotDiagram& d) {
    const auto& xs = d.crossings();
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (int s = 0; s < 4; ++s) at[xs[i][s]].push_back({i, s});
  }

  std::pair<std::size_t, int> other(int label, std::size_t crossing, int slot) const {
    const auto& w = at.at(label);
    return w[0] == std::make_pair(crossing, slot) ? w[1] : w[0];
  }
};

}  // namespace

Checkerboard checkerboard(const KnotDiagram& d) {
  Checkerboard cb;
  const auto& xs = d.crossings();
  const std::size_t n = xs.size();
  if (n == 0) {
    cb.face_count = 2;
    cb.white = {true, false};
    cb.white_column = {-1, -1};
    cb.deleted_face = 0;
    return cb;
  }
  const EdgeEnds ends(d);

  cb.corner_face.assign(4 * n, -1);
  int faces = 0;
  for (std::size_t start = 0; start < 4 * n; ++start) {
    if (cb.corner_face[start] != -1) continue;
    std::size_t corner = start;
    while (cb.corner_face[corner] == -1) {
      cb.corner_face[corner] = faces;
      const std::size_t x = corner / 4;
      const int s = static_cast<int>(corner % 4);
      const int t = (s + 1) % 4;
      const auto [y, u] = ends.other(xs[x][t], x, t);
      corner = 4 * y + static_cast<std::size_t>(u);
    }
    if (corner != start) throw InconsistencyError("face traversal did not close up");
    ++faces;
  }
  cb.face_count = static_cast<std::size_t>(faces);

  std::vector<int> colour(cb.face_count, -1);
  colour[static_cast<std::size_t>(cb.corner_face[0])] = 1;
  std::deque<int> queue{cb.corner_face[0]};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (std::size_t c = 0; c < 4 * n; ++c) {
      if (cb.corner_face[c] != f) continue;
      const std::size_t x = c / 4;
      for (int step : {1, 3}) {
        const int g = cb.corner_face[4 * x + (c % 4 + static_cast<std::size_t>(step)) % 4];
        if (colour[static_cast<std::size_t>(g)] == -1) {
          colour[static_cast<std::size_t>(g)] = 1 - colour[static_cast<std::size_t>(f)];
          queue.push_back(g);
        } else if (colour[static_cast<std::size_t>(g)] == colour[static_cast<std::size_t>(f)]) {
          throw InconsistencyError("diagram faces are not two-colourable");
        }
      }
    }
  }
  cb.white.resize(cb.face_count);
  for (std::size_t f = 0; f < cb.face_count; ++f) cb.white[f] = colour[f] == 1;

  cb.deleted_face = cb.corner_face[0];
  cb.white_column.assign(cb.face_count, -1);
  int cols = 0;
  for (std::size_t f = 0; f < cb.face_count; ++f)
    if (cb.white[f] && static_cast<int>(f) != cb.deleted_face) cb.white_column[f] = cols++;

  std::vector<std::vector<Integer>> full(cb.face_count, std::vector<Integer>(cb.face_count));
  for (std::size_t x = 0; x < n; ++x) {
    const bool odd_white = cb.white[static_cast<std::size_t>(cb.corner_face[4 * x + 1])];
    const int eta = odd_white ? -1 : 1;
    cb.eta.push_back(eta);
    const int w = odd_white ? 1 : 0;
    const auto i = static_cast<std::size_t>(cb.corner_face[4 * x + static_cast<std::size_t>(w)]);
    const auto j = static_cast<std::size_t>(cb.corner_face[4 * x + static_cast<std::size_t>(w) + 2]);
    if (i == j) continue;
    full[i][j] -= eta;
    full[j][i] -= eta;
    full[i][i] += eta;
    full[j][j] += eta;
  }
  cb.goeritz = IntMatrix(static_cast<std::size_t>(cols), static_cast<std::size_t>(cols));
  for (std::size_t f = 0; f < cb.face_count; ++f) {
    if (cb.white_column[f] < 0) continue;
    for (std::size_t g = 0; g < cb.face_count; ++g) {
      if (cb.white_column[g] < 0) continue;
      cb.goeritz(static_cast<std::size_t>(cb.white_column[f]), static_cast<std::size_t>(cb.white_column[g])) =
          full[f][g];
    }
  }
  return cb;
}

IntMatrix goeritz_matrix(const KnotDiagram& d) { return checkerboard(d).goeritz; }

Integer determinant(const KnotDiagram& d) {
  Integer det = goeritz_matrix(d).determinant();
  return det < 0 ? Integer(-det) : det;
}

AbelianGroup double_cover_homology(const KnotDiagram& d) { return cokernel(goeritz_matrix(d)); }

Rational LinkingForm::pair(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
  Rational total = 0;
  for (std::size_t i = 0; i < form.size(); ++i)
    for (std::size_t j = 0; j < form.size(); ++j) total += Rational(x[i] * y[j]) * form[i][j];
  return frac_part(total);
}

LinkingForm linking_form(const KnotDiagram& d) {
  const IntMatrix G = goeritz_matrix(d);
  LinkingForm lf;
  if (G.rows() == 0) return lf;
  const SmithForm snf = smith_normal_form(G);
  const auto diag = snf.diagonal();
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 0) throw InconsistencyError("singular Goeritz matrix");
    if (diag[i] > 1) {
      torsion_rows.push_back(i);
      lf.group.torsion.push_back(diag[i]);
    }
  }
  const auto inv = rational_inverse(G);
  for (auto i : torsion_rows) {
    std::vector<Integer> g(G.cols());
    for (std::size_t j = 0; j < G.cols(); ++j) g[j] = snf.V(i, j);
    lf.generators.push_back(std::move(g));
  }
  const std::size_t k = torsion_rows.size();
  lf.form.assign(k, std::vector<Rational>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Rational v = 0;
      for (std::size_t i = 0; i < G.cols(); ++i)
        for (std::size_t j = 0; j < G.cols(); ++j)
          v += Rational(lf.generators[a][i] * lf.generators[b][j]) * inv[i][j];
      lf.form[a][b] = frac_part(v);
    }
  return lf;
}

std::vector<Metabolizer> metabolizers(const LinkingForm& lf, std::int64_t budget) {
  const Integer order_big = lf.order();
  if (order_big > budget)
    throw InputError("H_1 order " + order_big.str() + " exceeds the metabolizer enumeration budget " +
                     std::to_string(budget));
  const auto order = static_cast<std::int64_t>(order_big);
  const auto root = static_cast<std::int64_t>(boost::multiprecision::sqrt(order_big));
  if (root * root != order) return {};

  const std::size_t k = lf.group.torsion.size();
  std::vector<std::int64_t> mod(k), stride(k);
  for (std::size_t i = 0; i < k; ++i) mod[i] = static_cast<std::int64_t>(lf.group.torsion[i]);
  std::int64_t s = 1;
  for (std::size_t i = k; i-- > 0;) {
    stride[i] = s;
    s *= mod[i];
  }
  auto decode = [&](std::int64_t idx) {
    std::vector<std::int64_t> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = (idx / stride[i]) % mod[i];
    return v;
  };
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx += mod_floor(v[i], mod[i]) * stride[i];
    return idx;
  };
  auto add = [&](std::int64_t a, std::int64_t b) {
    auto va = decode(a), vb = decode(b);
    for (std::size_t i = 0; i < k; ++i) va[i] += vb[i];
    return encode(va);
  };

  std::vector<std::vector<std::int64_t>> elems(static_cast<std::size_t>(order));
  for (std::int64_t i = 0; i < order; ++i) elems[static_cast<std::size_t>(i)] = decode(i);
  std::vector<bool> isotropic(static_cast<std::size_t>(order));
  for (std::int64_t i = 0; i < order; ++i)
    isotropic[static_cast<std::size_t>(i)] =
        lf.pair(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(i)]) == 0;

  auto extend = [&](const std::vector<std::int64_t>& group, std::int64_t x) {
    std::set<std::int64_t> out(group.begin(), group.end());
    std::vector<std::int64_t> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
      std::vector<std::int64_t> next;
      for (auto h : frontier) {
        const auto y = add(h, x);
        if (out.insert(y).second) next.push_back(y);
      }
      frontier = std::move(next);
    }
    return std::vector<std::int64_t>(out.begin(), out.end());
  };

  std::set<std::vector<std::int64_t>> seen, found;
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> stack;
  stack.push_back({{0}, {}});
  seen.insert({0});
  while (!stack.empty()) {
    auto [group, gens] = stack.back();
    stack.pop_back();
    const auto size = static_cast<std::int64_t>(group.size());
    if (size * size == order) {
      found.insert(group);
      continue;
    }
    for (std::int64_t x = 1; x < order; ++x) {
      if (!isotropic[static_cast<std::size_t>(x)]) continue;
      if (std::binary_search(group.begin(), group.end(), x)) continue;
      bool orthogonal = true;
      for (auto g : gens)
        if (lf.pair(elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(g)]) != 0) {
          orthogonal = false;
          break;
        }
      if (!orthogonal) continue;
      auto bigger = extend(group, x);
      const auto bs = static_cast<std::int64_t>(bigger.size());
      if (bs * bs > order || !seen.insert(bigger).second) continue;
      auto more = gens;
      more.push_back(x);
      stack.push_back({std::move(bigger), std::move(more)});
    }
  }

  std::vector<Metabolizer> out;
  for (const auto& group : found) {
    Metabolizer m;
    std::vector<std::int64_t> span{0};
    for (auto x : group) {
      m.elements.push_back(elems[static_cast<std::size_t>(x)]);
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      m.generators.push_back(elems[static_cast<std::size_t>(x)]);
      span = extend(span, x);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::int64_t> coloring_character(const Coloring& c, const KnotDiagram& d) {
  const Checkerboard cb = checkerboard(d);
  if (d.is_unknot()) return {};
  const auto& xs = d.crossings();
  const std::int64_t p = c.p;
  struct Link {
    int other;
    std::int64_t twice_label;
  };
  std::vector<std::vector<Link>> adj(cb.face_count);
  for (std::size_t x = 0; x < xs.size(); ++x)
    for (int s = 0; s < 4; ++s) {
      const int a = cb.corner_face[4 * x + static_cast<std::size_t>((s + 3) % 4)];
      const int b = cb.corner_face[4 * x + static_cast<std::size_t>(s)];
      const std::int64_t twice = 2 * c.labels[static_cast<std::size_t>(d.strand_of_edge(xs[x][s]))];
      adj[static_cast<std::size_t>(a)].push_back({b, twice});
      adj[static_cast<std::size_t>(b)].push_back({a, twice});
    }
  std::vector<std::int64_t> region(cb.face_count, -1);
  region[static_cast<std::size_t>(cb.deleted_face)] = 0;
  std::deque<int> queue{cb.deleted_face};
  while (!queue.empty()) {
    const auto f = static_cast<std::size_t>(queue.front());
    queue.pop_front();
    for (const auto& l : adj[f]) {
      const std::int64_t want = mod_floor(l.twice_label - region[f], p);
      auto& r = region[static_cast<std::size_t>(l.other)];
      if (r == -1) {
        r = want;
        queue.push_back(l.other);
      } else if (r != want) {
        throw InconsistencyError("labels do not extend to a region coloring");
      }
    }
  }
  std::vector<std::int64_t> chi(cb.goeritz.cols());
  for (std::size_t f = 0; f < cb.face_count; ++f)
    if (cb.white_column[f] >= 0) chi[static_cast<std::size_t>(cb.white_column[f])] = region[f];
  return chi;
}

std::vector<std::int64_t> character_on_generators(const std::vector<std::int64_t>& character,
                                                  const LinkingForm& lf, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (const auto& g : lf.generators) {
    Integer v = 0;
    for (std::size_t j = 0; j < g.size(); ++j) v += g[j] * character[j];
    out.push_back(mod_floor(v, p));
  }
  return out;
}

bool coloring_passes_metabolizer_filter(const Coloring& c, const KnotDiagram& d) {
  if (!labels_surjective(c.labels, c.p)) throw InputError("metabolizer filter needs a surjective coloring");
  const LinkingForm lf = linking_form(d);
  const auto ms = metabolizers(lf);
  if (ms.empty()) return false;
  const auto chi = character_on_generators(coloring_character(c, d), lf, c.p);
  for (const auto& m : ms) {
    bool vanishes = true;
    for (const auto& g : m.generators) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < g.size(); ++i) v = mod_floor(v + g[i] * chi[i], c.p);
      if (v != 0) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) return true;
  }
  return false;
}

SeifertData seifert_from_matrix(const IntMatrix& L) {
  if (L.rows() != L.cols() || L.rows() % 2 != 0)
    throw InputError("a knot Seifert matrix must be square of even size");
  const Integer u = (L + (-L.transpose())).determinant();
  if (u != 1 && u != -1) throw InputError("L - L^T is not unimodular; not a knot Seifert matrix");
  return {L, static_cast<int>(L.rows() / 2), L + L.transpose()};
}

SeifertData seifert_matrix(const BraidWord& b) {
  validate_braid(b);
  const int gens = b.strands - 1;
  std::vector<std::vector<int>> positions(static_cast<std::size_t>(gens));
  for (std::size_t i = 0; i < b.letters.size(); ++i)
    positions[static_cast<std::size_t>(std::abs(b.letters[i]) - 1)].push_back(static_cast<int>(i));

  struct Loop {
    int gen, first, second;
  };
  std::vector<Loop> loops;
  std::vector<std::vector<std::size_t>> by_gen(static_cast<std::size_t>(gens));
  for (int j = 0; j < gens; ++j) {
    const auto& pos = positions[static_cast<std::size_t>(j)];
    for (std::size_t t = 0; t + 1 < pos.size(); ++t) {
      by_gen[static_cast<std::size_t>(j)].push_back(loops.size());
      loops.push_back({j, pos[t], pos[t + 1]});
    }
  }
  auto sign = [&](int pos) { return b.letters[static_cast<std::size_t>(pos)] > 0 ? 1 : -1; };

  IntMatrix L(loops.size(), loops.size());
  for (std::size_t x = 0; x < loops.size(); ++x) L(x, x) = -(sign(loops[x].first) + sign(loops[x].second)) / 2;
  for (int j = 0; j < gens; ++j) {
    const auto& ids = by_gen[static_cast<std::size_t>(j)];
    for (std::size_t t = 0; t + 1 < ids.size(); ++t) {
      const std::size_t x = ids[t], y = ids[t + 1];
      if (sign(loops[x].second) > 0)
        L(x, y) = 1;
      else
        L(y, x) = -1;
    }
  }
  for (int j = 0; j + 1 < gens; ++j)
    for (auto x : by_gen[static_cast<std::size_t>(j)])
      for (auto y : by_gen[static_cast<std::size_t>(j + 1)]) {
        const int a = loops[x].first, bb = loops[x].second;
        const int c = loops[y].first, dd = loops[y].second;
        if (a < c && c < bb && bb < dd) L(x, y) += 1;
        if (c < a && a < dd && dd < bb) L(x, y) -= 1;
      }
  return {L, static_cast<int>(loops.size() / 2), L + L.transpose()};
}

}  // namespace dihedralsig
