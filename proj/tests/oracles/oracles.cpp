#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <functional>
#include <map>
#include <boost/multiprecision/integer.hpp>

#include "dihedralsig/errors.hpp"

namespace oracle {

using dihedralsig::Rational;

namespace {

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly add(const Poly& a, const Poly& b, int sign = 1) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
  return trim(r);
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

Poly exact_div(Poly a, const Poly& b) {
  a = trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
  Poly q(a.size() - b.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Integer& lead = a[i + b.size() - 1];
    if (lead % b.back() != 0) throw std::logic_error("inexact polynomial division");
    q[i] = lead / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  if (!trim(a).empty()) throw std::logic_error("inexact polynomial division");
  return trim(q);
}

std::vector<std::int64_t> distinct_primes(std::int64_t p) {
  auto f = dihedralsig::prime_factors(p);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

int canonical_sign(const dihedralsig::PdCrossing& x, int edges) {
  return x[1] == x[3] % edges + 1 ? 1 : -1;
}

}  // namespace

std::vector<Integer> gcd_of_minors(const IntMatrix& A) {
  const std::size_t r = std::min(A.rows(), A.cols());
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    combinations(A.rows(), k, [&](const std::vector<std::size_t>& rows) {
      combinations(A.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = A(rows[i], cols[j]);
        g = boost::multiprecision::gcd(g, sub.determinant());
      });
    });
    if (g < 0) g = -g;
    if (g == 0 || prev == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

Strands strands_by_union(const dihedralsig::KnotDiagram& d) {
  const int edges = static_cast<int>(2 * d.crossing_count());
  Strands s;
  if (edges == 0) {
    s.edge_strand = {0, 0};
    s.count = 1;
    return s;
  }
  std::vector<int> parent(static_cast<std::size_t>(edges + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x
                                                    : parent[static_cast<std::size_t>(x)] =
                                                          find(parent[static_cast<std::size_t>(x)]);
  };
  for (const auto& x : d.crossings()) parent[static_cast<std::size_t>(find(x[1]))] = find(x[3]);
  std::map<int, int> ids;
  s.edge_strand.assign(static_cast<std::size_t>(edges + 1), -1);
  for (int e = 1; e <= edges; ++e) {
    auto [it, fresh] = ids.emplace(find(e), static_cast<int>(ids.size()));
    s.edge_strand[static_cast<std::size_t>(e)] = it->second;
  }
  s.count = static_cast<int>(ids.size());
  return s;
}

ColoringCount brute_force_colorings(const dihedralsig::KnotDiagram& d, std::int64_t p) {
  const Strands s = strands_by_union(d);
  const auto primes = distinct_primes(p);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(s.count), 0);
  ColoringCount out;
  while (true) {
    bool ok = true;
    for (const auto& x : d.crossings()) {
      const auto a = labels[static_cast<std::size_t>(s.edge_strand[static_cast<std::size_t>(x[0])])];
      const auto b = labels[static_cast<std::size_t>(s.edge_strand[static_cast<std::size_t>(x[1])])];
      const auto c = labels[static_cast<std::size_t>(s.edge_strand[static_cast<std::size_t>(x[2])])];
      if ((a + c - 2 * b) % p != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++out.total;
      bool surj = true;
      for (auto q : primes) {
        bool constant = true;
        for (auto l : labels)
          if ((l - labels[0]) % q != 0) constant = false;
        if (constant) surj = false;
      }
      if (surj) ++out.surjective;
    }
    std::size_t i = 0;
    while (i < labels.size() && ++labels[i] == p) labels[i++] = 0;
    if (i == labels.size()) break;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> exhaustive_kernel(const IntMatrix& A, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(A.cols(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < A.rows() && ok; ++i) {
      Integer v = 0;
      for (std::size_t j = 0; j < A.cols(); ++j) v += A(i, j) * x[j];
      if (v % p != 0) ok = false;
    }
    if (ok) out.push_back(x);
    std::size_t i = x.size();
    while (i > 0 && ++x[i - 1] == p) x[--i] = 0;
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poly poly_determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  Poly prev{1};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (trim(m[k][k]).empty()) {
      std::size_t r = k + 1;
      while (r < n && trim(m[r][k]).empty()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(add(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]), -1), prev);
    prev = m[k][k];
  }
  Poly r = trim(m[n - 1][n - 1]);
  if (sign < 0)
    for (auto& c : r) c = -c;
  return r;
}

Poly normalize(Poly f) {
  f = trim(f);
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == 0) ++lead;
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  if (!f.empty() && f[0] < 0)
    for (auto& c : f) c = -c;
  return f;
}

Integer evaluate(const Poly& f, const Integer& t) {
  Integer v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * t + f[i];
  return v;
}

Poly fox_alexander(const dihedralsig::KnotDiagram& d) {
  if (d.is_unknot()) return {1};
  const Strands s = strands_by_union(d);
  const int edges = static_cast<int>(2 * d.crossing_count());
  const std::size_t n = static_cast<std::size_t>(s.count);
  std::vector<std::vector<Poly>> m(d.crossing_count(), std::vector<Poly>(n));
  for (std::size_t r = 0; r < d.crossing_count(); ++r) {
    const auto& x = d.crossings()[r];
    const auto k = static_cast<std::size_t>(s.edge_strand[static_cast<std::size_t>(x[1])]);
    const auto i = static_cast<std::size_t>(s.edge_strand[static_cast<std::size_t>(x[0])]);
    const auto j = static_cast<std::size_t>(s.edge_strand[static_cast<std::size_t>(x[2])]);
    if (canonical_sign(x, edges) > 0) {
      m[r][k] = add(m[r][k], Poly{-1, 1});
      m[r][i] = add(m[r][i], Poly{1});
      m[r][j] = add(m[r][j], Poly{0, -1});
    } else {
      m[r][k] = add(m[r][k], Poly{1, -1});
      m[r][i] = add(m[r][i], Poly{0, 1});
      m[r][j] = add(m[r][j], Poly{-1});
    }
  }
  std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1));
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) minor[r][c] = m[r][c];
  return normalize(poly_determinant(minor));
}

Poly seifert_alexander(const IntMatrix& L) {
  const std::size_t n = L.rows();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = trim(Poly{L(i, j), -L(j, i)});
  return normalize(poly_determinant(m));
}

int exact_signature(const IntMatrix& S) {
  const std::size_t n = S.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(S(i, j));
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][piv] == 0) ++piv;
    if (piv == n) {
      std::size_t i = n, j = n;
      for (std::size_t r = k; r < n && i == n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
          if (a[r][c] != 0) {
            i = r;
            j = c;
            break;
          }
      if (i == n) break;
      for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
      for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
      piv = i;
    }
    std::swap(a[piv], a[k]);
    for (auto& row : a) std::swap(row[piv], row[k]);
    const Rational d = a[k][k];
    sig += d > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / d;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = 0;
  }
  return sig;
}

int gordon_litherland(const dihedralsig::KnotDiagram& d) {
  if (d.is_unknot()) return 0;
  const auto cb = dihedralsig::checkerboard(d);
  const int edges = static_cast<int>(2 * d.crossing_count());
  int mu = 0;
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    const bool odd_white = cb.white[static_cast<std::size_t>(cb.corner_face[4 * x + 1])];
    const bool positive = canonical_sign(d.crossings()[x], edges) > 0;
    if (positive != odd_white) mu += cb.eta[x];
  }
  return exact_signature(cb.goeritz) - mu;
}

std::vector<std::vector<std::vector<std::int64_t>>> brute_force_metabolizers(const dihedralsig::LinkingForm& lf) {
  std::vector<std::int64_t> mod;
  for (const auto& t : lf.group.torsion) mod.push_back(static_cast<std::int64_t>(t));
  std::vector<std::vector<std::int64_t>> elems{{}};
  for (auto m : mod) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& e : elems)
      for (std::int64_t v = 0; v < m; ++v) {
        auto f = e;
        f.push_back(v);
        next.push_back(f);
      }
    elems = next;
  }
  const auto order = static_cast<std::int64_t>(elems.size());
  auto span = [&](const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    std::set<std::vector<std::int64_t>> out;
    const std::int64_t e = mod.empty() ? 1 : mod.back();
    for (std::int64_t a = 0; a < e; ++a)
      for (std::int64_t b = 0; b < e; ++b) {
        std::vector<std::int64_t> z(mod.size());
        for (std::size_t i = 0; i < mod.size(); ++i) z[i] = ((a * x[i] + b * y[i]) % mod[i] + mod[i]) % mod[i];
        out.insert(z);
      }
    return std::vector<std::vector<std::int64_t>>(out.begin(), out.end());
  };
  std::set<std::vector<std::vector<std::int64_t>>> found;
  for (const auto& x : elems)
    for (const auto& y : elems) {
      if (y < x) continue;
      auto h = span(x, y);
      const auto size = static_cast<std::int64_t>(h.size());
      if (size * size != order) continue;
      bool isotropic = true;
      for (const auto& u : h)
        for (const auto& v : h)
          if (lf.pair(u, v) != 0) isotropic = false;
      if (isotropic) found.insert(h);
    }
  return {found.begin(), found.end()};
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const auto i = pick(rng), j = pick(rng);
    if (i == j) {
      for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
      continue;
    }
    const int k = coef(rng);
    for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
  }
  return u;
}

dihedralsig::BraidWord random_knot_braid(std::mt19937_64& rng, int max_strands, int max_len) {
  std::uniform_int_distribution<int> strands(2, max_strands);
  while (true) {
    dihedralsig::BraidWord b;
    b.strands = strands(rng);
    std::uniform_int_distribution<int> len(b.strands - 1, max_len);
    std::uniform_int_distribution<int> gen(1, b.strands - 1);
    std::bernoulli_distribution flip(0.5);
    const int l = len(rng);
    for (int i = 0; i < l; ++i) b.letters.push_back(flip(rng) ? gen(rng) : -gen(rng));
    try {
      dihedralsig::validate_braid(b);
      dihedralsig::braid_closure(b);
      return b;
    } catch (const dihedralsig::InputError&) {
    }
  }
}

}  // namespace oracle
