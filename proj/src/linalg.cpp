#include "dihedralsig/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dihedralsig/errors.hpp"

namespace dihedralsig {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InputError("matrix product: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum: dimension mismatch");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

std::vector<std::vector<std::string>> IntMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).str();
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Reduces A in place to Smith form. When tracking, U and V are maintained so
// that the original matrix always equals U * A * V.
template <bool Track>
void smith_reduce(IntMatrix& A, IntMatrix* U, IntMatrix* V) {
  const std::size_t rows = A.rows();
  const std::size_t cols = A.cols();
  const std::size_t steps = std::min(rows, cols);

  // row_i += c * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const Integer& c, std::size_t from) {
    for (std::size_t k = from; k < cols; ++k)
      if (A(j, k) != 0) A(i, k) += c * A(j, k);
    if constexpr (Track) {
      for (std::size_t k = 0; k < rows; ++k)
        if ((*U)(k, i) != 0) (*U)(k, j) -= c * (*U)(k, i);
    }
  };
  // col_i += c * col_j
  auto add_col = [&](std::size_t i, std::size_t j, const Integer& c, std::size_t from) {
    for (std::size_t k = from; k < rows; ++k)
      if (A(k, j) != 0) A(k, i) += c * A(k, j);
    if constexpr (Track) {
      for (std::size_t k = 0; k < cols; ++k)
        if ((*V)(i, k) != 0) (*V)(j, k) -= c * (*V)(i, k);
    }
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    if constexpr (Track) U->swap_cols(a, b);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    if constexpr (Track) V->swap_rows(a, b);
  };

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest |entry| in the trailing block; row-major scan gives the
      // lowest-index tie break, and a unit cannot be beaten.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows && !(pi < rows && best == 1); ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Integer& v = A(i, j);
          if (v == 0) continue;
          Integer av = abs(v);
          if (pi == rows || av < best) {
            best = std::move(av);
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
      if (pi == rows) return;  // trailing block is zero
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      const Integer pivot = A(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (A(i, t) == 0) continue;
        const Integer q = A(i, t) / pivot;
        if (q != 0) add_row(i, t, -q, t);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (A(t, j) == 0) continue;
        const Integer q = A(t, j) / pivot;
        if (q != 0) add_col(j, t, -q, t);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      const bool unit = pivot == 1 || pivot == -1;
      for (std::size_t i = t + 1; i < rows && divisible && !unit; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (A(i, j) % pivot != 0) {
            add_row(t, i, Integer(1), t);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (A(t, t) < 0) {
      for (std::size_t k = t; k < cols; ++k) A(t, k) = -A(t, k);
      if constexpr (Track)
        for (std::size_t k = 0; k < rows; ++k) (*U)(k, t) = -(*U)(k, t);
    }
  }
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& A) {
  SmithForm s{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols())};
  smith_reduce<true>(s.D, &s.U, &s.V);
  return s;
}

std::vector<Integer> smith_invariants(IntMatrix A) {
  smith_reduce<false>(A, nullptr, nullptr);
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i) d.push_back(A(i, i));
  return d;
}

Integer AbelianGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianGroup cokernel(const IntMatrix& A) {
  AbelianGroup g;
  const auto d = smith_invariants(A);
  std::size_t nonzero = 0;
  for (const auto& v : d) {
    if (v == 0) continue;
    ++nonzero;
    if (v > 1) g.torsion.push_back(v);
  }
  g.rank = A.cols() - nonzero;
  return g;
}

// ---------------------------------------------------------------------------
// Modular kernels

namespace {

// Reduced row echelon form over Z_q in place; returns pivot columns.
std::vector<std::size_t> rref_mod(std::vector<std::vector<std::int64_t>>& m, std::size_t cols, std::int64_t q) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const std::int64_t inv = mod_inverse(m[r][c], q);
    for (auto& v : m[r]) v = (v * inv) % q;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = mod_floor(m[i][k] - f * m[r][k], q);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<std::int64_t>> kernel_mod_prime(const IntMatrix& A, std::int64_t q) {
  const std::size_t cols = A.cols();
  std::vector<std::vector<std::int64_t>> m(A.rows(), std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod_floor(A(i, j), q);
  const auto pivots = rref_mod(m, cols, q);

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::int64_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod_floor(-m[r][f], q);
    basis.push_back(std::move(v));
  }
  rref_mod(basis, cols, q);
  return basis;
}

ModKernel kernel_mod_p(const IntMatrix& A, std::int64_t p) {
  require_odd_square_free(p);
  ModKernel k;
  k.modulus = p;
  k.length = A.cols();
  for (std::int64_t q : prime_factors(p)) k.components.push_back({q, kernel_mod_prime(A, q)});
  return k;
}

Integer ModKernel::count() const {
  Integer n = 1;
  for (const auto& c : components) n *= boost::multiprecision::pow(Integer(c.prime), static_cast<unsigned>(c.basis.size()));
  return n;
}

std::vector<std::vector<std::int64_t>> ModKernel::elements() const {
  // All solutions per prime, then CRT-combined.
  std::vector<std::vector<std::vector<std::int64_t>>> per_prime;
  for (const auto& c : components) {
    std::vector<std::vector<std::int64_t>> sols{std::vector<std::int64_t>(length, 0)};
    for (const auto& b : c.basis) {
      std::vector<std::vector<std::int64_t>> next;
      next.reserve(sols.size() * static_cast<std::size_t>(c.prime));
      for (const auto& s : sols)
        for (std::int64_t a = 0; a < c.prime; ++a) {
          auto v = s;
          for (std::size_t i = 0; i < length; ++i) v[i] = (v[i] + a * b[i]) % c.prime;
          next.push_back(std::move(v));
        }
      sols = std::move(next);
    }
    per_prime.push_back(std::move(sols));
  }

  std::vector<std::int64_t> weight;
  for (const auto& c : components) {
    const std::int64_t rest = modulus / c.prime;
    weight.push_back(rest * mod_inverse(rest % c.prime, c.prime) % modulus);
  }

  std::vector<std::vector<std::int64_t>> out{std::vector<std::int64_t>(length, 0)};
  for (std::size_t ci = 0; ci < per_prime.size(); ++ci) {
    std::vector<std::vector<std::int64_t>> next;
    next.reserve(out.size() * per_prime[ci].size());
    for (const auto& acc : out)
      for (const auto& s : per_prime[ci]) {
        auto v = acc;
        for (std::size_t i = 0; i < length; ++i) v[i] = (v[i] + s[i] * weight[ci]) % modulus;
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian forms

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& H) {
  const std::size_t n = H.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(H(i, j) - std::conj(H(j, i))) > H.tolerance)
        throw InputError("matrix is not Hermitian within tolerance");
  if (n == 0) return {};

  const std::size_t m = 2 * n;
  std::vector<double> a(m * m);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * m + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = H(i, j).real(), im = H(i, j).imag();
      at(i, j) = re;
      at(i + n, j + n) = re;
      at(i, j + n) = -im;
      at(i + n, j) = im;
    }

  double total = 0;
  for (double v : a) total += v * v;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j) off += at(i, j) * at(i, j);
    if (off <= 1e-30 * std::max(total, 1.0)) break;
    for (std::size_t p = 0; p + 1 < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double kp = at(k, p), kq = at(k, q);
          at(k, p) = c * kp - s * kq;
          at(k, q) = s * kp + c * kq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double pk = at(p, k), qk = at(q, k);
          at(p, k) = c * pk - s * qk;
          at(q, k) = s * pk + c * qk;
        }
      }
  }
  std::vector<double> ev(m);
  for (std::size_t i = 0; i < m; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  // The real embedding doubles every eigenvalue.
  std::vector<double> out;
  for (std::size_t i = 0; i < m; i += 2) out.push_back(0.5 * (ev[i] + ev[i + 1]));
  return out;
}

int hermitian_signature(const HermitianMatrix& H) {
  int sig = 0;
  for (double v : hermitian_eigenvalues(H)) {
    if (std::abs(v) < H.tolerance)
      throw IndeterminateError("Hermitian form is degenerate at working precision (eigenvalue " +
                               std::to_string(v) + ")");
    sig += v > 0 ? 1 : -1;
  }
  return sig;
}

}  // namespace dihedralsig
