#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "dihedralsig/integer.hpp"

namespace dihedralsig {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& rhs) const = default;

  /// Exact determinant by fraction-free (Bareiss) elimination. Square only.
  Integer determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// A = U * D * V with U, V unimodular and D diagonal, d1 | d2 | ... , di >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// Diagonal of the Smith form only; skips the transform bookkeeping.
std::vector<Integer> smith_invariants(IntMatrix A);

/// Finitely generated abelian group Z^rank + Z/t1 + ... with t1 | t2 | ...
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool finite() const { return rank == 0; }
  /// Order of the torsion subgroup (1 for torsion-free).
  Integer torsion_order() const;
  std::string to_string() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// Z^cols modulo the row space of A (rows are relations, columns generators).
AbelianGroup cokernel(const IntMatrix& A);

/// Null space of A modulo one prime.
struct PrimeKernel {
  std::int64_t prime = 0;
  /// Reduced basis: each vector's leading entry is 1 and sits in a column where
  /// every other basis vector vanishes.
  std::vector<std::vector<std::int64_t>> basis;
};

/// Solutions of A x = 0 over Z_p for square-free odd p, one prime factor at a
/// time; the full solution set is the CRT product of the components.
struct ModKernel {
  std::int64_t modulus = 0;
  std::size_t length = 0;
  std::vector<PrimeKernel> components;

  /// Total number of solutions over Z_p.
  Integer count() const;
  /// Every solution over Z_p, lexicographically sorted.
  std::vector<std::vector<std::int64_t>> elements() const;
};

ModKernel kernel_mod_p(const IntMatrix& A, std::int64_t p);

/// Null-space basis over a single prime field.
std::vector<std::vector<std::int64_t>> kernel_mod_prime(const IntMatrix& A, std::int64_t q);

/// Complex square matrix that is expected to be Hermitian.
struct HermitianMatrix {
  std::size_t n = 0;
  std::vector<std::complex<double>> entries;
  double tolerance = 1e-9;

  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t size, double tol = 1e-9)
      : n(size), entries(size * size), tolerance(tol) {}

  std::complex<double>& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// Eigenvalues (ascending) by cyclic Jacobi rotation on the real symmetric
/// 2n x 2n embedding [[Re, -Im], [Im, Re]]; each value is reported once.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& H);

/// #positive - #negative eigenvalues. Throws IndeterminateError if an
/// eigenvalue lies within the tolerance of zero.
int hermitian_signature(const HermitianMatrix& H);

}  // namespace dihedralsig
