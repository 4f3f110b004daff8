#pragma once

// Exact integer matrices and the Smith normal form.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace kkboot {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers. Zero-sized
/// dimensions are legal.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::size_t rows, std::size_t cols,
                            const std::vector<Integer> &diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  bool is_diagonal() const;
  IntMatrix transpose() const;
  IntMatrix column(std::size_t j) const;
  /// Horizontal concatenation; row counts must match.
  IntMatrix hcat(const IntMatrix &rhs) const;
  /// Exact determinant by fraction-free elimination; square matrices only.
  Integer determinant() const;

  // Elementary operations, used by the normal form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
  friend bool operator==(const IntMatrix &a, const IntMatrix &b);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V == diag(d), with d_i | d_{i+1} and d_i >= 0. d has
/// min(rows, cols) entries; trailing zeros mark rank deficiency.
/// U_inv is the inverse of U, kept because lattice computations need both.
struct SNFResult {
  std::vector<Integer> d;
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix V;

  std::size_t rank() const;
};

SNFResult smith_normal_form(const IntMatrix &m);

/// Columns form a basis of the integer kernel {x : M x = 0}. Each column is
/// normalized so that its first nonzero entry is positive.
IntMatrix kernel_basis(const IntMatrix &m);

/// Basis (as columns) of the lattice spanned by the columns of M.
IntMatrix column_lattice_basis(const IntMatrix &m);

} // namespace kkboot
