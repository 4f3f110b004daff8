#include "kkboot/linalg.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "kkboot/fg_group.hpp"

namespace kkboot {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : r)
      data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols,
                              const std::vector<Integer> &diag) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i)
    m(i, i) = diag[i];
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto &x : data_)
    if (x != 0)
      return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0)
        return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::column(std::size_t j) const {
  IntMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i)
    c(i, 0) = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::hcat(const IntMatrix &rhs) const {
  if (rows_ != rhs.rows_)
    throw std::invalid_argument("IntMatrix::hcat: row count mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j)
      out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

// Bareiss elimination.
Integer IntMatrix::determinant() const {
  if (rows_ != cols_)
    throw std::invalid_argument("IntMatrix::determinant: not square");
  const std::size_t n = rows_;
  if (n == 0)
    return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0)
        ++r;
      if (r == n)
        return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer &k) {
  if (k == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer &k) {
  if (k == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer &aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix &a, const IntMatrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  for (const auto &x : d)
    if (x != 0)
      ++r;
  return r;
}

namespace {

// Working state: every row operation on M is mirrored on U (left) and,
// inverted, on U_inv (right); every column operation is mirrored on V.
struct Reducer {
  IntMatrix M, U, Ui, V;

  explicit Reducer(const IntMatrix &m)
      : M(m), U(IntMatrix::identity(m.rows())), Ui(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())) {}

  void row_add(std::size_t dst, std::size_t src, const Integer &k) {
    M.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    Ui.add_col_multiple(src, dst, -k);
  }
  void row_swap(std::size_t a, std::size_t b) {
    M.swap_rows(a, b);
    U.swap_rows(a, b);
    Ui.swap_cols(a, b);
  }
  void row_negate(std::size_t r) {
    M.negate_row(r);
    U.negate_row(r);
    Ui.negate_col(r);
  }
  void col_add(std::size_t dst, std::size_t src, const Integer &k) {
    M.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
  }
  void col_swap(std::size_t a, std::size_t b) {
    M.swap_cols(a, b);
    V.swap_cols(a, b);
  }

  // Smallest nonzero |entry| in the trailing block; ties go to the first
  // position in row-major order.
  bool find_pivot(std::size_t t, std::size_t &pi, std::size_t &pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < M.rows(); ++i)
      for (std::size_t j = t; j < M.cols(); ++j) {
        const Integer &x = M(i, j);
        if (x == 0)
          continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  // Clears row t and column t beyond the pivot. Returns false if some
  // remainder survived, in which case a smaller pivot exists.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    const Integer p = M(t, t);
    for (std::size_t i = t + 1; i < M.rows(); ++i) {
      if (M(i, t) == 0)
        continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), M(i, t).get_mpz_t(), p.get_mpz_t());
      row_add(i, t, -q);
      if (M(i, t) != 0)
        clean = false;
    }
    for (std::size_t j = t + 1; j < M.cols(); ++j) {
      if (M(t, j) == 0)
        continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), M(t, j).get_mpz_t(), p.get_mpz_t());
      col_add(j, t, -q);
      if (M(t, j) != 0)
        clean = false;
    }
    return clean;
  }

  void run() {
    const std::size_t n = std::min(M.rows(), M.cols());
    for (std::size_t t = 0; t < n; ++t) {
      for (;;) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(t, pi, pj))
          return;
        row_swap(t, pi);
        col_swap(t, pj);
        if (!clear_cross(t))
          continue;
        // Pivot must divide the whole trailing block.
        bool divides = true;
        for (std::size_t i = t + 1; i < M.rows() && divides; ++i)
          for (std::size_t j = t + 1; j < M.cols(); ++j)
            if (!mpz_divisible_p(M(i, j).get_mpz_t(), M(t, t).get_mpz_t())) {
              row_add(t, i, 1);
              divides = false;
              break;
            }
        if (divides)
          break;
      }
      if (M(t, t) < 0)
        row_negate(t);
    }
  }
};

} // namespace

SNFResult smith_normal_form(const IntMatrix &m) {
  Reducer r(m);
  r.run();
  SNFResult out;
  const std::size_t n = std::min(m.rows(), m.cols());
  out.d.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.d.push_back(r.M(i, i));
  out.U = std::move(r.U);
  out.U_inv = std::move(r.Ui);
  out.V = std::move(r.V);
  return out;
}

IntMatrix kernel_basis(const IntMatrix &m) {
  SNFResult s = smith_normal_form(m);
  const std::size_t r = s.rank();
  const std::size_t k = m.cols() - r;
  IntMatrix basis(m.cols(), k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < m.cols(); ++i)
      basis(i, c) = s.V(i, r + c);
    for (std::size_t i = 0; i < m.cols(); ++i) {
      if (basis(i, c) == 0)
        continue;
      if (basis(i, c) < 0)
        basis.negate_col(c);
      break;
    }
  }
  return basis;
}

// U M V = D  =>  M = U_inv D V_inv, so col-span(M) = U_inv D Z^n, spanned
// by d_i * (column i of U_inv).
IntMatrix column_lattice_basis(const IntMatrix &m) {
  SNFResult s = smith_normal_form(m);
  const std::size_t r = s.rank();
  IntMatrix basis(m.rows(), r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t i = 0; i < m.rows(); ++i)
      basis(i, c) = s.U_inv(i, c) * s.d[c];
  return basis;
}

FGGroup cokernel_invariants(const IntMatrix &m) {
  SNFResult s = smith_normal_form(m);
  std::vector<Integer> factors;
  for (const auto &x : s.d)
    if (x >= 2)
      factors.push_back(x);
  return FGGroup::from_chain(m.rows() - s.rank(), std::move(factors));
}

} // namespace kkboot
