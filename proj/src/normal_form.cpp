#include "sfh/normal_form.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace sfh {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  assert(v.size() == cols_);
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  assert(cols_ == other.rows_);
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (sgn((*this)(r, src)) != 0) (*this)(r, dst) += factor * (*this)(r, src);
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn((*this)(src, c)) != 0) (*this)(dst, c) += factor * (*this)(src, c);
  }
}

void IntMatrix::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

namespace {

Integer truncated_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& a) {
  ColumnEchelon out;
  out.echelon = a;
  out.transform = IntMatrix::identity(a.cols());
  IntMatrix& h = out.echelon;
  IntMatrix& u = out.transform;
  const std::size_t cols = a.cols();
  std::size_t k = 0;

  for (std::size_t i = 0; i < a.rows() && k < cols; ++i) {
    while (true) {
      // Euclid across row i: bring the smallest nonzero entry to column k.
      std::size_t best = cols;
      for (std::size_t j = k; j < cols; ++j) {
        if (sgn(h(i, j)) == 0) continue;
        if (best == cols || mpz_cmpabs(h(i, j).get_mpz_t(), h(i, best).get_mpz_t()) < 0) best = j;
      }
      if (best == cols) break;
      h.swap_columns(k, best);
      u.swap_columns(k, best);
      bool cleared = true;
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (sgn(h(i, j)) == 0) continue;
        Integer q = truncated_quotient(h(i, j), h(i, k));
        h.add_column_multiple(j, k, -q);
        u.add_column_multiple(j, k, -q);
        if (sgn(h(i, j)) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (sgn(h(i, k)) != 0) {
      if (sgn(h(i, k)) < 0) {
        h.negate_column(k);
        u.negate_column(k);
      }
      out.pivot_rows.push_back(i);
      ++k;
    }
  }
  out.rank = k;
  return out;
}

std::optional<IntVector> solve_integer(const ColumnEchelon& form, const IntVector& b) {
  const IntMatrix& h = form.echelon;
  assert(b.size() == h.rows());
  IntVector z(h.cols());
  for (std::size_t j = 0; j < form.rank; ++j) {
    const std::size_t p = form.pivot_rows[j];
    Integer rest = b[p];
    for (std::size_t l = 0; l < j; ++l) rest -= h(p, l) * z[l];
    if (!mpz_divisible_p(rest.get_mpz_t(), h(p, j).get_mpz_t())) return std::nullopt;
    z[j] = rest / h(p, j);
  }
  if (h * z != b) return std::nullopt;
  return form.transform * z;
}

std::vector<IntVector> hermite_basis(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  ColumnEchelon form = column_echelon(IntMatrix::from_columns(n, vectors));
  IntMatrix& h = form.echelon;
  for (std::size_t j = 0; j < form.rank; ++j) {
    const std::size_t p = form.pivot_rows[j];
    for (std::size_t l = 0; l < j; ++l) {
      Integer q = floor_quotient(h(p, l), h(p, j));
      h.add_column_multiple(l, j, -q);
    }
  }
  std::vector<IntVector> basis;
  basis.reserve(form.rank);
  for (std::size_t j = 0; j < form.rank; ++j) basis.push_back(h.column(j));
  return basis;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  ColumnEchelon form = column_echelon(a);
  std::vector<IntVector> kernel;
  for (std::size_t j = form.rank; j < a.cols(); ++j) kernel.push_back(form.transform.column(j));
  return hermite_basis(kernel);
}

SmithForm smith_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix left = IntMatrix::identity(a.rows());
  IntMatrix right = IntMatrix::identity(a.cols());
  const std::size_t limit = std::min(a.rows(), a.cols());
  IntVector diagonal;

  auto bring_min_to = [&](std::size_t t, bool whole_block) {
    std::size_t br = a.rows(), bc = a.cols();
    for (std::size_t r = t; r < a.rows(); ++r) {
      for (std::size_t c = t; c < a.cols(); ++c) {
        if (!whole_block && r != t && c != t) continue;
        if (sgn(d(r, c)) == 0) continue;
        if (br == a.rows() || mpz_cmpabs(d(r, c).get_mpz_t(), d(br, bc).get_mpz_t()) < 0) {
          br = r;
          bc = c;
        }
      }
    }
    if (br == a.rows()) return false;
    d.swap_rows(t, br);
    left.swap_rows(t, br);
    d.swap_columns(t, bc);
    right.swap_columns(t, bc);
    return true;
  };

  for (std::size_t t = 0; t < limit; ++t) {
    if (!bring_min_to(t, true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (sgn(d(r, t)) == 0) continue;
        Integer q = truncated_quotient(d(r, t), d(t, t));
        d.add_row_multiple(r, t, -q);
        left.add_row_multiple(r, t, -q);
        if (sgn(d(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (sgn(d(t, c)) == 0) continue;
        Integer q = truncated_quotient(d(t, c), d(t, t));
        d.add_column_multiple(c, t, -q);
        right.add_column_multiple(c, t, -q);
        if (sgn(d(t, c)) != 0) clean = false;
      }
      if (!clean) {
        bring_min_to(t, false);
        continue;
      }
      // The pivot must divide the remaining block; otherwise fold an
      // offending row into row t and keep reducing.
      std::size_t bad_row = a.rows();
      for (std::size_t r = t + 1; r < a.rows() && bad_row == a.rows(); ++r) {
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == a.rows()) break;
      d.add_row_multiple(t, bad_row, 1);
      left.add_row_multiple(t, bad_row, 1);
    }
    if (sgn(d(t, t)) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
    diagonal.push_back(d(t, t));
  }
  return SmithForm{std::move(diagonal), std::move(left), std::move(right)};
}

Integer gcd_of(const IntVector& values) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

}  // namespace sfh
