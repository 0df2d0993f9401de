#pragma once

// Dense matrices over an exact field (Rational or Quadratic) and the
// symmetric-elimination certificates built on them: PSD/rank with witness,
// exact linear solve, kernel bases, and an unpivoted LDL^T for PSD input.

#include <optional>
#include <utility>
#include <vector>

#include "seidelkit/numeric.hpp"
#include "seidelkit/quadratic.hpp"

namespace seidelkit {

template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat operator+(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }
  Mat operator*(const Mat& o) const {
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Mat scaled(const T& s) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
  }

  Mat transposed() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> r(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }

  template <typename U, typename F>
  Mat<U> map(F f) const {
    Mat<U> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

using IMat = Mat<Int>;
using QMat = Mat<Quadratic>;
using RMat = Mat<Rational>;

inline QMat to_field(const IMat& m) {
  return m.template map<Quadratic>([](const Int& x) { return Quadratic(Rational(x)); });
}
inline QMat to_field(const RMat& m) {
  return m.template map<Quadratic>([](const Rational& x) { return Quadratic(x); });
}

template <typename T>
inline T dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s(0);
  for (size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

template <typename T>
struct PsdCertificate {
  bool psd = false;
  int rank = 0;
  std::vector<T> witness;  // nonempty iff !psd; w^T M w < 0
};

// Symmetric pivoting LDL-style elimination. Pivot = largest remaining
// diagonal entry; a zero pivot requires its whole remaining row to vanish,
// otherwise a witness comes out of the indefinite 2x2 block.
template <typename T>
PsdCertificate<T> psd_status(const Mat<T>& m) {
  const int n = m.rows();
  Mat<T> w = m;
  // basis[i] tracks the congruence vector whose form value is w(i,i)
  std::vector<std::vector<T>> basis(n, std::vector<T>(n, T(0)));
  for (int i = 0; i < n; ++i) basis[i][i] = T(1);
  std::vector<bool> done(n, false);
  PsdCertificate<T> cert;
  for (int step = 0; step < n; ++step) {
    int piv = -1;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (piv < 0 || w(i, i) > w(piv, piv)) piv = i;
    }
    if (piv < 0) break;
    const T d = w(piv, piv);
    if (sign_of(d) < 0) {
      cert.psd = false;
      cert.witness = basis[piv];
      return cert;
    }
    if (sign_of(d) == 0) {
      // every remaining diagonal is <= 0
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        if (sign_of(w(i, i)) < 0) {
          cert.psd = false;
          cert.witness = basis[i];
          return cert;
        }
      }
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (done[j] || j == i) continue;
          if (!(w(i, j) == T(0))) {
            if (sign_of(w(i, i)) < 0) {
              cert.psd = false;
              cert.witness = basis[i];
              return cert;
            }
            if (sign_of(w(j, j)) < 0) {
              cert.psd = false;
              cert.witness = basis[j];
              return cert;
            }
            // both diagonals zero: (e_i + t e_j) with t = -sign(w_ij)
            T t = sign_of(w(i, j)) > 0 ? T(-1) : T(1);
            cert.psd = false;
            cert.witness = basis[i];
            for (int k = 0; k < n; ++k) cert.witness[k] = cert.witness[k] + t * basis[j][k];
            return cert;
          }
        }
      }
      cert.psd = true;
      return cert;  // all remaining entries vanish
    }
    // positive pivot: eliminate
    ++cert.rank;
    done[piv] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (w(i, piv) == T(0)) continue;
      T f = w(i, piv) / d;
      for (int j = 0; j < n; ++j) {
        if (done[j]) continue;
        w(i, j) = w(i, j) - f * w(piv, j);
      }
      w(i, piv) = T(0);
      for (int k = 0; k < n; ++k) basis[i][k] = basis[i][k] - f * basis[piv][k];
    }
    for (int j = 0; j < n; ++j)
      if (!done[j]) w(piv, j) = T(0);
  }
  cert.psd = true;
  return cert;
}

// Gaussian elimination; returns some x with M x = b, or nullopt when b is
// outside the column space.
template <typename T>
std::optional<std::vector<T>> solve_symmetric(const Mat<T>& m, const std::vector<T>& b) {
  const int n = m.rows(), cols = m.cols();
  Mat<T> a(n, cols + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < cols; ++j) a(i, j) = m(i, j);
    a(i, cols) = b[i];
  }
  std::vector<int> pivot_col(n, -1);
  int row = 0;
  for (int col = 0; col < cols && row < n; ++col) {
    int pr = -1;
    for (int i = row; i < n; ++i)
      if (!(a(i, col) == T(0))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j <= cols; ++j) std::swap(a(pr, j), a(row, j));
    T d = a(row, col);
    for (int i = 0; i < n; ++i) {
      if (i == row || a(i, col) == T(0)) continue;
      T f = a(i, col) / d;
      for (int j = col; j <= cols; ++j) a(i, j) = a(i, j) - f * a(row, j);
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int i = row; i < n; ++i)
    if (!(a(i, cols) == T(0))) return std::nullopt;
  std::vector<T> x(cols, T(0));
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = a(r, cols) / a(r, pivot_col[r]);
  return x;
}

template <typename T>
int rank_of(const Mat<T>& m) {
  Mat<T> a = m;
  const int n = a.rows(), cols = a.cols();
  int row = 0;
  for (int col = 0; col < cols && row < n; ++col) {
    int pr = -1;
    for (int i = row; i < n; ++i)
      if (!(a(i, col) == T(0))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < cols; ++j) std::swap(a(pr, j), a(row, j));
    T d = a(row, col);
    for (int i = row + 1; i < n; ++i) {
      if (a(i, col) == T(0)) continue;
      T f = a(i, col) / d;
      for (int j = col; j < cols; ++j) a(i, j) = a(i, j) - f * a(row, j);
    }
    ++row;
  }
  return row;
}

// Basis of { x : M x = 0 }.
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Mat<T>& m) {
  Mat<T> a = m;
  const int n = a.rows(), cols = a.cols();
  std::vector<int> pivot_of_col(cols, -1);
  int row = 0;
  for (int col = 0; col < cols && row < n; ++col) {
    int pr = -1;
    for (int i = row; i < n; ++i)
      if (!(a(i, col) == T(0))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < cols; ++j) std::swap(a(pr, j), a(row, j));
    T d = a(row, col);
    for (int i = 0; i < n; ++i) {
      if (i == row || a(i, col) == T(0)) continue;
      T f = a(i, col) / d;
      for (int j = col; j < cols; ++j) a(i, j) = a(i, j) - f * a(row, j);
    }
    pivot_of_col[col] = row;
    ++row;
  }
  std::vector<std::vector<T>> basis;
  for (int col = 0; col < cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<T> v(cols, T(0));
    v[col] = T(1);
    for (int c = 0; c < cols; ++c) {
      int r = pivot_of_col[c];
      if (r >= 0) v[c] = -(a(r, col) / a(r, c));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
struct LdlFactors {
  Mat<T> l;           // unit lower triangular
  std::vector<T> d;   // pivots, all >= 0
  int rank = 0;
};

// Unpivoted LDL^T, valid for PSD matrices only (a zero pivot forces the
// remaining row of the Schur complement to vanish). Throws on indefinite
// input.
template <typename T>
LdlFactors<T> ldl_psd(const Mat<T>& m) {
  const int n = m.rows();
  Mat<T> w = m;
  LdlFactors<T> f{Mat<T>::identity(n), std::vector<T>(n, T(0)), 0};
  for (int k = 0; k < n; ++k) {
    T d = w(k, k);
    int s = sign_of(d);
    if (s < 0) throw Error("ldl_psd: matrix is not PSD");
    f.d[k] = d;
    if (s == 0) {
      for (int j = k + 1; j < n; ++j)
        if (!(w(k, j) == T(0))) throw Error("ldl_psd: matrix is not PSD");
      continue;
    }
    ++f.rank;
    for (int i = k + 1; i < n; ++i) {
      T fac = w(i, k) / d;
      f.l(i, k) = fac;
      if (fac == T(0)) continue;
      for (int j = k; j < n; ++j) w(i, j) = w(i, j) - fac * w(k, j);
    }
  }
  return f;
}

}  // namespace seidelkit
