#include "eqlv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqlv {

Mat Mat::identity(FieldPtr F, int n) {
  Mat I(F, n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = F->one();
  return I;
}

Mat Mat::from_columns(FieldPtr F, int rows, const std::vector<std::vector<Elem>>& cols) {
  Mat M(F, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < M.cols(); ++j)
    for (int i = 0; i < rows; ++i) M.at(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return M;
}

std::vector<Elem> Mat::column(int j) const {
  std::vector<Elem> v(static_cast<std::size_t>(r_));
  for (int i = 0; i < r_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product: dimension mismatch");
  const Field& K = *F_;
  Mat R(F_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Elem a = at(i, k);
      if (a.v == 0) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Elem b = o.at(k, j);
        if (b.v) R.at(i, j) = K.add(R.at(i, j), K.mul(a, b));
      }
    }
  return R;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum: dimension mismatch");
  Mat R = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) R.a_[i] = F_->add(a_[i], o.a_[i]);
  return R;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix difference: dimension mismatch");
  Mat R = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) R.a_[i] = F_->sub(a_[i], o.a_[i]);
  return R;
}

std::vector<Elem> Mat::apply(const std::vector<Elem>& v) const {
  std::vector<Elem> r(static_cast<std::size_t>(r_), Elem{0});
  for (int i = 0; i < r_; ++i) {
    Elem s{0};
    for (int j = 0; j < c_; ++j) {
      const Elem a = at(i, j);
      if (a.v && v[static_cast<std::size_t>(j)].v) s = F_->add(s, F_->mul(a, v[static_cast<std::size_t>(j)]));
    }
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

Mat Mat::scale(Elem c) const {
  Mat R = *this;
  for (auto& x : R.a_) x = F_->mul(x, c);
  return R;
}

Mat Mat::transpose() const {
  Mat R(F_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) R.at(j, i) = at(i, j);
  return R;
}

Mat Mat::lift(const FieldPtr& big) const {
  Mat R = *this;
  R.F_ = big;
  return R;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](Elem e) { return e.v == 0; });
}

std::vector<int> rref(Mat& A) {
  const Field& K = *A.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < A.cols() && row < A.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < A.rows(); ++i)
      if (A.at(i, col).v) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < A.cols(); ++j) std::swap(A.at(piv, j), A.at(row, j));
    const Elem inv = K.inv(A.at(row, col));
    for (int j = col; j < A.cols(); ++j) A.at(row, j) = K.mul(A.at(row, j), inv);
    for (int i = 0; i < A.rows(); ++i) {
      if (i == row) continue;
      const Elem f = A.at(i, col);
      if (f.v == 0) continue;
      for (int j = col; j < A.cols(); ++j) A.at(i, j) = K.sub(A.at(i, j), K.mul(f, A.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Mat::rank() const {
  Mat A = *this;
  return static_cast<int>(rref(A).size());
}

Elem Mat::det() const {
  if (r_ != c_) throw std::invalid_argument("determinant of a non-square matrix");
  const Field& K = *F_;
  Mat A = *this;
  Elem d = K.one();
  for (int col = 0; col < r_; ++col) {
    int piv = -1;
    for (int i = col; i < r_; ++i)
      if (A.at(i, col).v) {
        piv = i;
        break;
      }
    if (piv < 0) return K.zero();
    if (piv != col) {
      for (int j = 0; j < c_; ++j) std::swap(A.at(piv, j), A.at(col, j));
      d = K.neg(d);
    }
    const Elem p = A.at(col, col);
    d = K.mul(d, p);
    const Elem inv = K.inv(p);
    for (int i = col + 1; i < r_; ++i) {
      const Elem f = K.mul(A.at(i, col), inv);
      if (f.v == 0) continue;
      for (int j = col; j < c_; ++j) A.at(i, j) = K.sub(A.at(i, j), K.mul(f, A.at(col, j)));
    }
  }
  return d;
}

std::optional<Mat> Mat::inverse() const {
  if (r_ != c_) return std::nullopt;
  Mat aug = hcat(*this, identity(F_, r_));
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < r_ || piv[static_cast<std::size_t>(r_ - 1)] >= r_) return std::nullopt;
  Mat R(F_, r_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) R.at(i, j) = aug.at(i, r_ + j);
  return R;
}

Mat Mat::kernel() const {
  Mat A = *this;
  auto piv = rref(A);
  std::vector<char> is_piv(static_cast<std::size_t>(c_), 0);
  for (int p : piv) is_piv[static_cast<std::size_t>(p)] = 1;
  std::vector<std::vector<Elem>> basis;
  for (int f = 0; f < c_; ++f) {
    if (is_piv[static_cast<std::size_t>(f)]) continue;
    std::vector<Elem> v(static_cast<std::size_t>(c_), Elem{0});
    v[static_cast<std::size_t>(f)] = F_->one();
    for (std::size_t r = 0; r < piv.size(); ++r)
      v[static_cast<std::size_t>(piv[r])] = F_->neg(A.at(static_cast<int>(r), f));
    basis.push_back(std::move(v));
  }
  return from_columns(F_, c_, basis);
}

Mat Mat::column_basis() const {
  Mat A = *this;
  auto piv = rref(A);
  std::vector<std::vector<Elem>> cols;
  for (int p : piv) cols.push_back(column(p));
  return from_columns(F_, r_, cols);
}

std::optional<std::vector<Elem>> Mat::solve(const std::vector<Elem>& b) const {
  Mat B(F_, r_, 1);
  for (int i = 0; i < r_; ++i) B.at(i, 0) = b[static_cast<std::size_t>(i)];
  auto X = solve(B);
  if (!X) return std::nullopt;
  return X->column(0);
}

std::optional<Mat> Mat::solve(const Mat& B) const {
  Mat aug = hcat(*this, B);
  auto piv = rref(aug);
  for (int p : piv)
    if (p >= c_) return std::nullopt;
  Mat X(F_, c_, B.cols());
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (int j = 0; j < B.cols(); ++j) X.at(piv[r], j) = aug.at(static_cast<int>(r), c_ + j);
  return X;
}

Mat hcat(const Mat& A, const Mat& B) {
  const FieldPtr& F = A.field() ? A.field() : B.field();
  const int rows = A.cols() ? A.rows() : B.rows();
  Mat R(F, rows, A.cols() + B.cols());
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < A.cols(); ++j) R.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols(); ++j) R.at(i, A.cols() + j) = B.at(i, j);
  }
  return R;
}

Mat intersect(const Mat& A, const Mat& B) {
  // x = A a = B b  <=>  [A | -B] (a, b) = 0
  const FieldPtr& F = A.field();
  Mat M = hcat(A, B.scale(F->neg(F->one())));
  Mat K = M.kernel();
  std::vector<std::vector<Elem>> cols;
  for (int j = 0; j < K.cols(); ++j) {
    std::vector<Elem> a(static_cast<std::size_t>(A.cols()));
    for (int i = 0; i < A.cols(); ++i) a[static_cast<std::size_t>(i)] = K.at(i, j);
    cols.push_back(A.apply(a));
  }
  return Mat::from_columns(F, A.rows(), cols).column_basis();
}

Poly charpoly(const Mat& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("charpoly of a non-square matrix");
  const FieldPtr& F = M.field();
  const Field& K = *F;
  const int n = M.rows();
  Mat A = M;
  // similarity reduction to upper Hessenberg form
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (A.at(i, j).v) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(A.at(piv, c), A.at(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(A.at(r, piv), A.at(r, j + 1));
    }
    const Elem inv = K.inv(A.at(j + 1, j));
    for (int k = j + 2; k < n; ++k) {
      const Elem u = K.mul(A.at(k, j), inv);
      if (u.v == 0) continue;
      for (int c = 0; c < n; ++c) A.at(k, c) = K.sub(A.at(k, c), K.mul(u, A.at(j + 1, c)));
      for (int r = 0; r < n; ++r) A.at(r, j + 1) = K.add(A.at(r, j + 1), K.mul(u, A.at(r, k)));
    }
  }
  std::vector<Poly> p;
  p.push_back(Poly::one(F));
  const Poly t = Poly::t(F);
  for (int m = 0; m < n; ++m) {
    Poly next = (t - Poly::constant(F, A.at(m, m))) * p[static_cast<std::size_t>(m)];
    Elem prod = K.one();
    for (int i = m - 1; i >= 0; --i) {
      prod = K.mul(prod, A.at(i + 1, i));
      if (prod.v == 0) break;
      next -= p[static_cast<std::size_t>(i)].scale(K.mul(prod, A.at(i, m)));
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

Mat restrict_to(const Mat& T, const Mat& basis) {
  if (basis.cols() == 0) return Mat(T.field(), 0, 0);
  auto X = basis.solve(T * basis);
  if (!X) throw std::logic_error("restrict_to: subspace is not invariant");
  return *X;
}

Poly quotient_charpoly(const Mat& T, const Mat& sub) {
  const Poly whole = charpoly(T);
  if (sub.cols() == 0) return whole;
  const Poly part = charpoly(restrict_to(T, sub));
  auto [q, r] = whole.divmod(part);
  if (!r.is_zero()) throw std::logic_error("quotient_charpoly: inexact division");
  return q;
}

Poly det(const PolyMat& M0) {
  const std::size_t n = M0.size();
  if (n == 0) throw std::invalid_argument("det of empty polynomial matrix needs a field");
  const FieldPtr F = M0[0][0].field();
  PolyMat M = M0;
  Poly prev = Poly::one(F);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && M[piv][k].is_zero()) ++piv;
      if (piv == n) return Poly(F);
      std::swap(M[piv], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        M[i][j] = num / prev;
      }
      M[i][k] = Poly(F);
    }
    prev = M[k][k];
  }
  Poly d = M[n - 1][n - 1];
  return negate ? -d : d;
}

Laurent det(LaurentMat M) {
  const std::size_t n = M.size();
  if (n == 0) throw std::invalid_argument("det of empty Laurent matrix needs a field");
  const FieldPtr F = M[0][0].field();
  bool all_exact = true;
  int cap = 0, hi = INT_MIN, lo = INT_MAX;
  for (auto& row : M)
    for (auto& x : row) {
      if (!x.exact()) {
        all_exact = false;
        cap = std::max(cap, x.prec());
      }
      if (!x.is_zero()) {
        hi = std::max(hi, x.top());
        lo = std::min(lo, x.top() - static_cast<int>(x.coeffs().size()) + 1);
      }
    }
  if (hi == INT_MIN) return Laurent::zero(F, all_exact ? Laurent::kExact : cap);
  if (all_exact) {
    // t^s * entries are polynomials; det scales by t^(s n)
    const int s = std::max(0, -lo);
    PolyMat P(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Laurent e = M[i][j].shift(s);
        std::vector<Elem> c;
        if (!e.is_zero()) {
          c.assign(static_cast<std::size_t>(e.top()) + 1, Elem{0});
          for (int k = 0; k <= e.top(); ++k) c[static_cast<std::size_t>(k)] = e.coeff(k);
        }
        P[i][j] = Poly(F, c);
      }
    return Laurent::from_poly(det(P)).shift(-s * static_cast<int>(n));
  }
  const int max_prec = cap + 2 * (hi - lo) + 8;
  Laurent d = Laurent::one(F);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    int best = INT_MIN;
    for (std::size_t i = k; i < n; ++i)
      if (!M[i][k].is_zero() && M[i][k].top() > best) {
        best = M[i][k].top();
        piv = i;
      }
    if (piv == n) {
      int p = Laurent::kExact;
      for (std::size_t i = k; i < n; ++i) p = std::min(p, M[i][k].prec());
      return (d * Laurent::zero(F, p));
    }
    if (piv != k) {
      std::swap(M[piv], M[k]);
      d = -d;
    }
    d = d * M[k][k];
    const Laurent inv = M[k][k].inv(max_prec);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (M[i][k].is_zero() && M[i][k].exact()) continue;
      const Laurent f = M[i][k] * inv;
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = M[i][j] - f * M[k][j];
    }
  }
  return d;
}

}  // namespace eqlv
