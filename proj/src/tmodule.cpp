#include "eqlv/tmodule.hpp"

namespace eqlv {

namespace {

PolyMat polymat_mul(const PolyMat& a, const PolyMat& b, const FieldPtr& k) {
  const std::size_t n = a.size();
  PolyMat r(n, std::vector<Poly>(n, Poly(k)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      if (!a[i][l].is_zero())
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][l] * b[l][j];
  return r;
}

std::vector<Elem> eval_in(const FinAlg& B, const Poly& a, const std::vector<Elem>& z) {
  const Field& K = *B.k;
  std::vector<Elem> r(static_cast<std::size_t>(B.dim), Elem{0});
  for (int i = a.degree(); i >= 0; --i) {
    r = B.mul(r, z);
    const Elem c = a.coeff(i);
    if (c.v)
      for (int j = 0; j < B.dim; ++j) r[static_cast<std::size_t>(j)] = K.add(r[static_cast<std::size_t>(j)], K.mul(c, B.one[static_cast<std::size_t>(j)]));
  }
  return r;
}

void put_block(Mat& M, int bi, int bj, const Mat& blk) {
  for (int i = 0; i < blk.rows(); ++i)
    for (int j = 0; j < blk.cols(); ++j) M.at(bi * blk.rows() + i, bj * blk.cols() + j) = blk.at(i, j);
}

Mat kron(const Mat& A, const Mat& B) {
  Mat R(A.field(), A.rows() * B.rows(), A.cols() * B.cols());
  const Field& K = *A.field();
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      const Elem a = A.at(i, j);
      if (a.v == 0) continue;
      for (int s = 0; s < B.rows(); ++s)
        for (int u = 0; u < B.cols(); ++u) R.at(i * B.rows() + s, j * B.cols() + u) = K.mul(a, B.at(s, u));
    }
  return R;
}

// matrix of T on V / span(sub), sub T-stable
Mat quotient_matrix(const Mat& T, const Mat& sub) {
  const FieldPtr& F = T.field();
  const int n = T.rows();
  Mat basis = sub;
  for (int i = 0; i < n && basis.cols() < n; ++i) {
    Mat e(F, n, 1);
    e.at(i, 0) = F->one();
    Mat cand = basis.cols() ? hcat(basis, e) : e;
    if (cand.rank() > basis.cols()) basis = cand;
  }
  Mat M = *basis.solve(T * basis);
  const int s = sub.cols();
  Mat R(F, n - s, n - s);
  for (int i = s; i < n; ++i)
    for (int j = s; j < n; ++j) R.at(i - s, j - s) = M.at(i, j);
  return R;
}

}  // namespace

void TModule::validate() const {
  if (A.empty()) throw TModuleError("t-module needs at least A_0");
  for (const auto& M : A) {
    if (static_cast<int>(M.size()) != n) throw TModuleError("matrix size differs from the dimension");
    for (const auto& row : M)
      if (static_cast<int>(row.size()) != n) throw TModuleError("matrix is not square");
  }
  PolyMat N = A[0];
  for (int i = 0; i < n; ++i) N[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -= Poly::t(k);
  PolyMat P = N;
  for (int s = 1; s < n; ++s) P = polymat_mul(P, N, k);
  for (const auto& row : P)
    for (const auto& x : row)
      if (!x.is_zero()) throw TModuleError("(A_0 - t)^n is not zero");
  if (A.size() > 1) {
    bool nz = false;
    for (const auto& row : A.back())
      for (const auto& x : row) nz = nz || !x.is_zero();
    if (!nz) throw TModuleError("top coefficient A_r is zero");
  }
}

TModule make_carlitz_power(const FieldPtr& k, int n) {
  if (n <= 0) throw TModuleError("tensor power must be positive");
  TModule E;
  E.k = k;
  E.n = n;
  const auto un = static_cast<std::size_t>(n);
  PolyMat A0(un, std::vector<Poly>(un, Poly(k))), A1 = A0;
  for (std::size_t i = 0; i < un; ++i) {
    A0[i][i] = Poly::t(k);
    if (i + 1 < un) A0[i][i + 1] = Poly::one(k);
  }
  A1[un - 1][0] = Poly::one(k);
  E.A = {A0, A1};
  E.validate();
  return E;
}

BVec act(const TModule& E, const PrimeData& pd, const Poly& a, const BVec& x) {
  if (static_cast<int>(x.size()) != E.n) throw TModuleError("vector length differs from the t-module dimension");
  const FinAlg& B = pd.B;
  const Field& K = *B.k;
  auto add_into = [&](std::vector<Elem>& y, const std::vector<Elem>& z) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = K.add(y[i], z[i]);
  };
  auto Et = [&](const BVec& v) {
    BVec out(v.size(), std::vector<Elem>(static_cast<std::size_t>(B.dim), Elem{0}));
    BVec tw = v;
    for (int s = 0; s <= E.r(); ++s) {
      for (int i = 0; i < E.n; ++i)
        for (int j = 0; j < E.n; ++j) {
          const Poly& c = E.A[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (!c.is_zero()) add_into(out[static_cast<std::size_t>(i)], B.mul(eval_in(B, c, pd.zbar), tw[static_cast<std::size_t>(j)]));
        }
      for (auto& w : tw) w = B.pow(w, K.card());
    }
    return out;
  };
  // Horner in E(t)
  BVec r(x.size(), std::vector<Elem>(static_cast<std::size_t>(B.dim), Elem{0}));
  for (int i = a.degree(); i >= 0; --i) {
    r = Et(r);
    const Elem c = a.coeff(i);
    for (std::size_t j = 0; j < x.size(); ++j)
      for (int b = 0; b < B.dim; ++b)
        r[j][static_cast<std::size_t>(b)] = K.add(r[j][static_cast<std::size_t>(b)], K.mul(c, x[j][static_cast<std::size_t>(b)]));
  }
  return r;
}

ResidueModule residue_module(const TModule& E, const PrimeData& pd) {
  const FinAlg& B = pd.B;
  const FieldPtr& k = B.k;
  const int D = B.dim, n = E.n;
  ResidueModule W;
  W.dim = n * D;
  W.T_mod = Mat(k, W.dim, W.dim);
  W.T_lie = Mat(k, W.dim, W.dim);
  std::vector<Mat> qp{Mat::identity(k, D)};
  for (int s = 1; s <= E.r(); ++s) qp.push_back(qp.back() * pd.qpow);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat blk(k, D, D);
      for (int s = 0; s <= E.r(); ++s) {
        const Poly& c = E.A[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        const Mat Mc = B.mult_matrix(eval_in(B, c, pd.zbar));
        if (s == 0) put_block(W.T_lie, i, j, Mc);
        blk = blk + Mc * qp[static_cast<std::size_t>(s)];
      }
      put_block(W.T_mod, i, j, blk);
    }
  for (const auto& A : pd.action) {
    Mat M(k, W.dim, W.dim);
    for (int i = 0; i < n; ++i) put_block(M, i, i, A);
    W.action.push_back(M);
  }
  return W;
}

EquivariantFactor local_factor_equivariant(const TModule& E, const PrimeData& pd, const CharacterTable& ct, int prec) {
  const ResidueModule W = residue_module(E, pd);
  EquivariantFactor lf;
  lf.p = pd.p;
  lf.lie_chi = charpoly_equivariant(ct, W.action, W.T_lie);
  lf.mod_chi = charpoly_equivariant(ct, W.action, W.T_mod);
  lf.lie = assemble(ct, lf.lie_chi);
  lf.mod = assemble(ct, lf.mod_chi);
  std::vector<Laurent> r;
  for (std::size_t c = 0; c < lf.lie_chi.size(); ++c) r.push_back(Laurent::expand_rational(lf.lie_chi[c], lf.mod_chi[c], prec));
  lf.ratio = assemble(ct, r);
  return lf;
}

RepFactor local_factor_rep(const TModule& E, const PrimeData& pd, const Rep& rho, RepVariant variant, int prec) {
  const FieldPtr& F = rho.F;
  if (!F->contains(*pd.B.k)) throw TModuleError("representation field must contain k");
  const ResidueModule W = residue_module(E, pd);
  const int D = W.dim, m = rho.dim;
  const AbelianGroup& G = rho.G;
  RepFactor rf;
  rf.p = pd.p;
  const Mat Tm = W.T_mod.lift(F), Tl = W.T_lie.lift(F);
  if (variant == RepVariant::Hom) {
    // X : V -> W_F with g X = X rho(g); vec index i*m + j
    std::vector<Mat> blocks;
    for (int gi = 0; gi < G.rank(); ++gi) {
      const int g = G.generator(gi);
      blocks.push_back(kron(W.action[static_cast<std::size_t>(g)].lift(F), Mat::identity(F, m)) -
                       kron(Mat::identity(F, D), rho.at(g).transpose()));
    }
    Mat C(F, 0, D * m);
    for (const auto& b : blocks) {
      Mat st(F, C.rows() + b.rows(), D * m);
      for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < D * m; ++j) st.at(i, j) = C.at(i, j);
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < D * m; ++j) st.at(C.rows() + i, j) = b.at(i, j);
      C = st;
    }
    const Mat K = C.rows() ? C.kernel() : Mat::identity(F, D * m);
    rf.dim = K.cols();
    const Mat Im = Mat::identity(F, m);
    rf.mod = K.cols() ? charpoly(restrict_to(kron(Tm, Im), K)) : Poly::one(F);
    rf.lie = K.cols() ? charpoly(restrict_to(kron(Tl, Im), K)) : Poly::one(F);
  } else {
    // (V^* (x) W_F)_G, index j*D + i
    Mat sub(F, D * m, 0);
    for (int gi = 0; gi < G.rank(); ++gi) {
      const int g = G.generator(gi);
      const Mat act = kron(rho.at(G.inv(g)).transpose(), W.action[static_cast<std::size_t>(g)].lift(F));
      sub = hcat(sub, act - Mat::identity(F, D * m));
    }
    sub = sub.column_basis();
    rf.dim = D * m - sub.cols();
    const Mat Im = Mat::identity(F, m);
    rf.mod = quotient_charpoly(kron(Im, Tm), sub);
    rf.lie = quotient_charpoly(kron(Im, Tl), sub);
  }
  rf.ratio = Laurent::expand_rational(rf.lie, rf.mod, prec);
  return rf;
}

FrobeniusData frobenius_on_inertia_quotients(const PrimeData& pd, const Rep& rho) {
  const FieldPtr& F = rho.F;
  const int m = rho.dim;
  const Mat Fr = rho.at(pd.frobenius());
  Mat coinv(F, m, 0);
  std::vector<std::vector<Elem>> rows;
  for (int g : pd.inertia) {
    const Mat D = rho.at(g) - Mat::identity(F, m);
    for (int i = 0; i < m; ++i) rows.push_back(D.transpose().column(i));
    coinv = hcat(coinv, D);
  }
  const Mat cond = Mat::from_columns(F, m, rows).transpose();
  const Mat inv_basis = cond.kernel();
  coinv = coinv.column_basis();
  FrobeniusData fd;
  fd.on_invariants = inv_basis.cols() ? restrict_to(Fr, inv_basis) : Mat(F, 0, 0);
  fd.on_coinvariants = coinv.cols() < m ? quotient_matrix(Fr, coinv) : Mat(F, 0, 0);
  return fd;
}

Poly charpoly_at(const Mat& M, const Poly& Pn) {
  const FieldPtr& F = M.field();
  if (M.rows() == 0) return Poly::one(F);
  return charpoly(M).compose(Pn.lift(F));
}

}  // namespace eqlv
