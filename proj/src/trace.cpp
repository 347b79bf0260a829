#include "eqlv/trace.hpp"

#include <algorithm>
#include <sstream>

namespace eqlv {

namespace {

std::uint64_t qpow(std::uint64_t q, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= q;
  return r;
}

Mat power(const Mat& S, int e) {
  Mat r = Mat::identity(S.field(), S.rows());
  for (int i = 0; i < e; ++i) r = r * S;
  return r;
}

Series series_mul(const Field& F, const Series& a, const Series& b) {
  Series r(a.size(), Elem{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].v) continue;
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return r;
}

// 1/a for a with constant term 1
Series series_inv(const Field& F, const Series& a) {
  Series r(a.size(), Elem{0});
  r[0] = F.inv(a[0]);
  for (std::size_t n = 1; n < a.size(); ++n) {
    Elem s{0};
    for (std::size_t j = 1; j <= n; ++j) s = F.add(s, F.mul(a[j], r[n - j]));
    r[n] = F.neg(F.mul(s, r[0]));
  }
  return r;
}

Series to_series(const Poly& p, int len) {
  Series s(static_cast<std::size_t>(len), Elem{0});
  for (int i = 0; i < len; ++i) s[static_cast<std::size_t>(i)] = p.coeff(i);
  return s;
}

// det(1 - sum_n u^n R_n) as a polynomial in u
Poly det_one_minus(const FieldPtr& F, const std::vector<int>& orders, const std::vector<Mat>& R) {
  if (R.empty() || R.front().rows() == 0) return Poly::one(F);
  const int d = R.front().rows();
  PolyMat M(static_cast<std::size_t>(d), std::vector<Poly>(static_cast<std::size_t>(d), Poly(F)));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Poly x(F);
      if (a == b) x = Poly::one(F);
      for (std::size_t i = 0; i < R.size(); ++i)
        if (R[i].at(a, b).v) x -= Poly::monomial(F, R[i].at(a, b), orders[i]);
      M[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = x;
    }
  return det(M);
}

// restrict each operator to the chi-isotypic part of a space with G-action
std::vector<Mat> restrict_all(const CharacterTable& ct, const std::vector<Mat>& action, const std::vector<Mat>& ops,
                              int chi) {
  const Mat B = isotypic_basis(ct, action, chi);
  std::vector<Mat> out;
  for (const Mat& T : ops) out.push_back(B.cols() == 0 ? Mat(ct.split, 0, 0) : restrict_to(T.lift(ct.split), B));
  return out;
}

}  // namespace

void TauSheafLine::validate() const {
  if (m < 1 || T.size() != orders.size()) throw TModuleError("tau-sheaf: malformed operator list");
  if (!A->contains(*k)) throw TModuleError("tau-sheaf: coefficient field must contain k");
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (orders[i] < 1) throw TModuleError("tau-sheaf: operator orders start at 1");
    if (static_cast<int>(T[i].size()) != m) throw TModuleError("tau-sheaf: matrix size differs from m");
    for (const auto& row : T[i])
      if (static_cast<int>(row.size()) != m) throw TModuleError("tau-sheaf: matrix size differs from m");
  }
  if (G.size() == 1) return;
  if (static_cast<int>(action.size()) != G.size()) throw TModuleError("tau-sheaf: one action matrix per group element");
  Rep{G, A, m, action}.validate();
  for (int g = 0; g < G.size(); ++g)
    for (const auto& Tn : T)
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
          Poly st(A), ts(A);
          for (int s = 0; s < m; ++s) {
            st += Tn[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)].scale(act(g).at(r, s));
            ts += Tn[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)].scale(act(g).at(s, c));
          }
          if (st != ts) throw TModuleError("tau-sheaf: group action does not commute with tau");
        }
}

int TauSheafLine::max_order() const { return orders.empty() ? 0 : *std::max_element(orders.begin(), orders.end()); }

TauSheafLine qpower_demo(const FieldPtr& k) {
  TauSheafLine S;
  S.k = k;
  S.A = k;
  S.m = 1;
  S.orders = {1};
  S.T = {PolyMat{{Poly::one(k)}}};
  return S;
}

TauSheafLine random_sheaf(const FieldPtr& k, bool equivariant, std::mt19937& rng) {
  auto rpoly = [&]() {
    std::vector<Elem> c;
    const int deg = static_cast<int>(rng() % 3);
    for (int i = 0; i <= deg; ++i) c.push_back(k->elem(rng() % k->card()));
    return Poly(k, c);
  };
  TauSheafLine S;
  S.k = k;
  S.A = k;
  const int r = 1 + static_cast<int>(rng() % 2);
  if (equivariant) {
    // companion matrix of x^2 + x + 1 has order 3 in any characteristic
    S.m = 2;
    S.G = AbelianGroup::cyclic(3);
    Mat Sg(k, 2, 2);
    Sg.at(0, 1) = k->neg(k->one());
    Sg.at(1, 0) = k->one();
    Sg.at(1, 1) = k->neg(k->one());
    for (int g = 0; g < 3; ++g) S.action.push_back(power(Sg, S.G.exps(g)[0]));
    for (int n = 1; n <= r; ++n) {
      const Poly a = rpoly(), b = rpoly();
      PolyMat T(2, std::vector<Poly>(2, Poly(k)));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b.scale(Sg.at(i, j));
      T[0][0] += a;
      T[1][1] += a;
      S.orders.push_back(n);
      S.T.push_back(T);
    }
  } else {
    S.m = 1 + static_cast<int>(rng() % 2);
    for (int n = 1; n <= r; ++n) {
      PolyMat T(static_cast<std::size_t>(S.m), std::vector<Poly>(static_cast<std::size_t>(S.m), Poly(k)));
      for (auto& row : T)
        for (auto& x : row) x = rpoly();
      S.orders.push_back(n);
      S.T.push_back(T);
    }
  }
  S.validate();
  return S;
}

Poly cartier(const Poly& f, int n, std::uint64_t q) {
  const std::uint64_t Q = qpow(q, n);
  std::vector<Elem> c;
  for (int i = 0; i <= f.degree(); ++i) {
    const auto i1 = static_cast<std::uint64_t>(i) + 1;
    if (i1 % Q != 0 || !f.coeff(i).v) continue;
    const auto e = static_cast<std::size_t>(i1 / Q - 1);
    if (c.size() <= e) c.resize(e + 1, Elem{0});
    c[e] = f.coeff(i);
  }
  return Poly(f.field(), c);
}

std::vector<Poly> adjoint_apply(const TauSheafLine& S, int idx, const std::vector<Poly>& w) {
  const PolyMat& T = S.T[static_cast<std::size_t>(idx)];
  std::vector<Poly> out;
  for (int j = 0; j < S.m; ++j) {
    Poly acc(S.A);
    for (int i = 0; i < S.m; ++i) acc += w[static_cast<std::size_t>(i)] * T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    out.push_back(cartier(acc, S.orders[static_cast<std::size_t>(idx)], S.k->card()));
  }
  return out;
}

int nucleus_bound(const TauSheafLine& S) {
  int D = 0;
  const std::uint64_t q = S.k->card();
  for (std::size_t i = 0; i < S.T.size(); ++i) {
    int e = -1;
    for (const auto& row : S.T[i])
      for (const auto& x : row) e = std::max(e, x.degree());
    if (e < 0) continue;
    const auto Q1 = static_cast<long long>(qpow(q, S.orders[i]) - 1);
    const long long need = (e + Q1 - 1) / Q1 - 1;
    D = std::max(D, static_cast<int>(need));
  }
  return D;
}

Nucleus nucleus_at(const TauSheafLine& S, int D) {
  Nucleus Nc;
  Nc.D = D;
  Nc.dim = S.m * (D + 1);
  Nc.closed = true;
  for (std::size_t idx = 0; idx < S.T.size(); ++idx) {
    Mat C(S.A, Nc.dim, Nc.dim);
    for (int i = 0; i < S.m; ++i)
      for (int e = 0; e <= D; ++e) {
        std::vector<Poly> w(static_cast<std::size_t>(S.m), Poly(S.A));
        w[static_cast<std::size_t>(i)] = Poly::monomial(S.A, S.A->one(), e);
        const auto img = adjoint_apply(S, static_cast<int>(idx), w);
        for (int j = 0; j < S.m; ++j) {
          const Poly& y = img[static_cast<std::size_t>(j)];
          if (y.degree() > D) Nc.closed = false;
          for (int f = 0; f <= std::min(D, y.degree()); ++f) C.at(j * (D + 1) + f, i * (D + 1) + e) = y.coeff(f);
        }
      }
    Nc.ops.push_back(C);
  }
  return Nc;
}

Nucleus find_nucleus(const TauSheafLine& S) {
  Nucleus Nc = nucleus_at(S, nucleus_bound(S));
  if (!Nc.closed) throw TModuleError("degree bound does not give a nucleus");
  return Nc;
}

namespace {

// w -> w S_g on the nucleus basis
std::vector<Mat> nucleus_action(const TauSheafLine& S, int D) {
  std::vector<Mat> out;
  const int dim = S.m * (D + 1);
  for (int g = 0; g < S.G.size(); ++g) {
    Mat A(S.A, dim, dim);
    for (int i = 0; i < S.m; ++i)
      for (int j = 0; j < S.m; ++j)
        for (int e = 0; e <= D; ++e)
          A.at(j * (D + 1) + e, i * (D + 1) + e) = S.G.size() == 1 ? (i == j ? S.A->one() : Elem{0}) : S.act(g).at(i, j);
    out.push_back(A);
  }
  return out;
}

std::vector<Series> nucleus_side(const TauSheafLine& S, const CharacterTable& ct, int D, int len) {
  const Nucleus Nc = nucleus_at(S, D);
  if (!Nc.closed) throw TModuleError("not a nucleus");
  const auto act = nucleus_action(S, D);
  std::vector<Series> out;
  for (int chi = 0; chi < ct.count(); ++chi)
    out.push_back(to_series(det_one_minus(ct.split, S.orders, restrict_all(ct, act, Nc.ops, chi)), len));
  return out;
}

}  // namespace

TraceCheck verify_trace_formula(const TauSheafLine& S, int N) {
  S.validate();
  TraceCheck R;
  R.N = N;
  const int len = N + 1;
  const CharacterTable ct = decompose(S.G, S.A);
  const Field& F = *ct.split;
  const std::uint64_t q = S.k->card();
  R.lhs.assign(static_cast<std::size_t>(ct.count()), Series(static_cast<std::size_t>(len), Elem{0}));
  for (auto& s : R.lhs) s[0] = F.one();

  for (const Poly& p0 : primes_upto(S.k, N)) {
    const Poly p = p0.lift(S.A);
    const int d = p.degree(), dim = S.m * d;
    std::vector<Mat> ops;
    for (std::size_t idx = 0; idx < S.T.size(); ++idx) {
      const auto Q = static_cast<int>(qpow(q, S.orders[idx]));
      Mat M(S.A, dim, dim);
      for (int i = 0; i < S.m; ++i)
        for (int j = 0; j < d; ++j) {
          const Poly shift = Poly::monomial(S.A, S.A->one(), j * Q) % p;
          for (int r = 0; r < S.m; ++r) {
            const Poly y = (S.T[idx][static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] * shift) % p;
            for (int f = 0; f < d; ++f) M.at(r * d + f, i * d + j) = y.coeff(f);
          }
        }
      ops.push_back(M);
    }
    std::vector<Mat> act;
    for (int g = 0; g < S.G.size(); ++g) {
      Mat A(S.A, dim, dim);
      for (int i = 0; i < S.m; ++i)
        for (int r = 0; r < S.m; ++r)
          for (int j = 0; j < d; ++j)
            A.at(r * d + j, i * d + j) = S.G.size() == 1 ? (i == r ? S.A->one() : Elem{0}) : S.act(g).at(r, i);
      act.push_back(A);
    }
    for (int chi = 0; chi < ct.count(); ++chi) {
      const Poly f = det_one_minus(ct.split, S.orders, restrict_all(ct, act, ops, chi));
      for (int e = 1; e <= f.degree(); ++e)
        if (e % d != 0 && f.coeff(e).v) R.factor_shape = false;
      auto& L = R.lhs[static_cast<std::size_t>(chi)];
      L = series_mul(F, L, series_inv(F, to_series(f, len)));
    }
    ++R.points;
  }

  R.D0 = nucleus_bound(S);
  R.rhs = nucleus_side(S, ct, R.D0, len);
  for (int extra = 1; extra <= 2; ++extra)
    if (nucleus_side(S, ct, R.D0 + extra, len) != R.rhs) R.nucleus_stable = false;

  bool equal = R.lhs == R.rhs;
  R.verdict = equal && R.factor_shape && R.nucleus_stable ? Verdict::Pass : Verdict::Fail;
  if (!equal) {
    for (std::size_t c = 0; c < R.lhs.size() && R.detail.empty(); ++c)
      for (int e = 0; e < len; ++e)
        if (R.lhs[c][static_cast<std::size_t>(e)] != R.rhs[c][static_cast<std::size_t>(e)]) {
          R.detail = "character " + std::to_string(c) + ": first difference at u^" + std::to_string(e);
          break;
        }
  } else if (!R.factor_shape) {
    R.detail = "a point factor is not in 1 + u^d A[[u^d]]";
  } else if (!R.nucleus_stable) {
    R.detail = "nucleus determinant changed under enlargement";
  }
  return R;
}

std::string render_series(const Field& F, const Series& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < s.size(); ++e) {
    if (!s[e].v) continue;
    os << (first ? "" : " + ");
    const bool unit = s[e] == F.one();
    const bool prime = F.prime_degree() == 1;
    if (!unit || e == 0) os << (prime ? std::to_string(s[e].v) : F.format(s[e]));
    if (e > 0) os << (unit || prime ? "" : "*") << "u" << (e > 1 ? "^" + std::to_string(e) : "");
    first = false;
  }
  if (first) os << "0";
  os << " + O(u^" << s.size() << ")";
  return os.str();
}

}  // namespace eqlv
