#pragma once

// Brute-force oracles shared by the unit tests and the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "eqlv/lvalue.hpp"

namespace eqlv::oracle {

inline Poly rand_poly(const FieldPtr& F, std::mt19937& rng, int deg) {
  std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % F->card())};
  return Poly(F, c);
}

inline GPoly rand_gpoly(const AbelianGroup& G, const FieldPtr& k, std::mt19937& rng, int deg) {
  GPoly u{G, {}};
  for (int g = 0; g < G.size(); ++g) u.c.push_back(rand_poly(k, rng, deg));
  return u;
}

// C^{(x)n} with its tau-part replaced by r random matrices of degree <= 1
inline TModule random_module(const FieldPtr& k, int n, int r, std::mt19937& rng) {
  TModule E = make_carlitz_power(k, n);
  E.A.resize(static_cast<std::size_t>(r + 1));
  for (int s = 1; s <= r; ++s) {
    PolyMat A(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n), Poly(k)));
    for (auto& row : A)
      for (auto& x : row) {
        std::vector<Elem> c;
        for (int d = 0; d < 2; ++d) c.push_back(k->elem(rng() % k->card()));
        x = Poly(k, c);
      }
    A[static_cast<std::size_t>(n - 1)][0] = Poly::one(k);  // keep A_r nonzero
    E.A[static_cast<std::size_t>(s)] = A;
  }
  return E;
}

// phi over k[t][G] acting on k[t][G]^r, expanded through the regular
// representation; block (i, j) is phi_ij
inline PolyMat regular_expansion(const AbelianGroup& G, const FieldPtr& F, const GPolyMat& phi) {
  const std::size_t r = phi.size(), n = static_cast<std::size_t>(G.size());
  PolyMat M(r * n, std::vector<Poly>(r * n, Poly(F)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h) {
          auto row = i * n + static_cast<std::size_t>(G.mul(g, h));
          auto col = j * n + static_cast<std::size_t>(h);
          M[row][col] = M[row][col] + phi[i][j].c[static_cast<std::size_t>(g)].lift(F);
        }
  return M;
}

// det of phi on Hom_{k[G]}(N_chi, M) (x) F, by restricting the regular
// expansion to the common chi-eigenspace of G
inline Poly hom_determinant(const CharacterTable& ct, const GPolyMat& phi, int chi) {
  const AbelianGroup& G = ct.G;
  const FieldPtr& F = ct.split;
  const int r = static_cast<int>(phi.size());
  const int n = r * G.size();
  const PolyMat big = regular_expansion(G, F, phi);
  std::vector<std::vector<Elem>> rows;
  for (int g = 0; g < G.size(); ++g) {
    Mat A(F, n, n);
    for (int b = 0; b < r; ++b)
      for (int h = 0; h < G.size(); ++h) A.at(b * G.size() + G.mul(g, h), b * G.size() + h) = F->one();
    A = A - Mat::identity(F, n).scale(ct.value(chi, g));
    for (int i = 0; i < n; ++i) {
      std::vector<Elem> v;
      for (int j = 0; j < n; ++j) v.push_back(A.at(i, j));
      rows.push_back(v);
    }
  }
  Mat B = Mat::from_columns(F, n, rows).transpose().kernel();
  if (B.cols() != r) throw GroupRingError("eigenspace of unexpected dimension");
  // r rows of B with an invertible minor; X = B_rows^-1 (phi B)_rows
  Mat Bt = B.transpose();
  const std::vector<int> idx = rref(Bt);
  Mat Bsub(F, r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) Bsub.at(a, b) = B.at(idx[static_cast<std::size_t>(a)], b);
  const Mat Binv = *Bsub.inverse();
  PolyMat X(static_cast<std::size_t>(r), std::vector<Poly>(static_cast<std::size_t>(r), Poly(F)));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int s = 0; s < r; ++s) {
        Poly phiB(F);
        const int row = idx[static_cast<std::size_t>(s)];
        for (int j = 0; j < n; ++j)
          phiB = phiB + big[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)].scale(B.at(j, b));
        auto& x = X[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        x = x + phiB.scale(Binv.at(a, s));
      }
  return det(X);
}

// twist_det(det_equivariant(phi), chi) == hom_determinant(phi, chi)
inline bool hom_determinant_identity(const CharacterTable& ct, const GPolyMat& phi, int chi) {
  const GPoly d = det_equivariant(ct, phi);
  GLaurent dl{ct.G, {}};
  for (const auto& c : d.c) dl.c.push_back(Laurent::from_poly(c));
  const Laurent tw = twist_det(dl, Rep::character(ct, chi));
  return equal_mod(tw, Laurent::from_poly(hom_determinant(ct, phi, chi)), 50);
}

// sum_{sigma in frob} sigma(x) == e x^{q^d} in B_p for every basis vector x;
// returns the failing basis index or -1
inline int frobenius_coset_failure(const GaloisContext& ctx, const PrimeData& pd) {
  const Field& K = *ctx.k;
  std::uint64_t qd = 1;
  for (int i = 0; i < pd.d; ++i) qd *= K.card();
  for (int j = 0; j < pd.B.dim; ++j) {
    const auto x = pd.B.basis_vector(j);
    std::vector<Elem> lhs(x.size(), Elem{0});
    for (int s : pd.frob) {
      const auto y = pd.action[static_cast<std::size_t>(s)].apply(x);
      for (std::size_t i = 0; i < y.size(); ++i) lhs[i] = K.add(lhs[i], y[i]);
    }
    auto rhs = pd.B.pow(x, qd);
    for (auto& v : rhs) v = K.mul(v, K.from_int(pd.e));
    if (lhs != rhs) return j;
  }
  return -1;
}

// |kappa_p|^n - (1/e) sum_{sigma in frob} sigma, in k[t][G]
inline GPoly closed_form_mod(const GaloisContext& ctx, const PrimeData& pd, int n) {
  const FieldPtr& k = ctx.k;
  GPoly u = gr_scalar(ctx.G, pd.p.pow(static_cast<unsigned>(n)), Poly(k));
  const Elem inv_e = k->inv(k->from_int(pd.e));
  for (int s : pd.frob) u.c[static_cast<std::size_t>(s)] -= Poly::constant(k, inv_e);
  return u;
}

// Both local factors of C^{(x)n} against their closed forms: mod as above,
// lie = p^n. Polynomial equality, no truncation.
inline bool closed_forms_hold(const GaloisContext& ctx, const CharacterTable& ct, const PrimeData& pd, int n) {
  const EquivariantFactor lf = local_factor_equivariant(make_carlitz_power(ctx.k, n), pd, ct, 4);
  return lf.mod.c == closed_form_mod(ctx, pd, n).c &&
         lf.lie.c == gr_scalar(ctx.G, pd.p.pow(static_cast<unsigned>(n)), Poly(ctx.k)).c;
}

}  // namespace eqlv::oracle
