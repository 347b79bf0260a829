#pragma once

#include <vector>

#include "eqlv/galois.hpp"

namespace eqlv {

class TModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Abelian t-module E(t) = sum_s A_s tau^s over k[t], A_s n x n.
struct TModule {
  FieldPtr k;
  int n = 1;
  std::vector<PolyMat> A;  // A[0..r]

  int r() const { return static_cast<int>(A.size()) - 1; }
  /// (A_0 - t)^n = 0 and A_r != 0.
  void validate() const;
};

/// C^{(x)n}: A_0 = t I + N (superdiagonal ones), A_1 = E_{n,1}.
TModule make_carlitz_power(const FieldPtr& k, int n);

/// Vectors of B_p^n, one algebra element per component.
using BVec = std::vector<std::vector<Elem>>;
/// E(a)(x) for a in k[t].
BVec act(const TModule& E, const PrimeData& pd, const Poly& a, const BVec& x);

/// E(t) and Lie(E)(t) = A_0 as k-linear maps on W = B_p^n (index comp*dim B + b),
/// together with the G-action on W.
struct ResidueModule {
  Mat T_mod;
  Mat T_lie;
  std::vector<Mat> action;
  int dim = 0;
};
ResidueModule residue_module(const TModule& E, const PrimeData& pd);

/// Local factor in k[t][G]: characterwise charpolys of Lie(E) and E on B_p^n.
struct EquivariantFactor {
  Poly p;
  std::vector<Poly> lie_chi, mod_chi;  // over F'[t]
  GPoly lie, mod;                      // over k[t][G]
  GLaurent ratio;                      // lie / mod expanded at infinity
};

/// Throws GroupRingError when B_p^n is not k[G]-free (wild prime).
EquivariantFactor local_factor_equivariant(const TModule& E, const PrimeData& pd, const CharacterTable& ct, int prec);

enum class RepVariant { Hom, Tensor };

/// Local factor over F[t] for the functor Hom_{k[G]}(V, -) or V^* (x)_{k[G]} -.
struct RepFactor {
  Poly p;
  Poly lie, mod;  // over F[t]
  int dim = 0;    // F-dimension of the functor applied to B_p^n
  Laurent ratio;
};

RepFactor local_factor_rep(const TModule& E, const PrimeData& pd, const Rep& rho, RepVariant variant, int prec);

/// Inertia coinvariants V_I and invariants V^I with the induced Frobenius:
/// the matrix of rho(Frob_P) on each.
struct FrobeniusData {
  Mat on_coinvariants;
  Mat on_invariants;
};
FrobeniusData frobenius_on_inertia_quotients(const PrimeData& pd, const Rep& rho);

/// det(x - M) evaluated at x = P^n, a polynomial over F.
Poly charpoly_at(const Mat& M, const Poly& Pn);

}  // namespace eqlv
