#pragma once

#include <random>
#include <string>
#include <vector>

#include "eqlv/lvalue.hpp"

namespace eqlv {

/// Coherent tau-sheaf on the affine line over a coefficient field A >= k:
/// M = A[t]^m with tau_n(x) = T_n x(t^{q^n}), q = |k|. G acts A-linearly by
/// constant matrices commuting with every T_n.
struct TauSheafLine {
  FieldPtr k;
  FieldPtr A;
  int m = 1;
  std::vector<int> orders;    // n of each operator
  std::vector<PolyMat> T;     // entries over A[t]
  AbelianGroup G = AbelianGroup::trivial();
  std::vector<Mat> action;    // per group element, m x m over A; empty for trivial G

  void validate() const;
  int max_order() const;
  const Mat& act(int g) const { return action[static_cast<std::size_t>(g)]; }
};

/// tau_1 = q-power on M = k[t].
TauSheafLine qpower_demo(const FieldPtr& k);
/// Random instance: m <= 2, r <= 2, entry degree <= 2; with G = Z/3 over F_2
/// the action is the order-3 element of GL_2(F_2) and T_n lie in k[t][S].
TauSheafLine random_sheaf(const FieldPtr& k, bool equivariant, std::mt19937& rng);

/// q^n-Cartier operator on f dt: t^i dt -> t^{(i+1)/q^n - 1} dt when q^n | i+1.
Poly cartier(const Poly& f, int n, std::uint64_t q);

/// Adjoint C_n on row vectors of differentials: (C_n w)_j = C^n(sum_i w_i T_n[i][j]).
std::vector<Poly> adjoint_apply(const TauSheafLine& S, int idx, const std::vector<Poly>& w);

/// C_1..C_r restricted to the row vectors of degree <= D (basis index i*(D+1) + e).
struct Nucleus {
  int D = 0;
  int dim = 0;
  std::vector<Mat> ops;  // one per operator, over A
  bool closed = false;   // checked exhaustively on the basis
};

/// Smallest D with every C_n mapping degree <= D into itself by the degree bound.
int nucleus_bound(const TauSheafLine& S);
Nucleus nucleus_at(const TauSheafLine& S, int D);
Nucleus find_nucleus(const TauSheafLine& S);

/// Power series over a field, truncated to a fixed length.
using Series = std::vector<Elem>;

struct TraceCheck {
  Verdict verdict = Verdict::Inconclusive;
  int N = 0;
  int D0 = 0;
  std::vector<Series> lhs, rhs;  // per character, mod u^{N+1}
  bool factor_shape = true;      // every point factor lies in 1 + u^d A[[u^d]]
  bool nucleus_stable = true;    // same determinant at D0, D0+1, D0+2
  int points = 0;
  std::string detail;
};

/// Both sides of the trace formula mod u^{N+1}, characterwise over the
/// splitting field of G over A.
TraceCheck verify_trace_formula(const TauSheafLine& S, int N);

std::string render_series(const Field& F, const Series& s);

}  // namespace eqlv
