#pragma once

#include <optional>
#include <vector>

#include "eqlv/tmodule.hpp"

namespace eqlv {

/// Matrix over k(t) with exact entries.
using RatMat = std::vector<std::vector<RatFunc>>;

RatMat ratmat_identity(const FieldPtr& k, int n);
RatMat ratmat_from(const PolyMat& A);
RatMat operator*(const RatMat& a, const RatMat& b);
RatMat operator+(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);
bool is_zero(const RatMat& a);
/// Entries f(t) -> f(t^k): the q^s-twist when k = q^s.
RatMat twist(const RatMat& a, long long k);
/// Solves A x = b over k(t); A square and invertible.
std::vector<RatFunc> ratmat_solve(RatMat A, std::vector<RatFunc> b);

/// exp_E = sum_s e_s X^{(q^s)}, coefficients exact in k(t). Grows on demand.
class ExpSeries {
 public:
  ExpSeries(TModule E, int S);
  const TModule& module() const { return E_; }
  int order() const { return static_cast<int>(e_.size()) - 1; }
  const RatMat& coeff(int s) const { return e_.at(static_cast<std::size_t>(s)); }
  void extend_to(int S);
  /// Largest t-degree among the entries of e_s.
  int degree(int s) const;

 private:
  TModule E_;
  std::vector<RatMat> e_;
  std::vector<int> deg_;
};

ExpSeries exp_coeffs(const TModule& E, int S);
/// log_E coefficients l_0..l_S.
std::vector<RatMat> log_coeffs(const ExpSeries& es, int S);
/// e_i A_0^{(q^i)} - sum_s A_s e_{i-s}^{(q^s)}: zero for a correct series.
RatMat functional_equation_residual(const ExpSeries& es, int i);
/// Coefficient of X^{(q^m)} in log(exp X) (resp. exp(log X)).
RatMat log_exp_coefficient(const ExpSeries& es, const std::vector<RatMat>& l, int m);
RatMat exp_log_coefficient(const ExpSeries& es, const std::vector<RatMat>& l, int m);

/// Element of L_oo^n: coordinates over k((1/t)) in the integral basis,
/// index c * [L:K] + i for component c and basis element i.
using LVec = std::vector<Laurent>;

/// y^q for y in L_oo given by basis coordinates.
std::vector<Laurent> qpower_coords(const GaloisContext& ctx, const std::vector<Laurent>& y);
/// E(t) applied to y in E(L_oo).
LVec apply_Et(const TModule& E, const GaloisContext& ctx, const LVec& y);
/// A_0 applied to x in Lie(E)(L_oo).
LVec apply_A0(const TModule& E, const GaloisContext& ctx, const LVec& x);

/// exp_E(x) to absolute precision prec. Extends the series as needed and
/// throws PrecisionError (naming the order required) when the terms do not
/// become negligible by order `max_order`.
LVec eval_exp(ExpSeries& es, const GaloisContext& ctx, const LVec& x, int prec, int max_order = 14);

/// k((1/t))-lattice of rank n in F'((1/t))^n (one character component), with
/// generators given in coordinates.
struct Lattice {
  FieldPtr F;
  int n = 0;
  std::vector<std::vector<Laurent>> gens;  // gens[i][c]
  std::vector<int> degrees;
  int prec = 0;
};

/// Lie(E)(O_L) component: the standard basis.
Lattice standard_lattice(const FieldPtr& F, int n);

/// Coordinates with respect to the A_0-twisted k((1/t))-structure, where t
/// acts as A_0 = t + N with N constant nilpotent.
std::vector<Laurent> untwist(const TModule& E, const std::vector<Laurent>& z);

/// [L1 : L2], the monic representative of det of the transition matrix in
/// the twisted structure.
Laurent lattice_index(const TModule& E, const Lattice& L1, const Lattice& L2);

struct AnalyticOptions {
  int margin = 4;       // working precision Nw = N + margin
  int degree_start = 1; // first box degree bound D
  int max_degree = 10;
  int enlargements = 3; // attempts after the first certified result
};

/// Unit lattice exp^{-1}(E(O_L)) and class module H(E,G), characterwise.
struct AnalyticSide {
  bool certified = false;
  std::string note;               // why certification failed, if it did
  int D = 0, Nw = 0;
  std::vector<Lattice> unit;      // per character
  std::vector<Laurent> index;     // [Lie(O_L) : U] per character
  int class_dim = 0;              // dim_k H
  Mat class_t_action;             // E(t) on H over k
  std::vector<Mat> class_g_action;
  std::vector<Poly> class_charpoly;  // |H| per character, over F'[t]
  /// dim_k of the truncated unit lattice and of the tail space (diagnostics)
  int kernel_dim = 0, tail_dim = 0;
};

/// Computes and certifies both objects at precision N (two consecutive agreeing
/// enlargements). Requires a normal integral basis when G is nontrivial.
AnalyticSide analytic_side(const TModule& E, const GaloisContext& ctx, const CharacterTable& ct, int N,
                           const AnalyticOptions& opt = {});

}  // namespace eqlv
