#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqlv/analytic.hpp"

namespace eqlv {

enum class LVariant { Equivariant, Hom, Tensor, Artin };
std::string variant_name(LVariant v);

enum class Verdict { Pass, Fail, Inconclusive };
std::string verdict_name(Verdict v);

/// One prime of the product with its local data.
struct LedgerEntry {
  Poly p;
  int e = 1, f = 1, r = 1;
  std::vector<Laurent> factor;  // per character (equivariant) or a single entry
  std::string note;             // numerator/denominator of the factor, rendered
};

struct EulerProduct {
  LVariant variant = LVariant::Equivariant;
  int N = 0;  // precision
  int D = 0;  // prime-degree bound
  std::vector<Laurent> value;  // per character for Equivariant, else one entry over F
  std::optional<GLaurent> gvalue;
  std::vector<LedgerEntry> ledger;
};

/// L(E,G) as a product over primes of degree <= D (default N) in k((1/t))[G].
EulerProduct euler_product_equivariant(const TModule& E, const GaloisContext& ctx, const CharacterTable& ct, int N,
                                       int D = -1);
/// L(E,rho) with Hom or Tensor local factors.
EulerProduct euler_product_rep(const TModule& E, const GaloisContext& ctx, const Rep& rho, LVariant variant, int N,
                               int D = -1);
/// L(n,rho) from Galois data only: det(1 - rho(Frob_P)/p^n | V^{I_P})^{-1}.
EulerProduct euler_product_artin(int n, const GaloisContext& ctx, const Rep& rho, int N, int D = -1);

/// sum over monic a of degree < N of 1/a^n, to precision N.
Laurent zeta_monic_sum_oracle(const FieldPtr& k, int n, int N);

struct Comparison {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> first_difference;  // exponent of the first differing coefficient
  std::string detail;
};
Comparison compare_mod(const Laurent& a, const Laurent& b, int N);
/// Pass when all entries pass, Fail when any fails.
Comparison combine(const std::vector<Comparison>& parts);

/// twist_det(L(E,G), rho) against L(E,rho) computed with Hom factors.
Comparison specialize_and_compare(const TModule& E, const GaloisContext& ctx, const CharacterTable& ct,
                                  const EulerProduct& Lg, const Rep& rho, int N);

struct ArtinBundle {
  Laurent artin, tensor, hom;
  Comparison artin_vs_tensor;  // equality of the two Artin products
  Comparison hom_vs_artin;     // tame equality
  Comparison per_prime;        // inertia quotient identities, exact
  Comparison witness;          // L(n,rho)/L(C^n,rho) against the ramified-prime rational function
  Poly witness_num, witness_den;
  bool tame = true;
};
ArtinBundle artin_compare(int n, const GaloisContext& ctx, const Rep& rho, int N);

struct ClassFormula {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Laurent> lhs, rhs;  // per character
  std::vector<Comparison> per_character;
  AnalyticSide analytic;
  EulerProduct euler;
};
/// L(E,G) = [Lie(E)(O_L) : exp^{-1}E(O_L)] |H(E,G)|, characterwise mod t^-N.
ClassFormula verify_class_formula(const TModule& E, const GaloisContext& ctx, const CharacterTable& ct, int N,
                                  const AnalyticOptions& opt = {});

}  // namespace eqlv
