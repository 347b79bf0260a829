#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqlv/gring.hpp"

namespace eqlv {

class ContextError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All monic irreducibles of degree <= D over k, ordered by (degree, lex).
std::vector<Poly> primes_upto(const FieldPtr& k, int D);
std::vector<Poly> primes_of_degree(const FieldPtr& k, int d);
/// Monic polynomials of exact degree d, in lex order.
std::vector<Poly> monic_of_degree(const FieldPtr& k, int d);

/// Coordinates of an element of O_L (or of L_oo) in the integral basis.
using PolyVec = std::vector<Poly>;

/// Explicit L/K datum with K = k(t), O_K = k[t]. Pure data: everything the
/// rest of the library needs is in these tables.
struct GaloisContext {
  enum class Family { Trivial, Constant, Cyclotomic, Custom };

  FieldPtr k;
  AbelianGroup G;
  Family family = Family::Trivial;
  int m = 1;              // constant family: [k_m : k]
  std::optional<Poly> f;  // cyclotomic family: conductor
  int degree = 1;         // [L:K] = |G|

  std::vector<std::vector<PolyVec>> mult;  // mult[i][j] = b_i b_j
  PolyVec one;
  std::vector<std::vector<PolyVec>> action;  // action[g][j] = g(b_j)
  std::vector<PolyVec> frob;                 // frob[j] = b_j^q
  /// Cyclotomic family: residues[g] = a mod f with sigma_a = g.
  std::vector<Poly> residues;

  /// Group acts by ring automorphisms, compatibly with the group law, and
  /// commutes with the q-power map. Throws ContextError.
  void validate() const;
  std::string family_name() const;

  PolyVec multiply(const PolyVec& x, const PolyVec& y) const;
  PolyVec apply(int g, const PolyVec& x) const;
  /// x^q in O_L (coefficients in k are fixed by q-power).
  PolyVec qpower(const PolyVec& x) const;
};

GaloisContext trivial_context(const FieldPtr& k);
/// L = k_m(t), G = Gal(k_m/k) generated by the q-Frobenius, normal basis of k_m/k.
GaloisContext build_constant_context(const FieldPtr& k, int m);
/// L = K(lambda_f) for the Carlitz f-torsion, f monic squarefree.
GaloisContext build_cyclotomic_context(const FieldPtr& k, const Poly& f);

/// Carlitz action C_a as an additive polynomial: coefficients of x^{q^i}.
std::vector<Poly> carlitz_additive(const Poly& a);

/// Finite-dimensional commutative k-algebra given by structure constants.
struct FinAlg {
  FieldPtr k;
  int dim = 0;
  std::vector<std::vector<std::vector<Elem>>> mult;  // mult[i][j] = b_i b_j
  std::vector<Elem> one;

  std::vector<Elem> mul(const std::vector<Elem>& a, const std::vector<Elem>& b) const;
  std::vector<Elem> pow(std::vector<Elem> a, std::uint64_t e) const;
  Mat mult_matrix(const std::vector<Elem>& a) const;
  std::vector<Elem> basis_vector(int i) const;
};

/// Data at a prime p of k[t]: the residue algebra B_p = O_L/pO_L over k
/// (basis t^j b_i, index i*d + j) with its G-action, q-power map and the
/// primes above p.
struct PrimeData {
  Poly p;
  int d = 0;
  FinAlg B;
  std::vector<Mat> action;  // per group element, over k
  Mat qpow;                 // x -> x^q, k-linear
  std::vector<Elem> zbar;   // image of t
  Mat radical;              // basis of the nilradical J (columns)
  std::vector<int> frob;    // frob_P: the coset of Frobenius lifts
  std::vector<int> inertia;
  std::vector<int> decomposition;
  int e = 1;                // ramification index
  int f = 1;                // residue degree of P over p
  int r = 1;                // number of primes above p
  std::vector<std::vector<Elem>> prime_idempotents;  // one per prime P above p

  bool unramified() const { return e == 1; }
  /// Frob_P, the unique element of frob when unramified.
  int frobenius() const { return frob.front(); }
};

FinAlg residue_algebra(const GaloisContext& ctx, const Poly& p);
PrimeData prime_data(const GaloisContext& ctx, const Poly& p);

/// Constant coordinates theta whose conjugates {g theta} form a k[t]-basis
/// of O_L, when one exists.
std::optional<std::vector<Elem>> normal_integral_basis(const GaloisContext& ctx);

}  // namespace eqlv
