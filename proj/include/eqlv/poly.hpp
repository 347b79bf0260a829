#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eqlv/ffield.hpp"

namespace eqlv {

/// Polynomial in t over a finite field, ascending coefficients, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr F) : F_(std::move(F)) {}
  Poly(FieldPtr F, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr F, Elem c);
  static Poly monomial(FieldPtr F, Elem c, int deg);
  static Poly t(FieldPtr F) { return monomial(F, F->one(), 1); }
  static Poly one(FieldPtr F) { return constant(F, F->one()); }

  const FieldPtr& field() const { return F_; }
  const Field& F() const { return *F_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == F_->one(); }
  bool is_monic() const { return !c_.empty() && c_.back() == F_->one(); }
  Elem coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Elem{0};
  }
  Elem lead() const { return c_.empty() ? Elem{0} : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(Elem c) const;
  Poly shift(int k) const;  // multiply by t^k, k >= 0
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly monic() const;
  Poly pow(unsigned e) const;
  Elem eval(Elem x) const;
  /// f(t^k), coefficients unchanged (the q^s-twist of f when coefficients lie in F_q).
  Poly compose_power(int k) const;
  /// f(g(t)).
  Poly compose(const Poly& g) const;
  /// Coefficients raised to q^n (Frobenius on coefficients only).
  Poly frobenius_coeffs(int n) const;
  /// Reinterpret over a field containing this one (indices embed unchanged).
  Poly lift(const FieldPtr& big) const;
  /// Total order used for deterministic enumeration: (degree, coefficients from the top).
  bool lex_less(const Poly& o) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  FieldPtr F_;
  std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);  // monic (or zero)
/// Extended gcd: returns (g, s, u) with s*a + u*b = g, g monic.
std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);
bool is_irreducible(const Poly& f);
/// Parses "t^2+t+1", "3t^2 + 1", "[1,1]*t + 1" style input over F.
Poly parse_poly(const FieldPtr& F, const std::string& s);

/// Exact rational function num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Poly& num);
  RatFunc(const Poly& num, const Poly& den);
  static RatFunc zero(const FieldPtr& F) { return RatFunc(Poly(F)); }
  static RatFunc one(const FieldPtr& F) { return RatFunc(Poly::one(F)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  /// deg num - deg den (valuation at infinity is the negative of this).
  int degree() const { return num_.is_zero() ? -(1 << 28) : num_.degree() - den_.degree(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  RatFunc inv() const { return RatFunc(den_, num_); }
  /// r(t^k).
  RatFunc compose_power(int k) const { return RatFunc(num_.compose_power(k), den_.compose_power(k)); }
  std::string str() const;

 private:
  Poly num_, den_;
};

}  // namespace eqlv
