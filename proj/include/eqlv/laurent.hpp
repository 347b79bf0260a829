#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "eqlv/poly.hpp"

namespace eqlv {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated Laurent series in 1/t over a finite field.
///
/// The value is known modulo O(t^-prec): every coefficient of t^e with
/// e > -prec is stored (or is zero), nothing below is claimed. `prec ==
/// kExact` marks a finite Laurent polynomial known exactly. There is no exact
/// equality on inexact values; compare with `equal_mod`.
class Laurent {
 public:
  static constexpr int kExact = 1 << 29;

  Laurent() = default;
  /// The value O(t^-prec).
  static Laurent zero(FieldPtr F, int prec = kExact);
  static Laurent one(FieldPtr F, int prec = kExact) { return constant(std::move(F), Elem{1}, prec); }
  static Laurent constant(FieldPtr F, Elem c, int prec = kExact);
  static Laurent monomial(FieldPtr F, Elem c, int exponent, int prec = kExact);
  static Laurent from_poly(const Poly& p, int prec = kExact);
  /// Coefficients listed from exponent `top` downwards.
  static Laurent from_coeffs(FieldPtr F, int top, std::vector<Elem> coeffs, int prec);
  /// Expansion of num/den at t = infinity to absolute precision prec.
  static Laurent expand_rational(const Poly& num, const Poly& den, int prec);
  static Laurent expand_rational(const RatFunc& r, int prec) { return expand_rational(r.num(), r.den(), prec); }

  const FieldPtr& field() const { return F_; }
  int prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  /// Exponent of the leading known nonzero coefficient; only meaningful when !is_zero().
  int top() const { return top_; }
  /// True when no nonzero coefficient is known (value is O(t^-prec) or exactly 0).
  bool is_zero() const { return c_.empty(); }
  /// Upper bound for the exponent of the leading term, usable even for O(t^-prec).
  int top_bound() const { return c_.empty() ? (exact() ? -kExact : -prec_) : top_; }
  Elem lead() const { return c_.empty() ? Elem{0} : c_.front(); }
  bool is_unit() const { return !c_.empty(); }
  /// Coefficient of t^e. Throws PrecisionError when e <= -prec.
  Elem coeff(int e) const;
  /// Known coefficients from `top` down to -(prec-1) (or the last nonzero for exact values).
  const std::vector<Elem>& coeffs() const { return c_; }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent scale(Elem c) const;
  /// Multiply by t^k.
  Laurent shift(int k) const;
  /// Inverse of a unit. For exact input the result is truncated at `max_prec`.
  Laurent inv(int max_prec = kExact) const;
  /// Drop information below t^-prec.
  Laurent truncate(int prec) const;
  /// f(t^k) for k >= 1 (coefficients untouched).
  Laurent compose_power(int k) const;
  /// Part with exponents >= 0 and part with exponents < 0.
  Poly polynomial_part() const;
  Laurent tail() const;
  Laurent lift(const FieldPtr& big) const;

  /// Leading coefficient made 1.
  Laurent monic() const;

  std::string str() const;

 private:
  void normalize();
  int low() const { return top_ - static_cast<int>(c_.size()) + 1; }

  FieldPtr F_;
  int top_ = 0;
  std::vector<Elem> c_;
  int prec_ = kExact;
};

/// Coefficientwise equality for all exponents > -N. Throws PrecisionError if
/// either side is not known to that precision.
bool equal_mod(const Laurent& a, const Laurent& b, int N);
/// Largest exponent > -N where a and b differ, if any.
std::optional<int> first_difference(const Laurent& a, const Laurent& b, int N);

Laurent laurent_invert(const Laurent& u, int max_prec = Laurent::kExact);
Laurent monic_representative(const Laurent& u);
Laurent expand_rational(const Poly& num, const Poly& den, int prec);
Laurent parse_laurent(const FieldPtr& F, const std::string& s);

}  // namespace eqlv
