#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlv {

/// Element of a finite field, stored as its index in the flattened tower basis
/// (base-p digits are the coordinates over the prime field).
struct Elem {
  std::uint32_t v = 0;
  constexpr auto operator<=>(const Elem&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by Field::extend when a user modulus is reducible. `factor` holds a
/// nontrivial monic factor (ascending coefficients over the base).
class ReducibleModulus : public FieldError {
 public:
  ReducibleModulus(std::string what, std::vector<Elem> factor)
      : FieldError(std::move(what)), factor(std::move(factor)) {}
  std::vector<Elem> factor;
};

/// A finite field given as a tower F_p ⊂ F_p[x1]/(f1) ⊂ ... . One level is
/// designated as the base; q is its cardinality and Frobenius/trace/norm are
/// taken relative to it. Immutable once built.
class Field : public std::enable_shared_from_this<Field> {
 public:
  struct Level {
    std::uint32_t card;         // cardinality of this level
    int degree;                 // degree over the previous level
    std::vector<Elem> modulus;  // monic, ascending, coefficients in previous level
  };

  static FieldPtr prime(std::uint32_t p);
  /// Degree-`degree` extension of `base` (relative to base's top level). With no
  /// modulus the lexicographically smallest irreducible monic is used.
  static FieldPtr extend(const FieldPtr& base, int degree,
                         std::optional<std::vector<Elem>> modulus = std::nullopt);
  /// Same tower with the top level designated as base (q = card).
  FieldPtr as_ground() const;

  std::uint32_t p() const { return p_; }
  std::uint32_t card() const { return levels_.back().card; }
  std::uint32_t q() const { return levels_[base_level_].card; }
  int prime_degree() const { return prime_degree_; }
  /// Degree over the designated base.
  int degree() const;
  int levels() const { return static_cast<int>(levels_.size()); }
  const Level& level(int i) const { return levels_[static_cast<std::size_t>(i)]; }
  int base_level() const { return base_level_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(long long n) const;
  Elem elem(std::uint32_t index) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// a^(q^n).
  Elem frobenius_pow(Elem a, int n) const;
  /// Sum of the conjugates of a over the base level.
  Elem trace_to_base(Elem a) const;
  Elem norm_to_base(Elem a) const;
  bool in_base(Elem a) const { return a.v < q(); }
  /// Element of multiplicative order card-1.
  Elem primitive() const;
  /// Element of exact multiplicative order n (n must divide card-1).
  Elem root_of_unity(std::uint32_t n) const;
  std::uint32_t order(Elem a) const;

  /// Coordinates over the prime field, e.g. "[1,0,1]".
  std::string format(Elem a) const;
  Elem parse(const std::string& s) const;

  /// Same tower, same base designation.
  bool same_as(const Field& other) const;
  /// True when `sub` is a prefix of this tower (so indices embed unchanged).
  bool contains(const Field& sub) const;

 private:
  Field() = default;
  void build_tables();
  Elem mul_level(int lvl, Elem a, Elem b) const;
  Elem inv_slow(Elem a) const;

  std::uint32_t p_ = 2;
  int prime_degree_ = 1;
  int base_level_ = 0;
  std::vector<Level> levels_;
  // log/antilog tables when the top level is small enough
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Polynomials over a field as raw ascending coefficient vectors; used for
/// irreducibility scans on arbitrary levels.
namespace rawpoly {
std::vector<Elem> trim(std::vector<Elem> a);
std::vector<Elem> mulmod(const Field& F, const std::vector<Elem>& a, const std::vector<Elem>& b,
                         const std::vector<Elem>& m);
std::vector<Elem> mod(const Field& F, std::vector<Elem> a, const std::vector<Elem>& m);
std::vector<Elem> gcd(const Field& F, std::vector<Elem> a, std::vector<Elem> b);
/// Irreducibility over F (all of F, not only the base). Returns a nontrivial
/// factor when reducible.
std::optional<std::vector<Elem>> find_factor(const Field& F, const std::vector<Elem>& f);
}  // namespace rawpoly

}  // namespace eqlv
