#include "eqlv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace eqlv {

Poly::Poly(FieldPtr F, std::vector<Elem> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(FieldPtr F, Elem c) { return Poly(std::move(F), {c}); }

Poly Poly::monomial(FieldPtr F, Elem c, int deg) {
  std::vector<Elem> v(static_cast<std::size_t>(deg) + 1, Elem{0});
  v.back() = c;
  return Poly(std::move(F), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  const Field& K = F_ ? *F_ : *o.F_;
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), Elem{0});
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = K.add(r[i], o.c_[i]);
  return Poly(F_ ? F_ : o.F_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->neg(c_[i]);
  return Poly(F_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly(F_ ? F_ : o.F_);
  const Field& K = *F_;
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, Elem{0});
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].v == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].v == 0) continue;
      r[i + j] = K.add(r[i + j], K.mul(c_[i], o.c_[j]));
    }
  }
  return Poly(F_, std::move(r));
}

Poly Poly::scale(Elem c) const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->mul(c_[i], c);
  return Poly(F_, std::move(r));
}

Poly Poly::shift(int k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> r(static_cast<std::size_t>(k), Elem{0});
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(F_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw FieldError("polynomial division by zero");
  const Field& K = *d.F_;
  if (degree() < d.degree()) return {Poly(d.F_), *this};
  std::vector<Elem> r = c_;
  std::vector<Elem> q(c_.size() - d.c_.size() + 1, Elem{0});
  const Elem li = K.inv(d.lead());
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = r.size(); k-- > dd;) {
    const Elem c = K.mul(r[k], li);
    if (c.v == 0) continue;
    q[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) r[k - dd + i] = K.sub(r[k - dd + i], K.mul(c, d.c_[i]));
  }
  return {Poly(d.F_, std::move(q)), Poly(d.F_, std::move(r))};
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scale(F_->inv(lead()));
}

Poly Poly::pow(unsigned e) const {
  Poly r = one(F_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Elem Poly::eval(Elem x) const {
  Elem r{0};
  for (std::size_t i = c_.size(); i-- > 0;) r = F_->add(F_->mul(r, x), c_[i]);
  return r;
}

Poly Poly::compose_power(int k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> r((c_.size() - 1) * static_cast<std::size_t>(k) + 1, Elem{0});
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(k)] = c_[i];
  return Poly(F_, std::move(r));
}

Poly Poly::compose(const Poly& g) const {
  Poly r(F_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(F_, c_[i]);
  return r;
}

Poly Poly::frobenius_coeffs(int n) const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = F_->frobenius_pow(c_[i], n);
  return Poly(F_, std::move(r));
}

Poly Poly::lift(const FieldPtr& big) const { return Poly(big, c_); }

bool Poly::lex_less(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i)
    if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
  return false;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool prime = F_->prime_degree() == 1;
  for (int i = degree(); i >= 0; --i) {
    const Elem c = coeff(i);
    if (c.v == 0) continue;
    if (!first) os << '+';
    first = false;
    const std::string cs = prime ? std::to_string(c.v) : F_->format(c);
    if (i == 0) {
      os << cs;
      continue;
    }
    if (c != F_->one()) os << cs << (prime ? "" : "*");
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
  const FieldPtr& F = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b, s0 = Poly::one(F), s1(F), u0(F), u1 = Poly::one(F);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, u2 = u0 - q * u1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.is_zero()) return {r0, s0, u0};
  const Elem li = F->inv(r0.lead());
  return {r0.scale(li), s0.scale(li), u0.scale(li)};
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  return !rawpoly::find_factor(f.F(), f.monic().coeffs()).has_value();
}

Poly parse_poly(const FieldPtr& F, const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw FieldError("empty polynomial");
  Poly r(F);
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    Elem c = F->one();
    bool have_coeff = false;
    if (i < s.size() && s[i] == '[') {
      const std::size_t close = s.find(']', i);
      if (close == std::string::npos) throw FieldError("unbalanced bracket in " + input);
      c = F->parse(s.substr(i, close - i + 1));
      i = close + 1;
      have_coeff = true;
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      c = F->from_int(std::stoll(s.substr(i, j - i)));
      i = j;
      have_coeff = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    int deg = 0;
    if (i < s.size() && (s[i] == 't' || s[i] == 'x')) {
      deg = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw FieldError("missing exponent in " + input);
        deg = std::stoi(s.substr(i, j - i));
        i = j;
      }
    } else if (!have_coeff) {
      throw FieldError("cannot parse polynomial: " + input);
    }
    if (negative) c = F->neg(c);
    r += Poly::monomial(F, c, deg);
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw FieldError("cannot parse polynomial: " + input);
  }
  return r;
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::one(num.field())) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw FieldError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly(den.field());
    den_ = Poly::one(den.field());
    return;
  }
  Poly g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  const Elem li = den_.F().inv(den_.lead());
  num_ = num_.scale(li);
  den_ = den_.scale(li);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return zero(field());
  // cross-cancel before multiplying to keep degrees small
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  RatFunc r;
  r.num_ = (num_ / g1) * (o.num_ / g2);
  r.den_ = (den_ / g2) * (o.den_ / g1);
  const Elem li = r.den_.F().inv(r.den_.lead());
  r.num_ = r.num_.scale(li);
  r.den_ = r.den_.scale(li);
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw FieldError("rational function division by zero");
  return *this * o.inv();
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace eqlv
