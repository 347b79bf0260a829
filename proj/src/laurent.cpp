#include "eqlv/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eqlv {

namespace {

int sat_sub(int a, int b) {
  if (a >= Laurent::kExact) return Laurent::kExact;
  return a - b;
}

}  // namespace

Laurent Laurent::zero(FieldPtr F, int prec) {
  Laurent r;
  r.F_ = std::move(F);
  r.prec_ = std::min(prec, kExact);
  r.top_ = r.exact() ? 0 : -r.prec_;
  return r;
}

Laurent Laurent::constant(FieldPtr F, Elem c, int prec) { return monomial(std::move(F), c, 0, prec); }

Laurent Laurent::monomial(FieldPtr F, Elem c, int exponent, int prec) {
  Laurent r;
  r.F_ = std::move(F);
  r.prec_ = std::min(prec, kExact);
  r.top_ = exponent;
  if (exponent > -r.prec_) r.c_.push_back(c);
  if (!r.exact())
    r.c_.resize(static_cast<std::size_t>(std::max(0, exponent + r.prec_)), Elem{0});
  r.normalize();
  return r;
}

Laurent Laurent::from_poly(const Poly& p, int prec) {
  Laurent r;
  r.F_ = p.field();
  r.prec_ = std::min(prec, kExact);
  if (p.is_zero()) return zero(p.field(), prec);
  r.top_ = p.degree();
  for (int e = p.degree(); e >= 0 && e > -r.prec_; --e) r.c_.push_back(p.coeff(e));
  if (!r.exact())
    r.c_.resize(static_cast<std::size_t>(std::max(0, r.top_ + r.prec_)), Elem{0});
  r.normalize();
  return r;
}

Laurent Laurent::from_coeffs(FieldPtr F, int top, std::vector<Elem> coeffs, int prec) {
  Laurent r;
  r.F_ = std::move(F);
  r.top_ = top;
  r.prec_ = std::min(prec, kExact);
  r.c_ = std::move(coeffs);
  if (!r.exact()) r.c_.resize(static_cast<std::size_t>(std::max(0, top + r.prec_)), Elem{0});
  r.normalize();
  return r;
}

void Laurent::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].v == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    top_ = exact() ? 0 : -prec_;
    return;
  }
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    top_ -= static_cast<int>(lead);
  }
  if (exact())
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Elem Laurent::coeff(int e) const {
  if (!exact() && e <= -prec_) throw PrecisionError("coefficient of t^" + std::to_string(e) +
                                                    " not known (precision " + std::to_string(prec_) + ")");
  if (c_.empty() || e > top_ || e < low()) return Elem{0};
  return c_[static_cast<std::size_t>(top_ - e)];
}

Laurent Laurent::operator+(const Laurent& o) const {
  const FieldPtr& F = F_ ? F_ : o.F_;
  const int prec = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) return zero(F, prec);
  int top = std::max(c_.empty() ? INT_MIN : top_, o.c_.empty() ? INT_MIN : o.top_);
  int lowest = std::min(c_.empty() ? INT_MAX : low(), o.c_.empty() ? INT_MAX : o.low());
  if (prec < kExact) lowest = -prec + 1;
  if (top < lowest) return zero(F, prec);
  std::vector<Elem> r(static_cast<std::size_t>(top - lowest + 1), Elem{0});
  for (int e = top; e >= lowest; --e) {
    Elem a = (c_.empty() || e > top_ || e < low()) ? Elem{0} : c_[static_cast<std::size_t>(top_ - e)];
    Elem b = (o.c_.empty() || e > o.top_ || e < o.low()) ? Elem{0} : o.c_[static_cast<std::size_t>(o.top_ - e)];
    r[static_cast<std::size_t>(top - e)] = F->add(a, b);
  }
  return from_coeffs(F, top, std::move(r), prec);
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  const FieldPtr& F = F_ ? F_ : o.F_;
  int prec;
  if (exact() && o.exact()) {
    prec = kExact;
  } else {
    const int pa = (exact() && c_.empty()) ? kExact : sat_sub(prec_, o.top_bound());
    const int pb = (o.exact() && o.c_.empty()) ? kExact : sat_sub(o.prec_, top_bound());
    prec = std::min(pa, pb);
    if (exact() && c_.empty()) prec = kExact;
    if (o.exact() && o.c_.empty()) prec = kExact;
  }
  if (c_.empty() || o.c_.empty()) return zero(F, prec);
  const int top = top_ + o.top_;
  std::size_t len = c_.size() + o.c_.size() - 1;
  if (prec < kExact) len = static_cast<std::size_t>(std::max(0, top + prec));
  std::vector<Elem> r(len, Elem{0});
  for (std::size_t i = 0; i < c_.size() && i < len; ++i) {
    if (c_[i].v == 0) continue;
    for (std::size_t j = 0; j < o.c_.size() && i + j < len; ++j)
      r[i + j] = F->add(r[i + j], F->mul(c_[i], o.c_[j]));
  }
  return from_coeffs(F, top, std::move(r), prec);
}

Laurent Laurent::scale(Elem c) const {
  if (c.v == 0) return zero(F_, prec_);
  Laurent r = *this;
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

Laurent Laurent::shift(int k) const {
  Laurent r = *this;
  r.top_ += k;
  if (!exact()) r.prec_ -= k;
  if (r.c_.empty() && !r.exact()) r.top_ = -r.prec_;
  return r;
}

Laurent Laurent::inv(int max_prec) const {
  if (c_.empty()) throw PrecisionError("inverse of a non-unit Laurent series");
  const int v = top_;
  int prec = exact() ? std::min(max_prec, kExact) : std::min(2 * v + prec_, max_prec);
  if (prec >= kExact) throw PrecisionError("inverse of an exact series needs a precision bound");
  const int len = std::max(0, -v + prec);
  const Elem ci = F_->inv(c_[0]);
  std::vector<Elem> w(static_cast<std::size_t>(len), Elem{0});
  for (int k = 0; k < len; ++k) {
    Elem s = k == 0 ? F_->one() : Elem{0};
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j)
      s = F_->sub(s, F_->mul(c_[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(k - j)]));
    w[static_cast<std::size_t>(k)] = F_->mul(s, ci);
  }
  return from_coeffs(F_, -v, std::move(w), prec);
}

Laurent Laurent::truncate(int prec) const {
  if (prec >= prec_) return *this;
  Laurent r = *this;
  r.prec_ = prec;
  if (r.c_.empty()) {
    r.top_ = -prec;
    return r;
  }
  r.c_.resize(static_cast<std::size_t>(std::max(0, r.top_ + prec)), Elem{0});
  r.normalize();
  return r;
}

Laurent Laurent::compose_power(int k) const {
  if (k == 1) return *this;
  const int prec = exact() ? kExact : prec_ * k;
  if (c_.empty()) return zero(F_, prec);
  std::vector<Elem> r;
  const int top = top_ * k;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r.push_back(c_[i]);
    if (i + 1 < c_.size()) r.insert(r.end(), static_cast<std::size_t>(k - 1), Elem{0});
  }
  return from_coeffs(F_, top, std::move(r), prec);
}

Poly Laurent::polynomial_part() const {
  std::vector<Elem> r;
  for (int e = 0; e <= top_ && !c_.empty(); ++e) r.push_back(coeff(e));
  return Poly(F_, std::move(r));
}

Laurent Laurent::tail() const {
  if (c_.empty() || top_ < 0) return *this;
  std::vector<Elem> r;
  for (int e = -1; e >= low(); --e) r.push_back(coeff(e));
  return from_coeffs(F_, -1, std::move(r), prec_);
}

Laurent Laurent::lift(const FieldPtr& big) const {
  Laurent r = *this;
  r.F_ = big;
  return r;
}

Laurent Laurent::monic() const {
  if (c_.empty()) throw PrecisionError("monic representative of a non-unit");
  return scale(F_->inv(c_[0]));
}

std::string Laurent::str() const {
  std::ostringstream os;
  bool first = true;
  const bool prime = F_->prime_degree() == 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Elem c = c_[i];
    if (c.v == 0) continue;
    const int e = top_ - static_cast<int>(i);
    if (!first) os << " + ";
    first = false;
    const std::string cs = prime || c == F_->one() ? std::to_string(c.v) : F_->format(c);
    if (e == 0) {
      os << cs;
      continue;
    }
    if (c != F_->one()) os << cs << (prime ? "" : "*");
    os << 't';
    if (e != 1) os << '^' << e;
  }
  if (!exact()) {
    if (!first) os << " + ";
    first = false;
    os << "O(t^" << -prec_ << ')';
  }
  if (first) os << '0';
  return os.str();
}

bool equal_mod(const Laurent& a, const Laurent& b, int N) { return !first_difference(a, b, N).has_value(); }

std::optional<int> first_difference(const Laurent& a, const Laurent& b, int N) {
  if (a.prec() < N || b.prec() < N)
    throw PrecisionError("comparison modulo t^-" + std::to_string(N) + " needs precision " + std::to_string(N) +
                         " (have " + std::to_string(std::min(a.prec(), b.prec())) + ")");
  int top = std::max(a.is_zero() ? -N : a.top(), b.is_zero() ? -N : b.top());
  for (int e = top; e > -N; --e)
    if (a.coeff(e) != b.coeff(e)) return e;
  return std::nullopt;
}

Laurent laurent_invert(const Laurent& u, int max_prec) { return u.inv(max_prec); }

Laurent monic_representative(const Laurent& u) { return u.monic(); }

Laurent expand_rational(const Poly& num, const Poly& den, int prec) {
  if (den.is_zero()) throw FieldError("expand_rational: zero denominator");
  if (num.is_zero()) return Laurent::zero(den.field(), prec);
  // num/den has top deg num - deg den; need den^-1 to precision prec + deg num
  const Laurent d = Laurent::from_poly(den);
  const Laurent di = d.inv(prec + num.degree());
  return (Laurent::from_poly(num) * di).truncate(prec);
}

Laurent Laurent::expand_rational(const Poly& num, const Poly& den, int prec) {
  return eqlv::expand_rational(num, den, prec);
}

Laurent parse_laurent(const FieldPtr& F, const std::string& input) {
  // terms like "1", "t^-2", "2t^-3", "[1,0]*t^-1", "O(t^-5)" separated by '+' or '-'
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  Laurent r = Laurent::zero(F);
  int prec = Laurent::kExact;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    if (s.compare(i, 4, "O(t^") == 0) {
      const std::size_t close = s.find(')', i);
      if (close == std::string::npos) throw FieldError("bad O-term in " + input);
      prec = -std::stoi(s.substr(i + 4, close - i - 4));
      i = close + 1;
      continue;
    }
    Elem c = F->one();
    bool have = false;
    if (i < s.size() && s[i] == '[') {
      const std::size_t close = s.find(']', i);
      if (close == std::string::npos) throw FieldError("unbalanced bracket in " + input);
      c = F->parse(s.substr(i, close - i + 1));
      i = close + 1;
      have = true;
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      c = F->from_int(std::stoll(s.substr(i, j - i)));
      i = j;
      have = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    int e = 0;
    if (i < s.size() && s[i] == 't') {
      e = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        if (j < s.size() && s[j] == '-') ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        e = std::stoi(s.substr(i, j - i));
        i = j;
      }
    } else if (!have) {
      throw FieldError("cannot parse Laurent series: " + input);
    }
    if (negative) c = F->neg(c);
    r += Laurent::monomial(F, c, e);
  }
  return r.truncate(prec);
}

}  // namespace eqlv
