#include "shardcov/exactnum.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace shardcov {

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    // decimal -> exact fraction over a power of ten
    bool neg = !t.empty() && t[0] == '-';
    std::string digits = (neg ? t.substr(1) : t);
    dot = digits.find('.');
    std::string intpart = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    if (intpart.empty()) intpart = "0";
    mpz_class num(intpart + frac);
    mpz_class den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace qpoly {

void normalize(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

Poly rem(Poly a, const Poly& b) {
  assert(!b.empty());
  normalize(a);
  while (degree(a) >= degree(b)) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    normalize(a);
  }
  return a;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<long>(i);
  return r;
}

Poly monic(Poly p) {
  normalize(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

Rational eval(const Poly& p, const Rational& x) {
  Rational r(0);
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

static int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& p : seq) {
    Rational v = eval(p, x);
    int s = sgn(v);
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

int sturm_roots_in(const Poly& p, const Rational& lo, const Rational& hi) {
  std::vector<Poly> seq;
  seq.push_back(p);
  seq.push_back(derivative(p));
  normalize(seq.back());
  while (!seq.back().empty() && degree(seq.back()) > 0) {
    Poly r = rem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    normalize(r);
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

Poly inverse_mod(const Poly& a, const Poly& f) {
  // extended Euclid: r0 = f, r1 = a mod f; track only the a-cofactor
  Poly r0 = f, r1 = rem(a, f);
  Poly u0 = {}, u1 = {Rational(1)};
  while (degree(r1) > 0) {
    // quotient of r0 by r1
    Poly q;
    Poly rr = r0;
    normalize(rr);
    q.assign(std::max<size_t>(1, rr.size() - r1.size() + 1), Rational(0));
    while (degree(rr) >= degree(r1)) {
      Rational c = rr.back() / r1.back();
      size_t shift = rr.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) rr[shift + i] -= c * r1[i];
      rr.pop_back();
      normalize(rr);
    }
    normalize(q);
    Poly u2 = sub(u0, mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(rr);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r1.empty()) throw DivisionByZeroError();  // gcd(a, f) not constant
  // r1 is a nonzero constant: scale cofactor so u * a = 1 (mod f)
  Rational inv = 1 / r1[0];
  for (auto& c : u1) c *= inv;
  return rem(u1, f);
}

}  // namespace qpoly

NumberField::NumberField(std::string id, qpoly::Poly minpoly, Rational lo, Rational hi)
    : id_(std::move(id)), minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  qpoly::normalize(minpoly_);
  degree_ = qpoly::degree(minpoly_);
  if (degree_ < 1) throw std::invalid_argument("minimal polynomial must be non-constant");
  if (minpoly_.back() != 1) throw std::invalid_argument("minimal polynomial must be monic");
  // square-freeness: gcd(f, f') constant.  Irreducibility is trusted from the
  // data file; square-freeness is the part we can check cheaply.
  qpoly::Poly g = qpoly::gcd(minpoly_, qpoly::derivative(minpoly_));
  if (qpoly::degree(g) != 0)
    throw std::invalid_argument("minimal polynomial of field " + id_ + " is not square-free");
  if (degree_ == 1) {
    // degenerate rational field: theta = -c0
    lo_ = -minpoly_[0];
    hi_ = -minpoly_[0];
    sign_lo_ = 0;
    return;
  }
  if (!(lo_ < hi_)) throw std::invalid_argument("empty root interval for field " + id_);
  if (qpoly::sturm_roots_in(minpoly_, lo_, hi_) != 1)
    throw std::invalid_argument("root interval of field " + id_ + " does not isolate one root");
  Rational flo = qpoly::eval(minpoly_, lo_);
  Rational fhi = qpoly::eval(minpoly_, hi_);
  // nudge endpoints off roots (cannot happen for irreducible deg >= 2, but the
  // polynomial is only checked square-free)
  while (flo == 0) {
    lo_ -= (hi_ - lo_) / 64;
    flo = qpoly::eval(minpoly_, lo_);
  }
  while (fhi == 0) {
    hi_ += (hi_ - lo_) / 64;
    fhi = qpoly::eval(minpoly_, hi_);
  }
  if (sgn(flo) == sgn(fhi))
    throw std::invalid_argument("root interval endpoints of field " + id_ + " have equal sign");
  sign_lo_ = sgn(flo);
}

std::pair<Rational, Rational> NumberField::root_interval() const {
  std::lock_guard<std::mutex> lock(mtx_);
  return {lo_, hi_};
}

void NumberField::refine() const {
  std::lock_guard<std::mutex> lock(mtx_);
  Rational mid = (lo_ + hi_) / 2;
  Rational fmid = qpoly::eval(minpoly_, mid);
  // fmid != 0: a rational root would contradict square-free irreducible deg>=2
  if (sgn(fmid) == sign_lo_)
    lo_ = mid;
  else
    hi_ = mid;
}

int NumberField::sign_of(const std::vector<Rational>& coeffs) const {
  bool all_zero = true;
  for (const auto& c : coeffs)
    if (c != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return 0;
  if (degree_ == 1) {
    // value = c0 + c1*theta + ... but elements have length 1 here
    return sgn(coeffs[0]);
  }
  for (;;) {
    Rational lo, hi;
    {
      std::lock_guard<std::mutex> lock(mtx_);
      lo = lo_;
      hi = hi_;
    }
    // interval Horner
    Rational a(0), b(0);
    for (size_t i = coeffs.size(); i-- > 0;) {
      Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
      Rational mn = std::min(std::min(p1, p2), std::min(p3, p4));
      Rational mx = std::max(std::max(p1, p2), std::max(p3, p4));
      a = mn + coeffs[i];
      b = mx + coeffs[i];
    }
    if (sgn(a) > 0) return 1;
    if (sgn(b) < 0) return -1;
    // interval still straddles zero; the value is nonzero (deg < deg f and f
    // irreducible), so refinement terminates
    refine();
  }
}

double NumberField::root_approx() const {
  auto [lo, hi] = root_interval();
  return (lo.get_d() + hi.get_d()) / 2;
}

AlgebraicElement::AlgebraicElement(const NumberField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field->degree())
    throw std::invalid_argument("coefficient vector length does not match field degree");
}

AlgebraicElement AlgebraicElement::zero(const NumberField* field) {
  return {field, std::vector<Rational>(field->degree(), Rational(0))};
}

AlgebraicElement AlgebraicElement::one(const NumberField* field) {
  return from_rational(field, Rational(1));
}

AlgebraicElement AlgebraicElement::from_rational(const NumberField* field, const Rational& q) {
  std::vector<Rational> c(field->degree(), Rational(0));
  c[0] = q;
  return {field, std::move(c)};
}

bool AlgebraicElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

AlgebraicElement AlgebraicElement::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return {field_, std::move(c)};
}

AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b) {
  check_same_field(a, b);
  std::vector<Rational> c(a.coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return {a.field_, std::move(c)};
}

AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b) {
  check_same_field(a, b);
  std::vector<Rational> c(a.coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return {a.field_, std::move(c)};
}

AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b) {
  check_same_field(a, b);
  int d = a.field_->degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  // reduce modulo the minimal polynomial: x^d = -(c0 + c1 x + ... )
  const auto& f = a.field_->minpoly();
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0) continue;
    Rational c = prod[k];
    prod[k] = 0;
    for (int j = 0; j < d; ++j) prod[k - d + j] -= c * f[j];
  }
  prod.resize(d);
  return {a.field_, std::move(prod)};
}

AlgebraicElement AlgebraicElement::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  qpoly::Poly a(coeffs_.begin(), coeffs_.end());
  qpoly::normalize(a);
  qpoly::Poly u = qpoly::inverse_mod(a, field_->minpoly());
  u.resize(field_->degree(), Rational(0));
  return {field_, std::vector<Rational>(u.begin(), u.end())};
}

bool operator==(const AlgebraicElement& a, const AlgebraicElement& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const AlgebraicElement& a, const AlgebraicElement& b) {
  for (size_t i = 0; i < a.coeffs_.size() && i < b.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return a.coeffs_.size() < b.coeffs_.size();
}

std::string AlgebraicElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[i].get_str();
    if (i >= 1) os << "*g";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

double AlgebraicElement::approx() const {
  double theta = field_->root_approx();
  double v = 0, p = 1;
  for (const auto& c : coeffs_) {
    v += c.get_d() * p;
    p *= theta;
  }
  return v;
}

}  // namespace shardcov
