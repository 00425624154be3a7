#include "shardcov/signs.hpp"

namespace shardcov {

RSign rsign_from_char(char c) {
  switch (c) {
    case '-': return RSign::Minus;
    case '0': return RSign::Zero;
    case '+': return RSign::Plus;
    case '*': return RSign::Star;
    default: throw std::invalid_argument(std::string("bad sign character '") + c + "'");
  }
}

RSign intersect(RSign a, RSign b) {
  if (a == RSign::Star) return b;
  if (b == RSign::Star) return a;
  if (a == RSign::Zero || b == RSign::Zero) return RSign::Zero;
  return a == b ? a : RSign::Zero;
}

std::string to_string(const SignVector& v) {
  std::string s;
  s.reserve(v.size());
  for (Sign x : v) s += sign_char(x);
  return s;
}

std::string to_string(const RestrictedCovector& v) {
  std::string s;
  s.reserve(v.size());
  for (RSign x : v) s += rsign_char(x);
  return s;
}

SignVector sign_vector_from_string(const std::string& s) {
  SignVector v;
  v.reserve(s.size());
  for (char c : s) {
    RSign r = rsign_from_char(c);
    if (r == RSign::Star) throw std::invalid_argument("'*' not allowed in a sign vector");
    v.push_back(static_cast<Sign>(r));
  }
  return v;
}

RestrictedCovector restricted_from_string(const std::string& s) {
  RestrictedCovector v;
  v.reserve(s.size());
  for (char c : s) v.push_back(rsign_from_char(c));
  return v;
}

RestrictedCovector to_restricted(const SignVector& v) {
  RestrictedCovector r;
  r.reserve(v.size());
  for (Sign s : v) r.push_back(static_cast<RSign>(s));
  return r;
}

RestrictedCovector intersect(const RestrictedCovector& a, const RestrictedCovector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("covector length mismatch");
  RestrictedCovector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = intersect(a[i], b[i]);
  return r;
}

SignVector unpack(const PackedSV& v, int m) {
  SignVector r(m, Sign::Zero);
  for (int i = 0; i < m; ++i) {
    if (v.plus >> i & 1)
      r[i] = Sign::Plus;
    else if (v.minus >> i & 1)
      r[i] = Sign::Minus;
  }
  return r;
}

PackedSV pack(const SignVector& v) {
  PackedSV r;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == Sign::Plus)
      r.plus |= uint64_t(1) << i;
    else if (v[i] == Sign::Minus)
      r.minus |= uint64_t(1) << i;
  }
  return r;
}

RestrictedCovector unpack(const PackedRC& v, int m) {
  RestrictedCovector r(m, RSign::Star);
  for (int i = 0; i < m; ++i) {
    if (v.plus >> i & 1)
      r[i] = RSign::Plus;
    else if (v.minus >> i & 1)
      r[i] = RSign::Minus;
    else if (v.zero >> i & 1)
      r[i] = RSign::Zero;
  }
  return r;
}

PackedRC pack(const RestrictedCovector& v) {
  PackedRC r;
  for (size_t i = 0; i < v.size(); ++i) {
    uint64_t bit = uint64_t(1) << i;
    switch (v[i]) {
      case RSign::Plus: r.plus |= bit; break;
      case RSign::Minus: r.minus |= bit; break;
      case RSign::Zero: r.zero |= bit; break;
      case RSign::Star: break;
    }
  }
  return r;
}

namespace {
inline int rank_of(RSign s) {
  switch (s) {
    case RSign::Minus: return 0;
    case RSign::Zero: return 1;
    case RSign::Plus: return 2;
    default: return 3;
  }
}
}  // namespace

int lex_compare(const SignVector& a, const SignVector& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int d = rank_of(static_cast<RSign>(a[i])) - rank_of(static_cast<RSign>(b[i]));
    if (d != 0) return d;
  }
  return static_cast<int>(a.size()) - static_cast<int>(b.size());
}

int lex_compare(const RestrictedCovector& a, const RestrictedCovector& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int d = rank_of(a[i]) - rank_of(b[i]);
    if (d != 0) return d;
  }
  return static_cast<int>(a.size()) - static_cast<int>(b.size());
}

}  // namespace shardcov
