#pragma once

// Exact arithmetic over real number fields.
//
// A NumberField is a monic irreducible minimal polynomial together with an
// isolating interval that pins down one real root theta.  Elements are
// coefficient vectors in the power basis 1, theta, theta^2, ...  The
// rational field is handled as a degenerate degree-1 field so that all
// arithmetic goes through a single kernel.

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace shardcov {

using Rational = mpq_class;

struct FieldMismatchError : std::runtime_error {
  FieldMismatchError() : std::runtime_error("operands belong to different number fields") {}
};

struct DivisionByZeroError : std::runtime_error {
  DivisionByZeroError() : std::runtime_error("division by zero field element") {}
};

// Parses "p/q", "p", or decimal strings like "0.38" (exactly, as 38/100).
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// Dense univariate polynomial over Q, coefficients low-degree first.
// Only what the number-field kernel needs.
namespace qpoly {
using Poly = std::vector<Rational>;

void normalize(Poly& p);                       // strip leading zeros
int degree(const Poly& p);                     // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly rem(Poly a, const Poly& b);               // remainder of a / b
Poly derivative(const Poly& p);
Poly monic(Poly p);
Poly gcd(Poly a, Poly b);                      // monic gcd
Rational eval(const Poly& p, const Rational& x);

// Number of sign changes of the Sturm sequence of p at x.
// Together with the count at the other endpoint this counts real roots.
int sturm_roots_in(const Poly& p, const Rational& lo, const Rational& hi);

// Extended gcd restricted to what inversion needs: returns u with
// u*a = gcd (mod f); requires gcd(a, f) constant.
Poly inverse_mod(const Poly& a, const Poly& f);
}  // namespace qpoly

class NumberField {
 public:
  // minpoly: monic, coefficients c0..cdeg (cdeg = 1); [lo, hi] must isolate
  // exactly one real root.  Throws std::invalid_argument on a square-full
  // polynomial or an interval that does not isolate a single root.
  NumberField(std::string id, qpoly::Poly minpoly, Rational lo, Rational hi);

  const std::string& id() const { return id_; }
  int degree() const { return degree_; }
  const qpoly::Poly& minpoly() const { return minpoly_; }
  bool is_rational() const { return degree_ == 1; }

  // Current isolating interval (refined lazily by sign determination).
  std::pair<Rational, Rational> root_interval() const;

  // Halves the isolating interval; keeps the root certificate.
  void refine() const;

  // Exact sign of sum(coeffs[k] * theta^k).  Total.
  int sign_of(const std::vector<Rational>& coeffs) const;

  double root_approx() const;  // for diagnostics only

 private:
  std::string id_;
  qpoly::Poly minpoly_;
  int degree_;
  mutable std::mutex mtx_;
  mutable Rational lo_, hi_;
  int sign_lo_;  // sign of minpoly at lo (invariant: opposite of sign at hi)
};

class AlgebraicElement {
 public:
  AlgebraicElement() : field_(nullptr) {}
  AlgebraicElement(const NumberField* field, std::vector<Rational> coeffs);

  static AlgebraicElement zero(const NumberField* field);
  static AlgebraicElement one(const NumberField* field);
  static AlgebraicElement from_rational(const NumberField* field, const Rational& q);

  const NumberField* field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  int sign() const { return field_->sign_of(coeffs_); }

  AlgebraicElement operator-() const;
  friend AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b);
  AlgebraicElement inverse() const;  // throws DivisionByZeroError on zero

  friend bool operator==(const AlgebraicElement& a, const AlgebraicElement& b);
  friend bool operator!=(const AlgebraicElement& a, const AlgebraicElement& b) { return !(a == b); }
  // Total order on coefficient vectors (not the real-number order); used for
  // deterministic keys in maps.
  friend bool operator<(const AlgebraicElement& a, const AlgebraicElement& b);

  std::string to_string() const;  // "c0 + c1*g + ..." debugging aid
  double approx() const;

 private:
  const NumberField* field_;
  std::vector<Rational> coeffs_;
};

inline void check_same_field(const AlgebraicElement& a, const AlgebraicElement& b) {
  if (a.field() != b.field()) throw FieldMismatchError();
}

}  // namespace shardcov
