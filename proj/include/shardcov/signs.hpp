#pragma once

// Sign vectors over {-,0,+} and restricted covectors over {-,0,+,*}.
//
// Vectors of length m <= 64 are packed into plus/minus bit masks; the
// graph-search inner loops run entirely on these masks.  The string forms
// ("-0+", "+*-+-0") are the canonical interchange/CLI representation.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shardcov {

enum class Sign : int8_t { Minus = -1, Zero = 0, Plus = 1 };
// Restricted covector symbol; Star marks forgotten positions.
enum class RSign : int8_t { Minus = -1, Zero = 0, Plus = 1, Star = 2 };

inline char sign_char(Sign s) { return s == Sign::Minus ? '-' : (s == Sign::Zero ? '0' : '+'); }
inline char rsign_char(RSign s) {
  switch (s) {
    case RSign::Minus: return '-';
    case RSign::Zero: return '0';
    case RSign::Plus: return '+';
    default: return '*';
  }
}

RSign rsign_from_char(char c);

// Entrywise intersection: + n + = +, - n - = -, + n - = 0, 0 n e = 0,
// * n e = e.  Commutative and associative.
RSign intersect(RSign a, RSign b);

using SignVector = std::vector<Sign>;
using RestrictedCovector = std::vector<RSign>;

std::string to_string(const SignVector& v);
std::string to_string(const RestrictedCovector& v);
SignVector sign_vector_from_string(const std::string& s);
RestrictedCovector restricted_from_string(const std::string& s);

RestrictedCovector to_restricted(const SignVector& v);
RestrictedCovector intersect(const RestrictedCovector& a, const RestrictedCovector& b);

// Full sign vector with no stars, packed.  Positions not in plus|minus are 0.
struct PackedSV {
  uint64_t plus = 0;
  uint64_t minus = 0;

  uint64_t support() const { return plus | minus; }
  PackedSV negated() const { return {minus, plus}; }
  // Reorientation: flip the entries selected by mask.
  PackedSV flipped(uint64_t mask) const {
    return {(plus & ~mask) | (minus & mask), (minus & ~mask) | (plus & mask)};
  }
  friend bool operator==(const PackedSV&, const PackedSV&) = default;
};

// Restricted covector, packed; star occupies every position not in
// plus|minus|zero.
struct PackedRC {
  uint64_t plus = 0;
  uint64_t minus = 0;
  uint64_t zero = 0;

  PackedRC flipped(uint64_t mask) const {
    return {(plus & ~mask) | (minus & mask), (minus & ~mask) | (plus & mask), zero};
  }
  friend bool operator==(const PackedRC&, const PackedRC&) = default;
};

SignVector unpack(const PackedSV& v, int m);
PackedSV pack(const SignVector& v);
RestrictedCovector unpack(const PackedRC& v, int m);
PackedRC pack(const RestrictedCovector& v);

// h full covector: true iff h n a n b == h under the intersection table.
inline bool intersection_fixes(const PackedSV& h, const PackedRC& a, const PackedRC& b,
                               uint64_t all) {
  uint64_t a_star = all & ~(a.plus | a.minus | a.zero);
  uint64_t b_star = all & ~(b.plus | b.minus | b.zero);
  uint64_t ok_plus = (a.plus | a_star) & (b.plus | b_star);
  uint64_t ok_minus = (a.minus | a_star) & (b.minus | b_star);
  return (h.plus & ~ok_plus) == 0 && (h.minus & ~ok_minus) == 0;
}

// Lexicographic order with - < 0 < + (< * for restricted covectors), entry 0
// most significant.  Used for all deterministic orderings.
int lex_compare(const SignVector& a, const SignVector& b);
int lex_compare(const RestrictedCovector& a, const RestrictedCovector& b);

}  // namespace shardcov
