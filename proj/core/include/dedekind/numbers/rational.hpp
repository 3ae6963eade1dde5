#pragma once

#include "dedekind/numbers/integer.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dedekind::numbers {

// A representative (p, q), q != 0, of the fraction p/q. Arithmetic on
// representatives:
//   (p, q) + (r, s) = (ps + rq, qs)
//   (p, q) * (r, s) = (pr, qs)
//   -(p, q) = (-p, q),  (p, q)^-1 = (q, p)
// Two pairs denote the same rational iff ps = rq.
struct RatPair {
  IntClass num;
  IntClass den;
};

RatPair operator+(const RatPair& x, const RatPair& y);
RatPair operator*(const RatPair& x, const RatPair& y);
RatPair operator-(const RatPair& x);
bool equivalent(const RatPair& x, const RatPair& y);

// A rational as the class of integer pairs, stored in lowest terms with a
// positive denominator; the sign lives in the numerator.
class RatClass {
 public:
  RatClass() : den_(1) {}
  // Throws std::domain_error when the denominator is zero.
  explicit RatClass(const RatPair& representative);
  RatClass(const IntClass& num, const IntClass& den) : RatClass(RatPair{num, den}) {}
  explicit RatClass(const IntClass& n) : num_(n), den_(1) {}

  static RatClass from_int(long long v) { return RatClass(IntClass::from_int(v)); }
  static RatClass from_ints(long long p, long long q) {
    return RatClass(IntClass::from_int(p), IntClass::from_int(q));
  }

  const IntClass& num() const noexcept { return num_; }
  const Natural& den() const noexcept { return den_; }
  RatPair pair() const { return {num_, IntClass::from_natural(den_)}; }

  int sign() const noexcept { return num_.sign(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RatClass operator+(const RatClass& x, const RatClass& y) { return RatClass(x.pair() + y.pair()); }
  friend RatClass operator*(const RatClass& x, const RatClass& y) { return RatClass(x.pair() * y.pair()); }
  friend RatClass operator-(const RatClass& x) { return RatClass(-x.pair()); }
  friend RatClass operator-(const RatClass& x, const RatClass& y) { return x + (-y); }
  friend RatClass operator/(const RatClass& x, const RatClass& y);

  friend bool operator==(const RatClass&, const RatClass&) = default;
  friend std::strong_ordering operator<=>(const RatClass& x, const RatClass& y);

 private:
  IntClass num_;
  Natural den_;
};

RatClass rat_make(const IntClass& p, const IntClass& q);
RatClass rat_add(const RatClass& x, const RatClass& y);
RatClass rat_mul(const RatClass& x, const RatClass& y);
RatClass rat_neg(const RatClass& x);
// Throws std::domain_error on zero.
RatClass rat_inv(const RatClass& x);
std::strong_ordering rat_cmp(const RatClass& x, const RatClass& y);

RatClass abs(const RatClass& x);

// "-1/2", "3". Integers render without a denominator.
std::string to_string(const RatClass& x);

// Accepts "p", "p/q", decimals "1.25" and scientific "1e-6", "-2.5E3".
// Throws std::invalid_argument on malformed text, std::domain_error on q = 0.
RatClass parse_rational(std::string_view text);

// Largest integer <= x.
IntClass floor(const RatClass& x);

}  // namespace dedekind::numbers
