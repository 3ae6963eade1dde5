#pragma once

#include "dedekind/natural.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace dedekind::numbers {

// A representative (a, b) of the integer a - b. Arithmetic on representatives:
//   (a, b) + (c, d) = (a + c, b + d)
//   (a, b) * (c, d) = (ac + bd, ad + bc)
//   -(a, b)         = (b, a)
// Two pairs denote the same integer iff a + d = b + c.
struct IntPair {
  Natural plus;
  Natural minus;
};

IntPair operator+(const IntPair& x, const IntPair& y);
IntPair operator*(const IntPair& x, const IntPair& y);
IntPair operator-(const IntPair& x);
bool equivalent(const IntPair& x, const IntPair& y);

// An integer as the class of natural pairs under the relation above, stored
// through its canonical representative: the pair with min(a, b) = 0.
class IntClass {
 public:
  IntClass() = default;
  explicit IntClass(const IntPair& representative);
  IntClass(Natural a, Natural b) : IntClass(IntPair{std::move(a), std::move(b)}) {}

  static IntClass from_natural(Natural n) { return IntClass(std::move(n), Natural(0)); }
  // Convenience for literals.
  static IntClass from_int(long long v);

  const Natural& plus() const noexcept { return plus_; }
  const Natural& minus() const noexcept { return minus_; }
  IntPair pair() const { return {plus_, minus_}; }

  int sign() const noexcept { return plus_ != 0 ? 1 : (minus_ != 0 ? -1 : 0); }
  bool is_zero() const noexcept { return plus_ == 0 && minus_ == 0; }
  const Natural& magnitude() const noexcept { return plus_ != 0 ? plus_ : minus_; }

  friend IntClass operator+(const IntClass& x, const IntClass& y) { return IntClass(x.pair() + y.pair()); }
  friend IntClass operator*(const IntClass& x, const IntClass& y) { return IntClass(x.pair() * y.pair()); }
  friend IntClass operator-(const IntClass& x) { return IntClass(x.minus_, x.plus_); }
  friend IntClass operator-(const IntClass& x, const IntClass& y) { return x + (-y); }

  friend bool operator==(const IntClass&, const IntClass&) = default;
  friend std::strong_ordering operator<=>(const IntClass& x, const IntClass& y);

 private:
  Natural plus_;
  Natural minus_;
};

IntClass int_make(Natural a, Natural b);
IntClass int_add(const IntClass& x, const IntClass& y);
IntClass int_mul(const IntClass& x, const IntClass& y);
IntClass int_neg(const IntClass& x);

// "-2", "0", "17". Parsing accepts an ASCII '-' or U+2212 minus sign.
std::string to_string(const IntClass& x);
IntClass parse_integer(std::string_view text);

}  // namespace dedekind::numbers
