#include "dedekind/numbers/rational.hpp"

#include <algorithm>
#include <cctype>

namespace dedekind::numbers {

namespace {

// Strips a leading ASCII '-' or UTF-8 U+2212; returns true if one was present.
bool strip_minus(std::string_view& text) {
  if (text.starts_with('-')) {
    text.remove_prefix(1);
    return true;
  }
  if (text.starts_with("\xE2\x88\x92")) {
    text.remove_prefix(3);
    return true;
  }
  return false;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Natural pow10(std::size_t k) {
  Natural r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

IntPair operator+(const IntPair& x, const IntPair& y) { return {x.plus + y.plus, x.minus + y.minus}; }

IntPair operator*(const IntPair& x, const IntPair& y) {
  return {x.plus * y.plus + x.minus * y.minus, x.plus * y.minus + x.minus * y.plus};
}

IntPair operator-(const IntPair& x) { return {x.minus, x.plus}; }

bool equivalent(const IntPair& x, const IntPair& y) { return x.plus + y.minus == x.minus + y.plus; }

IntClass::IntClass(const IntPair& r) {
  if (r.plus >= r.minus) {
    plus_ = r.plus - r.minus;
  } else {
    minus_ = r.minus - r.plus;
  }
}

IntClass IntClass::from_int(long long v) {
  if (v >= 0) return IntClass(Natural(v), Natural(0));
  // -(v + 1) + 1 avoids overflow at the minimum value.
  return IntClass(Natural(0), Natural(-(v + 1)) + 1);
}

std::strong_ordering operator<=>(const IntClass& x, const IntClass& y) {
  const Natural lhs = x.plus_ + y.minus_;
  const Natural rhs = y.plus_ + x.minus_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

IntClass int_make(Natural a, Natural b) { return IntClass(std::move(a), std::move(b)); }
IntClass int_add(const IntClass& x, const IntClass& y) { return x + y; }
IntClass int_mul(const IntClass& x, const IntClass& y) { return x * y; }
IntClass int_neg(const IntClass& x) { return -x; }

std::string to_string(const IntClass& x) {
  return x.sign() < 0 ? "-" + x.minus().str() : x.plus().str();
}

IntClass parse_integer(std::string_view text) {
  const bool negative = strip_minus(text);
  if (!all_digits(text)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  const auto n = parse_natural(text);
  return negative ? IntClass(Natural(0), n) : IntClass(n, Natural(0));
}

RatPair operator+(const RatPair& x, const RatPair& y) {
  return {x.num * y.den + y.num * x.den, x.den * y.den};
}

RatPair operator*(const RatPair& x, const RatPair& y) { return {x.num * y.num, x.den * y.den}; }

RatPair operator-(const RatPair& x) { return {-x.num, x.den}; }

bool equivalent(const RatPair& x, const RatPair& y) { return x.num * y.den == y.num * x.den; }

RatClass::RatClass(const RatPair& r) {
  if (r.den.is_zero()) throw std::domain_error("zero denominator");
  const Natural& p = r.num.magnitude();
  const Natural& q = r.den.magnitude();
  const Natural g = boost::multiprecision::gcd(p, q);
  const Natural reduced = p / g;
  den_ = q / g;
  if (r.num.sign() * r.den.sign() < 0) {
    num_ = IntClass(Natural(0), reduced);
  } else {
    num_ = IntClass(reduced, Natural(0));
  }
}

RatClass operator/(const RatClass& x, const RatClass& y) { return x * rat_inv(y); }

std::strong_ordering operator<=>(const RatClass& x, const RatClass& y) {
  return x.num_ * IntClass::from_natural(y.den_) <=> y.num_ * IntClass::from_natural(x.den_);
}

RatClass rat_make(const IntClass& p, const IntClass& q) { return RatClass(p, q); }
RatClass rat_add(const RatClass& x, const RatClass& y) { return x + y; }
RatClass rat_mul(const RatClass& x, const RatClass& y) { return x * y; }
RatClass rat_neg(const RatClass& x) { return -x; }

RatClass rat_inv(const RatClass& x) {
  if (x.is_zero()) throw std::domain_error("inverse of zero");
  return RatClass(RatPair{IntClass::from_natural(x.den()), x.num()});
}

std::strong_ordering rat_cmp(const RatClass& x, const RatClass& y) { return x <=> y; }

RatClass abs(const RatClass& x) { return x.sign() < 0 ? -x : x; }

std::string to_string(const RatClass& x) {
  if (x.den() == 1) return to_string(x.num());
  return to_string(x.num()) + "/" + x.den().str();
}

RatClass parse_rational(std::string_view text) {
  const std::string original(text);
  const auto malformed = [&original]() {
    return std::invalid_argument("not a rational number: '" + original + "'");
  };

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    const bool negative = strip_minus(num);
    if (!all_digits(num) || !all_digits(den)) throw malformed();
    IntClass p = IntClass::from_natural(parse_natural(num));
    if (negative) p = -p;
    return RatClass(p, IntClass::from_natural(parse_natural(den)));
  }

  const bool negative = strip_minus(text);
  long long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (exp.starts_with('+')) {
      exp.remove_prefix(1);
    } else if (exp.starts_with('-')) {
      exp.remove_prefix(1);
      exp_negative = true;
    }
    if (!all_digits(exp) || exp.size() > 6) throw malformed();
    exponent = std::stoll(std::string(exp));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw malformed();
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long long>(frac.size());
  } else {
    if (!all_digits(text)) throw malformed();
    digits = std::string(text);
  }
  IntClass mantissa = IntClass::from_natural(parse_natural(digits));
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) {
    return RatClass(mantissa * IntClass::from_natural(pow10(static_cast<std::size_t>(exponent))));
  }
  return RatClass(mantissa, IntClass::from_natural(pow10(static_cast<std::size_t>(-exponent))));
}

IntClass floor(const RatClass& x) {
  const Natural& d = x.den();
  if (x.sign() >= 0) return IntClass::from_natural(x.num().plus() / d);
  const Natural& m = x.num().minus();
  Natural q = m / d;
  if (q * d != m) q += 1;
  return IntClass(Natural(0), q);
}

}  // namespace dedekind::numbers
