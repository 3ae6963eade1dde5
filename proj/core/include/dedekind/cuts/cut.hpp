#pragma once

#include "dedekind/natural.hpp"
#include "dedekind/numbers/rational.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

namespace dedekind::cuts {

using numbers::RatClass;

// A cut's predicate contradicted its own bracket.
class CutInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Closed rational interval known to contain the real a cut denotes.
struct Enclosure {
  RatClass lo;
  RatClass hi;

  RatClass width() const { return hi - lo; }
};

// Number of refinement rounds a derived cut spends deciding membership. A
// point still inside the operand enclosure after this many rounds is treated
// as the boundary and reported outside.
inline constexpr std::size_t kMaxRefinements = 128;

namespace detail {
class CutImpl;
class RefinerImpl;
}  // namespace detail

// Stateful sequence of nested enclosures; each refine() at least halves the
// width for cuts built from predicates.
class Refinement {
 public:
  explicit Refinement(std::unique_ptr<detail::RefinerImpl> impl);
  ~Refinement();
  Refinement(Refinement&&) noexcept;
  Refinement& operator=(Refinement&&) noexcept;

  Enclosure current() const;
  void refine();

 private:
  std::unique_ptr<detail::RefinerImpl> impl_;
};

// A Dedekind cut: an open, downward-closed, proper, nonempty set of rationals
// given by a membership test, with a bracket lower() inside and upper() outside.
class Cut {
 public:
  using Predicate = std::function<bool(const RatClass&)>;

  // The predicate must be pure and describe an open lower set. Throws
  // CutInvariantError unless member(lo) holds, member(hi) fails and lo < hi.
  static Cut from_predicate(Predicate member, RatClass lo, RatClass hi);

  bool contains(const RatClass& x) const;
  const RatClass& lower() const;
  const RatClass& upper() const;

  Refinement refinement() const;

 private:
  explicit Cut(std::shared_ptr<const detail::CutImpl> impl) : impl_(std::move(impl)) {}
  friend Cut cut_add(const Cut&, const Cut&);
  friend Cut cut_neg(const Cut&);
  friend Cut cut_mul(const Cut&, const Cut&);

  std::shared_ptr<const detail::CutImpl> impl_;
};

// {x : x < q}, bracket (q - 1, q + 1).
Cut cut_from_rational(const RatClass& q);
// {x : x < 0 or x^2 < n}, bracket (0, n + 1); for n = 0 the bracket is (-1, 1).
Cut cut_sqrt(const Natural& n);

Cut cut_add(const Cut& a, const Cut& b);
Cut cut_neg(const Cut& a);
Cut cut_mul(const Cut& a, const Cut& b);

// A rational r inside the cut with r + eps outside, by bisecting the bracket.
// Throws std::domain_error for eps <= 0 and CutInvariantError when the bracket
// contradicts the predicate.
RatClass approx(const Cut& c, const RatClass& eps);

// "1.414213 ± 1e-6": the largest multiple d of 10^-D below the cut's real,
// where 10^-D is the largest power of ten not exceeding eps; the real lies in
// (d, d + 10^-D].
std::string render_decimal(const Cut& c, const RatClass& eps);

// Decimal digits used by render_decimal for a given eps.
std::size_t decimal_places(const RatClass& eps);

}  // namespace dedekind::cuts
