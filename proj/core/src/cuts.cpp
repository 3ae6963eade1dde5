#include "dedekind/cuts/cut.hpp"

#include <algorithm>
#include <array>

namespace dedekind::cuts {

namespace detail {

class RefinerImpl {
 public:
  virtual ~RefinerImpl() = default;
  virtual Enclosure current() const = 0;
  virtual void refine() = 0;
};

class CutImpl {
 public:
  virtual ~CutImpl() = default;
  virtual bool contains(const RatClass& x) const = 0;
  virtual std::unique_ptr<RefinerImpl> refiner() const = 0;

  RatClass lo;
  RatClass hi;
};

}  // namespace detail

namespace {

using detail::CutImpl;
using detail::RefinerImpl;

const RatClass kHalf = RatClass::from_ints(1, 2);

RatClass midpoint(const RatClass& a, const RatClass& b) { return (a + b) * kHalf; }

class PredicateCut;

class Bisection final : public RefinerImpl {
 public:
  Bisection(std::shared_ptr<const PredicateCut> owner, const Cut::Predicate& member, RatClass lo,
            RatClass hi)
      : owner_(std::move(owner)), member_(member), lo_(std::move(lo)), hi_(std::move(hi)) {}

  Enclosure current() const override { return {lo_, hi_}; }

  void refine() override {
    RatClass mid = midpoint(lo_, hi_);
    if (member_(mid)) {
      lo_ = std::move(mid);
    } else {
      hi_ = std::move(mid);
    }
  }

 private:
  std::shared_ptr<const PredicateCut> owner_;  // keeps member_ alive
  const Cut::Predicate& member_;
  RatClass lo_;
  RatClass hi_;
};

class PredicateCut final : public CutImpl, public std::enable_shared_from_this<PredicateCut> {
 public:
  explicit PredicateCut(Cut::Predicate member) : member_(std::move(member)) {}

  bool contains(const RatClass& x) const override { return member_(x); }
  std::unique_ptr<RefinerImpl> refiner() const override {
    return std::make_unique<Bisection>(shared_from_this(), member_, lo, hi);
  }

 private:
  Cut::Predicate member_;
};

// Membership decided from a sequence of enclosures: inside once x falls below
// an enclosure, outside once x reaches its upper end.
class DerivedCut : public CutImpl {
 public:
  bool contains(const RatClass& x) const override {
    auto r = refiner();
    for (std::size_t round = 0; round <= kMaxRefinements; ++round) {
      const Enclosure e = r->current();
      if (x < e.lo) return true;
      if (x >= e.hi) return false;
      r->refine();
    }
    return false;
  }

 protected:
  // Public bracket from the first enclosure, stepping the lower end down when
  // it coincides with the boundary.
  void init_bracket() {
    const Enclosure e = refiner()->current();
    hi = e.hi;
    lo = contains(e.lo) ? e.lo : e.lo - RatClass::from_int(1);
  }
};

class SumRefiner final : public RefinerImpl {
 public:
  SumRefiner(std::unique_ptr<RefinerImpl> a, std::unique_ptr<RefinerImpl> b)
      : a_(std::move(a)), b_(std::move(b)) {}
  Enclosure current() const override {
    const auto x = a_->current();
    const auto y = b_->current();
    return {x.lo + y.lo, x.hi + y.hi};
  }
  void refine() override {
    a_->refine();
    b_->refine();
  }

 private:
  std::unique_ptr<RefinerImpl> a_, b_;
};

class NegRefiner final : public RefinerImpl {
 public:
  explicit NegRefiner(std::unique_ptr<RefinerImpl> a) : a_(std::move(a)) {}
  Enclosure current() const override {
    const auto x = a_->current();
    return {-x.hi, -x.lo};
  }
  void refine() override { a_->refine(); }

 private:
  std::unique_ptr<RefinerImpl> a_;
};

// Once both enclosures have a definite sign the four-product rule reduces to
// a single product pair; before that it still gives a valid enclosure.
class ProductRefiner final : public RefinerImpl {
 public:
  ProductRefiner(std::unique_ptr<RefinerImpl> a, std::unique_ptr<RefinerImpl> b)
      : a_(std::move(a)), b_(std::move(b)) {}
  Enclosure current() const override {
    const auto x = a_->current();
    const auto y = b_->current();
    const std::array<RatClass, 4> p = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
    const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {*mn, *mx};
  }
  void refine() override {
    a_->refine();
    b_->refine();
  }

 private:
  std::unique_ptr<RefinerImpl> a_, b_;
};

template <class R>
class BinaryCut final : public DerivedCut {
 public:
  BinaryCut(std::shared_ptr<const CutImpl> a, std::shared_ptr<const CutImpl> b)
      : a_(std::move(a)), b_(std::move(b)) {
    init_bracket();
  }
  std::unique_ptr<RefinerImpl> refiner() const override {
    return std::make_unique<R>(a_->refiner(), b_->refiner());
  }

 private:
  std::shared_ptr<const CutImpl> a_, b_;
};

class NegCut final : public DerivedCut {
 public:
  explicit NegCut(std::shared_ptr<const CutImpl> a) : a_(std::move(a)) { init_bracket(); }
  std::unique_ptr<RefinerImpl> refiner() const override {
    return std::make_unique<NegRefiner>(a_->refiner());
  }

 private:
  std::shared_ptr<const CutImpl> a_;
};

RatClass pow10_inverse(std::size_t k) {
  Natural p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 10;
  return RatClass(numbers::IntClass::from_int(1), numbers::IntClass::from_natural(p));
}

}  // namespace

Refinement::Refinement(std::unique_ptr<detail::RefinerImpl> impl) : impl_(std::move(impl)) {}
Refinement::~Refinement() = default;
Refinement::Refinement(Refinement&&) noexcept = default;
Refinement& Refinement::operator=(Refinement&&) noexcept = default;
Enclosure Refinement::current() const { return impl_->current(); }
void Refinement::refine() { impl_->refine(); }

Cut Cut::from_predicate(Predicate member, RatClass lo, RatClass hi) {
  if (!(lo < hi)) throw CutInvariantError("bracket is empty: " + to_string(lo) + " >= " + to_string(hi));
  if (!member(lo)) throw CutInvariantError("lower bracket end " + to_string(lo) + " is not in the cut");
  if (member(hi)) throw CutInvariantError("upper bracket end " + to_string(hi) + " is in the cut");
  auto impl = std::make_shared<PredicateCut>(std::move(member));
  impl->lo = std::move(lo);
  impl->hi = std::move(hi);
  return Cut(std::move(impl));
}

bool Cut::contains(const RatClass& x) const { return impl_->contains(x); }
const RatClass& Cut::lower() const { return impl_->lo; }
const RatClass& Cut::upper() const { return impl_->hi; }
Refinement Cut::refinement() const { return Refinement(impl_->refiner()); }

Cut cut_from_rational(const RatClass& q) {
  const auto one = RatClass::from_int(1);
  return Cut::from_predicate([q](const RatClass& x) { return x < q; }, q - one, q + one);
}

Cut cut_sqrt(const Natural& n) {
  const RatClass target(numbers::IntClass::from_natural(n));
  const RatClass lo = n == 0 ? RatClass::from_int(-1) : RatClass();
  return Cut::from_predicate(
      [target](const RatClass& x) { return x.sign() < 0 || x * x < target; }, lo,
      target + RatClass::from_int(1));
}

Cut cut_add(const Cut& a, const Cut& b) {
  return Cut(std::make_shared<BinaryCut<SumRefiner>>(a.impl_, b.impl_));
}

Cut cut_neg(const Cut& a) { return Cut(std::make_shared<NegCut>(a.impl_)); }

Cut cut_mul(const Cut& a, const Cut& b) {
  return Cut(std::make_shared<BinaryCut<ProductRefiner>>(a.impl_, b.impl_));
}

RatClass approx(const Cut& c, const RatClass& eps) {
  if (eps.sign() <= 0) throw std::domain_error("eps must be positive");
  RatClass lo = c.lower();
  RatClass hi = c.upper();
  if (!c.contains(lo)) throw CutInvariantError("lower bracket end " + to_string(lo) + " left the cut");
  if (c.contains(hi)) throw CutInvariantError("upper bracket end " + to_string(hi) + " entered the cut");
  while (hi - lo > eps) {
    RatClass mid = midpoint(lo, hi);
    if (c.contains(mid)) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return lo;
}

std::size_t decimal_places(const RatClass& eps) {
  if (eps.sign() <= 0) throw std::domain_error("eps must be positive");
  std::size_t places = 0;
  while (pow10_inverse(places) > eps) ++places;
  return places;
}

std::string render_decimal(const Cut& c, const RatClass& eps) {
  const std::size_t places = decimal_places(eps);
  const RatClass step = pow10_inverse(places);
  const RatClass scale = RatClass::from_int(1) / step;

  const RatClass r = approx(c, step);
  numbers::IntClass m = numbers::floor(r * scale);
  const numbers::IntClass next = m + numbers::IntClass::from_int(1);
  if (c.contains(RatClass(next) * step)) m = next;

  const std::string digits = m.magnitude().str();
  std::string out = m.sign() < 0 ? "-" : "";
  if (places == 0) {
    out += digits;
  } else {
    const std::string padded = std::string(digits.size() <= places ? places + 1 - digits.size() : 0, '0') + digits;
    out += padded.substr(0, padded.size() - places) + "." + padded.substr(padded.size() - places);
  }

  const std::string eps_text = step == eps ? (places == 0 ? "1" : "1e-" + std::to_string(places))
                                           : numbers::to_string(eps);
  return out + " ± " + eps_text;
}

}  // namespace dedekind::cuts
