#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace dedekind::peano {

// The step function was undefined while producing the value at index()+1.
class IterationError : public std::runtime_error {
 public:
  explicit IterationError(std::uint64_t index)
      : std::runtime_error("step undefined at index " + std::to_string(index)), index_(index) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

// A codomain value together with a self-map. Iterating it yields the unique
// map Psi with Psi(0) = seed and Psi(x + 1) = step(Psi(x)), or, for indexed
// steps, Psi(x + 1) = step(x, Psi(x)).
//
// The step may be given as T(const T&), T(std::uint64_t, const T&), or either
// of those returning std::optional<T> for partial maps.
template <class T>
class IterationSpec {
 public:
  using Step = std::function<std::optional<T>(std::uint64_t, const T&)>;

  template <class F>
  IterationSpec(T seed, F step) : seed_(std::move(seed)), step_(wrap(std::move(step))) {}

  const T& seed() const noexcept { return seed_; }

  std::optional<T> apply(std::uint64_t index, const T& value) const { return step_(index, value); }

 private:
  template <class R>
  static std::optional<T> lift(R&& r) {
    if constexpr (std::is_same_v<std::remove_cvref_t<R>, std::optional<T>>) {
      return std::forward<R>(r);
    } else {
      return std::optional<T>(std::forward<R>(r));
    }
  }

  template <class F>
  static Step wrap(F f) {
    if constexpr (std::is_invocable_v<F&, std::uint64_t, const T&>) {
      return [f = std::move(f)](std::uint64_t x, const T& v) mutable { return lift(f(x, v)); };
    } else {
      static_assert(std::is_invocable_v<F&, const T&>, "step must accept (value) or (index, value)");
      return [f = std::move(f)](std::uint64_t, const T& v) mutable { return lift(f(v)); };
    }
  }

  T seed_;
  Step step_;
};

template <class T, class F>
IterationSpec(T, F) -> IterationSpec<T>;

// Psi(0), ..., Psi(n). Throws IterationError if the step is undefined on the way.
template <class T>
std::vector<T> trajectory(const IterationSpec<T>& spec, std::uint64_t n) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back(spec.seed());
  for (std::uint64_t x = 0; x < n; ++x) {
    auto next = spec.apply(x, out.back());
    if (!next) throw IterationError(x);
    out.push_back(std::move(*next));
  }
  return out;
}

// Psi(n) without materializing the trajectory.
template <class T>
T iterate(const IterationSpec<T>& spec, std::uint64_t n) {
  T value = spec.seed();
  for (std::uint64_t x = 0; x < n; ++x) {
    auto next = spec.apply(x, value);
    if (!next) throw IterationError(x);
    value = std::move(*next);
  }
  return value;
}

// Same as iterate; kept as a separate name for the indexed (x, Psi(x)) form so
// call sites read as the recursion they implement.
template <class T>
T iterate_indexed(const IterationSpec<T>& spec, std::uint64_t n) {
  return iterate(spec, n);
}

}  // namespace dedekind::peano
