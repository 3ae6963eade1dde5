#pragma once

#include "dedekind/natural.hpp"
#include "dedekind/recfn/term.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dedekind::recfn {

// Step allowance for one evaluation. Every node application costs one unit.
struct EvalBudget {
  std::uint64_t fuel = 0;
  std::uint64_t consumed = 0;

  explicit EvalBudget(std::uint64_t fuel_units) : fuel(fuel_units) {}
};

struct Value {
  Natural value;
  friend bool operator==(const Value&, const Value&) = default;
};
struct FuelExhausted {
  std::uint64_t consumed;
  friend bool operator==(const FuelExhausted&, const FuelExhausted&) = default;
};
struct ArityMismatch {
  std::string details;
  friend bool operator==(const ArityMismatch&, const ArityMismatch&) = default;
};

using EvalOutcome = std::variant<Value, FuelExhausted, ArityMismatch>;

std::string describe(const EvalOutcome& outcome);

struct TraceEntry {
  enum class Kind { base, step, probe };
  Kind kind;
  // Definition name when the recursion is a named definition, else "<anonymous>".
  std::string label;
  // base: (0, y...); step: (x + 1, y...), the application being unrolled;
  // probe: (y..., candidate).
  std::vector<Natural> args;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct TracedOutcome {
  EvalOutcome outcome;
  std::vector<TraceEntry> log;
};

namespace detail {
struct CompiledNode;
}

// Evaluates terms against a fixed set of definitions.
//
// Strategy, all of which preserves the denoted partial function:
//  - primitive recursion runs bottom-up as a loop, so recursion depth never
//    grows with argument size;
//  - a subterm whose value is never read and which contains no search is
//    skipped (e.g. the accumulator of pred);
//  - within one evaluation, each recursion node remembers the last point of
//    its trajectory and resumes from it when called again with the same
//    parameters and a larger recursion argument.
// The Evaluator is immutable after construction and safe to share.
class Evaluator {
 public:
  // Links every definition. Throws TermError if any fails the arity rules.
  explicit Evaluator(Definitions env);
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  const Definitions& definitions() const noexcept { return env_; }

  EvalOutcome eval(const Term& term, std::span<const Natural> args, EvalBudget& budget) const;
  TracedOutcome eval_trace(const Term& term, std::span<const Natural> args, EvalBudget& budget) const;

 private:
  TracedOutcome run(const Term& term, std::span<const Natural> args, EvalBudget& budget,
                    bool traced) const;

  Definitions env_;
  std::unique_ptr<std::deque<detail::CompiledNode>> arena_;
  std::vector<const detail::CompiledNode*> roots_;  // parallel to env_.entries()
  std::size_t slot_count_ = 0;
};

// One-shot convenience wrappers around Evaluator.
EvalOutcome eval(const Term& term, std::span<const Natural> args, EvalBudget& budget,
                 const Definitions& env);
TracedOutcome eval_trace(const Term& term, std::span<const Natural> args, EvalBudget& budget,
                         const Definitions& env);

}  // namespace dedekind::recfn
