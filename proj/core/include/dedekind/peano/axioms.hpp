#pragma once

#include "dedekind/peano/structure.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <utility>

namespace dedekind::peano {

// How the induction axiom is decided on a fragment.
enum class InductionCheck {
  // Every non-frontier element lies in the chain of zero.
  reachability,
  // Every successor-stable subset containing zero contains every non-frontier
  // element. Enumerates all subsets, so limited to kMaxStrictElements.
  all_subsets,
};

inline constexpr std::size_t kMaxStrictElements = 12;

struct AxiomReport {
  bool d1_holds = true;  // zero is not a successor
  bool d2_holds = true;  // successor is injective
  bool d3_holds = true;  // induction, frontier excused
  std::optional<ElementId> d1_counterexample;  // an element whose successor is zero
  std::optional<std::pair<ElementId, ElementId>> d2_counterexample;  // distinct, same successor
  std::optional<ElementId> d3_counterexample;  // not reached from zero
  std::size_t fragment_depth = 0;

  bool all_hold() const noexcept { return d1_holds && d2_holds && d3_holds; }
};

// Throws std::domain_error for all_subsets on structures above kMaxStrictElements.
AxiomReport check_axioms(const PointedStructure& s,
                         InductionCheck mode = InductionCheck::reachability);

// {"d1": bool, "d2": bool, "d3": bool,
//  "counterexamples": {"d1": id, "d2": [id, id], "d3": id},  (failing axioms only)
//  "fragment_depth": n}
nlohmann::json to_json(const AxiomReport& report);

}  // namespace dedekind::peano
