#include "dedekind/peano/axioms.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace dedekind::peano {

namespace {

std::optional<ElementId> first_unreached(const PointedStructure& s,
                                         const std::unordered_set<ElementId>& reached) {
  for (const auto& e : s.elements()) {
    if (!reached.contains(e) && !s.is_frontier(e)) return e;
  }
  return std::nullopt;
}

std::optional<ElementId> induction_by_reachability(const PointedStructure& s) {
  const Chain chain = chain_of(s, s.zero(), s.size());
  const std::unordered_set<ElementId> reached(chain.members.begin(), chain.members.end());
  return first_unreached(s, reached);
}

std::optional<ElementId> induction_by_subsets(const PointedStructure& s) {
  const auto n = s.size();
  if (n > kMaxStrictElements) {
    throw std::domain_error("subset enumeration is limited to " +
                            std::to_string(kMaxStrictElements) + " elements");
  }
  const auto& elems = s.elements();
  std::unordered_map<ElementId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elems[i], i);

  std::vector<int> succ_index(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (const auto* t = s.successor(elems[i])) succ_index[i] = static_cast<int>(index.at(*t));
  }
  const std::size_t zero_bit = index.at(s.zero());

  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> zero_bit & 1u)) continue;
    bool stable = true;
    for (std::size_t i = 0; i < n && stable; ++i) {
      if ((mask >> i & 1u) && succ_index[i] >= 0 && !(mask >> succ_index[i] & 1u)) stable = false;
    }
    if (!stable) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u) && !s.is_frontier(elems[i])) return elems[i];
    }
  }
  return std::nullopt;
}

}  // namespace

AxiomReport check_axioms(const PointedStructure& s, InductionCheck mode) {
  AxiomReport report;
  report.fragment_depth = s.size();

  std::unordered_map<ElementId, ElementId> preimage;
  for (const auto& e : s.elements()) {
    const ElementId* t = s.successor(e);
    if (t == nullptr) continue;
    if (*t == s.zero() && report.d1_holds) {
      report.d1_holds = false;
      report.d1_counterexample = e;
    }
    const auto [it, inserted] = preimage.emplace(*t, e);
    if (!inserted && report.d2_holds) {
      report.d2_holds = false;
      report.d2_counterexample = std::make_pair(it->second, e);
    }
  }

  report.d3_counterexample = mode == InductionCheck::reachability ? induction_by_reachability(s)
                                                                  : induction_by_subsets(s);
  report.d3_holds = !report.d3_counterexample.has_value();
  return report;
}

nlohmann::json to_json(const AxiomReport& report) {
  nlohmann::json counterexamples = nlohmann::json::object();
  if (report.d1_counterexample) counterexamples["d1"] = *report.d1_counterexample;
  if (report.d2_counterexample) {
    counterexamples["d2"] = {report.d2_counterexample->first, report.d2_counterexample->second};
  }
  if (report.d3_counterexample) counterexamples["d3"] = *report.d3_counterexample;
  return {
      {"d1", report.d1_holds},
      {"d2", report.d2_holds},
      {"d3", report.d3_holds},
      {"counterexamples", std::move(counterexamples)},
      {"fragment_depth", report.fragment_depth},
  };
}

}  // namespace dedekind::peano
