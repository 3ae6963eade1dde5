#pragma once

#include "dedekind/peano/axioms.hpp"
#include "dedekind/peano/structure.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dedekind::peano {

// A model of the naturals that can be walked from zero: either an explicit
// successor table (a PointedStructure) or a successor rule on canonical
// encodings, which is unbounded.
class Model {
 public:
  using Rule = std::function<std::optional<ElementId>(const ElementId&)>;

  Model(std::string name, ElementId zero, Rule successor);
  explicit Model(PointedStructure table, std::string name = "table");

  const std::string& name() const noexcept { return name_; }
  const ElementId& zero() const noexcept { return zero_; }
  std::optional<ElementId> successor(const ElementId& id) const;

  bool is_table() const noexcept { return table_ != nullptr; }

  // The fragment whose axioms gate isomorphism construction. A table model is
  // its own fragment; a rule model is materialized along the chain of zero
  // with at most `count` elements (the last one becomes the frontier unless
  // the walk closes a cycle).
  PointedStructure examined_fragment(std::size_t count) const;

 private:
  std::string name_;
  ElementId zero_;
  Rule rule_;
  std::shared_ptr<const PointedStructure> table_;
};

// Token-count encoding: "", "|", "||", ...
Model unary_model();
// Binary strings without leading zeros except "0".
Model binary_model();
// Decimal strings without leading zeros except "0".
Model decimal_model();

// Prefix of the unique zero-preserving, successor-commuting map between two
// models, listed from the zeros.
struct ModelIso {
  std::vector<std::pair<ElementId, ElementId>> pairs;

  ModelIso inverse() const;
};

// Entrywise composition: for each (a, b) in first, pairs a with the image of b
// under second. Throws std::domain_error when b is outside second's domain.
ModelIso compose(const ModelIso& first, const ModelIso& second);

// Raised when a model given to build_iso fails an axiom on its examined fragment.
class AxiomRefusal : public std::runtime_error {
 public:
  AxiomRefusal(std::string model, AxiomReport report);
  const std::string& model() const noexcept { return model_; }
  const AxiomReport& report() const noexcept { return report_; }

 private:
  std::string model_;
  AxiomReport report_;
};

// The depth-long prefix of the isomorphism, built by running the recursion
// theorem on the successor of b. Throws AxiomRefusal if either examined
// fragment fails an axiom, std::domain_error if a model runs out before depth.
ModelIso build_iso(const Model& a, const Model& b, std::size_t depth);

}  // namespace dedekind::peano
