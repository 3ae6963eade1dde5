#include "dedekind/peano/models.hpp"

#include "dedekind/peano/recursion.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace dedekind::peano {

namespace {

bool canonical_digits(const ElementId& s, char max_digit) {
  if (s.empty()) return false;
  if (s.size() > 1 && s.front() == '0') return false;
  return std::all_of(s.begin(), s.end(), [max_digit](char c) { return c >= '0' && c <= max_digit; });
}

// Positional increment with carry.
std::optional<ElementId> increment(const ElementId& s, char max_digit) {
  if (!canonical_digits(s, max_digit)) return std::nullopt;
  ElementId out = s;
  for (auto i = out.size(); i-- > 0;) {
    if (out[i] != max_digit) {
      ++out[i];
      return out;
    }
    out[i] = '0';
  }
  out.insert(out.begin(), '1');
  return out;
}

}  // namespace

Model::Model(std::string name, ElementId zero, Rule successor)
    : name_(std::move(name)), zero_(std::move(zero)), rule_(std::move(successor)) {}

Model::Model(PointedStructure table, std::string name)
    : name_(std::move(name)),
      zero_(table.zero()),
      table_(std::make_shared<const PointedStructure>(std::move(table))) {}

std::optional<ElementId> Model::successor(const ElementId& id) const {
  if (table_) {
    if (!table_->contains(id)) return std::nullopt;
    const ElementId* next = table_->successor(id);
    return next ? std::optional<ElementId>(*next) : std::nullopt;
  }
  return rule_(id);
}

PointedStructure Model::examined_fragment(std::size_t count) const {
  if (table_) return *table_;

  std::vector<ElementId> elements;
  std::vector<PointedStructure::Edge> edges;
  std::unordered_set<ElementId> seen;
  std::vector<ElementId> frontier;

  ElementId current = zero_;
  while (true) {
    elements.push_back(current);
    seen.insert(current);
    auto next = successor(current);
    if (!next) {
      frontier.push_back(current);
      break;
    }
    if (seen.contains(*next)) {
      edges.emplace_back(current, *next);
      break;
    }
    if (elements.size() >= count) {
      frontier.push_back(current);
      break;
    }
    edges.emplace_back(current, *next);
    current = std::move(*next);
  }
  return PointedStructure(std::move(elements), zero_, edges, std::move(frontier));
}

Model unary_model() {
  return Model("unary", "", [](const ElementId& s) -> std::optional<ElementId> {
    if (!std::all_of(s.begin(), s.end(), [](char c) { return c == '|'; })) return std::nullopt;
    return s + '|';
  });
}

Model binary_model() {
  return Model("binary", "0", [](const ElementId& s) { return increment(s, '1'); });
}

Model decimal_model() {
  return Model("decimal", "0", [](const ElementId& s) { return increment(s, '9'); });
}

ModelIso ModelIso::inverse() const {
  ModelIso out;
  out.pairs.reserve(pairs.size());
  for (const auto& [a, b] : pairs) out.pairs.emplace_back(b, a);
  return out;
}

ModelIso compose(const ModelIso& first, const ModelIso& second) {
  std::unordered_map<ElementId, const ElementId*> image;
  for (const auto& [x, y] : second.pairs) image.emplace(x, &y);
  ModelIso out;
  out.pairs.reserve(first.pairs.size());
  for (const auto& [a, b] : first.pairs) {
    const auto it = image.find(b);
    if (it == image.end()) throw std::domain_error("composition leaves the domain at '" + b + "'");
    out.pairs.emplace_back(a, *it->second);
  }
  return out;
}

AxiomRefusal::AxiomRefusal(std::string model, AxiomReport report)
    : std::runtime_error("model '" + model + "' fails the axioms on its examined fragment"),
      model_(std::move(model)),
      report_(std::move(report)) {}

ModelIso build_iso(const Model& a, const Model& b, std::size_t depth) {
  for (const Model* m : {&a, &b}) {
    auto report = check_axioms(m->examined_fragment(depth));
    if (!report.all_hold()) throw AxiomRefusal(m->name(), std::move(report));
  }
  if (depth == 0) return {};

  // The unique map out of a: walk a from its zero, and produce images by
  // recursion on the successor of b.
  const IterationSpec<ElementId> along_a(a.zero(), [&a](const ElementId& x) { return a.successor(x); });
  const IterationSpec<ElementId> into_b(b.zero(), [&b](const ElementId& x) { return b.successor(x); });

  std::vector<ElementId> source;
  std::vector<ElementId> image;
  try {
    source = trajectory(along_a, depth - 1);
  } catch (const IterationError& e) {
    throw std::domain_error("model '" + a.name() + "' has only " + std::to_string(e.index() + 1) +
                            " elements from zero, need " + std::to_string(depth));
  }
  try {
    image = trajectory(into_b, depth - 1);
  } catch (const IterationError& e) {
    throw std::domain_error("model '" + b.name() + "' has only " + std::to_string(e.index() + 1) +
                            " elements from zero, need " + std::to_string(depth));
  }

  ModelIso iso;
  iso.pairs.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) iso.pairs.emplace_back(std::move(source[i]), std::move(image[i]));
  return iso;
}

}  // namespace dedekind::peano
