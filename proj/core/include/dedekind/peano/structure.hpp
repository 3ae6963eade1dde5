#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace dedekind::peano {

using ElementId = std::string;

// Raised for structurally invalid pointed structures and unparsable model files.
class ModelError : public std::invalid_argument {
 public:
  explicit ModelError(const std::string& what, std::size_t line = 0)
      : std::invalid_argument(what), line_(line) {}
  // 1-based line of the model file, 0 when not parsing.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A finite fragment (X, 0, S) of a model of the naturals. The successor table
// may be undefined only at declared frontier elements, which stand in for the
// part of X beyond the fragment.
class PointedStructure {
 public:
  using Edge = std::pair<ElementId, ElementId>;

  // Throws ModelError when an invariant is broken: unknown zero, an edge
  // leaving the carrier, a duplicate successor entry, a frontier element with a
  // successor, or a non-frontier element without one.
  PointedStructure(std::vector<ElementId> elements, ElementId zero,
                   const std::vector<Edge>& edges,
                   std::vector<ElementId> frontier);

  const std::vector<ElementId>& elements() const noexcept { return elements_; }
  const ElementId& zero() const noexcept { return zero_; }
  const std::vector<ElementId>& frontier() const noexcept { return frontier_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool contains(const ElementId& id) const { return index_.contains(id); }
  bool is_frontier(const ElementId& id) const { return frontier_set_.contains(id); }

  // nullptr at frontier elements.
  const ElementId* successor(const ElementId& id) const;

  // Edges in element declaration order.
  std::vector<Edge> edges() const;

 private:
  std::vector<ElementId> elements_;
  ElementId zero_;
  std::vector<ElementId> frontier_;
  std::unordered_map<ElementId, std::size_t> index_;
  std::unordered_map<ElementId, ElementId> succ_;
  std::unordered_set<ElementId> frontier_set_;
};

// Text model format:
//   zero: <id>
//   <id> -> <id>        (one line per successor entry)
//   frontier: <id>,<id>,...
// ids are non-empty ASCII alphanumeric tokens. Blank lines and '#' comments are
// ignored. Elements are collected in order of first mention.
PointedStructure parse_structure(std::string_view text);
std::string format_structure(const PointedStructure& s);

// Forward orbit of a seed in discovery order.
struct Chain {
  std::vector<ElementId> members;

  bool contains(const ElementId& id) const;
};

// Follows the successor from `seed` for at most `max_depth` steps, stopping
// early at a frontier element or before the first repeated element. The
// result therefore has at most max_depth + 1 members.
// Throws std::domain_error when seed is not an element.
Chain chain_of(const PointedStructure& s, const ElementId& seed, std::size_t max_depth);

}  // namespace dedekind::peano
