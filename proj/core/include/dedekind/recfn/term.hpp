#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dedekind::recfn {

// 1-based position in a source text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

// Expression of a primitive- or mu-recursive function. Immutable handle with
// shared structure; copies are cheap.
class Term {
 public:
  struct Zero {
    std::size_t arity;
  };
  struct Succ {};
  // Projection onto argument `index` (1-based) of `arity`.
  struct Proj {
    std::size_t index;
    std::size_t arity;
  };
  struct Compose;
  struct PrimRec;
  struct Mu;
  struct Name {
    std::string name;
  };

  struct Node;

  const Node& node() const noexcept { return *node_; }
  std::optional<SourceSpan> span() const noexcept;
  Term with_span(SourceSpan span) const;

  template <class Alt>
  const Alt* as() const noexcept;

  // Structural equality; spans are ignored.
  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Term make_term(std::variant<Zero, Succ, Proj, Compose, PrimRec, Mu, Name> v,
                        std::optional<SourceSpan> span);

  std::shared_ptr<const Node> node_;
};

struct Term::Compose {
  Term outer;
  std::vector<Term> inners;
};
struct Term::PrimRec {
  Term base;
  Term step;
};
struct Term::Mu {
  Term body;
};

struct Term::Node {
  std::variant<Zero, Succ, Proj, Compose, PrimRec, Mu, Name> kind;
  std::optional<SourceSpan> span;
};

Term make_term(std::variant<Term::Zero, Term::Succ, Term::Proj, Term::Compose, Term::PrimRec,
                            Term::Mu, Term::Name>
                   v,
               std::optional<SourceSpan> span = std::nullopt);

inline std::optional<SourceSpan> Term::span() const noexcept { return node_->span; }

template <class Alt>
const Alt* Term::as() const noexcept {
  return std::get_if<Alt>(&node_->kind);
}

// Builders.
Term zero(std::size_t arity);
Term succ();
Term proj(std::size_t index, std::size_t arity);
Term compose(Term outer, std::vector<Term> inners);
Term primrec(Term base, Term step);
Term mu(Term body);
Term ref(std::string name);

// Number of nodes, counting a Name as one node.
std::size_t size(const Term& t);
// Nesting depth; leaves and names have depth 1.
std::size_t depth(const Term& t);

// Ordered named definitions.
class Definitions {
 public:
  // Throws std::invalid_argument on a duplicate name.
  void define(std::string name, Term term);

  const Term* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  // In definition order.
  const std::vector<std::pair<std::string, Term>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<std::pair<std::string, Term>> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Base of the static errors raised while analyzing a term.
class TermError : public std::runtime_error {
 public:
  TermError(const std::string& message, std::string path, std::optional<SourceSpan> span)
      : std::runtime_error(message), path_(std::move(path)), span_(span) {}

  // Subterm path from the analyzed root, e.g. "C.inner[2]/R.step".
  const std::string& path() const noexcept { return path_; }
  std::optional<SourceSpan> span() const noexcept { return span_; }

 private:
  std::string path_;
  std::optional<SourceSpan> span_;
};

class ArityError : public TermError {
 public:
  using TermError::TermError;
};

// A Name that does not resolve, or resolves back onto itself.
class NameError : public TermError {
 public:
  using TermError::TermError;
};

// Arity under the schema rules: Zero(n) -> n; Succ -> 1; Proj(i, n) -> n with
// 1 <= i <= n; Compose(f; g1..gk) needs arity(f) = k and equal arity(gi);
// PrimRec(g, h) needs arity(h) = arity(g) + 2 and gives arity(g) + 1;
// Mu(f) needs arity(f) >= 1 and gives arity(f) - 1.
std::size_t arity_of(const Term& t, const Definitions& env);

}  // namespace dedekind::recfn
