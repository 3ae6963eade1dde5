#include "dedekind/recfn/term.hpp"

#include <algorithm>
#include <set>

namespace dedekind::recfn {

Term make_term(std::variant<Term::Zero, Term::Succ, Term::Proj, Term::Compose, Term::PrimRec,
                            Term::Mu, Term::Name>
                   v,
               std::optional<SourceSpan> span) {
  return Term(std::make_shared<const Term::Node>(Term::Node{std::move(v), span}));
}

Term Term::with_span(SourceSpan span) const { return make_term(node_->kind, span); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node_->kind;
  const auto& y = b.node_->kind;
  if (x.index() != y.index()) return false;
  return std::visit(
      [&y](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(y);
        if constexpr (std::is_same_v<T, Term::Zero>) {
          return lhs.arity == rhs.arity;
        } else if constexpr (std::is_same_v<T, Term::Succ>) {
          return true;
        } else if constexpr (std::is_same_v<T, Term::Proj>) {
          return lhs.index == rhs.index && lhs.arity == rhs.arity;
        } else if constexpr (std::is_same_v<T, Term::Compose>) {
          return lhs.outer == rhs.outer && lhs.inners == rhs.inners;
        } else if constexpr (std::is_same_v<T, Term::PrimRec>) {
          return lhs.base == rhs.base && lhs.step == rhs.step;
        } else if constexpr (std::is_same_v<T, Term::Mu>) {
          return lhs.body == rhs.body;
        } else {
          return lhs.name == rhs.name;
        }
      },
      x);
}

Term zero(std::size_t arity) { return make_term(Term::Zero{arity}); }
Term succ() { return make_term(Term::Succ{}); }
Term proj(std::size_t index, std::size_t arity) { return make_term(Term::Proj{index, arity}); }
Term compose(Term outer, std::vector<Term> inners) {
  return make_term(Term::Compose{std::move(outer), std::move(inners)});
}
Term primrec(Term base, Term step) { return make_term(Term::PrimRec{std::move(base), std::move(step)}); }
Term mu(Term body) { return make_term(Term::Mu{std::move(body)}); }
Term ref(std::string name) { return make_term(Term::Name{std::move(name)}); }

std::size_t size(const Term& t) {
  if (const auto* c = t.as<Term::Compose>()) {
    std::size_t n = 1 + size(c->outer);
    for (const auto& g : c->inners) n += size(g);
    return n;
  }
  if (const auto* r = t.as<Term::PrimRec>()) return 1 + size(r->base) + size(r->step);
  if (const auto* m = t.as<Term::Mu>()) return 1 + size(m->body);
  return 1;
}

std::size_t depth(const Term& t) {
  if (const auto* c = t.as<Term::Compose>()) {
    std::size_t d = depth(c->outer);
    for (const auto& g : c->inners) d = std::max(d, depth(g));
    return 1 + d;
  }
  if (const auto* r = t.as<Term::PrimRec>()) return 1 + std::max(depth(r->base), depth(r->step));
  if (const auto* m = t.as<Term::Mu>()) return 1 + depth(m->body);
  return 1;
}

void Definitions::define(std::string name, Term term) {
  if (index_.contains(name)) throw std::invalid_argument("duplicate definition '" + name + "'");
  index_.emplace(name, entries_.size());
  entries_.emplace_back(std::move(name), std::move(term));
}

const Term* Definitions::find(std::string_view name) const {
  const auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

namespace {

class ArityChecker {
 public:
  explicit ArityChecker(const Definitions& env) : env_(env) {}

  std::size_t check(const Term& t, const std::string& path) {
    const auto here = path.empty() ? std::string("<root>") : path;
    auto child = [&path](std::string_view step) {
      return path.empty() ? std::string(step) : path + "/" + std::string(step);
    };

    if (const auto* z = t.as<Term::Zero>()) return z->arity;
    if (t.as<Term::Succ>()) return 1;
    if (const auto* p = t.as<Term::Proj>()) {
      if (p->index < 1 || p->index > p->arity) {
        throw ArityError("projection P[" + std::to_string(p->index) + "," + std::to_string(p->arity) +
                             "] needs 1 <= i <= n",
                         here, t.span());
      }
      return p->arity;
    }
    if (const auto* c = t.as<Term::Compose>()) {
      if (c->inners.empty()) throw ArityError("composition needs at least one inner term", here, t.span());
      const std::size_t outer = check(c->outer, child("C.outer"));
      if (outer != c->inners.size()) {
        throw ArityError("outer term has arity " + std::to_string(outer) + " but is given " +
                             std::to_string(c->inners.size()) + " inner terms",
                         here, t.span());
      }
      std::size_t common = 0;
      for (std::size_t j = 0; j < c->inners.size(); ++j) {
        const auto a = check(c->inners[j], child("C.inner[" + std::to_string(j + 1) + "]"));
        if (j == 0) {
          common = a;
        } else if (a != common) {
          throw ArityError("inner term " + std::to_string(j + 1) + " has arity " + std::to_string(a) +
                               ", expected " + std::to_string(common),
                           child("C.inner[" + std::to_string(j + 1) + "]"), c->inners[j].span());
        }
      }
      return common;
    }
    if (const auto* r = t.as<Term::PrimRec>()) {
      const auto g = check(r->base, child("R.base"));
      const auto h = check(r->step, child("R.step"));
      if (h != g + 2) {
        throw ArityError("step term has arity " + std::to_string(h) + ", expected " +
                             std::to_string(g + 2) + " (base arity + 2)",
                         child("R.step"), r->step.span());
      }
      return g + 1;
    }
    if (const auto* m = t.as<Term::Mu>()) {
      const auto f = check(m->body, child("M.body"));
      if (f < 1) throw ArityError("search body must have arity >= 1", here, t.span());
      return f - 1;
    }
    const auto& name = t.as<Term::Name>()->name;
    if (const auto it = cache_.find(name); it != cache_.end()) return it->second;
    const Term* target = env_.find(name);
    if (target == nullptr) throw NameError("unresolved name '" + name + "'", here, t.span());
    if (!active_.insert(name).second) {
      throw NameError("definition '" + name + "' refers to itself", here, t.span());
    }
    const auto a = check(*target, name);
    active_.erase(name);
    cache_.emplace(name, a);
    return a;
  }

 private:
  const Definitions& env_;
  std::map<std::string, std::size_t, std::less<>> cache_;
  std::set<std::string, std::less<>> active_;
};

}  // namespace

std::size_t arity_of(const Term& t, const Definitions& env) {
  return ArityChecker(env).check(t, "");
}

}  // namespace dedekind::recfn
