#include "dedekind/recfn/eval.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace dedekind::recfn {

namespace detail {

enum class Op { zero, succ, proj, compose, primrec, mu };

struct CompiledNode {
  Op op = Op::zero;
  std::size_t arity = 0;
  std::size_t index = 0;                 // proj, 0-based
  const CompiledNode* first = nullptr;   // compose outer, primrec base, mu body
  const CompiledNode* second = nullptr;  // primrec step
  std::vector<const CompiledNode*> inners;
  std::vector<bool> evaluate_inner;  // compose: inner value is read or may diverge
  std::vector<bool> reads;           // argument positions evaluation may look at
  bool total = true;                 // contains no search
  bool skip_accumulator = false;     // primrec: step ignores f(x, y) and f is total
  std::size_t slot = 0;              // primrec resumption slot
  std::string label = "<anonymous>";
};

}  // namespace detail

namespace {

using detail::CompiledNode;
using detail::Op;
using Args = boost::container::small_vector<Natural, 4>;

class Linker {
 public:
  Linker(std::deque<CompiledNode>& arena, const Definitions& env,
         std::map<std::string, const CompiledNode*, std::less<>>& named, std::size_t& slots)
      : arena_(arena), env_(env), named_(named), slots_(slots) {}

  const CompiledNode* link(const Term& t) {
    if (const auto* n = t.as<Term::Name>()) return link_name(n->name);

    CompiledNode& node = arena_.emplace_back();
    if (const auto* z = t.as<Term::Zero>()) {
      node.op = Op::zero;
      node.arity = z->arity;
      node.reads.assign(node.arity, false);
    } else if (t.as<Term::Succ>()) {
      node.op = Op::succ;
      node.arity = 1;
      node.reads.assign(1, true);
    } else if (const auto* p = t.as<Term::Proj>()) {
      node.op = Op::proj;
      node.arity = p->arity;
      node.index = p->index - 1;
      node.reads.assign(node.arity, false);
      node.reads[node.index] = true;
    } else if (const auto* c = t.as<Term::Compose>()) {
      node.op = Op::compose;
      node.first = link(c->outer);
      for (const auto& g : c->inners) node.inners.push_back(link(g));
      node.arity = node.inners.front()->arity;
      node.total = node.first->total;
      node.reads.assign(node.arity, false);
      for (std::size_t j = 0; j < node.inners.size(); ++j) {
        const auto* g = node.inners[j];
        node.total = node.total && g->total;
        const bool needed = node.first->reads[j] || !g->total;
        node.evaluate_inner.push_back(needed);
        if (!needed) continue;
        for (std::size_t i = 0; i < node.arity; ++i) {
          if (g->reads[i]) node.reads[i] = true;
        }
      }
    } else if (const auto* r = t.as<Term::PrimRec>()) {
      node.op = Op::primrec;
      node.first = link(r->base);
      node.second = link(r->step);
      node.arity = node.first->arity + 1;
      node.total = node.first->total && node.second->total;
      node.skip_accumulator = node.total && !node.second->reads[1];
      node.slot = slots_++;
      node.reads.assign(node.arity, false);
      node.reads[0] = true;
      for (std::size_t i = 1; i < node.arity; ++i) {
        node.reads[i] = node.first->reads[i - 1] || node.second->reads[i + 1];
      }
    } else {
      const auto* m = t.as<Term::Mu>();
      node.op = Op::mu;
      node.first = link(m->body);
      node.arity = node.first->arity - 1;
      node.total = false;
      node.reads.assign(node.arity, true);
    }
    return &node;
  }

  const CompiledNode* link_name(std::string_view name) {
    if (const auto it = named_.find(name); it != named_.end()) return it->second;
    const Term* target = env_.find(name);
    if (target == nullptr) throw NameError("unresolved name '" + std::string(name) + "'", "", {});
    if (!active_.emplace(name).second) {
      throw NameError("definition '" + std::string(name) + "' refers to itself", "", {});
    }
    const CompiledNode* root = link(*target);
    active_.erase(active_.find(name));
    if (root->label == "<anonymous>" && (root->op == Op::primrec || root->op == Op::mu)) {
      const_cast<CompiledNode*>(root)->label = std::string(name);
    }
    named_.emplace(std::string(name), root);
    return root;
  }

 private:
  std::deque<CompiledNode>& arena_;
  const Definitions& env_;
  std::map<std::string, const CompiledNode*, std::less<>>& named_;
  std::size_t& slots_;
  std::set<std::string, std::less<>> active_;
};

struct OutOfFuel {};

class Run {
 public:
  Run(EvalBudget& budget, std::size_t slots, std::vector<TraceEntry>* log)
      : budget_(budget), slots_(slots), log_(log) {}

  Natural eval(const CompiledNode& n, const Natural* args) {
    spend();
    switch (n.op) {
      case Op::zero:
        return Natural(0);
      case Op::succ:
        return args[0] + 1;
      case Op::proj:
        return args[n.index];
      case Op::compose:
        return eval_compose(n, args);
      case Op::primrec:
        return eval_primrec(n, args);
      case Op::mu:
        return eval_mu(n, args);
    }
    return Natural(0);
  }

 private:
  struct Slot {
    bool valid = false;
    Natural count;
    Natural value;
    std::vector<Natural> params;
  };

  void spend() {
    if (budget_.consumed >= budget_.fuel) throw OutOfFuel{};
    ++budget_.consumed;
  }

  void record(TraceEntry::Kind kind, const CompiledNode& n, Args values) {
    if (log_ == nullptr) return;
    log_->push_back(TraceEntry{kind, n.label, std::vector<Natural>(values.begin(), values.end())});
  }

  void record_application(TraceEntry::Kind kind, const CompiledNode& n, const Natural& x,
                          const Natural* params) {
    if (log_ == nullptr) return;
    Args values;
    values.push_back(x);
    values.insert(values.end(), params, params + (n.arity - 1));
    record(kind, n, std::move(values));
  }

  Natural eval_compose(const CompiledNode& n, const Natural* args) {
    Args values(n.inners.size());
    for (std::size_t j = 0; j < n.inners.size(); ++j) {
      if (n.evaluate_inner[j]) values[j] = eval(*n.inners[j], args);
    }
    return eval(*n.first, values.data());
  }

  // f(0, y) = g(y); f(x + 1, y) = h(x, f(x, y), y).
  Natural eval_primrec(const CompiledNode& n, const Natural* args) {
    const Natural& count = args[0];
    const Natural* params = args + 1;
    const std::size_t param_count = n.arity - 1;

    if (count == 0) {
      record_application(TraceEntry::Kind::base, n, count, params);
      return eval(*n.first, params);
    }

    Args step_args(param_count + 2);
    std::copy(params, params + param_count, step_args.begin() + 2);

    if (n.skip_accumulator) {
      step_args[0] = count - 1;
      record_application(TraceEntry::Kind::step, n, count, params);
      return eval(*n.second, step_args.data());
    }

    Natural x;
    Natural acc;
    Slot& slot = slots_[n.slot];
    if (slot.valid && slot.count <= count &&
        std::equal(params, params + param_count, slot.params.begin(), slot.params.end())) {
      x = slot.count;
      acc = slot.value;
    } else {
      record_application(TraceEntry::Kind::base, n, Natural(0), params);
      acc = eval(*n.first, params);
    }
    while (x < count) {
      step_args[0] = x;
      step_args[1] = std::move(acc);
      ++x;
      record_application(TraceEntry::Kind::step, n, x, params);
      acc = eval(*n.second, step_args.data());
    }

    Slot& done = slots_[n.slot];
    done.valid = true;
    done.count = count;
    done.value = acc;
    done.params.assign(params, params + param_count);
    return acc;
  }

  // Least y with f(args, y) = 0.
  Natural eval_mu(const CompiledNode& n, const Natural* args) {
    Args probe(args, args + n.arity);
    probe.emplace_back(0);
    for (;;) {
      record(TraceEntry::Kind::probe, n, probe);
      if (eval(*n.first, probe.data()) == 0) return probe.back();
      ++probe.back();
    }
  }

  EvalBudget& budget_;
  std::vector<Slot> slots_;
  std::vector<TraceEntry>* log_;
};

}  // namespace

std::string describe(const EvalOutcome& outcome) {
  return std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Value>) {
          return o.value.str();
        } else if constexpr (std::is_same_v<T, FuelExhausted>) {
          return "fuel exhausted after " + std::to_string(o.consumed) + " steps";
        } else {
          return "arity mismatch: " + o.details;
        }
      },
      outcome);
}

Evaluator::Evaluator(Definitions env)
    : env_(std::move(env)), arena_(std::make_unique<std::deque<CompiledNode>>()) {
  for (const auto& [name, term] : env_.entries()) arity_of(term, env_);
  std::map<std::string, const CompiledNode*, std::less<>> named;
  Linker linker(*arena_, env_, named, slot_count_);
  for (const auto& [name, term] : env_.entries()) roots_.push_back(linker.link_name(name));
}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

TracedOutcome Evaluator::run(const Term& term, std::span<const Natural> args, EvalBudget& budget,
                             bool traced) const {
  TracedOutcome result{FuelExhausted{0}, {}};

  std::size_t arity = 0;
  try {
    arity = arity_of(term, env_);
  } catch (const TermError& e) {
    const auto where = e.path().empty() ? std::string() : " at " + e.path();
    result.outcome = ArityMismatch{e.what() + where};
    return result;
  }
  if (arity != args.size()) {
    result.outcome = ArityMismatch{"term has arity " + std::to_string(arity) + " but " +
                                   std::to_string(args.size()) + " arguments were given"};
    return result;
  }

  // Named roots are shared; anonymous structure is linked per call.
  std::map<std::string, const CompiledNode*, std::less<>> named;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    named.emplace(env_.entries()[i].first, roots_[i]);
  }
  std::size_t slots = slot_count_;
  std::deque<CompiledNode> local;
  Linker linker(local, env_, named, slots);
  const CompiledNode* root = linker.link(term);

  Run run_state(budget, slots, traced ? &result.log : nullptr);
  try {
    result.outcome = Value{run_state.eval(*root, args.data())};
  } catch (const OutOfFuel&) {
    result.outcome = FuelExhausted{budget.consumed};
  }
  return result;
}

EvalOutcome Evaluator::eval(const Term& term, std::span<const Natural> args, EvalBudget& budget) const {
  return run(term, args, budget, false).outcome;
}

TracedOutcome Evaluator::eval_trace(const Term& term, std::span<const Natural> args,
                                    EvalBudget& budget) const {
  return run(term, args, budget, true);
}

EvalOutcome eval(const Term& term, std::span<const Natural> args, EvalBudget& budget,
                 const Definitions& env) {
  std::unique_ptr<Evaluator> evaluator;
  try {
    evaluator = std::make_unique<Evaluator>(env);
  } catch (const TermError& e) {
    return ArityMismatch{std::string("definitions: ") + e.what()};
  }
  return evaluator->eval(term, args, budget);
}

TracedOutcome eval_trace(const Term& term, std::span<const Natural> args, EvalBudget& budget,
                         const Definitions& env) {
  std::unique_ptr<Evaluator> evaluator;
  try {
    evaluator = std::make_unique<Evaluator>(env);
  } catch (const TermError& e) {
    return {ArityMismatch{std::string("definitions: ") + e.what()}, {}};
  }
  return evaluator->eval_trace(term, args, budget);
}

}  // namespace dedekind::recfn
