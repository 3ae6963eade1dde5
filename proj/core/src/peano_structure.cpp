#include "dedekind/peano/structure.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dedekind::peano {

namespace {

bool is_valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
           return std::isalnum(c) != 0;
         });
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

PointedStructure::PointedStructure(std::vector<ElementId> elements, ElementId zero,
                                   const std::vector<Edge>& edges,
                                   std::vector<ElementId> frontier)
    : elements_(std::move(elements)), zero_(std::move(zero)), frontier_(std::move(frontier)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw ModelError("duplicate element '" + elements_[i] + "'");
    }
  }
  if (!contains(zero_)) throw ModelError("zero '" + zero_ + "' is not an element");
  for (const auto& [from, to] : edges) {
    if (!contains(from)) throw ModelError("successor defined on unknown element '" + from + "'");
    if (!contains(to)) throw ModelError("successor of '" + from + "' leaves the carrier");
    if (!succ_.emplace(from, to).second) {
      throw ModelError("successor of '" + from + "' defined twice");
    }
  }
  for (const auto& f : frontier_) {
    if (!contains(f)) throw ModelError("frontier element '" + f + "' is not an element");
    if (succ_.contains(f)) throw ModelError("frontier element '" + f + "' has a successor");
    frontier_set_.insert(f);
  }
  for (const auto& e : elements_) {
    if (!succ_.contains(e) && !frontier_set_.contains(e)) {
      throw ModelError("successor undefined at non-frontier element '" + e + "'");
    }
  }
}

const ElementId* PointedStructure::successor(const ElementId& id) const {
  const auto it = succ_.find(id);
  return it == succ_.end() ? nullptr : &it->second;
}

std::vector<PointedStructure::Edge> PointedStructure::edges() const {
  std::vector<Edge> out;
  out.reserve(succ_.size());
  for (const auto& e : elements_) {
    if (const auto* s = successor(e)) out.emplace_back(e, *s);
  }
  return out;
}

PointedStructure parse_structure(std::string_view text) {
  std::vector<ElementId> elements;
  std::unordered_set<ElementId> seen;
  auto mention = [&](const std::string& id, std::size_t line) {
    if (!is_valid_id(id)) throw ModelError("invalid element id '" + id + "'", line);
    if (seen.insert(id).second) elements.push_back(id);
  };

  std::optional<ElementId> zero;
  std::optional<std::vector<ElementId>> frontier;
  std::vector<PointedStructure::Edge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("zero:")) {
      if (zero) throw ModelError("zero declared twice", line_no);
      if (frontier) throw ModelError("zero must precede the frontier line", line_no);
      std::string id(trim(line.substr(5)));
      mention(id, line_no);
      zero = id;
    } else if (line.starts_with("frontier:")) {
      if (frontier) throw ModelError("frontier declared twice", line_no);
      frontier.emplace();
      auto rest = trim(line.substr(9));
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string id(trim(rest.substr(0, comma)));
        mention(id, line_no);
        frontier->push_back(id);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
        if (trim(rest).empty()) throw ModelError("trailing comma in frontier list", line_no);
      }
    } else if (const auto arrow = line.find("->"); arrow != std::string_view::npos) {
      if (!zero) throw ModelError("successor line before the zero declaration", line_no);
      if (frontier) throw ModelError("successor line after the frontier declaration", line_no);
      std::string from(trim(line.substr(0, arrow)));
      std::string to(trim(line.substr(arrow + 2)));
      mention(from, line_no);
      mention(to, line_no);
      edges.emplace_back(std::move(from), std::move(to));
    } else {
      throw ModelError("unrecognised line '" + std::string(line) + "'", line_no);
    }
  }
  if (!zero) throw ModelError("missing 'zero:' declaration");
  return PointedStructure(std::move(elements), *zero, edges,
                          frontier ? std::move(*frontier) : std::vector<ElementId>{});
}

std::string format_structure(const PointedStructure& s) {
  std::ostringstream out;
  out << "zero: " << s.zero() << '\n';
  for (const auto& [from, to] : s.edges()) out << from << " -> " << to << '\n';
  out << "frontier: ";
  for (std::size_t i = 0; i < s.frontier().size(); ++i) {
    if (i) out << ',';
    out << s.frontier()[i];
  }
  out << '\n';
  return out.str();
}

bool Chain::contains(const ElementId& id) const {
  return std::find(members.begin(), members.end(), id) != members.end();
}

Chain chain_of(const PointedStructure& s, const ElementId& seed, std::size_t max_depth) {
  if (!s.contains(seed)) throw std::domain_error("unknown seed element '" + seed + "'");
  Chain chain;
  std::unordered_set<ElementId> visited;
  const ElementId* current = &seed;
  for (std::size_t step = 0;; ++step) {
    chain.members.push_back(*current);
    visited.insert(*current);
    if (step == max_depth) break;
    const ElementId* next = s.successor(*current);
    if (next == nullptr || visited.contains(*next)) break;
    current = next;
  }
  return chain;
}

}  // namespace dedekind::peano
