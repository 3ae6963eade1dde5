#include "dedekind/natural.hpp"

#include <algorithm>
#include <stdexcept>

namespace dedekind {

Natural parse_natural(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
  }
  return Natural(std::string(text));
}

}  // namespace dedekind
