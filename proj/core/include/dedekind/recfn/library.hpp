#pragma once

#include "dedekind/recfn/term.hpp"

namespace dedekind::recfn {

// Standard definitions, in dependency order:
//   add(x, y)    = x + y            recursion on x
//   mul(x, y)    = x * y            recursion on x, adds y each step
//   pred(x)      = x - 1, pred(0) = 0
//   rmonus(y, x) = x - y truncated  recursion on y
//   monus(x, y)  = x - y truncated at 0
//   sqgap(y, x)  = (x + 1) - (y + 1)^2 truncated
//   isqrt(x)     = least y with (y + 1)^2 > x
//   diverge(x)   = search over a body that is never 0
Definitions standard_definitions();

}  // namespace dedekind::recfn
