#include "dedekind/recfn/library.hpp"

namespace dedekind::recfn {

Definitions standard_definitions() {
  Definitions env;
  env.define("add", primrec(proj(1, 1), compose(succ(), {proj(2, 3)})));
  env.define("mul", primrec(zero(1), compose(ref("add"), {proj(3, 3), proj(2, 3)})));
  env.define("pred", primrec(zero(0), proj(1, 2)));
  env.define("rmonus", primrec(proj(1, 1), compose(ref("pred"), {proj(2, 3)})));
  env.define("monus", compose(ref("rmonus"), {proj(2, 2), proj(1, 2)}));

  // sqgap(y + 1, x) = sqgap(y, x) - (2y + 3)
  const Term two_y_plus_three =
      compose(succ(), {compose(succ(), {compose(succ(), {compose(ref("add"), {proj(1, 3), proj(1, 3)})})})});
  env.define("sqgap", primrec(proj(1, 1), compose(ref("monus"), {proj(2, 3), two_y_plus_three})));
  env.define("isqrt", mu(compose(ref("sqgap"), {proj(2, 2), proj(1, 2)})));
  env.define("diverge", mu(compose(succ(), {zero(2)})));
  return env;
}

}  // namespace dedekind::recfn
