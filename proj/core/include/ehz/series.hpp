#pragma once

#include "ehz/rational_function.hpp"
#include <vector>

namespace ehz {

/// Taylor expansion of f at the origin of `vars`, truncated at total degree
/// `order` in those variables. The part of den(f) that is constant in `vars`
/// must be a single (Laurent-invertible) term; otherwise throws
/// "not expandable at origin".
MultiPoly series_expand(const RationalFunction& f, const std::vector<std::string>& vars, long order);

/// Series inverse of a polynomial whose `vars`-constant part is one term.
MultiPoly series_inverse(const MultiPoly& den, const std::vector<std::string>& vars, long order);

} // namespace ehz
