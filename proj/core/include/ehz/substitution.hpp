#pragma once

#include "ehz/rational_function.hpp"
#include <map>
#include <string>

namespace ehz {

/// Variable -> monomial-times-constant image. All substitutions used in this
/// library have single-term images, which keeps Laurent exponents invertible;
/// a variable occurring with a negative exponent maps through the inverse of
/// its image.
class SubstitutionMap {
public:
    SubstitutionMap() = default;

    /// Map `var` to the given single-term polynomial. Throws if the image has
    /// more than one term (such an image cannot be inverted monomially).
    SubstitutionMap& set(const std::string& var, const MultiPoly& image);

    bool has(const std::string& var) const;

    MultiPoly apply(const MultiPoly& f) const;
    RationalFunction apply(const RationalFunction& f) const;

private:
    std::map<int, std::pair<Monomial, Rational>> images_;
};

/// General substitution of one variable by an arbitrary polynomial; requires
/// that `var` occurs with nonnegative exponents only.
MultiPoly subst_poly(const MultiPoly& f, const std::string& var, const MultiPoly& image);

} // namespace ehz
