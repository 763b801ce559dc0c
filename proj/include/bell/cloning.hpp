#pragma once

#include <string>
#include <variant>

#include "bell/functional.hpp"

namespace bell {

// Comparisons against irrational reference values use this tolerance; exact
// rational comparisons elsewhere.
inline const Rational kCloningTolerance = Rational(1, 1000000000);

// A Bell value given either directly or as a behavior to evaluate.
using ValueOrBehavior = std::variant<Rational, Behavior>;

struct CloningReport {
    Rational base_value;
    std::vector<Rational> pair_values;
    std::vector<Rational> etas;      // pair_values[m] / base_value
    Rational mean_eta;
    Rational bound;                  // R / base_value
    bool bound_holds = false;        // mean_eta <= bound
    bool saturated = false;          // |mean_eta - bound| <= tolerance
    bool trivial = false;            // bound >= 1, i.e. base_value <= R
    std::string form_note;           // which functional form produced the numbers
};

// Shrinking factors of 1 -> n cloning: eta_m is the ratio of the m-th
// clone's Bell value to the original's. Base value must be nonzero; ratios
// are exact rationals.
CloningReport shrinking_factors(const BellFunctional& f, const ValueOrBehavior& base,
                                const std::vector<ValueOrBehavior>& clones);

struct ShrinkBound {
    Rational bound;     // R / base_value
    bool trivial;       // true when base_value <= R
    std::string form_note;
};

// No-signaling bound on the mean shrinking factor. Non-trivial (< 1) exactly
// when the base value violates the inequality.
ShrinkBound mean_shrink_bound(const BellFunctional& f, const Rational& base_value);

}  // namespace bell
