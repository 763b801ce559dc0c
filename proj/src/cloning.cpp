#include "bell/cloning.hpp"

#include "bell/errors.hpp"

namespace bell {

namespace {

Rational resolve(const BellFunctional& f, const ValueOrBehavior& v) {
    if (const Rational* r = std::get_if<Rational>(&v)) return *r;
    return evaluate(f, std::get<Behavior>(v));
}

std::string form_note_for(const BellFunctional& f) {
    if (f.form == FunctionalForm::CorrelatorCoefficients) return "correlator form";
    return is_nonnegative_form(f) ? "non-negative probability form"
                                  : "signed probability form";
}

}  // namespace

CloningReport shrinking_factors(const BellFunctional& f, const ValueOrBehavior& base,
                                const std::vector<ValueOrBehavior>& clones) {
    CloningReport report;
    report.base_value = resolve(f, base);
    if (report.base_value == 0) throw DomainError("shrinking factors need a nonzero base value");
    if (clones.empty()) throw DomainError("shrinking factors need at least one clone");
    report.form_note = form_note_for(f);

    Rational sum = 0;
    for (const auto& clone : clones) {
        Rational value = resolve(f, clone);
        report.etas.push_back(value / report.base_value);
        sum += report.etas.back();
        report.pair_values.push_back(std::move(value));
    }
    report.mean_eta = sum / Rational(static_cast<unsigned long>(clones.size()));
    report.bound = f.bound / report.base_value;
    report.bound_holds = report.mean_eta <= report.bound;
    report.saturated = abs_leq(report.mean_eta - report.bound, kCloningTolerance);
    report.trivial = report.bound >= 1;
    return report;
}

ShrinkBound mean_shrink_bound(const BellFunctional& f, const Rational& base_value) {
    if (base_value <= 0) throw DomainError("mean shrink bound needs a positive base value");
    ShrinkBound result;
    result.bound = f.bound / base_value;
    result.trivial = result.bound >= 1;
    result.form_note = form_note_for(f);
    return result;
}

}  // namespace bell
