#include "tiltwall/error.hpp"

namespace tiltwall {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_ample_class: return "invalid-ample-class";
        case Errc::invalid_divisor: return "invalid-divisor";
        case Errc::invalid_ab_parameters: return "invalid-ab-parameters";
        case Errc::nu_not_zero: return "nu-not-zero";
        case Errc::zero_rank: return "zero-rank";
        case Errc::bound_violated: return "bound-violated";
        case Errc::hypothesis_violated: return "hypothesis-violated";
        case Errc::ch1_sign_change: return "ch1-sign-change";
        case Errc::empty_window: return "empty-window";
        case Errc::degenerate_conic: return "degenerate-conic";
        case Errc::nonpositive_t: return "nonpositive-t";
        case Errc::degenerate_charge: return "degenerate-charge";
        case Errc::phase_gap_violation: return "phase-gap-violation";
        case Errc::scenario_invariant: return "scenario-invariant";
        case Errc::unsupported_model: return "unsupported-model";
        case Errc::irrational_value: return "irrational-value";
        case Errc::precondition_violated: return "precondition-violated";
        case Errc::parse_error: return "parse-error";
    }
    return "unknown-error";
}

}  // namespace tiltwall
