#pragma once

#include <stdexcept>
#include <string>

namespace tiltwall {

enum class Errc {
    invalid_ample_class,
    invalid_divisor,
    invalid_ab_parameters,
    nu_not_zero,
    zero_rank,
    bound_violated,
    hypothesis_violated,
    ch1_sign_change,
    empty_window,
    degenerate_conic,
    nonpositive_t,
    degenerate_charge,
    phase_gap_violation,
    scenario_invariant,
    unsupported_model,
    irrational_value,
    precondition_violated,
    parse_error,
};

/// Wire name used in {"error": <name>} payloads and error messages.
const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace tiltwall
