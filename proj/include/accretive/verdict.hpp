#pragma once

#include <string>

namespace accretive {

enum class Outcome { Pass, Fail, HypothesisNotMet };

const char* outcome_name(Outcome o);

/// Three-valued result of one inequality check.
///
/// slack is the raw margin: lambda_min(RHS-LHS) for Loewner relations,
/// rhs-lhs for scalar ones. slack_norm is the same margin divided by
/// max(1, scale of the operands); pass/fail thresholds and tightness
/// statistics use slack_norm. pass is meaningful only when hypothesis_met,
/// and pass implies hypothesis_met.
struct Verdict {
    std::string case_id;
    bool hypothesis_met = false;
    std::string relation;  // "loewner" or "scalar"
    double lhs_summary = 0.0;
    double rhs_summary = 0.0;
    double slack = 0.0;
    double slack_norm = 0.0;
    bool pass = false;
    std::string details;

    Outcome outcome() const {
        if (!hypothesis_met) return Outcome::HypothesisNotMet;
        return pass ? Outcome::Pass : Outcome::Fail;
    }
};

/// Scalar check lhs <= rhs with pass band band_rel * max(1, |rhs|).
/// Checks that consume enclosure ends widen band_rel by the enclosure eps.
Verdict scalar_verdict(std::string case_id, double lhs, double rhs, double band_rel,
                       bool hypothesis_met = true);

}  // namespace accretive
