#include "accretive/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace accretive {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::HypothesisNotMet: return "hypothesis_not_met";
    }
    return "unknown";
}

Verdict scalar_verdict(std::string case_id, double lhs, double rhs, double band_rel,
                       bool hypothesis_met) {
    Verdict v;
    v.case_id = std::move(case_id);
    v.hypothesis_met = hypothesis_met;
    v.relation = "scalar";
    v.lhs_summary = lhs;
    v.rhs_summary = rhs;
    v.slack = rhs - lhs;
    v.slack_norm = v.slack / std::max(1.0, std::abs(rhs));
    v.pass = hypothesis_met && v.slack_norm >= -band_rel;
    return v;
}

}  // namespace accretive
