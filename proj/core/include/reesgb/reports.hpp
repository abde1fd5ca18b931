#pragma once

#include <string>
#include <vector>

#include "reesgb/graph.hpp"
#include "reesgb/koszul.hpp"

namespace reesgb {

/// One verified inequality or equality; `asserted` is false when the
/// claim lies outside the range a theorem covers (reported, not judged).
struct Claim {
    std::string claim;
    long long lhs = 0;
    std::string relation = "<=";
    long long rhs = 0;
    bool holds = false;
    bool asserted = true;
};

struct PowerRegularity {
    int s = 0;
    int reg = 0;  // reg(I^s)
};

struct BoundsReport {
    std::vector<PowerRegularity> regs;
    std::vector<Claim> claims;
    bool ok() const {
        for (const auto& c : claims)
            if (c.asserted && !c.holds) return false;
        return true;
    }
};

/// For s = 1..s_max, computes reg(I^s) and checks it against
/// 2s + match - 1 and 2s + min(|X|-1, |Y|-1, 2b-1); also records
/// match - 1 <= min(...).
BoundsReport bounds_report(const BipartiteGraph& g, int s_max,
                           const KoszulOptions& opts = {},
                           int cap_edges = 24);

struct LinearityStep {
    int s = 0;
    int reg_s = 0, reg_next = 0;
    bool asserted = true;  // false below the threshold match + q + 1
    bool holds = false;
};

struct LinearityReport {
    int threshold = 0;
    std::vector<LinearityStep> steps;
    bool ok() const {
        for (const auto& s : steps)
            if (s.asserted && !s.holds) return false;
        return true;
    }
};

/// Checks reg(I^(s+1)) = reg(I^s) + 2 for s in [s_lo, s_hi-1]; steps
/// below the threshold are reported as not asserted.
LinearityReport linearity_check(const BipartiteGraph& g, int s_lo, int s_hi,
                                const KoszulOptions& opts = {});

}  // namespace reesgb
