#include "reesgb/reports.hpp"

#include <algorithm>

namespace reesgb {

BoundsReport bounds_report(const BipartiteGraph& g, int s_max,
                           const KoszulOptions& opts, int cap_edges) {
    BoundsReport rep;
    const int match = matching_number(g);
    const int b = min_maximal_matching_number(g, cap_edges);
    const int cap =
        std::min({g.n() - 1, g.m() - 1, 2 * b - 1});
    {
        Claim c;
        c.claim = "match-1 <= min(|X|-1,|Y|-1,2b-1)";
        c.lhs = match - 1;
        c.rhs = cap;
        c.holds = c.lhs <= c.rhs;
        rep.claims.push_back(c);
    }
    for (int s = 1; s <= s_max; ++s) {
        BettiTable t = koszul_betti_power(g, s, {}, opts);
        int reg = power_ideal_regularity(t);
        rep.regs.push_back(PowerRegularity{s, reg});
        Claim c1;
        c1.claim = "reg(I^" + std::to_string(s) + ") <= 2s+match-1";
        c1.lhs = reg;
        c1.rhs = 2 * s + match - 1;
        c1.holds = c1.lhs <= c1.rhs;
        rep.claims.push_back(c1);
        Claim c2;
        c2.claim =
            "reg(I^" + std::to_string(s) + ") <= 2s+min(|X|-1,|Y|-1,2b-1)";
        c2.lhs = reg;
        c2.rhs = 2 * s + cap;
        c2.holds = c2.lhs <= c2.rhs;
        rep.claims.push_back(c2);
    }
    return rep;
}

LinearityReport linearity_check(const BipartiteGraph& g, int s_lo, int s_hi,
                                const KoszulOptions& opts) {
    if (s_lo < 1 || s_hi < s_lo)
        throw InputError("linearity check needs 1 <= s_lo <= s_hi");
    LinearityReport rep;
    rep.threshold = matching_number(g) + g.q() + 1;
    std::vector<int> regs;  // reg(I^s) for s in [s_lo, s_hi]
    for (int s = s_lo; s <= s_hi; ++s)
        regs.push_back(power_ideal_regularity(koszul_betti_power(g, s, {}, opts)));
    for (int s = s_lo; s < s_hi; ++s) {
        LinearityStep step;
        step.s = s;
        step.reg_s = regs[s - s_lo];
        step.reg_next = regs[s - s_lo + 1];
        step.asserted = s >= rep.threshold;
        step.holds = step.reg_next == step.reg_s + 2;
        rep.steps.push_back(step);
    }
    return rep;
}

}  // namespace reesgb
