#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reesgb/graph.hpp"
#include "reesgb/membership.hpp"
#include "reesgb/monomial.hpp"

namespace reesgb {

/// Bookkeeping from the Koszul computations. Every strand gets an
/// Euler-characteristic check (alternating face counts against alternating
/// homology ranks); every materialized strand additionally verifies that
/// consecutive boundary maps compose to zero. The `all_*` flags must stay
/// true; they exist so callers can assert it.
struct AuditStats {
    long long strands = 0;
    long long materialized = 0;
    long long shortcut_cone = 0;
    long long shortcut_simplex = 0;
    long long dd_checks = 0;
    long long euler_checks = 0;
    bool all_dd_zero = true;
    bool all_euler_ok = true;
    void merge(const AuditStats& o);
};

/// Betti numbers, either bigraded over S (Rees mode: beta_{i,(a,b)} of the
/// Rees algebra presented as a cyclic S-module) or graded over R (power
/// mode: beta_{i,d} of R/I^s).
struct BettiTable {
    enum class Mode { ReesBigraded, PowerGraded };
    Mode mode = Mode::ReesBigraded;
    /// Key (i, a, b); power mode stores (i, d, 0). Absent means zero.
    std::map<std::array<int, 3>, long long> entries;
    /// Rees: bidegree box scanned. Power: (d_max, s).
    int window_a = 0, window_b = 0;
    /// True when the window provably contains every nonzero entry.
    bool complete = false;
    AuditStats audit;

    long long beta(int i, int a, int b = 0) const;
    int max_homological_index() const;
};

struct KoszulOptions {
    /// Disables the cone/full-simplex shortcuts so that every strand
    /// materializes its boundary matrices and runs the d.d = 0 audit.
    bool full_audit = false;
    /// 0 = ranks in exact rational arithmetic (the authoritative mode).
    /// A prime computes ranks over Z/p instead; faster on big strands,
    /// but Betti numbers over a finite field can exceed the rational
    /// ones in characteristic-dependent cases, so exact mode wins any
    /// disagreement.
    long long modular_prime = 0;
    int var_cap = 12;    // Rees mode: N + q at most this
    int degree_cap = 40; // piece degree cap
    int taylor_cap = 20; // window certificate subset cap
    std::optional<std::pair<int, int>> window;  // Rees window override
};

/// Degree box certified to contain every nonzero Betti bidegree of the
/// Rees module: componentwise lcm degrees of the grevlex initial ideal
/// (its Taylor resolution bounds the minimal shifts, and an initial
/// degeneration can only raise Betti numbers). `candidate_bidegrees`
/// lists the subset-lcm bidegrees, the only places entries can live.
struct WindowCertificate {
    int a_max = 0, b_max = 0;
    std::vector<std::pair<int, int>> candidate_bidegrees;  // sorted, unique
    std::vector<Monomial> initial_gens;
};

WindowCertificate certify_window(const BipartiteGraph& g, int taylor_cap = 20);

/// Bigraded Betti numbers of the Rees algebra as a cyclic S-module, by
/// Koszul homology over all N+q variables. Graded pieces decompose by
/// the vertex-variable multidegree, so each bidegree splits into small
/// independent strands whose ranks are computed exactly.
BettiTable koszul_betti_rees(const BipartiteGraph& g,
                             const KoszulOptions& opts = {});

/// Graded Betti numbers of R/I^s by Koszul homology over the N vertex
/// variables. The scan covers every multidegree dividing the lcm of the
/// generators of I^s (exponents at most s), which is sufficient.
BettiTable koszul_betti_power(const BipartiteGraph& g, int s,
                              std::optional<int> d_max = {},
                              const KoszulOptions& opts = {});

/// Regularity and projective dimension read off a complete table.
/// Rees mode: reg = max(a+b-i), reg_xy = max(a-i), reg_T = max(b-i).
/// Power mode: reg = max(d-i) of R/I^s (reg_xy mirrors it, reg_T is 0).
/// Throws IncompleteTableError when the table is not complete.
struct RegStats {
    int reg = 0, reg_xy = 0, reg_T = 0, pd = 0;
};
RegStats reg_stats(const BettiTable& t);

/// reg(I^s) from a power-mode table of R/I^s.
int power_ideal_regularity(const BettiTable& t);

/// Taylor-resolution bound for the vertex regularity of S modulo a
/// monomial ideal: max over nonempty generator subsets of
/// (vertex degree of the lcm) - (subset size), floored at zero.
/// Throws SizeLimitError when there are more than `cap` generators.
int taylor_xy_bound(const std::vector<Monomial>& initial_gens, int cap = 20);

/// Krull dimension of the Rees algebra: the exact rank of the
/// presentation matrix (always N + 1).
int rees_dimension(const BipartiteGraph& g);

}  // namespace reesgb
