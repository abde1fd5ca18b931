#include "reesgb/koszul.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "reesgb/circuits.hpp"
#include "reesgb/groebner.hpp"
#include "reesgb/linalg.hpp"
#include "reesgb/order.hpp"
#include "reesgb/walk.hpp"

namespace reesgb {

void AuditStats::merge(const AuditStats& o) {
    strands += o.strands;
    materialized += o.materialized;
    shortcut_cone += o.shortcut_cone;
    shortcut_simplex += o.shortcut_simplex;
    dd_checks += o.dd_checks;
    euler_checks += o.euler_checks;
    all_dd_zero = all_dd_zero && o.all_dd_zero;
    all_euler_ok = all_euler_ok && o.all_euler_ok;
}

long long BettiTable::beta(int i, int a, int b) const {
    auto it = entries.find({i, a, b});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::max_homological_index() const {
    int pd = 0;
    for (const auto& [key, beta] : entries)
        if (beta != 0) pd = std::max(pd, key[0]);
    return pd;
}

namespace {

// One multidegree strand of a Koszul complex: a chain complex whose basis
// in homological degree i is the set of accepted vertex subsets of size i.
// `is_face` need not be closed under subsets (power mode is a quotient
// complex); boundary terms whose target is absent are simply dropped.
struct Strand {
    int V = 0;
    std::vector<char> is_face;  // indexed by mask, size 1 << V
};

// Homology ranks of the strand, with audit checks. Shortcuts (full
// simplex / cone over a vertex, both acyclic) only fire when the strand
// is subset-closed and the caller allows them.
std::vector<long long> strand_homology(const Strand& s, bool allow_shortcuts,
                                       long long mod_prime,
                                       AuditStats& audit) {
    audit.strands += 1;
    const int V = s.V;
    const int nmasks = 1 << V;
    std::vector<std::vector<int>> faces(V + 1);
    std::vector<int> face_index(nmasks, -1);
    for (int mask = 0; mask < nmasks; ++mask)
        if (s.is_face[mask]) {
            int size = std::popcount(static_cast<unsigned>(mask));
            face_index[mask] = static_cast<int>(faces[size].size());
            faces[size].push_back(mask);
        }
    long long euler_faces = 0, total_faces = 0;
    for (int i = 0; i <= V; ++i) {
        euler_faces += (i % 2 ? -1 : 1) * static_cast<long long>(faces[i].size());
        total_faces += static_cast<long long>(faces[i].size());
    }

    auto finish_euler = [&](const std::vector<long long>& betti) {
        long long euler_homology = 0;
        for (int i = 0; i <= V; ++i)
            euler_homology += (i % 2 ? -1 : 1) * betti[i];
        audit.euler_checks += 1;
        if (euler_homology != euler_faces) audit.all_euler_ok = false;
    };

    if (allow_shortcuts && V >= 1) {
        bool acyclic = false;
        if (total_faces == nmasks) {
            audit.shortcut_simplex += 1;
            acyclic = true;
        } else {
            for (int v = 0; v < V && !acyclic; ++v) {
                bool cone = true;
                for (int i = 0; i <= V && cone; ++i)
                    for (int mask : faces[i])
                        if (!(mask & (1 << v)) && !s.is_face[mask | (1 << v)]) {
                            cone = false;
                            break;
                        }
                if (cone) {
                    audit.shortcut_cone += 1;
                    acyclic = true;
                }
            }
        }
        if (acyclic) {
            std::vector<long long> betti(V + 1, 0);
            finish_euler(betti);
            return betti;
        }
    }

    audit.materialized += 1;
    std::vector<int> rank(V + 2, 0);
    for (int i = 1; i <= V; ++i) {
        const auto& cols = faces[i];
        const auto& rows = faces[i - 1];
        if (cols.empty() || rows.empty()) continue;
        std::vector<std::vector<long long>> d(
            rows.size(), std::vector<long long>(cols.size(), 0));
        for (size_t c = 0; c < cols.size(); ++c) {
            int mask = cols[c], pos = 0;
            for (int v = 0; v < V; ++v) {
                if (!(mask & (1 << v))) continue;
                int sub = mask ^ (1 << v);
                if (face_index[sub] >= 0)
                    d[face_index[sub]][c] = (pos % 2 ? -1 : 1);
                ++pos;
            }
        }
        rank[i] = mod_prime > 0 ? rank_mod_p(d, mod_prime) : rank_exact(d);
    }
    // d o d = 0, composed column by column over the sparse boundary.
    for (int i = 1; i + 1 <= V; ++i) {
        audit.dd_checks += 1;
        std::vector<long long> acc(faces[i - 1].size(), 0);
        for (int top : faces[i + 1]) {
            std::fill(acc.begin(), acc.end(), 0);
            int pos1 = 0;
            for (int v = 0; v < V; ++v) {
                if (!(top & (1 << v))) continue;
                int mid = top ^ (1 << v);
                int sign1 = pos1 % 2 ? -1 : 1;
                ++pos1;
                if (face_index[mid] < 0) continue;
                int pos2 = 0;
                for (int u = 0; u < V; ++u) {
                    if (!(mid & (1 << u))) continue;
                    int bottom = mid ^ (1 << u);
                    int sign2 = pos2 % 2 ? -1 : 1;
                    ++pos2;
                    if (face_index[bottom] >= 0)
                        acc[face_index[bottom]] += sign1 * sign2;
                }
            }
            for (long long x : acc)
                if (x != 0) audit.all_dd_zero = false;
        }
    }
    std::vector<long long> betti(V + 1, 0);
    for (int i = 0; i <= V; ++i)
        betti[i] =
            static_cast<long long>(faces[i].size()) - rank[i] - rank[i + 1];
    finish_euler(betti);
    return betti;
}

}  // namespace

WindowCertificate certify_window(const BipartiteGraph& g, int taylor_cap) {
    GroebnerBasis gb =
        reduce_basis(buchberger(ugb_binomials(g), MonomialOrder::grevlex(g)));
    WindowCertificate cert;
    cert.initial_gens = initial_ideal(gb);
    std::set<std::pair<int, int>> cands{{0, 0}};
    const int c = static_cast<int>(cert.initial_gens.size());
    if (c > 0) {
        Monomial all = cert.initial_gens[0];
        for (int i = 1; i < c; ++i) all = lcm(all, cert.initial_gens[i]);
        cert.a_max = all.xy_degree();
        cert.b_max = all.t_degree();
        if (c <= taylor_cap) {
            auto rec = [&](auto&& self, int next, const Monomial& cur) -> void {
                for (int i = next; i < c; ++i) {
                    Monomial ext = lcm(cur, cert.initial_gens[i]);
                    cands.insert({ext.xy_degree(), ext.t_degree()});
                    self(self, i + 1, ext);
                }
            };
            rec(rec, 0, Monomial::one(g));
        } else {
            for (int a = 0; a <= cert.a_max; ++a)
                for (int b = 0; b <= cert.b_max; ++b) cands.insert({a, b});
        }
    }
    cert.candidate_bidegrees.assign(cands.begin(), cands.end());
    return cert;
}

namespace {

// Strand of the Rees Koszul complex at vertex-variable multidegree w and
// t-power b. Local vertices are the usable variables: vertex variables
// act by dividing out one exponent, edge variables divide out an edge and
// one power. Faces are the subsets whose quotient stays in the algebra.
std::vector<long long> rees_strand(const BipartiteGraph& g,
                                   const MembershipOracle& oracle,
                                   const std::vector<int>& w, int b,
                                   bool allow_shortcuts, long long mod_prime,
                                   AuditStats& audit) {
    const int N = g.num_vertices();
    struct LocalVertex {
        std::vector<int> delta;  // exponent drop over the vertex variables
        int t_drop = 0;
    };
    std::vector<LocalVertex> verts;
    for (int v = 0; v < N; ++v) {
        if (w[v] < 1) continue;
        std::vector<int> rem = w;
        rem[v] -= 1;
        if (!oracle.contains(rem, b)) continue;
        std::vector<int> delta(N, 0);
        delta[v] = 1;
        verts.push_back(LocalVertex{std::move(delta), 0});
    }
    if (b >= 1) {
        for (int t = 0; t < g.q(); ++t) {
            auto [u, v] = g.endpoints(t);
            if (w[u] < 1 || w[v] < 1) continue;
            std::vector<int> rem = w;
            rem[u] -= 1;
            rem[v] -= 1;
            if (!oracle.contains(rem, b - 1)) continue;
            std::vector<int> delta(N, 0);
            delta[u] = 1;
            delta[v] = 1;
            verts.push_back(LocalVertex{std::move(delta), 1});
        }
    }

    Strand s;
    s.V = static_cast<int>(verts.size());
    const int nmasks = 1 << s.V;
    s.is_face.assign(nmasks, 0);
    s.is_face[0] = 1;
    std::vector<std::vector<int>> rem(nmasks);
    rem[0] = w;
    for (int mask = 1; mask < nmasks; ++mask) {
        int low = std::countr_zero(static_cast<unsigned>(mask));
        int prev = mask ^ (1 << low);
        if (!s.is_face[prev]) continue;  // subset-closed, so neither is mask
        std::vector<int> r = rem[prev];
        bool nonneg = true;
        for (int v = 0; v < N; ++v) {
            r[v] -= verts[low].delta[v];
            if (r[v] < 0) nonneg = false;
        }
        if (!nonneg) continue;
        int t_total = 0;
        for (int v = 0; v < s.V; ++v)
            if (mask & (1 << v)) t_total += verts[v].t_drop;
        if (t_total > b) continue;  // t-coordinate would go negative
        if (!oracle.contains(r, b - t_total)) continue;
        s.is_face[mask] = 1;
        rem[mask] = std::move(r);
    }
    return strand_homology(s, allow_shortcuts, mod_prime, audit);
}

// Strand of the Koszul complex on R/I^s at multidegree w: subsets S of
// the support of w with x^(w - e_S) outside I^s. Not subset-closed.
std::vector<long long> power_strand(const BipartiteGraph& g,
                                    const MembershipOracle& oracle,
                                    const std::vector<int>& w, int s_power,
                                    long long mod_prime, AuditStats& audit) {
    const int N = g.num_vertices();
    std::vector<int> support;
    for (int v = 0; v < N; ++v)
        if (w[v] >= 1) support.push_back(v);
    Strand s;
    s.V = static_cast<int>(support.size());
    const int nmasks = 1 << s.V;
    s.is_face.assign(nmasks, 0);
    for (int mask = 0; mask < nmasks; ++mask) {
        std::vector<int> rem = w;
        for (int v = 0; v < s.V; ++v)
            if (mask & (1 << v)) rem[support[v]] -= 1;
        s.is_face[mask] = !oracle.contains(rem, s_power);
    }
    return strand_homology(s, /*allow_shortcuts=*/false, mod_prime, audit);
}

}  // namespace

BettiTable koszul_betti_rees(const BipartiteGraph& g,
                             const KoszulOptions& opts) {
    if (g.num_vertices() + g.q() > opts.var_cap)
        throw SizeLimitError("Rees Betti table capped at " +
                             std::to_string(opts.var_cap) +
                             " variables (graph needs " +
                             std::to_string(g.num_vertices() + g.q()) + ")");
    WindowCertificate cert = certify_window(g, opts.taylor_cap);
    BettiTable t;
    t.mode = BettiTable::Mode::ReesBigraded;
    t.window_a = cert.a_max;
    t.window_b = cert.b_max;
    t.complete = true;
    if (opts.window) {
        t.window_a = opts.window->first;
        t.window_b = opts.window->second;
        t.complete = t.window_a >= cert.a_max && t.window_b >= cert.b_max;
    }
    MembershipOracle oracle(g);
    for (const auto& [a, b] : cert.candidate_bidegrees) {
        if (a > t.window_a || b > t.window_b) continue;
        PieceBasis piece = piece_basis(g, a, b, opts.degree_cap, &oracle);
        for (const auto& w : piece.monomials) {
            auto betti = rees_strand(g, oracle, w, b, !opts.full_audit,
                                     opts.modular_prime, t.audit);
            for (int i = 0; i < static_cast<int>(betti.size()); ++i)
                if (betti[i] != 0) t.entries[{i, a, b}] += betti[i];
        }
    }
    return t;
}

BettiTable koszul_betti_power(const BipartiteGraph& g, int s,
                              std::optional<int> d_max,
                              const KoszulOptions& opts) {
    if (s < 1) throw InputError("power must be >= 1");
    const int N = g.num_vertices();
    const int lcm_degree = s * N;  // lcm of the generators of I^s
    const int window_d = d_max.value_or(lcm_degree);
    double scan = std::pow(static_cast<double>(s) + 1.0, N);
    if (scan > 4e6)
        throw SizeLimitError("power Betti scan too large: (s+1)^N = " +
                             std::to_string(static_cast<long long>(scan)));
    BettiTable t;
    t.mode = BettiTable::Mode::PowerGraded;
    t.window_a = window_d;
    t.window_b = s;
    t.complete = window_d >= lcm_degree;
    MembershipOracle oracle(g);
    std::vector<int> w(N, 0);
    auto scan_rec = [&](auto&& self, int pos, int degree) -> void {
        if (pos == N) {
            auto betti =
                power_strand(g, oracle, w, s, opts.modular_prime, t.audit);
            for (int i = 0; i < static_cast<int>(betti.size()); ++i)
                if (betti[i] != 0) t.entries[{i, degree, 0}] += betti[i];
            return;
        }
        for (int e = 0; e <= s && degree + e <= window_d; ++e) {
            w[pos] = e;
            self(self, pos + 1, degree + e);
        }
        w[pos] = 0;
    };
    scan_rec(scan_rec, 0, 0);
    return t;
}

RegStats reg_stats(const BettiTable& t) {
    if (!t.complete)
        throw IncompleteTableError(
            "regularity needs a complete Betti window; widen --window");
    RegStats out;
    bool any = false;
    for (const auto& [key, beta] : t.entries) {
        if (beta == 0) continue;
        auto [i, a, b] = key;
        if (!any) {
            out = RegStats{a + b - i, a - i, b - i, i};
            any = true;
            continue;
        }
        out.reg = std::max(out.reg, a + b - i);
        out.reg_xy = std::max(out.reg_xy, a - i);
        out.reg_T = std::max(out.reg_T, b - i);
        out.pd = std::max(out.pd, i);
    }
    if (t.mode == BettiTable::Mode::PowerGraded) out.reg_T = 0;
    return out;
}

int power_ideal_regularity(const BettiTable& t) {
    if (t.mode != BettiTable::Mode::PowerGraded)
        throw InputError("power_ideal_regularity needs a power-mode table");
    return reg_stats(t).reg + 1;
}

int taylor_xy_bound(const std::vector<Monomial>& initial_gens, int cap) {
    if (static_cast<int>(initial_gens.size()) > cap)
        throw SizeLimitError("Taylor bound capped at " + std::to_string(cap) +
                             " generators");
    int best = 0;
    const int c = static_cast<int>(initial_gens.size());
    auto rec = [&](auto&& self, int next, const Monomial& cur,
                   int size) -> void {
        for (int i = next; i < c; ++i) {
            Monomial ext = size == 0 ? initial_gens[i]
                                     : lcm(cur, initial_gens[i]);
            best = std::max(best, ext.xy_degree() - (size + 1));
            self(self, i + 1, ext, size + 1);
        }
    };
    if (c > 0) rec(rec, 0, initial_gens[0], 0);
    return best;
}

int rees_dimension(const BipartiteGraph& g) {
    ReesMatrix mat = rees_matrix(g);
    std::vector<std::vector<long long>> a(mat.rows,
                                          std::vector<long long>(mat.cols));
    for (int r = 0; r < mat.rows; ++r)
        for (int c = 0; c < mat.cols; ++c) a[r][c] = mat.a[r][c];
    return rank_exact(a);
}

}  // namespace reesgb
