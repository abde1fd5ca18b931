#pragma once

#include <string>
#include <vector>

#include "reesgb/graph.hpp"
#include "reesgb/monomial.hpp"

namespace reesgb {

/// Total multiplicative well-order on the monomials of S.
///
/// Variable slots are numbered x_1..x_n, y_1..y_m, T_1..T_q (0-based,
/// in that order). A priority vector lists slots from most significant
/// to least; the default is that slot order itself.
///
/// MatchProduct is the product order attached to a maximal matching:
/// vertex parts are compared first, by pure lex with ranks taken from
/// `renumber_for_matching` and priority x_n > ... > x_1 > y_m > ... > y_1;
/// only ties fall through to the chosen order on the T block.
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, Weight, MatchProduct };

    static MonomialOrder lex(const BipartiteGraph& g,
                             std::vector<int> priority = {});
    static MonomialOrder grevlex(const BipartiteGraph& g,
                                 std::vector<int> priority = {});
    /// Weight rows are compared in turn; remaining ties break by lex over
    /// `tie_priority`. A single strictly positive row always yields a
    /// global order.
    static MonomialOrder weight(const BipartiteGraph& g,
                                std::vector<std::vector<long long>> rows,
                                std::vector<int> tie_priority = {});
    /// `mt` must be a maximal matching. The T block is compared by
    /// grevlex on T_1..T_q unless `t_lex` is set. `enforce_side_convention`
    /// rejects graphs with |X| > |Y| (canonical graphs always pass).
    static MonomialOrder match_product(const BipartiteGraph& g,
                                       const Matching& mt, bool t_lex = false,
                                       bool enforce_side_convention = true);

    Kind kind() const { return kind_; }
    const std::string& description() const { return description_; }

    /// Throws DimensionMismatchError when the monomials do not belong to
    /// the ring this order was built for.
    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::LT;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Cmp::GT;
    }

private:
    MonomialOrder() = default;

    Kind kind_ = Kind::Lex;
    int n_ = 0, m_ = 0, q_ = 0;
    std::vector<int> priority_;                 // Lex / GrevLex
    std::vector<std::vector<long long>> rows_;  // Weight
    std::vector<int> tie_priority_;             // Weight
    std::vector<int> xy_priority_;              // MatchProduct
    bool t_lex_ = false;                        // MatchProduct
    std::string description_;
};

/// Deterministic strictly positive weight-row orders (entries in 1..100,
/// lex tie-break), reproducible from the seed.
std::vector<MonomialOrder> sampled_weight_orders(const BipartiteGraph& g,
                                                 int k,
                                                 unsigned long long seed);

/// Parses a CLI-facing order specification:
///   "lex" | "grevlex"              default priority
///   "lex:a,b,..." | "grevlex:..."  full priority by variable name
///   "match" | "match:T1,T3"        matching product (maximum matching,
///                                  or the given edges)
///   "weight:w1,...,wk"             one explicit row (k = n+m+q)
///   "weight:seed=S,k=K"            K sampled rows
/// Several specs expand to several orders.
std::vector<MonomialOrder> parse_order_spec(const BipartiteGraph& g,
                                            const std::string& spec);

}  // namespace reesgb
