#include "reesgb/order.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace reesgb {

namespace {

int slot_exp(const Monomial& mon, int slot) {
    if (slot < mon.n_vars()) return mon.x_exp(slot);
    slot -= mon.n_vars();
    if (slot < mon.m_vars()) return mon.y_exp(slot);
    return mon.t_exp(slot - mon.m_vars());
}

std::string slot_name(const BipartiteGraph& g, int slot) {
    if (slot < g.n()) return g.x_labels()[slot];
    slot -= g.n();
    if (slot < g.m()) return g.y_labels()[slot];
    return "T" + std::to_string(slot - g.m() + 1);
}

std::vector<int> default_priority(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

void validate_priority(const std::vector<int>& p, int k,
                       const std::string& what) {
    if (static_cast<int>(p.size()) != k)
        throw InputError(what + ": priority must list all " +
                         std::to_string(k) + " variables");
    std::vector<char> seen(k, 0);
    for (int s : p) {
        if (s < 0 || s >= k || seen[s])
            throw InputError(what + ": priority is not a permutation");
        seen[s] = 1;
    }
}

std::string priority_description(const BipartiteGraph& g,
                                 const std::vector<int>& p) {
    std::ostringstream out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << '>';
        out << slot_name(g, p[i]);
    }
    return out.str();
}

Cmp lex_on(const Monomial& a, const Monomial& b,
           const std::vector<int>& priority) {
    for (int slot : priority) {
        int ea = slot_exp(a, slot), eb = slot_exp(b, slot);
        if (ea != eb) return ea > eb ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
}

Cmp grevlex_on(const Monomial& a, const Monomial& b,
               const std::vector<int>& priority) {
    int da = 0, db = 0;
    for (int slot : priority) {
        da += slot_exp(a, slot);
        db += slot_exp(b, slot);
    }
    if (da != db) return da > db ? Cmp::GT : Cmp::LT;
    for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
        int ea = slot_exp(a, *it), eb = slot_exp(b, *it);
        if (ea != eb) return ea < eb ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
}

}  // namespace

MonomialOrder MonomialOrder::lex(const BipartiteGraph& g,
                                 std::vector<int> priority) {
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    o.n_ = g.n();
    o.m_ = g.m();
    o.q_ = g.q();
    int k = o.n_ + o.m_ + o.q_;
    o.priority_ = priority.empty() ? default_priority(k) : std::move(priority);
    validate_priority(o.priority_, k, "lex");
    o.description_ = "lex:" + priority_description(g, o.priority_);
    return o;
}

MonomialOrder MonomialOrder::grevlex(const BipartiteGraph& g,
                                     std::vector<int> priority) {
    MonomialOrder o;
    o.kind_ = Kind::GrevLex;
    o.n_ = g.n();
    o.m_ = g.m();
    o.q_ = g.q();
    int k = o.n_ + o.m_ + o.q_;
    o.priority_ = priority.empty() ? default_priority(k) : std::move(priority);
    validate_priority(o.priority_, k, "grevlex");
    o.description_ = "grevlex:" + priority_description(g, o.priority_);
    return o;
}

MonomialOrder MonomialOrder::weight(const BipartiteGraph& g,
                                    std::vector<std::vector<long long>> rows,
                                    std::vector<int> tie_priority) {
    MonomialOrder o;
    o.kind_ = Kind::Weight;
    o.n_ = g.n();
    o.m_ = g.m();
    o.q_ = g.q();
    int k = o.n_ + o.m_ + o.q_;
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != k)
            throw InputError("weight row must have " + std::to_string(k) +
                             " entries");
    o.rows_ = std::move(rows);
    o.tie_priority_ =
        tie_priority.empty() ? default_priority(k) : std::move(tie_priority);
    validate_priority(o.tie_priority_, k, "weight tie-break");
    std::ostringstream d;
    d << "weight:[";
    for (size_t r = 0; r < o.rows_.size(); ++r) {
        if (r) d << ';';
        for (size_t c = 0; c < o.rows_[r].size(); ++c) {
            if (c) d << ',';
            d << o.rows_[r][c];
        }
    }
    d << "]";
    o.description_ = d.str();
    return o;
}

MonomialOrder MonomialOrder::match_product(const BipartiteGraph& g,
                                           const Matching& mt, bool t_lex,
                                           bool enforce_side_convention) {
    if (enforce_side_convention && g.n() > g.m())
        throw InputError("match order expects |X| <= |Y|");
    VertexRelabeling rl = renumber_for_matching(g, mt);  // validates maximality
    MonomialOrder o;
    o.kind_ = Kind::MatchProduct;
    o.n_ = g.n();
    o.m_ = g.m();
    o.q_ = g.q();
    o.t_lex_ = t_lex;
    // x of rank n first, down to rank 1, then y of rank m down to rank 1.
    o.xy_priority_.resize(g.n() + g.m());
    for (int xi = 0; xi < g.n(); ++xi)
        o.xy_priority_[g.n() - rl.x_rank[xi]] = xi;
    for (int yj = 0; yj < g.m(); ++yj)
        o.xy_priority_[g.n() + g.m() - rl.y_rank[yj]] = g.n() + yj;
    std::ostringstream d;
    d << "match:";
    for (size_t i = 0; i < mt.edge_indices.size(); ++i) {
        if (i) d << ',';
        d << 'T' << mt.edge_indices[i] + 1;
    }
    if (t_lex) d << ":tlex";
    o.description_ = d.str();
    return o;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.n_vars() != n_ || a.m_vars() != m_ || a.q_vars() != q_ ||
        !a.same_dims(b))
        throw DimensionMismatchError("monomial does not match order dimensions");
    switch (kind_) {
        case Kind::Lex:
            return lex_on(a, b, priority_);
        case Kind::GrevLex:
            return grevlex_on(a, b, priority_);
        case Kind::Weight: {
            for (const auto& row : rows_) {
                long long wa = 0, wb = 0;
                for (int s = 0; s < n_ + m_ + q_; ++s) {
                    wa += row[s] * slot_exp(a, s);
                    wb += row[s] * slot_exp(b, s);
                }
                if (wa != wb) return wa > wb ? Cmp::GT : Cmp::LT;
            }
            return lex_on(a, b, tie_priority_);
        }
        case Kind::MatchProduct: {
            Cmp xy = lex_on(a, b, xy_priority_);
            if (xy != Cmp::EQ) return xy;
            // T block: priority T_1 > ... > T_q.
            std::vector<int> tp(q_);
            for (int k = 0; k < q_; ++k) tp[k] = n_ + m_ + k;
            return t_lex_ ? lex_on(a, b, tp) : grevlex_on(a, b, tp);
        }
    }
    throw Error("unreachable");
}

std::vector<MonomialOrder> sampled_weight_orders(const BipartiteGraph& g,
                                                 int k,
                                                 unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(1, 100);
    std::vector<MonomialOrder> out;
    const int vars = g.n() + g.m() + g.q();
    for (int i = 0; i < k; ++i) {
        std::vector<long long> row(vars);
        for (auto& w : row) w = dist(rng);
        out.push_back(MonomialOrder::weight(g, {std::move(row)}));
    }
    return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int slot_by_name(const BipartiteGraph& g, const std::string& name) {
    for (int i = 0; i < g.n(); ++i)
        if (g.x_labels()[i] == name) return i;
    for (int j = 0; j < g.m(); ++j)
        if (g.y_labels()[j] == name) return g.n() + j;
    if (name.size() > 1 && name[0] == 'T') {
        int k = std::stoi(name.substr(1));
        if (k >= 1 && k <= g.q()) return g.n() + g.m() + k - 1;
    }
    throw InputError("unknown variable in order spec: " + name);
}

}  // namespace

std::vector<MonomialOrder> parse_order_spec(const BipartiteGraph& g,
                                            const std::string& spec) {
    std::string head = spec, args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        head = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    if (head == "lex" || head == "grevlex") {
        std::vector<int> priority;
        if (!args.empty())
            for (const std::string& name : split(args, ','))
                priority.push_back(slot_by_name(g, name));
        return {head == "lex" ? MonomialOrder::lex(g, std::move(priority))
                              : MonomialOrder::grevlex(g, std::move(priority))};
    }
    if (head == "match") {
        Matching mt;
        if (args.empty()) {
            mt = maximum_matching(g);
        } else {
            for (const std::string& name : split(args, ',')) {
                if (name.empty() || name[0] != 'T')
                    throw InputError("match spec expects T indices: " + spec);
                mt.edge_indices.push_back(std::stoi(name.substr(1)) - 1);
            }
            std::sort(mt.edge_indices.begin(), mt.edge_indices.end());
        }
        return {MonomialOrder::match_product(g, mt)};
    }
    if (head == "weight") {
        if (args.rfind("seed=", 0) == 0) {
            auto parts = split(args, ',');
            unsigned long long seed = 0;
            int k = 0;
            for (const std::string& p : parts) {
                if (p.rfind("seed=", 0) == 0)
                    seed = std::stoull(p.substr(5));
                else if (p.rfind("k=", 0) == 0)
                    k = std::stoi(p.substr(2));
                else
                    throw InputError("bad weight spec: " + spec);
            }
            return sampled_weight_orders(g, k, seed);
        }
        std::vector<long long> row;
        for (const std::string& p : split(args, ','))
            row.push_back(std::stoll(p));
        return {MonomialOrder::weight(g, {std::move(row)})};
    }
    throw InputError("unknown order spec: " + spec);
}

}  // namespace reesgb
