#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reesgb/graph.hpp"

namespace reesgb {

enum class Cmp { LT, EQ, GT };

/// Monomial of S = k[x_1..x_n, y_1..y_m, T_1..T_q], as one exponent
/// vector per block. Bidegree: vertex variables weigh (1,0), edge
/// variables (0,1).
class Monomial {
public:
    Monomial(int n, int m, int q)
        : xs_(n, 0), ys_(m, 0), ts_(q, 0) {}
    static Monomial one(const BipartiteGraph& g) {
        return Monomial(g.n(), g.m(), g.q());
    }

    const std::vector<int>& xs() const { return xs_; }
    const std::vector<int>& ys() const { return ys_; }
    const std::vector<int>& ts() const { return ts_; }
    int& x_exp(int i) { return xs_[i]; }
    int& y_exp(int j) { return ys_[j]; }
    int& t_exp(int k) { return ts_[k]; }
    int x_exp(int i) const { return xs_[i]; }
    int y_exp(int j) const { return ys_[j]; }
    int t_exp(int k) const { return ts_[k]; }

    int n_vars() const { return static_cast<int>(xs_.size()); }
    int m_vars() const { return static_cast<int>(ys_.size()); }
    int q_vars() const { return static_cast<int>(ts_.size()); }

    int x_degree() const;
    int y_degree() const;
    int xy_degree() const { return x_degree() + y_degree(); }
    int t_degree() const;
    int total_degree() const { return xy_degree() + t_degree(); }
    std::pair<int, int> bidegree() const { return {xy_degree(), t_degree()}; }

    bool is_one() const { return total_degree() == 0; }
    bool is_squarefree() const;
    bool same_dims(const Monomial& o) const;

    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    /// Exact quotient; caller guarantees divisibility.
    Monomial divided_by(const Monomial& o) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Arbitrary strict total order for use as a container key.
    friend bool operator<(const Monomial& a, const Monomial& b);

    /// Rendering like "x3*T2" using the graph's vertex labels (edge
    /// variables print as T<k>, 1-based); the unit renders as "1".
    std::string str(const BipartiteGraph& g) const;

private:
    std::vector<int> xs_, ys_, ts_;
};

/// Reference comparison used for canonical signs everywhere: total degree
/// first, ties broken lexicographically with
/// x_1 < ... < x_n < y_1 < ... < y_m < T_1 < ... < T_q.
Cmp reference_compare(const Monomial& a, const Monomial& b);

/// Pure difference of two distinct monomials, canonically signed: the
/// `plus` term is the larger one under `reference_compare`.
class Binomial {
public:
    /// Canonicalizes the sign; nullopt when a == b (the zero binomial).
    static std::optional<Binomial> make(Monomial a, Monomial b);
    /// As `make`, but throws MalformedWalkError when a == b.
    Binomial(Monomial a, Monomial b);

    const Monomial& plus() const { return plus_; }
    const Monomial& minus() const { return minus_; }
    bool terms_coprime() const;
    bool is_squarefree() const {
        return plus_.is_squarefree() && minus_.is_squarefree();
    }

    friend bool operator==(const Binomial&, const Binomial&) = default;
    friend bool operator<(const Binomial& a, const Binomial& b);

    std::string str(const BipartiteGraph& g) const;

private:
    Monomial plus_, minus_;
};

/// Image of a monomial under the presentation map of the Rees algebra:
/// each T_k maps to (edge monomial) * t. `w` is the exponent vector over
/// the vertex variables (X block then Y block), `t` the t-power.
struct PsiImage {
    std::vector<int> w;
    int t = 0;
    friend bool operator==(const PsiImage&, const PsiImage&) = default;
};

PsiImage psi(const Monomial& mon, const BipartiteGraph& g);

/// True iff both terms have the same psi image, i.e. the binomial lies in
/// the defining ideal of the Rees algebra.
bool is_in_rees_ideal(const Binomial& b, const BipartiteGraph& g);

/// Parses "x1*y1*T2^2" style strings (tokens separated by '*'; vertex
/// labels resolved against the graph first, then T<k>). Test/CLI helper.
Monomial parse_monomial(const BipartiteGraph& g, const std::string& text);
/// Parses "a - b" with both sides monomials.
Binomial parse_binomial(const BipartiteGraph& g, const std::string& text);

}  // namespace reesgb
