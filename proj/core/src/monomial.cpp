#include "reesgb/monomial.hpp"

#include <numeric>
#include <sstream>

namespace reesgb {

namespace {

int sum(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

}  // namespace

int Monomial::x_degree() const { return sum(xs_); }
int Monomial::y_degree() const { return sum(ys_); }
int Monomial::t_degree() const { return sum(ts_); }

bool Monomial::is_squarefree() const {
    auto sf = [](const std::vector<int>& v) {
        for (int e : v)
            if (e > 1) return false;
        return true;
    };
    return sf(xs_) && sf(ys_) && sf(ts_);
}

bool Monomial::same_dims(const Monomial& o) const {
    return xs_.size() == o.xs_.size() && ys_.size() == o.ys_.size() &&
           ts_.size() == o.ts_.size();
}

bool Monomial::divides(const Monomial& o) const {
    auto le = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    return le(xs_, o.xs_) && le(ys_, o.ys_) && le(ts_, o.ts_);
}

namespace {

std::vector<int> zip(const std::vector<int>& a, const std::vector<int>& b,
                     int (*f)(int, int)) {
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = f(a[i], b[i]);
    return out;
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < xs_.size(); ++i) r.xs_[i] += o.xs_[i];
    for (size_t i = 0; i < ys_.size(); ++i) r.ys_[i] += o.ys_[i];
    for (size_t i = 0; i < ts_.size(); ++i) r.ts_[i] += o.ts_[i];
    return r;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < xs_.size(); ++i) r.xs_[i] -= o.xs_[i];
    for (size_t i = 0; i < ys_.size(); ++i) r.ys_[i] -= o.ys_[i];
    for (size_t i = 0; i < ts_.size(); ++i) r.ts_[i] -= o.ts_[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.xs_ = zip(a.xs_, b.xs_, [](int u, int v) { return u > v ? u : v; });
    r.ys_ = zip(a.ys_, b.ys_, [](int u, int v) { return u > v ? u : v; });
    r.ts_ = zip(a.ts_, b.ts_, [](int u, int v) { return u > v ? u : v; });
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.xs_ = zip(a.xs_, b.xs_, [](int u, int v) { return u < v ? u : v; });
    r.ys_ = zip(a.ys_, b.ys_, [](int u, int v) { return u < v ? u : v; });
    r.ts_ = zip(a.ts_, b.ts_, [](int u, int v) { return u < v ? u : v; });
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.xs_ != b.xs_) return a.xs_ < b.xs_;
    if (a.ys_ != b.ys_) return a.ys_ < b.ys_;
    return a.ts_ < b.ts_;
}

std::string Monomial::str(const BipartiteGraph& g) const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (!first) out << '*';
        first = false;
        out << name;
        if (e > 1) out << '^' << e;
    };
    for (int i = 0; i < n_vars(); ++i) emit(g.x_labels()[i], xs_[i]);
    for (int j = 0; j < m_vars(); ++j) emit(g.y_labels()[j], ys_[j]);
    for (int k = 0; k < q_vars(); ++k) emit("T" + std::to_string(k + 1), ts_[k]);
    if (first) out << '1';
    return out.str();
}

Cmp reference_compare(const Monomial& a, const Monomial& b) {
    if (!a.same_dims(b))
        throw DimensionMismatchError("monomials from different rings");
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? Cmp::LT : Cmp::GT;
    // Lex with T_q largest, scanning downwards to x_1.
    for (int k = a.q_vars() - 1; k >= 0; --k)
        if (a.t_exp(k) != b.t_exp(k))
            return a.t_exp(k) < b.t_exp(k) ? Cmp::LT : Cmp::GT;
    for (int j = a.m_vars() - 1; j >= 0; --j)
        if (a.y_exp(j) != b.y_exp(j))
            return a.y_exp(j) < b.y_exp(j) ? Cmp::LT : Cmp::GT;
    for (int i = a.n_vars() - 1; i >= 0; --i)
        if (a.x_exp(i) != b.x_exp(i))
            return a.x_exp(i) < b.x_exp(i) ? Cmp::LT : Cmp::GT;
    return Cmp::EQ;
}

std::optional<Binomial> Binomial::make(Monomial a, Monomial b) {
    if (reference_compare(a, b) == Cmp::EQ) return std::nullopt;
    return Binomial(std::move(a), std::move(b));
}

Binomial::Binomial(Monomial a, Monomial b)
    : plus_(std::move(a)), minus_(std::move(b)) {
    Cmp c = reference_compare(plus_, minus_);
    if (c == Cmp::EQ) throw MalformedWalkError("zero binomial");
    if (c == Cmp::LT) std::swap(plus_, minus_);
}

bool Binomial::terms_coprime() const {
    return gcd(plus_, minus_).is_one();
}

bool operator<(const Binomial& a, const Binomial& b) {
    if (!(a.plus_ == b.plus_)) return a.plus_ < b.plus_;
    return a.minus_ < b.minus_;
}

std::string Binomial::str(const BipartiteGraph& g) const {
    return plus_.str(g) + " - " + minus_.str(g);
}

PsiImage psi(const Monomial& mon, const BipartiteGraph& g) {
    PsiImage im;
    im.w.assign(g.num_vertices(), 0);
    for (int i = 0; i < g.n(); ++i) im.w[g.x_vertex(i)] = mon.x_exp(i);
    for (int j = 0; j < g.m(); ++j) im.w[g.y_vertex(j)] = mon.y_exp(j);
    for (int k = 0; k < g.q(); ++k) {
        int e = mon.t_exp(k);
        if (e == 0) continue;
        im.w[g.x_vertex(g.edge(k).x)] += e;
        im.w[g.y_vertex(g.edge(k).y)] += e;
        im.t += e;
    }
    return im;
}

bool is_in_rees_ideal(const Binomial& b, const BipartiteGraph& g) {
    return psi(b.plus(), g) == psi(b.minus(), g);
}

namespace {

void apply_factor(Monomial& mon, const BipartiteGraph& g,
                  const std::string& token) {
    std::string name = token;
    int exp = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
        name = token.substr(0, caret);
        exp = std::stoi(token.substr(caret + 1));
    }
    if (name == "1") return;
    for (int i = 0; i < g.n(); ++i)
        if (g.x_labels()[i] == name) {
            mon.x_exp(i) += exp;
            return;
        }
    for (int j = 0; j < g.m(); ++j)
        if (g.y_labels()[j] == name) {
            mon.y_exp(j) += exp;
            return;
        }
    if (name.size() > 1 && name[0] == 'T') {
        int k = std::stoi(name.substr(1));
        if (k >= 1 && k <= g.q()) {
            mon.t_exp(k - 1) += exp;
            return;
        }
    }
    throw InputError("unknown variable: " + name);
}

}  // namespace

Monomial parse_monomial(const BipartiteGraph& g, const std::string& text) {
    Monomial mon = Monomial::one(g);
    std::string token;
    for (char ch : text + "*") {
        if (ch == '*') {
            if (!token.empty()) apply_factor(mon, g, token);
            token.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            token += ch;
        }
    }
    return mon;
}

Binomial parse_binomial(const BipartiteGraph& g, const std::string& text) {
    auto dash = text.find(" - ");
    if (dash == std::string::npos)
        throw InputError("expected \"<monomial> - <monomial>\": " + text);
    return Binomial(parse_monomial(g, text.substr(0, dash)),
                    parse_monomial(g, text.substr(dash + 3)));
}

}  // namespace reesgb
