#include "reesgb/circuits.hpp"

#include <algorithm>
#include <cstdint>

#include "reesgb/linalg.hpp"

namespace reesgb {

ReesMatrix rees_matrix(const BipartiteGraph& g) {
    ReesMatrix mat;
    mat.rows = g.num_vertices() + 1;
    mat.cols = g.q() + g.num_vertices();
    mat.a.assign(mat.rows, std::vector<int>(mat.cols, 0));
    for (int t = 0; t < g.q(); ++t) {
        auto [u, v] = g.endpoints(t);
        mat.a[u][t] = 1;
        mat.a[v][t] = 1;
        mat.a[g.num_vertices()][t] = 1;  // the all-ones row
    }
    for (int v = 0; v < g.num_vertices(); ++v) mat.a[v][g.q() + v] = 1;
    return mat;
}

namespace {

// Kernel of the column-restricted matrix; returns the primitive integer
// generator when the nullity is exactly 1, scattered back to full length.
bool restricted_kernel_vector(const ReesMatrix& mat,
                              const std::vector<int>& cols,
                              std::vector<int>& out) {
    std::vector<std::vector<BigRat>> sub(
        mat.rows, std::vector<BigRat>(cols.size(), BigRat(0)));
    for (int r = 0; r < mat.rows; ++r)
        for (size_t c = 0; c < cols.size(); ++c)
            sub[r][c] = mat.a[r][cols[c]];
    auto basis = kernel_basis(sub);
    if (basis.size() != 1) return false;
    auto prim = primitive_integer_vector(basis[0]);
    for (const BigInt& v : prim)
        if (v == 0) return false;  // support smaller than the subset
    out.assign(mat.cols, 0);
    for (size_t c = 0; c < cols.size(); ++c)
        out[cols[c]] = static_cast<int>(prim[c]);
    return true;
}

}  // namespace

std::vector<std::vector<int>> circuits(const BipartiteGraph& g, int cap_cols) {
    ReesMatrix mat = rees_matrix(g);
    if (mat.cols > cap_cols)
        throw SizeLimitError("circuit enumeration capped at " +
                             std::to_string(cap_cols) + " columns (matrix has " +
                             std::to_string(mat.cols) + ")");

    // A support of nullity one has size rank+1, so larger subsets never
    // carry a circuit.
    std::vector<std::vector<long long>> full(mat.rows,
                                             std::vector<long long>(mat.cols));
    for (int r = 0; r < mat.rows; ++r)
        for (int c = 0; c < mat.cols; ++c) full[r][c] = mat.a[r][c];
    const int max_size = std::min(mat.cols, rank_exact(full) + 1);

    std::vector<std::vector<int>> found;
    std::vector<uint64_t> supports;
    std::vector<int> subset;
    auto support_contains_found = [&](uint64_t mask) {
        for (uint64_t s : supports)
            if ((s & mask) == s) return true;
        return false;
    };
    auto visit = [&](auto&& self, int next, uint64_t mask) -> void {
        if (!subset.empty()) {
            if (support_contains_found(mask)) return;
            std::vector<int> vec;
            if (restricted_kernel_vector(mat, subset, vec)) {
                found.push_back(std::move(vec));
                supports.push_back(mask);
                return;  // supersets cannot be support-minimal
            }
        }
        if (static_cast<int>(subset.size()) == max_size) return;
        for (int c = next; c < mat.cols; ++c) {
            subset.push_back(c);
            self(self, c + 1, mask | (uint64_t{1} << c));
            subset.pop_back();
        }
    };
    visit(visit, 0, 0);
    std::sort(found.begin(), found.end());
    return found;
}

Binomial circuit_binomial(const std::vector<int>& circuit,
                          const BipartiteGraph& g) {
    if (static_cast<int>(circuit.size()) != g.q() + g.num_vertices())
        throw MalformedCircuitError("circuit vector has wrong length");
    Monomial plus = Monomial::one(g), minus = Monomial::one(g);
    bool nonzero = false;
    for (int c = 0; c < static_cast<int>(circuit.size()); ++c) {
        int v = circuit[c];
        if (v == 0) continue;
        nonzero = true;
        Monomial& dst = v > 0 ? plus : minus;
        int e = v > 0 ? v : -v;
        if (c < g.q())
            dst.t_exp(c) += e;
        else if (c - g.q() < g.n())
            dst.x_exp(c - g.q()) += e;
        else
            dst.y_exp(c - g.q() - g.n()) += e;
    }
    if (!nonzero) throw MalformedCircuitError("zero circuit vector");
    return Binomial(std::move(plus), std::move(minus));
}

std::vector<Binomial> circuit_binomials(
    const std::vector<std::vector<int>>& circuits, const BipartiteGraph& g) {
    std::vector<Binomial> out;
    out.reserve(circuits.size());
    for (const auto& c : circuits) out.push_back(circuit_binomial(c, g));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace reesgb
