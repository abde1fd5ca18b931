#pragma once

#include <vector>

#include "reesgb/graph.hpp"
#include "reesgb/monomial.hpp"

namespace reesgb {

/// Presentation matrix of the Rees algebra: one row per vertex plus a
/// final all-ones row over the edge columns; the q edge incidence columns
/// come first, then the N unit columns (one per vertex variable). Every
/// entry is 0 or 1 and each edge column holds exactly three ones.
struct ReesMatrix {
    int rows = 0;  // N + 1
    int cols = 0;  // q + N
    std::vector<std::vector<int>> a;
};

ReesMatrix rees_matrix(const BipartiteGraph& g);

/// Integer kernel vectors of the presentation matrix with support-minimal
/// support and coprime entries, one per support, canonically signed
/// (first nonzero entry positive). Coordinates follow the column order:
/// T_1..T_q, then x_1..x_n, y_1..y_m.
///
/// Exhaustive over column subsets; throws SizeLimitError when the matrix
/// has more than `cap_cols` columns.
std::vector<std::vector<int>> circuits(const BipartiteGraph& g,
                                       int cap_cols = 18);

/// Binomial of a circuit: positive part versus negative part, mapped to
/// monomial exponents and canonically signed. Throws
/// MalformedCircuitError on the zero vector or wrong length.
Binomial circuit_binomial(const std::vector<int>& circuit,
                          const BipartiteGraph& g);

std::vector<Binomial> circuit_binomials(
    const std::vector<std::vector<int>>& circuits, const BipartiteGraph& g);

}  // namespace reesgb
