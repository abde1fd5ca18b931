#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace reesgb {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Exact; arbitrary-precision intermediates.
int rank_bareiss(std::vector<std::vector<BigInt>> a);

/// Exact rank of a small-entry integer matrix. Runs a checked int64
/// Bareiss first and falls back to arbitrary precision on overflow.
int rank_exact(const std::vector<std::vector<long long>>& a);

/// Rank over Z/p for a prime p < 2^31. Never exceeds the rational rank;
/// equality can fail only for primes dividing an elementary divisor.
int rank_mod_p(std::vector<std::vector<long long>> a, long long p);

/// Basis of the right nullspace over the rationals (Gauss-Jordan).
/// Rows of the result are kernel vectors of length = #columns of `a`.
std::vector<std::vector<BigRat>> kernel_basis(
    const std::vector<std::vector<BigRat>>& a);

/// Scales a rational vector to a primitive integer vector (coprime
/// entries, first nonzero entry positive). The input must be nonzero.
std::vector<BigInt> primitive_integer_vector(const std::vector<BigRat>& v);

}  // namespace reesgb
