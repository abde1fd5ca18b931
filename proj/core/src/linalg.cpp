#include "reesgb/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace reesgb {

namespace {

// Bareiss elimination over T. Returns the rank, or -1 if the multiply
// callback reports overflow (only the int64 instantiation can).
template <typename T, typename MulSub>
int bareiss_rank(std::vector<std::vector<T>>& a, MulSub&& mulsub) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    T prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                if (!mulsub(a[r][c], a[rank][col], a[rank][c], a[r][col], prev))
                    return -1;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

bool mulsub_i64(long long& dst, long long p, long long b, long long c,
                long long prev) {
    long long t1, t2, num;
    if (__builtin_mul_overflow(p, dst, &t1)) return false;
    if (__builtin_mul_overflow(b, c, &t2)) return false;
    if (__builtin_sub_overflow(t1, t2, &num)) return false;
    dst = num / prev;  // divides exactly in Bareiss
    return true;
}

bool mulsub_big(BigInt& dst, const BigInt& p, const BigInt& b, const BigInt& c,
                const BigInt& prev) {
    dst = (p * dst - b * c) / prev;
    return true;
}

}  // namespace

int rank_bareiss(std::vector<std::vector<BigInt>> a) {
    return bareiss_rank(a, mulsub_big);
}

int rank_exact(const std::vector<std::vector<long long>>& a) {
    auto copy = a;
    int r = bareiss_rank(copy, mulsub_i64);
    if (r >= 0) return r;
    std::vector<std::vector<BigInt>> big(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        big[i].assign(a[i].begin(), a[i].end());
    return bareiss_rank(big, mulsub_big);
}

int rank_mod_p(std::vector<std::vector<long long>> a, long long p) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    auto normalize = [&](long long v) { return ((v % p) + p) % p; };
    auto inverse = [&](long long v) {  // p prime, v != 0 mod p
        long long result = 1, base = normalize(v), e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (normalize(a[r][col]) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        long long inv = inverse(a[rank][col]);
        for (int c = col; c < cols; ++c)
            a[rank][c] = normalize(a[rank][c]) * inv % p;
        for (int r = rank + 1; r < rows; ++r) {
            long long f = normalize(a[r][col]);
            if (f == 0) continue;
            for (int c = col; c < cols; ++c)
                a[r][c] = normalize(a[r][c] - f * a[rank][c] % p);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<BigRat>> kernel_basis(
    const std::vector<std::vector<BigRat>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    auto m = a;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        BigRat inv = m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            BigRat f = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<BigRat>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<BigRat> v(cols, BigRat(0));
        v[free_col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BigInt> primitive_integer_vector(const std::vector<BigRat>& v) {
    BigInt scale = 1;
    for (const BigRat& x : v)
        scale = boost::multiprecision::lcm(scale, denominator(x));
    std::vector<BigInt> out(v.size());
    BigInt g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = numerator(v[i]) * (scale / denominator(v[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g == 0) return out;  // zero vector: caller's problem
    bool flip = false;
    for (const BigInt& x : out)
        if (x != 0) {
            flip = x < 0;
            break;
        }
    if (flip) g = -g;
    for (BigInt& x : out) x /= g;
    return out;
}

}  // namespace reesgb
