#include "monolab/linalg.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace monolab {

using boost::multiprecision::cpp_int;

int rank_over_q(const IntMatrix& m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) throw std::invalid_argument("ragged matrix");
        for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    }
    size_t rank = 0;
    cpp_int prev = 1;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        const cpp_int piv = a[rank][col];
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * piv - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = piv;
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_mod_p(const IntMatrix& m, long long p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    auto normalize = [&](long long x) {
        x %= p;
        return x < 0 ? x + p : x;
    };
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols) throw std::invalid_argument("ragged matrix");
        for (size_t j = 0; j < cols; ++j) a[i][j] = normalize(m[i][j]);
    }
    auto inv = [&](long long x) {
        long long r = 1, b = x, e = p - 2;
        while (e) {
            if (e & 1) r = (__int128)r * b % p;
            b = (__int128)b * b % p;
            e >>= 1;
        }
        return r;
    };
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        const long long pinv = inv(a[rank][col]);
        for (size_t i = rank + 1; i < rows; ++i) {
            if (a[i][col] == 0) continue;
            long long factor = (__int128)a[i][col] * pinv % p;
            for (size_t j = col; j < cols; ++j)
                a[i][j] = normalize(a[i][j] - (__int128)factor * a[rank][j] % p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int exact_rank(const IntMatrix& m, long long characteristic) {
    return characteristic == 0 ? rank_over_q(m) : rank_mod_p(m, characteristic);
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace monolab
