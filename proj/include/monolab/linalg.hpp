#pragma once

#include <vector>

namespace monolab {

/// Dense integer matrix, row major.
using IntMatrix = std::vector<std::vector<long long>>;

/// Exact rank over Q, via fraction-free (Bareiss) elimination on
/// arbitrary-precision integers.
int rank_over_q(const IntMatrix& m);

/// Rank over the prime field F_p.
int rank_mod_p(const IntMatrix& m, long long p);

/// Rank over Q when characteristic == 0, else over F_characteristic.
int exact_rank(const IntMatrix& m, long long characteristic);

bool is_prime(long long p);

}  // namespace monolab
