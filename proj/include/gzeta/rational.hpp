#pragma once

#include <gmpxx.h>

#include <string>

namespace gzeta {

// Exact rational scalar. All coefficient arithmetic in the library is exact;
// there is no floating point anywhere.
using Rat = mpq_class;

inline Rat frac(long long num, long long den = 1) {
    Rat q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

} // namespace gzeta
