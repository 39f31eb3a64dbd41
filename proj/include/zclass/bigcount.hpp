// Exact arbitrary-precision counts. Everything that counts partitions or
// group elements goes through BigCount; no floating point on counting paths.
#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace zclass {

using BigCount = mpz_class;

inline bool is_perfect_square(const BigCount& v) {
    if (v < 0) return false;
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

inline bool is_perfect_square(std::uint64_t v) {
    return is_perfect_square(BigCount(static_cast<unsigned long>(v)));
}

inline BigCount factorial(unsigned n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigCount pow_big(std::uint64_t base, unsigned exp) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }

}  // namespace zclass
