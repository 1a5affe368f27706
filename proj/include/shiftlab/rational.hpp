#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftlab {

using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline BigInt floor_rat(const Rat& q) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline BigInt ceil_rat(const Rat& q) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const BigInt& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + z.get_str());
    return z.get_si();
}

inline long to_long(const Rat& q) {
    if (!is_integer(q)) throw std::domain_error("expected an integer, got " + q.get_str());
    return to_long(q.get_num());
}

// "n" for integers, "n/d" otherwise
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    r.canonicalize();
    return r;
}

inline BigInt lcm_int(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline long lcm_long(long a, long b) {
    BigInt l = lcm_int(BigInt(a), BigInt(b));
    return to_long(l);
}

}  // namespace shiftlab
