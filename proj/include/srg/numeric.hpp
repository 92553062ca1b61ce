// Arbitrary-precision integer/rational scalars (GMP) and small exact helpers.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace srg {

using Int = mpz_class;
using Rat = mpq_class;

// Invalid argument for a domain operation (bad sizes, out-of-range parameters, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int to_int(const Rat& x) {
    if (!is_integer(x)) throw DomainError("expected an integer, got " + x.get_str());
    return Int(x.get_num());
}

// num/den in canonical form (lowest terms, positive denominator).
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// d | x, with 0 | x only for x = 0.
inline bool divides(const Int& d, const Int& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int floor_sqrt(const Int& x) {
    if (x < 0) throw DomainError("floor_sqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int ceil_sqrt(const Int& x) {
    Int r = floor_sqrt(x);
    if (r * r < x) r += 1;
    return r;
}

inline bool is_perfect_square(const Int& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw DomainError("value out of machine range: " + x.get_str());
    return x.get_si();
}

// "5" for integers, "5/3" otherwise.
inline std::string rat_to_string(const Rat& x) {
    return x.get_str();
}

}  // namespace srg
