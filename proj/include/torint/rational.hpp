#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "torint/error.hpp"

namespace torint {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int rat_sign(const Rat& x) { return sgn(x); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline std::optional<long> as_long(const Rat& x) {
    if (!is_integer(x) || !x.get_num().fits_slong_p()) return std::nullopt;
    return x.get_num().get_si();
}

inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw invalid_input("0^negative");
        return Rat(0);
    }
    Rat base = e > 0 ? x : Rat(1) / x;
    unsigned long n = e > 0 ? e : -e;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), n);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline double rat_double(const Rat& x) { return x.get_d(); }

inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw invalid_input("bad rational: " + s);
    r.canonicalize();
    return r;
}

/// Splits n = r^2 * d with d square-free; returns (r, d).  n > 0.
inline std::pair<mpz_class, long> squarefree_split(mpz_class n) {
    if (n <= 0) throw invalid_input("squarefree_split needs positive input");
    mpz_class r = 1;
    long d = 1;
    for (long p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) r *= p;
        if (e % 2) d *= p;
    }
    if (n > 1) {
        if (!n.fits_slong_p()) throw invalid_input("radicand too large");
        d *= n.get_si();
    }
    return {r, d};
}

inline bool is_squarefree(long n) {
    if (n <= 0) return false;
    auto [r, d] = squarefree_split(mpz_class(n));
    return r == 1;
}

/// Exact square root of a rational if it is a perfect square.
inline std::optional<Rat> rat_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return Rat(0);
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace torint
