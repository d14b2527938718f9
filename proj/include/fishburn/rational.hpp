#ifndef FISHBURN_RATIONAL_HPP
#define FISHBURN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "fishburn/error.hpp"

namespace fishburn {

// Exact arithmetic backends. mpq_class keeps values canonical (gcd 1,
// positive denominator) after every operation, which is exactly the
// Rational contract; integer-only pipelines ride along with denominator 1.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) raise(errc::invalid_argument, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p" or "p/q".
inline Rat rat_from_string(const std::string& text) {
    Rat q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        raise(errc::invalid_argument, "malformed rational: '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        raise(errc::invalid_argument, "rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Decimal string; integers render without the "/1".
inline std::string rat_to_string(const Rat& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_str();
}

inline Int rat_to_int(const Rat& q) {
    if (!is_integer(q)) raise(errc::internal, "expected integer value, got " + q.get_str());
    return q.get_num();
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = base;
    if (e < 0) {
        if (b == 0) raise(errc::invalid_argument, "zero to a negative power");
        b = Rat(base.get_den(), base.get_num());
        b.canonicalize();
        e = -e;
    }
    Rat r(1);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Stirling numbers of the second kind via the triangular recurrence
// S(n,k) = k*S(n-1,k) + S(n-1,k-1); S(0,0)=1.  k > n yields 0.
inline Int stirling2(int n, int k) {
    if (n < 0 || k < 0) raise(errc::invalid_argument, "stirling2 needs nonnegative arguments");
    if (k > n) return 0;
    std::vector<Int> row(static_cast<size_t>(k) + 1);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<size_t>(j)] = j * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
        row[0] = 0; // S(i,0) = 0 once i >= 1
    }
    return row[static_cast<size_t>(k)];
}

} // namespace fishburn

#endif
