#ifndef FISHBURN_REAL_HPP
#define FISHBURN_REAL_HPP

#include <mpfr.h>

#include <string>

#include "fishburn/rational.hpp"

namespace fishburn {

// Arbitrary-precision float (MPFR, 256-bit mantissa by default: ~77
// decimal digits, comfortably above the 30 exposed digits plus the
// 25-digit identity checks).
class Real {
public:
    static constexpr mpfr_prec_t kPrec = 256;

    Real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
    explicit Real(const Int& x) : Real() { mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
    explicit Real(const Rat& x) : Real() { mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
    Real(const Real& o) : Real() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, kPrec); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real pi() { Real r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real log2() { Real r; mpfr_const_log2(r.v_, MPFR_RNDN); return r; }
    static Real e() { return Real(1L).exp(); }

    friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

    Real sqrt() const { Real r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    Real exp() const { Real r; mpfr_exp(r.v_, v_, MPFR_RNDN); return r; }
    Real log() const { Real r; mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
    Real abs() const { Real r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    Real pow_int(long e) const { Real r; mpfr_pow_si(r.v_, v_, e, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    // Decimal rendering with the requested number of significant digits.
    std::string str(int digits = 30) const {
        char* s = nullptr;
        if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) raise(errc::internal, "mpfr_asprintf failed");
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

inline Real abs(const Real& x) { return x.abs(); }

// Order-2 jet (value, first and second derivative) for exact term-by-term
// differentiation of closed forms at a point.
struct Jet2 {
    Real f, d1, d2;

    static Jet2 constant(const Real& c) { return {c, Real(0L), Real(0L)}; }
    static Jet2 variable(const Real& x) { return {x, Real(1L), Real(0L)}; }

    friend Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2}; }
    friend Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2}; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        return {a.f * b.f, a.d1 * b.f + a.f * b.d1, a.d2 * b.f + Real(2L) * a.d1 * b.d1 + a.f * b.d2};
    }
    Jet2 reciprocal() const {
        Real inv = Real(1L) / f;
        Real inv2 = inv * inv;
        return {inv, -d1 * inv2, (Real(2L) * d1 * d1 / f - d2) * inv2};
    }
    friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * b.reciprocal(); }
    Jet2 pow_int(long e) const {
        Jet2 base = e < 0 ? reciprocal() : *this;
        if (e < 0) e = -e;
        Jet2 r = constant(Real(1L));
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }
};

} // namespace fishburn

#endif
