#ifndef FISHBURN_SERIES_HPP
#define FISHBURN_SERIES_HPP

#include <vector>

#include "fishburn/rational.hpp"

namespace fishburn {

// Truncated formal power series in z with exact rational coefficients.
// Truncation convention: arithmetic never extends the order; binary
// operations carry order = min of the operand orders.
class USeries {
public:
    explicit USeries(int order) : c_(check_order(order) + 1) {}
    USeries(int order, const Rat& c0) : USeries(order) { c_[0] = c0; }

    static USeries one(int order) { return USeries(order, Rat(1)); }
    static USeries z(int order) {
        USeries s(order);
        if (order >= 1) s.c_[1] = 1;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rat& at(int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    // Index of the first nonzero coefficient, or -1 for the zero series.
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    bool is_zero() const { return valuation() < 0; }

    USeries truncated(int new_order) const {
        if (new_order > order()) raise(errc::invalid_argument, "truncation cannot extend the order");
        USeries r(new_order);
        for (int i = 0; i <= new_order; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return r;
    }

    friend USeries operator+(const USeries& a, const USeries& b) {
        int n = std::min(a.order(), b.order());
        USeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = a[i] + b[i];
        return r;
    }
    friend USeries operator-(const USeries& a, const USeries& b) {
        int n = std::min(a.order(), b.order());
        USeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = a[i] - b[i];
        return r;
    }
    USeries operator-() const {
        USeries r(order());
        for (int i = 0; i <= order(); ++i) r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
        return r;
    }
    USeries& operator+=(const USeries& b) { return *this = *this + b; }
    USeries& operator-=(const USeries& b) { return *this = *this - b; }

    friend USeries operator*(const USeries& a, const USeries& b) {
        int n = std::min(a.order(), b.order());
        USeries r(n);
        Rat t;
        for (int i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j + i <= n; ++j) {
                if (b[j] == 0) continue;
                t = a[i] * b[j];
                r.c_[static_cast<size_t>(i + j)] += t;
            }
        }
        return r;
    }

    friend USeries operator*(const Rat& s, const USeries& a) {
        USeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) r.c_[static_cast<size_t>(i)] = s * a[i];
        return r;
    }

    // Multiplication by z^k at fixed order; top coefficients fall off.
    USeries shifted(int k) const {
        USeries r(order());
        for (int i = 0; i + k <= order(); ++i) r.c_[static_cast<size_t>(i + k)] = c_[static_cast<size_t>(i)];
        return r;
    }

    // Multiplicative inverse; requires a nonzero constant term.
    USeries inverse() const {
        if (c_[0] == 0) raise(errc::invalid_argument, "series inverse needs a nonzero constant term");
        int n = order();
        USeries r(n);
        Rat inv0 = make_rat(c_[0].get_den(), c_[0].get_num());
        r.c_[0] = inv0;
        for (int k = 1; k <= n; ++k) {
            Rat acc(0);
            for (int j = 1; j <= k; ++j)
                if (c_[static_cast<size_t>(j)] != 0) acc += c_[static_cast<size_t>(j)] * r[k - j];
            r.c_[static_cast<size_t>(k)] = -acc * inv0;
        }
        return r;
    }

    USeries pow(long e) const {
        USeries base = e < 0 ? inverse() : *this;
        if (e < 0) e = -e;
        USeries r = one(order());
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const USeries& a, const USeries& b) { return a.c_ == b.c_; }

private:
    static int check_order(int order) {
        if (order < 0) raise(errc::invalid_argument, "series order must be nonnegative");
        return order;
    }
    std::vector<Rat> c_;
};

// Exact quotient of two series whose denominator has z-valuation exactly v
// (numerator valuation must be >= v).  Returns a series of order N - v,
// N = min of the operand orders.
inline USeries series_div_exact(const USeries& num, const USeries& den, int v) {
    if (v < 0) raise(errc::invalid_argument, "valuation must be nonnegative");
    int dv = den.valuation();
    if (dv != v) raise(errc::invalid_argument, "denominator valuation mismatch");
    int nv = num.valuation();
    if (nv >= 0 && nv < v) raise(errc::invalid_argument, "numerator valuation below divisor valuation");
    int n = std::min(num.order(), den.order()) - v;
    USeries nshift(n), dshift(n);
    for (int i = 0; i <= n; ++i) {
        nshift.at(i) = num[i + v];
        dshift.at(i) = den[i + v];
    }
    return nshift * dshift.inverse();
}

} // namespace fishburn

#endif
