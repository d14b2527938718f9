#ifndef FISHBURN_BSERIES_HPP
#define FISHBURN_BSERIES_HPP

#include <vector>

#include "fishburn/series.hpp"

namespace fishburn {

// Dense polynomial in the dimension-marking variable v.  The zero
// polynomial is the empty coefficient vector; otherwise trailing zeros are
// trimmed so degree() is meaningful.
class VPoly {
public:
    VPoly() = default;
    explicit VPoly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    static VPoly v(int power = 1, const Rat& scale = Rat(1)) {
        VPoly p;
        if (scale != 0) {
            p.c_.assign(static_cast<size_t>(power) + 1, Rat(0));
            p.c_.back() = scale;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    friend VPoly operator+(const VPoly& a, const VPoly& b) {
        VPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend VPoly operator-(const VPoly& a, const VPoly& b) {
        VPoly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        r.trim();
        return r;
    }
    VPoly operator-() const {
        VPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend VPoly operator*(const VPoly& a, const VPoly& b) {
        if (a.is_zero() || b.is_zero()) return VPoly();
        VPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    VPoly& operator+=(const VPoly& b) { return *this = *this + b; }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    // p(a + b*v), Horner in the affine argument.
    VPoly compose_affine(const Rat& a, const Rat& b) const {
        VPoly arg;
        arg.c_ = {a, b};
        arg.trim();
        VPoly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * arg + VPoly(c_[i]);
        return r;
    }

    friend bool operator==(const VPoly& a, const VPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Bivariate truncated series: coefficient of z^n is a dense polynomial in v.
class BSeries {
public:
    explicit BSeries(int zorder) : c_(static_cast<size_t>(check(zorder)) + 1) {}
    BSeries(int zorder, const Rat& c0) : BSeries(zorder) { c_[0] = VPoly(c0); }

    static BSeries one(int zorder) { return BSeries(zorder, Rat(1)); }
    static BSeries from_useries(const USeries& u) {
        BSeries r(u.order());
        for (int i = 0; i <= u.order(); ++i) r.c_[static_cast<size_t>(i)] = VPoly(u[i]);
        return r;
    }

    int zorder() const { return static_cast<int>(c_.size()) - 1; }
    const VPoly& coeff(int n) const { return c_[static_cast<size_t>(n)]; }
    VPoly& at(int n) { return c_[static_cast<size_t>(n)]; }

    friend BSeries operator+(const BSeries& a, const BSeries& b) {
        int n = std::min(a.zorder(), b.zorder());
        BSeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
        return r;
    }
    friend BSeries operator-(const BSeries& a, const BSeries& b) {
        int n = std::min(a.zorder(), b.zorder());
        BSeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[static_cast<size_t>(i)] = a.coeff(i) - b.coeff(i);
        return r;
    }
    friend BSeries operator*(const BSeries& a, const BSeries& b) {
        int n = std::min(a.zorder(), b.zorder());
        BSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int j = 0; j + i <= n; ++j) {
                if (b.coeff(j).is_zero()) continue;
                r.c_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
            }
        }
        return r;
    }
    BSeries& operator+=(const BSeries& b) { return *this = *this + b; }

    // Multiply by v^power.
    BSeries times_v(int power = 1) const {
        BSeries r(zorder());
        for (int i = 0; i <= zorder(); ++i)
            r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * VPoly::v(power);
        return r;
    }

    // Inverse; the z^0 coefficient must be a nonzero constant polynomial.
    BSeries inverse() const {
        const VPoly& c0 = c_[0];
        if (c0.is_zero() || c0.degree() != 0)
            raise(errc::invalid_argument, "bivariate inverse needs a unit constant z^0 coefficient");
        Rat inv0 = make_rat(c0.coeff(0).get_den(), c0.coeff(0).get_num());
        int n = zorder();
        BSeries r(n);
        r.c_[0] = VPoly(inv0);
        for (int k = 1; k <= n; ++k) {
            VPoly acc;
            for (int j = 1; j <= k; ++j)
                if (!c_[static_cast<size_t>(j)].is_zero())
                    acc += c_[static_cast<size_t>(j)] * r.coeff(k - j);
            r.c_[static_cast<size_t>(k)] = (-acc) * VPoly(inv0);
        }
        return r;
    }

    // Sum_k k^power [v^k], as a univariate series ([z^n] evaluated at v=1
    // when power = 0).
    USeries moment(int power) const {
        USeries r(zorder());
        for (int n = 0; n <= zorder(); ++n) {
            Rat acc(0);
            const VPoly& p = c_[static_cast<size_t>(n)];
            for (int k = 0; k <= p.degree(); ++k) {
                if (p.coeff(k) == 0) continue;
                Rat w(1);
                for (int t = 0; t < power; ++t) w *= k;
                acc += w * p.coeff(k);
            }
            r.at(n) = acc;
        }
        return r;
    }

    friend bool operator==(const BSeries& a, const BSeries& b) { return a.c_ == b.c_; }

private:
    static int check(int zorder) {
        if (zorder < 0) raise(errc::invalid_argument, "series order must be nonnegative");
        return zorder;
    }
    std::vector<VPoly> c_;
};

} // namespace fishburn

#endif
