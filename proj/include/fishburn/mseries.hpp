#ifndef FISHBURN_MSERIES_HPP
#define FISHBURN_MSERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fishburn/rational.hpp"

namespace fishburn {

// Low-degree multivariate series truncated by total degree, used by the
// formal identity checks.  Exponent tuples are kept in an ordered map so
// iteration (and first-mismatch reporting) is deterministic.
class MSeries {
public:
    MSeries(std::vector<std::string> vars, int maxdeg) : vars_(std::move(vars)), maxdeg_(maxdeg) {
        if (maxdeg_ < 0) raise(errc::invalid_argument, "total degree bound must be nonnegative");
    }

    static MSeries constant(std::vector<std::string> vars, int maxdeg, const Rat& c) {
        MSeries m(std::move(vars), maxdeg);
        if (c != 0) m.c_[std::vector<int>(m.vars_.size(), 0)] = c;
        return m;
    }
    static MSeries variable(std::vector<std::string> vars, int maxdeg, int index) {
        MSeries m(std::move(vars), maxdeg);
        if (index < 0 || index >= static_cast<int>(m.vars_.size()))
            raise(errc::invalid_argument, "variable index out of range");
        std::vector<int> e(m.vars_.size(), 0);
        e[static_cast<size_t>(index)] = 1;
        if (maxdeg >= 1) m.c_[e] = 1;
        return m;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    int maxdeg() const { return maxdeg_; }
    const std::map<std::vector<int>, Rat>& terms() const { return c_; }

    Rat coeff(const std::vector<int>& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Rat(0) : it->second;
    }
    void set_coeff(const std::vector<int>& e, const Rat& value) {
        if (value == 0)
            c_.erase(e);
        else
            c_[e] = value;
    }

    int valuation() const { // minimal total degree of a nonzero term; -1 if zero
        int best = -1;
        for (const auto& [e, c] : c_) {
            int d = total(e);
            if (best < 0 || d < best) best = d;
        }
        return best;
    }
    bool is_zero() const { return c_.empty(); }

    friend MSeries operator+(const MSeries& a, const MSeries& b) {
        a.check_compatible(b);
        MSeries r = a;
        for (const auto& [e, c] : b.c_) {
            auto [it, fresh] = r.c_.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) r.c_.erase(it);
            }
        }
        return r;
    }
    friend MSeries operator-(const MSeries& a, const MSeries& b) { return a + (-b); }
    MSeries operator-() const {
        MSeries r = *this;
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }

    friend MSeries operator*(const MSeries& a, const MSeries& b) {
        a.check_compatible(b);
        MSeries r(a.vars_, std::min(a.maxdeg_, b.maxdeg_));
        std::vector<int> e(a.vars_.size());
        for (const auto& [e1, c1] : a.c_) {
            int d1 = total(e1);
            for (const auto& [e2, c2] : b.c_) {
                if (d1 + total(e2) > r.maxdeg_) continue;
                for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                auto [it, fresh] = r.c_.try_emplace(e, Rat(0));
                it->second += c1 * c2;
                if (it->second == 0) r.c_.erase(it);
                (void)fresh;
            }
        }
        return r;
    }

    // Newton doubling: x <- x(2 - a x) gains precision in total degree.
    MSeries inverse() const {
        std::vector<int> zero(vars_.size(), 0);
        Rat c0 = coeff(zero);
        if (c0 == 0) raise(errc::invalid_argument, "multivariate inverse needs a unit constant term");
        MSeries x = constant(vars_, maxdeg_, make_rat(c0.get_den(), c0.get_num()));
        MSeries two = constant(vars_, maxdeg_, Rat(2));
        for (int reach = 1; reach <= maxdeg_; reach *= 2) x = x * (two - *this * x);
        return x;
    }

    MSeries pow(long e) const {
        MSeries base = e < 0 ? inverse() : *this;
        if (e < 0) e = -e;
        MSeries r = constant(vars_, maxdeg_, Rat(1));
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const MSeries& a, const MSeries& b) {
        return a.vars_ == b.vars_ && a.c_ == b.c_;
    }

    // Lowest exponent tuple (map order) where the two differ.
    std::optional<std::vector<int>> first_mismatch(const MSeries& other) const {
        check_compatible(other);
        auto ia = c_.begin();
        auto ib = other.c_.begin();
        while (ia != c_.end() || ib != other.c_.end()) {
            if (ib == other.c_.end() || (ia != c_.end() && ia->first < ib->first)) return ia->first;
            if (ia == c_.end() || ib->first < ia->first) return ib->first;
            if (ia->second != ib->second) return ia->first;
            ++ia;
            ++ib;
        }
        return std::nullopt;
    }

private:
    static int total(const std::vector<int>& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    void check_compatible(const MSeries& other) const {
        if (vars_ != other.vars_) raise(errc::invalid_argument, "mismatched variable sets");
    }

    std::vector<std::string> vars_;
    int maxdeg_;
    std::map<std::vector<int>, Rat> c_;
};

} // namespace fishburn

#endif
