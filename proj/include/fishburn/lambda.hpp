#ifndef FISHBURN_LAMBDA_HPP
#define FISHBURN_LAMBDA_HPP

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fishburn/series.hpp"

namespace fishburn {

enum class LambdaKind { polynomial, geometric, exponential, custom };

// Which theorem families apply to a spec.  A spec can sit in several
// regimes at once (primitive is both general and size-dual).
struct Regime {
    bool general = false;   // lambda_1 > 0
    bool no_ones = false;   // lambda_1 = 0, lambda_2 > 0
    bool size_dual = false; // polynomial with all listed coefficients > 0

    std::string tag() const {
        std::string t = general ? "general" : "no-ones";
        if (size_dual) t += "+size-dual";
        return t;
    }
};

// The entry-set generating function Lambda(z) = 1 + lambda_1 z + ... .
class LambdaSpec {
public:
    static LambdaSpec primitive() { return poly({Rat(1)}); }
    static LambdaSpec nat() {
        LambdaSpec s;
        s.kind_ = LambdaKind::geometric;
        s.finish();
        return s;
    }
    static LambdaSpec exponential() {
        LambdaSpec s;
        s.kind_ = LambdaKind::exponential;
        s.finish();
        return s;
    }
    static LambdaSpec poly(std::vector<Rat> coeffs) {
        LambdaSpec s;
        s.kind_ = LambdaKind::polynomial;
        s.poly_ = std::move(coeffs);
        while (!s.poly_.empty() && s.poly_.back() == 0) s.poly_.pop_back();
        s.finish();
        return s;
    }
    static LambdaSpec custom(std::function<Rat(int)> rule) {
        LambdaSpec s;
        s.kind_ = LambdaKind::custom;
        s.rule_ = std::move(rule);
        s.finish();
        return s;
    }

    // Grammar: "primitive" | "nat" | "exp" | "poly:<l1>,<l2>,..."
    // with coefficients written as "p" or "p/q".
    static LambdaSpec parse(const std::string& text) {
        if (text == "primitive") return primitive();
        if (text == "nat") return nat();
        if (text == "exp") return exponential();
        const std::string prefix = "poly:";
        if (text.rfind(prefix, 0) == 0) {
            std::vector<Rat> cs;
            std::stringstream ss(text.substr(prefix.size()));
            std::string item;
            while (std::getline(ss, item, ',')) cs.push_back(rat_from_string(item));
            if (cs.empty()) raise(errc::invalid_argument, "poly: needs at least one coefficient");
            return poly(std::move(cs));
        }
        raise(errc::invalid_argument, "unrecognized lambda spec '" + text +
                                          "' (expected primitive | nat | exp | poly:<l1>,<l2>,...)");
    }

    LambdaKind kind() const { return kind_; }

    // lambda_j with lambda_0 = 1.
    Rat lambda(int j) const {
        if (j < 0) raise(errc::invalid_argument, "lambda index must be nonnegative");
        if (j == 0) return Rat(1);
        switch (kind_) {
        case LambdaKind::polynomial:
            return j <= static_cast<int>(poly_.size()) ? poly_[static_cast<size_t>(j) - 1] : Rat(0);
        case LambdaKind::geometric:
            return Rat(1);
        case LambdaKind::exponential: {
            Int f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j));
            return make_rat(1, f);
        }
        case LambdaKind::custom:
            return checked(rule_(j), j);
        }
        raise(errc::internal, "unreachable lambda kind");
    }

    USeries expand(int N) const {
        USeries s(N, Rat(1));
        for (int j = 1; j <= N; ++j) s.at(j) = lambda(j);
        return s;
    }

    // Lambda(z^2) truncated at order N, by index doubling.
    USeries expand_z2(int N) const {
        USeries s(N, Rat(1));
        for (int j = 1; 2 * j <= N; ++j) s.at(2 * j) = lambda(j);
        return s;
    }

    // Smallest j >= 1 with lambda_j > 0.
    int first_nonzero() const { return first_nonzero_; }

    Regime classify() const {
        Regime r;
        if (lambda(1) > 0)
            r.general = true;
        else if (lambda(2) > 0)
            r.no_ones = true;
        else
            raise(errc::unsupported_regime,
                  "degenerate spec (lambda_1 = lambda_2 = 0): no theorem regime applies");
        if (kind_ == LambdaKind::polynomial) {
            bool all_positive = true;
            for (const Rat& c : poly_)
                if (c <= 0) all_positive = false;
            r.size_dual = all_positive && !poly_.empty();
        }
        return r;
    }

    bool is_polynomial() const { return kind_ == LambdaKind::polynomial; }
    int poly_degree() const { return static_cast<int>(poly_.size()); }

    // Lambda(1), Lambda'(1), Lambda''(1); polynomial specs only.
    Rat value_at_one(int derivative = 0) const {
        if (kind_ != LambdaKind::polynomial)
            raise(errc::unsupported_regime, "Lambda(1) evaluation needs a polynomial spec");
        Rat acc(derivative == 0 ? 1 : 0); // lambda_0 contributes only to Lambda(1)
        for (int j = 1; j <= static_cast<int>(poly_.size()); ++j) {
            Rat w(1);
            for (int t = 0; t < derivative; ++t) w *= (j - t);
            acc += w * poly_[static_cast<size_t>(j) - 1];
        }
        return acc;
    }

    // True when every coefficient is an integer (drives the integer-only
    // counting pipelines).
    bool integer_coefficients() const {
        switch (kind_) {
        case LambdaKind::polynomial:
            for (const Rat& c : poly_)
                if (!is_integer(c)) return false;
            return true;
        case LambdaKind::geometric:
            return true;
        default:
            return false;
        }
    }

    std::string canonical() const {
        switch (kind_) {
        case LambdaKind::geometric:
            return "nat";
        case LambdaKind::exponential:
            return "exp";
        case LambdaKind::custom:
            return "custom";
        case LambdaKind::polynomial: {
            std::string s = "poly:";
            for (size_t i = 0; i < poly_.size(); ++i) {
                if (i) s += ',';
                s += poly_[i].get_str();
            }
            return s;
        }
        }
        raise(errc::internal, "unreachable lambda kind");
    }

private:
    LambdaSpec() = default;

    static Rat checked(const Rat& c, int j) {
        if (c < 0)
            raise(errc::invalid_argument, "negative lambda_" + std::to_string(j) + " not allowed");
        return c;
    }

    void finish() {
        if (kind_ == LambdaKind::polynomial) {
            if (poly_.empty())
                raise(errc::invalid_argument, "all-zero lambda coefficients not allowed");
            for (const Rat& c : poly_) checked(c, 1);
        }
        first_nonzero_ = 0;
        for (int j = 1; j <= 64; ++j) {
            if (lambda(j) > 0) {
                first_nonzero_ = j;
                break;
            }
        }
        if (first_nonzero_ == 0)
            raise(errc::invalid_argument, "no positive lambda coefficient found (first 64 checked)");
    }

    LambdaKind kind_ = LambdaKind::polynomial;
    std::vector<Rat> poly_; // lambda_1..lambda_L
    std::function<Rat(int)> rule_;
    int first_nonzero_ = 1;
};

} // namespace fishburn

#endif
