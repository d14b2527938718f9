#ifndef FISHBURN_STATISTICS_HPP
#define FISHBURN_STATISTICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "fishburn/count_table.hpp"
#include "fishburn/lambda.hpp"
#include "fishburn/real.hpp"

#include <json.hpp>

namespace fishburn {

enum class RegimeTag { dimension, size, self_dual, no_ones };
RegimeTag parse_regime_tag(const std::string& name);

// Named asymptotic constants of one regime, evaluated at working
// precision (30 digits exposed).
struct ConstantSet {
    std::string regime;
    std::vector<std::pair<std::string, Real>> values;

    const Real& get(const std::string& name) const;
    std::string to_csv() const;
    nlohmann::json to_json() const;
};
ConstantSet asymptotic_constants(const LambdaSpec& spec, RegimeTag regime);

// H(1) both ways, H'(1)/H(1) and the variance combination
// (H'(1)+H''(1))/H(1) - (H'(1)/H(1))^2, by jets on the truncated sum.
struct HConstants {
    Real h1;
    Real h1_euler;      // via the Euler-identity expansion
    Real dlog;          // H'(1)/H(1)
    Real var_combo;
    Real tail_bound;    // alternating-tail truncation bound on h1
};
HConstants h_constant(const LambdaSpec& spec);

// p_h = h^2/(h-1)^2 * H(1) for Lambda = {0,...,h-1}.
struct AcceptanceValue {
    Real p;
    Real tail_bound;
};
AcceptanceValue acceptance_probability(int h);

// Exact moments of the dimension from a count table row; predictions and
// scaled residuals are attached when the spec is supplied (general regime).
struct MomentReport {
    int n = 0;
    Rat mean, variance, central3, central4;
    bool has_predictions = false;
    Real pred_mean, pred_variance, pred_central3, pred_central4;
    Real scaled_resid_mean, scaled_resid_variance, scaled_resid_central3;

    nlohmann::json to_json() const;
    static MomentReport from_json(const nlohmann::json& j);
};
MomentReport exact_moments(const CountTable& table, int n);
MomentReport exact_moments(const CountTable& table, int n, const LambdaSpec& spec);

// Sup distance between the standardized exact distribution of X_n and the
// standard normal distribution.
struct NormalityReport {
    int n = 0;
    bool degenerate = false; // variance zero
    double distance = 0.0;

    nlohmann::json to_json() const;
};
NormalityReport normality_report(const CountTable& table, int n);

struct ProofConstants {
    Real alpha_minus, alpha_plus, q;
};
ProofConstants proof_constants();
Real varphi(const Real& alpha); // 2(1-a)log a - (1-2a)log(1-2a) + 2 - 4a

// Polynomial extrapolation to x = 1/n -> 0 (Richardson/Neville).
Real richardson(const std::vector<std::pair<int, Real>>& points);

// Diagnostics helpers.
double normal_cdf(double x);                     // absolute error well under 1e-12
double chi_square_pvalue(double chi2, int df);   // regularized upper incomplete gamma

} // namespace fishburn

#endif
