#include "fishburn/statistics.hpp"

#include <cmath>

namespace fishburn {

RegimeTag parse_regime_tag(const std::string& name) {
    if (name == "dimension" || name == "general") return RegimeTag::dimension;
    if (name == "size" || name == "size-dual") return RegimeTag::size;
    if (name == "self-dual") return RegimeTag::self_dual;
    if (name == "no-ones") return RegimeTag::no_ones;
    raise(errc::invalid_argument, "unknown regime '" + name + "'");
}

const Real& ConstantSet::get(const std::string& name) const {
    for (const auto& [k, v] : values)
        if (k == name) return v;
    raise(errc::invalid_argument, "no constant named '" + name + "' in regime " + regime);
}

std::string ConstantSet::to_csv() const {
    std::string out = "name,value\n";
    for (const auto& [k, v] : values) out += k + "," + v.str(30) + "\n";
    return out;
}

nlohmann::json ConstantSet::to_json() const {
    nlohmann::json vals = nlohmann::json::object();
    for (const auto& [k, v] : values) vals[k] = v.str(30);
    return {{"regime", regime}, {"values", vals}};
}

namespace {

Real lam_real(const LambdaSpec& spec, int j) { return Real(spec.lambda(j)); }

void require_general(const LambdaSpec& spec, const char* what) {
    if (!spec.classify().general)
        raise(errc::unsupported_regime, std::string(what) + " needs the general regime (lambda_1 > 0)");
}

} // namespace

ConstantSet asymptotic_constants(const LambdaSpec& spec, RegimeTag regime) {
    ConstantSet out;
    Real pi = Real::pi();
    Real pi2 = pi * pi;
    Real log2 = Real::log2();
    Real mu = Real(6L) / pi2;
    Real sigma2 = Real(3L) * (Real(12L) - pi2) / (pi2 * pi2);

    switch (regime) {
    case RegimeTag::dimension: {
        require_general(spec, "dimension-regime constants");
        out.regime = "dimension";
        Real l1 = lam_real(spec, 1), l2 = lam_real(spec, 2), l3 = lam_real(spec, 3), l4 = lam_real(spec, 4);
        Real l1_2 = l1 * l1;
        // c = 12 sqrt(3)/pi^{5/2} * exp(pi^2/6 (l2/l1^2 - 1/2))
        Real c = Real(12L) * Real(3L).sqrt() / (pi2 * pi.sqrt()) *
                 ((pi2 / Real(6L)) * (l2 / l1_2 - Real(1L) / Real(2L))).exp();
        Real pi4 = pi2 * pi2;
        Real d1 = Real(3L) / Real(8L) + (Real(19L) * l1_2 - Real(36L) * l2) / (Real(144L) * l1_2) * pi2 +
                  (l1_2 + Real(12L) * l1 * l3 - Real(12L) * l2 * l2) / (Real(432L) * l1_2 * l1_2) * pi4;
        Real l1_4 = l1_2 * l1_2;
        Real l1_6 = l1_4 * l1_2;
        Real l1_8 = l1_4 * l1_4;
        Real pi6 = pi4 * pi2, pi8 = pi4 * pi4;
        Real d2 = -(Real(7L) / Real(128L)) -
                  (Real(19L) * l1_2 - Real(36L) * l2) * pi2 / (Real(1152L) * l1_2) -
                  (Real(35L) * l1_4 + Real(456L) * l1_2 * l2 + Real(1872L) * l1 * l3 - Real(2304L) * l2 * l2) *
                      pi4 / (Real(41472L) * l1_4) +
                  (Real(7L) * l1_6 - Real(12L) * l1_4 * l2 + Real(228L) * l1_2 * l1 * l3 -
                   Real(228L) * l1_2 * l2 * l2 + Real(288L) * l1_2 * l4 - Real(1008L) * l1 * l2 * l3 +
                   Real(720L) * l2 * l2 * l2) *
                      pi6 / (Real(62208L) * l1_6) -
                  (Real(5L) * l1_4 - Real(12L) * l1_2 * l2 + Real(24L) * l1 * l3 - Real(12L) * l2 * l2) *
                      (l1_4 - Real(12L) * l2 * l1_2 - Real(24L) * l1 * l3 + Real(36L) * l2 * l2) * pi8 /
                      (Real(1492992L) * l1_8);
        Real r = l2 / l1_2;
        out.values = {
            {"mu", mu},
            {"sigma2", sigma2},
            {"c", c},
            {"d1", d1},
            {"d2", d2},
            // E(X_n-mu_n)^3 ~ central3_coeff (n+3/2) + 1/12 - l2/(6 l1^2)
            {"central3_coeff", (pi4 - Real(54L) * pi2 + Real(432L)) / pi6},
            {"central3_constant", Real(1L) / Real(12L) - r / Real(6L)},
            // E(X_n-mu_n)^4 = 3 V(X_n)^2 + central4_n_coeff * n + O(1)
            {"central4_n_coeff", Real(6L) * sigma2 * sigma2 - mu * mu / Real(12L)},
            {"mean_constant", mu * Real(3L) / Real(2L) - r},
            {"var_constant", sigma2 * Real(3L) / Real(2L) - Real(1L) / Real(4L) + r / Real(2L)},
            // 1/n coefficients of the refined E(X_n), V(X_n) expansions
            {"mean_c1", Real(1L) / (Real(2L) * pi2) - Real(19L) / Real(24L) - pi2 / (Real(72L) * l1_2) +
                            Real(3L) * l2 / (Real(2L) * l1_2) - Real(2L) * pi2 * l3 / (Real(3L) * l1_2 * l1) +
                            Real(2L) * pi2 * l2 * l2 / (Real(3L) * l1_4)},
            {"var_c1", pi2 / Real(48L) - Real(1L) / (Real(4L) * pi2) + Real(19L) / Real(48L) +
                           pi2 / (Real(144L) * l1_2) - Real(3L) * l2 / (Real(4L) * l1_2) +
                           (pi2 + Real(12L)) / Real(6L) * (l3 / (l1_2 * l1) - l2 * l2 / l1_4)},
        };
        break;
    }
    case RegimeTag::size: {
        if (!spec.classify().size_dual)
            raise(errc::unsupported_regime, "size-regime constants need a size-dual spec");
        out.regime = "size";
        Real L = Real(spec.value_at_one());
        Real Lp = Real(spec.value_at_one(1));
        Real Lpp = Real(spec.value_at_one(2));
        Real mu_hat = Lp / (Real(2L) * L);
        Real sigma_hat2 = ((Lp + Lpp) / L - (Lp / L) * (Lp / L)) / Real(2L);
        HConstants h = h_constant(spec);
        out.values = {
            {"mu_hat", mu_hat},         {"sigma_hat2", sigma_hat2}, {"H1", h.h1},
            {"H1_euler", h.h1_euler},   {"Hdlog", h.dlog},          {"Hvar_combo", h.var_combo},
            {"H1_tail_bound", h.tail_bound},
        };
        break;
    }
    case RegimeTag::self_dual: {
        require_general(spec, "self-dual constants");
        out.regime = "self-dual";
        Real l1 = lam_real(spec, 1), l2 = lam_real(spec, 2);
        Real sq6 = Real(6L).sqrt();
        Real pi3 = pi2 * pi;
        Real mu_prime = sq6 / (Real(2L) * pi3) * (Real(12L) * log2 - pi2 * l1.sqrt());
        // (c, beta, rho) of the self-dual counting asymptotics
        Real two = Real(2L);
        Real c = Real(3L) * two.sqrt() / (pi * pi.sqrt()) *
                 ((l2 / l1 - l1 / two) * two.log()).exp() *
                 (-(l1 / Real(4L)) - pi2 / Real(24L) + pi2 * l2 / (Real(12L) * l1 * l1) +
                  Real(3L) * l1 / (Real(2L) * pi2) * log2 * log2)
                     .exp();
        Real beta = (mu * l1).sqrt() * log2;
        Real rho = mu * l1 / Real::e();
        Real var_sqrt_coeff = sq6 / (Real(4L) * pi3 * pi2) *
                              (Real(24L) * (Real(18L) - pi2) * log2 - pi2 * (Real(24L) - pi2) * l1.sqrt());
        out.values = {
            {"mu", mu},          {"two_sigma2", Real(2L) * sigma2},
            {"mu_prime", mu_prime}, {"c", c},
            {"beta", beta},      {"rho", rho},
            {"var_sqrt_coeff", var_sqrt_coeff},
        };
        break;
    }
    case RegimeTag::no_ones: {
        Regime r = spec.classify();
        if (!r.no_ones)
            raise(errc::unsupported_regime, "no-ones constants need lambda_1 = 0, lambda_2 > 0");
        out.regime = "no-ones";
        Real l2 = lam_real(spec, 2), l3 = lam_real(spec, 3), l4 = lam_real(spec, 4), l5 = lam_real(spec, 5);
        Real mu_bar = Real(3L) / pi2;
        Real sigma_bar2 = sigma2 / Real(2L);
        Real l2_32 = l2.sqrt() * l2; // l2^{3/2}
        Real mu_bar_prime = -(Real(3L).sqrt() * l3) / (Real(2L) * pi * l2_32);
        Real beta = l3 * pi / (Real(2L) * Real(3L).sqrt() * l2_32);
        Real rho = Real(3L) * l2 / (Real::e() * pi2);
        Real l2_52 = l2_32 * l2, l2_72 = l2_52 * l2, l2_92 = l2_72 * l2;
        Real var_sqrt_coeff = l3 * (pi2 - Real(6L)) / (Real(4L) * pi2 * l2_32) - Real(2L) * l5 / l2_52 +
                              Real(4L) * l3 * l4 / l2_72 - Real(2L) * l3 * l3 * l3 / l2_92;
        out.values = {
            {"mu_bar", mu_bar},           {"mu_bar_prime", mu_bar_prime},
            {"sigma_bar2", sigma_bar2},   {"beta", beta},
            {"rho", rho},                 {"var_sqrt_coeff", var_sqrt_coeff},
        };
        break;
    }
    }
    return out;
}

namespace {

// H(z) = sum_j (-1)^j Lambda(z)^{-C(j+1,2)} sum_{0<=k<=j} prod_{l<=k} 1/(1-Lambda(z)^{-l})
// evaluated on order-2 jets at z = 1.  Terms decay superexponentially;
// the alternating tail is bounded by the magnitude of the next term.
struct HEval {
    Jet2 value{Real(0L), Real(0L), Real(0L)};
    Real tail{0L};
};

HEval h_series_jets(const LambdaSpec& spec) {
    Jet2 L{Real(spec.value_at_one()), Real(spec.value_at_one(1)), Real(spec.value_at_one(2))};
    Jet2 Linv = L.reciprocal();
    Jet2 one = Jet2::constant(Real(1L));
    HEval out;
    Jet2 inner = Jet2::constant(Real(0L));
    Jet2 qprod = one;
    Real tiny = Real(10L).pow_int(-32);
    int j = 0;
    while (true) {
        if (j > 0) qprod = qprod * (one - Linv.pow_int(j)).reciprocal();
        inner = inner + qprod;
        Jet2 term = Linv.pow_int(binomial(j + 1, 2).get_si()) * inner;
        if (j % 2)
            out.value = out.value - term;
        else
            out.value = out.value + term;
        // bound on the next term's magnitude: |inner + next qprod| <= |inner| + 2|qprod|
        Real next = Real(spec.value_at_one()).pow_int(-binomial(j + 2, 2).get_si()) *
                    (inner.f.abs() + qprod.f.abs() * Real(2L));
        if (j > 3 && next < tiny) {
            out.tail = next;
            break;
        }
        if (j > 400) raise(errc::internal, "H(1) series failed to converge");
        ++j;
    }
    return out;
}

// Alternative H(1) via the Euler identity
//   Q_inf/Q_k = sum_{l>=0} (-1)^l Lambda(1)^{-C(l+1,2)} / Q_l * Lambda(1)^{-kl},
// Q_k = prod_{1<=i<=k} (1 - Lambda(1)^{-i}); the inner partial sums of H
// telescope into geometric blocks.
Real h1_via_euler(const Real& L) {
    Real q = Real(1L) / L;
    Real tiny = Real(10L).pow_int(-40);
    Real qinf(1L);
    for (int i = 1;; ++i) {
        Real t = q.pow_int(i);
        qinf *= (Real(1L) - t);
        if (t < tiny) break;
    }
    Real total(0L);
    for (int j = 0; j < 240; ++j) {
        // s_j = sum_{0<=k<=j} 1/Q_k
        Real s = Real(static_cast<long>(j + 1));
        Real qq(1L);
        for (int l = 1; l < 400; ++l) {
            qq *= (Real(1L) - q.pow_int(l));
            Real t = q.pow_int(binomial(l + 1, 2).get_si()) / qq *
                     (Real(1L) - q.pow_int(static_cast<long>(l) * (j + 1))) / (Real(1L) - q.pow_int(l));
            if (l % 2)
                s -= t;
            else
                s += t;
            if (t.abs() < tiny) break;
        }
        Real term = q.pow_int(binomial(j + 1, 2).get_si()) * s / qinf;
        if (j % 2)
            total -= term;
        else
            total += term;
        if (j > 3 && term.abs() < tiny) break;
    }
    return total;
}

} // namespace

HConstants h_constant(const LambdaSpec& spec) {
    if (!spec.is_polynomial() || !(spec.value_at_one() > 1))
        raise(errc::unsupported_regime, "h_constant needs a polynomial spec with Lambda(1) > 1");
    HEval e = h_series_jets(spec);
    HConstants out;
    out.h1 = e.value.f;
    out.dlog = e.value.d1 / e.value.f;
    out.var_combo = (e.value.d1 + e.value.d2) / e.value.f - out.dlog * out.dlog;
    out.tail_bound = e.tail;
    out.h1_euler = h1_via_euler(Real(spec.value_at_one()));
    if ((out.h1 - out.h1_euler).abs() > Real(10L).pow_int(-20))
        raise(errc::internal, "H(1) expressions disagree beyond 1e-20");
    return out;
}

AcceptanceValue acceptance_probability(int h) {
    if (h < 2) raise(errc::invalid_argument, "acceptance probability needs h >= 2");
    // Lambda = 1 + z + ... + z^{h-1}, the entry set {0,...,h-1}
    LambdaSpec spec = LambdaSpec::poly(std::vector<Rat>(static_cast<size_t>(h - 1), Rat(1)));
    HEval e = h_series_jets(spec);
    AcceptanceValue out;
    out.p = Real(static_cast<long>(h) * h) / Real(static_cast<long>(h - 1) * (h - 1)) * e.value.f;
    out.tail_bound = e.tail;
    return out;
}

MomentReport exact_moments(const CountTable& table, int n) {
    if (n < 0 || n > table.maxsize) raise(errc::invalid_argument, "size outside the table");
    const auto& row = table.rows[static_cast<size_t>(n)];
    Rat a = table.row_sums[static_cast<size_t>(n)];
    if (a <= 0) raise(errc::invalid_argument, "empty row has no moments");
    Rat m1(0), m2(0), m3(0), m4(0);
    for (const auto& [k, c] : row) {
        Rat kk(k);
        m1 += kk * c;
        m2 += kk * kk * c;
        m3 += kk * kk * kk * c;
        m4 += kk * kk * kk * kk * c;
    }
    m1 /= a;
    m2 /= a;
    m3 /= a;
    m4 /= a;
    MomentReport r;
    r.n = n;
    r.mean = m1;
    r.variance = m2 - m1 * m1;
    r.central3 = m3 - 3 * m1 * m2 + 2 * m1 * m1 * m1;
    r.central4 = m4 - 4 * m1 * m3 + 6 * m1 * m1 * m2 - 3 * m1 * m1 * m1 * m1;
    return r;
}

MomentReport exact_moments(const CountTable& table, int n, const LambdaSpec& spec) {
    MomentReport r = exact_moments(table, n);
    require_general(spec, "moment predictions");
    ConstantSet cs = asymptotic_constants(spec, RegimeTag::dimension);
    Real nn(static_cast<long>(n));
    Real shift = nn + Real(3L) / Real(2L);
    Real l1 = lam_real(spec, 1), l2 = lam_real(spec, 2);
    Real ratio = l2 / (l1 * l1);
    r.has_predictions = true;
    r.pred_mean = cs.get("mu") * shift - ratio;
    r.pred_variance = cs.get("sigma2") * shift - Real(1L) / Real(4L) + ratio / Real(2L);
    r.pred_central3 = cs.get("central3_coeff") * shift + Real(1L) / Real(12L) - ratio / Real(6L);
    Real v = Real(r.variance);
    r.pred_central4 = Real(3L) * v * v + cs.get("central4_n_coeff") * nn;
    r.scaled_resid_mean = nn * (Real(r.mean) - r.pred_mean).abs();
    r.scaled_resid_variance = nn * (Real(r.variance) - r.pred_variance).abs();
    r.scaled_resid_central3 = nn * (Real(r.central3) - r.pred_central3).abs();
    return r;
}

nlohmann::json MomentReport::to_json() const {
    nlohmann::json j = {
        {"n", n},
        {"mean", rat_to_string(mean)},
        {"variance", rat_to_string(variance)},
        {"central3", rat_to_string(central3)},
        {"central4", rat_to_string(central4)},
    };
    if (has_predictions) {
        j["pred_mean"] = pred_mean.str(30);
        j["pred_variance"] = pred_variance.str(30);
        j["pred_central3"] = pred_central3.str(30);
        j["pred_central4"] = pred_central4.str(30);
        j["scaled_resid_mean"] = scaled_resid_mean.str(30);
        j["scaled_resid_variance"] = scaled_resid_variance.str(30);
        j["scaled_resid_central3"] = scaled_resid_central3.str(30);
    }
    return j;
}

MomentReport MomentReport::from_json(const nlohmann::json& j) {
    MomentReport r;
    r.n = j.at("n").get<int>();
    r.mean = rat_from_string(j.at("mean").get<std::string>());
    r.variance = rat_from_string(j.at("variance").get<std::string>());
    r.central3 = rat_from_string(j.at("central3").get<std::string>());
    r.central4 = rat_from_string(j.at("central4").get<std::string>());
    return r;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

NormalityReport normality_report(const CountTable& table, int n) {
    MomentReport m = exact_moments(table, n);
    NormalityReport r;
    r.n = n;
    if (m.variance == 0) {
        r.degenerate = true;
        return r;
    }
    double mean = Rat(m.mean).get_d();
    double sd = std::sqrt(Rat(m.variance).get_d());
    const auto& row = table.rows[static_cast<size_t>(n)];
    Rat a = table.row_sums[static_cast<size_t>(n)];
    Rat cum(0);
    double sup = 0.0;
    for (const auto& [k, c] : row) {
        cum += c;
        double exact_cdf = Rat(cum / a).get_d();
        double x = (static_cast<double>(k) - mean) / sd;
        sup = std::max(sup, std::fabs(exact_cdf - normal_cdf(x)));
    }
    r.distance = sup;
    if (r.distance < 0.0 || r.distance > 1.0) raise(errc::internal, "sup distance out of [0,1]");
    return r;
}

nlohmann::json NormalityReport::to_json() const {
    return {{"n", n}, {"degenerate", degenerate}, {"distance", distance}};
}

Real varphi(const Real& alpha) {
    Real one(1L), two(2L);
    return two * (one - alpha) * alpha.log() - (one - two * alpha) * (one - two * alpha).log() +
           Real(2L) - Real(4L) * alpha;
}

ProofConstants proof_constants() {
    Real pi2 = Real::pi() * Real::pi();
    Real logmu = (Real(6L) / pi2).log();
    auto bisect = [&](Real lo, Real hi) {
        // varphi - log mu changes sign on [lo, hi]
        Real flo = varphi(lo) - logmu;
        for (int it = 0; it < 200; ++it) {
            Real mid = (lo + hi) / Real(2L);
            Real fm = varphi(mid) - logmu;
            if ((fm.sign() >= 0) == (flo.sign() >= 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return (lo + hi) / Real(2L);
    };
    // varphi is concave on (0, 1/2) with maximum above log mu; the two
    // roots bracket it (max near 0.42).
    ProofConstants out;
    out.alpha_minus = bisect(Real(1L) / Real(1000L), Real(42L) / Real(100L));
    out.alpha_plus = bisect(Real(4999L) / Real(10000L), Real(42L) / Real(100L));
    out.q = (Real(6L) / pi2) * Real::log2();
    return out;
}

Real richardson(const std::vector<std::pair<int, Real>>& points) {
    if (points.size() < 2) raise(errc::invalid_argument, "extrapolation needs at least two points");
    std::vector<Real> x, p;
    for (const auto& [n, y] : points) {
        x.push_back(Real(1L) / Real(static_cast<long>(n)));
        p.push_back(y);
    }
    // Neville at x = 0
    for (size_t level = 1; level < p.size(); ++level)
        for (size_t i = 0; i + level < p.size(); ++i)
            p[i] = p[i + 1] + (p[i] - p[i + 1]) * (Real(0L) - x[i + level]) / (x[i] - x[i + level]);
    return p[0];
}

namespace {

// Regularized incomplete gamma Q(a, x), series + continued fraction
// (double precision is plenty for test diagnostics).
double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) raise(errc::invalid_argument, "gamma_q domain");
    if (x == 0) return 1.0;
    double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
    }
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - gln) * h;
}

} // namespace

double chi_square_pvalue(double chi2, int df) {
    if (df < 1) raise(errc::invalid_argument, "chi-square needs df >= 1");
    return gamma_q(df / 2.0, chi2 / 2.0);
}

} // namespace fishburn
