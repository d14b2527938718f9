#include "fishburn/enumerate.hpp"

namespace fishburn {

CountMethod parse_count_method(const std::string& name) {
    if (name == "alternating") return CountMethod::alternating;
    if (name == "transformed") return CountMethod::transformed;
    raise(errc::invalid_argument, "unknown count method '" + name + "'");
}

DimMethod parse_dim_method(const std::string& name) {
    if (name == "product") return DimMethod::product;
    if (name == "rogersfine") return DimMethod::rogersfine;
    if (name == "positive") return DimMethod::positive;
    raise(errc::invalid_argument, "unknown dimension method '" + name + "'");
}

AKKind parse_ak_kind(const std::string& name) {
    if (name == "xi") return AKKind::xi;
    if (name == "eta") return AKKind::eta;
    if (name == "psi") return AKKind::psi;
    raise(errc::invalid_argument, "unknown AK polynomial kind '" + name + "'");
}

namespace {

// Incrementally extended powers of a fixed series.
class PowerCache {
public:
    explicit PowerCache(USeries base) : base_(std::move(base)) {
        pows_.push_back(USeries::one(base_.order()));
    }
    const USeries& pow(int k) {
        while (static_cast<int>(pows_.size()) <= k) pows_.push_back(pows_.back() * base_);
        return pows_[static_cast<size_t>(k)];
    }

private:
    USeries base_;
    std::vector<USeries> pows_;
};

void check_not_degenerate(const LambdaSpec& spec) { (void)spec.classify(); }

} // namespace

std::vector<Rat> count_by_size(const LambdaSpec& spec, int N, CountMethod method) {
    if (N < 0) raise(errc::invalid_argument, "order must be nonnegative");
    check_not_degenerate(spec);
    const int i0 = spec.first_nonzero();
    USeries lam = spec.expand(N);
    USeries total(N);

    if (method == CountMethod::alternating) {
        // k-th term prod_{j<=k}(1 - Lambda^{-j}) has z-valuation k*i0.
        PowerCache ip(lam.inverse());
        USeries one = USeries::one(N);
        USeries term = one;
        total += one;
        for (int k = 1; static_cast<long>(k) * i0 <= N; ++k) {
            term = term * (one - ip.pow(k));
            total += term;
        }
    } else {
        // k-th term Lambda^{k+1} prod_{j<=k}(Lambda^j - 1)^2 has valuation 2k*i0.
        PowerCache p(lam);
        USeries one = USeries::one(N);
        USeries prod = one;
        total += lam;
        for (int k = 1; 2L * k * i0 <= N; ++k) {
            USeries d = p.pow(k) - one;
            prod = prod * (d * d);
            total += p.pow(k + 1) * prod;
        }
    }
    return total.coeffs();
}

BSeries dimension_series(const LambdaSpec& spec, int N, DimMethod method) {
    if (N < 0) raise(errc::invalid_argument, "order must be nonnegative");
    check_not_degenerate(spec);
    const int i0 = spec.first_nonzero();
    USeries lam = spec.expand(N);
    BSeries one = BSeries::one(N);
    BSeries total(N);

    switch (method) {
    case DimMethod::product: {
        // F = sum_k prod_{j<=k} (1 - 1/(1 + v(Lambda^j - 1))).
        PowerCache p(lam);
        USeries uone = USeries::one(N);
        BSeries term = one;
        total += one;
        for (int k = 1; static_cast<long>(k) * i0 <= N; ++k) {
            BSeries den = one + BSeries::from_useries(p.pow(k) - uone).times_v();
            term = term * (one - den.inverse());
            total += term;
        }
        break;
    }
    case DimMethod::rogersfine: {
        // F = 1 + sum_{k>=1} v Lambda^{-k} / (1 - v(1 - Lambda^{-k}))
        //                    * prod_{j<=k}(1 - Lambda^{-j}).
        PowerCache ip(lam.inverse());
        USeries uone = USeries::one(N);
        BSeries prod = one;
        total += one;
        for (int k = 1; static_cast<long>(k) * i0 <= N; ++k) {
            USeries d = uone - ip.pow(k);
            prod = prod * BSeries::from_useries(d);
            BSeries den = one - BSeries::from_useries(d).times_v();
            total += BSeries::from_useries(ip.pow(k)).times_v() * den.inverse() * prod;
        }
        break;
    }
    case DimMethod::positive: {
        // F = 1 - v + sum_{k>=1} v^k Lambda^k
        //             prod_{j<k} (Lambda^j-1)^2 / (1 - (v-1)(Lambda^j-1)).
        PowerCache p(lam);
        USeries uone = USeries::one(N);
        BSeries prod = one;
        total += one - one.times_v();
        for (int k = 1; 2L * (k - 1) * i0 <= N; ++k) {
            total += BSeries::from_useries(p.pow(k)).times_v(k) * prod;
            USeries d = p.pow(k) - uone;
            BSeries bd = BSeries::from_useries(d);
            BSeries den = one - bd.times_v() + bd; // 1 - (v-1)(Lambda^k-1)
            prod = prod * (BSeries::from_useries(d * d) * den.inverse());
        }
        break;
    }
    }

    // v-degree of the summed P_n(v) may not exceed n.
    for (int n = 0; n <= N; ++n)
        if (total.coeff(n).degree() > n)
            raise(errc::internal, "dimension polynomial degree bound violated at n=" + std::to_string(n));
    return total;
}

CountTable dimension_table(const LambdaSpec& spec, int N, DimMethod method) {
    BSeries f = dimension_series(spec, N, method);
    CountTable t;
    t.maxsize = N;
    t.rows.resize(static_cast<size_t>(N) + 1);
    t.row_sums.resize(static_cast<size_t>(N) + 1, Rat(0));
    for (int n = 0; n <= N; ++n) {
        const VPoly& p = f.coeff(n);
        Rat sum(0);
        for (int k = 0; k <= p.degree(); ++k) {
            Rat c = p.coeff(k);
            if (c == 0) continue;
            if (c < 0) raise(errc::internal, "negative count in dimension table");
            t.rows[static_cast<size_t>(n)][k] = c;
            sum += c;
        }
        t.row_sums[static_cast<size_t>(n)] = sum;
    }
    return t;
}

USeries moment_series(const LambdaSpec& spec, int N, int h) {
    if (h < 0) raise(errc::invalid_argument, "moment order must be nonnegative");
    check_not_degenerate(spec);
    const int i0 = spec.first_nonzero();
    USeries lam_inv = spec.expand(N).inverse();
    PowerCache ip(lam_inv);
    USeries one = USeries::one(N);
    USeries total(N);

    // M_h = sum_{0<=l<=h} S(h+1,l+1) (-1)^{h-l} l! T_l with
    // T_l = sum_{d>=0} prod_{1<=i<=d} (1 - Lambda^{-(l+i)}), the combination
    // of U_h M_0 + V_h with the pole at z=0 cancelled term by term.
    Int lfact = 1;
    for (int l = 0; l <= h; ++l) {
        if (l > 0) lfact *= l;
        USeries T = one;
        USeries term = one;
        for (int d = 1; static_cast<long>(d) * i0 <= N; ++d) {
            term = term * (one - ip.pow(l + d));
            T += term;
        }
        Int coeff = stirling2(h + 1, l + 1) * lfact;
        if ((h - l) % 2) coeff = -coeff;
        total += Rat(coeff) * T;
    }
    return total;
}

USeries moment_series_closed(const LambdaSpec& spec, int N, int h) {
    check_not_degenerate(spec);
    const int i0 = spec.first_nonzero();
    if (h == 1) {
        // M_1 = (M_0 - Lambda) / (Lambda - 1)
        int M = N + i0;
        USeries lam = spec.expand(M);
        USeries m0(M);
        {
            auto a = count_by_size(spec, M, CountMethod::alternating);
            for (int i = 0; i <= M; ++i) m0.at(i) = a[static_cast<size_t>(i)];
        }
        USeries q = series_div_exact(m0 - lam, lam - USeries::one(M), i0);
        return q.truncated(N);
    }
    if (h == 2) {
        // M_2 = [(1+2L-L^2) M_0 - L(3-2L+L^2)] / [(L-1)(L^2-1)]
        int M = N + 2 * i0;
        USeries lam = spec.expand(M);
        USeries one = USeries::one(M);
        USeries m0(M);
        {
            auto a = count_by_size(spec, M, CountMethod::alternating);
            for (int i = 0; i <= M; ++i) m0.at(i) = a[static_cast<size_t>(i)];
        }
        USeries lam2 = lam * lam;
        USeries den = (lam - one) * (lam2 - one);
        USeries num = (one + Rat(2) * lam - lam2) * m0 - lam * (Rat(3) * one - Rat(2) * lam + lam2);
        return series_div_exact(num, den, 2 * i0).truncated(N);
    }
    raise(errc::invalid_argument, "closed moment forms exist for h = 1, 2 only");
}

namespace {

void require_size_dual(const LambdaSpec& spec) {
    if (!spec.classify().size_dual)
        raise(errc::unsupported_regime,
              "operation needs a size-dual spec (polynomial with positive coefficients)");
}

} // namespace

USeries fixed_dimension_series(const LambdaSpec& spec, int m, int Nz) {
    require_size_dual(spec);
    if (m < 1) raise(errc::invalid_argument, "dimension must be >= 1");
    if (Nz < m) raise(errc::invalid_argument, "order must be at least the dimension");
    const int i0 = spec.first_nonzero();

    // Ratio factors are exact valuation-i0 quotients; computing inputs with
    // i0 extra orders keeps every intermediate exact through order Nz.
    const int M = Nz + i0;
    USeries lam = spec.expand(M);
    PowerCache ip(lam.inverse());
    USeries one = USeries::one(M);

    USeries total(Nz);
    for (int j = 0; j < m; ++j) {
        USeries outer = (one - ip.pow(m - j)).pow(m) *
                        ip.pow(static_cast<int>(binomial(j + 1, 2).get_si()));
        USeries inner = USeries::one(Nz);
        USeries ratio_prod = USeries::one(Nz);
        for (int k = 1; k <= j; ++k) {
            USeries ratio = series_div_exact(one - ip.pow(k + m - j), one - ip.pow(k), i0);
            ratio_prod = ratio_prod * ratio.truncated(Nz);
            inner += ratio_prod;
        }
        USeries t = outer.truncated(Nz) * inner;
        if (j % 2)
            total -= t;
        else
            total += t;
    }
    return spec.expand(Nz).pow(binomial(m + 1, 2).get_si()) * total;
}

Rat fixed_dimension_total(const LambdaSpec& spec, int m) {
    require_size_dual(spec);
    if (m < 1) raise(errc::invalid_argument, "dimension must be >= 1");
    Rat L = spec.value_at_one();
    if (L == 1) raise(errc::invalid_argument, "Lambda(1) = 1 has no m-dimensional count");
    Rat Li = make_rat(L.get_den(), L.get_num());
    Rat total(0);
    for (int j = 0; j < m; ++j) {
        Rat outer = rat_pow(1 - rat_pow(Li, m - j), m) * rat_pow(Li, binomial(j + 1, 2).get_si());
        Rat inner(1), ratio(1);
        for (int k = 1; k <= j; ++k) {
            ratio *= (1 - rat_pow(Li, k + m - j)) / (1 - rat_pow(Li, k));
            inner += ratio;
        }
        Rat t = outer * inner;
        total += (j % 2) ? -t : t;
    }
    return rat_pow(L, binomial(m + 1, 2).get_si()) * total;
}

namespace {

// G(z,v) + v = sum_{k>=1} L1^k L2^{C(k,2)} v^{2k-1} (1 + v(L2^k - 1))
//              prod_{j<k}(L2^j - 1) / prod_{j<=k}(1 + v^2 (L2^j - 1)),
// with L1 = Lambda(z), L2 = Lambda(z^2).
BSeries self_dual_series(const LambdaSpec& spec, int N) {
    const int i0 = spec.first_nonzero();
    USeries lam1 = spec.expand(N);
    USeries lam2 = spec.expand_z2(N);
    USeries uone = USeries::one(N);
    BSeries one = BSeries::one(N);
    PowerCache p2(lam2);

    BSeries total(N);
    USeries l1p = uone;          // Lambda1^k
    USeries l2binom = uone;      // Lambda2^{C(k,2)}
    USeries prod_num = uone;     // prod_{j<k} (Lambda2^j - 1)
    BSeries prod_den = one;      // prod_{j<=k} (1 + v^2 (Lambda2^j - 1))
    for (int k = 1; 2L * i0 * (k - 1) <= N; ++k) {
        l1p = l1p * lam1;
        if (k >= 2) {
            l2binom = l2binom * p2.pow(k - 1);
            prod_num = prod_num * (p2.pow(k - 1) - uone);
        }
        USeries dk = p2.pow(k) - uone;
        prod_den = prod_den * (one + BSeries::from_useries(dk).times_v(2));
        BSeries head =
            BSeries::from_useries(l1p * l2binom * prod_num) * (one + BSeries::from_useries(dk).times_v());
        total += head.times_v(2 * k - 1) * prod_den.inverse();
    }
    // subtract the lone v
    total.at(0) = total.coeff(0) - VPoly::v();
    return total;
}

USeries self_dual_m1_closed(const LambdaSpec& spec, int N) {
    const int i0 = spec.first_nonzero();
    const int M = N + 2 * i0;
    USeries lam1 = spec.expand(M);
    USeries lam2 = spec.expand_z2(M);
    USeries one = USeries::one(M);
    USeries g1 = self_dual_series(spec, M).moment(0); // G(z,1)
    USeries g2 = g1 + Rat(2) * one;
    USeries den = (lam2 - one) * (lam1 + lam2);
    USeries num = (Rat(2) * lam2 - lam1 * (lam2 - one)) * g2 - Rat(2) * (lam1 + lam2) - den;
    return series_div_exact(num, den, 2 * i0).truncated(N);
}

USeries self_dual_m2_closed(const LambdaSpec& spec, int N) {
    const int i0 = spec.first_nonzero();
    const int M = N + 6 * i0;
    USeries lam1 = spec.expand(M);
    USeries lam2 = spec.expand_z2(M);
    USeries one = USeries::one(M);
    USeries g1 = self_dual_series(spec, M).moment(0);
    USeries g2 = g1 + Rat(2) * one;

    USeries L22 = lam2 * lam2;
    USeries A = lam1 + lam2;  // Lambda1 + Lambda2
    USeries B = lam1 + L22;   // Lambda1 + Lambda2^2
    USeries d1 = lam2 - one;  // valuation 2*i0
    USeries d2 = L22 - one;   // valuation 2*i0
    USeries D = d1 * d1 * d2 * A * B;

    // bracket * D = Lambda1 d1^2 d2 B + 4 Lambda2 ((3 L2^2 - 1) B - L2^2 (L2^2 + 1) A)
    USeries bracketD =
        lam1 * (d1 * d1) * d2 * B +
        Rat(4) * (lam2 * ((Rat(3) * L22 - one) * B - L22 * (L22 + one) * A));
    // (8 L2/d2 - 4 L2^2 (L2^2+1)/(d1 d2 B) - 1) * D
    USeries restD = Rat(8) * (lam2 * (d1 * d1) * A * B) -
                    Rat(4) * (L22 * (L22 + one) * d1 * A) - D;
    USeries num = bracketD * g2 + restD;
    return series_div_exact(num, D, 6 * i0).truncated(N);
}

} // namespace

SelfDualTable self_dual_table(const LambdaSpec& spec, int N) {
    if (N < 0) raise(errc::invalid_argument, "order must be nonnegative");
    check_not_degenerate(spec);
    SelfDualTable out;
    out.series = self_dual_series(spec, N);
    out.m1 = out.series.moment(1);
    out.m2 = out.series.moment(2);

    out.table.maxsize = N;
    out.table.rows.resize(static_cast<size_t>(N) + 1);
    out.table.row_sums.resize(static_cast<size_t>(N) + 1, Rat(0));
    out.table.rows[0][0] = 1; // the empty matrix is self-dual
    out.table.row_sums[0] = 1;
    for (int n = 1; n <= N; ++n) {
        const VPoly& p = out.series.coeff(n);
        Rat sum(0);
        for (int k = 0; k <= p.degree(); ++k) {
            Rat c = p.coeff(k);
            if (c == 0) continue;
            if (c < 0) raise(errc::internal, "negative self-dual count");
            out.table.rows[static_cast<size_t>(n)][k] = c;
            sum += c;
        }
        out.table.row_sums[static_cast<size_t>(n)] = sum;
    }

    // Closed forms via S1/S2 must reproduce the differentiated series.
    if (spec.classify().general) {
        if (!(self_dual_m1_closed(spec, N) == out.m1) || !(self_dual_m2_closed(spec, N) == out.m2))
            raise(errc::internal, "self-dual closed-form moments disagree with the bivariate series");
    }
    return out;
}

namespace {

std::vector<Int> poly_mul_int(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<Int> poly_add_int(std::vector<Int> a, const std::vector<Int>& b, int sign = 1) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// p(1 + 2v) by Horner.
std::vector<Int> compose_1p2v(const std::vector<Int>& p) {
    std::vector<Int> r;
    const std::vector<Int> arg = {Int(1), Int(2)};
    for (size_t i = p.size(); i-- > 0;) {
        r = poly_mul_int(r, arg);
        r = poly_add_int(r, {p[i]});
    }
    return r;
}

} // namespace

AKPolynomial ak_polynomial(AKKind kind, int m) {
    if (m < 1) raise(errc::invalid_argument, "AK polynomial index must be >= 1");
    std::vector<Int> P = {Int(0), Int(1)}; // P_1(v) = v
    const std::vector<Int> v = {Int(0), Int(1)};
    for (int i = 2; i <= m; ++i) {
        std::vector<Int> comp = poly_mul_int(v, compose_1p2v(P));
        switch (kind) {
        case AKKind::xi:
            P = poly_add_int(comp, poly_mul_int(v, P), -1);
            break;
        case AKKind::eta:
            P = poly_add_int(comp, poly_mul_int({Int(1), Int(1)}, P), -1);
            break;
        case AKKind::psi:
            P = poly_add_int(comp, poly_mul_int({Int(1), Int(-1)}, P), +1);
            break;
        }
    }
    AKPolynomial out;
    out.kind = kind;
    out.m = m;
    out.coeffs = std::move(P);
    if (static_cast<int>(out.coeffs.size()) - 1 > m)
        raise(errc::internal, "AK polynomial degree bound violated");
    return out;
}

std::vector<Int> ak_eta_closed_form(int m) {
    if (m < 1) raise(errc::invalid_argument, "AK polynomial index must be >= 1");
    // P_m^[eta](v) = v sum_{0<=k<m} (-1)^k (1+v)^{m-1-k} prod_{k<l<m} (2^l - 1)
    std::vector<Int> total;
    for (int k = 0; k < m; ++k) {
        Int prod = 1;
        for (int l = k + 1; l < m; ++l) prod *= int_pow(2, static_cast<unsigned long>(l)) - 1;
        std::vector<Int> t = {(k % 2) ? -prod : prod};
        for (int e = 0; e < m - 1 - k; ++e) t = poly_mul_int(t, {Int(1), Int(1)});
        total = poly_add_int(total, t);
    }
    return poly_mul_int({Int(0), Int(1)}, total);
}

} // namespace fishburn
