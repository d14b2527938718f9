#include "fishburn/lcd.hpp"

#include "fishburn/enumerate.hpp"
#include "fishburn/real.hpp"

namespace fishburn {

std::vector<Int> fishburn_numbers(int N) {
    auto a = count_by_size(LambdaSpec::nat(), N, CountMethod::transformed);
    std::vector<Int> f;
    f.reserve(a.size());
    for (const Rat& c : a) f.push_back(rat_to_int(c));
    return f;
}

namespace {

// W(z) truncated at order t, for the current partial g.  The k-th term
// (1-z)^{-k-1} prod_{j<=k} ((1-z)^{-j}-1)^2 / (1+g(z)(1-z)^{-j}) has
// z-valuation 2k, so the sum stops at 2k > t and [z^n]W only involves
// g_1..g_{n-2}.
USeries compute_w(const USeries& g, int t, const std::vector<USeries>& upows) {
    USeries one = USeries::one(t);
    USeries gt = g.truncated(t);
    USeries term = upows[1].truncated(t); // k = 0: (1-z)^{-1}
    USeries W = term;
    for (int k = 1; 2 * k <= t; ++k) {
        USeries uk = upows[static_cast<size_t>(k)].truncated(t);
        USeries d = uk - one;
        term = term * upows[1].truncated(t) * (d * d) * (one + gt * uk).inverse();
        W += term;
    }
    return W;
}

} // namespace

ConnectedSeries connected_numbers(int N) {
    if (N < 1) raise(errc::invalid_argument, "order must be >= 1");
    USeries one = USeries::one(N);
    USeries u = (one - USeries::z(N)).inverse(); // (1-z)^{-1}
    std::vector<USeries> upows;
    upows.push_back(one);
    for (int k = 1; k <= N; ++k) upows.push_back(upows.back() * u);

    // Bootstrap: with g known through order m, W is exact through order
    // m+2 and g_n = [z^n]W - [z^n]g^2 needs only g_1..g_{n-1}.
    USeries g(N);
    if (N >= 1) g.at(1) = 1;
    int m = 1;
    while (m < N) {
        int t = std::min(m + 2, N);
        USeries W = compute_w(g, t, upows);
        for (int n = m + 1; n <= t; ++n) {
            Rat sq(0);
            for (int i = 1; i < n; ++i) sq += g[i] * g[n - i];
            g.at(n) = W[n] - sq;
        }
        m = t;
    }

    ConnectedSeries out;
    out.g = g;
    out.w = compute_w(g, N, upows);
    if (!(g * g + g + one == out.w)) raise(errc::internal, "functional equation g^2+g+1=W violated");
    auto f = count_by_size(LambdaSpec::nat(), N, CountMethod::transformed);
    out.f = USeries(N);
    for (int i = 0; i <= N; ++i) out.f.at(i) = f[static_cast<size_t>(i)];
    return out;
}

USeries phi_at(const USeries& g, int N) {
    USeries one = USeries::one(N);
    USeries omz = one - USeries::z(N);
    USeries gt = g.truncated(N);
    USeries total = one;
    USeries term = one;
    USeries opow = one;
    for (int k = 1; k <= N; ++k) {
        opow = opow * omz; // (1-z)^k
        term = term * (one - opow) * (one + gt * opow).inverse();
        total += term;
    }
    return (one + gt).inverse() * total;
}

std::vector<RatioRow> ratio_report(int N) {
    if (N < 2) raise(errc::invalid_argument, "ratio report needs order >= 2");
    ConnectedSeries cs = connected_numbers(N);
    Real e = Real::e();
    Real pi2 = Real::pi() * Real::pi();
    Real einv = Real(1L) / e;

    std::vector<RatioRow> rows;
    for (int n = 1; n <= N; ++n) {
        RatioRow row;
        row.n = n;
        row.f = rat_to_int(cs.f[n]);
        row.g = rat_to_int(cs.g[n]);
        Real ratio = Real(row.g) / Real(row.f);
        Real pred = einv * (Real(1L) - pi2 / Real(8L * n));
        Real rn = Real(static_cast<long>(n)) * (Real(1L) - e * ratio);
        row.ratio = ratio.str(18);
        row.prediction = pred.str(18);
        row.residual = (ratio - pred).str(18);
        row.r_n = rn.str(18);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string ratio_report_csv(const std::vector<RatioRow>& rows) {
    std::string out = "n,f_n,g_n,ratio,prediction,residual,r_n\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + r.f.get_str() + "," + r.g.get_str() + "," + r.ratio + "," +
               r.prediction + "," + r.residual + "," + r.r_n + "\n";
    return out;
}

} // namespace fishburn
