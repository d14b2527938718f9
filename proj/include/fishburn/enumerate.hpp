#ifndef FISHBURN_ENUMERATE_HPP
#define FISHBURN_ENUMERATE_HPP

#include <vector>

#include "fishburn/bseries.hpp"
#include "fishburn/count_table.hpp"
#include "fishburn/lambda.hpp"

namespace fishburn {

enum class CountMethod { alternating, transformed };
enum class DimMethod { product, rogersfine, positive };

CountMethod parse_count_method(const std::string& name);
DimMethod parse_dim_method(const std::string& name);

// a_n = [z^n] sum_k prod_{1<=j<=k} (1 - Lambda(z)^{-j})  (alternating), or
// the Andrews-Jelinek transform sum_k Lambda^{k+1} prod (Lambda^j - 1)^2.
std::vector<Rat> count_by_size(const LambdaSpec& spec, int N, CountMethod method);

// Full bivariate F(z,v) truncated at z-order N, by one of the three
// representations; they must agree coefficientwise.
BSeries dimension_series(const LambdaSpec& spec, int N, DimMethod method);
CountTable dimension_table(const LambdaSpec& spec, int N, DimMethod method);

// Exact moment generating function M_h(z) = sum_n a_n E(X_n^h) z^n.
USeries moment_series(const LambdaSpec& spec, int N, int h);        // Stirling-number route
USeries moment_series_closed(const LambdaSpec& spec, int N, int h); // closed forms, h = 1 or 2

// Size-distribution series [v^m]F(z,v) of m-dimensional Lambda-FMs
// (size-dual specs), and its exact evaluation at z = 1.
USeries fixed_dimension_series(const LambdaSpec& spec, int m, int Nz);
Rat fixed_dimension_total(const LambdaSpec& spec, int m);

// Self-dual (persymmetric) Lambda-FMs: bivariate series, count table and
// the first two moment series.  The moment series are computed both by
// differentiating the bivariate series and from the S1/S2 closed forms;
// a disagreement is an internal error.
struct SelfDualTable {
    BSeries series; // G(z,v)
    CountTable table;
    USeries m1; // sum_k k   p^{sd}_{n,k}
    USeries m2; // sum_k k^2 p^{sd}_{n,k}
    SelfDualTable() : series(0), m1(0), m2(0) {}
};
SelfDualTable self_dual_table(const LambdaSpec& spec, int N);

// Andresen-Kjeldsen polynomials.
enum class AKKind { xi, eta, psi };
struct AKPolynomial {
    AKKind kind;
    int m = 0;
    std::vector<Int> coeffs; // coefficient of v^i at index i
    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(i)] : Int(0);
    }
    Int eval_at_one() const {
        Int s = 0;
        for (const Int& c : coeffs) s += c;
        return s;
    }
};
AKKind parse_ak_kind(const std::string& name);
AKPolynomial ak_polynomial(AKKind kind, int m);
std::vector<Int> ak_eta_closed_form(int m);

} // namespace fishburn

#endif
