#ifndef FISHBURN_LCD_HPP
#define FISHBURN_LCD_HPP

#include <string>
#include <vector>

#include "fishburn/series.hpp"

namespace fishburn {

// Fishburn numbers f_n (regular LCD counts by size).
std::vector<Int> fishburn_numbers(int N);

// Connected regular LCD counts via Zagier's functional equation
// g(z)^2 + g(z) + 1 = W(z); the invariant is re-verified on the result.
struct ConnectedSeries {
    USeries g, f, w;
    ConnectedSeries() : g(0), f(0), w(0) {}
};
ConnectedSeries connected_numbers(int N);

// Phi(z, v) with v = g(z) substituted; equals the constant series 1 when g
// solves the functional equation.
USeries phi_at(const USeries& g, int N);

struct RatioRow {
    int n = 0;
    Int f, g;
    std::string ratio;      // g_n / f_n
    std::string prediction; // e^{-1} (1 - pi^2 / (8n))
    std::string residual;   // ratio - prediction
    std::string r_n;        // n (1 - e g_n / f_n)
};
std::vector<RatioRow> ratio_report(int N);

std::string ratio_report_csv(const std::vector<RatioRow>& rows);

} // namespace fishburn

#endif
