#include "proplist/anova.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace proplist {

namespace {

// Continued fraction for the incomplete beta function (Lentz's method).
double beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double eps = 1e-14;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double bt = std::exp(std::lgamma(a + b) - std::lgamma(a) -
                         std::lgamma(b) + a * std::log(x) +
                         b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
    return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

} // namespace

double f_survival(double f, int df1, int df2) {
    if (f <= 0.0) return 1.0;
    if (std::isinf(f)) return 0.0;
    double x = double(df2) / (double(df2) + double(df1) * f);
    return beta_inc(df2 / 2.0, df1 / 2.0, x);
}

FTestResult anova_oneway(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2)
        throw std::invalid_argument("anova needs at least 2 groups");
    std::size_t total = 0;
    double grand_sum = 0.0;
    for (const auto& g : groups) {
        if (g.size() < 2)
            throw std::invalid_argument(
                "anova needs at least 2 samples per group");
        total += g.size();
        for (double v : g) grand_sum += v;
    }
    double grand_mean = grand_sum / double(total);

    double ssb = 0.0, ssw = 0.0;
    for (const auto& g : groups) {
        double sum = 0.0;
        for (double v : g) sum += v;
        double mean = sum / double(g.size());
        ssb += double(g.size()) * (mean - grand_mean) * (mean - grand_mean);
        for (double v : g) ssw += (v - mean) * (v - mean);
    }

    FTestResult r;
    r.df_between = int(groups.size()) - 1;
    r.df_within = int(total) - int(groups.size());
    if (ssw == 0.0) {
        r.f = ssb == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    } else {
        r.f = (ssb / r.df_between) / (ssw / r.df_within);
    }
    r.p_value = f_survival(r.f, r.df_between, r.df_within);
    r.significant_at_5pct = r.p_value < 0.05;
    return r;
}

} // namespace proplist
