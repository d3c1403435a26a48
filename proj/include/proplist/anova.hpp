#ifndef PROPLIST_ANOVA_HPP
#define PROPLIST_ANOVA_HPP

#include <vector>

namespace proplist {

struct FTestResult {
    double f = 0.0;
    int df_between = 0;
    int df_within = 0;
    double p_value = 1.0;
    bool significant_at_5pct = false;
};

// One-way ANOVA across the groups: F = (SSB/df_between) / (SSW/df_within).
// Requires >= 2 groups with >= 2 samples each. When both the between- and
// within-group sums of squares are zero, F is defined as 0.
FTestResult anova_oneway(const std::vector<std::vector<double>>& groups);

// Upper-tail probability of the F distribution, via the regularized
// incomplete beta function.
double f_survival(double f, int df1, int df2);

} // namespace proplist

#endif
