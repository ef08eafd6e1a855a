#pragma once

#include "kbqd/rng.hpp"
#include "kbqd/stats.hpp"

#include <cstdint>
#include <string>

namespace kbqd {

enum class ResamplingMethod { bootstrap, permutation, subsampling };

const char* to_string(ResamplingMethod m);
ResamplingMethod resampling_method_from_string(const std::string& s);

/// Resampling schedule for the empirical critical value.
struct ResamplingPlan {
    ResamplingMethod method = ResamplingMethod::subsampling;
    int B = 150;          // replications
    double b = 0.8;       // subsample proportion (subsampling only)
    double alpha = 0.05;  // test level
    std::uint64_t seed = 0;

    void validate() const;
};

/// Outcome of one k-sample test: both statistics, their empirical critical
/// values and p-values, and the rejection decisions.
struct TestResult {
    double statistic_trace = 0.0;
    double statistic_tn = 0.0;
    double critical_trace = 0.0;
    double critical_tn = 0.0;
    double pvalue_trace = 1.0;
    double pvalue_tn = 1.0;
    Bandwidth h{1.0};
    ResamplingPlan plan;
    bool reject_trace = false;
    bool reject_tn = false;
};

/// Draws one resampled k-tuple from the pooled sample: bootstrap draws each
/// group with replacement at its original size; permutation splits a random
/// permutation of the pooled rows; subsampling draws round(b * n_i) >= 2 rows
/// per group without replacement. Permutation shares the subsampling code
/// path with b = 1.
GroupedSamples resample_groups(const Eigen::Ref<const Matrix>& pooled,
                               const std::vector<int>& sizes, ResamplingMethod method, double b,
                               RngStream rng);

/// Algorithm-1 test: observed statistics, B resampled statistics with
/// re-centering inside each resample, empirical critical values at the
/// ceil((1-alpha) B)-th order statistic, and p-values
/// (1 + #{resampled >= observed}) / (B + 1).
TestResult critical_value(const GroupedSamples& groups, Bandwidth h, const ResamplingPlan& plan,
                          Centering centering = Centering::nonparametric);

namespace detail {

/// Resampled pooled-row indices plus the resampled group sizes.
struct ResampleIndices {
    std::vector<int> idx;
    std::vector<int> sizes;
};

ResampleIndices resample_indices(int n, const std::vector<int>& sizes, ResamplingMethod method,
                                 double b, RngStream& rng);

/// m-th order statistic with m = ceil((1 - alpha) * B); sorts its argument.
double critical_from_samples(std::vector<double>& values, double alpha);

} // namespace detail

} // namespace kbqd
