#pragma once

#include "kbqd/resampling.hpp"

#include <vector>

namespace kbqd {

enum class AlternativeKind { location, scale, skewness };

const char* to_string(AlternativeKind k);
AlternativeKind alternative_kind_from_string(const std::string& s);

/// Target alternative family for the bandwidth search, with the delta and h
/// grids (both strictly ascending).
struct AlternativeFamily {
    AlternativeKind kind = AlternativeKind::location;
    std::vector<double> delta_grid;
    std::vector<double> h_grid;

    static AlternativeFamily defaults(AlternativeKind kind);
    void validate() const;
};

/// Pooled-sample estimates parameterizing the skew-normal targets.
struct PooledEstimates {
    Vector mu_hat;
    Matrix sigma_hat;
    Vector lambda_hat;
};

struct PowerCell {
    double h;
    double delta;
    double power;
};

struct HSelectionResult {
    Bandwidth h_star{1.0};
    std::vector<PowerCell> power_table;
    bool achieved = false; // true when some cell reached power >= 0.5
};

/// Sample mean, covariance (n-1 denominator), and a per-coordinate
/// skew-normal shape estimate obtained by inverting the skewness formula at
/// the sample standardized third moment, clamped inside the attainable
/// skew-normal range.
PooledEstimates estimate_pooled_params(const Eigen::Ref<const Matrix>& pooled);

/// Moment inversion used above: skew-normal shape lambda whose skewness is
/// gamma1 (clamped to +-0.995 * gamma1_max).
double skewness_to_shape(double gamma1);

/// Monte Carlo mid-power bandwidth search: loops delta ascending then h
/// ascending; per cell draws k-1 pseudo-samples from SN(mu_hat, sigma_hat,
/// lambda_hat) and one from the delta-perturbed family, runs the tn test N
/// times, and returns the first h whose power reaches 0.5 (falling back to
/// the argmax of the full table, ties to the smallest h).
HSelectionResult select_h(const GroupedSamples& groups, const AlternativeFamily& family,
                          const ResamplingPlan& plan, int N);

} // namespace kbqd
