#pragma once

#include "kbqd/groups.hpp"
#include "kbqd/kernel.hpp"

#include <optional>
#include <span>
#include <vector>

namespace kbqd {

/// Empirical k x k matrix distance: U-statistic averages on the diagonal,
/// V-statistic averages off the diagonal.
struct DistanceMatrix {
    Matrix values;
    std::vector<int> sizes;

    int k() const { return static_cast<int>(values.rows()); }
};

struct StatisticPair {
    double trace;
    double tn;
};

/// Block averages of the centered Gram over the group layout of `groups`.
/// The Gram must be indexed in pooled order.
DistanceMatrix matrix_distance(const GroupedSamples& groups, const GramMatrix& centered);

/// Sum of the diagonal quadratic distances.
double trace_statistic(const DistanceMatrix& dist);

/// (k-1) * trace - 2 * sum of upper off-diagonal entries; the omnibus
/// statistic over all pairwise contrasts. At k=2 this is
/// D11 + D22 - 2 D12, the two-sample statistic.
double tn_statistic(const DistanceMatrix& dist);

/// Full pipeline: one pooled Gram, requested centering, both statistics.
/// parametric_normal centering is defined for k=2 only.
StatisticPair ksample_test_statistics(const GroupedSamples& groups, Bandwidth h,
                                      Centering centering);

namespace detail {

/// Which statistics a resampled pass should produce.
struct StatRequest {
    bool kbqd = true;    // trace + tn from the kernel Gram
    bool mmd = false;    // two-sample uncentered tn (k must be 2)
    bool energy = false; // from the Euclidean distance matrix
};

struct StatValues {
    double trace = 0.0;
    double tn = 0.0;
    double mmd = 0.0;
    double energy = 0.0;
};

/// Per-point additive centering terms: centered kernel value is
/// K(s,t) - a(s) - a(t) + c. Used for the parametric mode, where the
/// terms are densities under the (re)estimated normal model.
struct AdditiveCentering {
    Vector a;
    double c = 0.0;
};

/// One-pass statistics for a resample given by pooled-row indices laid out
/// as consecutive blocks of the given sizes. Kernel values are looked up in
/// the precomputed uncentered Gram; centering is recomputed from the
/// resample itself (nonparametric), taken from `parametric`, or skipped.
/// `dist` supplies Euclidean distances when energy is requested.
StatValues blockwise_statistics(const Matrix& gram, const Matrix* dist,
                                std::span<const int> idx, std::span<const int> sizes,
                                Centering centering, const AdditiveCentering* parametric,
                                const StatRequest& request);

} // namespace detail

} // namespace kbqd
