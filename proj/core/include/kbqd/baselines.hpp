#pragma once

#include "kbqd/groups.hpp"
#include "kbqd/kernel.hpp"

namespace kbqd {

/// MMD^2 U-statistic with the uncentered Gaussian kernel: unbiased
/// within-sample averages, all-pairs cross average. Functionally identical
/// to the two-sample statistic with an uncentered kernel.
double mmd2_u(const Eigen::Ref<const Matrix>& x, const Eigen::Ref<const Matrix>& y, Bandwidth h);

/// Energy distance statistic in the all-pairs (1/n^2) within-sample form.
double energy_two_sample(const Eigen::Ref<const Matrix>& x, const Eigen::Ref<const Matrix>& y);

/// Weighted sum of pairwise two-sample energy statistics,
/// sum_{i<j} n_i n_j / (n_i + n_j) * energy(sample_i, sample_j).
double energy_k_sample(const GroupedSamples& groups);

/// Generalized MMD over distinct pairs: sum_{i<j} pi_j * MMD^2(sample_i,
/// sample_j). With all weights 1 this equals the k-sample tn statistic
/// computed without centering.
double gmmd(const GroupedSamples& groups, const Eigen::Ref<const Vector>& pi, Bandwidth h);

} // namespace kbqd
