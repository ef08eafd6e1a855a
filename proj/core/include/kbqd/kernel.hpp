#pragma once

#include "kbqd/common.hpp"

namespace kbqd {

/// Symmetric n x n kernel evaluations over a pooled sample.
struct GramMatrix {
    Matrix values;
    Centering centering = Centering::none;

    Eigen::Index n() const { return values.rows(); }
};

/// Location/covariance estimates for the normal-model centering.
/// sigma must be symmetric positive-definite.
struct NormalModelParams {
    Vector mu;
    Matrix sigma;
};

/// Gaussian density kernel (2*pi*h^2)^(-d/2) * exp(-|x-y|^2 / (2 h^2)).
double gaussian_kernel(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& y,
                       Bandwidth h);

/// Zero-distance kernel value (2*pi*h^2)^(-d/2), the maximum for given (d, h).
double gaussian_kernel_peak(Eigen::Index d, Bandwidth h);

/// Uncentered Gram matrix over the rows of pooled (n >= 2, finite entries).
/// Each entry is computed independently, so the result does not depend on
/// how the row loop is split across threads.
GramMatrix gram_matrix(const Eigen::Ref<const Matrix>& pooled, Bandwidth h);

/// Centers against the pooled empirical distribution:
///   Kc(i,j) = K(i,j) - r_i - r_j + g
/// with r_i the row mean including the diagonal and g the grand mean over
/// off-diagonal entries only. A constant input matrix centers to exact zero.
GramMatrix center_nonparametric(const GramMatrix& gram);

/// G-centered kernel value K(x,y) - K(x,G) - K(G,y) + K(G,G) for
/// G = N(mu, sigma), using the Gaussian convolution closed forms:
/// K(x,G) is the density of x under N(mu, h^2 I + sigma) and K(G,G) the
/// density of 0 under N(0, h^2 I + 2 sigma).
double center_parametric_normal(const Eigen::Ref<const Vector>& x,
                                const Eigen::Ref<const Vector>& y, Bandwidth h,
                                const NormalModelParams& params);

/// Matrix form of the normal-model centering over a pooled sample.
GramMatrix center_parametric_normal(const GramMatrix& gram,
                                    const Eigen::Ref<const Matrix>& pooled, Bandwidth h,
                                    const NormalModelParams& params);

/// Sample mean and covariance (n-1 denominator) of the rows of pooled.
NormalModelParams estimate_normal_params(const Eigen::Ref<const Matrix>& pooled);

/// Throws unless sigma is symmetric with eigenvalues above tolerance.
void validate_spd(const Matrix& sigma, double tolerance = 1e-10);

/// Multivariate normal log-ready density of x under N(mean, cov).
double mvn_density(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& mean,
                   const Matrix& cov);

} // namespace kbqd
