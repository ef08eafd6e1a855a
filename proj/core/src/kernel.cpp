#include "kbqd/kernel.hpp"

#include "kbqd/parallel.hpp"

#include <cmath>

namespace kbqd {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

} // namespace

double gaussian_kernel_peak(Eigen::Index d, Bandwidth h) {
    return std::pow(two_pi * h.h * h.h, -0.5 * static_cast<double>(d));
}

double gaussian_kernel(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& y,
                       Bandwidth h) {
    require(x.size() == y.size(), "gaussian_kernel: dimension mismatch");
    require(x.size() >= 1, "gaussian_kernel: empty vectors");
    const double sq = (x - y).squaredNorm();
    return gaussian_kernel_peak(x.size(), h) * std::exp(-sq / (2.0 * h.h * h.h));
}

GramMatrix gram_matrix(const Eigen::Ref<const Matrix>& pooled, Bandwidth h) {
    const Eigen::Index n = pooled.rows();
    require(n >= 2, "gram_matrix: need at least 2 rows");
    require(pooled.allFinite(), "gram_matrix: non-finite input");

    const double peak = gaussian_kernel_peak(pooled.cols(), h);
    const double inv_2h2 = 1.0 / (2.0 * h.h * h.h);

    GramMatrix gram;
    gram.values.resize(n, n);
    gram.centering = Centering::none;
    Matrix& values = gram.values;

    parallel_for_chunks(0, n, [&](std::int64_t lo, std::int64_t hi) {
        for (Eigen::Index i = lo; i < hi; ++i) {
            values(i, i) = peak;
            for (Eigen::Index j = 0; j < i; ++j) {
                const double sq = (pooled.row(i) - pooled.row(j)).squaredNorm();
                const double v = peak * std::exp(-sq * inv_2h2);
                values(i, j) = v;
                values(j, i) = v;
            }
        }
    });
    return gram;
}

GramMatrix center_nonparametric(const GramMatrix& gram) {
    require(gram.centering == Centering::none, "center_nonparametric: input already centered");
    const Eigen::Index n = gram.n();
    require(n >= 2, "center_nonparametric: need n >= 2");
    const Matrix& K = gram.values;

    // Sums are taken over entries shifted by K(0,0) so that a constant
    // input matrix centers to exact zero (the centered kernel is invariant
    // under a constant shift of K).
    const double shift = K(0, 0);
    Vector row_mean(n);
    double total = 0.0;
    double diag_sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) s += K(j, i) - shift;
        row_mean(i) = s / static_cast<double>(n);
        total += s;
        diag_sum += K(i, i) - shift;
    }
    const double grand_mean = (total - diag_sum) / static_cast<double>(n * (n - 1));

    GramMatrix centered;
    centered.centering = Centering::nonparametric;
    centered.values.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            centered.values(i, j) = (K(i, j) - shift) - row_mean(i) - row_mean(j) + grand_mean;
    return centered;
}

void validate_spd(const Matrix& sigma, double tolerance) {
    require(sigma.rows() == sigma.cols(), "covariance must be square");
    require(sigma.isApprox(sigma.transpose(), 1e-10), "covariance must be symmetric");
    Eigen::SelfAdjointEigenSolver<Matrix> eig(sigma, Eigen::EigenvaluesOnly);
    require(eig.eigenvalues().minCoeff() > tolerance,
            "covariance must be positive-definite (eigenvalue <= tolerance)");
}

double mvn_density(const Eigen::Ref<const Vector>& x, const Eigen::Ref<const Vector>& mean,
                   const Matrix& cov) {
    const Eigen::Index d = x.size();
    Eigen::LLT<Matrix> llt(cov);
    require(llt.info() == Eigen::Success, "mvn_density: covariance not positive-definite");
    const Vector diff = x - mean;
    const Vector z = llt.matrixL().solve(diff);
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) log_det += std::log(llt.matrixL()(i, i));
    const double log_pdf =
        -0.5 * z.squaredNorm() - log_det - 0.5 * static_cast<double>(d) * std::log(two_pi);
    return std::exp(log_pdf);
}

double center_parametric_normal(const Eigen::Ref<const Vector>& x,
                                const Eigen::Ref<const Vector>& y, Bandwidth h,
                                const NormalModelParams& params) {
    require(x.size() == y.size() && x.size() == params.mu.size(),
            "center_parametric_normal: dimension mismatch");
    validate_spd(params.sigma);
    const Eigen::Index d = x.size();
    const double h2 = h.h * h.h;
    const Matrix cov1 = h2 * Matrix::Identity(d, d) + params.sigma;
    const Matrix cov2 = h2 * Matrix::Identity(d, d) + 2.0 * params.sigma;
    const Vector zero = Vector::Zero(d);
    const double k_xy = gaussian_kernel(x, y, h);
    const double k_xg = mvn_density(x, params.mu, cov1);
    const double k_gy = mvn_density(y, params.mu, cov1);
    const double k_gg = mvn_density(zero, zero, cov2);
    return k_xy - k_xg - k_gy + k_gg;
}

GramMatrix center_parametric_normal(const GramMatrix& gram,
                                    const Eigen::Ref<const Matrix>& pooled, Bandwidth h,
                                    const NormalModelParams& params) {
    require(gram.centering == Centering::none, "center_parametric_normal: input already centered");
    require(gram.n() == pooled.rows(), "center_parametric_normal: size mismatch");
    validate_spd(params.sigma);
    const Eigen::Index n = gram.n();
    const Eigen::Index d = pooled.cols();
    const double h2 = h.h * h.h;
    const Matrix cov1 = h2 * Matrix::Identity(d, d) + params.sigma;
    const Matrix cov2 = h2 * Matrix::Identity(d, d) + 2.0 * params.sigma;
    const Vector zero = Vector::Zero(d);
    const double k_gg = mvn_density(zero, zero, cov2);

    Vector k_g(n);
    for (Eigen::Index i = 0; i < n; ++i)
        k_g(i) = mvn_density(pooled.row(i).transpose(), params.mu, cov1);

    GramMatrix centered;
    centered.centering = Centering::parametric_normal;
    centered.values.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            centered.values(i, j) = gram.values(i, j) - k_g(i) - k_g(j) + k_gg;
    return centered;
}

NormalModelParams estimate_normal_params(const Eigen::Ref<const Matrix>& pooled) {
    const Eigen::Index n = pooled.rows();
    require(n >= 2, "estimate_normal_params: need n >= 2");
    NormalModelParams params;
    params.mu = pooled.colwise().mean().transpose();
    const Matrix centered = pooled.rowwise() - params.mu.transpose();
    params.sigma = centered.transpose() * centered / static_cast<double>(n - 1);
    return params;
}

} // namespace kbqd
