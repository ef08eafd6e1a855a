#include "kbqd/distributions.hpp"

#include <cmath>

namespace kbqd {

namespace {

Eigen::LLT<Matrix> cholesky_or_throw(const Matrix& m, const char* what) {
    Eigen::LLT<Matrix> llt(m);
    require(llt.info() == Eigen::Success, std::string(what) + ": Cholesky factorization failed");
    return llt;
}

} // namespace

Matrix sample_mvn(int n, const Eigen::Ref<const Vector>& mu, const Eigen::Ref<const Matrix>& sigma,
                  RngStream& rng) {
    const Eigen::Index d = mu.size();
    require(sigma.rows() == d && sigma.cols() == d, "sample_mvn: dimension mismatch");
    const auto llt = cholesky_or_throw(sigma, "sample_mvn");
    const Matrix L = llt.matrixL();
    Matrix out(n, d);
    Vector z(d);
    for (int r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) z(c) = rng.normal();
        out.row(r) = (mu + L * z).transpose();
    }
    return out;
}

Matrix sample_skew_normal(int n, const Eigen::Ref<const Vector>& mu,
                          const Eigen::Ref<const Matrix>& sigma,
                          const Eigen::Ref<const Vector>& lambda, RngStream& rng) {
    const Eigen::Index d = mu.size();
    require(sigma.rows() == d && sigma.cols() == d && lambda.size() == d,
            "sample_skew_normal: dimension mismatch");

    // Correlation-scale split sigma = S * Omega_bar * S.
    const Vector scale = sigma.diagonal().cwiseSqrt();
    require((scale.array() > 0.0).all(), "sample_skew_normal: nonpositive diagonal in sigma");
    const Matrix omega_bar =
        scale.cwiseInverse().asDiagonal() * sigma * scale.cwiseInverse().asDiagonal();

    const Vector ol = omega_bar * lambda;
    const Vector delta = ol / std::sqrt(1.0 + lambda.dot(ol));

    Matrix augmented(d + 1, d + 1);
    augmented(0, 0) = 1.0;
    augmented.block(0, 1, 1, d) = delta.transpose();
    augmented.block(1, 0, d, 1) = delta;
    augmented.block(1, 1, d, d) = omega_bar;
    const auto llt = cholesky_or_throw(augmented, "sample_skew_normal");
    const Matrix L = llt.matrixL();

    Matrix out(n, d);
    Vector z(d + 1);
    for (int r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < d + 1; ++c) z(c) = rng.normal();
        const Vector joint = L * z;
        const double sign = joint(0) > 0.0 ? 1.0 : -1.0;
        out.row(r) =
            (mu.array() + scale.array() * sign * joint.tail(d).array()).transpose();
    }
    return out;
}

Matrix sample_mv_cauchy(int n, const Eigen::Ref<const Vector>& center, RngStream& rng) {
    const Eigen::Index d = center.size();
    Matrix out(n, d);
    for (int r = 0; r < n; ++r) {
        double w = 0.0;
        do {
            w = std::abs(rng.normal());
        } while (w < 1e-300);
        for (Eigen::Index c = 0; c < d; ++c) out(r, c) = center(c) + rng.normal() / w;
    }
    return out;
}

Matrix sample_mvt(int n, int nu, const Eigen::Ref<const Vector>& center, RngStream& rng) {
    require(nu >= 1, "sample_mvt: nu must be >= 1");
    const Eigen::Index d = center.size();
    Matrix out(n, d);
    for (int r = 0; r < n; ++r) {
        const double v = rng.chi_squared(static_cast<double>(nu));
        const double scale = std::sqrt(static_cast<double>(nu) / v);
        for (Eigen::Index c = 0; c < d; ++c) out(r, c) = center(c) + rng.normal() * scale;
    }
    return out;
}

Matrix sample_lognormal(int n, double mu_log, double sigma_log, RngStream& rng) {
    require(sigma_log > 0.0, "sample_lognormal: sigma must be positive");
    Matrix out(n, 1);
    for (int r = 0; r < n; ++r) out(r, 0) = std::exp(mu_log + sigma_log * rng.normal());
    return out;
}

Matrix sample_gumbel(int n, double mu_loc, double sigma_scale, RngStream& rng) {
    require(sigma_scale > 0.0, "sample_gumbel: scale must be positive");
    Matrix out(n, 1);
    for (int r = 0; r < n; ++r) {
        double u = 0.0;
        do {
            u = rng.uniform();
        } while (u <= 0.0);
        out(r, 0) = mu_loc - sigma_scale * std::log(-std::log(u));
    }
    return out;
}

} // namespace kbqd
