#pragma once

#include "kbqd/common.hpp"
#include "kbqd/rng.hpp"

namespace kbqd {

/// n i.i.d. draws from N_d(mu, sigma) via the Cholesky transform.
Matrix sample_mvn(int n, const Eigen::Ref<const Vector>& mu, const Eigen::Ref<const Matrix>& sigma,
                  RngStream& rng);

/// n draws from the multivariate skew-normal SN_d(mu, sigma, lambda) using
/// the conditioning representation: with sigma = S Omega_bar S (S the
/// diagonal of scale roots), delta = Omega_bar lambda / sqrt(1 + lambda'
/// Omega_bar lambda), draw (X0, X) jointly normal with unit Var(X0),
/// Cov(X0, X) = delta, Cov(X) = Omega_bar, and return mu + S * (X0 > 0 ? X : -X).
/// lambda = 0 recovers N_d(mu, sigma).
Matrix sample_skew_normal(int n, const Eigen::Ref<const Vector>& mu,
                          const Eigen::Ref<const Matrix>& sigma,
                          const Eigen::Ref<const Vector>& lambda, RngStream& rng);

/// n draws from the d-variate Cauchy centered at `center` with identity
/// scale (multivariate t with one degree of freedom).
Matrix sample_mv_cauchy(int n, const Eigen::Ref<const Vector>& center, RngStream& rng);

/// n draws from the d-variate t distribution with nu degrees of freedom,
/// identity scale: center + Z / sqrt(V / nu).
Matrix sample_mvt(int n, int nu, const Eigen::Ref<const Vector>& center, RngStream& rng);

/// n univariate log-normal draws, exp of N(mu_log, sigma_log^2).
Matrix sample_lognormal(int n, double mu_log, double sigma_log, RngStream& rng);

/// n univariate Gumbel draws mu_loc - sigma_scale * log(-log(U)).
Matrix sample_gumbel(int n, double mu_loc, double sigma_scale, RngStream& rng);

} // namespace kbqd
