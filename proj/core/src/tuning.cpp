#include "kbqd/tuning.hpp"

#include "kbqd/distributions.hpp"
#include "kbqd/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace kbqd {

namespace {

constexpr double pi_const = 3.14159265358979323846;

// Largest skewness attainable by a skew-normal (shape -> infinity).
double sn_gamma1_max() {
    const double m2 = 2.0 / pi_const;
    return 0.5 * (4.0 - pi_const) * std::pow(m2, 1.5) / std::pow(1.0 - m2, 1.5);
}

constexpr std::uint64_t tuning_tag = 0x68'73'65'6cull; // stream namespace for select_h

} // namespace

const char* to_string(AlternativeKind k) {
    switch (k) {
        case AlternativeKind::location: return "location";
        case AlternativeKind::scale: return "scale";
        case AlternativeKind::skewness: return "skewness";
    }
    return "?";
}

AlternativeKind alternative_kind_from_string(const std::string& s) {
    if (s == "location") return AlternativeKind::location;
    if (s == "scale") return AlternativeKind::scale;
    if (s == "skewness") return AlternativeKind::skewness;
    throw std::invalid_argument("unknown alternative family: " + s);
}

AlternativeFamily AlternativeFamily::defaults(AlternativeKind kind) {
    AlternativeFamily family;
    family.kind = kind;
    switch (kind) {
        case AlternativeKind::location: family.delta_grid = {0.2, 0.3, 0.4}; break;
        case AlternativeKind::scale: family.delta_grid = {0.1, 0.3, 0.5}; break;
        case AlternativeKind::skewness: family.delta_grid = {0.2, 0.3, 0.6}; break;
    }
    family.h_grid = {0.6, 1.0, 1.4, 1.8, 2.2};
    return family;
}

void AlternativeFamily::validate() const {
    require(!delta_grid.empty() && !h_grid.empty(), "AlternativeFamily: empty grid");
    for (std::size_t i = 1; i < delta_grid.size(); ++i)
        require(delta_grid[i] > delta_grid[i - 1],
                "AlternativeFamily: delta grid must be strictly ascending");
    for (std::size_t i = 1; i < h_grid.size(); ++i)
        require(h_grid[i] > h_grid[i - 1], "AlternativeFamily: h grid must be strictly ascending");
    for (double d : delta_grid) require(d > 0.0, "AlternativeFamily: deltas must be positive");
    for (double h : h_grid) require(h > 0.0, "AlternativeFamily: h values must be positive");
}

double skewness_to_shape(double gamma1) {
    const double bound = 0.995 * sn_gamma1_max();
    const double g = std::clamp(gamma1, -bound, bound);
    const double c = std::cbrt(2.0 * std::abs(g) / (4.0 - pi_const));
    const double delta2 = 0.5 * pi_const * c * c / (1.0 + c * c);
    const double delta = std::copysign(std::sqrt(delta2), g);
    return delta / std::sqrt(1.0 - delta * delta);
}

PooledEstimates estimate_pooled_params(const Eigen::Ref<const Matrix>& pooled) {
    const Eigen::Index n = pooled.rows();
    const Eigen::Index d = pooled.cols();
    require(n > d, "estimate_pooled_params: need more observations than dimensions");

    PooledEstimates est;
    est.mu_hat = pooled.colwise().mean().transpose();
    const Matrix centered = pooled.rowwise() - est.mu_hat.transpose();
    est.sigma_hat = centered.transpose() * centered / static_cast<double>(n - 1);
    validate_spd(est.sigma_hat);

    est.lambda_hat.resize(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const double m2 = centered.col(j).array().square().mean();
        const double m3 = centered.col(j).array().cube().mean();
        const double gamma1 = m3 / std::pow(m2, 1.5);
        est.lambda_hat(j) = skewness_to_shape(gamma1);
    }
    return est;
}

namespace {

Matrix draw_null(int n, const PooledEstimates& est, RngStream& rng) {
    return sample_skew_normal(n, est.mu_hat, est.sigma_hat, est.lambda_hat, rng);
}

Matrix draw_alternative(int n, const PooledEstimates& est, AlternativeKind kind, double delta,
                        RngStream& rng) {
    const Eigen::Index d = est.mu_hat.size();
    switch (kind) {
        case AlternativeKind::location:
            return sample_skew_normal(n, est.mu_hat + delta * Vector::Ones(d), est.sigma_hat,
                                      est.lambda_hat, rng);
        case AlternativeKind::scale:
            return sample_skew_normal(n, est.mu_hat, delta * est.sigma_hat, est.lambda_hat, rng);
        case AlternativeKind::skewness:
            return sample_skew_normal(n, est.mu_hat, est.sigma_hat,
                                      est.lambda_hat + delta * Vector::Ones(d), rng);
    }
    throw std::logic_error("unreachable");
}

} // namespace

HSelectionResult select_h(const GroupedSamples& groups, const AlternativeFamily& family,
                          const ResamplingPlan& plan, int N) {
    family.validate();
    plan.validate();
    require(N >= 1, "select_h: N must be >= 1");

    const PooledEstimates est = estimate_pooled_params(groups.pooled());
    const int k = groups.k();
    const std::vector<int>& sizes = groups.sizes();

    HSelectionResult result;
    for (std::size_t di = 0; di < family.delta_grid.size(); ++di) {
        const double delta = family.delta_grid[di];
        for (std::size_t hi = 0; hi < family.h_grid.size(); ++hi) {
            const Bandwidth h(family.h_grid[hi]);
            const std::uint64_t cell = mix64(tuning_tag, di, hi);

            std::vector<int> rejections(static_cast<std::size_t>(N), 0);
            parallel_for_chunks(0, N, [&](std::int64_t lo, std::int64_t hi_rep) {
                for (std::int64_t rep = lo; rep < hi_rep; ++rep) {
                    const std::uint64_t rep_key = mix64(cell, static_cast<std::uint64_t>(rep));
                    RngStream data_stream(plan.seed, rep_key);
                    std::vector<Matrix> samples;
                    samples.reserve(static_cast<std::size_t>(k));
                    for (int g = 0; g + 1 < k; ++g)
                        samples.push_back(
                            draw_null(sizes[static_cast<std::size_t>(g)], est, data_stream));
                    samples.push_back(draw_alternative(sizes[static_cast<std::size_t>(k - 1)], est,
                                                       family.kind, delta, data_stream));
                    ResamplingPlan rep_plan = plan;
                    rep_plan.seed = mix64(plan.seed, rep_key, 1);
                    const TestResult test = critical_value(GroupedSamples(std::move(samples)), h,
                                                           rep_plan, Centering::nonparametric);
                    rejections[static_cast<std::size_t>(rep)] = test.reject_tn ? 1 : 0;
                }
            });
            int count = 0;
            for (int r : rejections) count += r;
            const double power = static_cast<double>(count) / static_cast<double>(N);
            result.power_table.push_back({h.h, delta, power});
            if (power >= 0.5) {
                result.h_star = h;
                result.achieved = true;
                return result;
            }
        }
    }

    // No cell reached the mid-power target: pick the maximum-power cell,
    // preferring the smallest h on ties.
    const PowerCell* best = nullptr;
    for (const PowerCell& cell : result.power_table) {
        if (best == nullptr || cell.power > best->power ||
            (cell.power == best->power && cell.h < best->h))
            best = &cell;
    }
    result.h_star = Bandwidth(best->h);
    result.achieved = false;
    return result;
}

} // namespace kbqd
