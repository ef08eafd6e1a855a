#include "kbqd/resampling.hpp"

#include "kbqd/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kbqd {

const char* to_string(ResamplingMethod m) {
    switch (m) {
        case ResamplingMethod::bootstrap: return "bootstrap";
        case ResamplingMethod::permutation: return "permutation";
        case ResamplingMethod::subsampling: return "subsampling";
    }
    return "?";
}

ResamplingMethod resampling_method_from_string(const std::string& s) {
    if (s == "bootstrap") return ResamplingMethod::bootstrap;
    if (s == "permutation") return ResamplingMethod::permutation;
    if (s == "subsampling") return ResamplingMethod::subsampling;
    throw std::invalid_argument("unknown resampling method: " + s);
}

void ResamplingPlan::validate() const {
    require(B >= 1, "ResamplingPlan: B must be >= 1");
    require(b > 0.0 && b <= 1.0, "ResamplingPlan: b must be in (0, 1]");
    require(alpha > 0.0 && alpha < 1.0, "ResamplingPlan: alpha must be in (0, 1)");
}

namespace detail {

namespace {

// Without-replacement draw of the first `take` entries of a shuffled
// 0..n-1, written into out. With take == n this is a full shuffle, which
// makes permutation and b=1 subsampling literally the same draw.
void sample_without_replacement(int n, int take, RngStream& rng, std::vector<int>& out) {
    std::vector<int> scratch(static_cast<std::size_t>(n));
    std::iota(scratch.begin(), scratch.end(), 0);
    out.resize(static_cast<std::size_t>(take));
    for (int i = 0; i < take; ++i) {
        const auto j = i + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n - i)));
        std::swap(scratch[static_cast<std::size_t>(i)], scratch[static_cast<std::size_t>(j)]);
        out[static_cast<std::size_t>(i)] = scratch[static_cast<std::size_t>(i)];
    }
}

} // namespace

ResampleIndices resample_indices(int n, const std::vector<int>& sizes, ResamplingMethod method,
                                 double b, RngStream& rng) {
    ResampleIndices out;
    if (method == ResamplingMethod::bootstrap) {
        out.sizes = sizes;
        const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
        out.idx.resize(static_cast<std::size_t>(total));
        for (std::size_t p = 0; p < out.idx.size(); ++p)
            out.idx[p] = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n)));
        return out;
    }
    const double proportion = method == ResamplingMethod::permutation ? 1.0 : b;
    int take = 0;
    out.sizes.reserve(sizes.size());
    for (int ni : sizes) {
        const int mi = static_cast<int>(std::llround(proportion * ni));
        require(mi >= 2, "subsampling: round(b * n_i) must be >= 2");
        out.sizes.push_back(mi);
        take += mi;
    }
    require(take <= n, "subsampling: cannot draw more rows than the pooled sample holds");
    sample_without_replacement(n, take, rng, out.idx);
    return out;
}

double critical_from_samples(std::vector<double>& values, double alpha) {
    const auto B = static_cast<double>(values.size());
    auto rank = static_cast<std::size_t>(std::ceil((1.0 - alpha) * B));
    rank = std::min(std::max<std::size_t>(rank, 1), values.size());
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                     values.end());
    return values[rank - 1];
}

} // namespace detail

GroupedSamples resample_groups(const Eigen::Ref<const Matrix>& pooled,
                               const std::vector<int>& sizes, ResamplingMethod method, double b,
                               RngStream rng) {
    const int n = static_cast<int>(pooled.rows());
    require(std::accumulate(sizes.begin(), sizes.end(), 0) == n,
            "resample_groups: sizes must sum to the pooled row count");
    const auto rs = detail::resample_indices(n, sizes, method, b, rng);
    std::vector<Matrix> samples;
    samples.reserve(rs.sizes.size());
    int pos = 0;
    for (int mi : rs.sizes) {
        Matrix s(mi, pooled.cols());
        for (int r = 0; r < mi; ++r) s.row(r) = pooled.row(rs.idx[static_cast<std::size_t>(pos + r)]);
        samples.push_back(std::move(s));
        pos += mi;
    }
    return GroupedSamples(std::move(samples));
}

namespace {

// Additive centering terms for a resample under the normal model: density
// of each resampled point under N(mu, h^2 I + Sigma) with (mu, Sigma)
// re-estimated from the resampled pooled rows, plus the constant
// density of 0 under N(0, h^2 I + 2 Sigma).
detail::AdditiveCentering parametric_terms(const Matrix& pooled, const std::vector<int>& idx,
                                           Bandwidth h) {
    const auto m = static_cast<Eigen::Index>(idx.size());
    const Eigen::Index d = pooled.cols();
    Matrix rows(m, d);
    for (Eigen::Index r = 0; r < m; ++r) rows.row(r) = pooled.row(idx[static_cast<std::size_t>(r)]);
    const NormalModelParams params = estimate_normal_params(rows);
    validate_spd(params.sigma);
    const double h2 = h.h * h.h;
    const Matrix cov1 = h2 * Matrix::Identity(d, d) + params.sigma;
    const Matrix cov2 = h2 * Matrix::Identity(d, d) + 2.0 * params.sigma;
    detail::AdditiveCentering terms;
    terms.a.resize(m);
    for (Eigen::Index r = 0; r < m; ++r)
        terms.a(r) = mvn_density(rows.row(r).transpose(), params.mu, cov1);
    const Vector zero = Vector::Zero(d);
    terms.c = mvn_density(zero, zero, cov2);
    return terms;
}

} // namespace

TestResult critical_value(const GroupedSamples& groups, Bandwidth h, const ResamplingPlan& plan,
                          Centering centering) {
    plan.validate();
    require(centering != Centering::parametric_normal || groups.k() == 2,
            "parametric-normal centering is defined for the two-sample case only");

    const GramMatrix gram = gram_matrix(groups.pooled(), h);
    const int n = groups.total_n();

    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);

    detail::StatRequest request;
    detail::AdditiveCentering observed_terms;
    const detail::AdditiveCentering* observed_param = nullptr;
    if (centering == Centering::parametric_normal) {
        observed_terms = parametric_terms(groups.pooled(), identity, h);
        observed_param = &observed_terms;
    }
    const detail::StatValues observed = detail::blockwise_statistics(
        gram.values, nullptr, identity, groups.sizes(), centering, observed_param, request);

    std::vector<double> resampled_trace(static_cast<std::size_t>(plan.B));
    std::vector<double> resampled_tn(static_cast<std::size_t>(plan.B));

    const RngStream root(plan.seed, 0);
    parallel_for_chunks(0, plan.B, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t r = lo; r < hi; ++r) {
            RngStream stream = root.substream(static_cast<std::uint64_t>(r) + 1);
            const auto rs = detail::resample_indices(n, groups.sizes(), plan.method, plan.b, stream);
            detail::AdditiveCentering terms;
            const detail::AdditiveCentering* param = nullptr;
            if (centering == Centering::parametric_normal) {
                terms = parametric_terms(groups.pooled(), rs.idx, h);
                param = &terms;
            }
            const detail::StatValues values = detail::blockwise_statistics(
                gram.values, nullptr, rs.idx, rs.sizes, centering, param, request);
            resampled_trace[static_cast<std::size_t>(r)] = values.trace;
            resampled_tn[static_cast<std::size_t>(r)] = values.tn;
        }
    });

    auto pvalue = [&](const std::vector<double>& resampled, double obs) {
        std::size_t count = 0;
        for (double v : resampled)
            if (v >= obs) ++count;
        return (1.0 + static_cast<double>(count)) / (static_cast<double>(plan.B) + 1.0);
    };

    TestResult result;
    result.h = h;
    result.plan = plan;
    result.statistic_trace = observed.trace;
    result.statistic_tn = observed.tn;
    result.pvalue_trace = pvalue(resampled_trace, observed.trace);
    result.pvalue_tn = pvalue(resampled_tn, observed.tn);
    result.critical_trace = detail::critical_from_samples(resampled_trace, plan.alpha);
    result.critical_tn = detail::critical_from_samples(resampled_tn, plan.alpha);
    result.reject_trace = result.statistic_trace > result.critical_trace;
    result.reject_tn = result.statistic_tn > result.critical_tn;
    return result;
}

} // namespace kbqd
