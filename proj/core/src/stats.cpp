#include "kbqd/stats.hpp"

#include <array>
#include <cmath>

namespace kbqd {

DistanceMatrix matrix_distance(const GroupedSamples& groups, const GramMatrix& centered) {
    require(centered.n() == groups.total_n(), "matrix_distance: Gram size != pooled size");
    const int k = groups.k();

    DistanceMatrix dist;
    dist.sizes = groups.sizes();
    dist.values.resize(k, k);
    for (int i = 0; i < k; ++i) {
        const int ni = groups.sizes()[static_cast<std::size_t>(i)];
        const int oi = groups.offset(i);
        for (int j = 0; j <= i; ++j) {
            const int nj = groups.sizes()[static_cast<std::size_t>(j)];
            const int oj = groups.offset(j);
            const auto block = centered.values.block(oi, oj, ni, nj);
            double value;
            if (i == j) {
                value = (block.sum() - block.diagonal().sum()) /
                        (static_cast<double>(ni) * (ni - 1));
            } else {
                value = block.sum() / (static_cast<double>(ni) * nj);
            }
            dist.values(i, j) = value;
            dist.values(j, i) = value;
        }
    }
    return dist;
}

double trace_statistic(const DistanceMatrix& dist) { return dist.values.diagonal().sum(); }

double tn_statistic(const DistanceMatrix& dist) {
    const int k = dist.k();
    double off = 0.0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) off += dist.values(i, j);
    return (k - 1) * trace_statistic(dist) - 2.0 * off;
}

StatisticPair ksample_test_statistics(const GroupedSamples& groups, Bandwidth h,
                                      Centering centering) {
    require(centering != Centering::parametric_normal || groups.k() == 2,
            "parametric-normal centering is defined for the two-sample case only");
    GramMatrix gram = gram_matrix(groups.pooled(), h);
    GramMatrix centered;
    switch (centering) {
        case Centering::none: centered = std::move(gram); break;
        case Centering::nonparametric: centered = center_nonparametric(gram); break;
        case Centering::parametric_normal:
            centered = center_parametric_normal(gram, groups.pooled(), h,
                                                estimate_normal_params(groups.pooled()));
            break;
    }
    const DistanceMatrix dist = matrix_distance(groups, centered);
    return {trace_statistic(dist), tn_statistic(dist)};
}

namespace detail {

StatValues blockwise_statistics(const Matrix& gram, const Matrix* dist,
                                std::span<const int> idx, std::span<const int> sizes,
                                Centering centering, const AdditiveCentering* parametric,
                                const StatRequest& request) {
    const int m = static_cast<int>(idx.size());
    const int k = static_cast<int>(sizes.size());
    require(k >= 2 && m >= 2, "blockwise_statistics: need k >= 2 groups, m >= 2 rows");
    require(!request.mmd || k == 2, "mmd requires exactly two groups");
    require(!request.energy || dist != nullptr, "energy requires the distance matrix");
    require(centering != Centering::parametric_normal || parametric != nullptr,
            "parametric centering values missing");

    std::vector<int> group_of(static_cast<std::size_t>(m));
    std::vector<int> group_size(sizes.begin(), sizes.end());
    {
        int pos = 0;
        for (int g = 0; g < k; ++g) {
            require(group_size[static_cast<std::size_t>(g)] >= 2,
                    "blockwise_statistics: every group needs at least 2 rows");
            for (int c = 0; c < group_size[static_cast<std::size_t>(g)]; ++c)
                group_of[static_cast<std::size_t>(pos++)] = g;
        }
        require(pos == m, "blockwise_statistics: sizes do not sum to index count");
    }

    // Kernel sums are taken relative to gram(0,0) so that exactly-degenerate
    // data (constant Gram) yields exactly-zero centered statistics. The
    // shift cancels in the nonparametric centering and in the mmd contrast;
    // it must not be applied when raw block averages are reported.
    const bool shift_ok = centering != Centering::none &&
                          centering != Centering::parametric_normal;
    const double shift = shift_ok ? gram(0, 0) : 0.0;

    std::vector<double> row_sum;
    const bool need_rows = centering == Centering::nonparametric;
    if (need_rows) row_sum.assign(static_cast<std::size_t>(m), 0.0);

    std::vector<double> S(static_cast<std::size_t>(k * k), 0.0);
    std::vector<double> Sd;
    if (request.energy) Sd.assign(static_cast<std::size_t>(k * k), 0.0);
    std::vector<double> diag_sum(static_cast<std::size_t>(k), 0.0);

    for (int a = 0; a < m; ++a) {
        const int ia = idx[static_cast<std::size_t>(a)];
        const int ga = group_of[static_cast<std::size_t>(a)];
        const double vd = gram(ia, ia) - shift;
        S[static_cast<std::size_t>(ga * k + ga)] += vd;
        diag_sum[static_cast<std::size_t>(ga)] += vd;
        if (need_rows) row_sum[static_cast<std::size_t>(a)] += vd;
        for (int b = a + 1; b < m; ++b) {
            const int ib = idx[static_cast<std::size_t>(b)];
            const int gb = group_of[static_cast<std::size_t>(b)];
            const double v = gram(ia, ib) - shift;
            S[static_cast<std::size_t>(ga * k + gb)] += v;
            S[static_cast<std::size_t>(gb * k + ga)] += v;
            if (need_rows) {
                row_sum[static_cast<std::size_t>(a)] += v;
                row_sum[static_cast<std::size_t>(b)] += v;
            }
            if (request.energy) {
                const double dv = (*dist)(ia, ib);
                Sd[static_cast<std::size_t>(ga * k + gb)] += dv;
                Sd[static_cast<std::size_t>(gb * k + ga)] += dv;
            }
        }
    }

    // Per-group sums of the additive centering term a(.) and the constant c;
    // the centered kernel used by the distance blocks is K - a_s - a_t + c.
    std::vector<double> P(static_cast<std::size_t>(k), 0.0);
    double c = 0.0;
    if (centering == Centering::nonparametric) {
        double total = 0.0;
        double trace = 0.0;
        for (int a = 0; a < m; ++a) total += row_sum[static_cast<std::size_t>(a)];
        for (int g = 0; g < k; ++g) trace += diag_sum[static_cast<std::size_t>(g)];
        c = (total - trace) / (static_cast<double>(m) * (m - 1));
        for (int a = 0; a < m; ++a)
            P[static_cast<std::size_t>(group_of[static_cast<std::size_t>(a)])] +=
                row_sum[static_cast<std::size_t>(a)] / static_cast<double>(m);
    } else if (centering == Centering::parametric_normal) {
        require(parametric->a.size() == m, "parametric centering values: size mismatch");
        c = parametric->c;
        for (int a = 0; a < m; ++a)
            P[static_cast<std::size_t>(group_of[static_cast<std::size_t>(a)])] +=
                parametric->a(a);
    }

    StatValues out;
    if (request.kbqd) {
        double trace = 0.0;
        double off = 0.0;
        for (int i = 0; i < k; ++i) {
            const double mi = group_size[static_cast<std::size_t>(i)];
            const double dii = (S[static_cast<std::size_t>(i * k + i)] -
                                diag_sum[static_cast<std::size_t>(i)] -
                                2.0 * (mi - 1.0) * P[static_cast<std::size_t>(i)] +
                                mi * (mi - 1.0) * c) /
                               (mi * (mi - 1.0));
            trace += dii;
            for (int j = i + 1; j < k; ++j) {
                const double mj = group_size[static_cast<std::size_t>(j)];
                off += (S[static_cast<std::size_t>(i * k + j)] -
                        mj * P[static_cast<std::size_t>(i)] - mi * P[static_cast<std::size_t>(j)] +
                        mi * mj * c) /
                       (mi * mj);
            }
        }
        out.trace = trace;
        out.tn = (k - 1) * trace - 2.0 * off;
    }
    if (request.mmd) {
        const double m0 = group_size[0];
        const double m1 = group_size[1];
        const double u0 = (S[0] - diag_sum[0]) / (m0 * (m0 - 1.0));
        const double u1 = (S[static_cast<std::size_t>(k + 1)] - diag_sum[1]) / (m1 * (m1 - 1.0));
        const double v01 = S[1] / (m0 * m1);
        out.mmd = u0 + u1 - 2.0 * v01;
    }
    if (request.energy) {
        double e = 0.0;
        for (int i = 0; i < k; ++i) {
            const double mi = group_size[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                const double mj = group_size[static_cast<std::size_t>(j)];
                const double pair = 2.0 * Sd[static_cast<std::size_t>(i * k + j)] / (mi * mj) -
                                    Sd[static_cast<std::size_t>(i * k + i)] / (mi * mi) -
                                    Sd[static_cast<std::size_t>(j * k + j)] / (mj * mj);
                e += (k == 2) ? pair : (mi * mj / (mi + mj)) * pair;
            }
        }
        out.energy = e;
    }
    return out;
}

} // namespace detail

} // namespace kbqd
