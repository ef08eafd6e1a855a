#include "kbqd/groups.hpp"

namespace kbqd {

GroupedSamples::GroupedSamples(std::vector<Matrix> samples) : samples_(std::move(samples)) {
    require(samples_.size() >= 2, "GroupedSamples: need at least 2 groups");
    const Eigen::Index d = samples_.front().cols();
    require(d >= 1, "GroupedSamples: dimension must be >= 1");
    sizes_.reserve(samples_.size());
    offsets_.reserve(samples_.size());
    for (const Matrix& s : samples_) {
        require(s.cols() == d, "GroupedSamples: samples must share one dimension");
        require(s.rows() >= 2, "GroupedSamples: every group needs at least 2 observations");
        require(s.allFinite(), "GroupedSamples: non-finite observation");
        offsets_.push_back(total_n_);
        sizes_.push_back(static_cast<int>(s.rows()));
        total_n_ += static_cast<int>(s.rows());
    }
    pooled_.resize(total_n_, d);
    for (std::size_t i = 0; i < samples_.size(); ++i)
        pooled_.middleRows(offsets_[i], sizes_[i]) = samples_[i];
}

int GroupedSamples::group_of(int r) const {
    for (std::size_t i = 1; i < offsets_.size(); ++i)
        if (r < offsets_[i]) return static_cast<int>(i - 1);
    return k() - 1;
}

} // namespace kbqd
