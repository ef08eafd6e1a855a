#pragma once

#include "kbqd/common.hpp"

#include <vector>

namespace kbqd {

/// k samples sharing one dimension d. The pooled view concatenates the
/// samples in order, so pooled row offsets identify each group's block.
class GroupedSamples {
  public:
    explicit GroupedSamples(std::vector<Matrix> samples);

    int k() const { return static_cast<int>(samples_.size()); }
    Eigen::Index d() const { return samples_.front().cols(); }
    const std::vector<Matrix>& samples() const { return samples_; }
    const Matrix& sample(int i) const { return samples_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& sizes() const { return sizes_; }
    int total_n() const { return total_n_; }
    const Matrix& pooled() const { return pooled_; }

    /// Pooled-row offset of group i's block.
    int offset(int i) const { return offsets_[static_cast<std::size_t>(i)]; }

    /// Group owning pooled row r.
    int group_of(int r) const;

  private:
    std::vector<Matrix> samples_;
    std::vector<int> sizes_;
    std::vector<int> offsets_;
    int total_n_ = 0;
    Matrix pooled_;
};

} // namespace kbqd
