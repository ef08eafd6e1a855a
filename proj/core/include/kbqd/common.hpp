#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace kbqd {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Gaussian kernel tuning parameter. Must be positive and finite.
struct Bandwidth {
    double h;

    explicit Bandwidth(double value) : h(value) {
        if (!(std::isfinite(value) && value > 0.0))
            throw std::invalid_argument("Bandwidth: h must be positive and finite, got " +
                                        std::to_string(value));
    }
};

enum class Centering { none, nonparametric, parametric_normal };

inline const char* to_string(Centering c) {
    switch (c) {
        case Centering::none: return "none";
        case Centering::nonparametric: return "nonparametric";
        case Centering::parametric_normal: return "parametric";
    }
    return "?";
}

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

} // namespace kbqd
