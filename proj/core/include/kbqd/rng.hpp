#pragma once

#include <cstdint>
#include <random>

namespace kbqd {

/// Mixes words into a well-spread 64-bit value (splitmix64 finalizer chain).
/// Used to derive independent stream seeds from (seed, stream ids...).
std::uint64_t mix64(std::uint64_t x);
std::uint64_t mix64(std::uint64_t a, std::uint64_t b);
std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// A seeded random stream identified by (seed, stream_id). Equal pairs
/// reproduce the same sequence; distinct pairs give independent streams,
/// so replicated work can be keyed by index instead of execution order.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id), engine_(mix64(seed, stream_id)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Child stream keyed by this stream's identity and the child index.
    RngStream substream(std::uint64_t child) const {
        return RngStream(seed_, mix64(stream_id_, child));
    }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    double normal() { return normal_(engine_); }

    double chi_squared(double dof) {
        return std::chi_squared_distribution<double>(dof)(engine_);
    }

    /// Uniform integer in [0, bound).
    std::uint64_t uniform_int(std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

} // namespace kbqd
