#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace nids {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using IndexList = std::vector<std::size_t>;

// Thrown for contract violations and unusable input. The message names the
// offending entity so CLI users can act on it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Seeded generator with platform-independent derived distributions.
// std::uniform_int_distribution and friends are implementation-defined,
// which would break byte-identical reruns across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    // Uniform in [0, n). n must be > 0.
    std::size_t uniform_index(std::size_t n);

    // Uniform in [0, 1).
    double uniform01();

    double normal();

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

    // Derive an independent stream for a sub-task (fold, method, restart).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt);

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace nids
