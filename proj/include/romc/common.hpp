#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace romc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Invalid configuration or arguments (dimension mismatch, bad budgets, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure (non-finite simulator output, factorisation breakdown, ...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ConfigError(what);
}

} // namespace romc
