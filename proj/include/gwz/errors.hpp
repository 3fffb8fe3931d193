#pragma once

#include <stdexcept>
#include <string>

namespace gwz {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDenominator : std::runtime_error {
    ZeroDenominator() : std::runtime_error("rational function with zero denominator") {}
};

struct ScaleError : std::runtime_error {
    explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAutomorphic : std::runtime_error {
    explicit NotAutomorphic(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gwz
