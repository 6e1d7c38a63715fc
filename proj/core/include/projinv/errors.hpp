#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace projinv {

/// A point of the configuration lands on the line at infinity (lambda = 0).
class DegenerateTransform : public std::runtime_error {
public:
    explicit DegenerateTransform(int sample_index = -1)
        : std::runtime_error(sample_index < 0
                                 ? std::string("point maps to the line at infinity")
                                 : "sample " + std::to_string(sample_index) +
                                       " maps to the line at infinity"),
          index(sample_index) {}
    int index;  // 1-based sample index, -1 if not tied to a configuration
};

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

class IndexError : public std::out_of_range {
public:
    explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

class ConfigTooSmall : public std::invalid_argument {
public:
    ConfigTooSmall(int needed, int got)
        : std::invalid_argument("configuration needs at least " + std::to_string(needed) +
                                " points, got " + std::to_string(got)) {}
};

/// A denominator determinant of z_n vanishes at the configuration.
class SingularConfiguration : public std::runtime_error {
public:
    explicit SingularConfiguration(std::array<int, 3> t)
        : std::runtime_error("Delta_{" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                             "," + std::to_string(t[2]) + "} vanishes"),
          triple(t) {}
    std::array<int, 3> triple;
};

class GenericityFailure : public std::runtime_error {
public:
    explicit GenericityFailure(const std::string& what) : std::runtime_error(what) {}
};

class NonGenericConfiguration : public std::runtime_error {
public:
    explicit NonGenericConfiguration(std::vector<std::string> v)
        : std::runtime_error(join(v)), violations(std::move(v)) {}
    std::vector<std::string> violations;

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "configuration is not generic";
        for (const auto& e : v) s += "; " + e;
        return s;
    }
};

class OutOfDomain : public std::runtime_error {
public:
    explicit OutOfDomain(int keypoint_index)
        : std::runtime_error("keypoint " + std::to_string(keypoint_index) +
                             " lies outside the field domain"),
          index(keypoint_index) {}
    int index;  // 1-based
};

class MalformedImage : public std::runtime_error {
public:
    explicit MalformedImage(const std::string& what)
        : std::runtime_error("malformed PGM: " + what) {}
};

}  // namespace projinv
