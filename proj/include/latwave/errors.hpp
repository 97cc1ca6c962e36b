// Exception types shared across the library and mapped to CLI exit codes.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace latwave {

/// Bad configuration or arguments. Carries the full list of violations so
/// a config file can be reported in one pass. Maps to exit code 1.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(std::vector<std::string> issues);
    explicit validation_error(const std::string& issue);

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues);
    std::vector<std::string> issues_;
};

/// Solver amplitude ran away (CFL violation or corrupted state).
/// Maps to exit code 2.
class instability_error : public std::runtime_error {
public:
    instability_error(double amplitude, double threshold, int step, double time);

    double amplitude() const { return amplitude_; }
    int step() const { return step_; }

private:
    double amplitude_;
    int step_;
};

/// Filesystem failure, reported with the offending path. Maps to exit code 3.
class io_error : public std::runtime_error {
public:
    io_error(const std::string& path, const std::string& what);

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace latwave
