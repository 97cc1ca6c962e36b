#include "latwave/errors.hpp"

#include <cstdio>

namespace latwave {

std::string validation_error::join(const std::vector<std::string>& issues) {
    std::string msg = "invalid configuration:";
    for (const auto& issue : issues) {
        msg += "\n  - " + issue;
    }
    return msg;
}

validation_error::validation_error(std::vector<std::string> issues)
    : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

validation_error::validation_error(const std::string& issue)
    : validation_error(std::vector<std::string>{issue}) {}

static std::string instability_message(double amplitude, double threshold, int step,
                                       double time) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "solver unstable: |u| reached %.3e (threshold %.3e) at step %d, t = %.6g; "
                  "check the time step against the stability bound",
                  amplitude, threshold, step, time);
    return buf;
}

instability_error::instability_error(double amplitude, double threshold, int step,
                                     double time)
    : std::runtime_error(instability_message(amplitude, threshold, step, time)),
      amplitude_(amplitude),
      step_(step) {}

io_error::io_error(const std::string& path, const std::string& what)
    : std::runtime_error(what + ": " + path), path_(path) {}

}  // namespace latwave
