#pragma once

#include <stdexcept>
#include <string>

namespace ckh {

/// Input could not be parsed or fails diagram validation. CLI exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};

/// A reduction exceeded its configured object cap. CLI exit code 3.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};

/// An internal invariant failed (d^2 != 0, grading drift, ...). CLI exit code 4.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& m) : std::runtime_error(m) {}
};

/// Requested window/truncation is insufficient for the computation. CLI exit code 5.
struct window_error : std::runtime_error {
    explicit window_error(const std::string& m) : std::runtime_error(m) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invariant_error(msg);
}

} // namespace ckh
