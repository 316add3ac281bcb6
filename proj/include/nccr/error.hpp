#pragma once

#include <stdexcept>
#include <string>

namespace nccr {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: malformed files, invalid cones/dimers/groups, violated
// preconditions. The CLI maps these to exit code 2.
class validation_error : public error {
  public:
    validation_error(std::string code, const std::string& what, long long index = -1)
        : error(what), code_(std::move(code)), index_(index) {}

    // Stable machine-readable code, e.g. "non_primitive_ray".
    const std::string& code() const { return code_; }
    // Offending element index where applicable, -1 otherwise.
    long long index() const { return index_; }

  private:
    std::string code_;
    long long index_;
};

// Violated internal invariant: a bug, not a result. Exit code 1 in the CLI.
class internal_error : public error {
  public:
    explicit internal_error(const std::string& what) : error("internal invariant violated: " + what) {}
};

inline void require(bool cond, const std::string& code, const std::string& what, long long index = -1) {
    if (!cond)
        throw validation_error(code, what, index);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond)
        throw internal_error(what);
}

} // namespace nccr
