// Error types shared by the vmb library. Everything derives from
// std::runtime_error so callers can catch broadly; the CLI maps each
// type to a distinct exit code.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vmb {

// Bad configuration or violated precondition. Carries the full list of
// violations so a config file can be fixed in one pass.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
    explicit validation_error(const std::string& msg)
        : validation_error(std::vector<std::string>{msg}) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty()) out += "; ";
            out += s;
        }
        return out.empty() ? std::string("validation failed") : out;
    }
    std::vector<std::string> violations_;
};

// Record too short, grids unresolvable, missing modulation line, ...
class resolution_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Singular matrices and other numerical breakdowns on unphysical input.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File and format problems.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Non-fatal diagnostics (e.g. a "small" parameter outside the
// first-order regime). Kept as a function so tests can silence it.
inline bool& warnings_enabled() {
    static bool enabled = true;
    return enabled;
}

void warn(const std::string& msg);

} // namespace detail
} // namespace vmb

#include <iostream>

inline void vmb::detail::warn(const std::string& msg) {
    if (warnings_enabled()) std::cerr << "[vmb] warning: " << msg << "\n";
}
