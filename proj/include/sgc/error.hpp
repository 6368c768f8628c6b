#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace sgc {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed files, shape mismatches, inconsistent configuration.
struct data_error : error {
    using error::error;
};

// Non-finite values, degenerate statistics, impossible normalization.
struct numeric_error : error {
    using error::error;
};

namespace detail {

template <typename... Args>
std::string msg(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

} // namespace detail

} // namespace sgc

#define SGC_REQUIRE(cond, ...)                                        \
    do {                                                              \
        if (!(cond))                                                  \
            throw ::sgc::data_error(::sgc::detail::msg(__VA_ARGS__)); \
    } while (0)

#define SGC_REQUIRE_NUMERIC(cond, ...)                                   \
    do {                                                                 \
        if (!(cond))                                                     \
            throw ::sgc::numeric_error(::sgc::detail::msg(__VA_ARGS__)); \
    } while (0)
