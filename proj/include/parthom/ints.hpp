#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parthom {

/// Exact integer used for all counts, chain coefficients and matrix entries.
using Int = boost::multiprecision::cpp_int;

/// Nonnegative exact count (enforced by the operations that produce it).
using Count = Int;

/// Thrown when a requested ground set or enumeration exceeds the configured
/// ceiling (see max_ground_size / PARTHOM_MAX_N).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration ceiling for ground sets. Defaults to 12; the PARTHOM_MAX_N
/// environment variable overrides it (read once per process).
int max_ground_size();

/// Ground set [n] = {1, ..., n}. Construction validates against the ceiling.
struct GroundSet {
    int n;

    explicit GroundSet(int size) : n(size) {
        if (n < 0) throw std::invalid_argument("ground set size must be nonnegative");
        if (n > max_ground_size())
            throw resource_error("ground set size " + std::to_string(n) +
                                 " exceeds configured maximum " +
                                 std::to_string(max_ground_size()) +
                                 " (override with PARTHOM_MAX_N)");
    }
};

/// Narrow an Int to int64, throwing if it does not fit.
std::int64_t to_int64(const Int& v);

} // namespace parthom
