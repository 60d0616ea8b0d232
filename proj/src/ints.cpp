#include "parthom/ints.hpp"

#include <cstdlib>
#include <limits>

namespace parthom {

int max_ground_size() {
    static const int value = [] {
        if (const char* env = std::getenv("PARTHOM_MAX_N")) {
            char* end = nullptr;
            long parsed = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && parsed >= 0 && parsed <= 30)
                return static_cast<int>(parsed);
        }
        return 12;
    }();
    return value;
}

std::int64_t to_int64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("count does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

} // namespace parthom
