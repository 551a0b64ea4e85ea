#include "monores/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace monores {

std::size_t worker_count()
{
    if (const char* env = std::getenv("MONORES_THREADS")) {
        try {
            long long v = std::stoll(env);
            if (v > 0)
                return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            // fall through to the hardware default
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace monores
