#include "gsdf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gsdf {

int default_jobs()
{
    const char* env = std::getenv("GSDF_JOBS");
    if (!env) return 1;
    try {
        std::size_t used = 0;
        const int n = std::stoi(env, &used);
        if (used == std::string(env).size() && n > 0) return n;
    } catch (const std::exception&) {
    }
    return 1;
}

} // namespace gsdf
