#include "lywb/parallel.hpp"

#include <cstdlib>
#include <string>

namespace lywb {

int worker_count() {
    if (const char* env = std::getenv("LYWB_THREADS")) {
        try {
            int n = std::stoi(env);
            return n < 1 ? 1 : n;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace lywb
