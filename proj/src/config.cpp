#include "shiftlab/config.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shiftlab {

Caps& caps() {
    static Caps c;
    return c;
}

Caps parse_caps(const std::string& spec, Caps base) {
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad cap entry '" + item + "'");
        std::string key = item.substr(0, eq);
        std::int64_t val = 0;
        try {
            val = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad cap value in '" + item + "'");
        }
        if (val <= 0) throw std::invalid_argument("cap must be positive: '" + item + "'");
        if (key == "weyl")
            base.weyl = val;
        else if (key == "words")
            base.words = val;
        else if (key == "grid")
            base.grid = val;
        else
            throw std::invalid_argument("unknown cap '" + key + "'");
    }
    return base;
}

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace shiftlab
