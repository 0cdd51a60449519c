#include "pzbridge/sweep.hpp"

#include <stdexcept>

namespace pzbridge {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("linspace needs at least 2 points");
    }
    std::vector<double> out(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = lo + static_cast<double>(i) * step;
    }
    out.back() = hi;
    return out;
}

}  // namespace pzbridge
