#include "mixbound/grid.hpp"

#include <sstream>
#include <stdexcept>

namespace mixbound {

Grid make_grid(int dim, int n, double half_width) {
    if (dim != 2 && dim != 3) {
        std::ostringstream os;
        os << "make_grid: dim must be 2 or 3, got " << dim;
        throw std::invalid_argument(os.str());
    }
    if (n < 16 || n % 2 != 0) {
        std::ostringstream os;
        os << "make_grid: n must be even and >= 16, got " << n;
        throw std::invalid_argument(os.str());
    }
    if (!(half_width > 0.0)) {
        std::ostringstream os;
        os << "make_grid: half_width must be positive, got " << half_width;
        throw std::invalid_argument(os.str());
    }
    return Grid{dim, n, half_width};
}

}  // namespace mixbound
