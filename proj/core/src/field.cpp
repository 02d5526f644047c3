#include "mixbound/field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mixbound {

void check_finite(const ScalarSamples& s, const char* what) {
    for (double v : s.values) {
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << what << ": non-finite sample value";
            throw std::invalid_argument(os.str());
        }
    }
}

void check_finite(const SpectralField& f, const char* what) {
    for (const auto& c : f.coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            std::ostringstream os;
            os << what << ": non-finite spectral coefficient";
            throw std::invalid_argument(os.str());
        }
    }
}

}  // namespace mixbound
