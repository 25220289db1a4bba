#pragma once

#include <stdexcept>
#include <string>

namespace sscat {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// pole of a reflection/transmission amplitude (the single-center SS)
struct singular_amplitude_error : error {
    using error::error;
};

// two transfer matrices evaluated at different k cannot be composed
struct incompatible_wavenumber_error : error {
    using error::error;
};

// hard wall has no transfer matrix (1/t diverges)
struct unsupported_center_error : error {
    using error::error;
};

// 2*k_c*a hits a multiple of pi in the lattice-pair inversion
struct degenerate_geometry_error : error {
    using error::error;
};

struct domain_error : error {
    using error::error;
};

struct validation_error : error {
    using error::error;
};

struct integrator_error : error {
    using error::error;
};

} // namespace sscat
