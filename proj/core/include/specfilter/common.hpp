#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace specfilter {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two states on different grids were combined.
struct grid_mismatch_error : error {
    using error::error;
};

/// Bad run configuration (unknown key, missing key, malformed value).
struct config_error : error {
    config_error(const std::string& what, int line_number = 0)
        : error(what), line(line_number) {}
    int line;
};

/// An algorithm failed to converge or produced non-finite results.
struct numerical_error : error {
    using error::error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

/// The requested spectral gap vanishes (quasi-degenerate levels).
struct degenerate_spectrum_error : error {
    using error::error;
};

/// A suppression band was requested inside the window main lobe.
struct invalid_band_error : error {
    using error::error;
};

}  // namespace specfilter
