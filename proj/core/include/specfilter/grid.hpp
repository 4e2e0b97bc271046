#pragma once

#include <vector>

#include "specfilter/common.hpp"

namespace specfilter {

/// Uniform 1-D position grid of `points` sites covering [-length/2, length/2),
/// with the matching discrete momentum grid in standard DFT ordering.
/// `points` must be a power of two (>= 4) so transforms stay radix friendly.
class GridSpec {
  public:
    GridSpec(double length, int points);

    double length() const { return length_; }
    int points() const { return points_; }
    double spacing() const { return spacing_; }

    double position(int j) const { return -0.5 * length_ + spacing_ * j; }

    /// Momentum of DFT bin k: 2*pi*k~/L with k~ the signed bin index.
    /// The single Nyquist bin (k = N/2) carries -pi/dx.
    double momentum(int k) const {
        int signed_index = (k < points_ / 2) ? k : k - points_;
        return 2.0 * kPi * signed_index / length_;
    }

    std::vector<double> positions() const;
    std::vector<double> momenta() const;

    bool operator==(const GridSpec& other) const {
        return length_ == other.length_ && points_ == other.points_;
    }

  private:
    double length_;
    int points_;
    double spacing_;
};

}  // namespace specfilter
