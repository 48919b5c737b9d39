#pragma once

#include <cstdint>

#include "qfc/numerics.hpp"

namespace qfc {

/// Uniform quantizer over the hypercube { v : |v - center|_inf <= half_width },
/// divided into levels^dim equal boxes. Box indices are row-major mixed-radix
/// with axis 0 least significant; a transmitted symbol is the index alone.
///
/// half_width = 0 is the degenerate single-point quantizer: encode -> 0,
/// decode -> center.
class HypercubeQuantizer {
public:
    HypercubeQuantizer(Vector center, double half_width, int levels);

    const Vector& center() const { return center_; }
    double half_width() const { return half_width_; }
    int levels() const { return levels_; }
    Eigen::Index dim() const { return center_.size(); }
    std::uint64_t box_count() const { return box_count_; }

    /// Box index of v. Throws QuantizerOverflowError (with the offending axis
    /// and excess) when v lies outside the hypercube.
    std::uint64_t encode(const Vector& v) const;

    /// Center of the box with the given index.
    Vector decode(std::uint64_t index) const;

    /// mu = half_width / levels, the worst-case decode error for in-range v.
    double quantization_error_bound() const;

    /// (levels - 1) * half_width / levels, the farthest box center from the
    /// hypercube center.
    double center_offset_bound() const;

private:
    Vector center_;
    double half_width_;
    int levels_;
    std::uint64_t box_count_;
};

}  // namespace qfc
