#pragma once

#include <stdexcept>
#include <string>

namespace ramansim {

// Thrown when probability piles up on the edge of the truncated Fock lattice,
// i.e. the requested cutoffs are too small for the chosen preparation.
class TruncationError : public std::runtime_error {
public:
    TruncationError(std::string cutoff_name, int cutoff_value, double boundary_weight)
        : std::runtime_error("truncated space too small: boundary layer " + cutoff_name +
                             "=" + std::to_string(cutoff_value) + " carries probability " +
                             std::to_string(boundary_weight) + "; increase " + cutoff_name),
          cutoff_name_(std::move(cutoff_name)),
          cutoff_value_(cutoff_value),
          boundary_weight_(boundary_weight) {}

    const std::string& cutoff_name() const noexcept { return cutoff_name_; }
    int cutoff_value() const noexcept { return cutoff_value_; }
    double boundary_weight() const noexcept { return boundary_weight_; }

private:
    std::string cutoff_name_;
    int cutoff_value_;
    double boundary_weight_;
};

}  // namespace ramansim
