#pragma once

#include <span>
#include <vector>

namespace ramansim {

// Revival peaks of an inversion series: indices where |w - mean(w)| attains
// the maximum of its window (half-width `window` samples, first index wins on
// ties) and exceeds `prominence` times the global deviation maximum.
std::vector<int> detect_revival_indices(std::span<const double> values, int window,
                                        double prominence = 0.5);

// Same peaks mapped onto the time grid.
std::vector<double> detect_revivals(std::span<const double> tau, std::span<const double> values,
                                    int window, double prominence = 0.5);

}  // namespace ramansim
