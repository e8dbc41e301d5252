#include "ramansim/revivals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ramansim {

std::vector<int> detect_revival_indices(std::span<const double> values, int window,
                                        double prominence) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (static_cast<int>(values.size()) < window)
        throw std::invalid_argument("series is shorter than the detection window");
    if (!(prominence >= 0.0)) throw std::invalid_argument("prominence must be >= 0");

    const int n = static_cast<int>(values.size());
    // Compensated sum keeps the mean accurate to ~1 ulp so a constant series
    // registers as flat no matter how long it is.
    double mean = 0.0, carry = 0.0;
    for (double v : values) {
        const double y = v - carry;
        const double t = mean + y;
        carry = (t - mean) - y;
        mean = t;
    }
    mean /= n;

    std::vector<double> dev(static_cast<std::size_t>(n));
    double dev_max = 0.0, scale = 0.0;
    for (int i = 0; i < n; ++i) {
        dev[i] = std::abs(values[i] - mean);
        dev_max = std::max(dev_max, dev[i]);
        scale = std::max(scale, std::abs(values[i]));
    }
    if (dev_max <= 16.0 * std::numeric_limits<double>::epsilon() * (scale + 1.0))
        return {};  // flat series

    const double threshold = prominence * dev_max;
    std::vector<int> peaks;
    for (int i = 0; i < n; ++i) {
        if (!(dev[i] > threshold)) continue;
        const int lo = std::max(0, i - window);
        const int hi = std::min(n - 1, i + window);
        bool is_peak = true;
        for (int j = lo; j <= hi && is_peak; ++j) {
            if (j < i && dev[j] >= dev[i]) is_peak = false;  // earlier sample wins ties
            if (j > i && dev[j] > dev[i]) is_peak = false;
        }
        if (is_peak) peaks.push_back(i);
    }
    return peaks;
}

std::vector<double> detect_revivals(std::span<const double> tau, std::span<const double> values,
                                    int window, double prominence) {
    if (tau.size() != values.size())
        throw std::invalid_argument("time grid and series have different lengths");
    std::vector<double> times;
    for (int i : detect_revival_indices(values, window, prominence)) times.push_back(tau[i]);
    return times;
}

}  // namespace ramansim
