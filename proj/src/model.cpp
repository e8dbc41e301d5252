#include "ramansim/model.hpp"

#include <stdexcept>

namespace ramansim {

void ModelParams::validate() const {
    if (!(g1 > 0.0)) throw std::invalid_argument("coupling g1 must be > 0");
    if (!(g2 > 0.0)) throw std::invalid_argument("coupling g2 must be > 0");
    if (!(delta > 0.0)) throw std::invalid_argument("detuning delta must be > 0");
}

ModelParams ModelParams::from_ratio(double r, double delta_over_g1) {
    ModelParams p{1.0, r, delta_over_g1, 0.0, 0.0};
    p.validate();
    return p;
}

}  // namespace ramansim
