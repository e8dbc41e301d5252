#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ramansim/model.hpp"
#include "ramansim/photon_statistics.hpp"

namespace ramansim {

using complexd = std::complex<double>;

// Rabi frequency of the invariant doublet {|1;n1,n2>, |2;n1-1,n2+1>} with the
// Stark shifts retained: [g1^2 n1 + g2^2 (n2+1)] / (2 delta). Linear in both
// photon numbers, which is what makes the dynamics periodic.
double rabi_frequency(int n1, int n2, const ModelParams& params);

// Doublet amplitudes at scaled time tau for a start in |1;n1,n2>, with the
// mean diagonal phase factored out (it cancels in every density-operator
// coefficient via the free phase nu). k2 vanishes identically for n1 = 0.
struct EvolutionCoeffs {
    complexd k1;   // amplitude staying on |1;n1,n2>
    complexd k2;   // amplitude on |2;n1-1,n2+1>
    double rabi;   // rabi_frequency(n1, n2)
};
EvolutionCoeffs evolution_coeffs(int n1, int n2, const ModelParams& params, double tau);

// Two-mode field coefficients rho_{n1 n2, m1 m2} of a state with the atom
// pinned to level 1. Dense over (dim1 x dim2)^2, so keep the dimensions small.
class FieldCoefficients {
public:
    FieldCoefficients(int dim1, int dim2);

    // Diagonal product of two photon-number distributions.
    static FieldCoefficients diagonal_product(const PhotonDistribution& mode1,
                                              const PhotonDistribution& mode2);
    // Projector onto a pure product of field amplitude vectors.
    static FieldCoefficients pure_product(std::span<const complexd> mode1,
                                          std::span<const complexd> mode2);

    int dim1() const { return dim1_; }
    int dim2() const { return dim2_; }

    complexd& operator()(int n1, int n2, int m1, int m2) { return c_[flat(n1, n2, m1, m2)]; }
    const complexd& operator()(int n1, int n2, int m1, int m2) const {
        return c_[flat(n1, n2, m1, m2)];
    }

    complexd trace() const;
    bool is_hermitian(double tol = 1e-12) const;

private:
    std::size_t flat(int n1, int n2, int m1, int m2) const {
        return ((static_cast<std::size_t>(n1) * dim2_ + n2) * dim1_ + m1) * dim2_ + m2;
    }
    int dim1_;
    int dim2_;
    std::vector<complexd> c_;
};

// Coefficients of the evolved tripartite density operator: a multiplies
// |1;n1,n2><1;m1,m2|, b multiplies |2;n1-1,n2+1><2;m1-1,m2+1| and c the
// cross projector |1;n1,n2><2;m1-1,m2+1|.
struct TripartiteCoefficients {
    FieldCoefficients a;
    FieldCoefficients b;
    FieldCoefficients c;
};
TripartiteCoefficients tripartite_coefficients(const FieldCoefficients& rho0,
                                               const ModelParams& params, double tau);

// Atomic population inversion W(tau) in [-1, 1] for a product preparation.
double atomic_inversion(const PhotonDistribution& mode1, const PhotonDistribution& mode2,
                        const ModelParams& params, double tau);
std::vector<double> inversion_series(const PhotonDistribution& mode1,
                                     const PhotonDistribution& mode2, const ModelParams& params,
                                     std::span<const double> tau_grid);

// Atom-mode1 state after tracing mode 2, for mode 1 in Fock |N> (N >= 1) and
// mode 2 in a coherent state of mean nbar (real amplitude). Supported on the
// two branches |1;N> and |2;N-1>.
struct ReducedState {
    double pop_1n = 1.0;        // weight of |1;N>
    double pop_2nm1 = 0.0;      // weight of |2;N-1>
    complexd coherence{0.0};    // coefficient of |1;N><2;N-1|
    complexd free_phase{1.0};   // free-evolution phase carried by the cross term
};
ReducedState reduced_atom_mode1(int fock_n, double nbar, const ModelParams& params, double tau,
                                double epsilon = kDefaultTailEpsilon);

// Negativity of the reduced atom-mode1 state; equals |coherence| and is
// bounded by 1/2.
double negativity(int fock_n, double nbar, const ModelParams& params, double tau,
                  double epsilon = kDefaultTailEpsilon);
std::vector<double> negativity_series(int fock_n, double nbar, const ModelParams& params,
                                      std::span<const double> tau_grid,
                                      double epsilon = kDefaultTailEpsilon);

// Linear entropy 1 - Tr[rho_A^2] of the atom alone, in [0, 1/2].
double linear_entropy(int fock_n, double nbar, const ModelParams& params, double tau,
                      double epsilon = kDefaultTailEpsilon);
std::vector<double> linear_entropy_series(int fock_n, double nbar, const ModelParams& params,
                                          std::span<const double> tau_grid,
                                          double epsilon = kDefaultTailEpsilon);

}  // namespace ramansim
