#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ramansim/model.hpp"

namespace ramansim::oracle {

using complexd = std::complex<double>;

// Probability allowed on the outermost Fock layers before the truncation is
// declared too small.
inline constexpr double kBoundaryTolerance = 1e-10;

// Eigenvalues of a partial transpose above this floor count as zero noise.
inline constexpr double kEigenvalueFloor = -1e-12;

// Pure state of atom (x) mode1 (x) mode2 on a truncated Fock lattice.
// level 0 and 1 stand for the atomic levels 1 and 2.
class TruncatedState {
public:
    TruncatedState(int n1_max, int n2_max);

    // Atom in level 1 with a pure product field state; the amplitudes are
    // renormalized so the truncated vector has unit norm.
    static TruncatedState product(std::span<const complexd> mode1,
                                  std::span<const complexd> mode2, int n1_max, int n2_max);

    int n1_max() const { return n1_max_; }
    int n2_max() const { return n2_max_; }
    int size() const { return static_cast<int>(amp_.size()); }
    int flat(int level, int n1, int n2) const {
        return (level * (n1_max_ + 1) + n1) * (n2_max_ + 1) + n2;
    }

    complexd& at(int level, int n1, int n2) { return amp_[flat(level, n1, n2)]; }
    const complexd& at(int level, int n1, int n2) const { return amp_[flat(level, n1, n2)]; }
    std::span<const complexd> amplitudes() const { return amp_; }
    std::span<complexd> amplitudes() { return amp_; }

    double norm_sq() const;
    double level2_population() const;
    double boundary_weight_n1() const;  // probability on the n1 = n1_max layer
    double boundary_weight_n2() const;

private:
    int n1_max_;
    int n2_max_;
    std::vector<complexd> amp_;
};

// The effective Hamiltonian mixes |1;n1,n2> only with |2;n1-1,n2+1>, so it
// splits into 2x2 doublets plus 1x1 leftovers. Each doublet is diagonalized
// once (numerically, from the raw matrix elements) and evolution is the exact
// blockwise exponential. All energies are divided by g1; time is tau = g1 t.
class BlockDecomposition {
public:
    struct Block {
        int index1;             // flat index of the member starting in level 1 (or the singleton)
        int index2 = -1;        // flat index of the level-2 partner, -1 for 1x1 blocks
        Eigen::Vector2d evals;  // only evals[0] is meaningful for 1x1 blocks
        Eigen::Matrix2d evecs;  // real orthogonal; identity for 1x1 blocks
    };

    const std::vector<Block>& blocks() const { return blocks_; }
    int n1_max() const { return n1_max_; }
    int n2_max() const { return n2_max_; }
    const ModelParams& params() const { return params_; }

    // Doublet holding |1;n1,n2>; blocks are stored level-1-state major.
    const Block& doublet(int n1, int n2) const {
        return blocks_[static_cast<std::size_t>(n1) * (n2_max_ + 1) + n2];
    }
    // Energy gap of the (n1, n2) doublet; 0 for 1x1 blocks.
    double splitting(int n1, int n2) const;

private:
    friend BlockDecomposition build_blocks(const ModelParams&, int, int);
    std::vector<Block> blocks_;
    int n1_max_ = 0;
    int n2_max_ = 0;
    ModelParams params_;
};

BlockDecomposition build_blocks(const ModelParams& params, int n1_max, int n2_max);

// Exact evolution of a normalized state to scaled time tau. Throws
// TruncationError if the evolved state puts more than kBoundaryTolerance of
// probability on the outermost n1 or n2 layer.
TruncatedState evolve_state(const TruncatedState& initial, const BlockDecomposition& blocks,
                            double tau);

// Probability that a doublet prepared in |1;n1,n2> is found in level 2 at
// scaled time tau (zero for 1x1 blocks). Lets mixed product preparations be
// handled as weighted sums without materializing the state.
double flip_probability(const BlockDecomposition& blocks, int n1, int n2, double tau);

// Density matrix over an explicit list of tensor factors.
class DensityMatrix {
public:
    DensityMatrix(Eigen::MatrixXcd matrix, std::vector<int> dims);
    static DensityMatrix from_pure(const Eigen::VectorXcd& amplitudes, std::vector<int> dims);

    const Eigen::MatrixXcd& matrix() const { return m_; }
    const std::vector<int>& dims() const { return dims_; }
    complexd trace() const { return m_.trace(); }

    // Hermiticity / unit trace / positivity floor; throws std::invalid_argument.
    void validate(double tol = 1e-12, double eig_floor = -1e-10) const;

private:
    Eigen::MatrixXcd m_;
    std::vector<int> dims_;
};

// Reduced state on the kept factors (indices into dims, strictly increasing).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

// Same, straight from a pure tripartite state; factors are 0 = atom,
// 1 = mode 1, 2 = mode 2.
DensityMatrix partial_trace(const TruncatedState& psi, std::span<const int> keep);

// Negativity: |sum of negative eigenvalues| of the partial transpose over the
// named factor of a bipartite density matrix.
double pt_negativity(const DensityMatrix& rho, int transpose_factor);

// 1 - Tr[rho^2].
double matrix_linear_entropy(const DensityMatrix& rho);

}  // namespace ramansim::oracle
