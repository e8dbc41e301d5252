#include "ramansim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ramansim/errors.hpp"

namespace ramansim::oracle {

namespace {

constexpr complexd kImag{0.0, 1.0};

std::vector<int> factor_strides(const std::vector<int>& dims) {
    std::vector<int> strides(dims.size());
    int s = 1;
    for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
        strides[f] = s;
        s *= dims[f];
    }
    return strides;
}

}  // namespace

TruncatedState::TruncatedState(int n1_max, int n2_max)
    : n1_max_(n1_max), n2_max_(n2_max),
      amp_(static_cast<std::size_t>(2) * (n1_max + 1) * (n2_max + 1), complexd{0.0}) {
    if (n1_max < 1 || n2_max < 1) throw std::invalid_argument("Fock cutoffs must be >= 1");
}

TruncatedState TruncatedState::product(std::span<const complexd> mode1,
                                       std::span<const complexd> mode2, int n1_max, int n2_max) {
    TruncatedState s(n1_max, n2_max);
    const int d1 = std::min<int>(static_cast<int>(mode1.size()), n1_max + 1);
    const int d2 = std::min<int>(static_cast<int>(mode2.size()), n2_max + 1);
    for (int n1 = 0; n1 < d1; ++n1)
        for (int n2 = 0; n2 < d2; ++n2) s.at(0, n1, n2) = mode1[n1] * mode2[n2];
    const double nrm = std::sqrt(s.norm_sq());
    if (nrm == 0.0) throw std::invalid_argument("product state has zero norm");
    for (complexd& a : s.amp_) a /= nrm;
    return s;
}

double TruncatedState::norm_sq() const {
    double s = 0.0;
    for (const complexd& a : amp_) s += std::norm(a);
    return s;
}

double TruncatedState::level2_population() const {
    double s = 0.0;
    for (int n1 = 0; n1 <= n1_max_; ++n1)
        for (int n2 = 0; n2 <= n2_max_; ++n2) s += std::norm(at(1, n1, n2));
    return s;
}

double TruncatedState::boundary_weight_n1() const {
    double s = 0.0;
    for (int level = 0; level < 2; ++level)
        for (int n2 = 0; n2 <= n2_max_; ++n2) s += std::norm(at(level, n1_max_, n2));
    return s;
}

double TruncatedState::boundary_weight_n2() const {
    double s = 0.0;
    for (int level = 0; level < 2; ++level)
        for (int n1 = 0; n1 <= n1_max_; ++n1) s += std::norm(at(level, n1, n2_max_));
    return s;
}

double BlockDecomposition::splitting(int n1, int n2) const {
    const Block& b = doublet(n1, n2);
    if (b.index2 < 0) return 0.0;
    return std::abs(b.evals[1] - b.evals[0]);
}

BlockDecomposition build_blocks(const ModelParams& params, int n1_max, int n2_max) {
    params.validate();
    if (n1_max < 1 || n2_max < 1) throw std::invalid_argument("Fock cutoffs must be >= 1");

    BlockDecomposition out;
    out.n1_max_ = n1_max;
    out.n2_max_ = n2_max;
    out.params_ = params;

    const double w1 = params.omega1 / params.g1;
    const double w2 = params.omega2 / params.g1;
    const double r = params.ratio();
    const double g1_over_delta = params.g1 / params.delta;

    // Diagonal energies divided by g1. The level-2 offset (w1 - w2) absorbs
    // the two-photon resonance condition E1 + omega1 = E2 + omega2 with E1 = 0.
    const auto diag_level1 = [&](int n1, int n2) {
        return w1 * n1 + w2 * n2 - g1_over_delta * n1;
    };
    const auto diag_level2 = [&](int j1, int j2) {
        return (w1 - w2) + w1 * j1 + w2 * j2 - r * r * g1_over_delta * j2;
    };

    const int d2 = n2_max + 1;
    std::vector<char> covered(static_cast<std::size_t>(n1_max + 1) * d2, 0);

    // One block per level-1 state, in (n1, n2) row-major order.
    for (int n1 = 0; n1 <= n1_max; ++n1)
        for (int n2 = 0; n2 <= n2_max; ++n2) {
            BlockDecomposition::Block b;
            b.index1 = (0 * (n1_max + 1) + n1) * d2 + n2;
            if (n1 >= 1 && n2 + 1 <= n2_max) {
                b.index2 = (1 * (n1_max + 1) + (n1 - 1)) * d2 + (n2 + 1);
                Eigen::Matrix2d h;
                const double coupling =
                    -r * g1_over_delta * std::sqrt(static_cast<double>(n1) * (n2 + 1));
                h << diag_level1(n1, n2), coupling, coupling, diag_level2(n1 - 1, n2 + 1);
                Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
                b.evals = es.eigenvalues();
                b.evecs = es.eigenvectors();
                covered[static_cast<std::size_t>(n1 - 1) * d2 + (n2 + 1)] = 1;
            } else {
                // No partner: either n1 = 0 (the transition annihilates the
                // state) or the partner falls outside the n2 cutoff.
                b.evals = Eigen::Vector2d(diag_level1(n1, n2), 0.0);
                b.evecs = Eigen::Matrix2d::Identity();
            }
            out.blocks_.push_back(b);
        }

    // Leftover level-2 singletons: j2 = 0 (exact) and the cutoff artifacts.
    for (int j1 = 0; j1 <= n1_max; ++j1)
        for (int j2 = 0; j2 <= n2_max; ++j2) {
            if (covered[static_cast<std::size_t>(j1) * d2 + j2]) continue;
            BlockDecomposition::Block b;
            b.index1 = (1 * (n1_max + 1) + j1) * d2 + j2;
            b.evals = Eigen::Vector2d(diag_level2(j1, j2), 0.0);
            b.evecs = Eigen::Matrix2d::Identity();
            out.blocks_.push_back(b);
        }
    return out;
}

TruncatedState evolve_state(const TruncatedState& initial, const BlockDecomposition& blocks,
                            double tau) {
    if (initial.n1_max() != blocks.n1_max() || initial.n2_max() != blocks.n2_max())
        throw std::invalid_argument("state and block decomposition use different cutoffs");
    if (std::abs(initial.norm_sq() - 1.0) > 1e-10)
        throw std::invalid_argument("initial state is not normalized");

    TruncatedState evolved = initial;
    std::span<complexd> amp = evolved.amplitudes();
    for (const BlockDecomposition::Block& b : blocks.blocks()) {
        if (b.index2 < 0) {
            amp[b.index1] *= std::polar(1.0, -b.evals[0] * tau);
            continue;
        }
        const complexd c1 = amp[b.index1];
        const complexd c2 = amp[b.index2];
        if (c1 == complexd{0.0} && c2 == complexd{0.0}) continue;
        const complexd d1 = b.evecs(0, 0) * c1 + b.evecs(1, 0) * c2;
        const complexd d2 = b.evecs(0, 1) * c1 + b.evecs(1, 1) * c2;
        const complexd e1 = d1 * std::polar(1.0, -b.evals[0] * tau);
        const complexd e2 = d2 * std::polar(1.0, -b.evals[1] * tau);
        amp[b.index1] = b.evecs(0, 0) * e1 + b.evecs(0, 1) * e2;
        amp[b.index2] = b.evecs(1, 0) * e1 + b.evecs(1, 1) * e2;
    }

    const double w1 = evolved.boundary_weight_n1();
    const double w2 = evolved.boundary_weight_n2();
    if (w1 >= kBoundaryTolerance || w2 >= kBoundaryTolerance) {
        if (w1 >= w2) throw TruncationError("n1_max", blocks.n1_max(), w1);
        throw TruncationError("n2_max", blocks.n2_max(), w2);
    }
    return evolved;
}

double flip_probability(const BlockDecomposition& blocks, int n1, int n2, double tau) {
    if (n1 < 0 || n1 > blocks.n1_max() || n2 < 0 || n2 > blocks.n2_max())
        throw std::invalid_argument("photon indices outside the truncated lattice");
    const BlockDecomposition::Block& b = blocks.doublet(n1, n2);
    if (b.index2 < 0) return 0.0;
    // <2|U|1> from the stored eigensystem.
    const complexd u21 = b.evecs(1, 0) * b.evecs(0, 0) * std::polar(1.0, -b.evals[0] * tau) +
                         b.evecs(1, 1) * b.evecs(0, 1) * std::polar(1.0, -b.evals[1] * tau);
    return std::norm(u21);
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix, std::vector<int> dims)
    : m_(std::move(matrix)), dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("density matrix needs at least one factor");
    long expected = 1;
    for (int d : dims_) {
        if (d < 1) throw std::invalid_argument("factor dimensions must be >= 1");
        expected *= d;
    }
    if (m_.rows() != expected || m_.cols() != expected)
        throw std::invalid_argument("matrix size does not match the factor dimensions");
}

DensityMatrix DensityMatrix::from_pure(const Eigen::VectorXcd& amplitudes,
                                       std::vector<int> dims) {
    return DensityMatrix(amplitudes * amplitudes.adjoint(), std::move(dims));
}

void DensityMatrix::validate(double tol, double eig_floor) const {
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(m_.trace() - complexd{1.0}) > tol)
        throw std::invalid_argument("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < eig_floor)
        throw std::invalid_argument("density matrix has a negative eigenvalue");
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    const std::vector<int>& dims = rho.dims();
    if (keep.empty()) throw std::invalid_argument("partial trace must keep at least one factor");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= static_cast<int>(dims.size()))
            throw std::invalid_argument("kept factor index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("kept factors must be strictly increasing");
    }

    std::vector<int> traced;
    for (int f = 0; f < static_cast<int>(dims.size()); ++f)
        if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

    const std::vector<int> strides = factor_strides(dims);
    std::vector<int> keep_dims, keep_strides, traced_strides;
    int keep_total = 1, traced_total = 1;
    for (int f : keep) {
        keep_dims.push_back(dims[f]);
        keep_strides.push_back(strides[f]);
        keep_total *= dims[f];
    }
    std::vector<int> traced_dims;
    for (int f : traced) {
        traced_dims.push_back(dims[f]);
        traced_strides.push_back(strides[f]);
        traced_total *= dims[f];
    }

    // Flat offset of the i-th multi-index over the given dims/strides.
    const auto offset = [](int i, const std::vector<int>& ds, const std::vector<int>& ss) {
        int off = 0;
        for (int f = static_cast<int>(ds.size()) - 1; f >= 0; --f) {
            off += (i % ds[f]) * ss[f];
            i /= ds[f];
        }
        return off;
    };

    std::vector<int> keep_off(static_cast<std::size_t>(keep_total));
    for (int i = 0; i < keep_total; ++i) keep_off[i] = offset(i, keep_dims, keep_strides);
    std::vector<int> traced_off(static_cast<std::size_t>(traced_total));
    for (int t = 0; t < traced_total; ++t) traced_off[t] = offset(t, traced_dims, traced_strides);

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep_total, keep_total);
    const Eigen::MatrixXcd& m = rho.matrix();
    for (int i = 0; i < keep_total; ++i)
        for (int j = 0; j < keep_total; ++j) {
            complexd acc{0.0};
            for (int t = 0; t < traced_total; ++t)
                acc += m(keep_off[i] + traced_off[t], keep_off[j] + traced_off[t]);
            out(i, j) = acc;
        }
    return DensityMatrix(std::move(out), std::move(keep_dims));
}

DensityMatrix partial_trace(const TruncatedState& psi, std::span<const int> keep) {
    const std::vector<int> dims{2, psi.n1_max() + 1, psi.n2_max() + 1};
    if (keep.empty()) throw std::invalid_argument("partial trace must keep at least one factor");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] > 2)
            throw std::invalid_argument("kept factor index out of range");
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("kept factors must be strictly increasing");
    }

    const std::vector<int> strides = factor_strides(dims);
    std::vector<int> keep_dims, keep_strides, traced_dims, traced_strides;
    int keep_total = 1, traced_total = 1;
    for (int f = 0; f < 3; ++f) {
        if (std::find(keep.begin(), keep.end(), f) != keep.end()) {
            keep_dims.push_back(dims[f]);
            keep_strides.push_back(strides[f]);
            keep_total *= dims[f];
        } else {
            traced_dims.push_back(dims[f]);
            traced_strides.push_back(strides[f]);
            traced_total *= dims[f];
        }
    }

    const auto offset = [](int i, const std::vector<int>& ds, const std::vector<int>& ss) {
        int off = 0;
        for (int f = static_cast<int>(ds.size()) - 1; f >= 0; --f) {
            off += (i % ds[f]) * ss[f];
            i /= ds[f];
        }
        return off;
    };

    std::vector<int> keep_off(static_cast<std::size_t>(keep_total));
    for (int i = 0; i < keep_total; ++i) keep_off[i] = offset(i, keep_dims, keep_strides);

    std::span<const complexd> amp = psi.amplitudes();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(keep_total, keep_total);
    for (int t = 0; t < traced_total; ++t) {
        const int toff = offset(t, traced_dims, traced_strides);
        for (int i = 0; i < keep_total; ++i) {
            const complexd ai = amp[keep_off[i] + toff];
            if (ai == complexd{0.0}) continue;
            for (int j = 0; j < keep_total; ++j)
                out(i, j) += ai * std::conj(amp[keep_off[j] + toff]);
        }
    }
    return DensityMatrix(std::move(out), std::move(keep_dims));
}

double pt_negativity(const DensityMatrix& rho, int transpose_factor) {
    const std::vector<int>& dims = rho.dims();
    if (dims.size() != 2)
        throw std::invalid_argument("partial-transpose negativity needs a bipartite state");
    if (transpose_factor != 0 && transpose_factor != 1)
        throw std::invalid_argument("transpose factor must be 0 or 1");

    const int da = dims[0];
    const int db = dims[1];
    const Eigen::MatrixXcd& m = rho.matrix();
    Eigen::MatrixXcd pt(da * db, da * db);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int ap = 0; ap < da; ++ap)
                for (int bp = 0; bp < db; ++bp) {
                    if (transpose_factor == 0)
                        pt(a * db + b, ap * db + bp) = m(ap * db + b, a * db + bp);
                    else
                        pt(a * db + b, ap * db + bp) = m(a * db + bp, ap * db + b);
                }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
    double neg = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()[i];
        if (ev <= kEigenvalueFloor) neg -= ev;
    }
    return neg;
}

double matrix_linear_entropy(const DensityMatrix& rho) {
    return 1.0 - rho.matrix().squaredNorm();
}

}  // namespace ramansim::oracle
