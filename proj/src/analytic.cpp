#include "ramansim/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramansim {

namespace {

constexpr complexd kImag{0.0, 1.0};

void check_photon_indices(int n1, int n2) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("photon numbers must be >= 0");
}

// Coherent amplitudes c_0..c_{count-1} for real alpha = sqrt(nbar).
std::vector<double> coherent_amplitudes(double nbar, int count) {
    std::vector<double> c(static_cast<std::size_t>(count));
    c[0] = std::exp(-0.5 * nbar);
    for (int n = 1; n < count; ++n) c[n] = c[n - 1] * std::sqrt(nbar / n);
    return c;
}

struct ReducedContext {
    int fock_n;
    double nbar;
    ModelParams params;
    double epsilon;
    int n_cut;  // mode-2 sum runs over 0..n_cut, amplitudes up to n_cut+1

    ReducedContext(int N, double nb, const ModelParams& p, double eps)
        : fock_n(N), nbar(nb), params(p), epsilon(eps) {
        params.validate();
        if (N < 1)
            throw std::invalid_argument(
                "mode 1 must hold at least one photon: the |2;N-1> branch does not exist for "
                "N = 0 and the state is trivially separable");
        if (!(nb >= 0.0)) throw std::invalid_argument("mean photon number must be >= 0");
        // One extra index past the coherent cutoff because the cross term
        // couples c_{n+1} to c_n.
        n_cut = coherent_dist(nb, eps).n_max();
    }
};

}  // namespace

double rabi_frequency(int n1, int n2, const ModelParams& params) {
    check_photon_indices(n1, n2);
    params.validate();
    return (params.g1 * params.g1 * n1 + params.g2 * params.g2 * (n2 + 1)) / (2.0 * params.delta);
}

EvolutionCoeffs evolution_coeffs(int n1, int n2, const ModelParams& params, double tau) {
    const double rabi = rabi_frequency(n1, n2, params);
    const double r = params.ratio();
    const double denom = n1 + r * r * (n2 + 1);
    const double phase = rabi / params.g1 * tau;
    const double s = std::sin(phase);
    const double c = std::cos(phase);
    EvolutionCoeffs out;
    out.k1 = complexd{c, (n1 - r * r * (n2 + 1)) / denom * s};
    out.k2 = kImag * (2.0 * r * std::sqrt(static_cast<double>(n1) * (n2 + 1)) / denom * s);
    out.rabi = rabi;
    return out;
}

FieldCoefficients::FieldCoefficients(int dim1, int dim2)
    : dim1_(dim1), dim2_(dim2),
      c_(static_cast<std::size_t>(dim1) * dim2 * dim1 * dim2, complexd{0.0}) {
    if (dim1 < 1 || dim2 < 1) throw std::invalid_argument("field dimensions must be >= 1");
}

FieldCoefficients FieldCoefficients::diagonal_product(const PhotonDistribution& mode1,
                                                      const PhotonDistribution& mode2) {
    FieldCoefficients rho(mode1.n_max() + 1, mode2.n_max() + 1);
    const double norm = mode1.weight_sum() * mode2.weight_sum();
    for (int n1 = 0; n1 <= mode1.n_max(); ++n1)
        for (int n2 = 0; n2 <= mode2.n_max(); ++n2)
            rho(n1, n2, n1, n2) = mode1.weights[n1] * mode2.weights[n2] / norm;
    return rho;
}

FieldCoefficients FieldCoefficients::pure_product(std::span<const complexd> mode1,
                                                  std::span<const complexd> mode2) {
    FieldCoefficients rho(static_cast<int>(mode1.size()), static_cast<int>(mode2.size()));
    double norm = 0.0;
    for (const complexd& a : mode1)
        for (const complexd& b : mode2) norm += std::norm(a) * std::norm(b);
    if (norm == 0.0) throw std::invalid_argument("product state has zero norm");
    for (int n1 = 0; n1 < rho.dim1_; ++n1)
        for (int n2 = 0; n2 < rho.dim2_; ++n2)
            for (int m1 = 0; m1 < rho.dim1_; ++m1)
                for (int m2 = 0; m2 < rho.dim2_; ++m2)
                    rho(n1, n2, m1, m2) = mode1[n1] * mode2[n2] * std::conj(mode1[m1]) *
                                          std::conj(mode2[m2]) / norm;
    return rho;
}

complexd FieldCoefficients::trace() const {
    complexd t{0.0};
    for (int n1 = 0; n1 < dim1_; ++n1)
        for (int n2 = 0; n2 < dim2_; ++n2) t += (*this)(n1, n2, n1, n2);
    return t;
}

bool FieldCoefficients::is_hermitian(double tol) const {
    for (int n1 = 0; n1 < dim1_; ++n1)
        for (int n2 = 0; n2 < dim2_; ++n2)
            for (int m1 = 0; m1 < dim1_; ++m1)
                for (int m2 = 0; m2 < dim2_; ++m2)
                    if (std::abs((*this)(n1, n2, m1, m2) -
                                 std::conj((*this)(m1, m2, n1, n2))) > tol)
                        return false;
    return true;
}

TripartiteCoefficients tripartite_coefficients(const FieldCoefficients& rho0,
                                               const ModelParams& params, double tau) {
    params.validate();
    if (!rho0.is_hermitian()) throw std::invalid_argument("initial field state is not Hermitian");
    if (std::abs(rho0.trace() - 1.0) > 1e-10)
        throw std::invalid_argument("initial field state is not normalized");

    const int d1 = rho0.dim1();
    const int d2 = rho0.dim2();
    const double inv_two_delta = params.g1 / (2.0 * params.delta);
    const double r = params.ratio();
    // Free phase rates per unit index difference, in units of g1.
    const double nu1 = params.omega1 / params.g1 - inv_two_delta;
    const double nu2 = params.omega2 / params.g1 - r * r * inv_two_delta;

    std::vector<EvolutionCoeffs> k(static_cast<std::size_t>(d1) * d2);
    for (int n1 = 0; n1 < d1; ++n1)
        for (int n2 = 0; n2 < d2; ++n2)
            k[static_cast<std::size_t>(n1) * d2 + n2] = evolution_coeffs(n1, n2, params, tau);

    TripartiteCoefficients out{FieldCoefficients(d1, d2), FieldCoefficients(d1, d2),
                               FieldCoefficients(d1, d2)};
    for (int n1 = 0; n1 < d1; ++n1)
        for (int n2 = 0; n2 < d2; ++n2) {
            const EvolutionCoeffs& kn = k[static_cast<std::size_t>(n1) * d2 + n2];
            for (int m1 = 0; m1 < d1; ++m1)
                for (int m2 = 0; m2 < d2; ++m2) {
                    const complexd rho = rho0(n1, n2, m1, m2);
                    if (rho == complexd{0.0}) continue;
                    const EvolutionCoeffs& km = k[static_cast<std::size_t>(m1) * d2 + m2];
                    const double nu = (m1 - n1) * nu1 + (m2 - n2) * nu2;
                    const complexd base = rho * std::polar(1.0, nu * tau);
                    out.a(n1, n2, m1, m2) = base * kn.k1 * std::conj(km.k1);
                    out.b(n1, n2, m1, m2) = base * kn.k2 * std::conj(km.k2);
                    out.c(n1, n2, m1, m2) = base * kn.k1 * std::conj(km.k2);
                }
        }
    return out;
}

double atomic_inversion(const PhotonDistribution& mode1, const PhotonDistribution& mode2,
                        const ModelParams& params, double tau) {
    const double grid[1] = {tau};
    return inversion_series(mode1, mode2, params, grid)[0];
}

std::vector<double> inversion_series(const PhotonDistribution& mode1,
                                     const PhotonDistribution& mode2, const ModelParams& params,
                                     std::span<const double> tau_grid) {
    params.validate();
    const double r = params.ratio();
    const double inv_two_delta = params.g1 / (2.0 * params.delta);

    // Flatten the double sum once: amplitude and scaled frequency per term.
    std::vector<double> amp, freq;
    amp.reserve(mode1.weights.size() * mode2.weights.size());
    freq.reserve(amp.capacity());
    for (int n1 = 1; n1 <= mode1.n_max(); ++n1) {       // n1 = 0 cannot flip
        const double p1 = mode1.weights[n1];
        if (p1 == 0.0) continue;
        for (int n2 = 0; n2 <= mode2.n_max(); ++n2) {
            const double p2 = mode2.weights[n2];
            if (p2 == 0.0) continue;
            const double denom = n1 + r * r * (n2 + 1);
            amp.push_back(8.0 * p1 * p2 * r * r * n1 * (n2 + 1) / (denom * denom));
            freq.push_back(denom * inv_two_delta);
        }
    }

    std::vector<double> w(tau_grid.size());
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        double acc = 0.0;
        for (std::size_t t = 0; t < amp.size(); ++t) {
            const double s = std::sin(freq[t] * tau_grid[i]);
            acc += amp[t] * s * s;
        }
        w[i] = std::clamp(acc - 1.0, -1.0, 1.0);
    }
    return w;
}

ReducedState reduced_atom_mode1(int fock_n, double nbar, const ModelParams& params, double tau,
                                double epsilon) {
    const ReducedContext ctx(fock_n, nbar, params, epsilon);
    const int n_cut = ctx.n_cut;
    const std::vector<double> c = coherent_amplitudes(nbar, n_cut + 2);

    const double r = params.ratio();
    ReducedState out;
    double p1 = 0.0, p2 = 0.0, weight_sum = 0.0;
    complexd cross{0.0};
    EvolutionCoeffs next = evolution_coeffs(fock_n, 0, params, tau);
    for (int n = 0; n <= n_cut; ++n) {
        const EvolutionCoeffs cur = next;
        next = evolution_coeffs(fock_n, n + 1, params, tau);
        const double pn = c[n] * c[n];
        weight_sum += pn;
        p1 += pn * std::norm(cur.k1);
        p2 += pn * std::norm(cur.k2);
        cross += c[n + 1] * c[n] * next.k1 * std::conj(cur.k2);
    }
    const double nu2 = params.omega2 / params.g1 - r * r * params.g1 / (2.0 * params.delta);
    out.free_phase = std::polar(1.0, -nu2 * tau);
    // Renormalize the truncated coherent weights so the branch populations
    // form an exact state (pop_1n = 1 bit-exactly at tau = 0).
    out.pop_1n = p1 / weight_sum;
    out.pop_2nm1 = p2 / weight_sum;
    out.coherence = out.free_phase * cross / weight_sum;
    return out;
}

double negativity(int fock_n, double nbar, const ModelParams& params, double tau, double epsilon) {
    const double grid[1] = {tau};
    return negativity_series(fock_n, nbar, params, grid, epsilon)[0];
}

std::vector<double> negativity_series(int fock_n, double nbar, const ModelParams& params,
                                      std::span<const double> tau_grid, double epsilon) {
    const ReducedContext ctx(fock_n, nbar, params, epsilon);
    const int n_cut = ctx.n_cut;
    const double r = params.ratio();
    const double inv_two_delta = params.g1 / (2.0 * params.delta);
    const double nn = static_cast<double>(fock_n);

    // Per-index constants of the two sums.
    std::vector<double> pois(static_cast<std::size_t>(n_cut) + 1);
    std::vector<double> ratio_term(pois.size()), inv_den(pois.size());
    std::vector<double> om(static_cast<std::size_t>(n_cut) + 2);
    {
        const std::vector<double> c = coherent_amplitudes(nbar, n_cut + 1);
        double weight_sum = 0.0;
        for (int n = 0; n <= n_cut; ++n) {
            pois[n] = c[n] * c[n];
            weight_sum += pois[n];
            ratio_term[n] = (nn - r * r * (n + 2)) / (nn + r * r * (n + 2));
            inv_den[n] = 1.0 / (nn + r * r * (n + 1));
        }
        // Same normalization of the truncated weights as reduced_atom_mode1,
        // keeping negativity == |coherence| at the rounding level.
        for (int n = 0; n <= n_cut; ++n) pois[n] /= weight_sum;
        for (int n = 0; n <= n_cut + 1; ++n) om[n] = (nn + r * r * (n + 1)) * inv_two_delta;
    }
    const double prefactor = 2.0 * r * std::sqrt(nbar * nn);

    std::vector<double> out(tau_grid.size());
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        const double tau = tau_grid[i];
        double s_im = 0.0, s_re = 0.0;
        double sin_next = std::sin(om[0] * tau);
        for (int n = 0; n <= n_cut; ++n) {
            const double sin_n = sin_next;
            sin_next = std::sin(om[n + 1] * tau);
            const double cos_next = std::cos(om[n + 1] * tau);
            s_im += pois[n] * ratio_term[n] * sin_n * sin_next * inv_den[n];
            s_re += pois[n] * sin_n * cos_next * inv_den[n];
        }
        out[i] = std::min(prefactor * std::sqrt(s_im * s_im + s_re * s_re), 0.5);
    }
    return out;
}

double linear_entropy(int fock_n, double nbar, const ModelParams& params, double tau,
                      double epsilon) {
    const double grid[1] = {tau};
    return linear_entropy_series(fock_n, nbar, params, grid, epsilon)[0];
}

std::vector<double> linear_entropy_series(int fock_n, double nbar, const ModelParams& params,
                                          std::span<const double> tau_grid, double epsilon) {
    const ReducedContext ctx(fock_n, nbar, params, epsilon);
    const int n_cut = ctx.n_cut;
    const double r = params.ratio();
    const double inv_two_delta = params.g1 / (2.0 * params.delta);
    const double nn = static_cast<double>(fock_n);

    std::vector<double> amp(static_cast<std::size_t>(n_cut) + 1);
    std::vector<double> om(amp.size());
    {
        const std::vector<double> c = coherent_amplitudes(nbar, n_cut + 1);
        double weight_sum = 0.0;
        for (int n = 0; n <= n_cut; ++n) weight_sum += c[n] * c[n];
        for (int n = 0; n <= n_cut; ++n) {
            const double denom = nn + r * r * (n + 1);
            amp[n] = c[n] * c[n] / weight_sum * 4.0 * r * r * nn * (n + 1) / (denom * denom);
            om[n] = denom * inv_two_delta;
        }
    }

    std::vector<double> out(tau_grid.size());
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        double p2 = 0.0;
        for (std::size_t n = 0; n < amp.size(); ++n) {
            const double s = std::sin(om[n] * tau_grid[i]);
            p2 += amp[n] * s * s;
        }
        out[i] = 2.0 * p2 - 2.0 * p2 * p2;
    }
    return out;
}

}  // namespace ramansim
