#pragma once

// Test-only oracles, kept independent of the library's fast paths.

#include "etf/criteria.hpp"
#include "etf/frames.hpp"
#include "etf/states.hpp"

namespace etf::test {

// Hypermatrix entry by materializing the full Kronecker product and taking
// the trace against rho. The slow route the library deliberately avoids.
inline TripartiteCorrelation dense_hypermatrix(const DensityMatrix& rho, const Povm& pa,
                                               const Povm& pb, const Povm& pc) {
    TripartiteCorrelation tc;
    tc.shape = {pa.frame.n, pb.frame.n, pc.frame.n};
    tc.hyper.resize(tc.shape[0] * tc.shape[1] * tc.shape[2]);
    for (std::size_t i = 0; i < tc.shape[0]; ++i)
        for (std::size_t j = 0; j < tc.shape[1]; ++j)
            for (std::size_t k = 0; k < tc.shape[2]; ++k) {
                const ComplexMatrix op =
                    kron(kron(pa.effects[i], pb.effects[j]), pc.effects[k]);
                tc.at(i, j, k) = trace(rho.matrix() * op).real();
            }
    return tc;
}

// Cholesky of m + shift*I. Success certifies min eigenvalue >= -shift without
// going through the Jacobi eigensolver.
inline bool psd_within_shift(const ComplexMatrix& m, double shift) {
    const std::size_t n = m.rows();
    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        cplx diag = m(j, j) + shift;
        for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * std::conj(l(j, k));
        if (diag.real() < 0.0) return false;
        const double ljj = std::sqrt(diag.real());
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = (ljj > 0.0) ? s / ljj : cplx(0.0);
        }
    }
    return true;
}

// Random tripartite (generally entangled) state on 3x3x3.
inline DensityMatrix random_tripartite(std::uint64_t seed) {
    StateSampler sampler(seed);
    return DensityMatrix({3, 3, 3}, sampler.random_density(27).matrix());
}

// Seeded separable mixture sum_k p_k rho_A^k (x) rho_B^k with <= max_terms terms.
inline DensityMatrix random_separable_bipartite(std::size_t d, std::size_t max_terms,
                                                std::uint64_t seed) {
    StateSampler sampler(seed);
    const std::size_t terms = 1 + seed % max_terms;
    std::vector<double> weights(terms);
    double wsum = 0.0;
    for (auto& w : weights) {
        // strictly positive weights from the Gaussian stream
        double g = 0.0;
        while (g <= 0.0) {
            const auto v = sampler.gaussian_vector(1);
            g = std::norm(v[0]);
        }
        w = g;
        wsum += g;
    }
    ComplexMatrix m(d * d, d * d);
    for (std::size_t k = 0; k < terms; ++k) {
        ComplexMatrix term = kron(sampler.random_density(d).matrix(),
                                  sampler.random_density(d).matrix());
        term *= cplx(weights[k] / wsum);
        m += term;
    }
    return DensityMatrix({d, d}, std::move(m));
}

}  // namespace etf::test
