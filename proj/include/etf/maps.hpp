#pragma once

#include <cstdint>
#include <vector>

#include "etf/frames.hpp"
#include "etf/states.hpp"

namespace etf {

// Real orthogonal matrix whose columns each sum to 1. Both conditions are
// what the map construction needs from the rotation.
struct RotationO {
    std::size_t n = 0;
    std::vector<double> matrix;  // row-major n x n

    double& at(std::size_t k, std::size_t l) { return matrix[k * n + l]; }
    double at(std::size_t k, std::size_t l) const { return matrix[k * n + l]; }

    double max_column_sum_defect() const;  // vs. 1
    double max_orthogonality_defect() const;  // vs. O^T O = I
};

RotationO rotation_identity(std::size_t n);

// Fixes the normalized all-ones vector and rotates by angle in one plane of
// its orthogonal complement (plane indices select two complement axes).
RotationO rotation_uperp(std::size_t n, double angle, std::size_t plane_i = 0,
                         std::size_t plane_j = 1);

struct PositiveMapSpec {
    Povm povm;
    RotationO rotation;
    double h = 0.0;          // sqrt(n^3 (n-1) / (d^3 (d-1)^3))
    double prefactor = 0.0;  // sqrt(d (d-1) / (n (n-1)))
};

PositiveMapSpec make_map_spec(Povm povm, RotationO rotation);

// Phi(X) = prefactor [ (I/d) tr X - h sum_{k,l} O_{kl} tr[(X - (I/d) tr X) P_l] P_k ].
// Note tr Phi(X) = prefactor * tr X; the trace scales, it is not preserved.
ComplexMatrix apply_map(const PositiveMapSpec& spec, const ComplexMatrix& x);

struct PositivityReport {
    std::size_t samples = 0;
    double max_purity_stat = 0.0;   // max over samples of tr[(Phi(P)/prefactor)^2]
    double purity_ceiling = 0.0;    // 1/(d-1), the sufficient-positivity threshold
    double min_eigenvalue = 0.0;    // min over samples of the spectrum of Phi(P)
};

// Samples Haar-random pure states and probes the positivity of the map.
PositivityReport positivity_probe(const PositiveMapSpec& spec, std::size_t num_samples,
                                  std::uint64_t seed);

struct Witness {
    ComplexMatrix matrix;  // d^2 x d^2, Hermitian
    bool has_negative_eigenvalue = false;
    double min_eigenvalue = 0.0;
};

// W = prefactor [ (1/d) I (x) I - h sum_{k,l} O_{kl} (Psi_bar(P_l))^T (x) P_k ].
Witness build_witness(const PositiveMapSpec& spec);

// Independent route: W = sum_{i,j} |i><j| (x) Phi(|i><j|).
ComplexMatrix witness_via_choi(const PositiveMapSpec& spec);

double witness_expectation(const Witness& w, const DensityMatrix& rho);

}  // namespace etf
