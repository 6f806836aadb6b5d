#pragma once

#include <array>
#include <string>
#include <vector>

#include "etf/frames.hpp"
#include "etf/states.hpp"

namespace etf {

// Margins inside [-kVerdictTol, kVerdictTol] report inconclusive; the
// criteria are one-sided, so ties never claim entanglement.
inline constexpr double kVerdictTol = 1e-9;

struct Verdict {
    std::string criterion;
    double statistic = 0.0;
    double bound = 0.0;
    double margin = 0.0;  // statistic - bound
    bool entangled = false;
};

// Probability matrix M[i][j] = tr[(E_i^A (x) E_j^B) rho].
struct BipartiteCorrelation {
    ComplexMatrix matrix;  // real-valued n_A x n_B
    const Povm* povm_a = nullptr;
    const Povm* povm_b = nullptr;
};

BipartiteCorrelation correlation_matrix(const DensityMatrix& rho, const Povm& pa, const Povm& pb);

// Trace-norm criterion: ||M||_1 <= sqrt((b_A c_A + 1-c_A)(b_B c_B + 1-c_B)) / (b_A b_B)
// for separable rho; a larger value certifies entanglement.
Verdict theorem1(const DensityMatrix& rho, const Povm& pa, const Povm& pb);
double theorem1_bound(const Povm& pa, const Povm& pb);

struct TripartiteCorrelation {
    std::array<std::size_t, 3> shape{};  // n_A, n_B, n_C
    std::vector<double> hyper;           // row-major m[i][j][k]

    double& at(std::size_t i, std::size_t j, std::size_t k) {
        return hyper[(i * shape[1] + j) * shape[2] + k];
    }
    double at(std::size_t i, std::size_t j, std::size_t k) const {
        return hyper[(i * shape[1] + j) * shape[2] + k];
    }
};

// m[i][j][k] = tr[rho (P_i (x) P_j (x) P_k)], via quadratic forms on the
// tensor vectors, never materializing the full Kronecker product.
TripartiteCorrelation hypermatrix(const DensityMatrix& rho, const Povm& pa, const Povm& pb,
                                  const Povm& pc);

// Frobenius-norm criterion for full separability.
Verdict theorem4(const DensityMatrix& rho, const Povm& pa, const Povm& pb, const Povm& pc);
double theorem4_bound(const Povm& pa, const Povm& pb, const Povm& pc);

// Block-diagonal unfoldings: one block per outcome of the underlined party.
struct Unfoldings {
    ComplexMatrix a_bc;  // n_A blocks of n_B x n_C slices m[i][.][.]
    ComplexMatrix b_ac;  // n_B blocks of n_A x n_C slices m[.][j][.]
    ComplexMatrix c_ab;  // n_C blocks of n_A x n_B slices m[.][.][k]
};

Unfoldings unfoldings(const TripartiteCorrelation& tc);

// Trace norm of a block-diagonal unfolding, summed block by block.
double unfolding_trace_norm(const TripartiteCorrelation& tc, int underlined_party);

// Per-partition trace-norm bounds for full separability; order a|bc, b|ac, c|ab.
std::array<Verdict, 3> theorem5(const DensityMatrix& rho, const Povm& pa, const Povm& pb,
                                const Povm& pc);
std::array<double, 3> theorem5_bounds(const Povm& pa, const Povm& pb, const Povm& pc);

}  // namespace etf
