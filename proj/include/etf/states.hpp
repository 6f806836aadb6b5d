#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "etf/numerics.hpp"

namespace etf {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotDensityMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hermitian, unit-trace, PSD operator on a composite space with declared
// factor dimensions.
class DensityMatrix {
public:
    DensityMatrix(std::vector<std::size_t> factor_dims, ComplexMatrix matrix);

    const std::vector<std::size_t>& factor_dims() const { return dims_; }
    const ComplexMatrix& matrix() const { return m_; }
    std::size_t total_dim() const { return m_.rows(); }

    double purity() const;  // tr rho^2

private:
    std::vector<std::size_t> dims_;
    ComplexMatrix m_;
};

// (1-p)/d^2 I + p |psi_d+><psi_d+| on d x d, |psi_d+> = (1/sqrt d) sum |ii>.
DensityMatrix isotropic(std::size_t d, double p);

// The 3x3 bound entangled family, normalized by 1/(1+8x), x in [0,1]
// (bound entanglement holds on the open interior).
DensityMatrix horodecki_3x3(double x);

// p * horodecki_3x3(x) + (1-p) I/9.
DensityMatrix sigma_xp(double x, double p);

// (x/27) I + (1-x)|phi><phi| with |phi> the totally antisymmetric qutrit state.
DensityMatrix antisymmetric_tripartite(double x);

DensityMatrix product_state(const std::vector<DensityMatrix>& factors);

// Seeded sampling. The generator is std::mt19937_64 (bit-exact per the
// standard); Gaussians come from Box-Muller over 53-bit uniforms, so streams
// are identical across platforms and runs.
class StateSampler {
public:
    explicit StateSampler(std::uint64_t seed) : gen_(seed) {}

    ComplexVector gaussian_vector(std::size_t dim);
    DensityMatrix random_pure(std::size_t d);       // Haar via normalized Gaussian vector
    DensityMatrix random_density(std::size_t d);    // GG^dagger / tr, Hilbert-Schmidt measure
    DensityMatrix random_product(const std::vector<std::size_t>& dims);

private:
    double normal();
    double uniform01();
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

DensityMatrix random_pure(std::size_t d, std::uint64_t seed);
DensityMatrix random_density(std::size_t d, std::uint64_t seed);
DensityMatrix random_product(const std::vector<std::size_t>& dims, std::uint64_t seed);

}  // namespace etf
