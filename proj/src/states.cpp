#include "etf/states.hpp"

#include <cmath>
#include <numbers>

namespace etf {

DensityMatrix::DensityMatrix(std::vector<std::size_t> factor_dims, ComplexMatrix matrix)
    : dims_(std::move(factor_dims)), m_(std::move(matrix)) {
    std::size_t total = 1;
    for (std::size_t d : dims_) total *= d;
    if (!m_.square() || m_.rows() != total)
        throw NotDensityMatrix("matrix size does not match factor dimensions");
    if (!m_.is_hermitian())
        throw NotDensityMatrix("not Hermitian: defect " +
                               std::to_string(m_.max_hermiticity_defect()));
    const cplx tr = trace(m_);
    if (std::abs(tr - cplx(1.0)) > Tolerances::herm)
        throw NotDensityMatrix("trace != 1: " + std::to_string(tr.real()));
    const auto eig = hermitian_eigenvalues(m_);
    if (eig.front() < -Tolerances::psd)
        throw NotDensityMatrix("negative eigenvalue " + std::to_string(eig.front()));
}

double DensityMatrix::purity() const {
    // tr rho^2 = ||rho||_F^2 for Hermitian rho
    const double f = frobenius_norm(m_);
    return f * f;
}

DensityMatrix isotropic(std::size_t d, double p) {
    if (p < 0.0 || p > 1.0) throw DomainError("isotropic: p outside [0,1]");
    const std::size_t dd = d * d;
    ComplexMatrix m(dd, dd);
    const double uniform = (1.0 - p) / static_cast<double>(dd);
    for (std::size_t i = 0; i < dd; ++i) m(i, i) = uniform;
    const double pd = p / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) += pd;
    return DensityMatrix({d, d}, std::move(m));
}

DensityMatrix horodecki_3x3(double x) {
    // x in [0,1]; the open-interval endpoints are still valid density
    // matrices (continuous limits), only the bound-entanglement claim needs
    // the interior.
    if (x < 0.0 || x > 1.0) throw DomainError("horodecki_3x3: x outside [0,1]");
    const double norm = 1.0 / (1.0 + 8.0 * x);
    ComplexMatrix m(9, 9);
    // x on the diagonal except the (6,6) and (8,8) corner block
    for (std::size_t i = 0; i < 9; ++i) m(i, i) = x;
    m(0, 4) = m(4, 0) = x;
    m(0, 8) = m(8, 0) = x;
    m(4, 8) = m(8, 4) = x;
    m(6, 6) = m(8, 8) = (1.0 + x) / 2.0;
    m(6, 8) = m(8, 6) = std::sqrt(1.0 - x * x) / 2.0;
    m *= cplx(norm);
    return DensityMatrix({3, 3}, std::move(m));
}

DensityMatrix sigma_xp(double x, double p) {
    if (p < 0.0 || p > 1.0) throw DomainError("sigma_xp: p outside [0,1]");
    ComplexMatrix m = horodecki_3x3(x).matrix();
    m *= cplx(p);
    const double uniform = (1.0 - p) / 9.0;
    for (std::size_t i = 0; i < 9; ++i) m(i, i) += uniform;
    return DensityMatrix({3, 3}, std::move(m));
}

DensityMatrix antisymmetric_tripartite(double x) {
    if (x < 0.0 || x > 1.0) throw DomainError("antisymmetric_tripartite: x outside [0,1]");
    ComplexVector phi(27);
    const double s = 1.0 / std::sqrt(6.0);
    // signed permutations of (0,1,2); basis index 9a+3b+c
    const struct { std::size_t a, b, c; double sign; } terms[] = {
        {0, 1, 2, +1.0}, {0, 2, 1, -1.0}, {1, 2, 0, +1.0},
        {1, 0, 2, -1.0}, {2, 0, 1, +1.0}, {2, 1, 0, -1.0},
    };
    for (const auto& t : terms) phi[9 * t.a + 3 * t.b + t.c] = s * t.sign;

    ComplexMatrix m = ComplexMatrix::outer(phi, phi);
    m *= cplx(1.0 - x);
    const double uniform = x / 27.0;
    for (std::size_t i = 0; i < 27; ++i) m(i, i) += uniform;
    return DensityMatrix({3, 3, 3}, std::move(m));
}

DensityMatrix product_state(const std::vector<DensityMatrix>& factors) {
    if (factors.empty()) throw DomainError("product_state: no factors");
    ComplexMatrix m = factors[0].matrix();
    std::vector<std::size_t> dims;
    for (std::size_t d : factors[0].factor_dims()) dims.push_back(d);
    for (std::size_t k = 1; k < factors.size(); ++k) {
        m = kron(m, factors[k].matrix());
        for (std::size_t d : factors[k].factor_dims()) dims.push_back(d);
    }
    return DensityMatrix(std::move(dims), std::move(m));
}

double StateSampler::uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double StateSampler::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

ComplexVector StateSampler::gaussian_vector(std::size_t dim) {
    ComplexVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double re = normal();
        const double im = normal();
        v[i] = cplx(re, im);
    }
    return v;
}

DensityMatrix StateSampler::random_pure(std::size_t d) {
    if (d < 2) throw DomainError("random_pure: d < 2");
    const ComplexVector psi = gaussian_vector(d).normalized();
    return DensityMatrix({d}, ComplexMatrix::outer(psi, psi));
}

DensityMatrix StateSampler::random_density(std::size_t d) {
    if (d < 2) throw DomainError("random_density: d < 2");
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = cplx(normal(), normal());
    ComplexMatrix rho = g * dagger(g);
    rho *= cplx(1.0 / trace(rho).real());
    // symmetrize away the last-bit rounding from the product
    ComplexMatrix h = dagger(rho);
    rho += h;
    rho *= cplx(0.5);
    return DensityMatrix({d}, std::move(rho));
}

DensityMatrix StateSampler::random_product(const std::vector<std::size_t>& dims) {
    std::vector<DensityMatrix> factors;
    factors.reserve(dims.size());
    for (std::size_t d : dims) factors.push_back(random_density(d));
    return product_state(factors);
}

DensityMatrix random_pure(std::size_t d, std::uint64_t seed) {
    return StateSampler(seed).random_pure(d);
}
DensityMatrix random_density(std::size_t d, std::uint64_t seed) {
    return StateSampler(seed).random_density(d);
}
DensityMatrix random_product(const std::vector<std::size_t>& dims, std::uint64_t seed) {
    return StateSampler(seed).random_product(dims);
}

}  // namespace etf
