#include "etf/maps.hpp"

#include <cmath>
#include <limits>

namespace etf {

double RotationO::max_column_sum_defect() const {
    double worst = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += at(k, l);
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

double RotationO::max_orthogonality_defect() const {
    double worst = 0.0;
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t m = 0; m < n; ++m) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += at(k, l) * at(k, m);
            worst = std::max(worst, std::abs(s - (l == m ? 1.0 : 0.0)));
        }
    return worst;
}

RotationO rotation_identity(std::size_t n) {
    RotationO o;
    o.n = n;
    o.matrix.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) o.at(i, i) = 1.0;
    return o;
}

RotationO rotation_uperp(std::size_t n, double angle, std::size_t plane_i, std::size_t plane_j) {
    if (n < 3) throw DomainError("rotation_uperp: need n >= 3 for a complement plane");
    if (plane_i == plane_j || plane_i >= n - 1 || plane_j >= n - 1)
        throw DomainError("rotation_uperp: invalid complement plane axes");

    // Orthonormal basis {q_0 = u/sqrt(n), q_1, ..., q_{n-1}} via the Householder
    // reflection mapping e_0 to q_0; columns of H form the basis.
    std::vector<double> q0(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = q0[i] - (i == 0 ? 1.0 : 0.0);
    double vnorm2 = 0.0;
    for (double x : v) vnorm2 += x * x;
    auto householder_col = [&](std::size_t j) {
        std::vector<double> col(n, 0.0);
        col[j] = 1.0;
        if (vnorm2 > 0.0) {
            const double proj = 2.0 * v[j] / vnorm2;
            for (std::size_t i = 0; i < n; ++i) col[i] -= proj * v[i];
        }
        return col;
    };

    const std::vector<double> a = householder_col(plane_i + 1);
    const std::vector<double> b = householder_col(plane_j + 1);
    const double c = std::cos(angle), s = std::sin(angle);

    // O = I + (c-1)(aa^T + bb^T) + s(ba^T - ab^T): rotation in span{a,b}.
    RotationO o = rotation_identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            o.at(i, j) += (c - 1.0) * (a[i] * a[j] + b[i] * b[j]) +
                          s * (b[i] * a[j] - a[i] * b[j]);
    return o;
}

PositiveMapSpec make_map_spec(Povm povm, RotationO rotation) {
    const std::size_t d = povm.frame.d;
    const std::size_t n = povm.frame.n;
    if (d < 2) throw DomainError("make_map_spec: need d >= 2");
    if (rotation.n != n) throw DimensionMismatch("make_map_spec: rotation size != n");
    PositiveMapSpec spec;
    spec.h = std::sqrt(static_cast<double>(n) * n * n * (n - 1) /
                       (static_cast<double>(d) * d * d * (d - 1) * (d - 1) * (d - 1)));
    spec.prefactor =
        std::sqrt(static_cast<double>(d) * (d - 1) / (static_cast<double>(n) * (n - 1)));
    spec.povm = std::move(povm);
    spec.rotation = std::move(rotation);
    return spec;
}

ComplexMatrix apply_map(const PositiveMapSpec& spec, const ComplexMatrix& x) {
    const std::size_t d = spec.povm.frame.d;
    const std::size_t n = spec.povm.frame.n;
    if (!x.square() || x.rows() != d) throw DimensionMismatch("apply_map: X is not d x d");

    const cplx trx = trace(x);
    // traceless part of X
    ComplexMatrix xbar = x;
    for (std::size_t i = 0; i < d; ++i) xbar(i, i) -= trx / static_cast<double>(d);

    std::vector<cplx> overlaps(n);  // tr(Xbar P_l)
    for (std::size_t l = 0; l < n; ++l) overlaps[l] = trace(xbar * spec.povm.effects[l]);

    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i) out(i, i) = trx / static_cast<double>(d);
    for (std::size_t k = 0; k < n; ++k) {
        cplx coeff = 0.0;
        for (std::size_t l = 0; l < n; ++l) coeff += spec.rotation.at(k, l) * overlaps[l];
        coeff *= spec.h;
        if (coeff == cplx{}) continue;
        const ComplexMatrix& pk = spec.povm.effects[k];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) out(i, j) -= coeff * pk(i, j);
    }
    out *= cplx(spec.prefactor);
    return out;
}

PositivityReport positivity_probe(const PositiveMapSpec& spec, std::size_t num_samples,
                                  std::uint64_t seed) {
    const std::size_t d = spec.povm.frame.d;
    StateSampler sampler(seed);
    PositivityReport report;
    report.samples = num_samples;
    report.purity_ceiling = 1.0 / static_cast<double>(d - 1);
    report.min_eigenvalue = std::numeric_limits<double>::infinity();
    const double inv_pref = 1.0 / spec.prefactor;
    for (std::size_t s = 0; s < num_samples; ++s) {
        const ComplexVector psi = sampler.gaussian_vector(d).normalized();
        const ComplexMatrix p = ComplexMatrix::outer(psi, psi);
        const ComplexMatrix phi = apply_map(spec, p);
        const double fn = frobenius_norm(phi) * inv_pref;
        report.max_purity_stat = std::max(report.max_purity_stat, fn * fn);
        const auto eig = hermitian_eigenvalues(phi);
        report.min_eigenvalue = std::min(report.min_eigenvalue, eig.front());
    }
    return report;
}

Witness build_witness(const PositiveMapSpec& spec) {
    const std::size_t d = spec.povm.frame.d;
    const std::size_t n = spec.povm.frame.n;

    ComplexMatrix w = ComplexMatrix::identity(d * d);
    w *= cplx(1.0 / static_cast<double>(d));
    for (std::size_t k = 0; k < n; ++k) {
        const ComplexMatrix& pk = spec.povm.effects[k];
        for (std::size_t l = 0; l < n; ++l) {
            const double okl = spec.rotation.at(k, l);
            if (okl == 0.0) continue;
            const ComplexMatrix& pl = spec.povm.effects[l];
            // Psi_bar(P_l)^T = P_l^T - (I/d) tr P_l
            ComplexMatrix plbar_t(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) plbar_t(i, j) = pl(j, i);
            const cplx trl = trace(pl);
            for (std::size_t i = 0; i < d; ++i) plbar_t(i, i) -= trl / static_cast<double>(d);
            ComplexMatrix term = kron(plbar_t, pk);
            term *= cplx(-spec.h * okl);
            w += term;
        }
    }
    w *= cplx(spec.prefactor);

    Witness out;
    out.matrix = std::move(w);
    const auto eig = hermitian_eigenvalues(out.matrix);
    out.min_eigenvalue = eig.front();
    out.has_negative_eigenvalue = eig.front() < -Tolerances::psd;
    return out;
}

ComplexMatrix witness_via_choi(const PositiveMapSpec& spec) {
    const std::size_t d = spec.povm.frame.d;
    ComplexMatrix w(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            ComplexMatrix eij(d, d);
            eij(i, j) = 1.0;
            const ComplexMatrix phi = apply_map(spec, eij);
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    w(i * d + k, j * d + l) = phi(k, l);
        }
    return w;
}

double witness_expectation(const Witness& w, const DensityMatrix& rho) {
    if (rho.total_dim() != w.matrix.rows())
        throw DimensionMismatch("witness_expectation: dimension mismatch");
    const cplx t = trace(w.matrix * rho.matrix());
    if (std::abs(t.imag()) > Tolerances::herm)
        throw NotHermitian("witness_expectation: non-real expectation");
    return t.real();
}

}  // namespace etf
