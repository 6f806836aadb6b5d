#include "etf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace etf {

double ComplexVector::norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

ComplexVector ComplexVector::conjugate() const {
    ComplexVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = std::conj(entries_[i]);
    return out;
}

ComplexVector ComplexVector::normalized() const {
    const double n = norm();
    ComplexVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = entries_[i] / n;
    return out;
}

cplx inner(const ComplexVector& a, const ComplexVector& b) {
    if (a.dim() != b.dim()) throw ShapeMismatch("inner: dimension mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    return out;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector& u, const ComplexVector& v) {
    ComplexMatrix m(u.dim(), v.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("operator+=: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("operator-=: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeMismatch("operator*: inner dimensions disagree");
    ComplexMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += aik * o(k, j);
        }
    return out;
}

ComplexVector ComplexMatrix::apply(const ComplexVector& v) const {
    if (cols_ != v.dim()) throw ShapeMismatch("apply: dimension mismatch");
    ComplexVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

cplx ComplexMatrix::quadratic_form(const ComplexVector& v) const {
    return inner(v, apply(v));
}

double ComplexMatrix::max_hermiticity_defect() const {
    if (!square()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return square() && max_hermiticity_defect() <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

cplx trace(const ComplexMatrix& m) {
    if (!m.square()) throw ShapeMismatch("trace: matrix not square");
    cplx s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
    return s;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& e : m.entries()) s += std::norm(e);
    return std::sqrt(s);
}

namespace {

constexpr int kMaxSweeps = 100;

// One cyclic Jacobi pass over the strict upper triangle. Returns the
// largest off-diagonal magnitude seen before rotations were applied.
double jacobi_sweep(ComplexMatrix& a, ComplexMatrix* v) {
    const std::size_t n = a.rows();
    double worst = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const cplx apq = a(p, q);
            const double r = std::abs(apq);
            worst = std::max(worst, r);
            if (r == 0.0) continue;
            const cplx phase = apq / r;
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            // tan(2*phi) = 2r / (app - aqq), stable form
            const double theta = (app - aqq) / (2.0 * r);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                             (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            // Columns of the rotation: col p = (c, conj(phase)*s), col q = (-phase*s, c).
            const cplx sp = phase * s;
            for (std::size_t k = 0; k < n; ++k) {
                const cplx akp = a(k, p);
                const cplx akq = a(k, q);
                a(k, p) = c * akp + std::conj(sp) * akq;
                a(k, q) = -sp * akp + c * akq;
            }
            for (std::size_t k = 0; k < n; ++k) {
                const cplx apk = a(p, k);
                const cplx aqk = a(q, k);
                a(p, k) = c * apk + sp * aqk;
                a(q, k) = -std::conj(sp) * apk + c * aqk;
            }
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = a(p, p).real();
            a(q, q) = a(q, q).real();
            if (v) {
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = (*v)(k, p);
                    const cplx vkq = (*v)(k, q);
                    (*v)(k, p) = c * vkp + std::conj(sp) * vkq;
                    (*v)(k, q) = -sp * vkp + c * vkq;
                }
            }
        }
    }
    return worst;
}

EigenDecomposition jacobi_eigensystem(const ComplexMatrix& m, bool want_vectors) {
    if (!m.square()) throw ShapeMismatch("hermitian_eigenvalues: matrix not square");
    if (!m.is_hermitian())
        throw NotHermitian("hermitian_eigenvalues: defect " +
                           std::to_string(m.max_hermiticity_defect()));
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v;
    if (want_vectors) v = ComplexMatrix::identity(n);
    const double scale = std::max(frobenius_norm(m), 1.0);
    bool converged = (n <= 1);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        const double off = jacobi_sweep(a, want_vectors ? &v : nullptr);
        if (off <= 1e-15 * scale) converged = true;
    }
    if (!converged) throw NoConvergence("hermitian_eigenvalues: sweep cap hit");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a(order[i], order[i]).real();
    if (want_vectors) {
        out.vectors = ComplexMatrix(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return jacobi_eigensystem(m, false).values;
}

EigenDecomposition hermitian_eigensystem(const ComplexMatrix& m) {
    return jacobi_eigensystem(m, true);
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    // One-sided Jacobi: rotate column pairs until all columns are mutually
    // orthogonal; the singular values are then the column norms. Working on
    // the matrix itself keeps small singular values accurate to machine
    // precision, which the Gram-matrix route cannot do.
    ComplexMatrix a = (m.rows() >= m.cols()) ? m : dagger(m);
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    auto col_dot = [&](std::size_t p, std::size_t q) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += std::conj(a(i, p)) * a(i, q);
        return s;
    };

    const double scale2 = [&] {
        double s = 0.0;
        for (const auto& e : a.entries()) s += std::norm(e);
        return s;
    }();
    bool converged = (cols <= 1 || scale2 == 0.0);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                const cplx apq = col_dot(p, q);
                const double r = std::abs(apq);
                double app = 0.0, aqq = 0.0;
                for (std::size_t i = 0; i < rows; ++i) {
                    app += std::norm(a(i, p));
                    aqq += std::norm(a(i, q));
                }
                // columns at the rounding floor count as zero
                if (app <= 1e-28 * scale2 || aqq <= 1e-28 * scale2) continue;
                // 1e-14 sits above the dot-product rounding floor (~sqrt(rows)*eps)
                if (r <= 1e-14 * std::sqrt(app * aqq) || r == 0.0) continue;
                converged = false;
                const cplx phase = apq / r;
                const double theta = (app - aqq) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx sp = phase * s;
                for (std::size_t i = 0; i < rows; ++i) {
                    const cplx aip = a(i, p);
                    const cplx aiq = a(i, q);
                    a(i, p) = c * aip + std::conj(sp) * aiq;
                    a(i, q) = -sp * aip + c * aiq;
                }
            }
        }
    }
    if (!converged) throw NoConvergence("singular_values: sweep cap hit");

    std::vector<double> sv(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += std::norm(a(i, j));
        sv[j] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

double trace_norm(const ComplexMatrix& m) {
    const auto sv = singular_values(m);
    double s = 0.0;
    for (double x : sv) s += x;
    return s;
}

}  // namespace etf
