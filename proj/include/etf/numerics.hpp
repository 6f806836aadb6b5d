#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace etf {

using cplx = std::complex<double>;

// Shared numerical tolerances. Tests use the same constants.
struct Tolerances {
    static constexpr double herm = 1e-10;   // max |m - m^dagger| entry
    static constexpr double psd = 1e-10;    // eigenvalue clamp for PSD checks
    static constexpr double eig_resid = 1e-9;
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct NotHermitian : std::runtime_error {
    explicit NotHermitian(const std::string& what) : std::runtime_error(what) {}
};
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

class ComplexVector {
public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : entries_(dim) {}
    ComplexVector(std::initializer_list<cplx> init) : entries_(init) {}
    explicit ComplexVector(std::vector<cplx> entries) : entries_(std::move(entries)) {}

    std::size_t dim() const { return entries_.size(); }
    cplx& operator[](std::size_t i) { return entries_[i]; }
    const cplx& operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<cplx>& entries() const { return entries_; }

    double norm() const;
    ComplexVector conjugate() const;
    ComplexVector normalized() const;

private:
    std::vector<cplx> entries_;
};

// Inner product <a|b>, conjugate-linear in the first argument.
cplx inner(const ComplexVector& a, const ComplexVector& b);

// Tensor product a (x) b, index (i * b.dim() + j).
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    // |u><v| outer product.
    static ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<cplx>& entries() const { return entries_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);
    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }

    ComplexMatrix operator*(const ComplexMatrix& o) const;

    // Matrix-vector product m|v>.
    ComplexVector apply(const ComplexVector& v) const;
    // <v|m|v> as a scalar.
    cplx quadratic_form(const ComplexVector& v) const;

    double max_hermiticity_defect() const;
    bool is_hermitian(double tol = Tolerances::herm) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& m);
cplx trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

struct EigenDecomposition {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // columns, same order as values
};

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi sweeps.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
EigenDecomposition hermitian_eigensystem(const ComplexMatrix& m);

// Singular values, descending; computed from the Hermitian eigenvalues of m^dagger m.
std::vector<double> singular_values(const ComplexMatrix& m);

// Nuclear norm: sum of singular values.
double trace_norm(const ComplexMatrix& m);

}  // namespace etf
