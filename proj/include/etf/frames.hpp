#pragma once

#include <string>
#include <vector>

#include "etf/numerics.hpp"

namespace etf {

struct FrameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUnit : FrameError {
    std::size_t index;
    NotUnit(std::size_t i, double norm)
        : FrameError("vector " + std::to_string(i) + " has norm " + std::to_string(norm)),
          index(i) {}
};
struct NotTight : FrameError {
    double residual;
    explicit NotTight(double resid)
        : FrameError("frame operator residual " + std::to_string(resid)), residual(resid) {}
};
struct NotEquiangular : FrameError {
    std::size_t i, j;
    double measured;
    NotEquiangular(std::size_t i_, std::size_t j_, double measured_)
        : FrameError("overlap (" + std::to_string(i_) + "," + std::to_string(j_) + ") = " +
                     std::to_string(measured_)),
          i(i_), j(j_), measured(measured_) {}
};
struct TooManyVectors : FrameError {
    using FrameError::FrameError;
};

// A certified equiangular tight frame: n unit vectors in C^d with frame
// operator (n/d) I and constant pairwise squared overlap c.
struct Frame {
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<ComplexVector> vectors;
    double b = 0.0;       // tightness constant n/d
    double c = 0.0;       // squared overlap (n-d)/((n-1)d)
    double s_min = 0.0;   // frame bounds = extreme eigenvalues of the frame operator
    double s_max = 0.0;
};

struct Povm {
    Frame frame;
    std::vector<ComplexMatrix> effects;  // (d/n)|phi_i><phi_i|
};

// Certify a vector set as an ETF; throws the specific violation otherwise.
Frame validate_etf(const std::vector<ComplexVector>& vectors);

// Entrywise conjugate; an ETF again, with the same b and c.
Frame conjugate_frame(const Frame& f);

// Harmonic frame: row k is (1/sqrt d)(w^{k s})_{s in diff_set}, w = e^{2 pi i/n}.
// Equiangularity holds exactly when diff_set is a planar difference set mod n.
Frame harmonic_etf(std::size_t d, const std::vector<std::size_t>& diff_set, std::size_t n);

Povm povm_from_frame(const Frame& f);

class DensityMatrix;  // states.hpp

struct CoincidenceIndex {
    double value;  // sum_i p_i^2
    double bound;  // (b c + (1-c) tr rho^2) / b^2
};
CoincidenceIndex coincidence_index(const Povm& p, const DensityMatrix& rho);

// Built-in frames: "basis-2", "basis-3", "sic-d2", "sic-d3", "harmonic-7-3",
// and "conj:<name>" for the entrywise conjugates.
std::vector<std::string> frame_catalog();
Frame catalog_frame(const std::string& name);

std::string frame_to_json(const Frame& f);
Frame frame_from_json(const std::string& json_text);

}  // namespace etf
