#include "etf/frames.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "etf/states.hpp"

namespace etf {

namespace {

constexpr double kUnitTol = 1e-10;
constexpr double kTightTol = 1e-9;
constexpr double kAngleTol = 1e-9;

}  // namespace

Frame validate_etf(const std::vector<ComplexVector>& vectors) {
    const std::size_t n = vectors.size();
    if (n == 0) throw FrameError("empty vector set");
    const std::size_t d = vectors[0].dim();
    if (d == 0) throw FrameError("zero-dimensional vectors");
    for (const auto& v : vectors)
        if (v.dim() != d) throw FrameError("inconsistent vector dimensions");
    if (n < d) throw FrameError("fewer vectors than the dimension");
    if (n > d * d) throw TooManyVectors("n > d^2 is impossible for an ETF");

    for (std::size_t i = 0; i < n; ++i) {
        const double norm = vectors[i].norm();
        if (std::abs(norm - 1.0) > kUnitTol) throw NotUnit(i, norm);
    }

    Frame f;
    f.d = d;
    f.n = n;
    f.vectors = vectors;
    f.b = static_cast<double>(n) / static_cast<double>(d);
    f.c = (n > 1) ? static_cast<double>(n - d) / (static_cast<double>(n - 1) * d) : 0.0;

    ComplexMatrix s(d, d);
    for (const auto& v : vectors) s += ComplexMatrix::outer(v, v);
    ComplexMatrix resid = s;
    resid -= cplx(f.b) * ComplexMatrix::identity(d);
    const double tight_resid = frobenius_norm(resid);
    if (tight_resid > kTightTol) throw NotTight(tight_resid);

    const auto eig = hermitian_eigenvalues(s);
    f.s_min = eig.front();
    f.s_max = eig.back();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double overlap = std::norm(inner(vectors[i], vectors[j]));
            if (std::abs(overlap - f.c) > kAngleTol) throw NotEquiangular(i, j, overlap);
        }
    return f;
}

Frame conjugate_frame(const Frame& f) {
    std::vector<ComplexVector> conj;
    conj.reserve(f.n);
    for (const auto& v : f.vectors) conj.push_back(v.conjugate());
    return validate_etf(conj);
}

Frame harmonic_etf(std::size_t d, const std::vector<std::size_t>& diff_set, std::size_t n) {
    if (diff_set.size() != d) throw FrameError("difference set size must equal d");
    if (n == 0) throw FrameError("n must be positive");
    if (d == 1 && n == 1) {
        // trivial single-vector frame
        Frame f;
        f.d = 1;
        f.n = 1;
        f.vectors = {ComplexVector{cplx(1.0)}};
        f.b = 1.0;
        f.c = 0.0;
        f.s_min = f.s_max = 1.0;
        return f;
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<ComplexVector> vectors;
    vectors.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        ComplexVector v(d);
        for (std::size_t a = 0; a < d; ++a) {
            const double arg = 2.0 * std::numbers::pi *
                               static_cast<double>((k * diff_set[a]) % n) / static_cast<double>(n);
            v[a] = scale * cplx(std::cos(arg), std::sin(arg));
        }
        vectors.push_back(v);
    }
    return validate_etf(vectors);
}

Povm povm_from_frame(const Frame& f) {
    Povm p;
    p.frame = f;
    const double w = static_cast<double>(f.d) / static_cast<double>(f.n);
    p.effects.reserve(f.n);
    for (const auto& v : f.vectors) {
        ComplexMatrix e = ComplexMatrix::outer(v, v);
        e *= cplx(w);
        p.effects.push_back(std::move(e));
    }
    return p;
}

CoincidenceIndex coincidence_index(const Povm& p, const DensityMatrix& rho) {
    if (rho.total_dim() != p.frame.d)
        throw DimensionMismatch("coincidence_index: state dimension != frame dimension");
    const double w = static_cast<double>(p.frame.d) / static_cast<double>(p.frame.n);
    double sum_sq = 0.0;
    for (const auto& v : p.frame.vectors) {
        const double pi = w * rho.matrix().quadratic_form(v).real();
        sum_sq += pi * pi;
    }
    const double b = p.frame.b;
    const double c = p.frame.c;
    const double bound = (b * c + (1.0 - c) * rho.purity()) / (b * b);
    return {sum_sq, bound};
}

namespace {

Frame basis_frame(std::size_t d) {
    std::vector<ComplexVector> vectors;
    for (std::size_t i = 0; i < d; ++i) {
        ComplexVector v(d);
        v[i] = 1.0;
        vectors.push_back(v);
    }
    return validate_etf(vectors);
}

// The nine qutrit vectors built from w = e^{2 pi i / 3}; a SIC POVM.
Frame sic_d3() {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const cplx w2 = w * w;
    const double s = 1.0 / std::sqrt(2.0);
    auto v = [&](cplx a, cplx b, cplx c) {
        return ComplexVector{s * a, s * b, s * c};
    };
    std::vector<ComplexVector> vectors = {
        v(0.0, 1.0, -1.0), v(-1.0, 0.0, 1.0), v(1.0, -1.0, 0.0),
        v(0.0, w, -w2),    v(-1.0, 0.0, w2),  v(1.0, -w, 0.0),
        v(0.0, w2, -w),    v(-1.0, 0.0, w),   v(1.0, -w2, 0.0),
    };
    return validate_etf(vectors);
}

// Tetrahedral qubit SIC: |0>, and (|0> + sqrt(2) w^k |1>)/sqrt(3).
Frame sic_d2() {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const double a = 1.0 / std::sqrt(3.0);
    const double b = std::sqrt(2.0 / 3.0);
    std::vector<ComplexVector> vectors = {
        ComplexVector{1.0, 0.0},
        ComplexVector{a, b},
        ComplexVector{a, b * w},
        ComplexVector{a, b * w * w},
    };
    return validate_etf(vectors);
}

}  // namespace

std::vector<std::string> frame_catalog() {
    std::vector<std::string> names = {"basis-2", "basis-3", "sic-d2", "sic-d3", "harmonic-7-3"};
    const std::size_t base = names.size();
    for (std::size_t i = 0; i < base; ++i) names.push_back("conj:" + names[i]);
    return names;
}

Frame catalog_frame(const std::string& name) {
    if (name.rfind("conj:", 0) == 0) return conjugate_frame(catalog_frame(name.substr(5)));
    if (name == "basis-2") return basis_frame(2);
    if (name == "basis-3") return basis_frame(3);
    if (name == "sic-d2") return sic_d2();
    if (name == "sic-d3") return sic_d3();
    if (name == "harmonic-7-3") return harmonic_etf(3, {0, 1, 3}, 7);
    throw FrameError("unknown catalog frame: " + name);
}

std::string frame_to_json(const Frame& f) {
    nlohmann::json j;
    j["d"] = f.d;
    j["n"] = f.n;
    auto& vecs = j["vectors"] = nlohmann::json::array();
    for (const auto& v : f.vectors) {
        nlohmann::json jv = nlohmann::json::array();
        for (std::size_t i = 0; i < v.dim(); ++i)
            jv.push_back({v[i].real(), v[i].imag()});
        vecs.push_back(std::move(jv));
    }
    return j.dump(2);
}

Frame frame_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    const std::size_t d = j.at("d").get<std::size_t>();
    const std::size_t n = j.at("n").get<std::size_t>();
    const auto& vecs = j.at("vectors");
    if (vecs.size() != n) throw FrameError("vector count disagrees with n");
    std::vector<ComplexVector> vectors;
    vectors.reserve(n);
    for (const auto& jv : vecs) {
        if (jv.size() != d) throw FrameError("vector length disagrees with d");
        ComplexVector v(d);
        for (std::size_t i = 0; i < d; ++i)
            v[i] = cplx(jv[i][0].get<double>(), jv[i][1].get<double>());
        vectors.push_back(std::move(v));
    }
    return validate_etf(vectors);
}

}  // namespace etf
