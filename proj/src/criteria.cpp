#include "etf/criteria.hpp"

#include <cmath>

namespace etf {

namespace {

Verdict make_verdict(std::string tag, double statistic, double bound) {
    Verdict v;
    v.criterion = std::move(tag);
    v.statistic = statistic;
    v.bound = bound;
    v.margin = statistic - bound;
    v.entangled = v.margin > kVerdictTol;
    return v;
}

void check_party(const DensityMatrix& rho, std::size_t slot, const Povm& p, const char* where) {
    if (slot >= rho.factor_dims().size() || rho.factor_dims()[slot] != p.frame.d)
        throw DimensionMismatch(std::string(where) + ": POVM dimension does not match factor " +
                                std::to_string(slot));
}

}  // namespace

BipartiteCorrelation correlation_matrix(const DensityMatrix& rho, const Povm& pa, const Povm& pb) {
    if (rho.factor_dims().size() != 2)
        throw DimensionMismatch("correlation_matrix: state is not bipartite");
    check_party(rho, 0, pa, "correlation_matrix");
    check_party(rho, 1, pb, "correlation_matrix");

    const std::size_t na = pa.frame.n, nb = pb.frame.n;
    const double w = static_cast<double>(pa.frame.d * pb.frame.d) / static_cast<double>(na * nb);
    BipartiteCorrelation out;
    out.matrix = ComplexMatrix(na, nb);
    out.povm_a = &pa;
    out.povm_b = &pb;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            const ComplexVector t = tensor(pa.frame.vectors[i], pb.frame.vectors[j]);
            out.matrix(i, j) = w * rho.matrix().quadratic_form(t).real();
        }
    return out;
}

double theorem1_bound(const Povm& pa, const Povm& pb) {
    const double ba = pa.frame.b, ca = pa.frame.c;
    const double bb = pb.frame.b, cb = pb.frame.c;
    return std::sqrt((ba * ca + 1.0 - ca) * (bb * cb + 1.0 - cb)) / (ba * bb);
}

Verdict theorem1(const DensityMatrix& rho, const Povm& pa, const Povm& pb) {
    const BipartiteCorrelation corr = correlation_matrix(rho, pa, pb);
    return make_verdict("thm1", trace_norm(corr.matrix), theorem1_bound(pa, pb));
}

TripartiteCorrelation hypermatrix(const DensityMatrix& rho, const Povm& pa, const Povm& pb,
                                  const Povm& pc) {
    if (rho.factor_dims().size() != 3)
        throw DimensionMismatch("hypermatrix: state is not tripartite");
    check_party(rho, 0, pa, "hypermatrix");
    check_party(rho, 1, pb, "hypermatrix");
    check_party(rho, 2, pc, "hypermatrix");

    const std::size_t na = pa.frame.n, nb = pb.frame.n, nc = pc.frame.n;
    const double w = static_cast<double>(pa.frame.d * pb.frame.d * pc.frame.d) /
                     static_cast<double>(na * nb * nc);
    TripartiteCorrelation tc;
    tc.shape = {na, nb, nc};
    tc.hyper.resize(na * nb * nc);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            const ComplexVector ab = tensor(pa.frame.vectors[i], pb.frame.vectors[j]);
            for (std::size_t k = 0; k < nc; ++k) {
                const ComplexVector t = tensor(ab, pc.frame.vectors[k]);
                tc.at(i, j, k) = w * rho.matrix().quadratic_form(t).real();
            }
        }
    return tc;
}

double theorem4_bound(const Povm& pa, const Povm& pb, const Povm& pc) {
    auto factor = [](const Povm& p) { return p.frame.b * p.frame.c + 1.0 - p.frame.c; };
    return std::sqrt(factor(pa) * factor(pb) * factor(pc)) /
           (pa.frame.b * pb.frame.b * pc.frame.b);
}

Verdict theorem4(const DensityMatrix& rho, const Povm& pa, const Povm& pb, const Povm& pc) {
    const TripartiteCorrelation tc = hypermatrix(rho, pa, pb, pc);
    double sq = 0.0;
    for (double m : tc.hyper) sq += m * m;
    return make_verdict("thm4", std::sqrt(sq), theorem4_bound(pa, pb, pc));
}

namespace {

// Slice of the hypermatrix with the underlined party's outcome fixed.
ComplexMatrix slice(const TripartiteCorrelation& tc, int party, std::size_t fixed) {
    const auto [na, nb, nc] = tc.shape;
    switch (party) {
        case 0: {
            ComplexMatrix m(nb, nc);
            for (std::size_t j = 0; j < nb; ++j)
                for (std::size_t k = 0; k < nc; ++k) m(j, k) = tc.at(fixed, j, k);
            return m;
        }
        case 1: {
            ComplexMatrix m(na, nc);
            for (std::size_t i = 0; i < na; ++i)
                for (std::size_t k = 0; k < nc; ++k) m(i, k) = tc.at(i, fixed, k);
            return m;
        }
        default: {
            ComplexMatrix m(na, nb);
            for (std::size_t i = 0; i < na; ++i)
                for (std::size_t j = 0; j < nb; ++j) m(i, j) = tc.at(i, j, fixed);
            return m;
        }
    }
}

ComplexMatrix direct_sum_blocks(const TripartiteCorrelation& tc, int party) {
    const std::size_t blocks = tc.shape[static_cast<std::size_t>(party)];
    const ComplexMatrix first = slice(tc, party, 0);
    ComplexMatrix out(blocks * first.rows(), blocks * first.cols());
    for (std::size_t b = 0; b < blocks; ++b) {
        const ComplexMatrix s = slice(tc, party, b);
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j)
                out(b * s.rows() + i, b * s.cols() + j) = s(i, j);
    }
    return out;
}

}  // namespace

Unfoldings unfoldings(const TripartiteCorrelation& tc) {
    Unfoldings u;
    u.a_bc = direct_sum_blocks(tc, 0);
    u.b_ac = direct_sum_blocks(tc, 1);
    u.c_ab = direct_sum_blocks(tc, 2);
    return u;
}

double unfolding_trace_norm(const TripartiteCorrelation& tc, int underlined_party) {
    const std::size_t blocks = tc.shape[static_cast<std::size_t>(underlined_party)];
    double sum = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) sum += trace_norm(slice(tc, underlined_party, b));
    return sum;
}

std::array<double, 3> theorem5_bounds(const Povm& pa, const Povm& pb, const Povm& pc) {
    const std::size_t d = pa.frame.d;
    if (pb.frame.d != d || pc.frame.d != d)
        throw DimensionMismatch("theorem5: local dimensions must be equal");
    auto term = [d](std::size_t n) {
        const double nn = static_cast<double>(n);
        const double dd = static_cast<double>(d);
        return (nn - 2.0 * dd + dd * dd) / (nn * (nn - 1.0));
    };
    const double ta = term(pa.frame.n), tb = term(pb.frame.n), tcv = term(pc.frame.n);
    return {std::sqrt(tb * tcv), std::sqrt(ta * tcv), std::sqrt(ta * tb)};
}

std::array<Verdict, 3> theorem5(const DensityMatrix& rho, const Povm& pa, const Povm& pb,
                                const Povm& pc) {
    const TripartiteCorrelation tc = hypermatrix(rho, pa, pb, pc);
    const auto bounds = theorem5_bounds(pa, pb, pc);
    return {make_verdict("thm5:a|bc", unfolding_trace_norm(tc, 0), bounds[0]),
            make_verdict("thm5:b|ac", unfolding_trace_norm(tc, 1), bounds[1]),
            make_verdict("thm5:c|ab", unfolding_trace_norm(tc, 2), bounds[2])};
}

}  // namespace etf
