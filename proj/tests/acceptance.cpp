// Acceptance suite: end-to-end checks of the library's headline guarantees.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "etf/criteria.hpp"
#include "etf/maps.hpp"
#include "oracles.hpp"

using namespace etf;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

double elapsed_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double max_overlap_deviation(const Frame& f) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t j = i + 1; j < f.n; ++j)
            worst = std::max(worst,
                             std::abs(std::norm(inner(f.vectors[i], f.vectors[j])) - f.c));
    return worst;
}

void criterion1_frame_certification() {
    const std::vector<ComplexVector> sic_vectors = catalog_frame("sic-d3").vectors;
    const std::vector<ComplexVector> harm_vectors = catalog_frame("harmonic-7-3").vectors;

    Frame sic, harm;
    const double ms_sic = elapsed_ms([&] { sic = validate_etf(sic_vectors); });
    const double ms_harm = elapsed_ms([&] { harm = validate_etf(harm_vectors); });

    const bool constants = std::abs(sic.b - 3.0) <= 1e-10 && std::abs(sic.c - 0.25) <= 1e-10 &&
                           std::abs(harm.b - 7.0 / 3.0) <= 1e-10 &&
                           std::abs(harm.c - 2.0 / 9.0) <= 1e-10;
    const bool deviations =
        max_overlap_deviation(sic) <= 1e-10 && max_overlap_deviation(harm) <= 1e-10;
    const bool fast = ms_sic < 1.0 && ms_harm < 1.0;

    char buf[160];
    std::snprintf(buf, sizeof buf, "sic %.3fms dev %.2e, harmonic %.3fms dev %.2e", ms_sic,
                  max_overlap_deviation(sic), ms_harm, max_overlap_deviation(harm));
    report(1, "frame certification", constants && deviations && fast, buf);
}

void criterion2_sic_reduction() {
    const Povm sic2 = povm_from_frame(catalog_frame("sic-d2"));
    const Povm sic3 = povm_from_frame(catalog_frame("sic-d3"));
    const double b2 = theorem1_bound(sic2, sic2);
    const double b3 = theorem1_bound(sic3, sic3);
    const bool pass = std::abs(b2 - 1.0 / 3.0) <= 1e-12 && std::abs(b3 - 1.0 / 6.0) <= 1e-12;
    char buf[120];
    std::snprintf(buf, sizeof buf, "d=2 bound %.15f, d=3 bound %.15f", b2, b3);
    report(2, "SIC-pair bound reduction 2/(d(d+1))", pass, buf);
}

void criterion3_isotropic_threshold() {
    bool pass = true;
    std::string detail;
    for (const char* name : {"sic-d3", "harmonic-7-3"}) {
        const Povm pa = povm_from_frame(catalog_frame(name));
        const Povm pb = povm_from_frame(conjugate_frame(pa.frame));
        const double n = static_cast<double>(pa.frame.n);

        for (int i = 0; i <= 20; ++i) {
            const double p = i / 20.0;
            const double stat = theorem1(isotropic(3, p), pa, pb).statistic;
            if (std::abs(stat - (1.0 - p + 3.0 * p) / n) > 1e-10) pass = false;
        }

        double lo = 0.0, hi = 1.0;
        while (hi - lo > 1e-7) {
            const double mid = 0.5 * (lo + hi);
            (theorem1(isotropic(3, mid), pa, pb).margin <= 0.0 ? lo : hi) = mid;
        }
        const double pstar = 0.5 * (lo + hi);
        const double expected = 2.0 / (n - 1.0);
        if (std::abs(pstar - expected) > 1e-6) pass = false;
        char buf[80];
        std::snprintf(buf, sizeof buf, "%s p*=%.7f (expect %.7f) ", name, pstar, expected);
        detail += buf;
    }
    report(3, "isotropic threshold p*=(d-1)/(n-1)", pass, detail);
}

void criterion4_separable_soundness() {
    bool pass = true;
    int violations = 0;
    double ms = elapsed_ms([&] {
        const Povm sic = povm_from_frame(catalog_frame("sic-d3"));
        const Povm conj_sic = povm_from_frame(catalog_frame("conj:sic-d3"));
        const Povm harm = povm_from_frame(catalog_frame("harmonic-7-3"));
        const Povm conj_harm = povm_from_frame(catalog_frame("conj:harmonic-7-3"));
        const Povm basis = povm_from_frame(catalog_frame("basis-3"));
        const std::vector<std::pair<const Povm*, const Povm*>> pairings = {
            {&sic, &conj_sic}, {&harm, &conj_harm}, {&sic, &harm}, {&basis, &basis}};

        for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
            const auto prod = random_product({3, 3}, seed);
            const auto sep = test::random_separable_bipartite(3, 5, 10000 + seed);
            for (const auto& [pa, pb] : pairings) {
                if (theorem1(prod, *pa, *pb).margin > 1e-9) ++violations;
                if (theorem1(sep, *pa, *pb).margin > 1e-9) ++violations;
            }
        }
        for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
            const auto prod3 = random_product({3, 3, 3}, 20000 + seed);
            for (const Povm* p : {&sic, &harm}) {
                if (theorem4(prod3, *p, *p, *p).margin > 1e-9) ++violations;
                for (const auto& v : theorem5(prod3, *p, *p, *p))
                    if (v.margin > 1e-9) ++violations;
            }
        }
    });
    pass = violations == 0 && ms < 60000.0;
    char buf[100];
    std::snprintf(buf, sizeof buf, "%d violations, %.1fs", violations, ms / 1000.0);
    report(4, "separable-side soundness", pass, buf);
}

void criterion5_region_containment() {
    const Povm sic = povm_from_frame(catalog_frame("sic-d3"));
    const Povm conj_sic = povm_from_frame(catalog_frame("conj:sic-d3"));
    const Povm harm = povm_from_frame(catalog_frame("harmonic-7-3"));
    const Povm conj_harm = povm_from_frame(catalog_frame("conj:harmonic-7-3"));

    int detected9 = 0, detected7 = 0, exceptions = 0;
    for (int ix = 0; ix <= 200; ++ix)
        for (int ip = 0; ip <= 200; ++ip) {
            const double x = ix / 200.0;
            const double p = ip / 200.0;
            const auto rho = sigma_xp(x, p);
            const bool d9 = theorem1(rho, sic, conj_sic).entangled;
            const bool d7 = theorem1(rho, harm, conj_harm).entangled;
            if (d9) ++detected9;
            if (d7) {
                ++detected7;
                if (!d9) ++exceptions;
            }
        }
    const double frac = static_cast<double>(exceptions) / std::max(1, detected7);
    const bool pass = frac <= 0.005 && detected9 > 0;
    char buf[140];
    std::snprintf(buf, sizeof buf, "n=9 detects %d, n=7 detects %d, %d outside n=9 set (%.3f%%)",
                  detected9, detected7, exceptions, 100.0 * frac);
    report(5, "sigma(x,p) detection-region containment", pass, buf);
}

void criterion6_antisymmetric_sweep() {
    const Povm sic = povm_from_frame(catalog_frame("sic-d3"));
    bool symmetric = true, violated_at_zero = false, clean_at_one = true;
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        const auto vs = theorem5(antisymmetric_tripartite(x), sic, sic, sic);
        if (std::abs(vs[0].statistic - vs[1].statistic) > 1e-9 ||
            std::abs(vs[0].statistic - vs[2].statistic) > 1e-9)
            symmetric = false;
        if (x == 0.0 && vs[0].entangled) violated_at_zero = true;
        if (x == 1.0 && (vs[0].entangled || vs[1].entangled || vs[2].entangled))
            clean_at_one = false;
    }

    // boundary of the violated region
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-7) {
        const double mid = 0.5 * (lo + hi);
        (theorem5(antisymmetric_tripartite(mid), sic, sic, sic)[0].margin > 0.0 ? lo : hi) =
            mid;
    }
    const double xstar = 0.5 * (lo + hi);

    // dense cross-check at the located boundary
    const auto tc = hypermatrix(antisymmetric_tripartite(xstar), sic, sic, sic);
    const auto u = unfoldings(tc);
    const double blockwise = unfolding_trace_norm(tc, 0);
    const double dense = trace_norm(u.a_bc);
    const bool cross_check = std::abs(blockwise - dense) <= 1e-9;

    const bool pass = symmetric && violated_at_zero && clean_at_one && cross_check;
    char buf[140];
    std::snprintf(buf, sizeof buf, "x*=%.6f, blockwise-dense gap %.2e", xstar,
                  std::abs(blockwise - dense));
    report(6, "antisymmetric-family detection sweep", pass, buf);
}

void criterion7_positive_map_probe() {
    bool pass = true;
    std::string detail;
    const double ms = elapsed_ms([&] {
        for (const char* name : {"sic-d3", "harmonic-7-3"}) {
            const Povm p = povm_from_frame(catalog_frame(name));
            for (int rot = 0; rot < 2; ++rot) {
                const auto o = rot == 0 ? rotation_identity(p.frame.n)
                                        : rotation_uperp(p.frame.n, 0.8);
                const auto spec = make_map_spec(p, o);
                const auto r = positivity_probe(spec, 10000, 31337 + rot);
                if (r.max_purity_stat > 0.5 + 1e-9 || r.min_eigenvalue < -1e-9) pass = false;
                char buf[90];
                std::snprintf(buf, sizeof buf, "n=%zu O%d max %.6f min %.2e ", p.frame.n, rot,
                              r.max_purity_stat, r.min_eigenvalue);
                detail += buf;
            }
        }
    });
    pass = pass && ms < 30000.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.1fs", ms / 1000.0);
    report(7, "positive-map probe", pass, detail + buf);
}

void criterion8_witness_consistency() {
    bool pass = true;
    double worst_gap = 0.0, worst_trace = 0.0, worst_expectation = 0.0;
    for (const char* name : {"sic-d3", "harmonic-7-3"}) {
        const Povm p = povm_from_frame(catalog_frame(name));
        for (int rot = 0; rot < 2; ++rot) {
            const auto o = rot == 0 ? rotation_identity(p.frame.n)
                                    : rotation_uperp(p.frame.n, 0.8);
            const auto spec = make_map_spec(p, o);
            const auto w = build_witness(spec);
            const auto choi = witness_via_choi(spec);
            for (std::size_t i = 0; i < 9; ++i)
                for (std::size_t j = 0; j < 9; ++j)
                    worst_gap = std::max(worst_gap, std::abs(w.matrix(i, j) - choi(i, j)));
            worst_trace = std::max(
                worst_trace, std::abs(trace(w.matrix).real() - spec.prefactor * 3.0));

            StateSampler s(424242);
            double min_exp = 0.0;
            for (int rep = 0; rep < 10000; ++rep) {
                const auto t = tensor(s.gaussian_vector(3).normalized(),
                                      s.gaussian_vector(3).normalized());
                min_exp = std::min(min_exp, w.matrix.quadratic_form(t).real());
            }
            worst_expectation = std::min(worst_expectation, min_exp);
        }
    }
    pass = worst_gap <= 1e-9 && worst_trace <= 1e-10 && worst_expectation >= -1e-9;
    char buf[130];
    std::snprintf(buf, sizeof buf, "route gap %.2e, trace gap %.2e, min product exp %.2e",
                  worst_gap, worst_trace, worst_expectation);
    report(8, "witness consistency", pass, buf);
}

void criterion9_oracle_equivalence() {
    const Povm sic = povm_from_frame(catalog_frame("sic-d3"));
    double worst_entry = 0.0, worst_norm = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto rho = test::random_tripartite(seed);
        const auto fast = hypermatrix(rho, sic, sic, sic);
        const auto dense = test::dense_hypermatrix(rho, sic, sic, sic);
        for (std::size_t idx = 0; idx < fast.hyper.size(); ++idx)
            worst_entry = std::max(worst_entry, std::abs(fast.hyper[idx] - dense.hyper[idx]));

        const auto u = unfoldings(fast);
        worst_norm = std::max(
            worst_norm, std::abs(unfolding_trace_norm(fast, 0) - trace_norm(u.a_bc)));
        worst_norm = std::max(
            worst_norm, std::abs(unfolding_trace_norm(fast, 1) - trace_norm(u.b_ac)));
        worst_norm = std::max(
            worst_norm, std::abs(unfolding_trace_norm(fast, 2) - trace_norm(u.c_ab)));
    }
    const bool pass = worst_entry <= 1e-10 && worst_norm <= 1e-9;
    char buf[110];
    std::snprintf(buf, sizeof buf, "max entry gap %.2e, max trace-norm gap %.2e", worst_entry,
                  worst_norm);
    report(9, "oracle equivalence", pass, buf);
}

}  // namespace

int main() {
    criterion1_frame_certification();
    criterion2_sic_reduction();
    criterion3_isotropic_threshold();
    criterion4_separable_soundness();
    criterion5_region_containment();
    criterion6_antisymmetric_sweep();
    criterion7_positive_map_probe();
    criterion8_witness_consistency();
    criterion9_oracle_equivalence();
    std::printf("%s\n", g_failures == 0 ? "all criteria passed" : "FAILURES PRESENT");
    return g_failures;
}
