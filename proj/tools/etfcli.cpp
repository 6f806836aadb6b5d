// Command-line surface: frame validation/catalog, state construction,
// entanglement detection, parameter grid scans, and witness tooling.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "etf/criteria.hpp"
#include "etf/frames.hpp"
#include "etf/maps.hpp"
#include "etf/states.hpp"

using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json matrix_to_json(const etf::ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

etf::ComplexMatrix matrix_from_json(const json& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    etf::ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = etf::cplx(rows[i][j][0].get<double>(), rows[i][j][1].get<double>());
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_file(const std::string& token) {
    if (token.find(".json") != std::string::npos || token.find('/') != std::string::npos)
        return std::ifstream(token).good();
    return false;
}

etf::Povm load_povm(const std::string& name) {
    if (looks_like_file(name)) return etf::povm_from_frame(etf::frame_from_json(read_file(name)));
    return etf::povm_from_frame(etf::catalog_frame(name));
}

std::map<std::string, double> parse_params(const std::string& text) {
    std::map<std::string, double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("bad parameter: " + item);
        out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    }
    return out;
}

double need(const std::map<std::string, double>& p, const std::string& key) {
    const auto it = p.find(key);
    if (it == p.end()) throw UsageError("missing parameter: " + key);
    return it->second;
}

etf::DensityMatrix make_state(const std::string& family,
                              const std::map<std::string, double>& p) {
    if (family == "isotropic")
        return etf::isotropic(static_cast<std::size_t>(need(p, "d")), need(p, "p"));
    if (family == "horodecki") return etf::horodecki_3x3(need(p, "x"));
    if (family == "sigma") return etf::sigma_xp(need(p, "x"), need(p, "p"));
    if (family == "antisym3") return etf::antisymmetric_tripartite(need(p, "x"));
    throw UsageError("unknown state family: " + family);
}

// "family:k=v,..." token, or a JSON file with factor_dims and matrix.
etf::DensityMatrix parse_state(const std::string& token) {
    if (looks_like_file(token)) {
        const json j = json::parse(read_file(token));
        return etf::DensityMatrix(j.at("factor_dims").get<std::vector<std::size_t>>(),
                                  matrix_from_json(j.at("matrix")));
    }
    const auto colon = token.find(':');
    const std::string family = token.substr(0, colon);
    std::map<std::string, double> params;
    if (colon != std::string::npos) params = parse_params(token.substr(colon + 1));
    return make_state(family, params);
}

json verdict_to_json(const etf::Verdict& v, double tol) {
    return {{"criterion", v.criterion},
            {"statistic", v.statistic},
            {"bound", v.bound},
            {"margin", v.margin},
            {"entangled", v.margin > tol}};
}

etf::RotationO parse_rotation(const std::string& token, std::size_t n) {
    if (token == "identity") return etf::rotation_identity(n);
    if (token.rfind("uperp:", 0) == 0) {
        const double angle = std::stod(token.substr(6));
        return etf::rotation_uperp(n, angle);
    }
    throw UsageError("unknown rotation: " + token);
}

struct Axis {
    std::string name;
    double start = 0.0, stop = 0.0;
    std::size_t steps = 1;  // points = steps + 1

    double value(std::size_t i) const {
        if (steps == 0) return start;
        return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps);
    }
};

std::vector<Axis> parse_grid(const std::string& text) {
    std::vector<Axis> axes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("bad grid axis: " + item);
        Axis ax;
        ax.name = item.substr(0, eq);
        const std::string range = item.substr(eq + 1);
        const auto c1 = range.find(':');
        const auto c2 = range.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw UsageError("grid axis must be name=start:stop:steps");
        ax.start = std::stod(range.substr(0, c1));
        ax.stop = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
        ax.steps = std::stoul(range.substr(c2 + 1));
        if (ax.steps < 1) throw UsageError("grid steps must be >= 1");
        axes.push_back(std::move(ax));
    }
    if (axes.empty()) throw UsageError("empty grid");
    return axes;
}

etf::Povm conjugate_povm(const etf::Povm& p) {
    return etf::povm_from_frame(etf::conjugate_frame(p.frame));
}

void run_scan(const std::string& state_token, const std::string& grid_text,
              const std::string& criterion, const std::vector<std::string>& povm_names,
              double tol, std::ostream& os) {
    const auto colon = state_token.find(':');
    const std::string family = state_token.substr(0, colon);
    std::map<std::string, double> fixed;
    if (colon != std::string::npos) fixed = parse_params(state_token.substr(colon + 1));
    const std::vector<Axis> axes = parse_grid(grid_text);

    for (const auto& povm_name : povm_names) {
        const etf::Povm pa = load_povm(povm_name);
        const etf::Povm pb = conjugate_povm(pa);

        os << "# criterion=" << criterion << " povms=" << povm_name
           << " state=" << family << "\n";
        for (const auto& ax : axes) os << ax.name << ",";
        os << "statistic,bound,entangled\n";

        std::size_t total = 1;
        for (const auto& ax : axes) total *= ax.steps + 1;
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rem = idx;
            auto params = fixed;
            std::vector<double> coords(axes.size());
            for (std::size_t a = axes.size(); a-- > 0;) {
                const std::size_t pts = axes[a].steps + 1;
                coords[a] = axes[a].value(rem % pts);
                rem /= pts;
            }
            for (std::size_t a = 0; a < axes.size(); ++a) params[axes[a].name] = coords[a];

            double statistic = 0.0, bound = 0.0;
            bool entangled = false;
            try {
                const etf::DensityMatrix rho = make_state(family, params);
                if (criterion == "thm1") {
                    const auto v = etf::theorem1(rho, pa, pb);
                    statistic = v.statistic;
                    bound = v.bound;
                    entangled = v.margin > tol;
                } else if (criterion == "thm4") {
                    const auto v = etf::theorem4(rho, pa, pa, pa);
                    statistic = v.statistic;
                    bound = v.bound;
                    entangled = v.margin > tol;
                } else if (criterion == "thm5") {
                    const auto vs = etf::theorem5(rho, pa, pa, pa);
                    statistic = vs[0].statistic;
                    bound = vs[0].bound;
                    for (const auto& v : vs) entangled = entangled || v.margin > tol;
                } else {
                    throw UsageError("unknown criterion: " + criterion);
                }
            } catch (const UsageError&) {
                throw;
            } catch (const std::exception& e) {
                std::ostringstream where;
                where << "scan failed at";
                for (std::size_t a = 0; a < axes.size(); ++a)
                    where << " " << axes[a].name << "=" << coords[a];
                where << ": " << e.what();
                throw std::runtime_error(where.str());
            }
            char buf[128];
            std::string line;
            for (double cvalue : coords) {
                std::snprintf(buf, sizeof buf, "%.10g,", cvalue);
                line += buf;
            }
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%d\n", statistic, bound,
                          entangled ? 1 : 0);
            line += buf;
            os << line;
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equiangular-tight-frame POVMs and entanglement criteria"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    double tol = etf::kVerdictTol;
    std::string output_mode = "json";
    app.add_option("--seed", seed, "Seed for sampling subcommands");
    app.add_option("--tolerance", tol, "Entangled/inconclusive margin tolerance");
    app.add_option("--output", output_mode, "Output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // frames
    auto* frames_cmd = app.add_subcommand("frames", "Validate or list frames");
    auto* frames_validate = frames_cmd->add_subcommand("validate", "Certify a frame JSON file");
    std::string frame_file;
    frames_validate->add_option("file", frame_file, "Frame JSON file")->required();
    auto* frames_catalog = frames_cmd->add_subcommand("catalog", "List built-in frames");
    auto* frames_show = frames_cmd->add_subcommand("show", "Emit a built-in frame as JSON");
    std::string frame_name;
    frames_show->add_option("name", frame_name, "Catalog frame name")->required();
    frames_cmd->require_subcommand(1);

    // state
    auto* state_cmd = app.add_subcommand("state", "Construct named states");
    auto* state_make = state_cmd->add_subcommand("make", "Emit a state as JSON");
    std::string state_family;
    std::string state_params;
    state_make->add_option("family", state_family, "isotropic|horodecki|sigma|antisym3")
        ->required();
    state_make->add_option("--params", state_params, "Comma-separated key=value list");
    state_cmd->require_subcommand(1);

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "Evaluate criteria at a single point");
    std::string detect_kind, detect_state, povm_a, povm_b, povm_c, detect_criteria;
    detect_cmd->add_option("kind", detect_kind, "bipartite|tripartite")
        ->required()
        ->check(CLI::IsMember({"bipartite", "tripartite"}));
    detect_cmd->add_option("--state", detect_state, "family:params or JSON file")->required();
    detect_cmd->add_option("--povm-a", povm_a, "POVM for party A")->required();
    detect_cmd->add_option("--povm-b", povm_b, "POVM for party B")->required();
    detect_cmd->add_option("--povm-c", povm_c, "POVM for party C (tripartite)");
    detect_cmd->add_option("--criteria", detect_criteria, "thm1|thm4|thm5 (default per kind)");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "Grid scan, CSV output");
    std::string scan_state, scan_grid, scan_criteria, scan_povms, scan_out;
    scan_cmd->add_option("--state", scan_state, "State family (with fixed params)")->required();
    scan_cmd->add_option("--grid", scan_grid, "name=start:stop:steps[,...]")->required();
    scan_cmd->add_option("--criteria", scan_criteria, "thm1|thm4|thm5")->required();
    scan_cmd->add_option("--povms", scan_povms, "Comma-separated POVM names")->required();
    scan_cmd->add_option("-o,--out", scan_out, "Output file (default stdout)");

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "Build or evaluate witnesses");
    auto* witness_build = witness_cmd->add_subcommand("build", "Construct a witness");
    std::size_t witness_d = 3;
    std::string witness_povm = "sic-d3", witness_rotation = "identity", witness_out;
    witness_build->add_option("--d", witness_d, "Local dimension (must match POVM)");
    witness_build->add_option("--povm", witness_povm, "POVM name or frame file");
    witness_build->add_option("--rotation", witness_rotation, "identity|uperp:<angle>");
    witness_build->add_option("-o,--out", witness_out, "Output file (default stdout)");
    auto* witness_eval = witness_cmd->add_subcommand("eval", "tr(W rho)");
    std::string witness_file, witness_state;
    witness_eval->add_option("--witness", witness_file, "Witness JSON file")->required();
    witness_eval->add_option("--state", witness_state, "family:params or JSON file")->required();
    witness_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*frames_validate) {
            const std::string text = read_file(frame_file);
            try {
                const etf::Frame f = etf::frame_from_json(text);
                json j = {{"valid", true}, {"d", f.d},       {"n", f.n},
                          {"b", f.b},      {"c", f.c},       {"s_min", f.s_min},
                          {"s_max", f.s_max}};
                std::cout << j.dump(2) << "\n";
            } catch (const etf::FrameError& e) {
                json j = {{"valid", false}, {"error", e.what()}};
                std::cout << j.dump(2) << "\n";
                return 1;
            }
        } else if (*frames_catalog) {
            for (const auto& name : etf::frame_catalog()) std::cout << name << "\n";
        } else if (*frames_show) {
            std::cout << etf::frame_to_json(etf::catalog_frame(frame_name)) << "\n";
        } else if (*state_make) {
            const auto params = state_params.empty() ? std::map<std::string, double>{}
                                                     : parse_params(state_params);
            const etf::DensityMatrix rho = make_state(state_family, params);
            json j = {{"factor_dims", rho.factor_dims()},
                      {"matrix", matrix_to_json(rho.matrix())}};
            std::cout << j.dump(2) << "\n";
        } else if (*detect_cmd) {
            const etf::DensityMatrix rho = parse_state(detect_state);
            const etf::Povm pa = load_povm(povm_a);
            const etf::Povm pb = load_povm(povm_b);
            json out;
            if (detect_kind == "bipartite") {
                out = verdict_to_json(etf::theorem1(rho, pa, pb), tol);
            } else {
                if (povm_c.empty()) throw UsageError("tripartite detection needs --povm-c");
                const etf::Povm pc = load_povm(povm_c);
                const std::string which = detect_criteria.empty() ? "thm4" : detect_criteria;
                if (which == "thm4") {
                    out = verdict_to_json(etf::theorem4(rho, pa, pb, pc), tol);
                } else if (which == "thm5") {
                    out = json::array();
                    for (const auto& v : etf::theorem5(rho, pa, pb, pc))
                        out.push_back(verdict_to_json(v, tol));
                } else {
                    throw UsageError("unknown tripartite criterion: " + which);
                }
            }
            std::cout << out.dump(2) << "\n";
        } else if (*scan_cmd) {
            std::vector<std::string> povm_names;
            std::stringstream ss(scan_povms);
            std::string item;
            while (std::getline(ss, item, ',')) povm_names.push_back(item);
            if (scan_out.empty()) {
                run_scan(scan_state, scan_grid, scan_criteria, povm_names, tol, std::cout);
            } else {
                std::ofstream out(scan_out);
                if (!out) throw UsageError("cannot open output file: " + scan_out);
                run_scan(scan_state, scan_grid, scan_criteria, povm_names, tol, out);
            }
        } else if (*witness_build) {
            const etf::Povm p = load_povm(witness_povm);
            if (p.frame.d != witness_d)
                throw UsageError("--d disagrees with the POVM's dimension");
            const auto spec = etf::make_map_spec(p, parse_rotation(witness_rotation, p.frame.n));
            const etf::Witness w = etf::build_witness(spec);
            json j = {{"d", p.frame.d},
                      {"n", p.frame.n},
                      {"rotation", witness_rotation},
                      {"min_eigenvalue", w.min_eigenvalue},
                      {"nontrivial", w.has_negative_eigenvalue},
                      {"matrix", matrix_to_json(w.matrix)}};
            if (witness_out.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::ofstream out(witness_out);
                if (!out) throw UsageError("cannot open output file: " + witness_out);
                out << j.dump(2) << "\n";
            }
        } else if (*witness_eval) {
            const json jw = json::parse(read_file(witness_file));
            etf::Witness w;
            w.matrix = matrix_from_json(jw.at("matrix"));
            w.min_eigenvalue = jw.value("min_eigenvalue", 0.0);
            w.has_negative_eigenvalue = jw.value("nontrivial", false);
            const etf::DensityMatrix rho = parse_state(witness_state);
            const double value = etf::witness_expectation(w, rho);
            json j = {{"expectation", value}, {"entangled", value < -tol}};
            std::cout << j.dump(2) << "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const etf::FrameError& e) {
        // unknown catalog names, malformed frame files: caller input
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const etf::DomainError& e) {
        // out-of-range state parameters: caller input
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
