// spectile: tiling and spectrum analysis of rational polytopes.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spectile/catalog.hpp"
#include "spectile/error.hpp"
#include "spectile/export.hpp"
#include "spectile/fourier.hpp"
#include "spectile/io.hpp"
#include "spectile/oracle.hpp"
#include "spectile/report.hpp"
#include "spectile/spectrum.hpp"
#include "spectile/symmetry.hpp"
#include "spectile/tiling.hpp"

using namespace spectile;
using io::Json;

namespace {

constexpr int kInputError = 2;
constexpr int kInvariantViolation = 3;

struct Common {
    std::string input;
    double radius = 5;
    double tolerance = 1e-10;
    std::uint64_t seed = 20240611;
    long long samples = 100000;
    std::string format;
    std::string output;
};

void emit(const Common& c, const std::string& text) {
    if (c.output.empty() || c.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + c.output + "'");
    out << text;
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

Json complex_json(const ComplexValue& z) {
    return Json{{"re", z.re.convert_to<double>()}, {"im", z.im.convert_to<double>()}, {"abs", z.abs()},
                {"err_bound", z.err_bound}};
}

int cmd_analyze(const Common& c) {
    AnalyzeOptions opts{c.radius, c.tolerance, c.seed, c.samples};
    emit_json(c, report_to_json(analyze(io::load_polytope(c.input), c.input, opts)));
    return 0;
}

int cmd_fourier(const Common& c, const std::string& xi_text, long long facet) {
    const Polytope p = io::load_polytope(c.input);
    const Vec xi = io::parse_frequency(xi_text);
    Json j{{"xi", io::to_json(xi)}};
    if (facet >= 0) {
        j["facet"] = facet;
        j["value"] = complex_json(ft_surface(p, static_cast<std::size_t>(facet), xi));
    } else {
        auto v = ft_indicator(p, xi);
        j["value"] = complex_json(v);
        if (!xi.is_zero()) j["zero"] = v.abs() <= c.tolerance * p.volume().convert_to<double>();
    }
    emit_json(c, j);
    return 0;
}

int cmd_spectrum(const Common& c) {
    const Polytope p = io::load_polytope(c.input);
    const auto v = decide_spectral(p);
    if (!v.spectral) {
        emit_json(c, Json{{"spectral", false}, {"reason", v.reason}});
        return 0;
    }
    const auto s = patch(*v.spectrum, c.radius);
    if (c.format == "json") {
        Json pts = Json::array();
        for (const auto& x : s.points) pts.push_back(io::to_json(x));
        emit_json(c, Json{{"spectral", true},
                          {"lattice_T", io::to_json(*v.tiling_lattice)},
                          {"spectrum", io::to_json(*v.spectrum)},
                          {"radius", c.radius},
                          {"separation", s.separation},
                          {"points", pts}});
        return 0;
    }
    std::ostringstream os;
    os << "# spectrum basis (columns):";
    for (const auto& b : v.spectrum->basis_vectors()) os << " " << io::to_json(b).dump();
    os << "\n# covolume " << to_string(v.spectrum->covolume()) << ", radius " << c.radius << ", " << s.points.size()
       << " points\n";
    io::write_patch_csv(os, s);
    emit(c, os.str());
    return 0;
}

int cmd_verify(const Common& c, const std::string& patch_path) {
    const Polytope p = io::load_polytope(c.input);
    std::ifstream in(patch_path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + patch_path + "'");
    const SpectrumPatch s = io::read_patch_csv(in);
    if (s.dim != p.dim()) throw Error(ErrorCode::DimensionMismatch, "patch and polytope dimensions differ");
    Json j{{"points", s.points.size()}, {"exact", s.exact}, {"separation", s.separation}};
    const auto orth = verify_orthogonality(p, s, c.tolerance);
    j["orthogonality"] = {{"pass", orth.pass}, {"frequencies", orth.frequencies}, {"max_abs", orth.max_abs},
                          {"tolerance", orth.tolerance}};
    if (orth.witness) j["orthogonality"]["witness"] = io::to_json(*orth.witness);
    try {
        auto d = verify_density(p, s);
        j["density"] = {{"pass", d.pass}, {"density", d.density}, {"target", d.target}};
    } catch (const Error& e) {
        j["density"] = {{"skipped", e.what()}};
    }
    if (p.dim() == 2 || p.dim() == 3) {
        const auto v = decide_spectral(p);
        j["spectral"] = v.spectral;
        if (v.spectral) {
            std::vector<Vec> taus;
            for (const auto& fp : tau_vectors(p)) taus.push_back(fp.tau);
            auto c2 = condition_C2_check(s, taus);
            j["c2"] = {{"pass", c2.pass}, {"max_deviation", c2.max_deviation}, {"tolerance", c2.tolerance}};
            j["uniqueness"] = to_string(uniqueness_check(p, s).outcome);
        }
    }
    emit_json(c, j);
    return 0;
}

int cmd_classify(const Common& c) {
    const Polytope p = io::load_polytope(c.input);
    const auto t = venkov_mcmullen(p);
    Json belts = Json::array();
    for (const auto& b : t.belts) belts.push_back({{"direction", io::to_json(b.direction)}, {"length", b.facets.size()}});
    Json j{{"tiles", t.tiles}, {"reason", t.reason}, {"belts", belts}, {"is_prism", is_prism(p).has_value()}};
    if (t.tiles && p.dim() == 3) j["fedorov_class"] = std::string(to_string(fedorov_classify(p)));
    emit_json(c, j);
    return 0;
}

int cmd_export(const Common& c, const std::string& lattice, std::size_t copies) {
    const Polytope p = io::load_polytope(c.input);
    std::optional<Lattice> l;
    if (lattice == "T") l = lattice_T(p);
    else if (lattice == "integer") l = Lattice::integer(p.dim());
    else if (lattice != "none") throw Error(ErrorCode::ParseError, "--lattice: expected T, integer or none");
    const std::string fmt = c.format.empty() ? (p.dim() == 2 ? "svg" : "obj") : c.format;
    if (fmt == "svg") emit(c, export_svg(p, l, copies));
    else if (fmt == "obj") emit(c, export_obj(p, l, copies));
    else throw Error(ErrorCode::ParseError, "--format: expected svg or obj");
    return 0;
}

int cmd_oracle(const Common& c, const std::string& task, const std::string& xi_text) {
    const Polytope p = io::load_polytope(c.input);
    Json j{{"method", "bruteforce"}, {"task", task}};
    if (task == "volume") {
        auto v = oracle::mc_volume(p, oracle::bounding_config(p, c.samples, c.seed));
        j.update({{"value", v.value}, {"stderr", v.stderr_}, {"samples", v.count}, {"seed", v.seed},
                  {"simplex_volume", to_string(oracle::simplex_volume(p))}});
    } else if (task == "fourier") {
        const Vec xi = io::parse_frequency(xi_text);
        j["xi"] = io::to_json(xi);
        j["value"] = complex_json(oracle::simplex_ft(p, xi));
    } else if (task == "multiplicity") {
        const TauGroup g = tau_group(p);
        if (!g.lattice) throw Error(ErrorCode::RankDeficient, "tau vectors do not span");
        auto m = oracle::multiplicity_sample(p, g.generators, oracle::bounding_config(p, c.samples, c.seed));
        Json hist = Json::object();
        for (const auto& [k, n] : m.histogram) hist[std::to_string(k)] = n;
        j.update({{"min", m.min}, {"max", m.max}, {"histogram", hist}, {"samples", m.count}, {"seed", m.seed},
                  {"group_elements", m.group_elements}});
    } else {
        throw Error(ErrorCode::ParseError, "oracle task: expected volume, fourier or multiplicity");
    }
    emit_json(c, j);
    return 0;
}

int cmd_catalog(const Common& c, const std::string& action, const std::string& name) {
    if (action == "list") {
        std::ostringstream os;
        for (const auto& e : catalog::entries())
            os << e.name << "\t" << (e.tiler ? "tiler" : "non-tiler (" + e.witness + ")") << "\t" << e.description << "\n";
        emit(c, os.str());
        return 0;
    }
    if (action == "emit") {
        emit_json(c, io::polytope_to_json(catalog::make(name)));
        return 0;
    }
    throw Error(ErrorCode::ParseError, "catalog action: expected list or emit");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tiling, Fourier and spectrum analysis of convex polytopes with rational data"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);
    Common c;

    auto add_common = [&](CLI::App* sub, bool input = true) {
        if (input) sub->add_option("input", c.input, "catalog:<name>, a JSON file, or inline JSON")->required();
        sub->add_option("--radius", c.radius, "spectrum window radius")->capture_default_str();
        sub->add_option("--tolerance", c.tolerance, "relative zero tolerance")->capture_default_str();
        sub->add_option("--seed", c.seed, "sampling seed")->capture_default_str();
        sub->add_option("--samples", c.samples, "Monte-Carlo samples")->capture_default_str();
        sub->add_option("--format", c.format, "output format");
        sub->add_option("--output,-o", c.output, "output file (default stdout)");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline report as JSON");
    add_common(analyze_cmd);

    std::string xi_text;
    long long facet = -1;
    auto* fourier_cmd = app.add_subcommand("fourier", "transform of the indicator (or of a facet) at a frequency");
    add_common(fourier_cmd);
    fourier_cmd->add_option("--xi", xi_text, "frequency, e.g. 1/3,1/5,0")->required();
    fourier_cmd->add_option("--facet", facet, "facet index for the surface transform");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "dual-lattice spectrum patch (csv or json)");
    add_common(spectrum_cmd);

    std::string patch_path;
    auto* verify_cmd = app.add_subcommand("verify", "check a patch CSV against a polytope");
    add_common(verify_cmd);
    verify_cmd->add_option("--patch", patch_path, "patch CSV")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Venkov-McMullen test and Fedorov class");
    add_common(classify_cmd);

    std::string lattice = "T";
    std::size_t copies = 1;
    auto* export_cmd = app.add_subcommand("export", "SVG (2D) or OBJ (3D) of the tiling");
    add_common(export_cmd);
    export_cmd->add_option("--lattice", lattice, "T, integer or none")->capture_default_str();
    export_cmd->add_option("--copies", copies, "number of translates")->capture_default_str();

    std::string task, method = "bruteforce";
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference computations");
    oracle_cmd->add_option("task", task, "volume, fourier or multiplicity")->required();
    add_common(oracle_cmd);
    oracle_cmd->add_option("--method", method, "only bruteforce")->check(CLI::IsMember({"bruteforce"}));
    oracle_cmd->add_option("--xi", xi_text, "frequency for the fourier task");

    std::string action, name;
    auto* catalog_cmd = app.add_subcommand("catalog", "list or emit catalog shapes");
    catalog_cmd->add_option("action", action, "list or emit")->required();
    catalog_cmd->add_option("name", name, "shape name for emit");
    add_common(catalog_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(c);
        if (fourier_cmd->parsed()) return cmd_fourier(c, xi_text, facet);
        if (spectrum_cmd->parsed()) return cmd_spectrum(c);
        if (verify_cmd->parsed()) return cmd_verify(c, patch_path);
        if (classify_cmd->parsed()) return cmd_classify(c);
        if (export_cmd->parsed()) return cmd_export(c, lattice, copies);
        if (oracle_cmd->parsed()) return cmd_oracle(c, task, xi_text);
        if (catalog_cmd->parsed()) return cmd_catalog(c, action, name);
    } catch (const Error& e) {
        std::cerr << "spectile: " << e.what() << "\n";
        return e.code() == ErrorCode::PreconditionFailed ? kInvariantViolation : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "spectile: internal error: " << e.what() << "\n";
        return kInvariantViolation;
    }
    return 0;
}
