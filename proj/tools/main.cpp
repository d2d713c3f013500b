#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "recomp/decomp.hpp"
#include "recomp/json_io.hpp"
#include "recomp/lattes.hpp"
#include "recomp/map_parser.hpp"
#include "recomp/modular.hpp"
#include "recomp/spectrum.hpp"
#include "recomp/verify.hpp"

using namespace recomp;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
    bool pretty = false;

    void emit(const Json& j) const { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }
};

Json blocks_at(const Decomposition& d, const PointP1& base) {
    try {
        const auto part = blocks(d, base);
        Json out = {{"basepoint", to_json(base)}, {"blocks", to_json(part)}};
        if (base.is_infinity()) {
            const auto& b = part.blocks[block_containing(part, base)];
            Json inf_block = Json::array();
            for (std::size_t i : b) inf_block.push_back(to_json(part.fiber[i]));
            out["infinity_block"] = std::move(inf_block);
        }
        return out;
    } catch (const Error& e) {
        return {{"basepoint", to_json(base)}, {"error", e.what()}};
    }
}

int cmd_compose(const std::vector<std::string>& maps, const Output& out) {
    if (maps.empty()) throw CLI::ValidationError("--map", "at least one map is required");
    RatMap acc = parse_map(maps.back());
    for (auto it = maps.rbegin() + 1; it != maps.rend(); ++it) acc = compose(parse_map(*it), acc);
    out.emit({{"map", to_json(acc)}, {"degree", acc.degree()}, {"expression", to_string(acc)}});
    return 0;
}

int cmd_decompose(const std::optional<std::string>& lambda, const std::optional<std::string>& map, const Output& out) {
    Json result;
    if (lambda) {
        const auto L = legendre_map(parse_rational(*lambda));
        Json list = Json::array();
        for (const auto& d : canonical_decompositions(L)) {
            Json entry = to_json(d);
            const Json b = blocks_at(d, PointP1::infinity());
            entry["infinity_block"] = b.value("infinity_block", Json());
            entry["blocks"] = b.value("blocks", Json());
            list.push_back(std::move(entry));
        }
        result = {{"lattes", to_json(L)}, {"decompositions", std::move(list)}};
    } else {
        const RatMap F = parse_map(*map);
        const auto found = find_degree2_decompositions(F);
        Json list = Json::array();
        for (const auto& d : found.decompositions) {
            Json entry = to_json(d);
            entry["fiber_blocks"] = blocks_at(d, found.basepoint);
            entry["infinity_blocks"] = blocks_at(d, PointP1::infinity());
            list.push_back(std::move(entry));
        }
        result = {{"map", to_json(F)},
                  {"decompositions", std::move(list)},
                  {"exact_fiber", found.exact_fiber},
                  {"basepoint", to_json(found.basepoint)},
                  {"notes", found.notes}};
    }
    out.emit(result);
    return 0;
}

RatMap map_from(const std::optional<std::string>& lambda, const std::optional<std::string>& map) {
    if (lambda) return legendre_map(parse_rational(*lambda)).map;
    return parse_map(*map);
}

int cmd_spectrum(const std::optional<std::string>& lambda, const std::optional<std::string>& map, int smax, const Output& out) {
    const RatMap F = map_from(lambda, map);
    const auto spec = spectrum(F, smax);
    Json j = to_json(spec);
    bool parabolic = false;
    for (const auto& e : spec.periods.at(1)) parabolic = parabolic || std::abs(e.multiplier - 1.0) <= 1e-6;
    if (!parabolic) j["index_sum"] = to_json(holomorphic_index_sum(spec));
    out.emit(j);
    return 0;
}

int cmd_lattes(const std::optional<std::string>& lambda, const std::optional<std::string>& map, const Output& out) {
    if (lambda) {
        const auto L = legendre_map(parse_rational(*lambda));
        Json j = to_json(L);
        j["postcritical"] = to_json(postcritical_set(L.map));
        out.emit(j);
        return 0;
    }
    const RatMap F = parse_map(*map);
    Json j = {{"map", to_json(F)}, {"postcritical", to_json(postcritical_set(F))}};
    try {
        j["j"] = to_json(recover_j(F));
    } catch (const Error& e) {
        j["j_error"] = e.what();
    }
    out.emit(j);
    return 0;
}

int cmd_orbit(const std::string& j0, int depth, int cap, double tol, bool dot, const Output& out) {
    if (depth > cap)
        throw CLI::ValidationError("--depth", std::to_string(depth) + " exceeds the cap " + std::to_string(cap) +
                                                  " (raise it with --max-depth; node count roughly doubles per level)");
    OrbitOptions opts;
    opts.dedup_tol = tol;
    const auto g = orbit_bfs(Scalar(parse_rational(j0)), depth, opts);
    if (dot) {
        std::cout << to_dot(g);
        return 0;
    }
    Json j = to_json(g);
    Json counts = Json::array();
    for (int d = 0; d <= depth; ++d) counts.push_back(g.count_up_to(d));
    j["counts"] = std::move(counts);
    out.emit(j);
    return 0;
}

Phi2 perturbed_phi(const std::string& spec) {
    Phi2 phi;
    if (spec.empty()) return phi;
    std::istringstream in(spec);
    int i = -1, k = -1;
    long delta = 0;
    char c1 = 0, c2 = 0;
    if (!(in >> i >> c1 >> k >> c2 >> delta) || c1 != ',' || c2 != ',' || i < 0 || i > 3 || k < 0 || k > 3)
        throw CLI::ValidationError("--phi2-perturb", "expected i,k,delta with 0 <= i, k <= 3");
    phi.set_coeff(i, k, phi.coeff(i, k) + delta);
    return phi;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& perturb, const Output& out) {
    VerifyOptions opts;
    opts.seed = seed;
    opts.phi = perturbed_phi(perturb);
    const auto report = run_verify(suite, opts);
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
    out.emit({{"suite", report.suite}, {"status", report.passed() ? "pass" : "fail"}, {"checks", std::move(checks)}});
    return report.passed() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational maps, multiplier spectra, Lattes decompositions and the level-2 modular correspondence"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--pretty", out.pretty, "Indent JSON output");
    app.add_flag("--json", "JSON output (the default)");

    std::vector<std::string> compose_maps;
    auto* compose_cmd = app.add_subcommand("compose", "Compose maps: the first --map is outermost");
    compose_cmd->add_option("--map", compose_maps, "Map as expression or JSON {\"num\":[...],\"den\":[...]}")->required();

    std::optional<std::string> lambda, map;
    auto add_input = [&](CLI::App* cmd) {
        auto* l = cmd->add_option("--lambda", lambda, "Legendre parameter (p/q)");
        auto* m = cmd->add_option("--map", map, "Map as expression or JSON");
        l->excludes(m);
        m->excludes(l);
    };
    auto* decompose_cmd = app.add_subcommand("decompose", "Degree-2 decompositions of a degree-4 map");
    add_input(decompose_cmd);
    int smax = 3;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Multiplier spectrum up to period smax");
    add_input(spectrum_cmd);
    spectrum_cmd->add_option("--smax", smax, "Largest period")->check(CLI::Range(1, 6));
    auto* lattes_cmd = app.add_subcommand("lattes", "Legendre Lattes map, postcritical set and j");
    add_input(lattes_cmd);

    std::string j0;
    int depth = 1, cap = 6;
    double tol = 1e-6;
    bool dot = false;
    auto* orbit_cmd = app.add_subcommand("orbit", "Breadth-first orbit of j under the modular correspondence");
    orbit_cmd->add_option("--j", j0, "Starting j-invariant (p/q)")->required();
    orbit_cmd->add_option("--depth", depth, "Number of levels")->check(CLI::NonNegativeNumber);
    orbit_cmd->add_option("--max-depth", cap, "Depth cap")->check(CLI::NonNegativeNumber);
    orbit_cmd->add_option("--tol", tol, "Relative deduplication tolerance")->check(CLI::PositiveNumber);
    orbit_cmd->add_flag("--dot", dot, "Emit Graphviz instead of JSON");

    std::string suite = "all";
    std::uint64_t seed = 1;
    std::string perturb;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every check passes");
    verify_cmd->add_option("suite", suite, "Suite name")->check(CLI::IsMember(verify_suites()));
    verify_cmd->add_option("--seed", seed, "Seed for randomized checks");
    verify_cmd->add_option("--phi2-perturb", perturb, "Add delta to the coefficient of x^i y^k: i,k,delta");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        for (auto* cmd : {decompose_cmd, spectrum_cmd, lattes_cmd})
            if (cmd->parsed() && !lambda && !map) throw CLI::ValidationError("one of --lambda or --map is required");
        if (compose_cmd->parsed()) return cmd_compose(compose_maps, out);
        if (decompose_cmd->parsed()) return cmd_decompose(lambda, map, out);
        if (spectrum_cmd->parsed()) return cmd_spectrum(lambda, map, smax, out);
        if (lattes_cmd->parsed()) return cmd_lattes(lambda, map, out);
        if (orbit_cmd->parsed()) return cmd_orbit(j0, depth, cap, tol, dot, out);
        if (verify_cmd->parsed()) return cmd_verify(suite, seed, perturb, out);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
