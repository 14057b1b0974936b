// Command-line front door: exact-arithmetic operations on the two-slope
// Mahavier fan, its shift dynamics, and the inverse-limit homeomorphism.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage error, 3 search budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lelek/json_io.hpp"
#include "lelek/render.hpp"

using namespace lelek;

namespace {

struct CommonArgs {
    std::string r = "1/2";
    std::string rho = "3";
    std::string output;
    unsigned long seed = 0;
    unsigned long budget = 512;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_budget = true) {
    cmd->add_option("--r", args.r, "slope r as a rational (0 < r < 1)");
    cmd->add_option("--rho", args.rho, "slope rho as a rational (rho > 1)");
    cmd->add_option("-o,--output", args.output, "write the result here instead of stdout");
    cmd->add_option("--seed", args.seed, "seed for randomized corpora (reserved)");
    if (with_budget) cmd->add_option("--budget", args.budget, "search budget on max(m,n)");
    cmd->set_config("--config")->description("JSON config mirroring the flags");
}

SlopePair slopes_of(const CommonArgs& args) {
    return require_nc(parse_rational(args.r), parse_rational(args.rho));
}

void emit(const CommonArgs& args, const std::string& text) {
    if (args.output.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(args.output, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + args.output + "'");
    out << text;
}

void emit_json(const CommonArgs& args, const Json& j) { emit(args, j.dump(2)); }

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path + "'");
    Json j;
    in >> j;
    return j;
}

// Flat or one-level-nested JSON config: {"find-monomial": {"lo": "2/5"}}.
class ConfigJson : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        Json j;
        input >> j;
        std::vector<CLI::ConfigItem> out;
        collect(j, {}, out);
        return out;
    }

private:
    static void collect(const Json& j, std::vector<std::string> parents,
                        std::vector<CLI::ConfigItem>& out) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object()) {
                auto nested = parents;
                nested.push_back(key);
                collect(value, nested, out);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = key;
            if (value.is_string())
                item.inputs = {value.get<std::string>()};
            else
                item.inputs = {value.dump()};
            out.push_back(std::move(item));
        }
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Exact dynamics on the two-slope Mahavier fan"};
    app.require_subcommand(1);
    app.config_formatter(std::make_shared<ConfigJson>());

    int exit_code = 0;

    // validate-params
    {
        auto args = std::make_shared<CommonArgs>();
        auto* cmd = app.add_subcommand("validate-params", "check the never-connect condition");
        add_common(cmd, *args, false);
        cmd->callback([args, &exit_code] {
            const NcResult res = validate_nc(parse_rational(args->r), parse_rational(args->rho));
            Json out{{"nc", res.accepted()}};
            if (!res.accepted()) {
                const auto& rej = *res.rejection;
                out["clause"] = rej.clause == NcClause::NonPositiveInput ? "non-positive-input"
                                : rej.clause == NcClause::OrderViolation ? "order-violation"
                                                                         : "dependent";
                out["detail"] = rej.detail;
                if (rej.witness)
                    out["witness"] = Json{{"k", rej.witness->first}, {"l", rej.witness->second}};
                exit_code = 1;
            }
            emit_json(*args, out);
        });
    }

    // find-monomial
    {
        auto args = std::make_shared<CommonArgs>();
        auto lo = std::make_shared<std::string>();
        auto hi = std::make_shared<std::string>();
        auto kfloor = std::make_shared<unsigned long>(0);
        auto lfloor = std::make_shared<unsigned long>(0);
        auto* cmd = app.add_subcommand("find-monomial", "monomial inside a target interval");
        add_common(cmd, *args);
        cmd->add_option("--lo", *lo, "target lower endpoint")->required();
        cmd->add_option("--hi", *hi, "target upper endpoint")->required();
        cmd->add_option("--kfloor", *kfloor, "minimal exponent of r");
        cmd->add_option("--lfloor", *lfloor, "minimal exponent of rho");
        cmd->callback([args, lo, hi, kfloor, lfloor] {
            const SlopePair sp = slopes_of(*args);
            SearchConstraint c{*kfloor, *lfloor, parse_rational(*lo), parse_rational(*hi)};
            const Monomial mono = find_monomial(sp, c, SearchOptions{args->budget, true});
            emit_json(*args, monomial_to_json(sp, mono));
        });
    }

    // density-profile
    {
        auto args = std::make_shared<CommonArgs>();
        auto bins = std::make_shared<unsigned long>(100);
        auto kfloor = std::make_shared<unsigned long>(0);
        auto lfloor = std::make_shared<unsigned long>(0);
        auto* cmd = app.add_subcommand("density-profile", "per-bin monomial witnesses in (0,1)");
        add_common(cmd, *args);
        cmd->add_option("--bins", *bins, "number of bins");
        cmd->add_option("--kfloor", *kfloor, "minimal exponent of r");
        cmd->add_option("--lfloor", *lfloor, "minimal exponent of rho");
        cmd->callback([args, bins, kfloor, lfloor] {
            const SlopePair sp = slopes_of(*args);
            const DensityProfile profile =
                density_profile(sp, *bins, *kfloor, *lfloor, SearchOptions{args->budget, true});
            emit_json(*args, density_profile_to_json(sp, profile));
        });
    }

    // make-cylinder
    {
        auto args = std::make_shared<CommonArgs>();
        auto point = std::make_shared<std::string>();
        auto eps = std::make_shared<std::string>("1/8");
        auto min_depth = std::make_shared<std::size_t>(1);
        auto* cmd = app.add_subcommand("make-cylinder", "coherent cylinder around a fan point");
        add_common(cmd, *args, false);
        cmd->add_option("--point", *point, "fan point JSON file")->required();
        cmd->add_option("--eps", *eps, "metric diameter bound");
        cmd->add_option("--min-depth", *min_depth, "minimal cylinder depth");
        cmd->callback([args, point, eps, min_depth] {
            const SlopePair sp = slopes_of(*args);
            const FanPoint z = fan_point_from_json(load_json(*point));
            const Cylinder c = build_cylinder(sp, z, parse_rational(*eps), *min_depth);
            emit_json(*args, cylinder_to_json(c));
        });
    }

    // meets-fan
    {
        auto args = std::make_shared<CommonArgs>();
        auto cylinder = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("meets-fan", "fan point inside a cylinder");
        add_common(cmd, *args);
        cmd->add_option("--cylinder", *cylinder, "cylinder JSON file")->required();
        cmd->callback([args, cylinder] {
            const SlopePair sp = slopes_of(*args);
            const Cylinder c = cylinder_from_json(sp, load_json(*cylinder));
            emit_json(*args, fan_point_to_json(meets_fan(sp, c, SearchOptions{args->budget, true})));
        });
    }

    // synthesize-orbit
    {
        auto args = std::make_shared<CommonArgs>();
        auto cylinders = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("synthesize-orbit", "dense-orbit program for a cylinder list");
        add_common(cmd, *args);
        cmd->add_option("--cylinders", *cylinders, "cylinder list JSON file")->required();
        cmd->callback([args, cylinders] {
            const SlopePair sp = slopes_of(*args);
            const std::vector<Cylinder> cyls = cylinders_from_json(sp, load_json(*cylinders));
            const OrbitProgram program = synthesize(sp, cyls, SearchOptions{args->budget, true});
            emit_json(*args, program_to_json(program));
        });
    }

    // verify-orbit
    {
        auto args = std::make_shared<CommonArgs>();
        auto program_path = std::make_shared<std::string>();
        auto cylinders = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("verify-orbit", "re-check a program's visit certificates");
        add_common(cmd, *args, false);
        cmd->add_option("--program", *program_path, "program JSON file")->required();
        cmd->add_option("--cylinders", *cylinders, "cylinder list JSON file")->required();
        cmd->callback([args, program_path, cylinders, &exit_code] {
            const SlopePair sp = slopes_of(*args);
            const std::vector<Cylinder> cyls = cylinders_from_json(sp, load_json(*cylinders));
            const OrbitProgram program = program_from_json(sp, load_json(*program_path), cyls);
            const std::vector<VisitCertificate> certs = verify(program, cyls);
            bool all_pass = true;
            for (const auto& cert : certs) all_pass = all_pass && cert.pass;
            emit_json(*args, certificates_to_json(certs));
            if (!all_pass) exit_code = 1;
        });
    }

    // witness-transitivity
    {
        auto args = std::make_shared<CommonArgs>();
        auto u_path = std::make_shared<std::string>();
        auto v_path = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("witness-transitivity", "point of u whose shift enters v");
        add_common(cmd, *args);
        cmd->add_option("--u", *u_path, "source cylinder JSON file")->required();
        cmd->add_option("--v", *v_path, "target cylinder JSON file")->required();
        cmd->callback([args, u_path, v_path] {
            const SlopePair sp = slopes_of(*args);
            const Cylinder u = cylinder_from_json(sp, load_json(*u_path));
            const Cylinder v = cylinder_from_json(sp, load_json(*v_path));
            const TransitivityWitness w =
                witness_transitivity(sp, u, v, SearchOptions{args->budget, true});
            emit_json(*args, Json{{"n", w.n}, {"point", fan_point_to_json(w.point)}});
        });
    }

    // classify-endpoint
    {
        auto args = std::make_shared<CommonArgs>();
        auto point = std::make_shared<std::string>();
        auto depth = std::make_shared<std::size_t>(256);
        auto tol = std::make_shared<std::string>("1/1024");
        auto* cmd = app.add_subcommand("classify-endpoint", "three-valued endpoint verdict");
        add_common(cmd, *args, false);
        cmd->add_option("--point", *point, "fan point JSON file")->required();
        cmd->add_option("--depth", *depth, "scan depth for undecidable tails");
        cmd->add_option("--tol", *tol, "early-stop threshold near 1");
        cmd->callback([args, point, depth, tol] {
            const SlopePair sp = slopes_of(*args);
            const FanPoint p = fan_point_from_json(load_json(*point));
            emit_json(*args, endpoint_class_to_json(
                                 classify_endpoint(sp, p, *depth, parse_rational(*tol))));
        });
    }

    // make-endpoint
    {
        auto args = std::make_shared<CommonArgs>();
        auto lo = std::make_shared<std::string>();
        auto hi = std::make_shared<std::string>();
        auto kfloor = std::make_shared<unsigned long>(1);
        auto lfloor = std::make_shared<unsigned long>(1);
        auto* cmd = app.add_subcommand("make-endpoint", "endpoint with base in a target interval");
        add_common(cmd, *args);
        cmd->add_option("--lo", *lo, "base target lower endpoint")->required();
        cmd->add_option("--hi", *hi, "base target upper endpoint")->required();
        cmd->add_option("--kfloor", *kfloor, "minimal exponent of r");
        cmd->add_option("--lfloor", *lfloor, "minimal exponent of rho");
        cmd->callback([args, lo, hi, kfloor, lfloor] {
            const SlopePair sp = slopes_of(*args);
            SearchConstraint seed{*kfloor, *lfloor, parse_rational(*lo), parse_rational(*hi)};
            emit_json(*args, fan_point_to_json(
                                 make_endpoint(sp, seed, SearchOptions{args->budget, true})));
        });
    }

    // shift
    {
        auto args = std::make_shared<CommonArgs>();
        auto point = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("shift", "drop the first coordinate of a fan point");
        add_common(cmd, *args, false);
        cmd->add_option("--point", *point, "fan point JSON file")->required();
        cmd->callback([args, point] {
            const SlopePair sp = slopes_of(*args);
            emit_json(*args,
                      fan_point_to_json(shift(sp, fan_point_from_json(load_json(*point)))));
        });
    }

    // invlim-shift / invlim-unshift
    for (const bool forward : {true, false}) {
        auto args = std::make_shared<CommonArgs>();
        auto point = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand(forward ? "invlim-shift" : "invlim-unshift",
                                       forward ? "forward shift on the inverse limit"
                                               : "inverse of the forward shift");
        add_common(cmd, *args, false);
        cmd->add_option("--point", *point, "inverse-limit point JSON file")->required();
        cmd->callback([args, point, forward] {
            const SlopePair sp = slopes_of(*args);
            const InvLimPoint p = invlim_point_from_json(load_json(*point));
            emit_json(*args, invlim_point_to_json(forward ? shift_forward(sp, p)
                                                          : shift_backward(sp, p)));
        });
    }

    // invlim-endpoint-near
    {
        auto args = std::make_shared<CommonArgs>();
        auto point = std::make_shared<std::string>();
        auto eps = std::make_shared<std::string>("1/16");
        auto* cmd = app.add_subcommand("invlim-endpoint-near", "endpoint within eps of a point");
        add_common(cmd, *args);
        cmd->add_option("--point", *point, "inverse-limit point JSON file")->required();
        cmd->add_option("--eps", *eps, "metric radius");
        cmd->callback([args, point, eps] {
            const SlopePair sp = slopes_of(*args);
            const InvLimPoint t = invlim_point_from_json(load_json(*point));
            emit_json(*args, invlim_point_to_json(endpoint_near(
                                 sp, t, parse_rational(*eps), SearchOptions{args->budget, true})));
        });
    }

    // invlim-classify
    {
        auto args = std::make_shared<CommonArgs>();
        auto point = std::make_shared<std::string>();
        auto horizon = std::make_shared<std::size_t>(256);
        auto tol = std::make_shared<std::string>("1/1024");
        auto* cmd = app.add_subcommand("invlim-classify", "endpoint verdict on the inverse limit");
        add_common(cmd, *args, false);
        cmd->add_option("--point", *point, "inverse-limit point JSON file")->required();
        cmd->add_option("--horizon", *horizon, "scan horizon for undecidable tails");
        cmd->add_option("--tol", *tol, "early-stop threshold near 1");
        cmd->callback([args, point, horizon, tol] {
            const SlopePair sp = slopes_of(*args);
            const InvLimPoint p = invlim_point_from_json(load_json(*point));
            emit_json(*args, endpoint_class_to_json(classify_endpoint_invlim(
                                 sp, p, *horizon, parse_rational(*tol))));
        });
    }

    // render-fan
    {
        auto args = std::make_shared<CommonArgs>();
        auto spec = std::make_shared<RenderSpec>();
        auto* cmd = app.add_subcommand("render-fan", "SVG picture of the fan");
        add_common(cmd, *args, false);
        cmd->add_option("--depth", spec->depth, "word length");
        cmd->add_option("--word-budget", spec->word_budget, "maximal number of segments");
        cmd->add_option("--width", spec->width, "canvas width in px");
        cmd->add_option("--height", spec->height, "canvas height in px");
        cmd->callback([args, spec] {
            const SlopePair sp = slopes_of(*args);
            emit(*args, render_fan(sp, *spec));
        });
    }

    // render-orbit
    {
        auto args = std::make_shared<CommonArgs>();
        auto spec = std::make_shared<RenderSpec>();
        auto program_path = std::make_shared<std::string>();
        auto cylinders = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand("render-orbit", "SVG step plot of a realized orbit");
        add_common(cmd, *args, false);
        cmd->add_option("--program", *program_path, "program JSON file")->required();
        cmd->add_option("--cylinders", *cylinders, "cylinder list JSON file")->required();
        cmd->add_option("--width", spec->width, "canvas width in px");
        cmd->add_option("--height", spec->height, "canvas height in px");
        cmd->callback([args, spec, program_path, cylinders] {
            const SlopePair sp = slopes_of(*args);
            const std::vector<Cylinder> cyls = cylinders_from_json(sp, load_json(*cylinders));
            const OrbitProgram program = program_from_json(sp, load_json(*program_path), cyls);
            emit(*args, render_orbit(program, cyls, *spec));
        });
    }

    // noninjectivity-witness
    {
        auto args = std::make_shared<CommonArgs>();
        auto* cmd = app.add_subcommand("noninjectivity-witness",
                                       "distinct points with the same shift image");
        add_common(cmd, *args, false);
        cmd->callback([args] {
            const SlopePair sp = slopes_of(*args);
            const NonInjectivityPair w = non_injectivity_witness(sp);
            emit_json(*args, Json{{"p1", fan_point_to_json(w.p1)},
                                  {"p2", fan_point_to_json(w.p2)},
                                  {"q", fan_point_to_json(w.q)}});
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SearchExhausted& e) {
        std::cerr << "search exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
