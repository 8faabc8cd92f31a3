// speclim — spectral radii, limit points, classifications, and theorem
// verification sweeps for small graphs under several matrix models.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "speclim/classifiers.hpp"
#include "speclim/enumerate.hpp"
#include "speclim/graph.hpp"
#include "speclim/hypergraph.hpp"
#include "speclim/io.hpp"
#include "speclim/limit_points.hpp"
#include "speclim/matrices.hpp"
#include "speclim/spectra.hpp"

using nlohmann::json;
using namespace speclim;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long> parse_params(const std::string& s) {
    std::vector<long> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            out.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw UsageError("bad family parameter '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

FamilySpec parse_family(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("family spec must look like name:params");
    std::string name = text.substr(0, colon);
    FamilySpec spec;
    spec.params = parse_params(text.substr(colon + 1));
    if (name == "path") spec.family = Family::path;
    else if (name == "cycle") spec.family = Family::cycle;
    else if (name == "star") spec.family = Family::star;
    else if (name == "tshape") spec.family = Family::t_shape;
    else if (name == "hshape") spec.family = Family::h_shape;
    else if (name == "doublesnake") spec.family = Family::double_snake;
    else if (name == "caterpillar") spec.family = Family::caterpillar;
    else if (name == "dagger") spec.family = Family::dagger;
    else if (name == "dcycle") spec.family = Family::directed_cycle;
    else if (name == "ctilde") spec.family = Family::c_tilde;
    else if (name == "ctildeprime") spec.family = Family::c_tilde_prime;
    else if (name == "ctildepp") spec.family = Family::c_tilde_double_prime;
    else if (name == "box") spec.family = Family::box;
    else throw UsageError("unknown family '" + name + "'");
    return spec;
}

AnyGraph load_input(const std::string& family, const std::string& input) {
    if (family.empty() == input.empty())
        throw UsageError("exactly one of --family / --input is required");
    if (!family.empty()) {
        BuiltGraph built = build_family(parse_family(family));
        if (std::holds_alternative<Graph>(built)) return std::get<Graph>(built);
        return std::get<MixedGraph>(built);
    }
    return read_graph_file(input);
}

json spectrum_json(const Spectrum& sp) {
    json evs = json::array();
    for (double x : sp.eigenvalues) evs.push_back(round12(x));
    return evs;
}

// One scalar-with-metadata record printed in the requested format.
void emit(const json& obj, const std::string& format) {
    if (format == "json") {
        std::cout << obj.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::string header, row;
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (!header.empty()) {
                header += ",";
                row += ",";
            }
            header += it.key();
            row += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        }
        std::cout << header << "\n" << row << "\n";
        return;
    }
    for (auto it = obj.begin(); it != obj.end(); ++it)
        std::cout << it.key() << ": "
                  << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                  << "\n";
}

struct ModelChoice {
    std::string name = "A";
    double alpha = 0.0;
    bool alpha_set = false;
};

double radius_for(const AnyGraph& g, const ModelChoice& mc) {
    if (mc.name == "A" || mc.name == "L" || mc.name == "Q" || mc.name == "Aalpha") {
        if (!std::holds_alternative<Graph>(g))
            throw UsageError("model " + mc.name + " needs an undirected unsigned graph");
        Model m = mc.name == "A" ? Model::A
                                 : (mc.name == "L" ? Model::L
                                                   : (mc.name == "Q" ? Model::Q : Model::Aalpha));
        if (mc.name == "Aalpha" && !mc.alpha_set) throw UsageError("model Aalpha requires --alpha");
        return spectral_radius(std::get<Graph>(g), m, mc.alpha);
    }
    if (mc.name == "signed") {
        if (std::holds_alternative<SignedGraph>(g)) return spectral_radius(std::get<SignedGraph>(g));
        if (std::holds_alternative<Graph>(g))
            return spectral_radius(SignedGraph::all_positive(std::get<Graph>(g)));
        throw UsageError("model signed needs a signed (or plain) graph");
    }
    if (mc.name == "hermitian") {
        if (std::holds_alternative<MixedGraph>(g)) return spectral_radius(std::get<MixedGraph>(g));
        if (std::holds_alternative<Graph>(g))
            return spectral_radius(MixedGraph::all_digons(std::get<Graph>(g)));
        throw UsageError("model hermitian needs a mixed (or plain) graph");
    }
    if (mc.name == "skew") {
        if (!std::holds_alternative<OrientedGraph>(g))
            throw UsageError("model skew needs an oriented graph (edges 'u -> v')");
        return spectral_radius(std::get<OrientedGraph>(g));
    }
    throw UsageError("unknown model '" + mc.name + "'");
}

Spectrum spectrum_for(const AnyGraph& g, const ModelChoice& mc) {
    if (mc.name == "A" || mc.name == "L" || mc.name == "Q" || mc.name == "Aalpha") {
        if (!std::holds_alternative<Graph>(g))
            throw UsageError("model " + mc.name + " needs an undirected unsigned graph");
        const Graph& gg = std::get<Graph>(g);
        if (mc.name == "A") return eigenvalues(adjacency(gg));
        if (mc.name == "L") return eigenvalues(laplacian(gg));
        if (mc.name == "Q") return eigenvalues(signless_laplacian(gg));
        if (!mc.alpha_set) throw UsageError("model Aalpha requires --alpha");
        return eigenvalues(a_alpha(gg, mc.alpha));
    }
    if (mc.name == "signed") {
        if (std::holds_alternative<SignedGraph>(g))
            return eigenvalues(signed_adjacency(std::get<SignedGraph>(g)));
        if (std::holds_alternative<Graph>(g))
            return eigenvalues(signed_adjacency(SignedGraph::all_positive(std::get<Graph>(g))));
        throw UsageError("model signed needs a signed (or plain) graph");
    }
    if (mc.name == "hermitian") {
        if (std::holds_alternative<MixedGraph>(g))
            return eigenvalues(hermitian_adjacency(std::get<MixedGraph>(g)));
        if (std::holds_alternative<Graph>(g))
            return eigenvalues(hermitian_adjacency(MixedGraph::all_digons(std::get<Graph>(g))));
        throw UsageError("model hermitian needs a mixed (or plain) graph");
    }
    if (mc.name == "skew") {
        if (std::holds_alternative<OrientedGraph>(g))
            return eigenvalues(skew_adjacency(std::get<OrientedGraph>(g)));
        throw UsageError("model skew needs an oriented graph (edges 'u -> v')");
    }
    throw UsageError("unknown model '" + mc.name + "'");
}

int graph_order(const AnyGraph& g) {
    if (std::holds_alternative<Graph>(g)) return std::get<Graph>(g).n;
    if (std::holds_alternative<SignedGraph>(g)) return std::get<SignedGraph>(g).base.n;
    if (std::holds_alternative<MixedGraph>(g)) return std::get<MixedGraph>(g).n;
    return std::get<OrientedGraph>(g).base.n;
}

json limit_json(const std::string& name, int n, const LimitReport& rep) {
    json j;
    j["name"] = name;
    if (n >= 0) j["n"] = n;
    j["value"] = round12(rep.value);
    j["residual"] = rep.residual;
    j["equation"] = rep.defining_equation;
    j["bracket_lo"] = round12(rep.lo);
    j["bracket_hi"] = round12(rep.hi);
    j["iterations"] = rep.iterations;
    return j;
}

UniformHypergraph parse_hyperfamily(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("hypergraph family spec must look like name:params");
    std::string name = text.substr(0, colon);
    auto p = parse_params(text.substr(colon + 1));
    auto want = [&](std::size_t k) {
        if (p.size() != k) throw UsageError("hypergraph family: wrong parameter count");
    };
    auto pi = [&](std::size_t i) { return static_cast<int>(p[i]); };
    if (name == "hyperpath") {
        want(2);
        return hyperpath(pi(0), pi(1));
    }
    if (name == "hypercycle") {
        want(2);
        return hypercycle(pi(0), pi(1));
    }
    if (name == "e") {
        want(3);
        return e_family(pi(0), pi(1), pi(2));
    }
    if (name == "f") {
        want(3);
        return f_family(pi(0), pi(1), pi(2));
    }
    if (name == "g") {
        want(5);
        return g_family(pi(0), pi(1), pi(2), pi(3), pi(4));
    }
    throw UsageError("unknown hypergraph family '" + name + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"spectral radii, limit points and Hoffman-type classification for small graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "output format: json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    std::string family, input;
    ModelChoice mc;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "family literal, e.g. path:7 or tshape:1,2,4");
        cmd->add_option("--input", input, "graph file");
        cmd->add_option("--model", mc.name, "A, L, Q, Aalpha, signed, hermitian, skew");
        cmd->add_option("--alpha", mc.alpha, "alpha for the Aalpha model")
            ->check(CLI::Range(0.0, 1.0))
            ->each([&](const std::string&) { mc.alpha_set = true; });
    };

    auto* cmd_radius = app.add_subcommand("radius", "spectral radius of a graph under a model");
    add_io(cmd_radius);
    auto* cmd_spectrum = app.add_subcommand("spectrum", "all eigenvalues under a model");
    add_io(cmd_spectrum);
    auto* cmd_classify = app.add_subcommand("classify", "region + structural family classification");
    add_io(cmd_classify);

    auto* cmd_limits = app.add_subcommand("limits", "limit points and threshold constants");
    int hoffman_n = -1, guo_n = -1, thresholds_n = -1;
    bool want_constants = false;
    std::string chi_family, chi2_family, xy_spec;
    int chi_vertex = 0;
    double chi_alpha = 0.0;
    cmd_limits->add_option("--hoffman", hoffman_n, "eta_n");
    cmd_limits->add_option("--guo", guo_n, "alpha_n");
    cmd_limits->add_flag("--constants", want_constants, "named constants");
    cmd_limits->add_option("--thresholds", thresholds_n, "s1(n), s2, s3, s4");
    cmd_limits->add_option("--chi", chi_family, "pendant-path limit for a family literal");
    cmd_limits->add_option("--chi2", chi2_family, "two-pendant-path limit for a family literal");
    cmd_limits->add_option("--xy", xy_spec, "bridge limit: XFAM/xvertex/YFAM/yvertex");
    cmd_limits->add_option("--vertex", chi_vertex, "attachment vertex for --chi/--chi2");
    cmd_limits->add_option("--alpha", chi_alpha, "alpha for chi limits")->check(CLI::Range(0.0, 1.0));

    auto* cmd_verify = app.add_subcommand("verify", "exhaustive theorem verification sweep");
    std::string theorem;
    int nmax = 9, threads = 0;
    cmd_verify
        ->add_option("--theorem", theorem,
                     "one of: A_lt2 A_eq2 A_interval Q_lt4 Q_eq4 L_lt4 L_eq4 LQ_bipartite "
                     "Aalpha2 quipu_shape quipu_diameter")
        ->required();
    cmd_verify->add_option("--nmax", nmax, "maximum order");
    cmd_verify->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* cmd_hyper = app.add_subcommand("hypergraph", "adjacency-tensor spectral radius");
    std::string hyper_family, hyper_input;
    cmd_hyper->add_option("--family", hyper_family,
                          "hyperpath:r,m hypercycle:r,m e:i,j,k f:i,j,k g:i,j,k,l,t");
    cmd_hyper->add_option("--input", hyper_input, "hypergraph file");

    auto* cmd_shearer = app.add_subcommand("shearer", "greedy caterpillar approach sequence");
    double target = 2.1;
    int steps = 30;
    cmd_shearer->add_option("--target", target, "target spectral radius")->required();
    cmd_shearer->add_option("--steps", steps, "number of spine extensions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_radius->parsed()) {
            AnyGraph g = load_input(family, input);
            json j;
            j["command"] = "radius";
            j["model"] = mc.name;
            if (mc.alpha_set) j["alpha"] = mc.alpha;
            j["n"] = graph_order(g);
            j["radius"] = round12(radius_for(g, mc));
            emit(j, format);
        } else if (cmd_spectrum->parsed()) {
            AnyGraph g = load_input(family, input);
            Spectrum sp = spectrum_for(g, mc);
            json j;
            j["command"] = "spectrum";
            j["model"] = mc.name;
            if (mc.alpha_set) j["alpha"] = mc.alpha;
            j["n"] = graph_order(g);
            j["eigenvalues"] = spectrum_json(sp);
            j["radius"] = round12(sp.radius);
            emit(j, format);
        } else if (cmd_classify->parsed()) {
            AnyGraph g = load_input(family, input);
            ClassificationResult res;
            if (mc.name == "A" || mc.name == "L" || mc.name == "Q" || mc.name == "Aalpha") {
                if (!std::holds_alternative<Graph>(g))
                    throw UsageError("model " + mc.name + " needs an undirected unsigned graph");
                const Graph& gg = std::get<Graph>(g);
                if (mc.name == "A") res = classify_A(gg);
                else if (mc.name == "L") res = classify_L(gg);
                else if (mc.name == "Q") res = classify_Q(gg);
                else {
                    if (!mc.alpha_set) throw UsageError("model Aalpha requires --alpha");
                    res = classify_Aalpha(gg, mc.alpha);
                }
            } else if (mc.name == "hermitian") {
                if (std::holds_alternative<MixedGraph>(g))
                    res = classify_mixed(std::get<MixedGraph>(g));
                else if (std::holds_alternative<Graph>(g))
                    res = classify_mixed(MixedGraph::all_digons(std::get<Graph>(g)));
                else
                    throw UsageError("model hermitian needs a mixed (or plain) graph");
            } else {
                throw UsageError("classify supports models A, L, Q, Aalpha, hermitian");
            }
            json j;
            j["command"] = "classify";
            j["model"] = res.model;
            if (mc.alpha_set) j["alpha"] = mc.alpha;
            j["region"] = res.region;
            j["family"] = res.family ? json(*res.family) : json(nullptr);
            j["radius"] = round12(res.radius);
            j["agreement"] = res.agreement;
            emit(j, format);
        } else if (cmd_limits->parsed()) {
            int actions = (hoffman_n >= 0) + (guo_n >= 0) + (thresholds_n >= 0) +
                          (want_constants ? 1 : 0) + (!chi_family.empty() ? 1 : 0) +
                          (!chi2_family.empty() ? 1 : 0) + (!xy_spec.empty() ? 1 : 0);
            if (actions != 1) throw UsageError("limits: pick exactly one action");
            if (hoffman_n >= 0) {
                emit(limit_json("eta", hoffman_n, hoffman_eta(hoffman_n)), format);
            } else if (guo_n >= 0) {
                emit(limit_json("alpha", guo_n, guo_alpha(guo_n)), format);
            } else if (want_constants) {
                Constants c = constants();
                json j;
                j["tau"] = round12(c.tau);
                j["rho1"] = round12(c.rho1);
                j["rho2"] = round12(c.rho2);
                j["omega"] = round12(c.omega);
                j["epsilon"] = round12(c.epsilon);
                j["tau1"] = round12(c.tau1);
                j["tau2"] = round12(c.tau2);
                emit(j, format);
            } else if (thresholds_n >= 0) {
                AalphaThresholds t = aalpha_thresholds(thresholds_n);
                json j;
                j["n"] = thresholds_n;
                j["s1"] = round12(t.s1);
                j["s2"] = round12(t.s2);
                j["s3"] = round12(t.s3);
                j["s4"] = round12(t.s4);
                emit(j, format);
            } else if (!chi_family.empty() || !chi2_family.empty()) {
                bool two = !chi2_family.empty();
                BuiltGraph built = build_family(parse_family(two ? chi2_family : chi_family));
                if (!std::holds_alternative<Graph>(built))
                    throw UsageError("chi limits need an undirected family");
                const Graph& g = std::get<Graph>(built);
                LimitReport rep =
                    two ? chi2_u(g, chi_vertex, chi_alpha) : chi_u(g, chi_vertex, chi_alpha);
                json j = limit_json(two ? "chi2_u" : "chi_u", -1, rep);
                j["alpha"] = chi_alpha;
                j["vertex"] = chi_vertex;
                emit(j, format);
            } else {
                // xy_spec: XFAM/xvertex/YFAM/yvertex
                std::vector<std::string> parts;
                std::size_t pos = 0;
                while (pos <= xy_spec.size()) {
                    std::size_t slash = xy_spec.find('/', pos);
                    parts.push_back(xy_spec.substr(
                        pos, slash == std::string::npos ? std::string::npos : slash - pos));
                    if (slash == std::string::npos) break;
                    pos = slash + 1;
                }
                if (parts.size() != 4) throw UsageError("--xy needs XFAM/xvertex/YFAM/yvertex");
                BuiltGraph bx = build_family(parse_family(parts[0]));
                BuiltGraph by = build_family(parse_family(parts[2]));
                if (!std::holds_alternative<Graph>(bx) || !std::holds_alternative<Graph>(by))
                    throw UsageError("--xy needs undirected families");
                int vx = static_cast<int>(std::stol(parts[1]));
                int vy = static_cast<int>(std::stol(parts[3]));
                LimitReport rep =
                    xy_limit(std::get<Graph>(bx), vx, std::get<Graph>(by), vy, chi_alpha);
                json j = limit_json("xy_limit", -1, rep);
                j["alpha"] = chi_alpha;
                emit(j, format);
            }
        } else if (cmd_verify->parsed()) {
            VerificationReport rep = verify_theorem(theorem, nmax, threads);
            json j;
            j["theorem"] = rep.theorem_id;
            j["n_max"] = rep.n_max;
            j["graphs_checked"] = rep.graphs_checked;
            j["pass"] = rep.pass();
            json ms = json::array();
            for (const auto& m : rep.mismatches)
                ms.push_back({{"graph", m.graph}, {"expected", m.expected}, {"observed", m.observed}});
            j["mismatches"] = ms;
            emit(j, format);
            return rep.pass() ? 0 : 1;
        } else if (cmd_hyper->parsed()) {
            if (hyper_family.empty() == hyper_input.empty())
                throw UsageError("hypergraph: exactly one of --family / --input is required");
            UniformHypergraph h =
                hyper_input.empty() ? parse_hyperfamily(hyper_family)
                                    : read_hypergraph_file(hyper_input);
            TensorRadiusReport rep = tensor_radius(h);
            json j;
            j["command"] = "hypergraph";
            j["r"] = h.r;
            j["n"] = h.n;
            j["m"] = h.edges.size();
            j["radius"] = round12(rep.value);
            j["iterations"] = rep.iterations;
            j["residual"] = rep.residual;
            emit(j, format);
        } else if (cmd_shearer->parsed()) {
            auto seq = shearer_approach(target, steps);
            if (format == "json") {
                json arr = json::array();
                for (std::size_t i = 0; i < seq.size(); ++i) {
                    json j;
                    j["step"] = i + 1;
                    j["order"] = seq[i].caterpillar.order();
                    j["legs"] = seq[i].caterpillar.legs;
                    j["radius"] = round12(seq[i].radius);
                    arr.push_back(j);
                }
                json top;
                top["target"] = round12(target);
                top["sequence"] = arr;
                std::cout << top.dump() << "\n";
            } else {
                if (format == "csv") std::cout << "step,order,radius\n";
                for (std::size_t i = 0; i < seq.size(); ++i) {
                    if (format == "csv")
                        std::cout << (i + 1) << "," << seq[i].caterpillar.order() << ","
                                  << format_real(seq[i].radius) << "\n";
                    else
                        std::cout << "step " << (i + 1) << ": order "
                                  << seq[i].caterpillar.order() << ", radius "
                                  << format_real(seq[i].radius) << "\n";
                }
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
