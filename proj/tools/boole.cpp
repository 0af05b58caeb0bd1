// Command-line frontend: exact union-probability intervals, feasibility
// certificates, polytope vertex dumps, reduction cross-checks, and frequent
// sets, all reported as stable line-oriented text with rationals as "p/q".

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "boole/classic.hpp"
#include "boole/errors.hpp"
#include "boole/hailperin.hpp"
#include "boole/instance.hpp"
#include "boole/lp.hpp"
#include "boole/miner.hpp"
#include "boole/polytope.hpp"
#include "boole/rat.hpp"
#include "boole/reductions.hpp"

using namespace boole;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string interval_str(const Interval& iv) {
    return "[" + rat_str(iv.lo) + ", " + rat_str(iv.hi) + "]";
}

void print_instance_header(const BooleInstance& inst) {
    std::cout << "n: " << inst.family.n << "\n";
    std::cout << "family-size: " << inst.family.members.size() << "\n";
}

std::vector<Rat> parse_point(const std::string& text) {
    std::vector<Rat> point;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) point.push_back(rat_parse(token));
    return point;
}

int check_line(bool ok) {
    std::cout << "check: " << (ok ? "ok" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

int cmd_bounds(const std::string& file, bool check) {
    const auto inst = parse_instance(slurp(file));
    std::cout << "command: bounds\n";
    print_instance_header(inst);
    const auto result = union_bounds(inst);
    std::cout << "interval: " << interval_str(result.interval) << "\n";
    std::cout << "min-witness: " << serialize_atoms(result.min_witness) << "\n";
    std::cout << "max-witness: " << serialize_atoms(result.max_witness) << "\n";
    if (check) {
        const bool ok = realizes(inst, result.min_witness) &&
                        realizes(inst, result.max_witness) &&
                        1 - result.min_witness.weight(0) == result.interval.lo &&
                        1 - result.max_witness.weight(0) == result.interval.hi;
        return check_line(ok);
    }
    return 0;
}

int cmd_feasible(const std::string& file, bool check) {
    const auto inst = parse_instance(slurp(file));
    std::cout << "command: feasible\n";
    print_instance_header(inst);
    const auto violations = check_monotone(inst);
    std::cout << "monotone-violations: " << violations.size() << "\n";
    for (const auto& [s, t] : violations) {
        std::cout << "violation: b" << set_label(s) << " < b" << set_label(t) << "\n";
    }
    const auto result = is_feasible(inst);
    std::cout << "feasible: " << (result.feasible ? "true" : "false") << "\n";
    if (result.feasible) {
        std::cout << "realization: " << serialize_atoms(result.realization) << "\n";
        if (check) return check_line(realizes(inst, result.realization));
        return 0;
    }
    std::cout << "farkas: " << rat_vec_str(result.farkas) << "\n";
    if (check) {
        const bool ok = farkas_valid(build_hailperin_lp(inst), result.farkas);
        check_line(ok);
        return ok ? 1 : 2;
    }
    return 1;
}

int cmd_classic(const std::string& file, int k) {
    const auto inst = parse_instance(slurp(file));
    std::cout << "command: classic\n";
    print_instance_header(inst);
    if (inst.family.has_all_singletons()) {
        std::cout << "boole-frechet: " << interval_str(boole_frechet(inst)) << "\n";
    } else {
        std::cout << "boole-frechet: unavailable (missing singletons)\n";
    }
    if (inst.family.is_complete()) {
        std::cout << "inclusion-exclusion: " << rat_str(inclusion_exclusion(inst)) << "\n";
    } else {
        std::cout << "inclusion-exclusion: unavailable (incomplete family)\n";
    }
    if (k > 0) {
        const Rat value = bonferroni(inst, k);  // throws when sets are missing
        std::cout << "bonferroni k=" << k << ": " << rat_str(value) << " ("
                  << (k % 2 == 1 ? "upper" : "lower") << ")\n";
    } else {
        for (const auto& entry : bonferroni_report(inst)) {
            std::cout << "bonferroni k=" << entry.k << ": " << rat_str(entry.value) << " ("
                      << (entry.is_upper ? "upper" : "lower") << ")\n";
        }
    }
    return 0;
}

int cmd_vertices(const std::string& file, const std::string& which) {
    const auto family = parse_family(slurp(file));
    std::cout << "command: vertices\n";
    std::cout << "which: " << which << "\n";
    std::cout << "n: " << family.n << "\n";
    std::cout << "family-size: " << family.members.size() << "\n";
    VPolytope p;
    if (which == "tau") {
        p = venn_vertices(family);
    } else if (which == "rho") {
        p = correlation_vertices(family);
    } else {
        p = union_vertices(family);
    }
    const auto counts = vertex_count_formula(family);
    std::cout << "vertex-count: " << p.vertices.size() << "\n";
    std::cout << "formula-rho: " << counts.rho << "\n";
    std::cout << "formula-sigma: " << counts.sigma << "\n";
    long expected = counts.sigma;
    if (which == "tau") expected = 1L << family.n;
    if (which == "rho") expected = counts.rho;
    std::cout << "formula-match: "
              << (static_cast<long>(p.vertices.size()) == expected ? "true" : "false") << "\n";
    std::cout << "dimension: " << affine_dim(p) << "\n";
    std::cout << "table:\n" << vertex_table(p);
    return static_cast<long>(p.vertices.size()) == expected ? 0 : 1;
}

int cmd_member(const std::string& file, const std::string& which, const std::string& point_text) {
    const auto family = parse_family(slurp(file));
    const auto point = parse_point(point_text);
    std::cout << "command: member\n";
    std::cout << "which: " << which << "\n";
    std::cout << "n: " << family.n << "\n";
    std::cout << "family-size: " << family.members.size() << "\n";
    std::cout << "point: " << rat_vec_str(point) << "\n";
    const VPolytope p = which == "rho" ? correlation_vertices(family) : union_vertices(family);
    const bool inside = hull_membership(p, point);
    std::cout << "member: " << (inside ? "true" : "false") << "\n";
    return inside ? 0 : 1;
}

int cmd_reduce_color(const std::string& file) {
    const auto g = parse_graph(slurp(file));
    std::cout << "command: reduce-color\n";
    std::cout << "vertices: " << g.n << "\n";
    std::cout << "edges: " << g.edges.size() << "\n";
    const auto inst = color_gadget(g);
    std::cout << "instance: " << serialize_instance(inst) << "\n";
    const Rat lo = union_bounds(inst).interval.lo;
    const Rat chi = fractional_chromatic(g);
    std::cout << "min-union: " << rat_str(lo) << "\n";
    std::cout << "chi-f: " << rat_str(chi) << "\n";
    std::cout << "chi-f-over-n: " << rat_str(chi / g.n) << "\n";
    const bool equal = lo == chi / g.n;
    std::cout << "identity: " << (equal ? "EQUAL" : "UNEQUAL") << "\n";
    return equal ? 0 : 1;
}

int cmd_verify_dual(const std::string& file) {
    const auto gw = parse_weighted_graph(slurp(file));
    std::cout << "command: verify-dual\n";
    std::cout << "vertices: " << gw.graph.n << "\n";
    std::cout << "edges: " << gw.graph.edges.size() << "\n";
    const Rat via_dual = max_union_via_dual(gw);
    const Rat clique_opt = clique_lp(gw);
    std::cout << "max-union-via-dual: " << rat_str(via_dual) << "\n";
    std::cout << "clique-lp: " << rat_str(clique_opt) << "\n";
    std::cout << "one-minus-clique-lp: " << rat_str(1 - clique_opt) << "\n";
    const bool equal = via_dual == 1 - clique_opt;
    std::cout << "identity: " << (equal ? "EQUAL" : "UNEQUAL") << "\n";
    return equal ? 0 : 1;
}

int cmd_clique(const std::string& file, int k) {
    const auto g = parse_graph(slurp(file));
    std::cout << "command: clique\n";
    std::cout << "vertices: " << g.n << "\n";
    std::cout << "edges: " << g.edges.size() << "\n";
    std::cout << "k: " << k << "\n";
    std::cout << "kappa: " << rat_str(make_rat(2, static_cast<unsigned long>(k - 1))) << "\n";
    const bool kappa_says = has_k_clique(g, k);
    std::cout << "kappa-test: " << (kappa_says ? "true" : "false") << "\n";
    // brute-force cross-check over all k-subsets
    bool brute = false;
    const SubsetMask full = (SubsetMask{1} << g.n) - 1;
    for (SubsetMask mask = 1; mask <= full && !brute; ++mask) {
        if (mask_size(mask) != k) continue;
        bool clique = true;
        const auto elems = elements_from_mask(mask);
        for (std::size_t i = 0; i < elems.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < elems.size() && clique; ++j) {
                if (!g.adjacent(elems[i], elems[j])) clique = false;
            }
        }
        brute = clique;
    }
    std::cout << "brute-force: " << (brute ? "true" : "false") << "\n";
    const bool agree = kappa_says == brute;
    std::cout << "agreement: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    return agree ? 0 : 1;
}

int cmd_mine(const std::string& file, const std::string& eps_text, int max_size,
             bool with_bounds, bool header, bool check) {
    const auto d = load_matrix(slurp(file), header);
    const Rat eps = rat_parse(eps_text);
    std::cout << "command: mine\n";
    std::cout << "rows: " << d.rows << "\n";
    std::cout << "cols: " << d.cols << "\n";
    std::cout << "eps: " << rat_str(eps) << "\n";
    std::cout << "max-size: " << max_size << "\n";
    const auto family = apriori(d, eps, max_size);
    std::cout << "family-size: " << family.members.size() << "\n";
    for (const auto s : family.members) {
        std::cout << "frequent: " << set_label(s) << "\n";
    }
    if (family.members.empty()) {
        throw DomainError("no frequent sets at eps = " + rat_str(eps) +
                          "; instances need a nonempty family");
    }
    const auto inst = empirical_b(d, family);
    std::cout << "instance: " << serialize_instance(inst) << "\n";
    if (!with_bounds) return 0;
    const auto result = union_bounds(inst);
    std::cout << "interval: " << interval_str(result.interval) << "\n";
    std::cout << "min-witness: " << serialize_atoms(result.min_witness) << "\n";
    std::cout << "max-witness: " << serialize_atoms(result.max_witness) << "\n";
    if (check) {
        return check_line(realizes(inst, result.min_witness) &&
                          realizes(inst, result.max_witness) &&
                          1 - result.min_witness.weight(0) == result.interval.lo &&
                          1 - result.max_witness.weight(0) == result.interval.hi);
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"exact bounds for union probabilities from partial intersection data"};
    app.require_subcommand(1);

    std::string file;
    std::string which;
    std::string point_text;
    std::string eps_text;
    int k = 0;
    int max_size = 0;
    bool check = false;
    bool with_bounds = false;
    bool header = false;

    auto* bounds = app.add_subcommand("bounds", "tight union-probability interval + witnesses");
    bounds->add_option("instance", file)->required();
    bounds->add_flag("--check", check, "re-verify witnesses");

    auto* feasible = app.add_subcommand("feasible", "feasibility decision + certificate");
    feasible->add_option("instance", file)->required();
    feasible->add_flag("--check", check, "re-verify certificate");

    auto* classic = app.add_subcommand("classic", "closed-form bound report");
    classic->add_option("instance", file)->required();
    classic->add_option("--k", k, "truncation order (default: every valid order)")
        ->check(CLI::Range(1, kGroundSetCap));

    auto* vertices = app.add_subcommand("vertices", "vertex dump + dimension + count formula");
    vertices->add_option("family", file)->required();
    vertices->add_option("--which", which)
        ->required()
        ->check(CLI::IsMember({"tau", "rho", "sigma"}));

    auto* member = app.add_subcommand("member", "convex-hull membership");
    member->add_option("family", file)->required();
    member->add_option("--which", which)->required()->check(CLI::IsMember({"rho", "sigma"}));
    member->add_option("--point", point_text, "comma-separated rationals")->required();

    auto* reduce_color = app.add_subcommand("reduce-color", "coloring gadget + cross-check");
    reduce_color->add_option("graph", file)->required();

    auto* verify_dual = app.add_subcommand("verify-dual", "max-union vs clique-LP identity");
    verify_dual->add_option("wgraph", file)->required();

    auto* clique = app.add_subcommand("clique", "constant-vector clique decision");
    clique->add_option("graph", file)->required();
    clique->add_option("--k", k, "clique size")->required()->check(CLI::Range(2, 1 << 20));

    auto* mine = app.add_subcommand("mine", "frequent sets + empirical instance");
    mine->add_option("matrix", file)->required();
    mine->add_option("--eps", eps_text, "frequency threshold p/q")->required();
    mine->add_option("--max-size", max_size, "largest set size")->required();
    mine->add_flag("--bounds", with_bounds, "also compute the tight interval");
    mine->add_flag("--header", header, "skip the first matrix line");
    mine->add_flag("--check", check, "re-verify witnesses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(bounds)) return cmd_bounds(file, check);
        if (app.got_subcommand(feasible)) return cmd_feasible(file, check);
        if (app.got_subcommand(classic)) return cmd_classic(file, k);
        if (app.got_subcommand(vertices)) return cmd_vertices(file, which);
        if (app.got_subcommand(member)) return cmd_member(file, which, point_text);
        if (app.got_subcommand(reduce_color)) return cmd_reduce_color(file);
        if (app.got_subcommand(verify_dual)) return cmd_verify_dual(file);
        if (app.got_subcommand(clique)) return cmd_clique(file, k);
        if (app.got_subcommand(mine)) {
            return cmd_mine(file, eps_text, max_size, with_bounds, header, check);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cout << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
