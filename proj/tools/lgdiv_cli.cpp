// Command-line front end; talks to the library through the C interface only.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgdiv.h"

using nlohmann::json;

namespace {

int status_to_exit(lgdiv_status s) {
    switch (s) {
    case LGDIV_OK: return 0;
    case LGDIV_ERR_CAP: return 2;
    default: return 1;
    }
}

std::string take(char* s) {
    std::string out = s ? s : "";
    lgdiv_string_free(s);
    return out;
}

struct InputOpts {
    uint64_t p = 0;
    uint64_t n = 0;
    std::string gens;
    std::string file;
    std::string family;
    uint64_t i = 0;
    uint64_t alpha = 0;
    uint64_t theta = 0;
    int64_t lambda = -1;
    std::string output = "text";
    uint64_t cap = 1000000;
    bool oracle = false;

    void add_group_flags(CLI::App* cmd, bool with_family) {
        cmd->add_option("--p", p, "prime p");
        cmd->add_option("--n", n, "exponent n of the modulus p^n");
        cmd->add_option("--gens", gens, "generators as a JSON array [[[a,b],[c,d]],...]");
        cmd->add_option("--file", file, "path to a JSON file {\"p\",\"n\",\"generators\"}");
        if (with_family) {
            cmd->add_option("--family", family,
                            "family name: j-lt-m, j-ge-m-eq, j-ge-m-gt, n3-j-eq-m, n3-j-gt-m");
            cmd->add_option("--i", i, "upper level i (0 = default, no upper generator)");
            cmd->add_option("--alpha", alpha, "unit mod p of order >= 3 (0 = smallest)");
            cmd->add_option("--theta", theta, "perturbation of lambda");
            cmd->add_option("--lambda", lambda, "lambda override (n3-j-gt-m)");
        }
        cmd->add_option("--cap", cap, "group size cap");
        cmd->add_option("--output", output, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    }

    json family_spec() const {
        json spec = {{"family", family}, {"p", p}, {"n", n}, {"i", i},
                     {"alpha", alpha},   {"theta", theta}};
        if (lambda >= 0) spec["lambda"] = static_cast<uint64_t>(lambda);
        return spec;
    }

    // exactly one of --gens / --file / --family
    lgdiv_status make_group(lgdiv_group** out) const {
        int sources = (!gens.empty() ? 1 : 0) + (!file.empty() ? 1 : 0) + (!family.empty() ? 1 : 0);
        if (sources != 1) {
            std::cerr << "error: provide exactly one of --gens, --file, --family\n";
            return LGDIV_ERR_INVALID;
        }
        if (!family.empty()) return lgdiv_group_from_family(family_spec().dump().c_str(), cap, out);
        std::string text;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot open " << file << "\n";
                return LGDIV_ERR_INVALID;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        } else {
            json j;
            try {
                j = {{"p", p}, {"n", n}, {"generators", json::parse(gens)}};
            } catch (const std::exception& e) {
                std::cerr << "error: bad --gens: " << e.what() << "\n";
                return LGDIV_ERR_INVALID;
            }
            text = j.dump();
        }
        return lgdiv_group_from_json(text.c_str(), cap, out);
    }
};

std::string fmt_structure(const json& arr) {
    if (!arr.is_array() || arr.empty()) return "trivial";
    std::string s;
    for (const auto& v : arr) {
        if (!s.empty()) s += " x ";
        s += "Z/" + std::to_string(v.get<uint64_t>());
    }
    return s;
}

void render_h1_block(const json& r) {
    std::cout << "h1:    " << fmt_structure(r["h1"]) << "\n";
    std::cout << "h1loc: " << fmt_structure(r["h1loc"]) << "\n";
}

void render_analyze(const json& r) {
    std::cout << "group: p=" << r["p"] << " n=" << r["n"] << " |G|=" << r["order"] << "\n";
    std::cout << "triangularity: " << r["triangularity"].get<std::string>() << "\n";
    const json& pre = r["preconditions"];
    std::cout << "preconditions: satisfied=" << pre["satisfied"]
              << " g1_cyclic=" << pre["g1_cyclic"] << " ord_lambda1=" << pre["ord_lambda1"]
              << " g2=" << pre["g2_triangularity"].get<std::string>() << "\n";
    if (!pre["notes"].get<std::string>().empty())
        std::cout << "notes: " << pre["notes"].get<std::string>() << "\n";
    if (!r["profile"].is_null()) {
        const json& p = r["profile"];
        std::cout << "profile: i=" << p["i"] << " j=" << p["j"] << " m=" << p["m"]
                  << " h=" << p["h"] << " d=" << p["d"] << " lambda1=" << p["lambda1"] << "\n";
        std::cout << "vanishing criterion i <= h + |j - m|: "
                  << (r["vanishing_criterion"].get<bool>() ? "true" : "false") << "\n";
    } else if (r.contains("profile_error")) {
        std::cout << "profile: unavailable (" << r["profile_error"].get<std::string>() << ")\n";
    }
    render_h1_block(r);
    std::cout << "fixed points: max exact order " << r["fixed_points"]["max_exact_order"] << "\n";
}

void render_h1loc(const json& r) {
    std::cout << "group: p=" << r["p"] << " n=" << r["n"] << " |G|=" << r["order"] << "\n";
    render_h1_block(r);
}

void render_certificate(const json& r) {
    std::cout << "group: p=" << r["p"] << " n=" << r["n"] << " |G|=" << r["order"] << "\n";
    const json& c = r["checks"];
    std::cout << "checks: is_cocycle=" << c["is_cocycle"]
              << " local_conditions=" << c["local_conditions"]
              << " not_coboundary=" << c["not_coboundary"]
              << " class_order=" << c["class_order"] << " p_witness_zero=" << c["p_witness_zero"]
              << "\n";
    if (!r["profile"].is_null()) {
        const json& p = r["profile"];
        std::cout << "profile: i=" << p["i"] << " j=" << p["j"] << " m=" << p["m"]
                  << " h=" << p["h"] << "\n";
    }
    std::cout << "fixed point max order: " << r["fixed_point_max_order"] << "\n";
    std::cout << "valid: " << (r["valid"].get<bool>() ? "true" : "false") << "\n";
}

void render_grid(const json& r) {
    std::cout << "cases=" << r["cases"].size() << " checked=" << r["checked"]
              << " violations=" << r["violations"] << " budget_exceeded=" << r["budget_exceeded"]
              << "\n";
    for (const auto& c : r["cases"]) {
        if (!c["violation"].get<bool>()) continue;
        std::cout << "VIOLATION p=" << c["p"] << " n=" << c["n"] << " (i,j,m,h)=(" << c["i"] << ","
                  << c["j"] << "," << c["m"] << "," << c["h"] << ") h1loc=" << c["h1loc"].dump()
                  << "\n";
    }
}

void render_search(const json& r) {
    std::cout << "counterexamples found: " << r["count"] << "\n";
    for (const auto& c : r["certificates"]) {
        std::cout << "- |G|=" << c["order"] << " class_order=" << c["checks"]["class_order"]
                  << " valid=" << c["valid"] << " generators=" << c["generators"].dump() << "\n";
    }
}

void render_isogeny(const json& r) {
    std::cout << "group: p=" << r["p"] << " n=" << r["n"] << " |G|=" << r["order"] << "\n";
    for (const auto& l : r["levels"]) {
        std::cout << "level p^" << l["level"] << ": " << l["triangularity"].get<std::string>()
                  << (l["stable_line"].get<bool>() ? " (stable line)" : "") << "\n";
    }
}

int emit(lgdiv_status st, const std::string& body, const std::string& output,
         void (*render)(const json&)) {
    if (st != LGDIV_OK) {
        std::cerr << "error: " << lgdiv_last_error() << "\n";
        return status_to_exit(st);
    }
    if (output == "json") {
        std::cout << body << "\n";
    } else {
        render(json::parse(body));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"first local cohomology of matrix groups over Z/p^n and "
                 "local-global divisibility certificates"};
    app.require_subcommand(1);

    InputOpts analyze_in, h1loc_in, family_in, iso_in;
    bool analyze_oracle = false, h1loc_oracle = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full report for a group");
    analyze_in.add_group_flags(analyze, true);
    analyze->add_flag("--oracle", analyze_oracle, "use the enumeration backend");

    CLI::App* h1loc_cmd = app.add_subcommand("h1loc", "H1 and H1_loc structure of a group");
    h1loc_in.add_group_flags(h1loc_cmd, true);
    h1loc_cmd->add_flag("--oracle", h1loc_oracle, "use the enumeration backend");

    CLI::App* family_cmd = app.add_subcommand("family", "build a counterexample family and certify it");
    family_in.add_group_flags(family_cmd, true);

    CLI::App* iso = app.add_subcommand("isogeny", "triangularity of the reductions mod p^l");
    iso_in.add_group_flags(iso, true);

    CLI::App* grid = app.add_subcommand("grid", "vanishing sweep over parameter tuples");
    std::vector<uint64_t> p_list{5};
    std::vector<uint64_t> n_list{2};
    uint64_t seed = 0, samples = 1, group_cap = 300000, budget = 100000;
    std::string grid_output = "text";
    bool include_false = false;
    grid->add_option("--p-list", p_list, "primes to sweep");
    grid->add_option("--n-list", n_list, "exponents to sweep");
    grid->add_option("--seed", seed, "sampling seed (affects d and lambda1 draws only)");
    grid->add_option("--samples", samples, "samples of (d, lambda1) per tuple");
    grid->add_option("--group-cap", group_cap, "per-tuple group size cap");
    grid->add_option("--budget", budget, "maximum number of cases");
    grid->add_flag("--include-false", include_false, "also sweep tuples violating the criterion");
    grid->add_option("--output", grid_output, "text or json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* search = app.add_subcommand("search", "enumerate shaped generator tuples for counterexamples");
    uint64_t s_p = 5, s_n = 2, s_cap = 100000;
    int64_t s_j = -1, s_m = -1;
    std::string s_shape = "lower", s_output = "text";
    search->add_option("--p", s_p, "prime p");
    search->add_option("--n", s_n, "exponent n");
    search->add_option("--shape", s_shape, "lower, upper or diagonal")
        ->check(CLI::IsMember({"lower", "upper", "diagonal"}));
    search->add_option("--j", s_j, "fix the triangular level");
    search->add_option("--m", s_m, "fix the diagonal level");
    search->add_option("--cap", s_cap, "group size and search space cap");
    search->add_option("--output", s_output, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*analyze || *h1loc_cmd || *iso) {
            InputOpts& in = *analyze ? analyze_in : (*h1loc_cmd ? h1loc_in : iso_in);
            lgdiv_group* g = nullptr;
            lgdiv_status st = in.make_group(&g);
            if (st != LGDIV_OK) {
                if (g) lgdiv_group_free(g);
                if (lgdiv_last_error()[0]) std::cerr << "error: " << lgdiv_last_error() << "\n";
                return status_to_exit(st);
            }
            char* out = nullptr;
            int rc;
            if (*analyze) {
                st = lgdiv_analyze(g, analyze_oracle ? LGDIV_BACKEND_ENUMERATION : 0, &out);
                rc = emit(st, take(out), analyze_in.output, render_analyze);
            } else if (*h1loc_cmd) {
                st = lgdiv_h1loc(g, h1loc_oracle ? LGDIV_BACKEND_ENUMERATION : 0, &out);
                rc = emit(st, take(out), h1loc_in.output, render_h1loc);
            } else {
                st = lgdiv_isogeny(g, &out);
                rc = emit(st, take(out), iso_in.output, render_isogeny);
            }
            lgdiv_group_free(g);
            return rc;
        }
        if (*family_cmd) {
            if (family_in.family.empty()) {
                std::cerr << "error: family requires --family\n";
                return 1;
            }
            char* out = nullptr;
            lgdiv_status st =
                lgdiv_family_certify(family_in.family_spec().dump().c_str(), family_in.cap, &out);
            return emit(st, take(out), family_in.output, render_certificate);
        }
        if (*grid) {
            json cfg = {{"p_list", p_list},       {"n_list", n_list},
                        {"seed", seed},           {"samples_per_tuple", samples},
                        {"group_cap", group_cap}, {"budget", budget},
                        {"predicate_true_only", !include_false}};
            char* out = nullptr;
            lgdiv_status st = lgdiv_grid(cfg.dump().c_str(), &out);
            return emit(st, take(out), grid_output, render_grid);
        }
        if (*search) {
            json opt = {{"p", s_p}, {"n", s_n}, {"shape", s_shape}, {"cap", s_cap}};
            if (s_j >= 0) opt["j"] = static_cast<uint64_t>(s_j);
            if (s_m >= 0) opt["m"] = static_cast<uint64_t>(s_m);
            char* out = nullptr;
            lgdiv_status st = lgdiv_search(opt.dump().c_str(), &out);
            return emit(st, take(out), s_output, render_search);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
