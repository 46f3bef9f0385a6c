// vdw: command-line front end for the census, sieve, density, constant and
// Galois experiments. Reports are JSON (stdout or --out) plus CSV tables.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "vdw/acceptance.hpp"
#include "vdw/errors.hpp"
#include "vdw/report.hpp"

namespace {

using vdw::report::Json;

constexpr int kExitGuard = 1;
constexpr int kExitConfig = 2;
constexpr int kExitAcceptance = 3;

struct RunConfig {
    std::string field = "Q";
    std::optional<int> class_number;
    std::string poly;
    int n = 3;
    std::int64_t N = 1;
    std::string N_grid;
    std::uint64_t x = 0;  // 0 selects the per-command default
    std::string r;
    std::string R;
    std::string group;
    std::string out;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    int precision = 50;
    // subcommand options
    int trials = 0;
    std::uint64_t d_bound = 1000000;
    std::string fixed;
    bool iterated = false;
    std::string only;
    std::string config_file;
};

std::vector<std::int64_t> parse_grid(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw vdw::ConfigError("bad N-grid entry: " + item);
        }
    }
    if (out.empty()) throw vdw::ConfigError("empty N-grid");
    return out;
}

std::vector<vdw::SplittingType> parse_type_list(const std::string& s) {
    std::vector<vdw::SplittingType> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(vdw::parse_splitting_type(item));
    return out;
}

/// Applies keys of a JSON config file to fields not given on the command line.
void apply_config_file(RunConfig& c, const CLI::App& app) {
    if (c.config_file.empty()) return;
    std::ifstream in(c.config_file);
    if (!in) throw vdw::ConfigError("cannot read config file " + c.config_file);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw vdw::ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    auto given = [&](const std::string& flag) {
        for (const CLI::App* a : {&app, app.get_subcommands().empty() ? &app : app.get_subcommands().front()}) {
            try {
                if (a->get_option("--" + flag)->count() > 0) return true;
            } catch (const CLI::OptionNotFound&) {
            }
        }
        return false;
    };
    auto take = [&](const char* key, auto& field) {
        if (j.contains(key) && !given(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    try {
        take("field", c.field);
        if (j.contains("class-number") && !given("class-number")) c.class_number = j.at("class-number").get<int>();
        if (j.contains("poly") && !given("poly")) c.poly = j.at("poly").is_string() ? j.at("poly").get<std::string>()
                                                                                    : j.at("poly").dump();
        take("n", c.n);
        take("N", c.N);
        take("N-grid", c.N_grid);
        take("x", c.x);
        take("r", c.r);
        take("R", c.R);
        take("group", c.group);
        take("out", c.out);
        take("seed", c.seed);
        take("workers", c.workers);
        take("precision", c.precision);
    } catch (const Json::exception& e) {
        throw vdw::ConfigError(std::string("config file: ") + e.what());
    }
}

Json config_json(const RunConfig& c, const std::string& command) {
    Json j = {{"command", command}, {"field", c.field}, {"n", c.n},           {"N", c.N},
              {"N_grid", c.N_grid}, {"x", c.x},         {"seed", c.seed},     {"precision", c.precision},
              {"poly", c.poly},     {"r", c.r},         {"R", c.R},           {"group", c.group},
              {"trials", c.trials}, {"fixed", c.fixed}, {"iterated", c.iterated}};
    j["class_number"] = c.class_number ? Json(*c.class_number) : Json(nullptr);
    // Worker count is deliberately absent: results do not depend on it.
    return j;
}

std::string csv_path(const std::string& out) {
    const auto dot = out.rfind('.');
    const auto slash = out.rfind('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? out.substr(0, dot) : out) + ".csv";
}

void emit(const RunConfig& c, const Json& doc, const vdw::report::Csv* csv) {
    if (c.out.empty()) {
        std::cout << doc.dump(2) << "\n";
        if (csv) std::cout << "\n" << csv->str();
        return;
    }
    vdw::report::write_file(c.out, doc.dump(2) + "\n");
    if (csv) vdw::report::write_file(csv_path(c.out), csv->str());
    std::cerr << "wrote " << c.out << (csv ? " and " + csv_path(c.out) : "") << "\n";
}

vdw::NumberField field_of(const RunConfig& c) { return vdw::load_field(c.field, c.class_number, c.precision); }

int cmd_census(const RunConfig& c) {
    const auto K = field_of(c);
    const vdw::CensusSpec spec{c.n, c.N, c.workers};
    const auto rep = vdw::census(K, spec, c.seed);
    Json doc = vdw::report::envelope("census", config_json(c, "census"));
    doc["field"] = vdw::report::to_json(K);
    doc["result"] = vdw::report::to_json(K, rep);
    const auto csv = vdw::report::census_csv(K, rep);
    emit(c, doc, &csv);
    return 0;
}

int cmd_sieve(const RunConfig& c) {
    const auto K = field_of(c);
    const vdw::CensusSpec spec{c.n, c.N, c.workers};
    const std::uint64_t x = c.x ? c.x : vdw::default_sieve_x(K, c.N);
    Json doc = vdw::report::envelope("sieve-stats", config_json(c, "sieve-stats"));
    doc["field"] = vdw::report::to_json(K);
    Json devs = Json::array();
    std::vector<vdw::SplittingType> types =
        c.r.empty() ? vdw::all_splitting_types(c.n) : std::vector<vdw::SplittingType>{vdw::parse_splitting_type(c.r)};
    vdw::report::Csv csv{{"r", "x", "population", "pi_K", "delta", "ratio", "exceptional"}, {}};
    for (const auto& r : types) {
        if (r.n() != c.n) throw vdw::ConfigError("splitting type " + r.str() + " has the wrong degree");
        const auto rep = vdw::deviation_sweep(K, spec, r, x);
        devs.push_back(vdw::report::to_json(rep));
        csv.rows.push_back({r.str(), std::to_string(x), std::to_string(rep.population), std::to_string(rep.pi_K),
                            vdw::rational_str(rep.delta), vdw::report::fmt(rep.ratio),
                            std::to_string(rep.exceptional)});
    }
    doc["deviation"] = devs;
    if (!c.R.empty()) doc["avoidance"] = vdw::report::to_json(vdw::avoidance(K, spec, parse_type_list(c.R), x));
    if (c.trials > 0) {
        const std::uint64_t xs = c.x ? c.x : 16;
        doc["large_sieve"] = vdw::report::to_json(vdw::large_sieve_check(K, c.n, c.N, xs, c.trials, c.seed));
    }
    emit(c, doc, &csv);
    return 0;
}

int cmd_densities(const RunConfig& c) {
    if (c.n < 1 || c.n > 12) throw vdw::ConfigError("densities need 1 <= n <= 12");
    const auto T = vdw::delta_T(c.n);
    const auto P = vdw::delta_P(c.n);
    auto line = [](const std::string& name, const vdw::Rational& v) {
        std::cout << name << "=" << vdw::rational_str(v) << " (" << vdw::report::fmt(vdw::rational_to_double(v))
                  << ")\n";
    };
    line("δ(T)", T.value);
    line("δ(P)", P.value);
    Json types = Json::array();
    for (const auto& r : vdw::all_splitting_types(c.n)) {
        const auto d = vdw::delta_r(r);
        types.push_back({{"r", r.str()},
                         {"delta", vdw::rational_str(d)},
                         {"in_T", vdw::in_T(r)},
                         {"in_P", vdw::in_P(r)}});
        line("δ" + r.str(), d);
    }
    if (!c.out.empty()) {
        Json doc = vdw::report::envelope("densities", config_json(c, "densities"));
        doc["result"] = {{"n", c.n},
                         {"delta_T", vdw::report::to_json(T)},
                         {"delta_P", vdw::report::to_json(P)},
                         {"types", types},
                         {"sum", vdw::rational_str(vdw::delta_total(c.n))},
                         {"first_moment", vdw::rational_str(vdw::delta_first_moment(c.n))}};
        if (c.n <= 6) doc["result"]["subgroups"] = vdw::report::to_json(vdw::lemma7_check(c.n));
        emit(c, doc, nullptr);
    }
    return 0;
}

int cmd_constants(const RunConfig& c, bool field_given) {
    std::vector<std::string> fields;
    if (field_given) fields.push_back(c.field);
    else
        for (const auto& p : vdw::builtin_presets()) fields.push_back(p.name);
    Json doc = vdw::report::envelope("constants", config_json(c, "constants"));
    Json bundles = Json::array();
    for (const auto& name : fields) {
        const auto K = vdw::load_field(name, c.class_number, c.precision);
        const std::uint64_t cx = c.x ? c.x : 1000000;
        Json b = vdw::report::to_json(vdw::constant_bundle(K, c.n, c.d_bound, cx));
        b["field_data"] = vdw::report::to_json(K);
        bundles.push_back(b);
    }
    doc["result"] = bundles;
    std::optional<vdw::report::Csv> csv;
    if (!c.N_grid.empty()) {
        const auto K = field_of(c);
        const auto rep = vdw::theorem3_compare(K, c.n, parse_grid(c.N_grid), c.workers);
        doc["theorem3"] = vdw::report::to_json(rep);
        csv = vdw::report::theorem3_csv(rep);
    }
    emit(c, doc, csv ? &*csv : nullptr);
    return 0;
}

int cmd_galois(const RunConfig& c) {
    const auto K = field_of(c);
    const std::uint64_t x = c.x ? c.x : 500;
    Json doc = vdw::report::envelope("galois", config_json(c, "galois"));
    doc["field"] = vdw::report::to_json(K);
    vdw::report::Csv csv{{"f", "verdict", "group", "reason", "x_reached"}, {}};
    if (!c.poly.empty()) {
        const auto f = vdw::parse_poly(K, c.poly);
        const auto cert = vdw::certify_sn(K, f, x);
        doc["result"] = vdw::report::to_json(cert);
        doc["result"]["f"] = vdw::to_string(K, f);
        csv.rows.push_back({vdw::to_string(K, f), vdw::verdict_str(cert.verdict), cert.group, cert.reason,
                            std::to_string(cert.x_reached)});
    } else {
        const vdw::CensusSpec spec{c.n, c.N, c.workers};
        const auto rep = vdw::non_sn_census(K, spec, x);
        doc["result"] = vdw::report::to_json(rep);
        csv.header = {"verdict", "group", "count"};
        csv.rows.push_back({"ProvenSn", vdw::symmetric_label(c.n), std::to_string(rep.proven_sn)});
        for (const auto& [g, n] : rep.by_group) csv.rows.push_back({"ProvenNotSn", g, std::to_string(n)});
        csv.rows.push_back({"Undecided", "", std::to_string(rep.undecided)});
    }
    emit(c, doc, &csv);
    return 0;
}

std::vector<std::optional<std::int64_t>> parse_fixed(const std::string& s, int n) {
    std::vector<std::optional<std::int64_t>> out(std::max(0, n - 1));
    if (s.empty()) return out;
    Json j;
    try {
        j = Json::parse(s);
    } catch (const std::exception&) {
        throw vdw::ConfigError("--fixed expects a JSON array such as [null, 0]");
    }
    if (!j.is_array() || static_cast<int>(j.size()) != n - 1)
        throw vdw::ConfigError("--fixed needs n-1 entries for a_1..a_{n-1}");
    for (int k = 0; k < n - 1; ++k)
        if (!j[k].is_null()) out[k] = j[k].get<std::int64_t>();
    return out;
}

int cmd_resolvent(const RunConfig& c) {
    Json doc = vdw::report::envelope("resolvent", config_json(c, "resolvent"));
    if (c.iterated) {
        doc["result"] = vdw::report::to_json(vdw::iterated_disc(c.n, parse_fixed(c.fixed, c.n)));
        emit(c, doc, nullptr);
        return 0;
    }
    if (c.poly.empty()) throw vdw::ConfigError("resolvent needs --poly (or --iterated)");
    const auto K = field_of(c);
    const auto f = vdw::parse_poly(K, c.poly);
    const std::string group = c.group.empty() ? "A" + std::to_string(f.degree()) : c.group;
    const auto r = vdw::build_resolvent(K, f, group);
    doc["field"] = vdw::report::to_json(K);
    doc["result"] = vdw::report::to_json(K, r);
    doc["result"]["f"] = vdw::to_string(K, f);
    const bool squarefree = vdw::resolvent_is_squarefree(K, r);
    doc["result"]["squarefree"] = squarefree;
    doc["result"]["has_root"] = vdw::resolvent_has_root(K, r);
    // A repeated root says nothing about the Galois group.
    doc["result"]["conclusive"] = squarefree;
    doc["result"]["disc"] = vdw::to_string(K, vdw::poly_disc(K, f));
    emit(c, doc, nullptr);
    return 0;
}

int cmd_theorem2(const RunConfig& c) {
    const auto K = field_of(c);
    const std::string group = c.group.empty() ? "A" + std::to_string(c.n) : c.group;
    const auto grid = c.N_grid.empty() ? std::vector<std::int64_t>{c.N} : parse_grid(c.N_grid);
    const auto rep = vdw::theorem2_sweep(K, c.n, group, grid, c.workers);
    Json doc = vdw::report::envelope("theorem2", config_json(c, "theorem2"));
    doc["result"] = vdw::report::to_json(rep);
    const auto csv = vdw::report::theorem2_csv(rep);
    emit(c, doc, &csv);
    return 0;
}

int cmd_verify(const RunConfig& c) {
    vdw::AcceptanceOptions opt;
    opt.workers = c.workers;
    if (c.seed) opt.seed = c.seed;
    for (auto v : c.only.empty() ? std::vector<std::int64_t>{} : parse_grid(c.only)) opt.only.insert(static_cast<int>(v));
    int failed = 0;
    const auto results = vdw::run_acceptance(opt, [&](const vdw::CriterionResult& r) {
        std::cout << vdw::format_result(r) << std::endl;
        if (!r.pass) ++failed;
    });
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    if (!c.out.empty()) {
        Json doc = vdw::report::envelope("verify", config_json(c, "verify"));
        Json rows = Json::array();
        for (const auto& r : results)
            rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                            {"budget_seconds", r.budget_seconds}});
        doc["result"] = rows;
        vdw::report::write_file(c.out, doc.dump(2) + "\n");
    }
    return failed ? kExitAcceptance : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting S_n-polynomials over number fields: census, sieve and Galois experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", vdw::report::version());
    RunConfig c;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--field", c.field, "preset (Q, Qi, Qsqrt2, Qsqrt-5), JSON object/array, or path");
        sub->add_option("--class-number", c.class_number, "override the class number");
        sub->add_option("--n", c.n, "polynomial degree");
        sub->add_option("--N", c.N, "height bound");
        sub->add_option("--N-grid", c.N_grid, "comma-separated height bounds");
        sub->add_option("--x", c.x, "prime-norm cutoff");
        sub->add_option("--seed", c.seed, "random seed");
        sub->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--precision", c.precision, "working precision in decimal digits");
        sub->add_option("--out", c.out, "JSON report path; CSV goes next to it");
        sub->add_option("--config", c.config_file, "JSON file with default flag values");
    };

    auto* census = app.add_subcommand("census", "reducibility census of monic polynomials of bounded height");
    common(census);
    auto* sieve = app.add_subcommand("sieve-stats", "splitting-type deviations, avoidance and large-sieve checks");
    common(sieve);
    sieve->add_option("--r", c.r, "splitting type, e.g. (1,1,0)");
    sieve->add_option("--R", c.R, "set of splitting types separated by ';' for avoidance counts");
    sieve->add_option("--trials", c.trials, "random weight vectors for the large-sieve check");
    auto* dens = app.add_subcommand("densities", "splitting-type densities and the T/P sets");
    common(dens);
    auto* cons = app.add_subcommand("constants", "field constants and the main-term comparison");
    common(cons);
    cons->add_option("--D-bound", c.d_bound, "norm bound for the D partial sum");
    auto* gal = app.add_subcommand("galois", "certify S_n for one polynomial or sweep a census");
    common(gal);
    gal->add_option("--poly", c.poly, "coefficients as a JSON array, constant term first");
    auto* res = app.add_subcommand("resolvent", "Galois resolvent of f for a subgroup, or an iterated discriminant");
    common(res);
    res->add_option("--poly", c.poly, "coefficients as a JSON array, constant term first");
    res->add_option("--group", c.group, "S, A, C, D, V4 with degree, or cycles like (1,2,3);(1,2)");
    res->add_flag("--iterated", c.iterated, "symbolic discriminant of d_f in a_0");
    res->add_option("--fixed", c.fixed, "JSON array pinning a_1..a_{n-1}, null for symbolic");
    auto* thm2 = app.add_subcommand("theorem2", "count polynomials with a given Galois group across a height grid");
    common(thm2);
    thm2->add_option("--group", c.group, "group name, e.g. A3, C4, V4, D4, A4");
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    common(verify);
    verify->add_option("--only", c.only, "comma-separated criterion ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        apply_config_file(c, app);
        if (c.workers == 0) c.workers = std::max(1u, std::thread::hardware_concurrency());
        if (census->parsed()) return cmd_census(c);
        if (sieve->parsed()) return cmd_sieve(c);
        if (dens->parsed()) return cmd_densities(c);
        if (cons->parsed()) return cmd_constants(c, cons->get_option("--field")->count() > 0);
        if (gal->parsed()) return cmd_galois(c);
        if (res->parsed()) return cmd_resolvent(c);
        if (thm2->parsed()) return cmd_theorem2(c);
        if (verify->parsed()) return cmd_verify(c);
    } catch (const vdw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const vdw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const Json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
