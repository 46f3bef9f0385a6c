#include "vdw/report.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vdw/errors.hpp"

#ifndef VDW_VERSION
#define VDW_VERSION "0.0.0"
#endif

namespace vdw::report {

std::string version() { return VDW_VERSION; }

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string config_hash(const Json& config) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(config.dump())));
    return buf;
}

Json guards() {
    return {
        {"census_visits", kVisitGuard},
        {"field_degree", kMaxDegree},
        {"extension_field_size", FqField::kMaxExtensionSize},
        {"type_count_q_pow_n", 10000000},
        {"ideal_count_x", 10000000},
        {"selberg_x", 1000000},
        {"large_sieve_x", 64},
        {"classifier_degree", 4},
        {"resolvent_degree", 5},
        {"iterated_disc_degree", 5},
        {"subgroup_lattice_n", 6},
        {"k_volume_nd", 12},
        {"max_precision_bits", 4096},
    };
}

Json envelope(const std::string& command, const Json& config) {
    return {{"version", version()}, {"command", command}, {"config", config}, {"config_hash", config_hash(config)},
            {"guards", guards()}};
}

std::string fmt(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

namespace {

Json rational_json(const Rational& r) { return {{"exact", rational_str(r)}, {"decimal", rational_to_double(r)}}; }

Json big_json(const BigInt& v) {
    if (fits_i64(v)) return to_i64(v);
    return v.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Json to_json(const NumberField& K) {
    return {{"label", K.label()},
            {"defining_poly", K.defining_poly()},
            {"degree", K.degree()},
            {"disc", big_json(K.disc())},
            {"class_number", K.class_number()},
            {"signature", {K.r1(), K.r2()}},
            {"unit_rank", K.unit_rank()},
            {"torsion", K.torsion()},
            {"basis", K.basis_description()}};
}

Json to_json(const NumberField& K, const CensusReport& r) {
    Json T = Json::object();
    for (const auto& [nu, c] : r.T_table) T[to_string(K, nu)] = c;
    Json L = Json::array();
    for (const auto& [h, c] : r.L_table) L.push_back({{"h", h}, {"count", big_json(c)}});
    return {{"field", r.field_label},
            {"basis", r.basis},
            {"n", r.spec.n},
            {"N", r.spec.N},
            {"total", r.total},
            {"rho", r.rho},
            {"rho_k", r.rho_k},
            {"sum_T", r.sum_T},
            {"multi_linear", r.multi_linear},
            {"T", T},
            {"L", L},
            {"seed", r.seed}};
}

Json to_json(const DeviationReport& r) {
    return {{"n", r.spec.n},
            {"N", r.spec.N},
            {"r", r.r.str()},
            {"x", r.x},
            {"population", r.population},
            {"pi_K", r.pi_K},
            {"delta", rational_json(r.delta)},
            {"sum_sq", r.sum_sq},
            {"normalization", r.normalization},
            {"ratio", r.ratio},
            {"threshold", r.threshold},
            {"exceptional", r.exceptional}};
}

Json to_json(const AvoidanceReport& r) {
    Json R = Json::array();
    for (const auto& t : r.R) R.push_back(t.str());
    return {{"n", r.spec.n}, {"N", r.spec.N}, {"R", R}, {"x", r.x}, {"population", r.population}, {"E", r.E}};
}

Json to_json(const LargeSieveReport& r) {
    return {{"n", r.n},
            {"N", r.N},
            {"x", r.x},
            {"trials", r.trials},
            {"seed", r.seed},
            {"moduli", r.moduli},
            {"points", r.points},
            {"scale", r.scale},
            {"max_ratio", r.max_ratio},
            {"parseval_error", r.parseval_error},
            {"ratios", r.ratios}};
}

Json to_json(const ConstantBundle& b) {
    return {{"field", b.field},
            {"n", b.n},
            {"h", b.h},
            {"C_K", b.c_k},
            {"C_K_fit_rms", b.c_k_residual},
            {"C_K_fit_x", b.c_k_x},
            {"C_K_prime", b.c_k_prime},
            {"D",
             {{"value", b.D.value},
              {"bound", b.D.bound},
              {"height", b.D.height},
              {"terms", b.D.terms},
              {"tail", b.D.tail}}},
            {"zeta_K_n_minus_1", b.zeta},
            {"D_within_zeta", b.D_within_zeta},
            {"k",
             {{"exact", rational_str(b.k.exact)},
              {"irwin_hall", rational_str(b.k.irwin_hall)},
              {"decimal", rational_to_double(b.k.exact)},
              {"lattice", b.k.lattice},
              {"lattice_N", b.k.lattice_N}}},
            {"formula_without_A", b.formula_without_A}};
}

Json to_json(const Theorem3Report& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"N", row.N},
                        {"rho", row.rho},
                        {"ratio", row.ratio},
                        {"D", row.D},
                        {"formula", row.formula},
                        {"gap", row.gap}});
    return {{"field", r.field},
            {"n", r.n},
            {"C_K", r.c_k},
            {"C_K_prime", r.c_k_prime},
            {"A_hat", r.A_hat},
            {"A_N", r.A_N},
            {"k", rational_str(r.k_exact)},
            {"rows", rows},
            {"ratio_monotone", r.ratio_monotone},
            {"gap_decreasing", r.gap_decreasing}};
}

Json to_json(const Lemma7Certificate& c) {
    Json tr = Json::array();
    for (const auto& g : c.transitive)
        tr.push_back({{"order", g.order},
                      {"has_transposition", g.has_transposition},
                      {"has_prime_cycle", g.has_prime_cycle},
                      {"generators", g.generators}});
    return {{"n", c.n}, {"subgroups", c.subgroup_count}, {"transitive", tr}, {"holds", c.holds}};
}

Json to_json(const GaloisCertificate& c) {
    Json w = Json::array();
    for (const auto& x : c.witnesses) w.push_back({{"p", x.p}, {"q", x.q}, {"type", x.type.str()}, {"role", x.role}});
    return {{"verdict", verdict_str(c.verdict)},
            {"reason", c.reason},
            {"group", c.group},
            {"x_reached", c.x_reached},
            {"witnesses", w}};
}

Json to_json(const NonSnCensus& c) {
    return {{"n", c.spec.n},
            {"N", c.spec.N},
            {"x_max", c.x_max},
            {"total", c.total},
            {"proven_sn", c.proven_sn},
            {"proven_not_sn", c.non_sn},
            {"undecided", c.undecided},
            {"by_group", c.by_group}};
}

Json to_json(const NumberField& K, const Resolvent& r) {
    Json cosets = Json::array();
    for (const auto& s : r.cosets) cosets.push_back(cycles_str(s));
    Json gens = Json::array();
    for (const auto& g : r.generators) gens.push_back(cycles_str(g));
    return {{"group", r.group},
            {"generators", gens},
            {"group_order", r.group_order},
            {"cosets", cosets},
            {"phi", to_string(K, r.phi)},
            {"residual", r.residual},
            {"digits", r.digits}};
}

Json to_json(const IteratedDisc& D) {
    return {{"n", D.n}, {"variables", D.names}, {"disc_f", D.disc_f.str(D.names)}, {"D", D.D.str(D.names)}};
}

Json to_json(const Theorem2Report& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) rows.push_back({{"N", row.N}, {"count", row.count}, {"population", row.population}});
    return {{"field", r.field},
            {"n", r.n},
            {"group", r.group},
            {"index", r.index},
            {"bound_exponent", r.bound_exponent},
            {"rows", rows},
            {"slope", r.slope},
            {"slope_ok", r.slope_ok}};
}

Json to_json(const Density& d) {
    return {{"exact", rational_str(d.value)}, {"decimal", rational_to_double(d.value)}, {"provenance", d.provenance}};
}

std::string Csv::str() const {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

Csv census_csv(const NumberField& K, const CensusReport& r) {
    Csv c{{"nu", "T"}, {}};
    for (const auto& [nu, t] : r.T_table) c.rows.push_back({to_string(K, nu), std::to_string(t)});
    return c;
}

Csv deviation_csv(const NumberField& K, const DeviationReport& r) {
    Csv c{{"f", "pi_f_r", "D"}, {}};
    for (const auto& row : r.rows) c.rows.push_back({to_string(K, row.f), std::to_string(row.pi_fr), fmt(row.D)});
    return c;
}

Csv theorem3_csv(const Theorem3Report& r) {
    Csv c{{"N", "rho", "ratio", "D", "formula", "gap"}, {}};
    for (const auto& row : r.rows)
        c.rows.push_back({std::to_string(row.N), std::to_string(row.rho), fmt(row.ratio), fmt(row.D), fmt(row.formula),
                          fmt(row.gap)});
    return c;
}

Csv theorem2_csv(const Theorem2Report& r) {
    Csv c{{"N", "count", "population", "slope", "bound_exponent"}, {}};
    for (const auto& row : r.rows)
        c.rows.push_back({std::to_string(row.N), std::to_string(row.count), std::to_string(row.population),
                          fmt(r.slope), fmt(r.bound_exponent)});
    return c;
}

void write_file(const std::string& path, const std::string& text) {
    const auto dir = std::filesystem::path(path).parent_path();
    std::error_code ec;
    if (!dir.empty()) std::filesystem::create_directories(dir, ec);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << text;
}

}  // namespace vdw::report
