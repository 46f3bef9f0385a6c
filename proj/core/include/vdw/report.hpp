#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vdw/census.hpp"
#include "vdw/constants.hpp"
#include "vdw/densities.hpp"
#include "vdw/galois.hpp"
#include "vdw/resolvent.hpp"
#include "vdw/sievestats.hpp"

namespace vdw::report {

using Json = nlohmann::json;

std::string version();

std::uint64_t fnv1a(const std::string& bytes);
/// 16 hex digits of FNV-1a over the compact dump of `config`.
std::string config_hash(const Json& config);

/// Guard limits enforced by the library, embedded in every report.
Json guards();

/// {version, command, config, config_hash, guards}; callers add "result".
Json envelope(const std::string& command, const Json& config);

Json to_json(const NumberField& K);
Json to_json(const NumberField& K, const CensusReport& r);
Json to_json(const DeviationReport& r);
Json to_json(const AvoidanceReport& r);
Json to_json(const LargeSieveReport& r);
Json to_json(const ConstantBundle& b);
Json to_json(const Theorem3Report& r);
Json to_json(const Lemma7Certificate& c);
Json to_json(const GaloisCertificate& c);
Json to_json(const NonSnCensus& c);
Json to_json(const NumberField& K, const Resolvent& r);
Json to_json(const IteratedDisc& D);
Json to_json(const Theorem2Report& r);
Json to_json(const Density& d);

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string str() const;
};

Csv census_csv(const NumberField& K, const CensusReport& r);
Csv deviation_csv(const NumberField& K, const DeviationReport& r);
Csv theorem3_csv(const Theorem3Report& r);
Csv theorem2_csv(const Theorem2Report& r);

/// Writes `text` to `path`, creating parent directories; throws ConfigError
/// if the file cannot be opened.
void write_file(const std::string& path, const std::string& text);

/// Shortest round-trip decimal for a double.
std::string fmt(double v);

}  // namespace vdw::report
