#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "supertree/certificates.hpp"
#include "supertree/hypergraph.hpp"
#include "supertree/ordering.hpp"

namespace supertree::io {

/// {"k": int, "n": int, "edges": [[int, ...], ...]} with sorted edges.
nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

/// Hypergraph object plus "alpha" and "B": [{"v", "e", "w"}, ...].
nlohmann::json to_json(const WeightedIncidence& b, double alpha);

struct CertificateFile {
    Hypergraph graph;
    std::optional<double> alpha;
    std::optional<WeightedIncidence> certificate;
};

/// Accepts a plain hypergraph object or one carrying "alpha" and/or "B".
CertificateFile certificate_from_json(const nlohmann::json& j);

/// Header {"k", "m"} and "entries": [{"rank", "key", "edges", "rho",
/// "method", "tied"}]. generated_at is left out so output is byte-stable.
nlohmann::json to_json(const SpectraReport& report);

/// rank,key,rho,method
std::string to_csv(const SpectraReport& report);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

/// Throws ParseError on unreadable or malformed JSON.
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace supertree::io
