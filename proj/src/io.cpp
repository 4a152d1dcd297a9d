#include "supertree/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "supertree/error.hpp"

namespace supertree::io {

using nlohmann::json;

json to_json(const Hypergraph& h) {
    json edges = json::array();
    for (const auto& e : h.edges()) edges.push_back(e);
    return json{{"k", h.k()}, {"n", h.n()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const json& j) {
    try {
        if (!j.is_object()) throw ParseError("hypergraph must be a JSON object");
        for (const char* field : {"k", "n", "edges"}) {
            if (!j.contains(field)) throw ParseError(std::string("hypergraph object lacks field \"") + field + "\"");
        }
        if (!j.at("k").is_number_integer() || !j.at("n").is_number_integer() || !j.at("edges").is_array()) {
            throw ParseError("hypergraph fields have the wrong types");
        }
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.push_back(e.get<Edge>());
        return Hypergraph(j.at("k").get<int>(), j.at("n").get<int>(), std::move(edges));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("malformed hypergraph: ") + ex.what());
    }
}

json to_json(const WeightedIncidence& b, double alpha) {
    json out = to_json(b.host());
    out["alpha"] = alpha;
    json entries = json::array();
    for (const auto& entry : b.entries()) entries.push_back(json{{"v", entry.v}, {"e", entry.e}, {"w", entry.w}});
    out["B"] = std::move(entries);
    return out;
}

CertificateFile certificate_from_json(const json& j) {
    CertificateFile out{hypergraph_from_json(j), std::nullopt, std::nullopt};
    try {
        if (j.contains("alpha")) out.alpha = j.at("alpha").get<double>();
        if (j.contains("B")) {
            std::vector<WeightedIncidence::Entry> entries;
            for (const auto& item : j.at("B")) {
                entries.push_back({item.at("v").get<Vertex>(), item.at("e").get<int>(), item.at("w").get<double>()});
            }
            out.certificate = WeightedIncidence::from_entries(out.graph, entries);
        }
    } catch (const json::exception& ex) {
        throw ParseError(std::string("malformed certificate: ") + ex.what());
    }
    return out;
}

json to_json(const SpectraReport& report) {
    json entries = json::array();
    for (const auto& entry : report.entries) {
        json edges = json::array();
        for (const auto& e : entry.graph.edges()) edges.push_back(e);
        entries.push_back(json{{"rank", entry.rank},
                               {"key", entry.key},
                               {"edges", std::move(edges)},
                               {"rho", entry.rho},
                               {"method", std::string(to_string(entry.method))},
                               {"tied", entry.tied_with_next}});
    }
    return json{{"k", report.k}, {"m", report.m}, {"entries", std::move(entries)}};
}

std::string format_double(double value) {
    char buf[64];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) break;
    }
    return buf;
}

std::string to_csv(const SpectraReport& report) {
    std::ostringstream os;
    os << "rank,key,rho,method\n";
    for (const auto& entry : report.entries) {
        os << entry.rank << ',' << entry.key << ',' << format_double(entry.rho) << ',' << to_string(entry.method)
           << '\n';
    }
    return os.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

}  // namespace supertree::io
