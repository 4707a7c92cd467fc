#include "mpart/report.hpp"

#include <fstream>
#include <sstream>

namespace mpart {

using nlohmann::json;

json matrix_json(const PatternMatrix& m) { return {{"m", m.order()}, {"rows", m.row_strings()}}; }

json witness_json(const PartAssignment& a) { return {{"parts", a.parts}}; }

json certificate_json(const MinimalityCertificate& cert) {
    json witnesses = json::array();
    for (const auto& w : cert.witnesses) witnesses.push_back(w.parts);
    return {{"graph6", to_graph6(cert.graph)},
            {"matrix", matrix_json(cert.matrix)},
            {"deleted_vertex_witnesses", std::move(witnesses)}};
}

json report_json(const EnumerationReport& report) {
    json counts = json::object();
    for (auto [n, c] : report.counts) counts[std::to_string(n)] = c;
    json candidates = json::object();
    for (auto [n, c] : report.candidates) candidates[std::to_string(n)] = c;
    json obstructions = json::array();
    for (const auto& entry : report.obstructions) {
        obstructions.push_back({{"n", entry.certificate.graph.order()},
                                {"graph6", entry.graph6},
                                {"certificate_ok", verify_certificate(entry.certificate)},
                                {"witnesses", certificate_json(entry.certificate)["deleted_vertex_witnesses"]}});
    }
    json out = {{"matrix", matrix_json(report.matrix)},
                {"class", std::string(to_string(report.graph_class))},
                {"n_max", report.n_max},
                {"counts", std::move(counts)},
                {"candidates", std::move(candidates)},
                {"obstructions", std::move(obstructions)},
                {"version", kVersion}};
    if (report.diagonal_star) out["note"] = "diagonal-star: every graph is partitionable";
    return out;
}

std::string report_tsv(const EnumerationReport& report) {
    std::ostringstream out;
    out << "n\tgraph6\tcertificate-ok\n";
    for (const auto& entry : report.obstructions) {
        out << entry.certificate.graph.order() << '\t' << entry.graph6 << '\t'
            << (verify_certificate(entry.certificate) ? "yes" : "no") << '\n';
    }
    return out.str();
}

std::string matrix_slug(const PatternMatrix& m) {
    std::string out;
    for (const auto& row : m.row_strings()) {
        if (!out.empty()) out.push_back('-');
        for (char ch : row) out.push_back(ch == '*' ? 's' : ch);
    }
    return out;
}

std::filesystem::path persist_catalog(const EnumerationReport& report, const std::filesystem::path& root) {
    const auto dir = root / matrix_slug(report.matrix) / std::string(to_string(report.graph_class));
    std::filesystem::create_directories(dir);
    for (int n = 1; n <= report.n_max; ++n) {
        std::ofstream file(dir / ("n" + std::to_string(n) + ".g6"), std::ios::trunc);
        for (const auto& entry : report.obstructions) {
            if (entry.certificate.graph.order() == n) file << entry.graph6 << '\n';
        }
    }

    const auto counts = diag_counts(report.matrix);
    json bounds = json::object();
    if (counts.stars == 0) {
        const auto t1 = theorem1_bound(counts.zeros, counts.ones);
        bounds["split"] = {{"value", t1.value}, {"swapped", t1.swapped}};
        bounds["bipartite"] = theorem4_bound(counts.zeros, counts.ones);
        bool star_free = true;
        for (int i = 0; i < report.matrix.order(); ++i) {
            for (int j = 0; j < report.matrix.order(); ++j) star_free &= report.matrix(i, j) != Entry::Star;
        }
        if (star_free) bounds["star_free"] = feder2008_bound(counts.zeros, counts.ones);
    }
    json manifest = {{"matrix_text", report.matrix.to_text()},
                     {"matrix", matrix_json(report.matrix)},
                     {"class", std::string(to_string(report.graph_class))},
                     {"n_max", report.n_max},
                     {"counts", report_json(report)["counts"]},
                     {"bounds", std::move(bounds)},
                     {"layout", "n<k>.g6 holds the minimal obstructions on k vertices, one graph6 per line"},
                     {"version", kVersion}};
    std::ofstream(dir / "manifest.json", std::ios::trunc) << manifest.dump(2) << '\n';
    return dir;
}

}  // namespace mpart
