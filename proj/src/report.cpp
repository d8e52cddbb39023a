#include "sgx/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sgx/io.hpp"

namespace sgx {

std::string format_index(double x) {
    if (std::fabs(x) < 5e-10) x = 0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    return buf;
}

nlohmann::json to_json(const SearchReport& r, bool timing) {
    nlohmann::json j{{"schema", kReportSchema},
                     {"kind", "search"},
                     {"mode", r.mode},
                     {"n", r.n},
                     {"forbid", r.spec.str()},
                     {"top_k", r.top_k},
                     {"graphs_visited", r.graphs_visited},
                     {"classes_visited", r.classes_visited}};
    if (r.mode == "local_search") {
        j["seed"] = r.seed;
        j["restarts"] = r.restarts;
        j["evidence"] = true;
        nlohmann::json ex = nlohmann::json::array();
        for (const auto& t : r.excluded) ex.push_back(t.str());
        j["excluded"] = ex;
        nlohmann::json outcomes = nlohmann::json::array();
        for (const auto& o : r.restart_outcomes) outcomes.push_back({o.restart, o.index, o.entry});
        j["restart_best"] = outcomes;
    }
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        const auto& e = r.entries[i];
        const auto book = book_count(e.representative);
        const auto friendship = friendship_count(e.representative);
        entries.push_back({{"rank", i + 1},
                           {"index", e.index},
                           {"unbalanced_triangles", e.unbalanced_triangles},
                           {"book", book.count},
                           {"friendship", friendship.count},
                           {"class", e.tag.str()},
                           {"canonical", e.canonical},
                           {"multiplicity", e.multiplicity},
                           {"graph", to_json(e.representative)},
                           {"sg", write_sg(e.representative)}});
    }
    j["entries"] = entries;
    if (timing) j["timing"] = {{"wall_seconds", r.wall_seconds}, {"index_evaluations", r.index_evaluations}};
    return j;
}

nlohmann::json to_json(const VerifyReport& r, bool timing) {
    nlohmann::json j{{"schema", kReportSchema},
                     {"kind", "verify"},
                     {"target", r.target},
                     {"range", {r.lo, r.hi}},
                     {"passed", r.passed},
                     {"evidence", r.evidence},
                     {"rows", r.rows},
                     {"failures", r.failures},
                     {"notes", r.notes}};
    j["worst_margin"] = std::isfinite(r.worst_margin) ? nlohmann::json(r.worst_margin) : nlohmann::json();
    if (timing) j["timing"] = {{"wall_seconds", r.wall_seconds}};
    return j;
}

std::string to_table(const SearchReport& r, bool timing) {
    std::ostringstream out;
    out << r.mode << "  n=" << r.n << "  forbid=" << r.spec.str();
    if (r.mode == "local_search") {
        out << "  seed=" << r.seed << "  restarts=" << r.restarts;
        for (const auto& t : r.excluded) out << "  exclude=" << t.str();
    } else {
        out << "  top=" << r.top_k << "  graphs=" << r.graphs_visited << "  classes=" << r.classes_visited;
    }
    out << "\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-5s %-14s %-4s %-4s %-4s %-14s %s\n", "rank", "index", "tri", "book", "fr",
                  "class", "multiplicity");
    out << line;
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        const auto& e = r.entries[i];
        std::snprintf(line, sizeof line, "%-5zu %-14s %-4zu %-4zu %-4zu %-14s %llu\n", i + 1,
                      format_index(e.index).c_str(), e.unbalanced_triangles, book_count(e.representative).count,
                      friendship_count(e.representative).count, e.tag.str().c_str(),
                      static_cast<unsigned long long>(e.multiplicity));
        out << line;
    }
    if (r.mode == "local_search") out << "evidence only: no counterexample found under the restart budget\n";
    if (timing) out << "wall " << r.wall_seconds << " s, " << r.index_evaluations << " index evaluations\n";
    return out.str();
}

std::string to_table(const VerifyReport& r, bool timing) {
    std::ostringstream out;
    out << r.target << " " << r.lo << ":" << r.hi << "  " << (r.passed ? "PASS" : "FAIL");
    if (r.evidence) out << " (evidence)";
    if (std::isfinite(r.worst_margin)) out << "  worst margin " << r.worst_margin;
    out << "\n";
    for (const auto& row : r.rows) {
        nlohmann::json flat = row;
        flat.erase("values");
        out << "  " << flat.dump() << "\n";
    }
    for (const auto& f : r.failures) out << "  failed: " << f << "\n";
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
    if (timing) out << "  wall " << r.wall_seconds << " s\n";
    return out.str();
}

}  // namespace sgx
