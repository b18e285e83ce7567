// Verification run records and their JSON, CSV and plain-text renderings.
#pragma once

#include "spinsh/catalog/types.hpp"
#include "spinsh/version.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinsh {

struct RunMeta {
    std::uint64_t seed = 42;
    int l_max = 10;
    int pairs = 20;
    double tol = 1e-9;
    std::string version = kVersion;
    std::string timestamp;
};

struct CaseRecord {
    std::string id;
    catalog::Params params;
    catalog::ParamFields uses;
    std::string kind;
    double residual = 0.0;
    bool pass = false;
};

struct VerificationReport {
    RunMeta meta;
    std::vector<CaseRecord> records;
    int total = 0;
    int passed = 0;
    int failed = 0;

    void recount() {
        total = static_cast<int>(records.size());
        passed = 0;
        for (const auto& r : records)
            if (r.pass) ++passed;
        failed = total - passed;
    }
};

inline std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace detail {

inline double finite_or_cap(double x) {
    return std::isfinite(x) ? x : 9.9e99;
}

inline std::string residual_str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", finite_or_cap(x));
    return buf;
}

} // namespace detail

inline nlohmann::json to_json(const VerificationReport& rep) {
    nlohmann::json meta{{"seed", rep.meta.seed},
                        {"l_max", rep.meta.l_max},
                        {"pairs", rep.meta.pairs},
                        {"tol", rep.meta.tol},
                        {"version", rep.meta.version},
                        {"timestamp", rep.meta.timestamp}};
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& r : rep.records) {
        nlohmann::json pj{{"l", r.params.l}};
        if (r.uses.dl) pj["dl"] = r.params.dl;
        if (r.uses.j) pj["j"] = r.params.j.str();
        if (r.uses.m) pj["m"] = r.params.m;
        if (r.uses.t) pj["t"] = r.params.t;
        cases.push_back({{"id", r.id},
                         {"kind", r.kind},
                         {"params", pj},
                         {"residual", detail::finite_or_cap(r.residual)},
                         {"verdict", r.pass ? "pass" : "fail"}});
    }
    return {{"meta", meta},
            {"summary",
             {{"total", rep.total},
              {"passed", rep.passed},
              {"failed", rep.failed}}},
            {"cases", cases}};
}

inline std::string to_csv(const VerificationReport& rep) {
    std::ostringstream os;
    os << "# seed=" << rep.meta.seed << "\n";
    os << "# l_max=" << rep.meta.l_max << "\n";
    os << "# pairs=" << rep.meta.pairs << "\n";
    os << "# tol=" << detail::residual_str(rep.meta.tol) << "\n";
    os << "# version=" << rep.meta.version << "\n";
    os << "# timestamp=" << rep.meta.timestamp << "\n";
    os << "id,kind,l,dl,j,m,t,residual,verdict\n";
    for (const auto& r : rep.records) {
        os << r.id << "," << r.kind << "," << r.params.l << ",";
        if (r.uses.dl) os << r.params.dl;
        os << ",";
        if (r.uses.j) os << r.params.j.str();
        os << ",";
        if (r.uses.m) os << r.params.m;
        os << ",";
        if (r.uses.t) os << r.params.t;
        os << "," << detail::residual_str(r.residual) << ","
           << (r.pass ? "pass" : "fail") << "\n";
    }
    return os.str();
}

inline std::string to_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "verification run (version " << rep.meta.version << ")\n";
    os << "  seed=" << rep.meta.seed << " l_max=" << rep.meta.l_max
       << " pairs=" << rep.meta.pairs << " tol=" << rep.meta.tol << "\n";
    os << "  timestamp: " << rep.meta.timestamp << "\n\n";

    struct Roll {
        int cases = 0;
        int fails = 0;
        double worst = 0.0;
    };
    std::vector<std::string> order;
    std::map<std::string, Roll> rolls;
    for (const auto& r : rep.records) {
        auto it = rolls.find(r.id);
        if (it == rolls.end()) {
            order.push_back(r.id);
            it = rolls.emplace(r.id, Roll{}).first;
        }
        ++it->second.cases;
        if (!r.pass) ++it->second.fails;
        if (r.residual > it->second.worst) it->second.worst = r.residual;
    }
    for (const auto& id : order) {
        const Roll& roll = rolls.at(id);
        const std::string verdict =
            roll.fails == 0 ? "ok" : "FAIL x" + std::to_string(roll.fails);
        char line[160];
        std::snprintf(line, sizeof line, "  %-26s %5d cases  worst %.3e  %s\n",
                      id.c_str(), roll.cases,
                      detail::finite_or_cap(roll.worst), verdict.c_str());
        os << line;
    }
    os << "\n";
    for (const auto& r : rep.records)
        if (!r.pass)
            os << "  FAIL " << r.id << " [" << r.params.str(r.uses) << "] "
               << r.kind << " residual " << detail::residual_str(r.residual)
               << "\n";
    os << "summary: " << order.size() << " theorems, " << rep.total
       << " cases, " << rep.passed << " passed, " << rep.failed
       << " failed\n";
    return os.str();
}

enum class ReportFormat { Text, Json, Csv };

inline std::string render_report(const VerificationReport& rep,
                                 ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::Json: return to_json(rep).dump(2) + "\n";
        case ReportFormat::Csv: return to_csv(rep);
        case ReportFormat::Text: break;
    }
    return to_text(rep);
}

inline void write_report_file(const VerificationReport& rep, ReportFormat fmt,
                              const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + tmp);
        os << render_report(rep, fmt);
        if (!os) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

} // namespace spinsh
