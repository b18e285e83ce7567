// Command-line front end: sweep the registry, list it, or extract the
// coefficients a theorem leaves open.
#include "spinsh/spinsh.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

namespace {

using spinsh::catalog::ExtractedCoefficients;
using spinsh::catalog::TheoremSpec;

int default_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

spinsh::ReportFormat parse_format(const std::string& name) {
    if (name == "json") return spinsh::ReportFormat::Json;
    if (name == "csv") return spinsh::ReportFormat::Csv;
    return spinsh::ReportFormat::Text;
}

std::vector<const TheoremSpec*> select(const std::string& filter) {
    std::vector<const TheoremSpec*> out;
    for (const auto& s : spinsh::catalog::registry())
        if (filter.empty() ||
            spinsh::catalog::glob_match(filter.c_str(), s.id.c_str()))
            out.push_back(&s);
    return out;
}

int cmd_verify(const spinsh::catalog::SweepConfig& cfg,
               const std::string& format, const std::string& out_path) {
    if (select(cfg.filter).empty()) {
        std::cerr << "no theorem matches filter: " << cfg.filter << "\n";
        return 2;
    }
    const spinsh::VerificationReport rep = spinsh::catalog::sweep(cfg);
    const spinsh::ReportFormat fmt = parse_format(format);
    if (out_path.empty()) {
        std::cout << spinsh::render_report(rep, fmt);
    } else {
        spinsh::write_report_file(rep, fmt, out_path);
        std::cout << "report written to " << out_path << " (" << rep.passed
                  << "/" << rep.total << " cases passed)\n";
    }
    if (rep.failed != 0) {
        for (const auto& r : rep.records)
            if (!r.pass)
                std::cerr << "FAIL " << r.id << " [" << r.params.str(r.uses)
                          << "] " << r.kind << " residual " << r.residual
                          << "\n";
        return 1;
    }
    return 0;
}

int cmd_list(const std::string& filter, const std::string& format) {
    const auto sel = select(filter);
    if (sel.empty()) {
        std::cerr << "no theorem matches filter: " << filter << "\n";
        return 2;
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const TheoremSpec* s : sel) {
            nlohmann::json e{{"id", s->id},
                             {"family", spinsh::catalog::to_string(s->family)},
                             {"mode", spinsh::catalog::to_string(s->mode)},
                             {"citation", s->citation},
                             {"domain", s->domain_summary},
                             {"local_only", s->local_only}};
            if (!s->coeff_labels.empty()) e["coefficients"] = s->coeff_labels;
            arr.push_back(e);
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    for (const TheoremSpec* s : sel)
        std::printf("%-26s %-15s %-11s %-18s %s\n", s->id.c_str(),
                    spinsh::catalog::to_string(s->family),
                    spinsh::catalog::to_string(s->mode), s->citation.c_str(),
                    s->domain_summary.c_str());
    return 0;
}

int cmd_extract(const std::string& theorem, int lmax, int pairs,
                std::uint64_t seed, double tol, const std::string& format) {
    const TheoremSpec* spec = nullptr;
    for (const auto& s : spinsh::catalog::registry())
        if (s.id == theorem) spec = &s;
    if (spec == nullptr) {
        std::cerr << "unknown theorem id: " << theorem << "\n";
        return 2;
    }
    if (spec->mode != spinsh::catalog::Mode::Extraction) {
        std::cerr << spec->id << ": explicit theorem, nothing to extract\n";
        return 2;
    }
    auto pair_list = spinsh::catalog::make_pairs(seed, pairs);
    if (spec->local_only) pair_list = spinsh::catalog::localize(pair_list);

    std::vector<ExtractedCoefficients> rows;
    for (const auto& p : spec->enumerate(lmax))
        rows.push_back(spinsh::catalog::extract_coefficients(*spec, p,
                                                             pair_list));
    bool ok = true;
    for (const auto& r : rows)
        ok = ok && r.residual < tol && r.max_imag < tol && r.spread < 1e-8;

    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json pj{{"l", r.params.l}};
            if (spec->uses.dl) pj["dl"] = r.params.dl;
            if (spec->uses.j) pj["j"] = r.params.j.str();
            if (spec->uses.m) pj["m"] = r.params.m;
            if (spec->uses.t) pj["t"] = r.params.t;
            nlohmann::json coeffs;
            for (const auto& [label, value] : r.coefficients)
                coeffs[label] = value;
            arr.push_back({{"id", r.id},
                           {"params", pj},
                           {"coefficients", coeffs},
                           {"residual", r.residual},
                           {"spread", r.spread},
                           {"max_imag", r.max_imag}});
        }
        std::cout << nlohmann::json{{"theorem", spec->id},
                                    {"citation", spec->citation},
                                    {"rows", arr}}
                         .dump(2)
                  << "\n";
    } else {
        std::printf("%s (%s), %zu tuples, %zu sample pairs\n",
                    spec->id.c_str(), spec->citation.c_str(), rows.size(),
                    pair_list.size());
        std::size_t widest = 0;
        for (const auto& r : rows)
            widest = std::max(widest, r.coefficients.size());
        std::string header = "  params";
        header.resize(24, ' ');
        for (std::size_t k = 0; k < widest; ++k) {
            const std::string label = k < spec->coeff_labels.size()
                                          ? spec->coeff_labels[k]
                                          : "c" + std::to_string(k);
            char cell[32];
            std::snprintf(cell, sizeof cell, " %14s", label.c_str());
            header += cell;
        }
        header += "       residual         spread\n";
        std::fputs(header.c_str(), stdout);
        for (const auto& r : rows) {
            std::string line = "  " + r.params.str(spec->uses);
            line.resize(std::max<std::size_t>(line.size(), 24), ' ');
            for (const auto& [label, value] : r.coefficients) {
                (void)label;
                char cell[32];
                std::snprintf(cell, sizeof cell, " %14.9f", value);
                line += cell;
            }
            for (std::size_t k = r.coefficients.size(); k < widest; ++k)
                line += std::string(15, ' ');
            char tail[48];
            std::snprintf(tail, sizeof tail, "  %13.3e  %13.3e\n",
                          r.residual, r.spread);
            line += tail;
            std::fputs(line.c_str(), stdout);
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"catalog of bilocal and local sums of spin spherical "
                 "harmonics, verified numerically"};
    app.require_subcommand(1);

    int lmax = 10;
    int pairs = 20;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::string filter;
    std::string format = "text";
    std::string out_path;
    int jobs = default_jobs();
    std::string theorem;

    CLI::App* verify = app.add_subcommand("verify", "sweep the registry");
    verify->add_option("--lmax", lmax, "largest orbital degree");
    verify->add_option("--pairs", pairs, "random direction pairs")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "direction generator seed");
    verify->add_option("--tol", tol, "residual tolerance");
    verify->add_option("--filter", filter, "glob over theorem ids");
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", out_path, "report file (atomic write)");
    verify->add_option("--jobs", jobs, "worker threads")
        ->check(CLI::PositiveNumber);

    CLI::App* list = app.add_subcommand("list", "print the theorem index");
    list->add_option("--filter", filter, "glob over theorem ids");
    list->add_option("--format", format, "index format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* extract =
        app.add_subcommand("extract", "fit the open coefficients");
    extract->add_option("--theorem", theorem, "extraction-mode theorem id")
        ->required();
    extract->add_option("--lmax", lmax, "largest orbital degree");
    extract->add_option("--pairs", pairs, "random direction pairs")
        ->check(CLI::PositiveNumber);
    extract->add_option("--seed", seed, "direction generator seed");
    extract->add_option("--tol", tol, "residual tolerance");
    extract->add_option("--format", format, "table format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            spinsh::catalog::SweepConfig cfg;
            cfg.l_max = lmax;
            cfg.pairs = pairs;
            cfg.seed = seed;
            cfg.tol = tol;
            cfg.filter = filter;
            cfg.jobs = jobs;
            return cmd_verify(cfg, format, out_path);
        }
        if (app.got_subcommand(list)) return cmd_list(filter, format);
        return cmd_extract(theorem, lmax, pairs, seed, tol, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
