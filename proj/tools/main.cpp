#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "complen/corpus.hpp"

namespace fs = std::filesystem;
using namespace complen;

namespace {

// A positional argument is a group file when it names one on disk, and a
// construction spec otherwise.
ParsedGroup load_group(const std::string& arg) {
    if (fs::exists(arg)) return parse_group_file(arg);
    ParsedGroup out;
    out.id = arg;
    out.perm = build_construction(arg);
    return out;
}

void print_reports(const std::vector<BoundReport>& reps, const std::string& format) {
    if (format == "table") {
        std::cout << report_table_header() << "\n";
        for (const auto& rep : reps) std::cout << report_table_row(rep) << "\n";
    } else {
        for (const auto& rep : reps) std::cout << report_record(rep) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composition-length bounds for permutation and matrix groups"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --format sit after the subcommand too
    std::string format = "records";
    app.add_option("--format", format, "output style")->check(CLI::IsMember({"table", "records"}));

    auto theorem_check = CLI::IsMember({"T12", "T13", "T14", "T15", "T16a", "T16b"});

    auto* c_construct = app.add_subcommand("construct", "build a group from a construction spec");
    std::string construct_spec, construct_out;
    c_construct->add_option("spec", construct_spec, "construction spec, e.g. T(2) or wrP(S(5),T(1))")->required();
    c_construct->add_option("-o,--output", construct_out, "write the group file here instead of stdout");

    auto* c_len = app.add_subcommand("complen", "compute the composition length");
    std::string len_arg;
    bool len_oracle = false, len_analytic = false;
    unsigned len_budget = 64;
    std::uint64_t len_seed = 0xC0DEULL;
    c_len->add_option("group", len_arg, "construction spec or group file")->required();
    c_len->add_flag("--oracle", len_oracle, "cross-check against the subgroup-lattice oracle (order <= 5000)");
    c_len->add_flag("--analytic", len_analytic, "closed-form answer for a named construction, no engine run");
    c_len->add_option("--budget", len_budget, "random probes per normal-subgroup search");
    c_len->add_option("--seed", len_seed, "probe seed");

    auto* c_verify = app.add_subcommand("verify", "check one group against a bound");
    std::string verify_arg, verify_thm;
    c_verify->add_option("group", verify_arg, "construction spec or group file")->required();
    c_verify->add_option("--theorem", verify_thm, "which bound")->required()->check(theorem_check);

    auto* c_scan = app.add_subcommand("scan", "verify every group in a corpus");
    std::string scan_dir, scan_thm;
    bool scan_builtin_flag = false;
    unsigned scan_jobs = 0;
    c_scan->add_option("dir", scan_dir, "directory of group files");
    c_scan->add_flag("--builtin", scan_builtin_flag, "use the built-in transitive corpus, degrees 2..6");
    c_scan->add_option("--theorem", scan_thm, "which bound")->required()->check(theorem_check);
    c_scan->add_option("--jobs", scan_jobs, "worker threads (default: one per core)");

    auto* c_enum = app.add_subcommand("enumerate-transitive", "transitive groups of small degree, up to conjugacy");
    unsigned enum_n = 0;
    c_enum->add_option("n", enum_n, "degree, 1..6")->required()->check(CLI::Range(1u, 6u));

    try {
        app.parse(argc, argv);
        if (*c_scan && scan_builtin_flag == !scan_dir.empty())
            throw CLI::ValidationError("scan", "give a directory or --builtin (exactly one)");
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success) ? 0 : 1;
    }

    try {
        if (*c_construct) {
            PermGroup g = build_construction(construct_spec);
            if (construct_out.empty()) {
                write_group_file(std::cout, g);
            } else {
                std::ofstream out(construct_out);
                if (!out) throw std::runtime_error(construct_out + ": cannot write");
                write_group_file(out, g);
            }
            return 0;
        }

        if (*c_len) {
            if (len_analytic) {
                ConstructionInfo info = construction_info(len_arg);
                std::cout << "spec=" << info.canonical << " n=" << info.degree << " order=" << info.order
                          << " c=" << info.length << " certainty=analytic\n";
                return 0;
            }
            PermGroup g = parsed_to_perm(load_group(len_arg));
            LengthOptions opts;
            opts.probe_randoms = len_budget;
            opts.seed = len_seed;
            LengthResult res = composition_length(g, opts);
            std::optional<BigInt> oracle;
            if (len_oracle) oracle = composition_length_oracle(g);
            bool mismatch = oracle && *oracle != res.length;
            std::cout << "spec=" << (g.tag().empty() ? len_arg : g.tag()) << " n=" << g.degree()
                      << " order=" << g.order() << " c=" << res.length
                      << " certainty=" << (res.certainty == Certainty::Certified ? "certified" : "probable");
            if (oracle) std::cout << " oracle=" << *oracle << " agreement=" << (mismatch ? "NO" : "yes");
            std::cout << "\n";
            return mismatch ? 2 : 0;
        }

        if (*c_verify) {
            BoundReport rep = verify_parsed(load_group(verify_arg), *parse_theorem(verify_thm));
            print_reports({rep}, format);
            return rep.hypothesis_met && rep.verdict == Verdict::Violation ? 2 : 0;
        }

        if (*c_scan) {
            ScanOptions opts;
            opts.jobs = scan_jobs;
            ScanResult res;
            if (scan_builtin_flag) {
                res = scan_builtin(*parse_theorem(scan_thm), opts);
            } else {
                std::vector<fs::path> files;
                for (const auto& e : fs::directory_iterator(scan_dir))
                    if (e.is_regular_file()) files.push_back(e.path());
                std::sort(files.begin(), files.end());
                res = scan_corpus(files, *parse_theorem(scan_thm), opts);
            }
            print_reports(res.reports, format);
            for (const auto& e : res.errors) std::cout << "error: " << e << "\n";
            for (const auto& n : res.notes) std::cout << "note: " << n << "\n";
            std::cout << "summary: " << res.summary << "\n";
            if (res.violation) return 2;
            return res.errors.empty() ? 0 : 1;
        }

        if (*c_enum) {
            auto groups = enumerate_transitive_small(enum_n);
            for (const auto& g : groups) {
                std::ostringstream gens;
                for (std::size_t i = 0; i < g.generators().size(); ++i) {
                    if (i) gens << ' ';
                    const auto cs = g.generators()[i].cycles();
                    if (cs.empty()) gens << "()";
                    for (const auto& cyc : cs) {
                        gens << '(';
                        for (std::size_t j = 0; j < cyc.size(); ++j) gens << (j ? "," : "") << cyc[j] + 1;
                        gens << ')';
                    }
                }
                std::cout << "spec=" << g.tag() << " n=" << g.degree() << " order=" << g.order()
                          << " gens=" << gens.str() << "\n";
            }
            std::cout << "count=" << groups.size() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
