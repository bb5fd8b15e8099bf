#include "gsp4/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gsp4/checks.hpp"
#include "gsp4/counts.hpp"
#include "gsp4/genfun.hpp"
#include "gsp4/periodic.hpp"
#include "gsp4/plancherel.hpp"
#include "gsp4/render.hpp"
#include "gsp4/siegel.hpp"

namespace gsp4 {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ReprType require_type(const std::string& label) {
    auto type = ReprType::parse(label);
    if (!type) throw UsageError("unknown representation type '" + label + "'");
    return *type;
}

Format require_format(const std::string& label) {
    auto format = parse_format(label);
    if (!format) throw UsageError("unknown format '" + label + "' (use csv, json or md)");
    return *format;
}

std::vector<long long> parse_prime_list(const std::string& text) {
    std::vector<long long> primes;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        long long p = 0;
        try {
            p = std::stoll(item);
        } catch (const std::exception&) {
            throw UsageError("bad prime '" + item + "' in --primes");
        }
        if (!is_prime(p)) throw UsageError("--primes entry " + item + " is not prime");
        primes.push_back(p);
    }
    if (primes.empty()) throw UsageError("--primes list is empty");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

OutputRecord record_of(const CountResult& result) {
    return OutputRecord{result.k, result.p, result.omega.label(), result.value,
                        route_label(result.route)};
}

struct OutputTarget {
    std::ostream& stream;
    std::ofstream file;

    explicit OutputTarget(std::ostream& fallback, const std::string& path)
        : stream(fallback) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& out() { return file.is_open() ? file : stream; }
};

// ---- subcommand payloads ----------------------------------------------------

struct CommonArgs {
    std::string format = "csv";
    std::string out_path;
};

int run_count(long long p, long long k, const std::string& type_label, const CommonArgs& common,
              std::ostream& fallback) {
    const ReprType type = require_type(type_label);
    const CountResult result = count(k, p, type);
    OutputTarget target(fallback, common.out_path);
    write_records(target.out(), {record_of(result)}, require_format(common.format));
    return result.is_unknown() ? 3 : 0;
}

void render_table(std::ostream& out, Format format, const ReprType& type,
                  const std::vector<long long>& primes, const std::vector<long long>& weights) {
    const auto table = count_table(type, primes, weights);
    if (format == Format::Md) {
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : table) {
            std::vector<std::string> out_row;
            for (const CountResult& r : row) out_row.push_back(value_text(r.value));
            cells.push_back(std::move(out_row));
        }
        write_table_markdown(out, type.label(), primes, weights, cells);
        return;
    }
    std::vector<OutputRecord> records;
    for (const auto& row : table) {
        for (const CountResult& r : row) records.push_back(record_of(r));
    }
    write_records(out, records, format);
}

int run_table(const std::string& type_label, const std::string& primes_text, long long kmin,
              long long kmax, const std::string& suite, const CommonArgs& common,
              std::ostream& fallback) {
    const Format format = require_format(common.format);
    OutputTarget target(fallback, common.out_path);
    if (!suite.empty()) {
        if (suite != "appendix-b") throw UsageError("unknown table suite '" + suite + "'");
        std::vector<const AppendixTable*> matched;
        for (const AppendixTable& table : appendix_tables()) {
            if (!type_label.empty() && table.type.label() != require_type(type_label).label())
                continue;
            matched.push_back(&table);
        }
        if (matched.empty()) throw UsageError("no appendix table for type '" + type_label + "'");
        if (format == Format::Md) {
            // one pivot per published block, same layout as the tables
            for (const AppendixTable* table : matched)
                render_table(target.out(), format, table->type, table->primes, table->weights);
            return 0;
        }
        // flat records; blocks of the same type merge, ordered by p then k
        std::vector<OutputRecord> records;
        std::vector<std::string> seen_types;
        for (const AppendixTable* table : matched) {
            const std::string label = table->type.label();
            if (std::find(seen_types.begin(), seen_types.end(), label) != seen_types.end())
                continue;
            seen_types.push_back(label);
            std::vector<std::pair<long long, long long>> cells;  // (p, k)
            for (const AppendixTable* block : matched) {
                if (block->type.label() != label) continue;
                for (long long p : block->primes)
                    for (long long k : block->weights) cells.emplace_back(p, k);
            }
            std::sort(cells.begin(), cells.end());
            for (const auto& [p, k] : cells)
                records.push_back(record_of(count(k, p, table->type)));
        }
        write_records(target.out(), records, format);
        return 0;
    }
    if (type_label.empty()) throw UsageError("table requires --type (or --suite appendix-b)");
    if (kmin < 1 || kmax < kmin) throw UsageError("table requires 1 <= kmin <= kmax");
    std::vector<long long> weights;
    for (long long k = kmin; k <= kmax; ++k) weights.push_back(k);
    render_table(target.out(), format, require_type(type_label), parse_prime_list(primes_text),
                 weights);
    return 0;
}

int run_dims(const std::string& group_label, long long p, long long kmin, long long kmax,
             const CommonArgs& common, std::ostream& fallback, bool newforms_only) {
    auto group = parse_subgroup(group_label);
    if (!group) throw UsageError("unknown group '" + group_label + "'");
    if (newforms_only && *group == SubgroupKind::Full)
        throw UsageError("newforms: no newform notion at full level");
    if (kmin < 1 || kmax < kmin) throw UsageError("requires 1 <= kmin <= kmax");
    std::vector<OutputRecord> records;
    for (long long k = kmin; k <= kmax; ++k) {
        std::optional<BigInt> value = newforms_only ? dim_newforms(k, p, *group)
                                                    : dim_siegel_cusp(k, p, *group);
        records.push_back(OutputRecord{k, p, subgroup_label(*group), std::move(value), "derived"});
    }
    OutputTarget target(fallback, common.out_path);
    write_records(target.out(), records, require_format(common.format));
    return 0;
}

int run_plancherel(long long q, const CommonArgs& common, std::ostream& fallback) {
    if (prime_power_base(q) == 0) throw UsageError("--q must be a prime power >= 2");
    static const MassClass classes[] = {MassClass::I,  MassClass::II, MassClass::III,
                                        MassClass::IV, MassClass::V,  MassClass::VI};
    const bool system_ok = verify_mass_system(q);
    const Format format = require_format(common.format);
    OutputTarget target(fallback, common.out_path);
    std::ostream& out = target.out();
    switch (format) {
        case Format::Csv:
            out << "q,omega,mass\n";
            for (MassClass mass_class : classes) {
                out << q << ',' << mass_class_label(mass_class) << ','
                    << plancherel_mass(q, mass_class).to_string() << '\n';
            }
            out << q << ",system," << (system_ok ? "ok" : "violated") << '\n';
            break;
        case Format::Json:
            out << "{\"q\":" << q << ",\"masses\":[";
            for (std::size_t i = 0; i < 6; ++i) {
                if (i) out << ',';
                out << "{\"omega\":\"" << mass_class_label(classes[i]) << "\",\"mass\":\""
                    << plancherel_mass(q, classes[i]).to_string() << "\"}";
            }
            out << "],\"system\":\"" << (system_ok ? "ok" : "violated") << "\"}\n";
            break;
        case Format::Md:
            out << "| omega | mass at q=" << q << " |\n|---|---|\n";
            for (MassClass mass_class : classes) {
                out << "| " << mass_class_label(mass_class) << " | "
                    << plancherel_mass(q, mass_class).to_string() << " |\n";
            }
            out << "\nsystem: " << (system_ok ? "ok" : "violated") << '\n';
            break;
    }
    return system_ok ? 0 : 1;
}

int run_series(long long p, const std::string& type_label, long long upto, bool dump,
               const CommonArgs& common, std::ostream& fallback) {
    const ReprType type = require_type(type_label);
    if (upto < 0) throw UsageError("series requires --upto >= 0");
    const RationalGeneratingFunction gf = gf_catalog(p, type);
    OutputTarget target(fallback, common.out_path);
    if (dump) {
        target.out() << gf.to_string() << '\n';
        return 0;
    }
    const SeriesExpansion expansion = expand(gf, static_cast<std::size_t>(upto));
    std::vector<OutputRecord> records;
    for (long long k = 0; k <= upto; ++k) {
        records.push_back(OutputRecord{k, p, type.label(),
                                       expansion.coefficients[static_cast<std::size_t>(k)],
                                       "series"});
    }
    write_records(target.out(), records, require_format(common.format));
    return 0;
}

void write_check_reports(std::ostream& out, const std::vector<CheckReport>& reports,
                         Format format) {
    switch (format) {
        case Format::Csv:
            out << "suite,cases,failures,where,expected,actual\n";
            for (const CheckReport& report : reports) {
                out << report.suite << ',' << report.cases << ',' << report.failures.size()
                    << ",,,\n";
                for (const CheckFailure& f : report.failures) {
                    out << report.suite << ",,," << f.where << ',' << f.expected << ','
                        << f.actual << '\n';
                }
            }
            break;
        case Format::Json:
            out << "[\n";
            for (std::size_t i = 0; i < reports.size(); ++i) {
                const CheckReport& report = reports[i];
                out << "  {\"suite\":\"" << report.suite << "\",\"cases\":" << report.cases
                    << ",\"failures\":[";
                for (std::size_t j = 0; j < report.failures.size(); ++j) {
                    const CheckFailure& f = report.failures[j];
                    if (j) out << ',';
                    out << "{\"where\":\"" << f.where << "\",\"expected\":\"" << f.expected
                        << "\",\"actual\":\"" << f.actual << "\"}";
                }
                out << "]}";
                if (i + 1 < reports.size()) out << ',';
                out << '\n';
            }
            out << "]\n";
            break;
        case Format::Md:
            out << "| suite | cases | failures |\n|---|---|---|\n";
            for (const CheckReport& report : reports) {
                out << "| " << report.suite << " | " << report.cases << " | "
                    << report.failures.size() << " |\n";
            }
            for (const CheckReport& report : reports) {
                for (const CheckFailure& f : report.failures) {
                    out << "- FAIL [" << report.suite << "] " << f.where << ": expected "
                        << f.expected << ", got " << f.actual << '\n';
                }
            }
            break;
    }
}

int run_check(const std::string& suite, bool format_given, const CommonArgs& common,
              std::ostream& fallback) {
    std::vector<CheckReport> reports;
    if (suite == "appendix") reports.push_back(check_appendix());
    else if (suite == "series-vs-closed") reports.push_back(check_series_vs_closed());
    else if (suite == "relations") reports.push_back(check_relations());
    else if (suite == "plancherel") reports.push_back(check_plancherel());
    else if (suite == "limit") reports.push_back(check_limit());
    else if (suite == "all") reports = run_all_checks();
    else throw UsageError("unknown check suite '" + suite + "'");

    OutputTarget target(fallback, common.out_path);
    std::ostream& out = target.out();
    if (format_given) {
        write_check_reports(out, reports, require_format(common.format));
    } else {
        // plain summary unless a format is asked for explicitly
        for (const CheckReport& report : reports) {
            out << "suite=" << report.suite << " cases=" << report.cases
                << " failures=" << report.failures.size() << '\n';
            for (const CheckFailure& f : report.failures) {
                out << "FAIL [" << report.suite << "] " << f.where << ": expected "
                    << f.expected << ", got " << f.actual << '\n';
            }
        }
    }
    bool ok = true;
    for (const CheckReport& report : reports) ok = ok && report.ok();
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of cuspidal automorphic representations of GSp(4) with "
                 "Iwahori-spherical local type, and derived Siegel cusp form dimensions"};
    app.name("gsp4count");
    app.require_subcommand(1);

    CommonArgs common;
    long long arg_p = 0, arg_q = 0, arg_k = 0, arg_kmin = 1, arg_kmax = 30, arg_upto = 20;
    std::string arg_type, arg_group, arg_suite, arg_primes = "2,3,5,7,11,13,17,19";
    bool arg_dump = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "output format: csv, json or md");
        cmd->add_option("--out", common.out_path, "write output to a file instead of stdout");
    };

    CLI::App* cmd_count = app.add_subcommand("count", "one value s_k(p, type)");
    cmd_count->add_option("--p", arg_p, "prime level")->required();
    cmd_count->add_option("--k", arg_k, "weight")->required();
    cmd_count->add_option("--type", arg_type, "representation type label")->required();
    add_common(cmd_count);

    CLI::App* cmd_table = app.add_subcommand("table", "table of counts over primes and weights");
    cmd_table->add_option("--type", arg_type, "representation type label");
    cmd_table->add_option("--primes", arg_primes, "comma-separated prime list");
    cmd_table->add_option("--kmin", arg_kmin, "first weight");
    cmd_table->add_option("--kmax", arg_kmax, "last weight");
    cmd_table->add_option("--suite", arg_suite, "named table suite: appendix-b");
    add_common(cmd_table);

    CLI::App* cmd_dims = app.add_subcommand("dims", "dim S_k for a congruence subgroup");
    cmd_dims->add_option("--group", arg_group, "full, paramodular, siegel, klingen or borel")
        ->required();
    cmd_dims->add_option("--p", arg_p, "prime level")->required();
    cmd_dims->add_option("--kmin", arg_kmin, "first weight");
    cmd_dims->add_option("--kmax", arg_kmax, "last weight")->required();
    add_common(cmd_dims);

    CLI::App* cmd_new = app.add_subcommand("newforms", "dim S_k^new for a congruence subgroup");
    cmd_new->add_option("--group", arg_group, "paramodular, siegel, klingen or borel")
        ->required();
    cmd_new->add_option("--p", arg_p, "prime level")->required();
    cmd_new->add_option("--kmin", arg_kmin, "first weight");
    cmd_new->add_option("--kmax", arg_kmax, "last weight")->required();
    add_common(cmd_new);

    CLI::App* cmd_pl = app.add_subcommand("plancherel", "Plancherel masses and the volume check");
    cmd_pl->add_option("--q", arg_q, "residue field size (prime power)")->required();
    add_common(cmd_pl);

    CLI::App* cmd_series = app.add_subcommand("series", "series coefficients of a catalog entry");
    cmd_series->add_option("--p", arg_p, "prime level")->required();
    cmd_series->add_option("--type", arg_type, "representation type label")->required();
    cmd_series->add_option("--upto", arg_upto, "truncation order");
    cmd_series->add_flag("--dump", arg_dump, "dump the rational function instead of expanding");
    add_common(cmd_series);

    CLI::App* cmd_check = app.add_subcommand("check", "run a consistency-check suite");
    cmd_check
        ->add_option("--suite", arg_suite,
                     "appendix, series-vs-closed, relations, plancherel, limit or all")
        ->required();
    add_common(cmd_check);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*cmd_count) return run_count(arg_p, arg_k, arg_type, common, out);
        if (*cmd_table)
            return run_table(arg_type, arg_primes, arg_kmin, arg_kmax, arg_suite, common, out);
        if (*cmd_dims)
            return run_dims(arg_group, arg_p, arg_kmin, arg_kmax, common, out, false);
        if (*cmd_new) return run_dims(arg_group, arg_p, arg_kmin, arg_kmax, common, out, true);
        if (*cmd_pl) return run_plancherel(arg_q, common, out);
        if (*cmd_series) return run_series(arg_p, arg_type, arg_upto, arg_dump, common, out);
        if (*cmd_check)
            return run_check(arg_suite, cmd_check->count("--format") > 0, common, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "fatal: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace gsp4
