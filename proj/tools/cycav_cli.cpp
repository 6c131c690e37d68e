// Command-line front end: counting, streaming enumeration, sequence export,
// closed-form verification, bijection checking and partition statistics.
//
// Exit codes: 0 success, 1 verification mismatch, 2 argument or input error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycav/bijections.hpp"
#include "cycav/closed_forms.hpp"
#include "cycav/enumerate.hpp"
#include "cycav/perm.hpp"

namespace {

using nlohmann::ordered_json;

cycav::AvoidanceSpec spec_from_flags(const std::string& one_line_csv, const std::string& cycle) {
    return cycav::parse_avoidance_spec(one_line_csv + ";" + cycle);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw cycav::Error("cannot open output file: " + path);
    file << content;
}

std::string format_sequence(const std::vector<std::pair<int, std::uint64_t>>& rows,
                            const std::string& format) {
    std::ostringstream out;
    if (format == "csv") {
        out << "n,count\n";
        for (const auto& [n, count] : rows) out << n << "," << count << "\n";
    } else if (format == "bfile") {
        for (const auto& [n, count] : rows) out << n << " " << count << "\n";
    } else if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& [n, count] : rows) j.push_back({{"n", n}, {"count", count}});
        out << j.dump(2) << "\n";
    } else if (format == "table") {
        out << std::setw(4) << "n" << std::setw(12) << "count" << "\n";
        for (const auto& [n, count] : rows)
            out << std::setw(4) << n << std::setw(12) << count << "\n";
    } else {
        throw cycav::ParseError("unknown format: \"" + format + "\"");
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"cyclic permutations avoiding patterns in one-line and standard cycle form"};
    app.require_subcommand(1);

    std::string one_line_csv;
    std::string cycle_text;
    std::string spec_text;
    std::string spec_out_text;
    std::string theorem;
    std::string tau_text;
    std::string family_override;
    std::string map_text;
    std::string format = "table";
    std::string output_path;
    int n = 0;
    int from = 0;
    int to = 0;

    auto add_spec_flags = [&](CLI::App* cmd) {
        cmd->add_option("--one-line", one_line_csv,
                        "Comma-separated one-line patterns, e.g. 3421,4321 (may be omitted)");
        cmd->add_option("--cycle", cycle_text, "Cycle-form pattern, e.g. 213")->required();
    };

    CLI::App* cmd_count = app.add_subcommand("count", "Count the class members of one size");
    add_spec_flags(cmd_count);
    cmd_count->add_option("--n", n, "Permutation size")->required();

    CLI::App* cmd_enum =
        app.add_subcommand("enum", "Stream the class members in lexicographic order");
    add_spec_flags(cmd_enum);
    cmd_enum->add_option("--n", n, "Permutation size")->required();

    CLI::App* cmd_seq = app.add_subcommand("seq", "Counts over a range of sizes");
    add_spec_flags(cmd_seq);
    cmd_seq->add_option("--from", from, "First size")->required();
    cmd_seq->add_option("--to", to, "Last size")->required();
    cmd_seq->add_option("--format", format, "table | csv | json | bfile");
    cmd_seq->add_option("--output", output_path, "Write to a file instead of stdout");

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "Compare enumerated counts against a closed form");
    cmd_verify->add_option("--theorem", theorem, "Registry id, e.g. C3.6 or T4.8-mirror")
        ->required();
    cmd_verify->add_option("--from", from, "First size (defaults per theorem)");
    cmd_verify->add_option("--to", to, "Last size")->required();
    cmd_verify->add_option("--tau", tau_text, "Pattern parameter required by T3.4");
    cmd_verify->add_option("--format", format, "table | json");
    cmd_verify->add_option("--output", output_path, "Write to a file instead of stdout");
    cmd_verify->add_option("--family-override", family_override,
                           "Check against a different family (testing hook)")
        ->group("");  // hidden

    CLI::App* cmd_bijection =
        app.add_subcommand("bijection", "Round-trip and transport checks for one map");
    cmd_bijection->add_option("--map", map_text, "L22 | L23 | C24 | L45_RHO | L46_ETA | L43_RHO | INV")
        ->required();
    cmd_bijection->add_option("--spec", spec_text, "Avoidance spec, e.g. \"3421,4321;213\"")
        ->required();
    cmd_bijection->add_option("--spec-out", spec_out_text,
                              "Image-side spec (defaults to --spec; for INV, to its mirror)");
    cmd_bijection->add_option("--n", n, "Permutation size")->required();

    CLI::App* cmd_partition =
        app.add_subcommand("partition", "Cell counts by the position of 2, with the +/- split");
    cmd_partition->add_option("--spec", spec_text, "Avoidance spec, e.g. \"1324,1423;213\"")
        ->required();
    cmd_partition->add_option("--n", n, "Permutation size")->required();
    cmd_partition->add_option("--format", format, "table | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*cmd_count) {
        std::cout << cycav::count_class(n, spec_from_flags(one_line_csv, cycle_text)) << "\n";
        return 0;
    }

    if (*cmd_enum) {
        cycav::for_each_in_class(n, spec_from_flags(one_line_csv, cycle_text),
                                 [](const cycav::CycleWord& w) {
                                     std::cout << cycav::to_string(w) << "\n";
                                 });
        return 0;
    }

    if (*cmd_seq) {
        const auto rows = cycav::sequence(spec_from_flags(one_line_csv, cycle_text), from, to);
        write_output(output_path, format_sequence(rows, format));
        return 0;
    }

    if (*cmd_verify) {
        std::optional<cycav::Pattern> tau;
        if (!tau_text.empty()) tau = cycav::parse_pattern(tau_text);
        const int n_min =
            cmd_verify->count("--from") > 0 ? from : cycav::theorem_min_n(theorem);
        const cycav::VerificationReport report =
            family_override.empty()
                ? cycav::verify_theorem(theorem, n_min, to, tau)
                : cycav::verify_theorem_as(theorem, cycav::parse_family(family_override), n_min,
                                           to, tau);
        if (format == "json") {
            write_output(output_path, cycav::to_json_string(report));
        } else if (format == "table") {
            std::ostringstream table;
            cycav::print_table(report, table);
            write_output(output_path, table.str());
        } else {
            throw cycav::ParseError("unknown format: \"" + format + "\"");
        }
        return report.all_match ? 0 : 1;
    }

    if (*cmd_bijection) {
        const cycav::MapId id = cycav::parse_map(map_text);
        const cycav::AvoidanceSpec spec_in = cycav::parse_avoidance_spec(spec_text);
        const cycav::AvoidanceSpec spec_out =
            !spec_out_text.empty() ? cycav::parse_avoidance_spec(spec_out_text)
            : id == cycav::MapId::InverseSymmetry ? cycav::mirror_spec(spec_in)
                                                  : spec_in;
        const cycav::RoundTripReport round_trip = cycav::round_trip_check(id, n);
        const bool transport = cycav::transport_check(id, spec_in, spec_out, n);
        const bool pass = round_trip.pass && transport;
        ordered_json j;
        j["map"] = std::string(cycav::map_name(id));
        j["spec"] = cycav::to_string(spec_in);
        j["spec_out"] = cycav::to_string(spec_out);
        j["n"] = n;
        j["round_trip"] = {{"forward_domain", round_trip.forward_domain},
                           {"backward_domain", round_trip.backward_domain},
                           {"pass", round_trip.pass}};
        j["transport"] = transport;
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
        return pass ? 0 : 1;
    }

    if (*cmd_partition) {
        const cycav::AvoidanceSpec spec = cycav::parse_avoidance_spec(spec_text);
        const cycav::PositionPartition part = cycav::partition_by_two(n, spec);
        std::vector<cycav::PlusMinusSplit> splits;
        for (int r = 4; r <= n; ++r) splits.push_back(cycav::split_plus_minus(n, spec, r));
        if (format == "json") {
            ordered_json j;
            j["spec"] = cycav::to_string(spec);
            j["n"] = n;
            j["total"] = part.total();
            j["counts_by_j"] = ordered_json::array();
            for (const auto& [jpos, count] : part.counts_by_j)
                j["counts_by_j"].push_back({{"j", jpos}, {"count", count}});
            j["plus_minus"] = ordered_json::array();
            for (const auto& split : splits)
                j["plus_minus"].push_back(
                    {{"r", split.r}, {"plus", split.plus_count}, {"minus", split.minus_count}});
            std::cout << j.dump(2) << "\n";
        } else if (format == "table") {
            std::cout << "spec " << cycav::to_string(spec) << "   n " << n << "   total "
                      << part.total() << "\n";
            std::cout << std::setw(4) << "j" << std::setw(10) << "count" << "\n";
            for (const auto& [jpos, count] : part.counts_by_j)
                std::cout << std::setw(4) << jpos << std::setw(10) << count << "\n";
            if (!splits.empty()) {
                std::cout << std::setw(4) << "r" << std::setw(10) << "plus" << std::setw(10)
                          << "minus" << "\n";
                for (const auto& split : splits)
                    std::cout << std::setw(4) << split.r << std::setw(10) << split.plus_count
                              << std::setw(10) << split.minus_count << "\n";
            }
        } else {
            throw cycav::ParseError("unknown format: \"" + format + "\"");
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cycav::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
