// Command-line front door: index evaluation, quasi-tree recognition, family
// construction, closed-form bounds, exhaustive verification, enumeration.
//
// Exit codes: 0 success / verified, 1 verification found a failure, 2 usage
// error, 3 input parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtr/bounds.hpp"
#include "qtr/canonical.hpp"
#include "qtr/constructions.hpp"
#include "qtr/enumeration.hpp"
#include "qtr/graph.hpp"
#include "qtr/graph6.hpp"
#include "qtr/indices.hpp"
#include "qtr/quasitree.hpp"
#include "qtr/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct ParseExit {
    int code;
};

double default_tolerance() {
    if (const char* env = std::getenv("QTR_TOLERANCE")) {
        try {
            double v = std::stod(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid QTR_TOLERANCE value\n";
    }
    return qtr::kDefaultTolerance;
}

/// One graph per line from a file or standard input ("-").
std::vector<std::pair<std::string, qtr::Graph>> read_graph6(const std::string& source) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (source != "-") {
        file.open(source);
        if (!file) {
            std::cerr << "error: cannot open " << source << "\n";
            throw ParseExit{kExitParse};
        }
        in = &file;
    }
    std::vector<std::pair<std::string, qtr::Graph>> out;
    std::string line;
    long long line_number = 0;
    while (std::getline(*in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.emplace_back(line, qtr::graph6_decode(line));
        } catch (const qtr::Graph6ParseError& err) {
            std::cerr << "error: line " << line_number << ": " << err.what() << "\n";
            throw ParseExit{kExitParse};
        }
    }
    return out;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) out += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

void emit_rows(const std::string& format, const std::vector<std::string>& csv_header,
               const std::vector<std::vector<std::string>>& csv_rows,
               const nlohmann::ordered_json& json_doc) {
    if (format == "csv") {
        std::string header;
        for (std::size_t i = 0; i < csv_header.size(); ++i)
            header += (i ? "," : "") + csv_header[i];
        std::cout << header << "\n";
        for (const auto& row : csv_rows) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "," : "") + csv_quote(row[i]);
            std::cout << line << "\n";
        }
    } else {
        std::cout << json_doc.dump(2) << "\n";
    }
}

std::vector<qtr::TheoremId> theorem_ids_from_name(const std::string& name) {
    if (name == "T1") return {qtr::TheoremId::T1_min_neg};
    if (name == "T2") return {qtr::TheoremId::T2_max_neg};
    if (name == "T3") return {qtr::TheoremId::T3_min_lin, qtr::TheoremId::T3_max_lin};
    if (name == "T4") return {qtr::TheoremId::T4_min_sup, qtr::TheoremId::T4_max_sup};
    if (name == "T5") return {qtr::TheoremId::T5_max_mid};
    if (name == "T6") return {qtr::TheoremId::T6_min_mid};
    for (qtr::TheoremId id :
         {qtr::TheoremId::T1_min_neg, qtr::TheoremId::T2_max_neg, qtr::TheoremId::T3_min_lin,
          qtr::TheoremId::T3_max_lin, qtr::TheoremId::T4_min_sup, qtr::TheoremId::T4_max_sup,
          qtr::TheoremId::T5_max_mid, qtr::TheoremId::T6_min_mid})
        if (qtr::theorem_name(id) == name) return {id};
    throw CLI::ValidationError("--theorem", "unknown theorem id: " + name);
}

std::string witnesses_to_text(const std::vector<std::uint64_t>& witnesses) {
    std::string out;
    bool first_set = true;
    for (std::uint64_t mask : witnesses) {
        if (!first_set) out += "|";
        first_set = false;
        bool first = true;
        std::uint64_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (!first) out += " ";
            first = false;
            out += std::to_string(v);
        }
        if (mask == 0) out += "-";
    }
    return out;
}

nlohmann::ordered_json witnesses_to_json(const std::vector<std::uint64_t>& witnesses) {
    auto sets = nlohmann::ordered_json::array();
    for (std::uint64_t mask : witnesses) {
        auto set = nlohmann::ordered_json::array();
        std::uint64_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            set.push_back(v);
        }
        sets.push_back(set);
    }
    return sets;
}

void check_alphas(const std::vector<double>& alphas) {
    for (double a : alphas)
        if (a == 0.0) throw CLI::ValidationError("--alpha", "alpha must be nonzero");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact laboratory for the zeroth-order general Randic index on "
                 "k-generalized quasi trees"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string graph6_source = "-";
    std::vector<double> alphas;
    double tolerance = default_tolerance();
    int jobs = 1;
    int n = 0, k = 1, p = 1, q = 1;

    // --- index ---
    auto* index_cmd = app.add_subcommand("index", "evaluate an index on graph6 input");
    std::string index_kind = "zeroth";
    index_cmd->add_option("--alpha", alphas, "exponent(s), nonzero")->required();
    index_cmd->add_option("--graph6", graph6_source, "graph6 file or - for stdin");
    index_cmd->add_option("--index", index_kind, "zeroth | edge")
        ->check(CLI::IsMember({"zeroth", "edge"}));
    index_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // --- recognize ---
    auto* recognize_cmd = app.add_subcommand("recognize", "tree deletion number and witnesses");
    recognize_cmd->add_option("--graph6", graph6_source, "graph6 file or - for stdin");
    recognize_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // --- construct ---
    auto* construct_cmd = app.add_subcommand("construct", "build a named family, print graph6");
    std::string family;
    construct_cmd->add_option("--family", family, "path|star|cycle|complete|empty|bistar|"
                                                  "join_path|join_star|bullet_star|"
                                                  "bullet_bistar|degree23")
        ->required();
    construct_cmd->add_option("--n", n, "order");
    construct_cmd->add_option("--k", k, "quasi vertex / clique count");
    construct_cmd->add_option("--p", p, "bistar p");
    construct_cmd->add_option("--q", q, "bistar q");
    std::string construct_format = "graph6";
    construct_cmd->add_option("--format", construct_format, "graph6 (default) | json | csv")
        ->check(CLI::IsMember({"graph6", "json", "csv"}));

    // --- bound ---
    auto* bound_cmd = app.add_subcommand("bound", "closed-form bound values");
    std::string theorem;
    bound_cmd->add_option("--theorem", theorem, "T1..T6 or a full case id");
    bound_cmd->add_option("--n", n, "order");
    bound_cmd->add_option("--k", k, "quasi vertex count");
    bound_cmd->add_option("--alpha", alphas, "exponent(s); defaults to 1 for T3");
    double f_delta_x = 0.0;
    auto* f_delta_opt = bound_cmd->add_option("--f-delta", f_delta_x, "evaluate x^a-(x+1)^a");
    std::string lemma7_mode;
    int parts = 0, total = 0, min_x2 = 1;
    bound_cmd->add_option("--lemma7", lemma7_mode, "free | constrained")
        ->check(CLI::IsMember({"free", "constrained"}));
    bound_cmd->add_option("--parts", parts, "number of parts");
    bound_cmd->add_option("--total", total, "sum of the parts");
    bound_cmd->add_option("--min-x2", min_x2, "constrained mode lower bound m");
    bound_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "exhaustively check a theorem or Lemma 1");
    verify_cmd->add_option("--theorem", theorem, "T1..T6 or a full case id");
    bool lemma1 = false;
    verify_cmd->add_flag("--lemma1", lemma1, "check the extremal-tree table instead");
    verify_cmd->add_option("--n", n, "order")->required();
    verify_cmd->add_option("--k", k, "quasi vertex count");
    verify_cmd->add_option("--alpha", alphas, "exponent(s); defaults to 1 for T3");
    std::string verify_source;
    verify_cmd->add_option("--graph6", verify_source,
                           "population stream (file or -); default internal enumeration");
    verify_cmd->add_option("--tolerance", tolerance, "relative tolerance");
    verify_cmd->add_option("--jobs", jobs, "worker threads for internal enumeration");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    // --- enumerate ---
    auto* enumerate_cmd = app.add_subcommand("enumerate", "labeled connected graphs or trees");
    std::string enumerate_kind = "connected";
    enumerate_cmd->add_option("--n", n, "order")->required();
    enumerate_cmd->add_option("--kind", enumerate_kind, "connected | trees")
        ->check(CLI::IsMember({"connected", "trees"}));
    bool count_only = false;
    enumerate_cmd->add_flag("--count-only", count_only, "print only the count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*index_cmd) {
            check_alphas(alphas);
            auto graphs = read_graph6(graph6_source);
            auto rows_json = nlohmann::ordered_json::array();
            std::vector<std::vector<std::string>> rows_csv;
            for (const auto& [text, g] : graphs) {
                for (double a : alphas) {
                    double value = index_kind == "edge"
                                       ? qtr::general_randic_edge(g, qtr::Exponent(a))
                                       : qtr::zeroth_order_general_randic(g, qtr::Exponent(a));
                    nlohmann::ordered_json row;
                    row["graph6"] = text;
                    row["n"] = g.order();
                    row["m"] = g.size();
                    row["index"] = index_kind;
                    row["alpha"] = a;
                    row["value"] = value;
                    rows_json.push_back(row);
                    rows_csv.push_back({text, std::to_string(g.order()), std::to_string(g.size()),
                                        index_kind, qtr::detail::format_double(a),
                                        qtr::detail::format_double(value)});
                }
            }
            emit_rows(format, {"graph6", "n", "m", "index", "alpha", "value"}, rows_csv,
                      nlohmann::ordered_json{{"results", rows_json}});
            return kExitOk;
        }

        if (*recognize_cmd) {
            auto graphs = read_graph6(graph6_source);
            auto rows_json = nlohmann::ordered_json::array();
            std::vector<std::vector<std::string>> rows_csv;
            for (const auto& [text, g] : graphs) {
                qtr::QuasiClassification cls = qtr::tree_deletion_number(g);
                nlohmann::ordered_json row;
                row["graph6"] = text;
                row["n"] = g.order();
                row["m"] = g.size();
                row["k"] = cls.k;
                row["is_tree"] = cls.k == 0;
                row["admissible"] = cls.admissible;
                row["witnesses"] = witnesses_to_json(cls.witnesses);
                rows_json.push_back(row);
                rows_csv.push_back({text, std::to_string(g.order()), std::to_string(g.size()),
                                    std::to_string(cls.k), cls.k == 0 ? "true" : "false",
                                    cls.admissible ? "true" : "false",
                                    witnesses_to_text(cls.witnesses)});
            }
            emit_rows(format, {"graph6", "n", "m", "k", "is_tree", "admissible", "witnesses"},
                      rows_csv, nlohmann::ordered_json{{"results", rows_json}});
            return kExitOk;
        }

        if (*construct_cmd) {
            qtr::FamilySpec spec;
            spec.kind = qtr::family_from_name(family);
            spec.n = n;
            spec.k = k;
            spec.p = p;
            spec.q = q;
            if (spec.kind == qtr::FamilyKind::complete || spec.kind == qtr::FamilyKind::empty_graph)
                if (k == 1 && n > 0) spec.k = n;  // allow --n for the one-parameter families
            qtr::Graph g = qtr::construct_family(spec);
            std::string encoded = qtr::graph6_encode(g);
            if (construct_format == "graph6") {
                std::cout << encoded << "\n";
            } else {
                nlohmann::ordered_json row;
                row["family"] = family;
                row["n"] = g.order();
                row["m"] = g.size();
                row["graph6"] = encoded;
                row["degree_multiset"] = qtr::degree_multiset(g).to_string();
                std::vector<std::vector<std::string>> rows_csv{
                    {family, std::to_string(g.order()), std::to_string(g.size()), encoded,
                     qtr::degree_multiset(g).to_string()}};
                emit_rows(construct_format, {"family", "n", "m", "graph6", "degree_multiset"},
                          rows_csv, row);
            }
            return kExitOk;
        }

        if (*bound_cmd) {
            auto rows_json = nlohmann::ordered_json::array();
            std::vector<std::vector<std::string>> rows_csv;
            if (!lemma7_mode.empty()) {
                check_alphas(alphas);
                for (double a : alphas) {
                    qtr::PartitionProblem prob;
                    prob.parts = parts;
                    prob.total = total;
                    prob.alpha = qtr::Exponent(a);
                    if (lemma7_mode == "constrained") prob.min_x2 = min_x2;
                    qtr::Lemma7Result result = qtr::lemma7_extremal(prob);
                    nlohmann::ordered_json row;
                    row["mode"] = lemma7_mode;
                    row["parts"] = parts;
                    row["total"] = total;
                    if (prob.min_x2) row["min_x2"] = *prob.min_x2;
                    row["alpha"] = a;
                    row["optimum_parts"] = result.optimum.parts;
                    row["optimum_value"] = result.optimum.value;
                    if (result.second) {
                        row["second_parts"] = result.second->parts;
                        row["second_value"] = result.second->value;
                    }
                    rows_json.push_back(row);
                }
                emit_rows(format, {}, rows_csv, nlohmann::ordered_json{{"results", rows_json}});
                return kExitOk;
            }
            if (*f_delta_opt) {
                check_alphas(alphas);
                for (double a : alphas) {
                    nlohmann::ordered_json row;
                    row["x"] = f_delta_x;
                    row["alpha"] = a;
                    row["f_delta"] = qtr::f_delta(f_delta_x, qtr::Exponent(a));
                    rows_json.push_back(row);
                    rows_csv.push_back({qtr::detail::format_double(f_delta_x),
                                        qtr::detail::format_double(a),
                                        qtr::detail::format_double(
                                            qtr::f_delta(f_delta_x, qtr::Exponent(a)))});
                }
                emit_rows(format, {"x", "alpha", "f_delta"}, rows_csv,
                          nlohmann::ordered_json{{"results", rows_json}});
                return kExitOk;
            }
            if (theorem.empty())
                throw CLI::ValidationError("--theorem", "bound needs --theorem, --f-delta or --lemma7");
            std::vector<qtr::TheoremId> ids = theorem_ids_from_name(theorem);
            if (alphas.empty()) alphas.push_back(1.0);  // T3
            check_alphas(alphas);
            for (qtr::TheoremId id : ids) {
                for (double a : alphas) {
                    double use_alpha = a;
                    if (id == qtr::TheoremId::T3_min_lin || id == qtr::TheoremId::T3_max_lin)
                        use_alpha = 1.0;
                    qtr::TheoremCase c = qtr::make_case(id, n, k, use_alpha);
                    qtr::BoundResult b = qtr::bound_value(c);
                    nlohmann::ordered_json row;
                    row["theorem"] = qtr::theorem_name(id);
                    row["n"] = n;
                    row["k"] = k;
                    row["alpha"] = use_alpha;
                    row["bound"] = b.value;
                    row["side"] = b.side == qtr::BoundSide::lower ? "lower" : "upper";
                    row["family"] = qtr::extremal_family_name(b.family);
                    rows_json.push_back(row);
                    rows_csv.push_back({qtr::theorem_name(id), std::to_string(n),
                                        std::to_string(k), qtr::detail::format_double(use_alpha),
                                        qtr::detail::format_double(b.value),
                                        b.side == qtr::BoundSide::lower ? "lower" : "upper",
                                        qtr::extremal_family_name(b.family)});
                    if (id == qtr::TheoremId::T3_min_lin || id == qtr::TheoremId::T3_max_lin) break;
                }
            }
            emit_rows(format, {"theorem", "n", "k", "alpha", "bound", "side", "family"}, rows_csv,
                      nlohmann::ordered_json{{"results", rows_json}});
            return kExitOk;
        }

        if (*verify_cmd) {
            bool all_passed = true;
            if (lemma1) {
                if (alphas.empty())
                    throw CLI::ValidationError("--alpha", "verify --lemma1 needs --alpha");
                check_alphas(alphas);
                auto rows_json = nlohmann::ordered_json::array();
                std::vector<std::string> csv_chunks;
                for (double a : alphas) {
                    qtr::Lemma1Report report = qtr::verify_lemma1(n, qtr::Exponent(a), tolerance);
                    all_passed = all_passed && report.passed;
                    rows_json.push_back(qtr::to_json(report));
                    csv_chunks.push_back(qtr::to_csv_rows(report));
                }
                if (format == "csv") {
                    std::cout << qtr::lemma1_csv_header() << "\n";
                    for (const auto& chunk : csv_chunks) std::cout << chunk << "\n";
                } else {
                    std::cout << nlohmann::ordered_json{{"reports", rows_json}}.dump(2) << "\n";
                }
                return all_passed ? kExitOk : kExitVerifyFailed;
            }

            if (theorem.empty())
                throw CLI::ValidationError("--theorem", "verify needs --theorem or --lemma1");
            std::vector<qtr::TheoremId> ids = theorem_ids_from_name(theorem);
            if (alphas.empty()) alphas.push_back(1.0);
            check_alphas(alphas);

            std::optional<qtr::PopulationSurvey> survey;
            if (!verify_source.empty()) {
                auto graphs = read_graph6(verify_source);
                std::vector<qtr::Graph> population;
                population.reserve(graphs.size());
                for (auto& [text, g] : graphs) population.push_back(g);
                survey = qtr::survey_stream(population, n, k);
            } else {
                survey = qtr::survey_population(n, k, jobs);
            }

            auto rows_json = nlohmann::ordered_json::array();
            std::vector<std::string> csv_rows;
            for (qtr::TheoremId id : ids) {
                for (double a : alphas) {
                    double use_alpha = a;
                    if (id == qtr::TheoremId::T3_min_lin || id == qtr::TheoremId::T3_max_lin)
                        use_alpha = 1.0;
                    qtr::TheoremCase c = qtr::make_case(id, n, k, use_alpha);
                    qtr::VerificationReport report = qtr::verify_theorem(c, *survey, tolerance);
                    all_passed = all_passed && report.passed;
                    rows_json.push_back(qtr::to_json(report));
                    csv_rows.push_back(qtr::to_csv_row(report));
                    if (id == qtr::TheoremId::T3_min_lin || id == qtr::TheoremId::T3_max_lin) break;
                }
            }
            if (format == "csv") {
                std::cout << qtr::verification_csv_header() << "\n";
                for (const auto& row : csv_rows) std::cout << row << "\n";
            } else {
                std::cout << nlohmann::ordered_json{{"reports", rows_json}}.dump(2) << "\n";
            }
            return all_passed ? kExitOk : kExitVerifyFailed;
        }

        if (*enumerate_cmd) {
            long long count = 0;
            if (enumerate_kind == "trees") {
                count = qtr::enumerate_labeled_trees(n, [&](const qtr::Graph& g) {
                    if (!count_only) std::cout << qtr::graph6_encode(g) << "\n";
                });
            } else {
                count = qtr::enumerate_connected_graphs(n, [&](const qtr::Graph& g) {
                    if (!count_only) std::cout << qtr::graph6_encode(g) << "\n";
                });
            }
            if (count_only) std::cout << count << "\n";
            return kExitOk;
        }
    } catch (const ParseExit& e) {
        return e.code;
    } catch (const qtr::Graph6ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
