#include "lapctrl/cli.hpp"

#include "lapctrl/cotree.hpp"
#include "lapctrl/errors.hpp"
#include "lapctrl/graph.hpp"
#include "lapctrl/oracle.hpp"
#include "lapctrl/threshold.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

namespace lapctrl::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json big_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();  // decimal string when it would not survive as a number
}

ordered_json matrix_to_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(big_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json vector_to_json(const std::vector<BigInt>& v) {
    ordered_json arr = ordered_json::array();
    for (const BigInt& x : v) arr.push_back(big_to_json(x));
    return arr;
}

ordered_json verdict_to_json(const oracle::Verdict& v) {
    ordered_json j;
    j["controllable"] = v.controllable;
    j["witness_lambda"] = v.controllable ? ordered_json() : ordered_json(v.witness_lambda);
    j["witness_vector"] = v.controllable ? ordered_json() : vector_to_json(v.witness);
    return j;
}

void print_verdict(std::ostream& out, const char* name, const oracle::Verdict& v) {
    out << name << ": ";
    if (v.controllable) {
        out << "controllable\n";
        return;
    }
    out << "NOT controllable (lambda " << v.witness_lambda << ", witness";
    for (const BigInt& x : v.witness) out << ' ' << x;
    out << ")\n";
}

template <typename T>
void print_list(std::ostream& out, const char* name, const std::vector<T>& xs) {
    out << name << ':';
    for (const T& x : xs) out << ' ' << x;
    out << '\n';
}

struct CommonOpts {
    bool json = false;
    std::string out_path;
    std::string dot_path;
};

// One invocation's collected output plus the process exit code.
struct Outcome {
    ordered_json report;
    std::string text;
    int code = kExitOk;
};

std::string load_input(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_sequence(const std::string& s) {
    bool any = false;
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch != '0' && ch != '1') return false;
        any = true;
    }
    return any;
}

std::map<int, int> parse_exclusions(const std::vector<std::string>& specs) {
    std::map<int, int> choice;
    for (const std::string& entry : specs) {
        const auto eq = entry.find('=');
        std::size_t used_cell = 0, used_node = 0;
        int cell = 0, node = 0;
        try {
            cell = std::stoi(entry.substr(0, eq), &used_cell);
            node = std::stoi(entry.substr(eq + 1), &used_node);
        } catch (const std::exception&) {
            throw std::invalid_argument("--exclude expects cell=node, got: " + entry);
        }
        if (eq == std::string::npos || used_cell != eq || used_node != entry.size() - eq - 1)
            throw std::invalid_argument("--exclude expects cell=node, got: " + entry);
        if (!choice.emplace(cell, node).second)
            throw std::invalid_argument("--exclude names cell " + std::to_string(cell) + " twice");
    }
    return choice;
}

std::vector<int> parse_spectrum_list(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("--spectrum expects comma-separated integers, got: " + item);
        }
    }
    if (out.empty()) throw std::invalid_argument("--spectrum is empty");
    return out;
}

void maybe_write_dot(const std::string& path, const Graph& g) {
    if (path.empty()) return;
    std::ofstream dot(path);
    if (!dot) throw std::invalid_argument("cannot open file: " + path);
    write_dot(dot, g);
}

Outcome run_threshold(const std::string& seq_arg, const std::string& action,
                      const std::vector<std::string>& exclude_specs, const CommonOpts& opts) {
    const auto seq = threshold::parse_sequence(seq_arg);
    const int n = seq.size();
    Outcome res;
    std::ostringstream text;

    res.report["seq"] = seq_arg;
    res.report["n"] = n;
    text << "sequence: " << seq_arg << "\nn: " << n << '\n';

    const std::vector<int> degrees = threshold::degrees_from_sequence(seq);
    maybe_write_dot(opts.dot_path, build_graph(seq));

    if (action == "degrees" || action == "cells" || action == "controls" || action == "verify") {
        res.report["degrees"] = degrees;
        print_list(text, "degrees", degrees);
    }
    if (action == "cells" || action == "controls" || action == "verify") {
        const auto cells = threshold::degree_cells(seq);
        res.report["cells"] = cells.cells;
        text << "cells (ascending degree):";
        for (const auto& cell : cells.cells) {
            text << " {";
            for (std::size_t i = 0; i < cell.size(); ++i) text << (i ? " " : "") << cell[i];
            text << '}';
        }
        text << '\n';
    }
    if (action == "spectrum" || action == "modal" || action == "verify") {
        const auto spectrum = threshold::spectrum_conjugate(degree_sequence(degrees));
        res.report["spectrum"] = spectrum;
        print_list(text, "spectrum", spectrum);
    }
    if (action == "modal" || action == "verify") {
        const auto eigen = threshold::modal_matrix(seq);
        res.report["modal"] = matrix_to_json(eigen.modal);
        text << "modal:\n";
        pretty_print(text, eigen.modal);
    }
    if (action == "controls" || action == "verify") {
        const auto sel = threshold::select_controls(seq, parse_exclusions(exclude_specs));
        const IntMatrix L = laplacian(build_graph(seq));
        const auto spectrum = threshold::spectrum_conjugate(degree_sequence(degrees));

        res.report["excluded"] = sel.excluded;
        res.report["controls"] = sel.controls;
        res.report["B"] = matrix_to_json(sel.input);
        res.report["laplacian"] = matrix_to_json(L);
        if (!sel.warning.empty()) res.report["warning"] = sel.warning;

        print_list(text, "excluded (one per cell)", sel.excluded);
        print_list(text, "controls", sel.controls);
        text << "B:\n";
        pretty_print(text, sel.input);
        if (!sel.warning.empty()) text << "warning: " << sel.warning << '\n';

        ordered_json verdicts;
        const auto pbh = oracle::pbh_controllable(L, sel.input, spectrum);
        verdicts["pbh"] = verdict_to_json(pbh);
        print_verdict(text, "pbh", pbh);
        bool ok = pbh.controllable;
        if (action == "verify") {
            const auto eigvec =
                oracle::eigvec_test(L, threshold::eigen_groups(threshold::modal_matrix(seq)),
                                    sel.input);
            const bool kalman = oracle::kalman_controllable(L, sel.input);
            verdicts["eigvec"] = verdict_to_json(eigvec);
            verdicts["kalman"] = kalman;
            print_verdict(text, "eigvec", eigvec);
            text << "kalman: " << (kalman ? "controllable" : "NOT controllable") << '\n';
            ok = ok && eigvec.controllable && kalman;
        }
        res.report["verdicts"] = std::move(verdicts);
        res.code = ok ? kExitOk : kExitNotControllable;
    }

    res.text = text.str();
    return res;
}

Outcome run_cograph(const std::string& raw_arg, const std::string& action,
                    const CommonOpts& opts) {
    const std::string expr = load_input(raw_arg);
    const auto tree = cograph::parse_cotree(expr);
    Outcome res;
    std::ostringstream text;

    res.report["expr"] = expr;
    res.report["n"] = tree.leaf_count();
    text << "expression: " << expr << "\nn: " << tree.leaf_count() << '\n';

    const Graph g = cotree_to_graph(tree);
    maybe_write_dot(opts.dot_path, g);

    if (action == "graph") {
        ordered_json edges = ordered_json::array();
        for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
        res.report["edges"] = std::move(edges);
        std::ostringstream body;
        write_edge_list(body, g);
        text << body.str();
    }

    if (action != "graph") {
        const auto eigen = cograph::eigen_decomposition(tree);
        std::vector<int> spectrum;
        for (const auto& grp : eigen.groups)
            spectrum.insert(spectrum.end(), static_cast<std::size_t>(grp.basis.cols()),
                            grp.eigenvalue);
        res.report["spectrum"] = spectrum;
        print_list(text, "spectrum", spectrum);

        if (action == "modal" || action == "verify") {
            ordered_json groups = ordered_json::array();
            IntMatrix modal(eigen.n, 0);
            for (const auto& grp : eigen.groups) {
                ordered_json gj;
                gj["lambda"] = grp.eigenvalue;
                gj["multiplicity"] = grp.basis.cols();
                gj["basis"] = matrix_to_json(grp.basis);
                groups.push_back(std::move(gj));
                modal = hcat(modal, grp.basis);
            }
            res.report["groups"] = std::move(groups);
            res.report["modal"] = matrix_to_json(modal);
            text << "groups:\n";
            for (const auto& grp : eigen.groups) {
                text << "  lambda " << grp.eigenvalue << " (multiplicity " << grp.basis.cols()
                     << "):\n";
                pretty_print(text, grp.basis, "    ");
            }
        }

        if (action == "input-matrix" || action == "verify") {
            const auto input = cograph::minimal_input_matrix(tree);
            const IntMatrix L = laplacian(g);
            res.report["B"] = matrix_to_json(input.matrix);
            res.report["column_sources"] = input.column_sources;
            res.report["laplacian"] = matrix_to_json(L);
            text << "B (" << input.matrix.cols() << " columns, the maximum eigenvalue multiplicity):\n";
            pretty_print(text, input.matrix);

            std::vector<int> distinct;
            for (const auto& grp : eigen.groups) distinct.push_back(grp.eigenvalue);
            ordered_json verdicts;
            const auto pbh = oracle::pbh_controllable(L, input.matrix, distinct);
            verdicts["pbh"] = verdict_to_json(pbh);
            print_verdict(text, "pbh", pbh);
            bool ok = pbh.controllable;
            if (action == "verify") {
                const auto eigvec = oracle::eigvec_test(L, eigen.groups, input.matrix);
                const bool kalman = oracle::kalman_controllable(L, input.matrix);
                verdicts["eigvec"] = verdict_to_json(eigvec);
                verdicts["kalman"] = kalman;
                print_verdict(text, "eigvec", eigvec);
                text << "kalman: " << (kalman ? "controllable" : "NOT controllable") << '\n';
                ok = ok && eigvec.controllable && kalman;
            }
            res.report["verdicts"] = std::move(verdicts);
            res.code = ok ? kExitOk : kExitNotControllable;
        }
    }

    res.text = text.str();
    return res;
}

Outcome run_check(const std::string& lap_path, const std::string& input_path,
                  const std::string& spectrum_csv) {
    std::ifstream lap_file(lap_path);
    if (!lap_file) throw std::invalid_argument("cannot open file: " + lap_path);
    const IntMatrix L = read_matrix_text(lap_file);
    std::ifstream input_file(input_path);
    if (!input_file) throw std::invalid_argument("cannot open file: " + input_path);
    const IntMatrix B = read_matrix_text(input_file);

    if (L.rows() != L.cols()) throw std::invalid_argument("laplacian matrix must be square");
    for (int i = 0; i < L.rows(); ++i)
        for (int j = i + 1; j < L.cols(); ++j)
            if (L(i, j) != L(j, i)) throw std::invalid_argument("laplacian matrix must be symmetric");
    if (B.rows() != L.rows())
        throw std::invalid_argument("input matrix row count must match the laplacian");

    const std::vector<int> spectrum = parse_spectrum_list(spectrum_csv);

    Outcome res;
    res.report["n"] = L.rows();
    res.report["spectrum"] = spectrum;
    const auto pbh = oracle::pbh_controllable(L, B, spectrum);
    const bool kalman = oracle::kalman_controllable(L, B);
    res.report["verdicts"]["pbh"] = verdict_to_json(pbh);
    res.report["verdicts"]["kalman"] = kalman;
    res.report["controllable"] = pbh.controllable && kalman;

    std::ostringstream text;
    text << "n: " << L.rows() << '\n';
    print_list(text, "spectrum", spectrum);
    print_verdict(text, "pbh", pbh);
    text << "kalman: " << (kalman ? "controllable" : "NOT controllable") << '\n';
    res.text = text.str();
    res.code = (pbh.controllable && kalman) ? kExitOk : kExitNotControllable;
    return res;
}

Outcome run_min_controls(const std::string& raw_arg, int limit) {
    const std::string input = load_input(raw_arg);
    Graph g(0);
    if (looks_like_sequence(input))
        g = build_graph(threshold::parse_sequence(input));
    else
        g = cotree_to_graph(cograph::parse_cotree(input));

    const int n = g.node_count();
    if (limit <= 0) limit = n;

    Outcome res;
    res.report["input"] = input;
    res.report["n"] = n;
    res.report["limit"] = limit;
    std::ostringstream text;
    text << "n: " << n << "\nlimit: " << limit << '\n';

    const auto found = oracle::min_controls_bruteforce(g, limit);
    res.report["found"] = found.has_value();
    res.report["oracle"] = "kalman";
    if (found) {
        res.report["size"] = found->size;
        res.report["controls"] = found->nodes;
        text << "minimum controllable set: size " << found->size << ", nodes";
        for (int node : found->nodes) text << ' ' << node;
        text << '\n';
        res.code = kExitOk;
    } else {
        text << "no controllable node subset of size <= " << limit << '\n';
        res.code = kExitNotControllable;
    }
    res.text = text.str();
    return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Laplacian controllability analysis of threshold graphs and cographs"};
    app.name("lapctrl");
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_flag("--json", opts.json, "emit a machine-readable JSON report");
    app.add_option("--out", opts.out_path, "write the report to a file instead of stdout");

    std::string seq_arg, th_action;
    std::vector<std::string> exclude_specs;
    auto* th = app.add_subcommand("threshold", "analyze a threshold-graph construction sequence");
    th->fallthrough();
    th->add_option("seq", seq_arg, "binary construction sequence, e.g. 0101001")->required();
    th->add_option("action", th_action, "what to compute")
        ->required()
        ->check(CLI::IsMember({"degrees", "cells", "spectrum", "modal", "controls", "verify"}));
    th->add_option("--exclude", exclude_specs,
                   "cell=node: per-cell excluded representative (repeatable)");
    th->add_option("--dot", opts.dot_path, "also write the graph in DOT format to this file");

    std::string expr_arg, cg_action;
    auto* cg = app.add_subcommand("cograph", "analyze a cotree expression");
    cg->fallthrough();
    cg->add_option("expr", expr_arg, "cotree expression like \"(J x (U x x))\", or @file")
        ->required();
    cg->add_option("action", cg_action, "what to compute")
        ->required()
        ->check(CLI::IsMember({"graph", "spectrum", "modal", "input-matrix", "verify"}));
    cg->add_option("--dot", opts.dot_path, "also write the graph in DOT format to this file");

    std::string lap_path, input_path, spectrum_csv;
    auto* ck = app.add_subcommand("check", "raw controllability oracle on matrix files");
    ck->fallthrough();
    ck->add_option("--laplacian", lap_path, "laplacian matrix file (text format)")->required();
    ck->add_option("--input", input_path, "input matrix file (text format)")->required();
    ck->add_option("--spectrum", spectrum_csv, "comma-separated exact eigenvalues of the laplacian")
        ->required();

    std::string mc_arg;
    int mc_limit = 0;
    auto* mc = app.add_subcommand("min-controls",
                                  "brute-force smallest controllable node set (n <= 12)");
    mc->fallthrough();
    mc->add_option("input", mc_arg, "construction sequence or cotree expression (or @file)")
        ->required();
    mc->add_option("--limit", mc_limit, "largest subset size to try (default: n)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    Outcome outcome;
    try {
        if (app.got_subcommand(th))
            outcome = run_threshold(seq_arg, th_action, exclude_specs, opts);
        else if (app.got_subcommand(cg))
            outcome = run_cograph(expr_arg, cg_action, opts);
        else if (app.got_subcommand(ck))
            outcome = run_check(lap_path, input_path, spectrum_csv);
        else
            outcome = run_min_controls(mc_arg, mc_limit);
    } catch (const too_large& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuardExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    ordered_json full;
    full["command"] = args;
    for (auto& [key, value] : outcome.report.items()) full[key] = value;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opts.out_path.empty()) {
        file.open(opts.out_path);
        if (!file) {
            err << "error: cannot open file: " << opts.out_path << '\n';
            return kExitInputError;
        }
        sink = &file;
    }
    if (opts.json)
        *sink << full.dump(2) << '\n';
    else
        *sink << outcome.text;
    return outcome.code;
}

}  // namespace lapctrl::cli
