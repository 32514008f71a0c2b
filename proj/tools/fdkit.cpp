// fdkit command line: finite difference weights on arbitrary grids, spectral
// differentiation matrices, order-of-accuracy analysis, and extended-precision
// error maps. Data goes to stdout, diagnostics to stderr. Exit codes:
// 0 success, 2 parse failure, 3 duplicate grid points, 4 domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdkit/fornberg.hpp"
#include "fdkit/numkernel.hpp"
#include "fdkit/oracle.hpp"
#include "fdkit/spectral.hpp"
#include "fdkit/superconv.hpp"
#include "fdkit/types.hpp"
#include "fdkit/weights_mlagrange.hpp"
#include "fdkit/weights_partial.hpp"

namespace {

using nlohmann::json;

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    std::string source;
    fdkit::RootOrdering ordering = fdkit::RootOrdering::natural;
    bool is_chebyshev = false;  // set after resolve()
    std::size_t chebyshev_n = 0;

    fdkit::Grid resolve();
};

double parse_number(const std::string& token) {
    const auto slash = token.find('/', 1);  // keep a leading sign out of it
    if (slash != std::string::npos) {
        const std::string den_text = token.substr(slash + 1);
        if (den_text.find('/') != std::string::npos)
            throw ParseFailure("cannot parse number '" + token + "'");
        const double num = parse_number(token.substr(0, slash));
        const double den = parse_number(den_text);
        if (den == 0.0) throw ParseFailure("rational literal '" + token +
                                           "' has zero denominator");
        return num / den;
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw ParseFailure("cannot parse number '" + token + "'");
    }
    if (used != token.size())
        throw ParseFailure("cannot parse number '" + token + "'");
    return value;
}

std::string trimmed(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_inline_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        token = trimmed(token);
        if (token.empty())
            throw ParseFailure("empty entry in grid list '" + text + "'");
        values.push_back(parse_number(token));
    }
    if (values.empty()) throw ParseFailure("empty grid");
    return values;
}

std::vector<double> read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open grid file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = trimmed(buffer.str());
    if (text.empty()) throw ParseFailure("grid file '" + path + "' is empty");
    if (text.front() == '[') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw ParseFailure("grid file '" + path +
                               "' is not a JSON array of numbers");
        std::vector<double> values;
        for (const auto& item : j) {
            if (!item.is_number())
                throw ParseFailure("grid file '" + path +
                                   "' contains a non-number");
            values.push_back(item.get<double>());
        }
        return values;
    }
    std::vector<double> values;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        line = trimmed(line);
        if (line.empty()) continue;
        values.push_back(parse_number(line));
    }
    if (values.empty()) throw ParseFailure("grid file '" + path + "' is empty");
    return values;
}

fdkit::Grid GridSpec::resolve() {
    if (source.rfind("chebyshev:", 0) == 0) {
        const std::string arg = source.substr(10);
        std::size_t used = 0;
        long n = 0;
        try {
            n = std::stol(arg, &used);
        } catch (const std::exception&) {
            throw ParseFailure("bad chebyshev size '" + arg + "'");
        }
        if (used != arg.size() || n < 0)
            throw ParseFailure("bad chebyshev size '" + arg + "'");
        is_chebyshev = true;
        chebyshev_n = static_cast<std::size_t>(n);
        return fdkit::chebyshev_grid(chebyshev_n, ordering);
    }

    std::vector<double> values;
    if (source.find(',') != std::string::npos) {
        values = parse_inline_list(source);
    } else {
        // A single token is an inline one-point grid when it parses as a
        // number, otherwise a file path.
        try {
            values.push_back(parse_number(trimmed(source)));
        } catch (const ParseFailure&) {
            values = read_grid_file(source);
        }
    }

    if (ordering != fdkit::RootOrdering::natural) {
        std::vector<std::size_t> perm =
            ordering == fdkit::RootOrdering::bit_reversed
                ? fdkit::order_bit_reversed(std::span<const double>(values)).perm
                : fdkit::order_leja(std::span<const double>(values));
        std::vector<double> reordered(values.size());
        for (std::size_t i = 0; i < values.size(); ++i)
            reordered[i] = values[perm[i]];
        values = std::move(reordered);
    }
    return fdkit::Grid(std::move(values));
}

fdkit::WeightAlgorithm parse_algorithm(const std::string& name) {
    try {
        return fdkit::algorithm_from_name(name);
    } catch (const fdkit::ArgumentError& e) {
        throw ParseFailure(e.what());
    }
}

fdkit::RootOrdering ordering_from_name(const std::string& name) {
    if (name == "natural") return fdkit::RootOrdering::natural;
    if (name == "bit_reversed") return fdkit::RootOrdering::bit_reversed;
    if (name == "leja") return fdkit::RootOrdering::leja;
    throw ParseFailure("unknown ordering '" + name + "'");
}

fdkit::WeightTable compute_weights(const fdkit::Grid& grid, std::size_t order,
                                   double center, fdkit::WeightAlgorithm alg) {
    switch (alg) {
        case fdkit::WeightAlgorithm::mlagrange:
            return fdkit::mlagrange::all_weights(grid, order, center);
        case fdkit::WeightAlgorithm::fornberg:
            return fdkit::fornberg_weights(grid, order, center);
        case fdkit::WeightAlgorithm::partial:
            break;
    }
    fdkit::FdWeights fd(grid, order);
    if (center != 0.0) fd.set_center(center);
    return fd.table();
}

json weights_json(const fdkit::Grid& grid, const fdkit::WeightTable& table,
                  const std::string& algorithm) {
    json w = json::array();
    for (std::size_t k = 0; k < table.size(); ++k) {
        json node = json::array();
        for (std::size_t m = 0; m <= table.order(); ++m)
            node.push_back(table(k, m));
        w.push_back(std::move(node));
    }
    return {{"grid", grid.points()},
            {"m", table.order()},
            {"center", table.center()},
            {"algorithm", algorithm},
            {"weights", std::move(w)}};
}

void write_weights_csv(std::ostream& out, const fdkit::Grid& grid,
                       const fdkit::WeightTable& table) {
    out << "k,z";
    for (std::size_t m = 0; m <= table.order(); ++m) out << ",w" << m;
    out << '\n';
    for (std::size_t k = 0; k < table.size(); ++k) {
        out << k << ',' << fdkit::to_shortest(grid[k]);
        for (std::size_t m = 0; m <= table.order(); ++m)
            out << ',' << fdkit::to_shortest(table(k, m));
        out << '\n';
    }
}

int env_oracle_digits() {
    if (const char* env = std::getenv("FDKIT_ORACLE_DIGITS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring bad FDKIT_ORACLE_DIGITS='" << env
                      << "'\n";
        }
    }
    return fdkit::oracle::kDefaultDigits;
}

struct Options {
    GridSpec grid;
    bool m_given = false;
    std::string ordering = "natural";
    std::string algorithm = "partial";
    std::string format = "json";
    std::string out_path;
    std::string weights_file;
    std::size_t m = 1;
    double center = 0.0;
    double tau = fdkit::kDefaultBoostTol;
    int digits = 0;
};

int run_weights(Options& opt) {
    const fdkit::Grid grid = opt.grid.resolve();
    const auto alg = parse_algorithm(opt.algorithm);
    const fdkit::WeightTable table =
        compute_weights(grid, opt.m, opt.center, alg);
    if (opt.format == "csv")
        write_weights_csv(std::cout, grid, table);
    else
        std::cout << weights_json(grid, table, opt.algorithm).dump(2) << '\n';
    return 0;
}

int run_diffmat(Options& opt) {
    const fdkit::Grid grid = opt.grid.resolve();
    const auto alg = parse_algorithm(opt.algorithm);

    fdkit::DiffMatrix mat;
    if (opt.grid.is_chebyshev &&
        opt.grid.ordering == fdkit::RootOrdering::natural) {
        // Chebyshev construction: reorder + dilate internally, report in
        // natural node order.
        mat = fdkit::chebyshev_diff_matrix(opt.grid.chebyshev_n, opt.m, alg);
    } else {
        mat = fdkit::diff_matrix(grid, opt.m, alg);
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) throw ParseFailure("cannot write '" + opt.out_path + "'");
        out = &file;
    }
    if (opt.format == "csv")
        mat.write_csv(*out);
    else
        *out << mat.to_json().dump(2) << '\n';
    return 0;
}

int run_analyze(Options& opt) {
    fdkit::Grid grid;
    fdkit::WeightTable table;
    if (!opt.weights_file.empty()) {
        std::ifstream in(opt.weights_file);
        if (!in)
            throw ParseFailure("cannot open '" + opt.weights_file + "'");
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded())
            throw ParseFailure("'" + opt.weights_file + "' is not JSON");
        try {
            grid = fdkit::Grid(j.at("grid").get<std::vector<double>>());
            const auto order = j.at("m").get<std::size_t>();
            const auto center = j.at("center").get<double>();
            const auto w = j.at("weights")
                               .get<std::vector<std::vector<double>>>();
            if (w.size() != grid.size())
                throw ParseFailure("weights file: node count mismatch");
            table = fdkit::WeightTable(grid.size(), order, center);
            for (std::size_t k = 0; k < w.size(); ++k) {
                if (w[k].size() != order + 1)
                    throw ParseFailure("weights file: order count mismatch");
                for (std::size_t m = 0; m <= order; ++m) table(k, m) = w[k][m];
            }
            if (!opt.m_given)
                opt.m = order;
            else if (opt.m > order)
                throw ParseFailure("weights file only spans orders 0.." +
                                   std::to_string(order));
        } catch (const json::exception& e) {
            throw ParseFailure(std::string("weights file: ") + e.what());
        }
    } else {
        grid = opt.grid.resolve();
        const auto alg = parse_algorithm(opt.algorithm);
        table = compute_weights(grid, opt.m, 0.0, alg);
    }
    const fdkit::AccuracyReport report =
        fdkit::analyze(grid, opt.m, table, opt.tau);
    std::cout << report.to_json().dump(2) << '\n';
    return 0;
}

int run_compare(Options& opt) {
    const fdkit::Grid grid = opt.grid.resolve();
    const int digits = opt.digits > 0 ? opt.digits : env_oracle_digits();
    if (grid.size() == 0 || opt.m > grid.size() - 1)
        throw fdkit::ArgumentError("compare: need 0 <= M <= N-1");

    const fdkit::oracle::BigDiffMatrix reference =
        fdkit::oracle::exact_diff_matrix(grid, opt.m, digits);

    const fdkit::WeightAlgorithm algs[] = {fdkit::WeightAlgorithm::partial,
                                           fdkit::WeightAlgorithm::mlagrange,
                                           fdkit::WeightAlgorithm::fornberg};
    std::vector<fdkit::oracle::DigitsLostReport> reports;
    for (const auto alg : algs) {
        const fdkit::DiffMatrix mat =
            opt.grid.is_chebyshev &&
                    opt.grid.ordering == fdkit::RootOrdering::natural
                ? fdkit::chebyshev_diff_matrix(opt.grid.chebyshev_n, opt.m, alg)
                : fdkit::diff_matrix(grid, opt.m, alg);
        reports.push_back(fdkit::oracle::digits_lost(mat, reference));
    }

    for (std::size_t a = 0; a < 3; ++a)
        std::cout << "# " << fdkit::algorithm_name(algs[a])
                  << ": max digits lost = " << reports[a].max_digits_lost
                  << " (max rel = " << fdkit::to_shortest(reports[a].max_rel)
                  << ", oracle digits = " << digits << ")\n";
    std::cout << "algorithm,i,j,rel_error,digits_lost\n";
    for (std::size_t a = 0; a < 3; ++a)
        for (const auto& e : reports[a].entries)
            std::cout << fdkit::algorithm_name(algs[a]) << ',' << e.row << ','
                      << e.col << ',' << fdkit::to_shortest(e.rel) << ','
                      << fdkit::to_shortest(e.digits_lost) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"finite difference weights, spectral differentiation "
                 "matrices, and superconvergence analysis"};
    app.require_subcommand(1);

    Options opt;
    const std::string grid_help =
        "grid: comma list (rationals like -2/3 allowed), file path "
        "(numbers per line or JSON array), or chebyshev:N";

    auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--grid", opt.grid.source, grid_help)->required();
        cmd->add_option("--ordering", opt.ordering,
                        "node ordering: natural|bit_reversed|leja");
    };

    CLI::App* weights = app.add_subcommand(
        "weights", "finite difference weights for one grid and center");
    add_grid(weights);
    weights->add_option("--m", opt.m, "highest derivative order")->required();
    weights->add_option("--center", opt.center, "expansion point");
    weights->add_option("--algorithm", opt.algorithm,
                        "partial|mlagrange|fornberg");
    weights->add_option("--format", opt.format, "json|csv");

    CLI::App* diffmat = app.add_subcommand(
        "diffmat", "spectral differentiation matrix of one order");
    add_grid(diffmat);
    diffmat->add_option("--order", opt.m, "derivative order")->required();
    diffmat->add_option("--algorithm", opt.algorithm,
                        "partial|mlagrange|fornberg");
    diffmat->add_option("--out", opt.out_path, "output file (default stdout)");
    diffmat->add_option("--format", opt.format, "json|csv");

    CLI::App* analyze = app.add_subcommand(
        "analyze", "order of accuracy, boost, and error constant");
    analyze->add_option("--grid", opt.grid.source, grid_help);
    analyze->add_option("--ordering", opt.ordering,
                        "node ordering: natural|bit_reversed|leja");
    CLI::Option* analyze_m =
        analyze->add_option("--m", opt.m, "derivative order");
    analyze->add_option("--tau", opt.tau, "relative tolerance for S_p == 0");
    analyze->add_option("--algorithm", opt.algorithm,
                        "partial|mlagrange|fornberg");
    analyze->add_option("--weights-file", opt.weights_file,
                        "re-ingest a stencil produced by `weights`");

    CLI::App* compare = app.add_subcommand(
        "compare", "error map of all three algorithms against the "
                   "extended-precision reference");
    add_grid(compare);
    compare->add_option("--M", opt.m, "derivative order")->required();
    compare->add_option("--digits", opt.digits,
                        "oracle precision (default FDKIT_ORACLE_DIGITS or 50)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        opt.m_given = analyze_m->count() > 0;
        opt.grid.ordering = ordering_from_name(opt.ordering);
        if (weights->parsed()) return run_weights(opt);
        if (diffmat->parsed()) return run_diffmat(opt);
        if (analyze->parsed()) {
            if (opt.weights_file.empty() && opt.grid.source.empty())
                throw ParseFailure("analyze needs --grid or --weights-file");
            return run_analyze(opt);
        }
        if (compare->parsed()) return run_compare(opt);
        return 2;
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const fdkit::DuplicateGridPointError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const fdkit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
}
