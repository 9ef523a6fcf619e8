// Command-line front end.
//
// Exit codes:
//   0  claim verified / vertex / feasible
//   1  usage, parse or dimension error
//   2  an asserted inequality failed, or vertex methods disagree
//   3  size cap or work budget exceeded
//   4  check-vertex: feasible but not a vertex
//   5  check-vertex: not line-stochastic
//   6  membership: not in the convex hull of the generators
//   7  decompose: matrix is not doubly stochastic

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stochpoly/serialize.hpp"

namespace {

using namespace stochpoly;

enum Exit : int {
    kOk = 0,
    kUsage = 1,
    kViolation = 2,
    kCap = 3,
    kNotVertex = 4,
    kInfeasible = 5,
    kNotInHull = 6,
    kNotDoublyStochastic = 7,
};

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    return Json::parse(in);
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

// Long integers are abbreviated in tables; JSON always carries every digit.
std::string abbreviate(const std::string& digits)
{
    constexpr std::size_t kShown = 24;
    if (digits.size() <= 2 * kShown + 8) {
        return digits;
    }
    return digits.substr(0, kShown) + "..." + digits.substr(digits.size() - kShown) + " (" +
           std::to_string(digits.size()) + " chars)";
}

void print_table(const BoundReport& r)
{
    std::cout << "n = " << r.n << '\n';
    auto row = [](const std::string& name, const std::string& value) {
        std::cout << "  " << std::left << std::setw(30) << name << abbreviate(value) << '\n';
    };
    row("lower (n!)^(2n)/n^(n^2)", to_string(r.lower_formula));
    row("L(n)", r.latin_count ? to_string(*r.latin_count) : "-");
    row("cpz", to_string(r.cpz));
    row("lzz", to_string(r.lzz));
    row("C(n^3, 3n^2-3n+1)", to_string(r.middle));
    row("zz_opt", to_string(r.zz_opt));
    row("zz_half", to_string(r.zz_half));
    std::string order;
    for (std::size_t i = 0; i < r.ordering.size(); ++i) {
        order += r.ordering[i].id;
        if (i + 1 < r.ordering.size()) {
            order += r.ordering[i].strict_before_next ? " < " : " = ";
        }
    }
    row("observed order", order);
    row("cpz <= lzz", r.cpz_before_lzz ? "yes" : "no");
    for (const auto& c : r.checks) {
        row(c.name, c.holds ? "holds" : "FAILS");
    }
}

int cmd_bounds(int n, int sweep_max, const std::string& format)
{
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    const BoundReport report = n >= 2 ? verify_chain(n) : bound_report(n);
    bool ok = report.all_hold();
    Json sweep = Json::array();
    if (sweep_max > 0) {
        for (int m = 2; m <= sweep_max; ++m) {
            const BoundReport r = verify_chain(m);
            Json failed = Json::array();
            for (const auto& c : r.checks) {
                if (!c.holds) {
                    failed.push_back(c.name);
                }
            }
            ok = ok && r.all_hold();
            sweep.push_back(Json{{"n", m}, {"all_hold", r.all_hold()}, {"failed", std::move(failed)}});
        }
    }
    if (format == "json") {
        Json out{{"report", to_json(report)}};
        if (sweep_max > 0) {
            out["sweep"] = std::move(sweep);
        }
        out["all_hold"] = ok;
        print_json(out);
    } else {
        print_table(report);
        if (sweep_max > 0) {
            std::size_t failures = 0;
            for (const auto& entry : sweep) {
                failures += entry["all_hold"].get<bool>() ? 0 : 1;
            }
            std::cout << "sweep n = 2.." << sweep_max << ": " << (failures == 0 ? "all relations hold" : "FAILURES")
                      << " (" << failures << " failing n)\n";
        }
    }
    return ok ? kOk : kViolation;
}

int cmd_vertices(int n, const std::string& method, bool summary_only)
{
    if (method == "dd") {
        print_json(to_json(enumerate_vertices_dd(n), !summary_only));
        return kOk;
    }
    if (method == "brute") {
        print_json(to_json(enumerate_vertices_bruteforce(n), !summary_only));
        return kOk;
    }
    const VertexSet dd = enumerate_vertices_dd(n);
    const VertexSet brute = enumerate_vertices_bruteforce(n);
    Json out = to_json(dd, !summary_only);
    out["methods_agree"] = dd == brute;
    print_json(out);
    if (!(dd == brute)) {
        std::cerr << "vertex sets differ: dd " << dd.total() << ", brute force " << brute.total() << '\n';
        return kViolation;
    }
    return kOk;
}

int cmd_check_vertex(const std::string& path)
{
    const Tensor3 t = tensor_from_json(read_json_file(path));
    const VertexCertificate cert = is_vertex(t);
    print_json(to_json(cert));
    switch (cert.verdict) {
    case VertexVerdict::vertex: return kOk;
    case VertexVerdict::not_vertex: return kNotVertex;
    default: return kInfeasible;
    }
}

int cmd_membership(const std::string& path, const std::string& generators_source)
{
    const Tensor3 t = tensor_from_json(read_json_file(path));
    std::vector<Tensor3> generators;
    if (generators_source == "latin") {
        for (const LatinSquare& s : enumerate_latin_squares(t.dim())) {
            generators.push_back(latin_to_tensor(s));
        }
    } else {
        const Json list = read_json_file(generators_source);
        if (!list.is_array()) {
            throw std::invalid_argument("generator file must hold a JSON array of tensors");
        }
        for (const Json& g : list) {
            generators.push_back(tensor_from_json(g));
        }
    }
    const FeasibilityResult result = in_permutation_hull(t, generators);
    Json out = to_json(result);
    out["generators"] = generators.size();
    print_json(out);
    return result.feasible() ? kOk : kNotInHull;
}

int cmd_latin(int n, bool list)
{
    if (list) {
        Json out = Json::array();
        for (const LatinSquare& s : enumerate_latin_squares(n)) {
            out.push_back(to_json(s));
        }
        print_json(out);
    } else {
        std::cout << to_string(count_latin_squares(n)) << '\n';
    }
    return kOk;
}

int cmd_decompose(const std::string& path)
{
    const Json input = read_json_file(path);
    const DoublyStochasticMatrix m = matrix_from_json(input);
    const Decomposition d = decompose(m);
    const auto rebuilt = d.reconstruct();
    const bool exact = std::equal(rebuilt.begin(), rebuilt.end(), m.entries().begin(), m.entries().end());
    print_json(Json{{"n", m.order()},
                    {"terms", to_json(d)},
                    {"term_count", d.terms.size()},
                    {"caratheodory_bound", caratheodory_bound(m.order())},
                    {"reconstructs", exact}});
    return exact && d.terms.size() <= caratheodory_bound(m.order()) ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact tools for the polytope of n x n x n line-stochastic tensors"};
    app.require_subcommand(1);

    int n = 0;
    int sweep_max = 0;
    std::string format = "table";
    auto* bounds = app.add_subcommand("bounds", "Evaluate and compare the vertex-count bounds");
    bounds->add_option("n", n, "Dimension")->required();
    bounds->add_option("--sweep", sweep_max, "Also verify every relation for n = 2..MAX");
    bounds->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    std::string method = "dd";
    bool summary_only = false;
    auto* vertices = app.add_subcommand("vertices", "Enumerate all vertices (JSON)");
    vertices->add_option("n", n, "Dimension")->required();
    vertices->add_option("--method", method, "dd, brute or both")->check(CLI::IsMember({"dd", "brute", "both"}));
    vertices->add_flag("--summary-only", summary_only, "Omit the vertex list");

    std::string path;
    auto* check = app.add_subcommand("check-vertex", "Certify whether a tensor is a vertex");
    check->add_option("tensor", path, "Tensor JSON file")->required();

    std::string generators = "latin";
    auto* membership = app.add_subcommand("membership", "Decide membership in the permutation-tensor hull");
    membership->add_option("tensor", path, "Tensor JSON file")->required();
    membership->add_option("--generators", generators, "'latin' or a JSON file holding an array of tensors");

    bool count = false;
    bool list = false;
    auto* latin = app.add_subcommand("latin", "Count or list Latin squares");
    latin->add_option("n", n, "Order")->required();
    auto* count_flag = latin->add_flag("--count", count, "Print L(n)");
    auto* list_flag = latin->add_flag("--list", list, "Print every square as JSON");
    count_flag->excludes(list_flag);

    auto* decompose_cmd = app.add_subcommand("decompose", "Birkhoff decomposition of a doubly stochastic matrix");
    decompose_cmd->add_option("matrix", path, "Matrix JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*bounds) {
            return cmd_bounds(n, sweep_max, format);
        }
        if (*vertices) {
            return cmd_vertices(n, method, summary_only);
        }
        if (*check) {
            return cmd_check_vertex(path);
        }
        if (*membership) {
            return cmd_membership(path, generators);
        }
        if (*latin) {
            return cmd_latin(n, list);
        }
        if (*decompose_cmd) {
            return cmd_decompose(path);
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCap;
    } catch (const NotDoublyStochasticError& e) {
        std::cerr << "error: not doubly stochastic: " << e.what() << '\n';
        return kNotDoublyStochastic;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
