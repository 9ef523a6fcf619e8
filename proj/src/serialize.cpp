#include "stochpoly/serialize.hpp"

#include <stdexcept>

namespace stochpoly {

namespace {

Json rational_json(const Rational& r)
{
    return to_string(r);
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) {
        throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

int positive_dimension(const Json& j)
{
    const Json& n = field(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 1) {
        throw std::invalid_argument("\"n\" must be a positive integer");
    }
    return n.get<int>();
}

const Json& sized_array(const Json& j, std::size_t size, const char* what)
{
    if (!j.is_array() || j.size() != size) {
        throw std::invalid_argument(std::string(what) + " must be an array of length " + std::to_string(size));
    }
    return j;
}

Json line_json(const Line& line)
{
    static constexpr const char* fixed_names[3][2] = {{"j", "k"}, {"i", "k"}, {"i", "j"}};
    Json out;
    out["kind"] = "line_sum";
    out["axis"] = line.axis + 1;
    out["fixed"] = {{fixed_names[line.axis][0], line.first + 1}, {fixed_names[line.axis][1], line.second + 1}};
    return out;
}

}  // namespace

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

Json to_json(const Tensor3& t)
{
    const int n = t.dim();
    Json entries = Json::array();
    for (int i = 0; i < n; ++i) {
        Json plane = Json::array();
        for (int j = 0; j < n; ++j) {
            Json row = Json::array();
            for (int k = 0; k < n; ++k) {
                row.push_back(rational_json(t(i, j, k)));
            }
            plane.push_back(std::move(row));
        }
        entries.push_back(std::move(plane));
    }
    return Json{{"n", n}, {"entries", std::move(entries)}};
}

Tensor3 tensor_from_json(const Json& j)
{
    const int n = positive_dimension(j);
    const auto nn = static_cast<std::size_t>(n);
    const Json& entries = sized_array(field(j, "entries"), nn, "entries");
    std::vector<Rational> flat;
    flat.reserve(nn * nn * nn);
    for (const Json& plane : entries) {
        for (const Json& row : sized_array(plane, nn, "entries[i]")) {
            for (const Json& value : sized_array(row, nn, "entries[i][j]")) {
                flat.push_back(rational_from_json(value));
            }
        }
    }
    return Tensor3(n, std::move(flat));
}

Json to_json(const LatinSquare& s)
{
    const int n = s.order();
    Json cells = Json::array();
    for (int r = 0; r < n; ++r) {
        Json row = Json::array();
        for (int c = 0; c < n; ++c) {
            row.push_back(s(r, c));
        }
        cells.push_back(std::move(row));
    }
    return Json{{"n", n}, {"cells", std::move(cells)}};
}

LatinSquare latin_from_json(const Json& j)
{
    const int n = positive_dimension(j);
    const auto nn = static_cast<std::size_t>(n);
    std::vector<int> cells;
    for (const Json& row : sized_array(field(j, "cells"), nn, "cells")) {
        for (const Json& v : sized_array(row, nn, "cells[r]")) {
            if (!v.is_number_integer()) {
                throw std::invalid_argument("Latin square cells must be integers");
            }
            cells.push_back(v.get<int>());
        }
    }
    return LatinSquare(n, std::move(cells));
}

Json to_json(const StochasticityViolation& v)
{
    if (const auto* neg = std::get_if<NegativeEntry>(&v)) {
        return Json{{"kind", "negative_entry"},
                    {"index", {neg->index[0] + 1, neg->index[1] + 1, neg->index[2] + 1}},
                    {"value", rational_json(neg->value)}};
    }
    const auto& mismatch = std::get<LineSumMismatch>(v);
    Json out = line_json(mismatch.line);
    out["sum"] = rational_json(mismatch.sum);
    return out;
}

std::string verdict_name(VertexVerdict v)
{
    switch (v) {
    case VertexVerdict::vertex: return "vertex";
    case VertexVerdict::not_vertex: return "not_vertex";
    default: return "infeasible";
    }
}

Json to_json(const VertexCertificate& c)
{
    Json out{{"verdict", verdict_name(c.verdict)}, {"support_size", c.support_size}, {"rank", c.rank}};
    if (c.violated) {
        out["violated"] = to_json(*c.violated);
    }
    return out;
}

Json to_json(const VertexSet& s, bool include_vertices)
{
    Json out{{"total", s.total()}, {"zero_one", s.zero_one}, {"fractional", s.fractional}};
    if (include_vertices) {
        Json list = Json::array();
        for (const Tensor3& v : s.vertices) {
            list.push_back(to_json(v));
        }
        out["vertices"] = std::move(list);
    }
    return out;
}

Json to_json(const FeasibilityResult& r)
{
    Json out{{"status", r.feasible() ? "feasible" : "infeasible"}};
    Json values = Json::array();
    for (const Rational& v : r.feasible() ? r.witness : r.certificate) {
        values.push_back(rational_json(v));
    }
    out[r.feasible() ? "witness" : "certificate"] = std::move(values);
    return out;
}

Json to_json(const DoublyStochasticMatrix& m)
{
    Json rows = Json::array();
    for (int r = 0; r < m.order(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.order(); ++c) {
            row.push_back(rational_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.order()}, {"rows", std::move(rows)}};
}

DoublyStochasticMatrix matrix_from_json(const Json& j)
{
    const int n = positive_dimension(j);
    const auto nn = static_cast<std::size_t>(n);
    std::vector<Rational> entries;
    for (const Json& row : sized_array(field(j, "rows"), nn, "rows")) {
        for (const Json& v : sized_array(row, nn, "rows[r]")) {
            entries.push_back(rational_from_json(v));
        }
    }
    return DoublyStochasticMatrix(n, std::move(entries));
}

Json to_json(const Decomposition& d)
{
    Json out = Json::array();
    for (const auto& term : d.terms) {
        out.push_back(Json{{"weight", rational_json(term.weight)}, {"perm", term.perm}});
    }
    return out;
}

Json to_json(const BoundReport& r)
{
    Json out;
    out["n"] = r.n;
    out["lower_formula"] = rational_json(r.lower_formula);
    out["latin_count"] = r.latin_count ? Json(to_string(*r.latin_count)) : Json(nullptr);
    out["cpz"] = rational_json(r.cpz);
    out["lzz"] = to_string(r.lzz);
    out["middle"] = to_string(r.middle);
    out["zz_opt"] = to_string(r.zz_opt);
    out["zz_half"] = to_string(r.zz_half);
    Json ordering = Json::array();
    for (const auto& e : r.ordering) {
        ordering.push_back(Json{{"id", e.id}, {"strict_before_next", e.strict_before_next}});
    }
    out["ordering"] = std::move(ordering);
    out["cpz_before_lzz"] = r.cpz_before_lzz;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"relation", c.name}, {"holds", c.holds}});
    }
    out["checks"] = std::move(checks);
    return out;
}

}  // namespace stochpoly
