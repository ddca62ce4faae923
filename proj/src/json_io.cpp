#include "quiver/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace quiver::json_io {
namespace {

std::string key_of(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

std::pair<int, int> parse_key(const std::string& key) {
    std::istringstream in(key);
    int i = 0, j = 0;
    char comma = 0;
    if (!(in >> i >> comma >> j) || comma != ',' || !in.eof())
        throw MalformedInput("bad rectangle key \"" + key + "\"");
    return {i, j};
}

template <typename T>
T get(const json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw MalformedInput(std::string("malformed ") + what);
    }
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw MalformedInput(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

}  // namespace

json to_json(const Partition& p) { return p.parts(); }

json to_json(const TensorElement& e) {
    json out = json::array();
    for (const auto& [key, c] : e.terms()) {
        json shapes = json::array();
        for (const auto& part : key) shapes.push_back(to_json(part));
        out.push_back({{"shapes", shapes}, {"coeff", c}});
    }
    return out;
}

json to_json(const Tableau& t) { return t.rows(); }

json to_json(const RectTableau& t) { return {{"a", t.rows()}, {"b", t.cols()}, {"body", to_json(t.body())}}; }

json to_json(const RankConditions& rc) { return {{"n", rc.n()}, {"rows", rc.diagonals()}}; }

json to_json(const RectDiagram& rd) {
    json rects = json::object();
    for (int i = 0; i < rd.n(); ++i)
        for (int j = i + 1; j <= rd.n(); ++j)
            rects[key_of(i, j)] = {{"rows", rd.at(i, j).rows}, {"cols", rd.at(i, j).cols}};
    return {{"n", rd.n()}, {"rects", rects}};
}

json to_json(const TableauDiagram& td) {
    json fill = json::object();
    for (int i = 0; i < td.n(); ++i)
        for (int j = i + 1; j <= td.n(); ++j) fill[key_of(i, j)] = to_json(td.at(i, j));
    return {{"n", td.n()}, {"fill", fill}};
}

json to_json(const FactorSequence& fs) {
    json labels = json::array();
    for (const auto& t : fs.labels) labels.push_back(to_json(t));
    return {{"path", fs.path.word()}, {"labels", labels}};
}

json to_json(const WeakRowDiagram& d) { return d.rows; }

json to_json(const Census& c) {
    json out = json::array();
    for (const auto& [key, count] : c) {
        json shapes = json::array();
        for (const auto& part : key) shapes.push_back(to_json(part));
        out.push_back({{"shapes", shapes}, {"count", count}});
    }
    return out;
}

Partition partition_from(const json& j) { return Partition(get<std::vector<int>>(j, "partition")); }

TensorElement tensor_from(const json& j, std::size_t arity) {
    if (!j.is_array()) throw MalformedInput("tensor element must be an array");
    TensorElement out(arity);
    for (const auto& term : j) {
        ShapeTuple key;
        for (const auto& part : field(term, "shapes")) key.push_back(partition_from(part));
        out.add(key, get<Coeff>(field(term, "coeff"), "coefficient"));
    }
    return out;
}

Tableau tableau_from(const json& j) { return Tableau(get<std::vector<Row>>(j, "tableau")); }

RectTableau rect_tableau_from(const json& j) {
    return RectTableau(get<int>(field(j, "a"), "a"), get<int>(field(j, "b"), "b"), tableau_from(field(j, "body")));
}

RankConditions rank_from(const json& j) {
    auto rows = get<std::vector<std::vector<int>>>(field(j, "rows"), "rank rows");
    const int n = get<int>(field(j, "n"), "n");
    if (n < 0 || rows.size() != static_cast<std::size_t>(n) + 1)
        throw InvalidRankConditions("rank table must have n + 1 rows");
    return RankConditions::from_diagonals(rows);
}

RectDiagram rect_diagram_from(const json& j) {
    const int n = get<int>(field(j, "n"), "n");
    if (n < 0) throw InvalidRankConditions("n must be nonnegative");
    const json& rects = field(j, "rects");
    if (!rects.is_object()) throw MalformedInput("rects must be an object");
    RectDiagram rd(n);
    std::vector<std::vector<bool>> seen(n + 1, std::vector<bool>(n + 1, false));
    for (const auto& [key, value] : rects.items()) {
        auto [i, jj] = parse_key(key);
        if (i < 0 || jj <= i || jj > n) throw MalformedInput("rectangle key out of range: " + key);
        if (seen[i][jj]) throw MalformedInput("duplicate rectangle " + key);
        seen[i][jj] = true;
        const int rows = get<int>(field(value, "rows"), "rows");
        const int cols = get<int>(field(value, "cols"), "cols");
        if (rows < 0 || cols < 0) throw InvalidRankConditions("negative rectangle side at " + key);
        rd.set(i, jj, {rows, cols});
    }
    for (int i = 0; i < n; ++i)
        for (int jj = i + 1; jj <= n; ++jj)
            if (!seen[i][jj]) throw MalformedInput("missing rectangle " + key_of(i, jj));
    if (!rd.is_valid()) throw InvalidRankConditions("rectangle sides grow along a diagonal");
    return rd;
}

TableauDiagram tableau_diagram_from(const json& j) {
    const int n = get<int>(field(j, "n"), "n");
    if (n < 0) throw MalformedInput("n must be nonnegative");
    const json& fill = field(j, "fill");
    if (!fill.is_object()) throw MalformedInput("fill must be an object");
    TableauDiagram td(n);
    std::size_t count = 0;
    for (const auto& [key, value] : fill.items()) {
        auto [i, jj] = parse_key(key);
        if (i < 0 || jj <= i || jj > n) throw MalformedInput("tableau key out of range: " + key);
        td.set(i, jj, rect_tableau_from(value));
        ++count;
    }
    if (count != static_cast<std::size_t>(n * (n + 1) / 2)) throw MalformedInput("filling must cover every rectangle");
    return td;
}

FactorSequence factor_sequence_from(const json& j) {
    FactorSequence fs{Path::parse(get<std::string>(field(j, "path"), "path")), {}};
    for (const auto& t : field(j, "labels")) fs.labels.push_back(tableau_from(t));
    return fs;
}

WeakRowDiagram weak_row_diagram_from(const json& j) {
    WeakRowDiagram d{get<std::vector<Row>>(j, "diagram")};
    for (const auto& row : d.rows)
        if (!std::is_sorted(row.begin(), row.end())) throw MalformedInput("diagram rows must be weakly increasing");
    return d;
}

PairFile pair_from(const json& j) {
    return {tableau_from(field(j, "q")), tableau_from(field(j, "p")), get<int>(field(j, "a"), "a")};
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw MalformedInput(path + ": " + e.what());
    }
}

}  // namespace quiver::json_io
