// Serialization lives in one place so every command and test writes the same
// shapes: rationals as "p/q" strings, matrices row-major, reductions as
// sparse coefficient lists over explicit problem descriptions.

#include "slackfc/io.hpp"

#include "slackfc/errors.hpp"

#include <fstream>
#include <sstream>

namespace sfc {

namespace {

const Json& require(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field))
        throw Error(std::string("missing field '") + field + "'");
    return j.at(field);
}

Rat rat_field(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) throw Error("rational values must be \"p/q\" strings");
    return rat_parse(j.get<std::string>());
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_str(x));
    return out;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected an array of rationals");
    Vec out;
    for (const Json& x : j) out.push_back(rat_field(x));
    return out;
}

} // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
}

Json matrix_to_json(const Mat& m) {
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

Mat matrix_from_json(const Json& j) {
    const int rows = require(j, "rows").get<int>();
    const int cols = require(j, "cols").get<int>();
    const Json& entries = require(j, "entries");
    if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw ShapeError("entry rows do not match the declared row count");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = entries.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ShapeError("entry row " + std::to_string(i) +
                             " does not match the declared column count");
        for (int c = 0; c < cols; ++c) m.at(i, c) = rat_field(row.at(static_cast<size_t>(c)));
    }
    return m;
}

std::string matrix_to_csv(const Mat& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += rat_str(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

Mat matrix_from_csv(const std::string& text) {
    std::vector<Vec> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Vec row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(rat_parse(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ShapeError("ragged CSV row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return Mat();
    return Mat::from_rows(rows);
}

Mat load_matrix(const std::string& path) {
    const std::string text = read_text_file(path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return matrix_from_csv(text);
    return matrix_from_json(parse_json(text));
}

void save_matrix(const std::string& path, const Mat& m) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        write_text_file(path, matrix_to_csv(m));
    else
        write_text_file(path, matrix_to_json(m).dump(2) + "\n");
}

Json slack_to_json(const SlackMatrix& sm) {
    Json out;
    out["sense"] = sense_str(sm.sense);
    out["rows"] = sm.entries.rows();
    out["cols"] = sm.entries.cols();
    out["row_labels"] = sm.row_labels;
    out["col_labels"] = sm.col_labels;
    out["row_instances"] = sm.row_instances;
    out["entries"] = matrix_to_json(sm.entries)["entries"];
    return out;
}

Json factorization_to_json(const LPFactorization& f) {
    Json out;
    out["size"] = f.size();
    out["T"] = matrix_to_json(f.T);
    out["U"] = matrix_to_json(f.U);
    out["mu"] = vec_to_json(f.mu);
    return out;
}

LPFactorization factorization_from_json(const Json& j) {
    LPFactorization f;
    f.T = matrix_from_json(require(j, "T"));
    f.U = matrix_from_json(require(j, "U"));
    f.mu = vec_from_json(require(j, "mu"));
    return f;
}

Json rank_interval_to_json(const RankInterval& ri) {
    Json out;
    out["lower"] = ri.lower;
    out["upper"] = ri.upper;
    out["certificate_lower"] = ri.certificate_lower;
    out["certificate_upper"] = factorization_to_json(ri.certificate_upper);
    return out;
}

Json problem_to_json(const ProblemSpec& p) {
    Json out;
    out["name"] = p.name;
    out["sense"] = sense_str(p.sense);
    out["solutions"] = p.solutions;
    out["instances"] = p.instances;
    out["value"] = matrix_to_json(p.value);
    out["size_of"] = vec_to_json(p.size_of);
    return out;
}

ProblemSpec problem_from_json(const Json& j) {
    ProblemSpec p;
    p.name = require(j, "name").get<std::string>();
    p.sense = sense_parse(require(j, "sense").get<std::string>());
    p.solutions = require(j, "solutions").get<std::vector<std::string>>();
    p.instances = require(j, "instances").get<std::vector<std::string>>();
    p.value = matrix_from_json(require(j, "value"));
    p.size_of = vec_from_json(require(j, "size_of"));
    p.validate();
    return p;
}

Json guarantees_to_json(const Guarantees& g) {
    Json out;
    out["C"] = vec_to_json(g.C);
    out["S"] = vec_to_json(g.S);
    return out;
}

Guarantees guarantees_from_json(const Json& j) {
    Guarantees g;
    g.C = vec_from_json(require(j, "C"));
    g.S = vec_from_json(require(j, "S"));
    return g;
}

namespace {

Json combo_rows_to_json(const std::vector<std::vector<std::pair<int, Rat>>>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json terms = Json::array();
        for (const auto& [idx, coef] : row) terms.push_back(Json::array({idx, rat_str(coef)}));
        out.push_back(std::move(terms));
    }
    return out;
}

std::vector<std::vector<std::pair<int, Rat>>> combo_rows_from_json(const Json& j) {
    if (!j.is_array()) throw Error("expected an array of coefficient lists");
    std::vector<std::vector<std::pair<int, Rat>>> out;
    for (const Json& row : j) {
        if (!row.is_array()) throw Error("expected a coefficient list");
        std::vector<std::pair<int, Rat>> terms;
        for (const Json& t : row) {
            if (!t.is_array() || t.size() != 2)
                throw Error("coefficient terms must be [index, \"p/q\"] pairs");
            terms.push_back({t.at(0).get<int>(), rat_field(t.at(1))});
        }
        out.push_back(std::move(terms));
    }
    return out;
}

} // namespace

Json reduction_to_json(const Reduction& r) {
    Json out;
    out["sense1"] = sense_str(r.sense1);
    out["sense2"] = sense_str(r.sense2);
    out["beta"] = combo_rows_to_json(r.beta);
    out["shift"] = vec_to_json(r.shift);
    out["gamma"] = combo_rows_to_json(r.gamma);
    return out;
}

Reduction reduction_from_json(const Json& j) {
    Reduction r;
    r.sense1 = sense_parse(require(j, "sense1").get<std::string>());
    r.sense2 = sense_parse(require(j, "sense2").get<std::string>());
    r.beta = combo_rows_from_json(require(j, "beta"));
    r.shift = vec_from_json(require(j, "shift"));
    r.gamma = combo_rows_from_json(require(j, "gamma"));
    return r;
}

Json bundle_to_json(const ReductionBundle& b) {
    Json out;
    out["name"] = b.name;
    out["source"] = problem_to_json(b.source);
    out["source_guarantees"] = guarantees_to_json(b.source_guarantees);
    out["target"] = problem_to_json(b.target);
    out["target_guarantees"] = guarantees_to_json(b.target_guarantees);
    out["reduction"] = reduction_to_json(b.reduction);
    out["notes"] = b.notes;
    return out;
}

ReductionBundle bundle_from_json(const Json& j) {
    ReductionBundle b;
    b.name = require(j, "name").get<std::string>();
    b.source = problem_from_json(require(j, "source"));
    b.source_guarantees = guarantees_from_json(require(j, "source_guarantees"));
    b.target = problem_from_json(require(j, "target"));
    b.target_guarantees = guarantees_from_json(require(j, "target_guarantees"));
    b.reduction = reduction_from_json(require(j, "reduction"));
    b.notes = j.contains("notes") ? j.at("notes").get<std::string>() : "";
    return b;
}

Json rounding_to_json(const RoundingResult& r) {
    Json out;
    out["k"] = r.k;
    out["eps"] = rat_str(r.eps);
    out["size_bound"] = r.size_bound;
    out["cprime"] = vec_to_json(r.cprime);
    out["N"] = matrix_to_json(r.N);
    if (r.certificate) out["certificate"] = factorization_to_json(*r.certificate);
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw Error("failed writing '" + path + "'");
}

} // namespace sfc
