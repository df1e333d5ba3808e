#include "braidc/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "braidc/braid_word.hpp"
#include "braidc/version.hpp"

namespace braidc {

using nlohmann::json;

json matrix_to_json(const Unitary2& u) {
    json rows = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int c = 0; c < 2; ++c)
            row.push_back(json::array({u.at(r, c).real(), u.at(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Unitary2 matrix_from_json(const json& j) {
    const auto bad = [] {
        return std::invalid_argument(
            "matrix json: expected a 2x2 array of [re, im] pairs");
    };
    if (!j.is_array() || j.size() != 2) throw bad();
    Unitary2 m;
    for (int r = 0; r < 2; ++r) {
        if (!j[r].is_array() || j[r].size() != 2) throw bad();
        for (int c = 0; c < 2; ++c) {
            const auto& cell = j[r][c];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw bad();
            m.at(r, c) = cplx(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return m;
}

namespace {

json envelope() {
    return json{{"schema_version", kSchemaVersion},
                {"tool_version", kVersion},
                {"convention", kConventionTag}};
}

std::string matrix_text(const Unitary2& u) {
    std::string out;
    char buf[80];
    for (int r = 0; r < 2; ++r) {
        out += "  [";
        for (int c = 0; c < 2; ++c) {
            const cplx& z = u.at(r, c);
            std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", z.real(), z.imag());
            out += buf;
        }
        out += " ]\n";
    }
    return out;
}

std::string full_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string milliseconds(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

json CompileReport::to_json() const {
    json j = envelope();
    j["target"] = {{"name", target.name}, {"matrix", matrix_to_json(target.matrix)}};
    j["method"] = method_name(result.method);
    j["budget"] = {{"max_exchanges", budget.max_exchanges},
                   {"max_slots", budget.resolved_max_slots()},
                   {"threads", budget.threads}};
    j["word"] = word_to_text(result.word);
    j["crossings"] = result.word.length();
    j["matrix"] = matrix_to_json(result.matrix);
    j["error"] = result.error;
    j["nodes_visited"] = result.nodes_visited;
    j["index_size"] = result.index_size;
    j["wall_time_ms"] = result.wall_time_ms;
    return j;
}

std::string CompileReport::to_text() const {
    std::ostringstream os;
    os << "target:        " << target.name << '\n'
       << "method:        " << method_name(result.method) << '\n'
       << "budget:        " << budget.max_exchanges << " exchanges, "
       << budget.resolved_max_slots() << " slots, " << budget.threads
       << (budget.threads == 1 ? " thread" : " threads") << '\n'
       << "word:          " << word_to_text(result.word) << '\n'
       << "crossings:     " << result.word.length() << '\n'
       << "error:         " << full_double(result.error) << '\n'
       << "nodes visited: " << result.nodes_visited << '\n';
    if (result.method == SearchMethod::Bidirectional)
        os << "index size:    " << result.index_size << '\n';
    os << "wall time:     " << milliseconds(result.wall_time_ms) << " ms\n"
       << "matrix:\n"
       << matrix_text(result.matrix);
    return os.str();
}

json EvaluateReport::to_json() const {
    json j = envelope();
    j["word"] = word_text;
    j["matrix"] = matrix_to_json(matrix);
    if (target_name) j["target"] = *target_name;
    if (error) j["error"] = *error;
    return j;
}

std::string EvaluateReport::to_text() const {
    std::ostringstream os;
    os << "word:   " << word_text << '\n' << "matrix:\n" << matrix_text(matrix);
    if (target_name) os << "target: " << *target_name << '\n';
    if (error) os << "error:  " << full_double(*error) << '\n';
    return os.str();
}

bool ModelCheckReport::pass(double tol) const {
    return pentagon_residual < tol && hexagon_residual < tol &&
           sigma_tenth_power_residual < tol && braid_relation_residual < tol;
}

json ModelCheckReport::to_json() const {
    json j = envelope();
    j["residuals"] = {{"pentagon", pentagon_residual},
                      {"hexagon", hexagon_residual},
                      {"sigma_tenth_power", sigma_tenth_power_residual},
                      {"braid_relation", braid_relation_residual}};
    j["pass"] = pass();
    return j;
}

std::string ModelCheckReport::to_text() const {
    std::ostringstream os;
    os << "pentagon residual:       " << full_double(pentagon_residual) << '\n'
       << "hexagon residual:        " << full_double(hexagon_residual) << '\n'
       << "sigma^10 residual:       " << full_double(sigma_tenth_power_residual)
       << '\n'
       << "braid relation residual: " << full_double(braid_relation_residual)
       << '\n'
       << "result:                  " << (pass() ? "pass" : "FAIL") << '\n';
    return os.str();
}

}  // namespace braidc
