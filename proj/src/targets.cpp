#include "braidc/targets.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace braidc {

namespace {

TargetGate library_gate(const std::string& name) {
    const double r = 1.0 / std::sqrt(2.0);
    const double pi = std::acos(-1.0);
    Unitary2 m = Unitary2::identity();
    if (name == "identity") {
        // already the identity
    } else if (name == "hadamard") {
        m.m = {cplx(r), cplx(r), cplx(r), cplx(-r)};
    } else if (name == "pauli_x") {
        m.m = {cplx(0.0), cplx(1.0), cplx(1.0), cplx(0.0)};
    } else if (name == "pauli_y") {
        m.m = {cplx(0.0), cplx(0.0, -1.0), cplx(0.0, 1.0), cplx(0.0)};
    } else if (name == "pauli_z") {
        m.m = {cplx(1.0), cplx(0.0), cplx(0.0), cplx(-1.0)};
    } else if (name == "phase_s") {
        m.m = {cplx(1.0), cplx(0.0), cplx(0.0), cplx(0.0, 1.0)};
    } else if (name == "t") {
        m.m = {cplx(1.0), cplx(0.0), cplx(0.0), std::polar(1.0, pi / 4.0)};
    } else {
        return TargetGate{};
    }
    return TargetGate{name, m};
}

TargetGate load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read target file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("target file " + path + " is not valid JSON: " + e.what());
    }
    const auto shape_error = [&]() {
        return IoError("target file " + path +
                       " must hold a 2x2 array of [re, im] pairs");
    };
    if (!j.is_array() || j.size() != 2) throw shape_error();
    Unitary2 m;
    for (int r = 0; r < 2; ++r) {
        if (!j[r].is_array() || j[r].size() != 2) throw shape_error();
        for (int c = 0; c < 2; ++c) {
            const auto& cell = j[r][c];
            if (!cell.is_array() || cell.size() != 2 ||
                !cell[0].is_number() || !cell[1].is_number())
                throw shape_error();
            m.at(r, c) = cplx(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    if (!m.is_unitary(1e-10))
        throw TargetNotUnitaryError("target file " + path +
                                    " does not hold a unitary matrix");
    return TargetGate{std::filesystem::path(path).stem().string(), m};
}

}  // namespace

const std::vector<std::string>& target_names() {
    static const std::vector<std::string> names = {
        "identity", "hadamard", "pauli_x", "pauli_y", "pauli_z", "phase_s", "t"};
    return names;
}

TargetGate target(const std::string& name_or_path) {
    for (const std::string& name : target_names())
        if (name == name_or_path) return library_gate(name);
    const bool path_like =
        name_or_path.find('/') != std::string::npos ||
        name_or_path.find('.') != std::string::npos;
    if (path_like || std::filesystem::exists(name_or_path))
        return load_file(name_or_path);
    throw UnknownTargetError("unknown target gate: " + name_or_path);
}

}  // namespace braidc
