// targets.hpp: the target-gate library and user-supplied target files.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "braidc/unitary2.hpp"

namespace braidc {

struct TargetGate {
    std::string name;
    Unitary2 matrix;
};

struct UnknownTargetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TargetNotUnitaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Names accepted by target(): identity, hadamard, pauli_x, pauli_y,
// pauli_z, phase_s, t.
const std::vector<std::string>& target_names();

// Resolves a library name, or loads a JSON file holding a 2x2 array of
// [re, im] pairs in row-major order. File matrices must be unitary within
// 1e-10 (TargetNotUnitaryError otherwise); unreadable or malformed files
// raise IoError; names that match neither raise UnknownTargetError.
TargetGate target(const std::string& name_or_path);

}  // namespace braidc
