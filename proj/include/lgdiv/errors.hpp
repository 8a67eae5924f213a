#pragma once

#include <stdexcept>
#include <string>

namespace lgdiv {

enum class errc {
    ok = 0,
    invalid_argument,
    overflow,
    modulus_mismatch,
    non_unit,
    dimension_mismatch,
    subgroup_not_contained,
    non_invertible,
    cap_exceeded,
    incomplete_cocycle,
    not_a_cocycle,
    not_locally_trivial,
    normalization_obstructed,
    precondition_violated,
    no_diagonal_deviation,
    spec_violated,
    decomposition_failed,
    budget_exceeded,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace lgdiv
