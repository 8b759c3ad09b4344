// SPDX-License-Identifier: Apache-2.0
//
// Error hierarchy. Each error carries the process exit code the CLI maps it
// to, so library callers and the command line agree on one contract.
#pragma once

#include <stdexcept>
#include <string>

namespace ulrich {

enum class ExitCode : int {
    ok = 0,
    check_failed = 1,
    invalid_params = 2,
    parse_error = 3,
    model_inapplicable = 4,
    oracle_disagreement = 5,
};

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

// Parameters violate the standing assumptions on (e, b, k).
class InvalidParams : public Error {
public:
    explicit InvalidParams(const std::string& what) : Error(ExitCode::invalid_params, what) {}
};

// Input is well formed but outside what the engine supports (e.g. a twist
// coefficient outside {0,1,2} for a line-bundle Ulrich check, rank 1 at e > 0).
class ScopeError : public Error {
public:
    explicit ScopeError(const std::string& what) : Error(ExitCode::invalid_params, what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ExitCode::parse_error, what) {}
};

// The generic-position model for ideal-sheaf twists does not apply.
class ModelInapplicable : public Error {
public:
    explicit ModelInapplicable(const std::string& what)
        : Error(ExitCode::model_inapplicable, what) {}
};

// Solver and brute-force oracle disagree.
class OracleDisagreement : public Error {
public:
    explicit OracleDisagreement(const std::string& what)
        : Error(ExitCode::oracle_disagreement, what) {}
};

}  // namespace ulrich
