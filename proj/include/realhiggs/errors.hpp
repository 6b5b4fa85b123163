#pragma once

#include <stdexcept>
#include <string>

namespace realhiggs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: the CLI maps these to exit code 2.
struct InvalidInput : Error {
    using Error::Error;
};

/// A mathematical guarantee failed to hold: the CLI maps these to exit code 4.
/// Seeing one means either a theorem is wrong or (far more likely) a bug.
struct InternalAssertion : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct ConstantTermNotOne : Error {
    using Error::Error;
};

/// Exact division left a remainder. `context` describes the dividend, the
/// divisor and the first offending term.
struct NotDivisible : Error {
    NotDivisible(const std::string& what, std::string ctx) : Error(what), context(std::move(ctx)) {}
    std::string context;
};

struct NotPolynomial : InternalAssertion {
    using InternalAssertion::InternalAssertion;
};

struct OddUPower : InternalAssertion {
    using InternalAssertion::InternalAssertion;
};

struct PoleAtOne : InternalAssertion {
    using InternalAssertion::InternalAssertion;
};

struct InvalidTopology : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NonCoprime : InvalidInput {
    using InvalidInput::InvalidInput;
};

}  // namespace realhiggs
