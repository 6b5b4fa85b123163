#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "realhiggs/output.hpp"
#include "realhiggs/store.hpp"
#include "realhiggs/verify.hpp"

namespace realhiggs {

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitVerifyFailed = 3,
    kExitInternal = 4,
};

struct ComputeRequest {
    int g = 0;
    std::optional<int> b;
    int r = 1;
    int d = 1;
    FieldCase field = FieldCase::Real;
    Pipeline pipeline = Pipeline::Generic;
};

/// Validates the request and computes one record. Throws InvalidInput
/// subclasses for bad parameters and InternalAssertion subclasses when an
/// identity fails.
OutputRecord compute_record(const ComputeRequest& req, APolyStore& store, int jobs = 1);

/// Inclusive integer range; "2..3" or "2". Empty when lo > hi.
struct IntRange {
    int lo = 0;
    int hi = -1;
    static IntRange parse(const std::string& s);
};

/// Every (g, b, r) cell of the grid in g, b, r order. b_policy is "all"
/// (0..g) or a single integer; it is ignored for the complex field. Cells
/// fail independently: a failing cell carries an error and exit code.
std::vector<OutputRecord> compute_table(IntRange g, const std::string& b_policy, IntRange r, int d,
                                        FieldCase field, Pipeline pipeline, APolyStore& store, int jobs,
                                        bool timing);

/// Recomputes every cache entry in `dir` from scratch and compares it with
/// the stored polynomial. Unreadable entries fail.
std::vector<CheckReport> check_cache_entries(const std::string& dir, int jobs);

/// Full command-line entry point; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realhiggs
