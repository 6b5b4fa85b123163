#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realhiggs/specialization.hpp"

namespace realhiggs {

enum class OutputFormat { Json, Csv, Latex, Text };

std::string to_string(OutputFormat f);
OutputFormat parse_output_format(const std::string& s);

/// One computed (or failed) cell. Timing is kept apart from the result so
/// that canonical renderings stay byte-stable.
struct OutputRecord {
    int g = 0;
    std::optional<int> b;  // absent for the complex field
    int r = 0;
    int d = 0;
    FieldCase field = FieldCase::Real;
    Pipeline pipeline = Pipeline::Generic;
    UPoly poly;
    std::string engine_version;
    std::optional<double> wall_ms;  // omitted from output when absent
    std::string error;              // non-empty for a failed cell
    int exit_code = 0;

    bool ok() const { return error.empty(); }
    static OutputRecord from(const BettiResult& res, int d);
    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

std::string render_json(const OutputRecord& rec);
/// Inverse of render_json for successful records.
OutputRecord parse_json_record(const std::string& text);

/// Polynomial only, "-2*t^2 + 2*t".
std::string render_text(const OutputRecord& rec);
/// "2 t^{5} (1-t)^{3} \left(t^{2} - 2 t + 4\right)" for real results, where
/// 2^b (1-t)^g divides the polynomial; expanded form otherwise.
std::string render_latex(const OutputRecord& rec);

/// Whole table in one format. JSON is an array, CSV carries a header row,
/// LaTeX is a tabular environment, text is one line per record.
std::string render_table(const std::vector<OutputRecord>& recs, OutputFormat f);
std::string render_single(const OutputRecord& rec, OutputFormat f);
std::vector<OutputRecord> parse_json_table(const std::string& text);

/// Expanded polynomial in LaTeX notation.
std::string latex_poly(const UPoly& p);

}  // namespace realhiggs
