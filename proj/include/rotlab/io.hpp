#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "rotlab/counterexample.hpp"
#include "rotlab/obstruction.hpp"
#include "rotlab/search.hpp"

namespace rotlab {

using json = nlohmann::json;

// Matrix wire format, the bit-level contract shared by every command:
// {"rows": N, "cols": M, "data": [[re, im], ...]} row-major IEEE-754 doubles.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

void save_matrix(const Matrix& m, const std::string& path);
Matrix load_matrix(const std::string& path);

json phase_to_json(const PhaseMatrix& phases);
PhaseMatrix phase_from_json(const json& j);
PhaseMatrix load_phase(const std::string& path);

json report_to_json(const ObstructionReport& rep, const ToleranceConfig& tol);
std::string report_csv_header();
std::string report_to_csv(const ObstructionReport& rep); // one row per pair

json search_result_to_json(const SearchResult& res);
std::string objective_trace_csv(const SearchResult& res);

json certificate_to_json(const TripleCertificate& cert);

json tolerances_to_json(const ToleranceConfig& tol);

json meta_block(const ToleranceConfig& tol);

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);
void write_json(const json& j, const std::string& path);
json load_json(const std::string& path);

} // namespace rotlab
