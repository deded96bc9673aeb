#pragma once

#include <string>

#include "pgc/pipeline.hpp"

namespace pgc {

/// Deterministic JSON: ordered keys, every double printed with %.17g, LF
/// endings. Two runs on the same input produce identical bytes.
std::string analysis_report_json(const AnalysisResult& r);
std::string reconstruction_report_json(const ReconstructionResult& r);

/// CSV with '.' decimal, ',' separator, header row, LF line endings,
/// %.17g floats.
std::string analysis_csv(const AnalysisResult& r);
std::string curve_csv(const ReconstructedCurve& curve);

/// Plain-text verification table, one row per identity.
std::string residual_table_text(const AnalysisResult& r);

/// Writes content to path atomically (temp file, then rename).
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace pgc
