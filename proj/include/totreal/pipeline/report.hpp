// Report serialization: JSON and CSV renderings of classification results,
// both lossless and round-trippable.
#pragma once

#include <string>

#include "totreal/pipeline/classify.hpp"

namespace totreal {

// "json": one document, records ordered by (disc, label); an empty report
// serializes to an object with zero counts and no records.  "csv": header
// plus one quoted row per record.  Any other format name throws
// std::invalid_argument("unknown format").
std::string emit_report(const ClassificationReport& report, const std::string& format);

ClassificationReport parse_report_json(const std::string& text);
ClassificationReport parse_report_csv(const std::string& text);

// Single-record JSON line, used for checkpoints and line-delimited output.
std::string outcome_json_line(const FieldOutcome& outcome);
FieldOutcome outcome_from_json_line(const std::string& line);

}  // namespace totreal
