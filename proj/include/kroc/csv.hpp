#pragma once

#include <iosfwd>
#include <string>

#include "kroc/sample.hpp"

namespace kroc {

// Ingestion schema: header "score,label", then one "score,label" row per
// example with label 0 (complement) or 1 (target). LF or CRLF line endings,
// optional UTF-8 BOM, blank lines ignored. Throws ParseError.
LabeledSample read_sample(std::istream& in, const std::string& source = "<input>");
LabeledSample read_sample_file(const std::string& path);

void write_sample(std::ostream& out, const LabeledSample& sample);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace kroc
