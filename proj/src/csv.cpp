#include "kroc/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "kroc/errors.hpp"

namespace kroc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

LabeledSample read_sample(std::istream& in, const std::string& source) {
  LabeledSample sample;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    view = trim(view);
    if (view.empty()) continue;

    const auto comma = view.find(',');
    if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(source, line_no, "expected exactly two comma-separated fields");
    }
    const std::string_view first = trim(view.substr(0, comma));
    const std::string_view second = trim(view.substr(comma + 1));

    if (!header_seen) {
      if (first != "score" || second != "label") {
        throw ParseError(source, line_no, "expected header 'score,label'");
      }
      header_seen = true;
      continue;
    }

    double score = 0.0;
    const auto [end, ec] = std::from_chars(first.data(), first.data() + first.size(), score);
    if (ec != std::errc() || end != first.data() + first.size() || first.empty()) {
      throw ParseError(source, line_no, "invalid score '" + std::string(first) + "'");
    }
    if (!std::isfinite(score)) {
      throw ParseError(source, line_no, "non-finite score '" + std::string(first) + "'");
    }

    Label label;
    if (second == "1") {
      label = Label::target;
    } else if (second == "0") {
      label = Label::complement;
    } else {
      throw ParseError(source, line_no, "label must be 0 or 1, got '" + std::string(second) + "'");
    }
    sample.entries.push_back({score, label});
  }
  if (in.bad()) throw ParseError(source, 0, "read failure");
  if (!header_seen) throw ParseError(source, 0, "missing header 'score,label'");
  return sample;
}

LabeledSample read_sample_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_sample(in, path);
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ec == std::errc() ? end : buf.data());
}

void write_sample(std::ostream& out, const LabeledSample& sample) {
  out << "score,label\n";
  for (const auto& e : sample.entries) {
    out << format_double(e.score) << ',' << (e.label == Label::target ? '1' : '0') << '\n';
  }
}

}  // namespace kroc
