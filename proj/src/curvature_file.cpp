#include "petrov/curvature_file.hpp"

#include "petrov/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace petrov {

CurvatureTensor CurvatureFile::tensor() const {
  return CurvatureTensor::from_upper(std::span<const double, 21>(upper), frame);
}

CurvatureFile CurvatureFile::from_tensor(const CurvatureTensor& r) {
  CurvatureFile f;
  f.frame = r.frame_signature();
  f.upper = r.upper();
  if (f.frame == Signature::Lorentzian) f.t_slot = 1;
  return f;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(ErrorCode code, int line, int column, const std::string& what) {
  throw ParseError(code, line, column, what);
}

double parse_number(const Token& t, int line) {
  double x = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(x)) {
    fail(ErrorCode::ParseError, line, t.column, "not a finite number: '" + std::string(t.text) + "'");
  }
  return x;
}

int parse_int(const Token& t, int line) {
  int x = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  const auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc() || res.ptr != last) {
    fail(ErrorCode::ParseError, line, t.column, "not an integer: '" + std::string(t.text) + "'");
  }
  return x;
}

}  // namespace

CurvatureFile parse_curvature_file(std::string_view text) {
  enum class Stage { Version, Signature, TOrRows, Rows };
  CurvatureFile out;
  Stage stage = Stage::Version;
  std::vector<double> entries;
  int row = 0;
  int last_line = 0;
  int first_bad_row_line = 0;
  int first_bad_row_column = 1;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::string_view stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped.front() == '#') {
      const std::string_view body = stripped.substr(1);
      const std::size_t colon = body.find(':');
      const std::string_view key = colon == std::string_view::npos ? "" : trim(body.substr(0, colon));
      if (key.empty()) {
        fail(ErrorCode::ParseError, line_no, 1, "metadata lines read '# key: value'");
      }
      out.metadata.emplace_back(std::string(key), std::string(trim(body.substr(colon + 1))));
      continue;
    }

    const std::vector<Token> tokens = tokenize(line);
    switch (stage) {
      case Stage::Version:
        if (tokens[0].text != "version" || tokens.size() != 2) {
          fail(ErrorCode::ParseError, line_no, tokens[0].column, "expected 'version <n>'");
        }
        out.version = parse_int(tokens[1], line_no);
        if (out.version != kCurvatureFileVersion) {
          fail(ErrorCode::VersionMismatch, line_no, tokens[1].column,
               "version " + std::to_string(out.version) + " is not supported (expected " +
                   std::to_string(kCurvatureFileVersion) + ")");
        }
        stage = Stage::Signature;
        continue;
      case Stage::Signature: {
        if (tokens[0].text != "signature" || tokens.size() != 2) {
          fail(ErrorCode::ParseError, line_no, tokens[0].column, "expected 'signature <tag>'");
        }
        const auto sig = parse_signature(tokens[1].text);
        if (!sig) {
          fail(ErrorCode::UnknownSignature, line_no, tokens[1].column,
               "unknown signature '" + std::string(tokens[1].text) + "'");
        }
        out.frame = *sig;
        stage = Stage::TOrRows;
        continue;
      }
      case Stage::TOrRows:
        if (tokens[0].text == "T") {
          if (tokens.size() != 2) fail(ErrorCode::ParseError, line_no, 1, "expected 'T 1'");
          const int t = parse_int(tokens[1], line_no);
          if (t != 1) {
            fail(ErrorCode::ParseError, line_no, tokens[1].column,
                 "T must be frame vector 1, got " + std::to_string(t));
          }
          out.t_slot = t;
          stage = Stage::Rows;
          continue;
        }
        if (out.frame == Signature::Lorentzian) {
          fail(ErrorCode::ParseError, line_no, 1, "lorentzian files need a 'T 1' line");
        }
        stage = Stage::Rows;
        [[fallthrough]];
      case Stage::Rows: {
        const int expected = 6 - row;
        if (first_bad_row_line == 0 && static_cast<int>(tokens.size()) != expected) {
          first_bad_row_line = line_no;
          first_bad_row_column =
              expected > 0 && static_cast<int>(tokens.size()) > expected
                  ? tokens[static_cast<std::size_t>(expected)].column
                  : static_cast<int>(line.size()) + 1;
        }
        for (const Token& t : tokens) entries.push_back(parse_number(t, line_no));
        ++row;
        last_line = line_no;
        continue;
      }
    }
  }

  if (stage == Stage::Version) fail(ErrorCode::ParseError, line_no, 1, "missing 'version' line");
  if (stage == Stage::Signature) fail(ErrorCode::ParseError, line_no, 1, "missing 'signature' line");
  if (entries.size() != 21) {
    fail(ErrorCode::WrongEntryCount, last_line == 0 ? line_no : last_line, 1,
         "expected 21 entries, found " + std::to_string(entries.size()));
  }
  if (first_bad_row_line != 0) {
    fail(ErrorCode::ParseError, first_bad_row_line, first_bad_row_column,
         "rows must hold 6, 5, 4, 3, 2, 1 entries");
  }
  std::copy(entries.begin(), entries.end(), out.upper.begin());
  return out;
}

namespace {

std::string data_lines(const CurvatureFile& file) {
  std::string out = "version " + std::to_string(file.version) + "\n";
  out += "signature " + std::string(to_string(file.frame)) + "\n";
  if (file.t_slot) out += "T " + std::to_string(*file.t_slot) + "\n";
  std::size_t n = 0;
  for (int r = 0; r < 6; ++r) {
    for (int c = r; c < 6; ++c) {
      if (c > r) out += ' ';
      out += format_double(file.upper[n++]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string serialize(const CurvatureFile& file) {
  std::string out;
  for (const auto& [key, value] : file.metadata) {
    out += "# " + key + ":";
    if (!value.empty()) out += " " + value;
    out += '\n';
  }
  return out + data_lines(file);
}

std::string digest(const CurvatureFile& file) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : data_lines(file)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace petrov
