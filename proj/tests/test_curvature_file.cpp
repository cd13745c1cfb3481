#include "oracle.hpp"
#include "petrov/catalog.hpp"
#include "petrov/curvature_file.hpp"
#include "petrov/errors.hpp"

#include <doctest.h>

#include <cstring>
#include <limits>

using namespace petrov;

namespace {

const char* kCanonical =
    "# name: product_s2xs2\n"
    "# params: k1=1 k2=2\n"
    "# note: unknown keys survive\n"
    "version 1\n"
    "signature riemannian\n"
    "-1 0 0 0 0 0\n"
    "0 0 0 0 0\n"
    "0 0 0 0\n"
    "-2 0 0\n"
    "0 0\n"
    "0\n";

ErrorCode code_of(const std::string& text, int* line = nullptr, int* column = nullptr) {
  try {
    parse_curvature_file(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    if (column) *column = e.column();
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("canonical files round-trip byte for byte") {
  const CurvatureFile f = parse_curvature_file(kCanonical);
  CHECK(serialize(f) == kCanonical);
  CHECK(f.metadata.size() == 3);
  CHECK(f.metadata[2].first == "note");
  CHECK(f.tensor().sym6() == gen_product_s2xs2(1, 2).sym6());
}

TEST_CASE("doubles round-trip bit-exactly") {
  std::mt19937_64 rng(50);
  std::uniform_int_distribution<int> ex(-300, 300);
  for (int n = 0; n < 200; ++n) {
    CurvatureFile f;
    for (double& x : f.upper) x = oracle::random_vec(rng)[0] * std::pow(10.0, ex(rng));
    f.upper[0] = std::numeric_limits<double>::denorm_min();
    f.upper[1] = -0.0;
    f.upper[2] = std::numeric_limits<double>::max();
    const CurvatureFile g = parse_curvature_file(serialize(f));
    CHECK(std::memcmp(f.upper.data(), g.upper.data(), sizeof f.upper) == 0);
  }
}

TEST_CASE("Lorentzian files carry T") {
  CurvatureFile f = CurvatureFile::from_tensor(gen_star_h_einstein(1, StarHVariant::LorentzianG));
  const std::string text = serialize(f);
  CHECK(text.find("signature lorentzian\nT 1\n") != std::string::npos);
  CHECK(parse_curvature_file(text).tensor().frame_signature() == Signature::Lorentzian);

  std::string no_t = text;
  no_t.erase(no_t.find("T 1\n"), 4);
  CHECK(code_of(no_t) == ErrorCode::ParseError);
}

TEST_CASE("malformed files") {
  const std::string head = "version 1\nsignature riemannian\n";
  const std::string rows = "1 2 3 4 5 6\n7 8 9 10 11\n12 13 14 15\n16 17 18\n19 20\n21\n";
  CHECK_NOTHROW(parse_curvature_file(head + rows));

  // 20 entries.
  CHECK(code_of(head + "1 2 3 4 5 6\n7 8 9 10 11\n12 13 14 15\n16 17 18\n19 20\n") ==
        ErrorCode::WrongEntryCount);
  CHECK(code_of(head + rows + "22\n") == ErrorCode::WrongEntryCount);
  CHECK(code_of("version 1\nsignature euclidean\n" + rows) == ErrorCode::UnknownSignature);
  CHECK(code_of("version 2\nsignature riemannian\n" + rows) == ErrorCode::VersionMismatch);
  CHECK(code_of("signature riemannian\n" + rows) == ErrorCode::ParseError);

  int line = 0, column = 0;
  CHECK(code_of(head + "1 2 3 x 5 6\n7 8 9 10 11\n12 13 14 15\n16 17 18\n19 20\n21\n", &line, &column) ==
        ErrorCode::ParseError);
  CHECK(line == 3);
  CHECK(column == 7);

  // 21 entries in the wrong shape.
  CHECK(code_of(head + "1 2 3 4 5 6 7\n8 9 10 11\n12 13 14 15\n16 17 18\n19 20\n21\n", &line) ==
        ErrorCode::ParseError);
  CHECK(line == 3);
  CHECK(code_of(head + "# no colon here\n" + rows) == ErrorCode::ParseError);
  CHECK(code_of(head + "1 2 3 4 5 nan\n7 8 9 10 11\n12 13 14 15\n16 17 18\n19 20\n21\n") ==
        ErrorCode::ParseError);
}

TEST_CASE("blank lines and CRLF are tolerated") {
  std::string text = kCanonical;
  std::string crlf;
  for (char c : text) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  CHECK(serialize(parse_curvature_file("\n" + crlf + "\n")) == kCanonical);
}

TEST_CASE("digest ignores metadata and tracks data") {
  CurvatureFile f = parse_curvature_file(kCanonical);
  const std::string d = digest(f);
  CHECK(d.size() == 16);
  f.metadata.clear();
  CHECK(digest(f) == d);
  f.upper[20] = 1e-300;
  CHECK(digest(f) != d);
}
