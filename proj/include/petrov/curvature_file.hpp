#pragma once

// Text format for one curvature tensor:
//
//   # name: product_s2xs2
//   # params: k1=1 k2=2
//   version 1
//   signature riemannian
//   T 1
//   -1 0 0 0 0 0
//   0 0 0 0 0
//   0 0 0 0
//   -2 0 0
//   0 0
//   0
//
// `# key: value` lines are metadata and may appear anywhere; they are kept in
// order. `version` comes first, then `signature` (riemannian, lorentzian or
// split), an optional `T 1` (required for lorentzian) and the rows of the
// upper triangle of sym6. Blank lines are ignored. Numbers are written in
// shortest round-trip form, so parse(serialize(f)) == f bit for bit.

#include "petrov/curvature.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace petrov {

inline constexpr int kCurvatureFileVersion = 1;

struct CurvatureFile {
  int version = kCurvatureFileVersion;
  Signature frame = Signature::Riemannian;
  std::optional<int> t_slot;  // 1-based frame index of T
  std::array<double, 21> upper{};
  std::vector<std::pair<std::string, std::string>> metadata;

  CurvatureTensor tensor() const;
  static CurvatureFile from_tensor(const CurvatureTensor& r);
};

/// Throws ParseError (ParseError, WrongEntryCount, UnknownSignature or
/// VersionMismatch code) with the 1-based line and column of the problem.
CurvatureFile parse_curvature_file(std::string_view text);
std::string serialize(const CurvatureFile& file);

/// FNV-1a 64 of the serialized data lines (metadata excluded), as 16 hex
/// digits.
std::string digest(const CurvatureFile& file);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace petrov
