#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vvlab/params.hpp"
#include "vvlab/stepper.hpp"

namespace vvlab::io {

std::string base64_encode(const unsigned char* data, std::size_t len);
std::vector<unsigned char> base64_decode(std::string_view s);

/// Little-endian 64-bit float packing of a field.
std::string encode_field(const Field& f);
Field decode_field(std::string_view b64);

/// Deterministic double formatting used in every text output ("%.17g").
std::string format_double(double v);

/// "# key = value" comment lines recording parameters, grid and version.
std::vector<std::string> meta_lines(const PhysParams& p, const Grid& g,
                                    const std::vector<std::string>& extra = {});

/// Minimal deterministic CSV writer: comment block, one header, rows.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}
  void comment(const std::string& line);
  void comments(const std::vector<std::string>& lines);
  void header(const std::vector<std::string>& cols);
  void row(const std::vector<std::string>& cells);
  void row_values(const std::vector<double>& values);

 private:
  std::ostream& os_;
};

/// Trajectory serialization: one JSON metadata line followed by one JSON
/// object per frame with base-64 little-endian float64 fields. Bit-exact
/// round trip.
void write_trajectory(std::ostream& os, const Trajectory& traj, const PhysParams& p);
Trajectory read_trajectory(std::istream& is);

}  // namespace vvlab::io
