#include "vvlab/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace vvlab::io {

namespace {
constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int decode_char(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}
}  // namespace

std::string base64_encode(const unsigned char* data, std::size_t len) {
  std::string out;
  out.reserve((len + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 3 <= len; i += 3) {
    const unsigned v = (unsigned(data[i]) << 16) | (unsigned(data[i + 1]) << 8) |
                       unsigned(data[i + 2]);
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back(kAlphabet[v & 63]);
  }
  const std::size_t rem = len - i;
  if (rem == 1) {
    const unsigned v = unsigned(data[i]) << 16;
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back('=');
    out.push_back('=');
  } else if (rem == 2) {
    const unsigned v = (unsigned(data[i]) << 16) | (unsigned(data[i + 1]) << 8);
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    out.push_back(kAlphabet[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::vector<unsigned char> base64_decode(std::string_view s) {
  std::vector<unsigned char> out;
  out.reserve(s.size() / 4 * 3);
  unsigned buffer = 0;
  int bits = 0;
  for (char c : s) {
    if (c == '=' || c == '\n' || c == '\r') continue;
    const int v = decode_char(c);
    if (v < 0) throw std::invalid_argument("base64_decode: invalid character");
    buffer = (buffer << 6) | unsigned(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<unsigned char>((buffer >> bits) & 0xFF));
    }
  }
  return out;
}

std::string encode_field(const Field& f) {
  std::vector<unsigned char> bytes(f.size() * sizeof(double));
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto raw = std::bit_cast<std::uint64_t>(f[i]);
    for (int b = 0; b < 8; ++b)
      bytes[i * 8 + static_cast<std::size_t>(b)] =
          static_cast<unsigned char>((raw >> (8 * b)) & 0xFF);
  }
  return base64_encode(bytes.data(), bytes.size());
}

Field decode_field(std::string_view b64) {
  const auto bytes = base64_decode(b64);
  if (bytes.size() % 8 != 0) throw std::invalid_argument("decode_field: bad payload size");
  Field f(bytes.size() / 8);
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::uint64_t raw = 0;
    for (int b = 7; b >= 0; --b)
      raw = (raw << 8) | bytes[i * 8 + static_cast<std::size_t>(b)];
    f[i] = std::bit_cast<double>(raw);
  }
  return f;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> meta_lines(const PhysParams& p, const Grid& g,
                                    const std::vector<std::string>& extra) {
  std::vector<std::string> out;
  out.push_back("version = " VVLAB_VERSION);
  out.push_back("source = " VVLAB_GIT_DESC);
  out.push_back("A = " + format_double(p.A));
  out.push_back("gamma = " + format_double(p.gamma));
  out.push_back("delta = " + format_double(p.delta));
  out.push_back("alpha = " + format_double(p.alpha));
  out.push_back("beta = " + format_double(p.beta));
  out.push_back("epsilon = " + format_double(p.epsilon));
  out.push_back("eta = " + format_double(p.eta));
  out.push_back("grid.length = " + format_double(g.length));
  out.push_back("grid.n = " + std::to_string(g.n));
  for (const auto& e : extra) out.push_back(e);
  return out;
}

void CsvWriter::comment(const std::string& line) { os_ << "# " << line << "\n"; }

void CsvWriter::comments(const std::vector<std::string>& lines) {
  for (const auto& l : lines) comment(l);
}

void CsvWriter::header(const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i)
    os_ << cols[i] << (i + 1 < cols.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    os_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
}

void CsvWriter::row_values(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  row(cells);
}

void write_trajectory(std::ostream& os, const Trajectory& traj, const PhysParams& p) {
  nlohmann::json meta;
  meta["meta"] = {{"version", VVLAB_VERSION},
                  {"A", p.A},
                  {"gamma", p.gamma},
                  {"delta", p.delta},
                  {"alpha", p.alpha},
                  {"beta", p.beta},
                  {"epsilon", p.epsilon},
                  {"eta", p.eta},
                  {"grid_length", traj.grid().length},
                  {"grid_n", traj.grid().n},
                  {"frames", traj.frames.size()}};
  if (traj.failure) {
    meta["meta"]["failed_at"] = traj.failure->time;
    meta["meta"]["failure"] = traj.failure->reason;
  }
  os << meta.dump() << "\n";
  for (const Frame& f : traj.frames) {
    nlohmann::json line;
    line["t"] = f.t;
    line["vphi"] = encode_field(f.state.vphi);
    line["phi"] = encode_field(f.state.phi);
    line["u"] = encode_field(f.state.u);
    os << line.dump() << "\n";
  }
}

Trajectory read_trajectory(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_trajectory: empty stream");
  const auto meta = nlohmann::json::parse(line);
  const double length = meta.at("meta").at("grid_length").get<double>();
  const std::size_t n = meta.at("meta").at("grid_n").get<std::size_t>();
  Grid g(length, n);
  Trajectory traj;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    Frame f;
    f.t = j.at("t").get<double>();
    f.state.grid = g;
    f.state.vphi = decode_field(j.at("vphi").get<std::string>());
    f.state.phi = decode_field(j.at("phi").get<std::string>());
    f.state.u = decode_field(j.at("u").get<std::string>());
    traj.frames.push_back(std::move(f));
  }
  if (meta.at("meta").contains("failed_at"))
    traj.failure = Failure{meta.at("meta").at("failed_at").get<double>(),
                           meta.at("meta").at("failure").get<std::string>()};
  return traj;
}

}  // namespace vvlab::io
