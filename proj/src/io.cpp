#include "fplink/io.hpp"

#include <zlib.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace fplink {

using json = nlohmann::json;

namespace {

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

void check_version(const json& j) {
  if (!j.contains("format_version") || j["format_version"] != kFormatVersion) {
    throw FormatError("unsupported or missing format_version");
  }
}

json big_to_json(const mpz_class& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return x.get_si();
  return x.get_str();
}

mpz_class big_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    mpz_class x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad integer string");
    return x;
  }
  throw FormatError("expected an integer");
}

PatternHistogram checked_histogram(int n, std::vector<std::uint64_t> counts) {
  if (n < 1 || n > kMaxRankedArcs || counts.size() != pattern_count(n)) {
    throw FormatError("histogram does not cover all Catalan(n) ranks");
  }
  return {n, std::move(counts)};
}

}  // namespace

std::string histogram_csv(const PatternHistogram& hist) {
  std::ostringstream out;
  out << "# format_version=" << kFormatVersion << "\n";
  out << "# n=" << hist.n << "\n";
  out << "# total=" << hist.total() << "\n";
  out << "rank,match_array,count\n";
  for (Rank r = 0; r < hist.counts.size(); ++r) {
    out << r << "," << unrank(hist.n, r).to_string() << "," << hist.counts[r] << "\n";
  }
  return out.str();
}

namespace {

PatternHistogram parse_csv_rows(std::string_view text) {
  int n = 0;
  int version = 0;
  std::optional<std::uint64_t> total;
  std::vector<std::uint64_t> counts;
  bool header_seen = false;
  for (const auto& line : lines_of(text)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      const std::string value = line.substr(eq + 1);
      if (key == "format_version") version = std::stoi(value);
      if (key == "n") n = std::stoi(value);
      if (key == "total") total = std::stoull(value);
      continue;
    }
    if (!header_seen) {
      if (line != "rank,match_array,count") throw FormatError("unexpected CSV header: " + line);
      header_seen = true;
      continue;
    }
    const auto a = line.find(',');
    const auto b = line.rfind(',');
    if (a == std::string::npos || a == b) throw FormatError("bad CSV row: " + line);
    const auto r = std::stoul(line.substr(0, a));
    const auto pattern = LinkPattern::parse(line.substr(a + 1, b - a - 1));
    if (r != counts.size() || rank(pattern) != r || pattern.arcs() != n) {
      throw FormatError("CSV row out of canonical order: " + line);
    }
    counts.push_back(std::stoull(line.substr(b + 1)));
  }
  if (version != kFormatVersion) throw FormatError("unsupported or missing format_version");
  auto hist = checked_histogram(n, std::move(counts));
  if (total && *total != hist.total()) throw FormatError("total does not match the rows");
  return hist;
}

}  // namespace

PatternHistogram parse_histogram_csv(std::string_view text) {
  try {
    return parse_csv_rows(text);
  } catch (const std::logic_error& e) {
    // Number conversions and pattern parsing.
    throw FormatError(std::string("bad histogram CSV: ") + e.what());
  }
}

std::string histogram_json(const PatternHistogram& hist) {
  json j;
  j["format_version"] = kFormatVersion;
  j["n"] = hist.n;
  j["total"] = hist.total();
  json counts = json::object();
  json patterns = json::object();
  for (Rank r = 0; r < hist.counts.size(); ++r) {
    counts[std::to_string(r)] = hist.counts[r];
    patterns[std::to_string(r)] = unrank(hist.n, r).to_string();
  }
  j["counts"] = std::move(counts);
  j["patterns"] = std::move(patterns);
  return j.dump(2) + "\n";
}

PatternHistogram parse_histogram_json(std::string_view text) {
  const auto j = parse_json(text);
  check_version(j);
  try {
    const int n = j.at("n").get<int>();
    const auto& map = j.at("counts");
    std::vector<std::uint64_t> counts(map.size(), 0);
    std::vector<char> seen(map.size(), 0);
    for (const auto& [key, value] : map.items()) {
      const auto r = std::stoul(key);
      if (r >= counts.size() || seen[r]) throw FormatError("bad rank key " + key);
      seen[r] = 1;
      counts[r] = value.get<std::uint64_t>();
    }
    auto hist = checked_histogram(n, std::move(counts));
    if (j.contains("total") && j.at("total").get<std::uint64_t>() != hist.total()) {
      throw FormatError("total does not match the counts");
    }
    return hist;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad histogram JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw FormatError(std::string("bad histogram JSON: ") + e.what());
  }
}

std::string asm_text(std::span<const AsmMatrix> matrices) {
  std::ostringstream out;
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    if (k > 0) out << "\n";
    const auto& m = matrices[k];
    for (int r = 0; r < m.size(); ++r) {
      for (int c = 0; c < m.size(); ++c) {
        if (c > 0) out << ' ';
        out << m.at(r, c);
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string matrix_text(const SparseIntMatrix& h, int n) {
  const auto sums = h.column_sums();
  json header;
  header["format_version"] = kFormatVersion;
  header["n"] = n;
  header["dim"] = h.dim();
  const bool uniform = !sums.empty() && std::all_of(sums.begin(), sums.end(), [&](auto s) { return s == sums[0]; });
  header["column_sum"] = uniform ? json(sums[0]) : json(nullptr);
  std::ostringstream out;
  out << header.dump() << "\n";
  for (const auto& e : h.entries()) out << e.row << ' ' << e.col << ' ' << e.value << "\n";
  return out.str();
}

SparseIntMatrix parse_matrix_text(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw FormatError("empty matrix file");
  const auto header = parse_json(lines[0]);
  check_version(header);
  Rank dim = 0;
  try {
    dim = header.at("dim").get<Rank>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad matrix header: ") + e.what());
  }
  std::vector<MatrixEntry> entries;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k].empty()) continue;
    std::istringstream in(lines[k]);
    MatrixEntry e{};
    if (!(in >> e.row >> e.col >> e.value)) throw FormatError("bad matrix line: " + lines[k]);
    entries.push_back(e);
  }
  try {
    SparseIntMatrix h(dim, std::move(entries));
    if (header.contains("column_sum") && header["column_sum"].is_number_unsigned()) {
      const auto expected = header["column_sum"].get<std::uint64_t>();
      for (auto s : h.column_sums()) {
        if (s != expected) throw FormatError("column sums disagree with header");
      }
    }
    return h;
  } catch (const StructureError& e) {
    throw FormatError(e.what());
  }
}

std::string vector_json(int n, const BigIntVector& v) {
  json j;
  j["format_version"] = kFormatVersion;
  j["n"] = n;
  j["dim"] = v.size();
  json comps = json::array();
  for (const auto& x : v) comps.push_back(big_to_json(x));
  j["components"] = std::move(comps);
  return j.dump(2) + "\n";
}

BigIntVector parse_vector_json(std::string_view text) {
  const auto j = parse_json(text);
  check_version(j);
  if (!j.contains("components") || !j["components"].is_array()) throw FormatError("missing components array");
  BigIntVector v;
  for (const auto& x : j["components"]) v.push_back(big_from_json(x));
  if (j.contains("dim") && !(j["dim"].is_number_unsigned() && j["dim"].get<std::size_t>() == v.size())) {
    throw FormatError("dim does not match components");
  }
  return v;
}

std::string report_json(const VerificationReport& report) {
  json j;
  j["format_version"] = kFormatVersion;
  j["n"] = report.n;
  j["pass"] = report.all_pass();
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"n", c.n}, {"pass", c.pass}, {"details", c.details}});
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string sampler_json(const SamplerReport& report) {
  json j;
  j["format_version"] = kFormatVersion;
  j["n"] = report.n;
  j["seed"] = report.seed;
  j["burn_in"] = report.burn_in;
  j["samples"] = report.samples;
  json empirical = json::object();
  for (Rank r = 0; r < report.empirical.size(); ++r) empirical[std::to_string(r)] = report.empirical[r];
  j["empirical"] = std::move(empirical);
  j["tv_distance"] = report.tv_distance ? json(*report.tv_distance) : json(nullptr);
  j["tolerance"] = report.tolerance ? json(*report.tolerance) : json(nullptr);
  j["pass"] = report.pass ? json(*report.pass) : json(nullptr);
  return j.dump(2) + "\n";
}

std::string render_ascii(const FplState& state) {
  const int n = state.size();
  const int height = 2 * n + 3;
  const int width = 4 * n + 5;
  std::vector<std::string> canvas(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' '));
  auto y_of = [](int r) { return 2 * r + 2; };
  auto x_of = [](int c) { return 4 * c + 4; };
  auto put = [&](int y, int x, char ch) { canvas[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = ch; };

  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) put(y_of(r), x_of(c), 'o');
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c <= n; ++c) {
      if (!state.has_horizontal(r, c)) continue;
      for (int x = x_of(c - 1) + 1; x < x_of(c); ++x) put(y_of(r), x, '-');
    }
  }
  for (int r = 0; r <= n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (state.has_vertical(r, c)) put(y_of(r) - 1, x_of(c), '|');
    }
  }
  for (int k = 0; k < n; ++k) {
    put(0, x_of(k), stub_label(n, {Side::Top, k}) ? '*' : '.');
    put(height - 1, x_of(k), stub_label(n, {Side::Bottom, k}) ? '*' : '.');
    put(y_of(k), 0, stub_label(n, {Side::Left, k}) ? '*' : '.');
    put(y_of(k), width - 1, stub_label(n, {Side::Right, k}) ? '*' : '.');
  }
  std::string out;
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  out += "link-pattern: " + link_pattern_of(state).to_string() + "\n";
  return out;
}

std::string render_svg(const LinkPattern& pattern) {
  constexpr double kSize = 240.0;
  constexpr double kCenter = kSize / 2;
  constexpr double kRadius = 90.0;
  const int points = pattern.points();
  auto at = [&](int position, double radius) {
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * (position - 1) / points;
    return std::pair{kCenter + radius * std::cos(angle), kCenter + radius * std::sin(angle)};
  };
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  out << "  <circle cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\"" << kRadius
      << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (auto [a, b] : pattern.arc_list()) {
    const auto [x1, y1] = at(a, kRadius);
    const auto [x2, y2] = at(b, kRadius);
    out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (int i = 1; i <= points; ++i) {
    const auto [x, y] = at(i, kRadius);
    const auto [lx, ly] = at(i, kRadius + 14);
    out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"black\"/>\n";
    out << "  <text x=\"" << lx << "\" y=\"" << ly
        << "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"central\">" << i << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::uint32_t crc32_of(std::string_view data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size()));
  return static_cast<std::uint32_t>(crc);
}

std::filesystem::path ArtifactCache::default_root() {
  if (const char* dir = std::getenv("FPLINK_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "fplink";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "fplink";
  return std::filesystem::path(".fplink-cache");
}

std::filesystem::path ArtifactCache::path(int n, std::string_view artifact) const {
  return root_ / ("n" + std::to_string(n)) / std::string(artifact);
}

std::optional<std::string> ArtifactCache::load(int n, std::string_view artifact) const {
  std::ifstream in(path(n, artifact), std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::ostringstream body;
  body << in.rdbuf();
  std::string payload = body.str();

  std::istringstream h(header);
  std::string magic, version, crc;
  h >> magic >> version >> crc;
  if (magic != "fplink-cache" || version != "format_version=" + std::to_string(kFormatVersion) ||
      crc.rfind("crc32=", 0) != 0) {
    return std::nullopt;
  }
  std::uint32_t expected = 0;
  try {
    expected = static_cast<std::uint32_t>(std::stoul(crc.substr(6), nullptr, 16));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (crc32_of(payload) != expected) return std::nullopt;
  return payload;
}

void ArtifactCache::store(int n, std::string_view artifact, std::string_view payload) const {
  const auto file = path(n, artifact);
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << "fplink-cache format_version=" << kFormatVersion << " crc32=" << std::hex << std::setw(8)
        << std::setfill('0') << crc32_of(payload) << "\n";
    out << payload;
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace fplink
