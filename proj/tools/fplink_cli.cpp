// fplink: enumerate FPL link patterns, compute ground states, verify, sample and draw.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fplink/fpl.hpp"
#include "fplink/io.hpp"
#include "fplink/patterns.hpp"
#include "fplink/spectra.hpp"
#include "fplink/stochastic.hpp"

namespace {

using namespace fplink;

// Enumeration at or above this size needs --long.
constexpr int kLongEnumeration = 8;
// Largest n whose exact law the sampler will compute on demand.
constexpr int kMaxExactLaw = 8;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  int n = 0;
  std::string out;
  std::string format;
  int workers = 1;
  std::uint64_t seed = 1;
  int capacity = kDefaultFplCapacity;
  bool long_run = false;
  bool no_cache = false;
  std::string cache_dir;

  std::string matrix_out;
  std::uint64_t samples = 1000000;
  std::uint64_t burn_in = 1000;
  int chains = 1;
  std::string pattern;
  std::size_t state_index = 0;
  std::string asm_entries;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : "|") + std::string(f);
  throw UsageError("format '" + cfg.format + "' is not available for " + cfg.subcommand + " (use " + list + ")");
}

void require_n(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError(cfg.subcommand + " needs -n <size> with size >= 1");
}

void require_long(const RunConfig& cfg) {
  if (cfg.n >= kLongEnumeration && !cfg.long_run) {
    throw UsageError("enumerating n = " + std::to_string(cfg.n) + " visits " + asm_count(cfg.n).get_str() +
                     " states; pass --long to run it");
  }
}

// Cache access that degrades to recomputation on any problem.
class Store {
 public:
  explicit Store(const RunConfig& cfg)
      : enabled_(!cfg.no_cache),
        cache_(cfg.cache_dir.empty() ? ArtifactCache::default_root() : std::filesystem::path(cfg.cache_dir)) {}

  std::optional<std::string> get(int n, const std::string& artifact) const {
    if (!enabled_) return std::nullopt;
    auto text = cache_.load(n, artifact);
    if (!text && std::filesystem::exists(cache_.path(n, artifact))) {
      std::cerr << "cache: " << cache_.path(n, artifact).string() << " failed its checksum, recomputing\n";
    }
    return text;
  }

  void put(int n, const std::string& artifact, const std::string& payload) const {
    if (!enabled_) return;
    try {
      cache_.store(n, artifact, payload);
    } catch (const std::exception& e) {
      std::cerr << "cache: not stored (" << e.what() << ")\n";
    }
  }

 private:
  bool enabled_;
  ArtifactCache cache_;
};

PatternHistogram obtain_histogram(const RunConfig& cfg, const Store& store) {
  if (auto text = store.get(cfg.n, "histogram.csv")) {
    try {
      return parse_histogram_csv(*text);
    } catch (const FormatError& e) {
      std::cerr << "cache: unreadable histogram (" << e.what() << "), recomputing\n";
    }
  }
  require_long(cfg);
  auto hist = histogram(cfg.n, {.workers = cfg.workers, .capacity = cfg.capacity});
  store.put(cfg.n, "histogram.csv", histogram_csv(hist));
  return hist;
}

SparseIntMatrix obtain_hamiltonian(const RunConfig& cfg, const Store& store) {
  if (auto text = store.get(cfg.n, "hamiltonian.txt")) {
    try {
      return parse_matrix_text(*text);
    } catch (const FormatError& e) {
      std::cerr << "cache: unreadable matrix (" << e.what() << "), recomputing\n";
    }
  }
  auto h = build_hamiltonian(cfg.n, {.workers = cfg.workers});
  store.put(cfg.n, "hamiltonian.txt", matrix_text(h, cfg.n));
  return h;
}

std::string perron_payload(int n, const PerronResult& perron) {
  auto j = nlohmann::json::parse(vector_json(n, perron.vector));
  j["kernel_dimension"] = perron.nullity;
  return j.dump(2) + "\n";
}

void store_perron(const RunConfig& cfg, const Store& store, const PerronResult& perron) {
  if (perron.ok) store.put(cfg.n, "perron.json", perron_payload(cfg.n, perron));
}

// A cached vector is reused only if it is still a positive eigenvector of h for 2n.
PerronResult obtain_perron(const RunConfig& cfg, const Store& store, const SparseIntMatrix& h) {
  if (auto text = store.get(cfg.n, "perron.json")) {
    try {
      const auto j = nlohmann::json::parse(*text);
      PerronResult cached;
      cached.vector = parse_vector_json(*text);
      cached.nullity = j.value("kernel_dimension", std::size_t{0});
      bool ok = cached.nullity == 1 && cached.vector.size() == h.dim();
      if (ok) {
        const auto hv = h.multiply(cached.vector);
        for (std::size_t i = 0; i < hv.size() && ok; ++i) {
          ok = cached.vector[i] > 0 && hv[i] == cached.vector[i] * (2 * cfg.n);
        }
      }
      if (ok) {
        cached.ok = true;
        return cached;
      }
      std::cerr << "cache: stale ground state, recomputing\n";
    } catch (const std::exception& e) {
      std::cerr << "cache: unreadable ground state (" << e.what() << "), recomputing\n";
    }
  }
  auto perron = perron_vector(h, cfg.n);
  store_perron(cfg, store, perron);
  return perron;
}

int cmd_enumerate(const RunConfig& cfg) {
  require_n(cfg);
  require_format(cfg, {"csv", "json"});
  if (cfg.n > cfg.capacity) {
    throw CapacityError("n = " + std::to_string(cfg.n) + " exceeds the enumeration capacity " +
                        std::to_string(cfg.capacity) + "; raise it with --capacity if you have the time");
  }
  const Store store(cfg);
  const auto hist = obtain_histogram(cfg, store);
  emit(cfg.out, cfg.format == "json" ? histogram_json(hist) : histogram_csv(hist));
  std::cerr << "n=" << hist.n << " total=" << hist.total() << " patterns=" << hist.counts.size() << "\n";
  return 0;
}

int cmd_groundstate(const RunConfig& cfg) {
  require_n(cfg);
  require_format(cfg, {"json", "text"});
  const Store store(cfg);
  const auto h = obtain_hamiltonian(cfg, store);
  if (!cfg.matrix_out.empty()) emit(cfg.matrix_out, matrix_text(h, cfg.n));
  const auto perron = obtain_perron(cfg, store, h);
  if (!perron.ok) {
    std::cerr << "no Perron vector: " << perron.failure << "\n";
    return kExitFail;
  }
  if (cfg.format == "json") {
    emit(cfg.out, vector_json(cfg.n, perron.vector));
  } else {
    std::ostringstream text;
    for (Rank r = 0; r < perron.vector.size(); ++r) {
      text << r << ' ' << unrank(cfg.n, r).to_string() << ' ' << perron.vector[r].get_str() << "\n";
    }
    emit(cfg.out, text.str());
  }
  mpz_class sum = 0;
  mpz_class max = 0;
  for (const auto& x : perron.vector) {
    sum += x;
    if (x > max) max = x;
  }
  std::cerr << "n=" << cfg.n << " dim=" << perron.vector.size() << " sum=" << sum.get_str() << " max=" << max.get_str()
            << "\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  require_n(cfg);
  require_format(cfg, {"json", "text"});
  const Store store(cfg);
  const auto hist = obtain_histogram(cfg, store);
  const auto h = obtain_hamiltonian(cfg, store);
  // The kernel is the object under test, so it is always recomputed here.
  const auto perron = perron_vector(h, cfg.n);
  store_perron(cfg, store, perron);
  const auto report = verify_conjecture(hist, h, perron);
  const auto json = report_json(report);
  store.put(cfg.n, "report.json", json);
  if (cfg.format == "json") {
    emit(cfg.out, json);
  } else {
    std::ostringstream text;
    for (const auto& c : report.checks) text << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.details << "\n";
    emit(cfg.out, text.str());
  }
  std::cerr << "n=" << cfg.n << " " << (report.all_pass() ? "all checks pass" : "some checks FAILED") << "\n";
  return report.all_pass() ? 0 : kExitFail;
}

int cmd_sample(const RunConfig& cfg) {
  require_n(cfg);
  require_format(cfg, {"json"});
  const Store store(cfg);
  std::optional<PatternDistribution> law;
  if (cfg.n <= kMaxExactLaw) {
    if (auto text = store.get(cfg.n, "histogram.csv"); text || cfg.n < kLongEnumeration) {
      law = stationary_law(obtain_histogram(cfg, store));
    } else {
      const auto h = obtain_hamiltonian(cfg, store);
      const auto perron = obtain_perron(cfg, store, h);
      if (perron.ok) law = stationary_law(cfg.n, perron.vector);
    }
  }
  SamplerOptions options{.burn_in = cfg.burn_in, .samples = cfg.samples, .seed = cfg.seed, .chains = cfg.chains};
  const auto report = sample_stationary(cfg.n, options, law);
  emit(cfg.out, sampler_json(report));
  std::cerr << "n=" << cfg.n << " seed=" << cfg.seed << " samples=" << cfg.samples;
  if (report.tv_distance) {
    std::cerr << " tv=" << *report.tv_distance << " tolerance=" << *report.tolerance << (*report.pass ? " pass" : " FAIL");
  }
  std::cerr << "\n";
  return report.pass.value_or(true) ? 0 : kExitFail;
}

AsmMatrix parse_asm(int n, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::int8_t> entries;
  for (int x; in >> x;) entries.push_back(static_cast<std::int8_t>(x));
  if (!in.eof()) throw UsageError("--asm expects space-separated integers");
  if (n < 1) {
    int side = 1;
    while (side * side < static_cast<int>(entries.size())) ++side;
    n = side;
  }
  return AsmMatrix(n, entries);
}

int cmd_render(const RunConfig& cfg) {
  if (!cfg.pattern.empty()) {
    const auto p = LinkPattern::parse(cfg.pattern);
    const auto fmt = cfg.format.empty() ? std::string("svg") : cfg.format;
    if (fmt != "svg") throw UsageError("a pattern renders only as svg");
    emit(cfg.out, render_svg(p));
    return 0;
  }
  std::optional<FplState> state;
  if (!cfg.asm_entries.empty()) {
    state = asm_to_state(parse_asm(cfg.n, cfg.asm_entries));
  } else {
    require_n(cfg);
    if (cfg.n > cfg.capacity) throw CapacityError("n = " + std::to_string(cfg.n) + " exceeds the enumeration capacity");
    std::size_t k = 0;
    for_each_state(cfg.n, [&](const FplState& s) {
      if (k++ == cfg.state_index) state = s;
    }, {.capacity = cfg.capacity});
    if (!state) throw UsageError("--state " + std::to_string(cfg.state_index) + " is out of range");
  }
  const auto fmt = cfg.format.empty() ? std::string("text") : cfg.format;
  if (fmt == "text") {
    emit(cfg.out, render_ascii(*state));
  } else if (fmt == "svg") {
    emit(cfg.out, render_svg(link_pattern_of(*state)));
  } else {
    throw UsageError("format '" + fmt + "' is not available for render (use text|svg)");
  }
  return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg, const char* default_format) {
  cfg.subcommand = sub->get_name();
  cfg.format = default_format;
  sub->add_option("-n", cfg.n, "number of arcs (grid size)");
  sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "output format");
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--capacity", cfg.capacity, "largest n accepted for enumeration")->check(CLI::Range(1, kMaxGrid));
  sub->add_flag("--no-cache", cfg.no_cache, "neither read nor write the artifact cache");
  sub->add_flag("--long", cfg.long_run, "allow long enumerations (n >= 8)");
  sub->add_option("--cache-dir", cfg.cache_dir, "cache root (default $FPLINK_CACHE_DIR or ~/.cache/fplink)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fully packed loop link patterns: enumeration, ground states, verification, sampling"};
  app.require_subcommand(1);

  // One config per subcommand keeps per-command format defaults apart.
  RunConfig enumerate_cfg, ground_cfg, verify_cfg, sample_cfg, render_cfg;

  auto* enumerate = app.add_subcommand("enumerate", "count FPL states by link pattern");
  add_common(enumerate, enumerate_cfg, "csv");

  auto* ground = app.add_subcommand("groundstate", "exact Perron vector of the Hamiltonian");
  add_common(ground, ground_cfg, "json");
  ground->add_option("--matrix", ground_cfg.matrix_out, "also write the Hamiltonian in coordinate form");

  auto* verify = app.add_subcommand("verify", "compare the ground state with the enumeration and run the identities");
  add_common(verify, verify_cfg, "json");

  auto* sample = app.add_subcommand("sample", "Monte Carlo run of the h_i chain");
  add_common(sample, sample_cfg, "json");
  sample->add_option("--seed", sample_cfg.seed, "random seed");
  sample->add_option("--samples", sample_cfg.samples, "recorded steps")->check(CLI::PositiveNumber);
  sample->add_option("--burn-in", sample_cfg.burn_in, "discarded steps");
  sample->add_option("--chains", sample_cfg.chains, "independent chains (seeds seed, seed+1, ...)")
      ->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "draw a state (text) or a link pattern (svg)");
  add_common(render, render_cfg, "");
  render->add_option("--pattern", render_cfg.pattern, "match array, e.g. \"2 1 4 3\"");
  render->add_option("--state", render_cfg.state_index, "index of the state in enumeration order");
  render->add_option("--asm", render_cfg.asm_entries, "alternating sign matrix entries, row by row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(enumerate_cfg);
    if (*ground) return cmd_groundstate(ground_cfg);
    if (*verify) return cmd_verify(verify_cfg);
    if (*sample) return cmd_sample(sample_cfg);
    if (*render) return cmd_render(render_cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
