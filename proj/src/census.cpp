#include "richwords/census.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "richwords/eertree.hpp"
#include "richwords/richfact.hpp"
#include "richwords/version.hpp"

namespace richwords::census {

namespace {

struct DfsCtx {
  unsigned q = 2;
  std::size_t n_max = 1;
  bool canonical = false;
};

// Depth-first walk over rich extensions of the current word, lexicographic
// order, fn(word, weight, distinct_used) on every visited word. The eertree
// only ever appends; backtracking rebuilds it from the shortened word.
template <typename Fn>
void walk(Eertree& tree, Word& w, unsigned used, std::uint64_t weight, const DfsCtx& ctx,
          Fn&& fn) {
  if (w.size() >= ctx.n_max) return;
  const unsigned limit =
      ctx.canonical ? std::min(ctx.q, used + 1) : ctx.q;
  for (Symbol c = 0; c < limit; ++c) {
    if (!tree.would_create(c)) continue;  // extension is not rich; subtree is empty
    const bool new_letter = ctx.canonical && c == used;
    const unsigned next_used = used + (new_letter ? 1 : 0);
    const std::uint64_t next_weight = new_letter ? weight * (ctx.q - used) : weight;
    tree.push(c);
    w.push_back(c);
    fn(static_cast<const Word&>(w), next_weight, next_used);
    walk(tree, w, next_used, next_weight, ctx, fn);
    w.pop_back();
    tree.assign(w);
  }
}

struct PartialRecord {
  std::uint64_t rwc = 0;
  std::uint32_t max_luf = 0;
  std::uint32_t min_luf = std::numeric_limits<std::uint32_t>::max();
  std::optional<std::uint32_t> max_pl;
  Word witness;
  std::vector<std::uint64_t> max_fc;
};

struct Accum {
  std::vector<PartialRecord> per_length;  // index n-1
  explicit Accum(std::size_t n_max) : per_length(n_max) {}

  void add_word(const Word& w, std::uint64_t weight, unsigned pl_max_n) {
    PartialRecord& rec = per_length[w.size() - 1];
    rec.rwc += weight;
    const auto p = static_cast<std::uint32_t>(detail::ups_ranges_unchecked(w).size());
    if (p > rec.max_luf || (p == rec.max_luf && (rec.witness.empty() || lex_less(w, rec.witness)))) {
      rec.max_luf = p;
      rec.witness = w;
    }
    rec.min_luf = std::min(rec.min_luf, p);
    if (w.size() <= pl_max_n) {
      const auto pl = static_cast<std::uint32_t>(palindromic_length(w));
      rec.max_pl = std::max(rec.max_pl.value_or(0), pl);
    }
    const auto profile = factor_complexity_profile(w);
    if (rec.max_fc.size() < profile.size()) rec.max_fc.resize(profile.size(), 0);
    for (std::size_t m = 0; m < profile.size(); ++m) {
      rec.max_fc[m] = std::max(rec.max_fc[m], profile[m]);
    }
  }

  // all merge operations commute, so the worker count cannot affect results
  void merge(const Accum& other) {
    for (std::size_t i = 0; i < per_length.size(); ++i) {
      PartialRecord& a = per_length[i];
      const PartialRecord& b = other.per_length[i];
      a.rwc += b.rwc;
      if (b.max_luf > a.max_luf ||
          (b.max_luf == a.max_luf && !b.witness.empty() &&
           (a.witness.empty() || lex_less(b.witness, a.witness)))) {
        a.max_luf = b.max_luf;
        a.witness = b.witness;
      }
      a.min_luf = std::min(a.min_luf, b.min_luf);
      if (b.max_pl) a.max_pl = std::max(a.max_pl.value_or(0), *b.max_pl);
      if (a.max_fc.size() < b.max_fc.size()) a.max_fc.resize(b.max_fc.size(), 0);
      for (std::size_t m = 0; m < b.max_fc.size(); ++m) {
        a.max_fc[m] = std::max(a.max_fc[m], b.max_fc[m]);
      }
    }
  }
};

struct Checkpoint {
  Word word;
  std::uint64_t weight = 1;
  unsigned used = 0;
};

std::string real17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

EnumerationStats enumerate_rich(unsigned q, unsigned n_max, const RichVisitor& visit,
                                bool canonical) {
  if (q == 0) throw std::invalid_argument("alphabet size q must be at least 1");
  if (n_max == 0) throw std::invalid_argument("n_max must be at least 1");
  EnumerationStats stats;
  stats.rich_counts.assign(n_max, 0);
  DfsCtx ctx{q, n_max, canonical};
  Eertree tree(q);
  Word w;
  walk(tree, w, 0, 1, ctx, [&](const Word& word, std::uint64_t weight, unsigned) {
    stats.rich_counts[word.size() - 1] += weight;
    ++stats.words_visited;
    if (visit) visit(word, weight);
  });
  return stats;
}

CensusReport run_census(unsigned q, unsigned n_max, const bounds::BoundParams& params,
                        const CensusOptions& opts) {
  if (q == 0) throw std::invalid_argument("alphabet size q must be at least 1");
  if (n_max == 0) throw std::invalid_argument("n_max must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  const unsigned depth = std::min<unsigned>(std::max(opts.checkpoint_depth, 1u), n_max);
  Accum total(n_max);
  std::vector<Checkpoint> checkpoints;

  // phase 1: serial walk down to the checkpoint depth
  {
    DfsCtx ctx{q, depth, opts.canonical};
    Eertree tree(q);
    Word w;
    walk(tree, w, 0, 1, ctx, [&](const Word& word, std::uint64_t weight, unsigned used) {
      total.add_word(word, weight, opts.pl_max_n);
      if (word.size() == depth && depth < n_max) {
        checkpoints.push_back(Checkpoint{word, weight, used});
      }
    });
  }

  // phase 2: checkpoint subtrees across workers, each worker rebuilding the
  // checkpoint prefix once and owning a private eertree and accumulator
  if (!checkpoints.empty()) {
    unsigned workers = opts.workers == 0 ? std::thread::hardware_concurrency() : opts.workers;
    workers = std::max(1u, std::min<unsigned>(workers, checkpoints.size()));
    std::vector<Accum> parts(workers, Accum(n_max));
    std::atomic<std::size_t> next{0};
    auto body = [&](unsigned worker) {
      DfsCtx ctx{q, n_max, opts.canonical};
      Eertree tree(q);
      Word w;
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= checkpoints.size()) break;
        const Checkpoint& cp = checkpoints[idx];
        w = cp.word;
        tree.assign(w);
        walk(tree, w, cp.used, cp.weight, ctx,
             [&](const Word& word, std::uint64_t weight, unsigned) {
               parts[worker].add_word(word, weight, opts.pl_max_n);
             });
      }
    };
    if (workers == 1) {
      body(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (unsigned i = 0; i < workers; ++i) pool.emplace_back(body, i);
      for (auto& th : pool) th.join();
    }
    for (const Accum& part : parts) total.merge(part);
  }

  CensusReport report;
  report.q = q;
  report.d = params.d_input;
  report.precision_bits = params.precision_bits;
  report.tool_version = kToolVersion;
  report.records.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    const PartialRecord& part = total.per_length[n - 1];
    CensusRecord rec;
    rec.n = n;
    rec.rwc = part.rwc;
    rec.max_luf = part.max_luf;
    rec.min_luf = part.min_luf == std::numeric_limits<std::uint32_t>::max() ? 0 : part.min_luf;
    rec.max_pl = part.max_pl;
    rec.max_luf_witness = part.witness;
    rec.max_fc = part.max_fc;
    rec.luf_bound = bounds::luf_bound(n, params).convert_to<double>();
    rec.conjecture_ratio = static_cast<double>(part.max_luf) / std::sqrt(static_cast<double>(n));
    report.records.push_back(std::move(rec));
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ConjectureDiagnostic conjecture_diagnostic(const CensusReport& report) {
  if (report.records.empty()) throw std::invalid_argument("empty report");
  ConjectureDiagnostic diag;
  diag.per_n.reserve(report.records.size());
  for (const CensusRecord& rec : report.records) {
    diag.per_n.push_back(rec.conjecture_ratio);
    diag.lambda_hat = std::max(diag.lambda_hat, rec.conjecture_ratio);
  }
  return diag;
}

std::string render_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "# richwords census schema=" << kSchemaVersion << "\n";
  out << "# tool_version=" << report.tool_version << "\n";
  out << "# q=" << report.q << "\n";
  out << "# d=" << real17(report.d) << "\n";
  out << "# precision_bits=" << report.precision_bits << "\n";
  out << kCsvHeader << "\n";
  for (const CensusRecord& rec : report.records) {
    out << rec.n << ',' << rec.rwc << ',' << rec.max_luf << ',' << rec.min_luf << ',';
    if (rec.max_pl) out << *rec.max_pl;
    out << ',' << letters_from_word(rec.max_luf_witness) << ',' << real17(rec.luf_bound)
        << ',' << real17(rec.conjecture_ratio) << "\n";
  }
  return out.str();
}

namespace {

void write_fc_companion(const CensusReport& report, const CensusRecord& rec,
                        const std::filesystem::path& path) {
  const auto params = bounds::make_params(report.q, report.d, report.precision_bits);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << "# richwords census schema=" << kSchemaVersion << "\n";
  out << kFcCsvHeader << "\n";
  for (std::size_t m = 1; m <= rec.max_fc.size(); ++m) {
    const double raw = bounds::fc_bound_raw(m, report.q, report.precision_bits).convert_to<double>();
    const double simple = bounds::fc_bound_simple(m, params).convert_to<double>();
    out << m << ',' << rec.max_fc[m - 1] << ',' << real17(raw) << ',' << real17(simple) << "\n";
  }
  if (!out.good()) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::json record_to_json(const CensusRecord& rec) {
  nlohmann::json j;
  j["n"] = rec.n;
  j["rwc"] = rec.rwc;
  j["max_luf"] = rec.max_luf;
  j["min_luf"] = rec.min_luf;
  if (rec.max_pl) {
    j["max_pl"] = *rec.max_pl;
  } else {
    j["max_pl"] = nullptr;
  }
  j["max_luf_witness"] = letters_from_word(rec.max_luf_witness);
  j["luf_bound"] = rec.luf_bound;
  j["conjecture_ratio"] = rec.conjecture_ratio;
  j["max_fc"] = rec.max_fc;
  return j;
}

void require_contiguous(const CensusReport& report) {
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    if (report.records[i].n != i + 1) {
      throw SchemaError("records must cover a contiguous range n = 1..n_max");
    }
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

CensusReport read_csv_report(const std::filesystem::path& path, std::istream& in) {
  CensusReport report;
  bool schema_seen = false;
  std::string line;
  // metadata comments precede the fixed header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      while (!key.empty() && key.front() == ' ') key.erase(key.begin());
      const std::string value = line.substr(eq + 1);
      if (key.find("schema") != std::string::npos) {
        if (std::stoi(value) != kSchemaVersion) {
          throw SchemaError("unsupported census schema version: " + value);
        }
        schema_seen = true;
      } else if (key == "tool_version") {
        report.tool_version = value;
      } else if (key == "q") {
        report.q = static_cast<unsigned>(std::stoul(value));
      } else if (key == "d") {
        report.d = std::stod(value);
      } else if (key == "precision_bits") {
        report.precision_bits = static_cast<unsigned>(std::stoul(value));
      }
      continue;
    }
    break;  // `line` now holds the header
  }
  if (!schema_seen) throw SchemaError("missing schema version marker");
  if (line != kCsvHeader) throw SchemaError("unexpected census CSV header: " + line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 8) throw SchemaError("malformed census CSV row: " + line);
    CensusRecord rec;
    rec.n = static_cast<std::uint32_t>(std::stoul(f[0]));
    rec.rwc = std::stoull(f[1]);
    rec.max_luf = static_cast<std::uint32_t>(std::stoul(f[2]));
    rec.min_luf = static_cast<std::uint32_t>(std::stoul(f[3]));
    if (!f[4].empty()) rec.max_pl = static_cast<std::uint32_t>(std::stoul(f[4]));
    rec.max_luf_witness = word_from_letters(f[5]);
    rec.luf_bound = std::stod(f[6]);
    rec.conjecture_ratio = std::stod(f[7]);
    report.records.push_back(std::move(rec));
  }
  // companion per-m tables, when present next to the main file
  for (CensusRecord& rec : report.records) {
    const auto companion = path.parent_path() / ("fc_" + std::to_string(rec.n) + ".csv");
    std::ifstream fc(companion);
    if (!fc) continue;
    std::string fl;
    while (std::getline(fc, fl) && !fl.empty() && fl[0] == '#') {
    }
    if (fl != kFcCsvHeader) throw SchemaError("unexpected fc CSV header in " + companion.string());
    while (std::getline(fc, fl)) {
      if (fl.empty()) continue;
      const auto f = split_csv_line(fl);
      if (f.size() != 4) throw SchemaError("malformed fc CSV row: " + fl);
      const auto m = std::stoul(f[0]);
      if (rec.max_fc.size() < m) rec.max_fc.resize(m, 0);
      rec.max_fc[m - 1] = std::stoull(f[1]);
    }
  }
  require_contiguous(report);
  return report;
}

CensusReport read_json_report(std::istream& in) {
  nlohmann::json j;
  in >> j;
  if (!j.contains("schema_version")) throw SchemaError("missing schema_version field");
  if (j["schema_version"].get<int>() != kSchemaVersion) {
    throw SchemaError("unsupported census schema version: " + j["schema_version"].dump());
  }
  CensusReport report;
  report.q = j.at("q").get<unsigned>();
  report.d = j.at("d").get<double>();
  report.precision_bits = j.at("precision_bits").get<unsigned>();
  report.tool_version = j.value("tool_version", std::string{});
  report.wall_time_seconds = j.value("wall_time_seconds", 0.0);
  for (const auto& jr : j.at("records")) {
    CensusRecord rec;
    rec.n = jr.at("n").get<std::uint32_t>();
    rec.rwc = jr.at("rwc").get<std::uint64_t>();
    rec.max_luf = jr.at("max_luf").get<std::uint32_t>();
    rec.min_luf = jr.at("min_luf").get<std::uint32_t>();
    if (!jr.at("max_pl").is_null()) rec.max_pl = jr.at("max_pl").get<std::uint32_t>();
    rec.max_luf_witness = word_from_letters(jr.at("max_luf_witness").get<std::string>());
    rec.luf_bound = jr.at("luf_bound").get<double>();
    rec.conjecture_ratio = jr.at("conjecture_ratio").get<double>();
    rec.max_fc = jr.at("max_fc").get<std::vector<std::uint64_t>>();
    report.records.push_back(std::move(rec));
  }
  require_contiguous(report);
  return report;
}

}  // namespace

std::string render_json(const CensusReport& report) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "richwords";
  j["tool_version"] = report.tool_version;
  j["q"] = report.q;
  j["d"] = report.d;
  j["precision_bits"] = report.precision_bits;
  j["wall_time_seconds"] = report.wall_time_seconds;
  auto records = nlohmann::json::array();
  for (const CensusRecord& rec : report.records) records.push_back(record_to_json(rec));
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

void write_report(const CensusReport& report, const std::filesystem::path& path,
                  ReportFormat format) {
  if (report.q > 26) throw std::invalid_argument("witness rendering needs q <= 26");
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << (format == ReportFormat::Csv ? render_csv(report) : render_json(report));
  if (!out.good()) throw std::runtime_error("write failed: " + path.string());
  out.close();
  if (format == ReportFormat::Csv) {
    for (const CensusRecord& rec : report.records) {
      write_fc_companion(report, rec,
                         path.parent_path() / ("fc_" + std::to_string(rec.n) + ".csv"));
    }
  }
}

CensusReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  // sniff the format: JSON documents start with '{'
  int c = in.peek();
  while (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
    in.get();
    c = in.peek();
  }
  if (c == '{') return read_json_report(in);
  return read_csv_report(path, in);
}

}  // namespace richwords::census
