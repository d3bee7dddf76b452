#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "richwords/bounds.hpp"
#include "richwords/word.hpp"

namespace richwords::census {

/// Per-length statistics over all rich words of that length.
struct CensusRecord {
  std::uint32_t n = 0;
  std::uint64_t rwc = 0;
  std::uint32_t max_luf = 0;
  std::uint32_t min_luf = 0;
  std::optional<std::uint32_t> max_pl;  // absent above the PL cutoff
  Word max_luf_witness;                 // lexicographically smallest maximizer
  std::vector<std::uint64_t> max_fc;    // index m-1, m = 1..n
  double luf_bound = 0.0;
  double conjecture_ratio = 0.0;        // max_luf / sqrt(n)
};

struct CensusReport {
  unsigned q = 0;
  double d = 0.5;
  unsigned precision_bits = bounds::kDefaultPrecisionBits;
  std::string tool_version;
  double wall_time_seconds = 0.0;
  std::vector<CensusRecord> records;  // contiguous n = 1..n_max
};

struct CensusOptions {
  unsigned workers = 1;        // 0 = hardware concurrency
  bool canonical = false;      // enumerate letter-permutation classes only
  unsigned pl_max_n = 16;      // PL is the census bottleneck; skip above this
  unsigned checkpoint_depth = 7;
};

/// visitor(word, weight): weight is 1 in full mode; in canonical mode it is
/// the number of words in the letter-permutation class of the canonical word.
using RichVisitor = std::function<void(WordView, std::uint64_t)>;

struct EnumerationStats {
  std::vector<std::uint64_t> rich_counts;  // rwc per length, index n-1
  std::uint64_t words_visited = 0;         // visitor invocations
};

/// Depth-first traversal of the q-ary word tree pruned to rich words (richness
/// is prefix-closed: a child survives iff its push creates a new palindrome).
/// Invokes the visitor once per rich word of every length <= n_max, in
/// lexicographic order. Single-threaded; run_census is the parallel driver.
EnumerationStats enumerate_rich(unsigned q, unsigned n_max, const RichVisitor& visit,
                                bool canonical = false);

/// Full census: one record per length with LUF/PL/factor-complexity extrema
/// and bound columns. Parallelizes over subtrees rooted at checkpoint_depth;
/// results are independent of the worker count.
CensusReport run_census(unsigned q, unsigned n_max, const bounds::BoundParams& params,
                        const CensusOptions& opts = {});

struct ConjectureDiagnostic {
  double lambda_hat = 0.0;       // max over n of max_luf / sqrt(n)
  std::vector<double> per_n;     // the ratio table, index n-1
};

ConjectureDiagnostic conjecture_diagnostic(const CensusReport& report);

enum class ReportFormat { Csv, Json };

inline constexpr const char* kCsvHeader =
    "n,rwc,max_luf,min_luf,max_pl,max_luf_witness,luf_bound,conjecture_ratio";
inline constexpr const char* kFcCsvHeader = "m,max_fc,raw_bound,simple_bound";
inline constexpr int kSchemaVersion = 1;

/// CSV: metadata comment lines, the fixed header, one row per record; the
/// per-m complexity table of each record goes to a companion fc_<n>.csv next
/// to `path`. JSON: everything in one document. Reals are rendered at 17
/// significant digits.
void write_report(const CensusReport& report, const std::filesystem::path& path,
                  ReportFormat format);

/// Format is detected from the content; CSV companions are read back from the
/// same directory when present. Throws SchemaError on unknown schema versions.
CensusReport read_report(const std::filesystem::path& path);

/// The main-table CSV rows (with metadata and header) as a string; used both
/// by write_report and for stdout output.
std::string render_csv(const CensusReport& report);

/// The JSON document as a string.
std::string render_json(const CensusReport& report);

}  // namespace richwords::census
