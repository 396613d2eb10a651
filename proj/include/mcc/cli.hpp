#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcc/builders.hpp"
#include "mcc/counting.hpp"

namespace mcc::cli {

enum class Command { Table, Build, Verify, Scan };
enum class Format { Json, Dot, Csv, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kMaxVerifyPeriod = 16;

struct Range {
    int first = 0;
    int last = 0;
};

/// "A..B" or a single "N".
Range parse_range(const std::string& text);
Format parse_format(const std::string& text);

struct RunConfig {
    Command command = Command::Table;
    std::optional<Family> family;
    Range range;
    Algorithm algorithm = Algorithm::Telephone;
    std::optional<Format> format;
    std::string out_path;
};

std::string cmd_table(Range range, Format format);

struct BuildResult {
    CellComplex complex;
    ValidationReport report;
    std::string rendered;
};
BuildResult cmd_build(Family m, int p, Algorithm a, Format format);

struct CheckResult {
    std::string invariant;
    std::string family;  // "per1", "per2" or "" for family-independent checks
    int p = 0;
    bool pass = false;
    std::string detail;
};

using RowProvider = std::function<counting::CountRow(int)>;

/// Every invariant for every period in range. `rows` supplies the count table under test.
std::vector<CheckResult> cmd_verify(Range range, const RowProvider& rows = counting::count_row);
std::string render_checks(const std::vector<CheckResult>& checks, Format format);

struct ScanRow {
    Family family = Family::Per1;
    int p = 0;
    int bigons = 0;
    int smallest = 0;
    int smallest_count = 0;
    int largest = 0;
    int largest_count = 0;
    std::optional<Int> conjectured_largest;
    int reflexive_faces = 0;
    std::optional<int> smallest_irreflexive;
    int largest_count_mod_conjugation = 0;
    /// Per1 only. Components of the real-edge subgraph together with self-conjugate vertices.
    std::optional<int> real_edge_components;
    /// Per1 only. Components of the graph on vertices and faces joining real edges to their
    /// endpoints and each face to the boundary vertices where it passes angle 0 and to the
    /// real edges on its boundary.
    std::optional<int> real_axis_components;
    std::vector<std::string> flags;
};

ScanRow scan_period(Family m, int p);
std::string cmd_scan(Range range, const std::vector<Family>& families, Format format);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcc::cli
