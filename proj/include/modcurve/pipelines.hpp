#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "modcurve/ellcurve.hpp"
#include "modcurve/quad_ext.hpp"
#include "modcurve/rational.hpp"
#include "modcurve/reference_data.hpp"
#include "modcurve/unipoly.hpp"

namespace modcurve {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string check_id;
  CheckStatus status = CheckStatus::Skip;
  std::string expected;
  std::string actual;
  double seconds = 0.0;
};

// Sparse polynomial in (x, y): terms coefficient * x^i * y^j.
struct JMapTerm {
  unsigned i, j;
  Rational coeff;
};

struct JMapData {
  std::vector<JMapTerm> numerator;
  std::vector<JMapTerm> denominator;
  std::string provenance;
};

using QuadQ = QuadExt<Rational>;

// Value of the map at (x, y); nullopt at a pole.
std::optional<QuadQ> evaluate_jmap(const JMapData& m, const QuadQ& x, const QuadQ& y);

// Line-oriented text: a "provenance:" header, sections [numerator] / [denominator], lines "i j p/q",
// "#" comments. Throws ParseError.
JMapData parse_jmap(const std::string& text);
// Throws ValidationFailed naming the first row whose j disagrees with the reference data.
void validate_jmap(const JMapData& m, const std::vector<ref::TableRow>& rows);
// Reads, parses and validates against the reference table. Throws Error when the file cannot be read.
JMapData load_jmap(const std::string& path);

struct QuadPointRecord {
  long k = 0;
  Rational u, v;  // kG on E37
  Integer D;
  QuadQ x, y;
  std::optional<QuadQ> j;
  std::optional<std::pair<QuadQ, QuadQ>> curve;  // (A, B) of y^2 = x^3 + A x + B
  std::string tag;                               // "j=0", "j=1728", "pole" or empty
};

// Quadratic points on the working model over the multiples kG, k = 1..k_max, of G = (0, 0).
std::vector<QuadPointRecord> generate_table(long k_max, const JMapData* jmap = nullptr);

// Element of Q(sqrt(D)) built from a reference table entry.
QuadQ table_value(long D, const ref::QuadValue& q);

// Canonical representative of {(x, y), conjugate} x {identity, y -> x^3 - y}.
std::pair<QuadQ, QuadQ> canonical_point(const QuadQ& x, const QuadQ& y);

struct RowMatch {
  std::size_t row;
  std::optional<long> k;  // nullopt when no record matches
};
std::vector<RowMatch> match_table(const std::vector<QuadPointRecord>& records, const std::vector<ref::TableRow>& rows);

enum class TableFormat { Csv, Json };
std::string table_csv(const std::vector<QuadPointRecord>& records);
nlohmann::json table_json(const std::vector<QuadPointRecord>& records);
// Throws Error when the file cannot be written.
void export_table(const std::vector<QuadPointRecord>& records, TableFormat format, const std::string& path);

struct SuiteConfig {
  std::vector<std::string> only;  // empty means every check
  std::vector<std::string> skip;
  std::uint64_t rng_seed = 0;
  unsigned precision_bits = 256;
  long max_k = 15;
  std::optional<JMapData> jmap;
  // Replacement models for negative controls.
  std::optional<UniPoly<Rational>> x13_f;
  std::optional<UniPoly<Rational>> x37_g;

  bool selected(const std::string& id) const;
};

const std::vector<std::string>& x13_check_ids();
const std::vector<std::string>& x37_check_ids();

std::vector<CheckResult> run_x1_13(const SuiteConfig& config);
std::vector<CheckResult> run_x0_37(const SuiteConfig& config);

nlohmann::json report_json(const std::string& suite, std::uint64_t rng_seed, const std::vector<CheckResult>& checks);

}  // namespace modcurve
