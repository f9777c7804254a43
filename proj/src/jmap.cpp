#include <fstream>
#include <sstream>

#include "modcurve/pipelines.hpp"

namespace modcurve {

namespace {

QuadQ eval_terms(const std::vector<JMapTerm>& terms, const QuadQ& x, const QuadQ& y) {
  QuadQ acc = x.zero();
  for (const auto& t : terms) {
    QuadQ m = x.embed(t.coeff);
    for (unsigned e = 0; e < t.i; ++e) m *= x;
    for (unsigned e = 0; e < t.j; ++e) m *= y;
    acc += m;
  }
  return acc;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// j-invariant of y^2 = x^3 + A x + B.
QuadQ short_j(const QuadQ& A, const QuadQ& B) {
  const QuadQ a3 = A * A * A * A.from_int(4);
  return A.from_int(1728) * a3 / (a3 + B * B * A.from_int(27));
}

}  // namespace

std::optional<QuadQ> evaluate_jmap(const JMapData& m, const QuadQ& x, const QuadQ& y) {
  const QuadQ den = eval_terms(m.denominator, x, y);
  if (den.is_zero()) return std::nullopt;
  return eval_terms(m.numerator, x, y) / den;
}

JMapData parse_jmap(const std::string& text) {
  JMapData out;
  bool have_provenance = false;
  std::vector<JMapTerm>* section = nullptr;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.rfind("provenance:", 0) == 0) {
      out.provenance = trim(line.substr(11));
      have_provenance = true;
    } else if (line == "[numerator]") {
      section = &out.numerator;
    } else if (line == "[denominator]") {
      section = &out.denominator;
    } else {
      if (!section) throw ParseError(where + "term outside of a section");
      std::istringstream ls(line);
      long i = -1, j = -1;
      std::string c, extra;
      if (!(ls >> i >> j >> c) || (ls >> extra) || i < 0 || j < 0) throw ParseError(where + "expected 'i j p/q'");
      try {
        section->push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), Rational::parse(c)});
      } catch (const Error& e) {
        throw ParseError(where + e.what());
      }
    }
  }
  if (!have_provenance) throw ParseError("missing provenance: header");
  if (out.numerator.empty() || out.denominator.empty()) throw ParseError("both [numerator] and [denominator] are required");
  return out;
}

void validate_jmap(const JMapData& m, const std::vector<ref::TableRow>& rows) {
  using K = ref::TableRow::CurveKind;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const QuadQ x = table_value(row.D, row.x);
    const QuadQ y = table_value(row.D, row.y);
    const std::string name = "row " + std::to_string(i + 1) + " (D = " + std::to_string(row.D) + ")";
    const auto j = evaluate_jmap(m, x, y);
    if (!j) throw ValidationFailed(name + ": j-map has a pole at P");
    QuadQ want;
    switch (row.kind) {
      case K::Pair:
        want = short_j(table_value(row.D, row.A), table_value(row.D, row.B));
        break;
      case K::JZero:
        want = x.zero();
        break;
      case K::J1728:
        want = x.from_int(1728);
        break;
      case K::JOnly:
        want = table_value(row.D, row.j);
        break;
    }
    if (!(*j == want)) throw ValidationFailed(name + ": j(P) = " + j->to_string() + ", expected " + want.to_string());
  }
}

JMapData load_jmap(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  auto m = parse_jmap(ss.str());
  validate_jmap(m, ref::reference_table());
  return m;
}

}  // namespace modcurve
