#include <fstream>
#include <sstream>
#include <tuple>

#include "modcurve/pipelines.hpp"
#include "modcurve/sqrt.hpp"

namespace modcurve {

namespace {

std::string render(const std::optional<QuadQ>& q) { return q ? q->to_string() : ""; }

}  // namespace

QuadQ table_value(long D, const ref::QuadValue& q) {
  const auto f = make_quadratic_field(Rational(D));
  return QuadQ(f.field, q.u, q.v * f.scale);
}

std::pair<QuadQ, QuadQ> canonical_point(const QuadQ& x, const QuadQ& y) {
  auto key = [](const std::pair<QuadQ, QuadQ>& p) {
    return std::make_tuple(p.first.u(), p.first.v(), p.second.u(), p.second.v());
  };
  std::optional<std::pair<QuadQ, QuadQ>> best;
  for (const QuadQ& cx : {x, x.conj()}) {
    const QuadQ cy = cx == x ? y : y.conj();
    for (const QuadQ& yy : {cy, cx * cx * cx - cy}) {
      std::pair<QuadQ, QuadQ> cand{cx, yy};
      if (!best || key(cand) < key(*best)) best = cand;
    }
  }
  return *best;
}

std::vector<QuadPointRecord> generate_table(long k_max, const JMapData* jmap) {
  if (k_max < 1) throw Error("k_max must be at least 1");
  const auto E = ref::e37();
  const auto G = ref::e37_generator();
  std::vector<QuadPointRecord> out;
  ECPoint<Rational> P = G;
  for (long k = 1; k <= k_max; ++k, P = ec_add(E, P, G)) {
    const Rational disc = Rational(-3) - P.x * 4;
    Rational root;
    if (rational_sqrt(disc, root)) continue;
    const auto qf = make_quadratic_field(disc);
    const QuadQ r(qf.field, Rational(0), qf.scale);
    const QuadQ one = r.one();
    QuadPointRecord rec;
    rec.k = k;
    rec.u = P.x;
    rec.v = P.y;
    rec.D = qf.field->radicand().num();
    rec.x = (one + r) / r.embed((P.x + 1) * 2);
    rec.y = rec.x * rec.x * rec.x * r.embed(P.y + 1);
    if (jmap) {
      rec.j = evaluate_jmap(*jmap, rec.x, rec.y);
      if (!rec.j) {
        rec.tag = "pole";
      } else if (rec.j->is_zero()) {
        rec.tag = "j=0";
      } else if (*rec.j == one.from_int(1728)) {
        rec.tag = "j=1728";
      } else {
        const QuadQ& j = *rec.j;
        const QuadQ t = j - one.from_int(1728);
        rec.curve = std::make_pair(one.from_int(-3) * j * t, one.from_int(-2) * j * t * t);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<RowMatch> match_table(const std::vector<QuadPointRecord>& records, const std::vector<ref::TableRow>& rows) {
  std::vector<RowMatch> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto want = canonical_point(table_value(row.D, row.x), table_value(row.D, row.y));
    RowMatch m{i, std::nullopt};
    for (const auto& rec : records) {
      if (rec.D != row.D) continue;
      const auto got = canonical_point(rec.x, rec.y);
      if (got.first == want.first && got.second == want.second) {
        m.k = rec.k;
        break;
      }
    }
    out.push_back(m);
  }
  return out;
}

std::string table_csv(const std::vector<QuadPointRecord>& records) {
  std::ostringstream os;
  os << "k,D,x,y,j,A,B\n";
  for (const auto& r : records) {
    os << r.k << ',' << r.D.get_str() << ',' << r.x.to_string() << ',' << r.y.to_string() << ',' << render(r.j)
       << ',' << (r.curve ? r.curve->first.to_string() : "") << ',' << (r.curve ? r.curve->second.to_string() : "")
       << '\n';
  }
  return os.str();
}

nlohmann::json table_json(const std::vector<QuadPointRecord>& records) {
  auto out = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json o;
    o["k"] = r.k;
    o["u"] = r.u.to_string();
    o["v"] = r.v.to_string();
    o["D"] = r.D.get_str();
    o["x"] = r.x.to_string();
    o["y"] = r.y.to_string();
    o["j"] = r.j ? nlohmann::json(r.j->to_string()) : nlohmann::json(nullptr);
    if (r.curve) {
      o["curve"] = {{"A", r.curve->first.to_string()}, {"B", r.curve->second.to_string()}};
    } else {
      o["curve"] = nullptr;
    }
    o["tag"] = r.tag;
    out.push_back(std::move(o));
  }
  return out;
}

void export_table(const std::vector<QuadPointRecord>& records, TableFormat format, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  if (format == TableFormat::Csv) {
    os << table_csv(records);
  } else {
    os << table_json(records).dump(2) << '\n';
  }
  if (!os.flush()) throw Error("failed writing " + path);
}

}  // namespace modcurve
