#include "blockatlas/cli/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace blockatlas::cli {

namespace {

[[noreturn]] void bad_datum(const std::string& source, const std::string& path,
                            const std::string& what) {
  fail(ErrorKind::InvalidDatum, source + ": " + path + " " + what);
}

long long as_int(const Json& j, const std::string& source, const std::string& path) {
  if (!j.is_number_integer()) bad_datum(source, path, "must be an integer");
  return j.get<long long>();
}

IntVector as_vector(const Json& j, const std::string& source, const std::string& path) {
  if (!j.is_array()) bad_datum(source, path, "must be an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.emplace_back(as_int(j[i], source, path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<IntVector> as_vectors(const Json& j, const std::string& source,
                                  const std::string& path) {
  if (!j.is_array()) bad_datum(source, path, "must be an array of vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_vector(j[i], source, path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::string> as_strings(const Json& j, const std::string& source,
                                    const std::string& path) {
  if (!j.is_array()) bad_datum(source, path, "must be an array of labels");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) bad_datum(source, path, "must contain only strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json classes_json(const std::vector<std::vector<std::size_t>>& classes,
                  const std::vector<UnipotentLabel>& labels) {
  Json out = Json::array();
  for (const auto& c : classes) {
    Json members = Json::array();
    for (std::size_t i : c) members.push_back(labels[i].render());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out << pad << key << ": " << scalar_text(value) << '\n';
      } else if (value.empty()) {
        out << pad << key << ": " << (value.is_array() ? "[]" : "{}") << '\n';
      } else {
        out << pad << key << ":\n";
        render(value, indent + 2, out);
      }
    }
    return;
  }
  const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return is_scalar(x); });
  if (flat) {
    out << pad;
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar_text(j[i]);
    out << '\n';
    return;
  }
  for (const auto& item : j) {
    if (is_scalar(item)) {
      out << pad << "- " << scalar_text(item) << '\n';
    } else {
      out << pad << "-\n";
      render(item, indent + 2, out);
    }
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1, column = 1;
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (auto pos = message.find("syntax error"); pos != std::string::npos)
      message = message.substr(pos);
    throw SourceError(source, line, column, message);
  }
}

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

Json to_json(const AbelianGroup& group) {
  Json out;
  out["structure"] = group.to_string();
  Json factors = Json::array();
  for (const auto& f : group.invariant_factors()) factors.push_back(integer_json(f));
  out["invariant_factors"] = std::move(factors);
  out["free_rank"] = group.free_rank();
  const auto order = group.order();
  out["order"] = order ? integer_json(*order) : Json(nullptr);
  return out;
}

Json labels_json(const std::vector<UnipotentLabel>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l.render());
  return out;
}

namespace {

// Degenerate D labels come in ′/″ pairs that always share every series
// invariant, so a report can only over-merge them. Count the pairs.
std::size_t degenerate_pairs(const std::vector<UnipotentLabel>& labels) {
  return static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [](const auto& l) {
    return l.marker == DegenerateMarker::Prime;
  }));
}

}  // namespace

Json to_json(const SeriesPartition& series) {
  Json out;
  out["type"] = series.type.name();
  out["d"] = series.d;
  if (series.ell) out["ell"] = *series.ell;
  if (series.q) out["q"] = *series.q;
  out["num_labels"] = series.labels.size();
  out["num_blocks"] = series.blocks.size();
  out["degenerate_pairs"] = degenerate_pairs(series.labels);
  Json blocks = Json::array();
  for (const auto& b : series.blocks) {
    Json members = Json::array();
    for (std::size_t i : b.members) members.push_back(series.labels[i].render());
    blocks.push_back({{"core", b.core_key}, {"members", std::move(members)}});
  }
  out["blocks"] = std::move(blocks);
  return out;
}

Json to_json(const FusionResult& result) {
  Json out;
  out["type"] = result.type.name();
  out["q"] = result.q;
  out["d_max"] = result.d_max;
  Json admissible = Json::array();
  for (const auto& [d, ell] : result.admissible) admissible.push_back({{"d", d}, {"ell", ell}});
  out["admissible"] = std::move(admissible);
  out["skipped_d"] = result.skipped_d;
  out["num_labels"] = result.labels.size();
  out["degenerate_pairs"] = degenerate_pairs(result.labels);
  out["num_classes"] = result.classes.size();
  out["verdict"] =
      result.verdict() == FusionVerdict::SingleClass ? "single_class" : "inconclusive";
  out["classes"] = classes_json(result.classes, result.labels);
  Json certificate = Json::array();
  for (const auto& e : result.certificate) {
    certificate.push_back({{"a", result.labels[e.a].render()},
                           {"b", result.labels[e.b].render()},
                           {"d", e.d},
                           {"ell", e.ell}});
  }
  out["certificate"] = std::move(certificate);
  return out;
}

Json to_json(const DSeriesResult& result) {
  Json out;
  out["single"] = result.single;
  out["degenerate_pairs"] = degenerate_pairs(result.labels);
  out["num_classes"] = result.join.size();
  out["join"] = classes_json(result.join, result.labels);
  return out;
}

Json to_json(const DefectBoundRow& row) {
  return {{"core", row.core},
          {"defect", row.defect},
          {"lhs", row.lhs},
          {"rhs", row.rhs},
          {"satisfied", row.satisfied}};
}

Json to_json(const DerivedInequalityResult& result) {
  Json rows = Json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"defect", r.defect},
                    {"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"base_case", r.base_case},
                    {"holds", r.holds}});
  }
  return {{"holds", result.holds}, {"rows", std::move(rows)}};
}

Json to_json(const TorsorReport& report) {
  return {{"p", report.p},
          {"group_side", to_json(report.group_side)},
          {"dual_side", to_json(report.dual_side)},
          {"group_order", integer_json(report.group_order)},
          {"dual_order", integer_json(report.dual_order)},
          {"equal", report.equal},
          {"isomorphic", report.isomorphic},
          {"regime", report.regime}};
}

Json to_json(const CornqsReport& report) {
  return {{"p", report.p},
          {"pi1_der_order", integer_json(report.pi1_der_order)},
          {"hypothesis_a", report.hypothesis_a},
          {"hypothesis_b", report.hypothesis_b},
          {"witness_supplied", report.witness_supplied},
          {"chain",
           {{"composite_zero", report.chain_composite_zero},
            {"exact_middle", report.chain_exact_middle},
            {"surjective", report.chain_surjective}}},
          {"pi1_p_torsion", to_json(report.pi1_p_torsion)},
          {"conclusion", report.conclusion},
          {"consistent", report.consistent}};
}

Json to_json(const LemmaReport& report) {
  return {{"p", report.p},
          {"p_groups", report.p_groups},
          {"centre_coinvariants", report.centre_coinvariants},
          {"centre_h1_orders", report.centre_h1_orders},
          {"torus_coinvariants", report.torus_coinvariants},
          {"torus_h1_orders", report.torus_h1_orders},
          {"injective", report.injective},
          {"injective_on_fixed", report.injective_on_fixed},
          {"all", report.all()}};
}

Json to_json(const RootDatum& datum) {
  Json out;
  out["name"] = datum.name;
  out["rank"] = datum.rank;
  Json coroots = Json::array(), roots = Json::array();
  for (const auto& c : datum.coroots) coroots.push_back(vector_json(c));
  for (const auto& r : datum.roots) roots.push_back(vector_json(r));
  out["coroots"] = std::move(coroots);
  out["roots"] = std::move(roots);
  Json galois = Json::array();
  for (const auto& g : datum.galois)
    galois.push_back({{"label", g.label}, {"matrix", matrix_json(g.matrix)}});
  out["galois"] = std::move(galois);
  out["wild"] = datum.wild;
  out["inertia"] = datum.inertia;
  out["frobenius"] = datum.frobenius;
  if (datum.induced_witness) {
    Json witness = Json::array();
    for (const auto& w : *datum.induced_witness) witness.push_back(vector_json(w));
    out["induced_witness"] = std::move(witness);
  }
  out["quasi_split"] = datum.quasi_split;
  return out;
}

RootDatum datum_from_json(const Json& json, const std::string& source) {
  if (!json.is_object()) bad_datum(source, "document", "must be a JSON object");
  static const std::set<std::string> known{"name",     "rank",      "coroots",
                                           "roots",    "galois",    "wild",
                                           "inertia",  "frobenius", "induced_witness",
                                           "quasi_split"};
  for (const auto& [key, value] : json.items())
    if (!known.count(key)) bad_datum(source, key, "is not a datum field");
  for (const char* key : {"rank", "galois", "frobenius"})
    if (!json.contains(key)) bad_datum(source, key, "is required");

  RootDatum d;
  d.name = json.value("name", std::string("datum"));
  d.rank = static_cast<int>(as_int(json["rank"], source, "rank"));
  if (d.rank < 0) bad_datum(source, "rank", "must be non-negative");
  if (json.contains("coroots")) d.coroots = as_vectors(json["coroots"], source, "coroots");
  if (json.contains("roots")) d.roots = as_vectors(json["roots"], source, "roots");
  const Json& galois = json["galois"];
  if (!galois.is_array()) bad_datum(source, "galois", "must be an array");
  for (std::size_t i = 0; i < galois.size(); ++i) {
    const std::string path = "galois[" + std::to_string(i) + "]";
    const Json& g = galois[i];
    if (!g.is_object() || !g.contains("label") || !g["label"].is_string() || !g.contains("matrix"))
      bad_datum(source, path, "needs a string label and a matrix");
    const auto rows = as_vectors(g["matrix"], source, path + ".matrix");
    IntMatrix m(rows.size(), static_cast<std::size_t>(d.rank));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != static_cast<std::size_t>(d.rank))
        bad_datum(source, path + ".matrix", "rows must have length rank");
      for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    }
    d.galois.push_back({g["label"].get<std::string>(), std::move(m)});
  }
  if (json.contains("wild")) d.wild = as_strings(json["wild"], source, "wild");
  if (json.contains("inertia")) d.inertia = as_strings(json["inertia"], source, "inertia");
  if (!json["frobenius"].is_string()) bad_datum(source, "frobenius", "must be a label");
  d.frobenius = json["frobenius"].get<std::string>();
  if (json.contains("induced_witness"))
    d.induced_witness = as_vectors(json["induced_witness"], source, "induced_witness");
  if (json.contains("quasi_split")) {
    if (!json["quasi_split"].is_boolean()) bad_datum(source, "quasi_split", "must be a boolean");
    d.quasi_split = json["quasi_split"].get<bool>();
  }
  validate(d);
  return d;
}

RootDatum load_datum(const std::string& ref) {
  constexpr std::string_view scheme = "catalog:";
  if (ref.rfind(scheme, 0) == 0) return catalog_entry(ref.substr(scheme.size()));
  return datum_from_json(parse_json(read_file(ref), ref), ref);
}

std::string render_text(const Json& json) {
  std::ostringstream out;
  render(json, 0, out);
  return out.str();
}

}  // namespace blockatlas::cli
