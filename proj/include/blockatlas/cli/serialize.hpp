#pragma once

#include <json.hpp>
#include <string>

#include "blockatlas/error.hpp"
#include "blockatlas/fusion.hpp"
#include "blockatlas/langlands.hpp"
#include "blockatlas/rootdata.hpp"
#include "blockatlas/unipotent.hpp"

namespace blockatlas::cli {

// Keys keep insertion order so that reports diff cleanly.
using Json = nlohmann::ordered_json;

/// A rejected input file, with a 1-based position when one is known.
class SourceError : public Error {
 public:
  SourceError(std::string source, int line, int column, const std::string& message)
      : Error(ErrorKind::ParseError,
              source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string source_;
  int line_, column_;
};

/// Parses JSON text; syntax errors become SourceError with line and column.
Json parse_json(const std::string& text, const std::string& source);
std::string read_file(const std::string& path);

Json integer_json(const Integer& x);
Json to_json(const AbelianGroup& group);
Json labels_json(const std::vector<UnipotentLabel>& labels);
Json to_json(const SeriesPartition& series);
Json to_json(const FusionResult& result);
Json to_json(const DSeriesResult& result);
Json to_json(const DefectBoundRow& row);
Json to_json(const DerivedInequalityResult& result);
Json to_json(const TorsorReport& report);
Json to_json(const CornqsReport& report);
Json to_json(const LemmaReport& report);
Json to_json(const RootDatum& datum);

/// Structural problems raise InvalidDatum; the result is validated.
RootDatum datum_from_json(const Json& json, const std::string& source);
/// "catalog:<name>" or a path to a JSON datum file.
RootDatum load_datum(const std::string& ref);

/// Indented plain-text rendering of a report.
std::string render_text(const Json& json);

}  // namespace blockatlas::cli
