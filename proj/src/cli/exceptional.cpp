#include "blockatlas/cli/exceptional.hpp"

#include <unordered_map>

namespace blockatlas::cli {

namespace {

[[noreturn]] void reject(const std::string& source, const std::string& path,
                         const std::string& what) {
  fail(ErrorKind::InvalidArgument, source + ": " + path + " " + what);
}

}  // namespace

ExceptionalTables exceptional_from_json(const Json& json, const std::string& source) {
  if (!json.is_object()) reject(source, "document", "must be a JSON object");
  if (json.value("schema", std::string()) != "exceptional_v1")
    reject(source, "schema", "must be \"exceptional_v1\"");
  if (!json.contains("types") || !json["types"].is_array())
    reject(source, "types", "must be an array");

  ExceptionalTables out;
  const Json& types = json["types"];
  for (std::size_t t = 0; t < types.size(); ++t) {
    const std::string path = "types[" + std::to_string(t) + "]";
    const Json& entry = types[t];
    if (!entry.is_object() || !entry.contains("type") || !entry["type"].is_string())
      reject(source, path, "needs a string field \"type\"");
    GroupType type;
    try {
      // Classical families need an explicit rank and fail here too.
      type = GroupType::make(entry["type"].get<std::string>(), 0);
    } catch (const Error&) {
      reject(source, path + ".type", "must name an exceptional type");
    }
    if (out.count(type)) reject(source, path + ".type", "repeats " + type.name());

    if (!entry.contains("labels") || !entry["labels"].is_array())
      reject(source, path + ".labels", "must be an array of strings");
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& l : entry["labels"]) {
      if (!l.is_string()) reject(source, path + ".labels", "must contain only strings");
      if (!index.emplace(l.get<std::string>(), labels.size()).second)
        reject(source, path + ".labels", "repeats \"" + l.get<std::string>() + "\"");
      labels.push_back(l.get<std::string>());
    }

    std::map<int, std::vector<std::vector<std::size_t>>> series;
    const Json& list = entry.value("series", Json::array());
    if (!list.is_array()) reject(source, path + ".series", "must be an array");
    for (std::size_t s = 0; s < list.size(); ++s) {
      const std::string spath = path + ".series[" + std::to_string(s) + "]";
      const Json& item = list[s];
      if (!item.is_object() || !item.contains("d") || !item["d"].is_number_integer() ||
          !item.contains("blocks") || !item["blocks"].is_array())
        reject(source, spath, "needs an integer d and an array of blocks");
      const int d = item["d"].get<int>();
      if (series.count(d)) reject(source, spath + ".d", "repeats d = " + std::to_string(d));
      auto& blocks = series[d];
      for (const auto& block : item["blocks"]) {
        if (!block.is_array()) reject(source, spath + ".blocks", "must contain arrays of labels");
        std::vector<std::size_t> members;
        for (const auto& name : block) {
          auto it = name.is_string() ? index.find(name.get<std::string>()) : index.end();
          if (it == index.end()) reject(source, spath + ".blocks", "names an unknown label");
          members.push_back(it->second);
        }
        blocks.push_back(std::move(members));
      }
    }
    out.emplace(type, std::make_shared<const TabulatedSeries>(type, std::move(labels),
                                                              std::move(series)));
  }
  return out;
}

ExceptionalTables load_exceptional(const std::string& path) {
  return exceptional_from_json(parse_json(read_file(path), path), path);
}

}  // namespace blockatlas::cli
