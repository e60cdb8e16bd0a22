#include "blockatlas/cli/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace blockatlas::cli {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  int key_column = 0;
  int value_column = 0;
};

const std::set<std::string> kSections{"fusion",    "dseries",   "defect",    "zsygmondy",
                                      "bijection", "cornqs",    "components"};

const std::map<std::string, std::set<std::string>> kFields{
    {"fusion", {"families", "ranks", "q", "dmax"}},
    {"dseries", {"families", "ranks", "sets"}},
    {"defect", {"families", "ranks"}},
    {"zsygmondy", {"q", "d"}},
    {"bijection", {"data", "p"}},
    {"cornqs", {"data", "p"}},
    {"components", {"data", "p"}},
};

// Fields that accept a ".<family>" suffix.
const std::set<std::string> kOverridable{"fusion.ranks", "dseries.ranks", "dseries.sets",
                                         "defect.ranks"};

const std::vector<std::string> kFamilyNames{"A",  "2A", "B",   "C",  "D",  "2D", "G2",
                                            "F4", "E6", "2E6", "E7", "E8", "3D4"};

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    if (lead) *lead = s.size();
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  if (lead) *lead = b;
  return s.substr(b, e - b + 1);
}

std::string pad(long long value, int width) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%0*lld", width, value);
  return buffer;
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const std::string& source) : source_(source) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      const auto hash = raw.find('#');
      const std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
      std::size_t lead = 0;
      if (trim(body, &lead).empty()) continue;
      const auto eq = body.find('=');
      if (eq == std::string::npos)
        throw SourceError(source_, line, static_cast<int>(lead) + 1, "expected 'key = value'");
      std::size_t key_lead = 0, value_lead = 0;
      const std::string key = trim(body.substr(0, eq), &key_lead);
      const std::string value = trim(body.substr(eq + 1), &value_lead);
      Entry entry{value, line, static_cast<int>(key_lead) + 1,
                  static_cast<int>(eq + 1 + value_lead) + 1};
      check_key(key, entry);
      if (value.empty()) error(entry, false, "missing value for '" + key + "'");
      if (!entries_.emplace(key, entry).second) error(entry, true, "duplicate key '" + key + "'");
    }
  }

  GridConfig build() {
    GridConfig config;
    if (auto it = entries_.find("threads"); it != entries_.end()) {
      const auto values = ints(it->second);
      if (values.size() != 1 || *values.begin() < 1 || *values.begin() > 256)
        error(it->second, false, "threads must be a single integer in 1..256");
      config.threads = static_cast<unsigned>(*values.begin());
    }
    expand_typed("fusion", config.instances);
    expand_typed("dseries", config.instances);
    expand_typed("defect", config.instances);
    expand_zsygmondy(config.instances);
    for (const char* s : {"bijection", "cornqs", "components"}) expand_datum(s, config.instances);
    std::sort(config.instances.begin(), config.instances.end(),
              [](const GridInstance& a, const GridInstance& b) { return a.key < b.key; });
    return config;
  }

 private:
  [[noreturn]] void error(const Entry& e, bool at_key, const std::string& message) const {
    throw SourceError(source_, e.line, at_key ? e.key_column : e.value_column, message);
  }

  void check_key(const std::string& key, const Entry& e) const {
    if (key == "threads") return;
    const auto dot = key.find('.');
    const std::string section = key.substr(0, dot);
    if (dot == std::string::npos || !kSections.count(section))
      error(e, true, "unknown key '" + key + "'");
    const std::string rest = key.substr(dot + 1);
    const auto dot2 = rest.find('.');
    const std::string field = rest.substr(0, dot2);
    if (!kFields.at(section).count(field)) error(e, true, "unknown key '" + key + "'");
    if (dot2 != std::string::npos) {
      const std::string family = rest.substr(dot2 + 1);
      if (!kOverridable.count(section + "." + field))
        error(e, true, "'" + section + "." + field + "' has no per-family form");
      if (std::find(kFamilyNames.begin(), kFamilyNames.end(), family) == kFamilyNames.end())
        error(e, true, "unknown family '" + family + "'");
    }
  }

  const Entry* find(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  const Entry* first_of(const std::string& section) const {
    const Entry* best = nullptr;
    for (const auto& [key, e] : entries_)
      if (key.rfind(section + ".", 0) == 0 && (!best || e.line < best->line)) best = &e;
    return best;
  }

  const Entry& need(const std::string& section, const std::string& field) const {
    if (const Entry* e = find(section + "." + field)) return *e;
    error(*first_of(section), true, "section '" + section + "' needs '" + section + "." + field + "'");
  }

  std::set<long long> ints(const Entry& e) const {
    std::set<long long> out;
    for (const auto& t : tokens(e.value)) {
      long long lo = 0, hi = 0;
      char tail = 0;
      if (std::sscanf(t.c_str(), "%lld..%lld%c", &lo, &hi, &tail) == 2) {
        if (hi < lo || hi - lo > 100000) error(e, false, "bad range '" + t + "'");
      } else if (std::sscanf(t.c_str(), "%lld%c", &lo, &tail) == 1) {
        hi = lo;
      } else {
        error(e, false, "'" + t + "' is not an integer or a range a..b");
      }
      for (long long x = lo; x <= hi; ++x) out.insert(x);
    }
    return out;
  }

  std::vector<std::string> families(const Entry& e) const {
    std::vector<std::string> out;
    for (const auto& t : tokens(e.value)) {
      if (std::find(kFamilyNames.begin(), kFamilyNames.end(), t) == kFamilyNames.end())
        error(e, false, "unknown family '" + t + "'");
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return out;
  }

  const Entry& per_family(const std::string& section, const std::string& field,
                          const std::string& family) const {
    if (const Entry* e = find(section + "." + field + "." + family)) return *e;
    return need(section, field);
  }

  std::vector<std::string> sets(const Entry& e) const {
    std::vector<std::string> out;
    std::istringstream in(e.value);
    for (std::string part; std::getline(in, part, ';');) {
      try {
        const auto ds = parse_int_set(part);
        std::string canon;
        for (int d : ds) canon += (canon.empty() ? "" : ",") + std::to_string(d);
        out.push_back(canon);
      } catch (const Error& err) {
        error(e, false, err.what());
      }
    }
    return out;
  }

  // One entry per (family, rank) and the section's extra axis.
  void expand_typed(const std::string& section, std::vector<GridInstance>& out) const {
    if (!first_of(section)) return;
    const Entry& fam_entry = need(section, "families");
    std::vector<long long> qs{0};
    if (section == "fusion") {
      const auto q = ints(need(section, "q"));
      qs.assign(q.begin(), q.end());
    }
    std::optional<long long> dmax;
    if (const Entry* e = find("fusion.dmax"); e && section == "fusion") {
      const auto v = ints(*e);
      if (v.size() != 1 || *v.begin() < 1) error(*e, false, "dmax must be one positive integer");
      dmax = *v.begin();
    }
    for (const auto& family : families(fam_entry)) {
      std::vector<long long> ranks{0};
      const Entry* rank_entry = nullptr;
      const bool exceptional = family.size() > 1 && family != "2A" && family != "2D";
      if (!exceptional) {
        rank_entry = &per_family(section, "ranks", family);
        const auto r = ints(*rank_entry);
        ranks.assign(r.begin(), r.end());
      }
      std::vector<std::string> dsets{""};
      if (section == "dseries") dsets = sets(per_family(section, "sets", family));
      for (long long rank : ranks) {
        GroupType type;
        try {
          type = GroupType::make(family, static_cast<int>(rank));
        } catch (const Error& err) {
          error(*rank_entry, false, err.what());
        }
        const std::string base =
            section + "/" + (exceptional ? family : family + "_" + pad(rank, 2));
        for (long long q : qs) {
          for (const auto& ds : dsets) {
            GridInstance inst;
            inst.command = section == "dseries" ? "dseries-check"
                           : section == "defect" ? "defect-bounds"
                                                 : section;
            inst.options.type = family;
            inst.options.rank = exceptional ? 0 : type.rank;
            inst.key = base;
            if (q) {
              inst.options.q = static_cast<std::uint64_t>(q);
              inst.key += "/q=" + pad(q, 3);
            }
            if (dmax) inst.options.dmax = static_cast<int>(*dmax);
            if (!ds.empty()) {
              inst.options.dset = ds;
              inst.key += "/D=" + ds;
            }
            out.push_back(std::move(inst));
          }
        }
      }
    }
  }

  void expand_zsygmondy(std::vector<GridInstance>& out) const {
    if (!first_of("zsygmondy")) return;
    const auto qs = ints(need("zsygmondy", "q"));
    const auto ds = ints(need("zsygmondy", "d"));
    for (long long q : qs)
      for (long long d : ds) {
        GridInstance inst;
        inst.command = "zsygmondy";
        inst.options.q = static_cast<std::uint64_t>(q);
        inst.options.d = static_cast<int>(d);
        inst.key = "zsygmondy/q=" + pad(q, 3) + "/d=" + pad(d, 3);
        out.push_back(std::move(inst));
      }
  }

  void expand_datum(const std::string& section, std::vector<GridInstance>& out) const {
    if (!first_of(section)) return;
    const Entry& data = need(section, "data");
    std::vector<std::string> names;
    for (const auto& t : tokens(data.value)) {
      if (t == "all") {
        for (const auto& d : catalog()) names.push_back(d.name);
        continue;
      }
      const bool known = std::any_of(catalog().begin(), catalog().end(),
                                     [&](const RootDatum& d) { return d.name == t; });
      if (!known) error(data, false, "no catalog entry named '" + t + "'");
      names.push_back(t);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    for (const auto& name : names)
      for (long long p : ints(need(section, "p"))) {
        GridInstance inst;
        inst.command = section;
        inst.options.datum = "catalog:" + name;
        inst.options.p = static_cast<std::uint64_t>(p);
        inst.key = section + "/" + name + "/p=" + pad(p, 3);
        out.push_back(std::move(inst));
      }
  }

  std::string source_;
  std::map<std::string, Entry> entries_;
};

}  // namespace

GridConfig parse_grid(const std::string& text, const std::string& source) {
  return Parser(text, source).build();
}

GridRun run_grid(const GridConfig& config, const Context& context) {
  const std::size_t n = config.instances.size();
  std::vector<Outcome> outcomes(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++)
      outcomes[i] = run_command(config.instances[i].command, config.instances[i].options, context);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  GridRun run;
  Json instances = Json::array();
  std::size_t ok = 0, violations = 0, errors = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& outcome = outcomes[i];
    Json item;
    item["key"] = config.instances[i].key;
    item["command"] = config.instances[i].command;
    item["exit_code"] = outcome.exit_code;
    item["inputs"] = outcome.report["inputs"];
    if (outcome.report.contains("results")) item["results"] = outcome.report["results"];
    if (outcome.report.contains("error")) item["error"] = outcome.report["error"];
    instances.push_back(std::move(item));
    if (outcome.exit_code == 0) ++ok;
    if (outcome.exit_code == 1) ++violations;
    if (outcome.exit_code == 2) ++errors;
  }
  run.exit_code = violations ? 1 : errors ? 2 : 0;
  run.results["num_instances"] = n;
  run.results["summary"] = {{"ok", ok}, {"violations", violations}, {"errors", errors}};
  run.results["instances"] = std::move(instances);
  return run;
}

}  // namespace blockatlas::cli
