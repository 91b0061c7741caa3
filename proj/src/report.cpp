#include "minfol/report.hpp"

#include <sstream>

namespace minfol::report {

Json make(const std::string& command, Json inputs, Json results, std::optional<std::uint64_t> seed) {
  Json provenance = {{"tool", "minfol"}, {"version", kToolVersion}};
  provenance["seed"] = seed ? Json(*seed) : Json(nullptr);
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"provenance", std::move(provenance)}};
}

Json to_json(const Rational& x) {
  if (x.den() == 1) return std::to_string(x.num());
  return std::to_string(x.num()) + "/" + std::to_string(x.den());
}

Json to_json(const QuadraticIrrational& x) {
  return {{"exact", x.to_string()}, {"p", x.p()}, {"q", x.q()}, {"radicand", x.radicand()},
          {"r", x.r()}, {"approx", x.to_double()}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_rows()) rows.push_back(r);
  return rows;
}

Json cycles_json(const Permutation& p) { return p.to_string(); }

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !j.empty() && !j.front().is_primitive()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), os);
  } else {
    os << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string render_tsv(const Json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

}  // namespace minfol::report
