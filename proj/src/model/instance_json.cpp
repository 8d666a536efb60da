#include "tcover/instance_json.hpp"

#include <fstream>
#include <sstream>

#include "tcover/errors.hpp"

namespace tcover {

using nlohmann::json;

json instance_to_json(const Instance& inst) {
  json edges = json::array();
  for (Subset e : inst.edges()) edges.push_back(e.indices());
  return json{{"schema", "v1"}, {"n", inst.n()}, {"k", inst.k()}, {"r", format_rational(inst.r())}, {"edges", edges}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("instance: top-level value must be an object");
  for (const char* key : {"n", "k", "r", "edges"}) {
    if (!j.contains(key)) throw ValidationError(std::string("instance: missing field \"") + key + "\"");
  }
  if (j.contains("schema") && j["schema"] != "v1") {
    throw ValidationError("instance: unsupported schema " + j["schema"].dump());
  }
  if (!j["n"].is_number_unsigned() || !j["k"].is_number_unsigned()) {
    throw ValidationError("instance: \"n\" and \"k\" must be nonnegative integers");
  }
  const auto n = j["n"].get<unsigned>();
  const auto k = j["k"].get<unsigned>();

  Rational r;
  if (j["r"].is_string()) {
    r = parse_rational(j["r"].get<std::string>());
  } else if (j["r"].is_number_integer()) {
    r = Rational(j["r"].get<long long>());
  } else {
    throw ValidationError("instance: \"r\" must be a \"num/den\" string or an integer");
  }

  if (!j["edges"].is_array()) throw ValidationError("instance: \"edges\" must be an array");
  std::vector<Subset> edges;
  edges.reserve(j["edges"].size());
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const json& row = j["edges"][i];
    if (!row.is_array()) throw ValidationError("instance: edge " + std::to_string(i) + " is not an array");
    std::vector<unsigned> idx;
    for (const json& v : row) {
      if (!v.is_number_unsigned()) {
        throw ValidationError("instance: edge " + std::to_string(i) + " holds a non-index value");
      }
      const auto x = v.get<unsigned>();
      if (x >= n) throw ValidationError("instance: edge " + std::to_string(i) + " has index >= n");
      idx.push_back(x);
    }
    const Subset e = Subset::from_indices(idx);
    if (e.size() != idx.size()) {
      throw ValidationError("instance: edge " + std::to_string(i) + " repeats an index");
    }
    edges.push_back(e);
  }
  return Instance(n, k, std::move(edges), std::move(r));
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" in the message
    throw ValidationError(std::string("malformed instance JSON: ") + e.what());
  }
  return instance_from_json(j);
}

std::string dump_instance(const Instance& inst) { return instance_to_json(inst).dump() + "\n"; }

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file '" + path + "'");
  out << dump_instance(inst);
}

}  // namespace tcover
