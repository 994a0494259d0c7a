#include "io.hpp"

#include <fstream>

#include <json.hpp>

namespace hypcube::cli {

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

EvenRibbonGraph load_graph(const std::string& path) {
  const nlohmann::json j = read_json(path);
  try {
    auto strands = j.at("strands").get<std::vector<int>>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw InputError(path + ": each pair needs two ids");
      pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return EvenRibbonGraph::build(std::move(strands), pairs);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

GluingSpec load_gluing(const std::string& path) {
  const nlohmann::json j = read_json(path);
  try {
    return GluingSpec{j.at("capped").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

ShearVector load_shears(const std::string& path) {
  const nlohmann::json j = read_json(path);
  try {
    return j.get<ShearVector>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace hypcube::cli
