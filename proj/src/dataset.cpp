#include "dataset.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "json.hpp"

namespace m24 {

namespace {

using Json = nlohmann::ordered_json;

Json rats_to_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

std::vector<Rat> rats_from_json(const Json& a) {
  std::vector<Rat> v;
  for (const auto& s : a) v.push_back(rat_from_string(s.get<std::string>()));
  return v;
}

Json matrix_to_json(const std::vector<std::vector<Rat>>& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(rats_to_json(row));
  return a;
}

std::vector<std::vector<Rat>> matrix_from_json(const Json& a) {
  std::vector<std::vector<Rat>> m;
  for (const auto& row : a) m.push_back(rats_from_json(row));
  return m;
}

std::string g_path;  // empty until configured
std::mutex g_mutex;

}  // namespace

std::string serialize_dataset(const Dataset& ds) {
  Json j;
  j["format"] = "m24siegel-data";
  j["version"] = ds.version;
  j["qterms"] = ds.qterms;
  j["levels"] = ds.levels;
  j["full_levels"] = ds.full_levels;

  Json bases = Json::object();
  for (const auto& [N, rows] : ds.bases_k2) bases[std::to_string(N)] = matrix_to_json(rows);
  j["bases_k2"] = bases;

  Json pi = Json::object();
  for (const auto& [N, by_cusp] : ds.pi_fe_k2) {
    Json c = Json::object();
    for (const auto& [key, mat] : by_cusp) c[key] = matrix_to_json(mat);
    pi[std::to_string(N)] = c;
  }
  j["pi_fe_k2"] = pi;

  j["class_order"] = ds.class_order;
  Json classes = Json::object();
  for (const auto& label : ds.class_order) {
    const auto& row = ds.classes.at(label);
    Json c;
    c["order"] = row.order;
    c["chi"] = rat_to_string(row.chi);
    c["level"] = row.level;
    c["tc2"] = rats_to_json(row.tc2);
    c["Ng"] = row.Ng;
    if (row.kg)
      c["kg"] = rat_to_string(*row.kg);
    else
      c["kg"] = nullptr;
    c["ansatz_level"] = row.ansatz_level;
    c["probe"] = row.probe;
    Json pw = Json::object();
    for (const auto& [d, lab] : row.powers) pw[std::to_string(d)] = lab;
    c["powers"] = pw;
    classes[label] = c;
  }
  j["classes"] = classes;

  Json sols = Json::object();
  for (const auto& label : ds.class_order) {
    auto it = ds.solutions.find(label);
    if (it == ds.solutions.end()) continue;
    Json rows = Json::array();
    for (const auto& r : it->second) {
      Json row;
      row["N"] = r.N;
      row["n"] = r.n;
      row["tc0"] = rat_to_string(r.tc0);
      row["tc2"] = rats_to_json(r.tc2);
      rows.push_back(row);
    }
    sols[label] = rows;
  }
  j["solutions"] = sols;

  return j.dump(1) + "\n";
}

void save_dataset(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write dataset: " + path);
  out << serialize_dataset(ds);
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  Json j = Json::parse(in);
  if (j.at("format").get<std::string>() != "m24siegel-data")
    throw std::runtime_error("not an m24siegel data file: " + path);

  Dataset ds;
  ds.version = j.at("version").get<int>();
  ds.qterms = j.at("qterms").get<long>();
  ds.levels = j.at("levels").get<std::vector<long>>();
  ds.full_levels = j.at("full_levels").get<std::vector<long>>();

  for (const auto& [key, rows] : j.at("bases_k2").items())
    ds.bases_k2[std::stol(key)] = matrix_from_json(rows);

  for (const auto& [key, by_cusp] : j.at("pi_fe_k2").items()) {
    auto& dst = ds.pi_fe_k2[std::stol(key)];
    for (const auto& [ckey, mat] : by_cusp.items()) dst[ckey] = matrix_from_json(mat);
  }

  ds.class_order = j.at("class_order").get<std::vector<std::string>>();
  for (const auto& [label, c] : j.at("classes").items()) {
    Dataset::ClassRow row;
    row.label = label;
    row.order = c.at("order").get<long>();
    row.chi = rat_from_string(c.at("chi").get<std::string>());
    row.level = c.at("level").get<long>();
    row.tc2 = rats_from_json(c.at("tc2"));
    row.Ng = c.at("Ng").get<long>();
    if (!c.at("kg").is_null()) row.kg = rat_from_string(c.at("kg").get<std::string>());
    row.ansatz_level = c.at("ansatz_level").get<long>();
    row.probe = c.at("probe").get<bool>();
    for (const auto& [d, lab] : c.at("powers").items())
      row.powers[std::stol(d)] = lab.get<std::string>();
    ds.classes[label] = row;
  }

  for (const auto& [label, rows] : j.at("solutions").items()) {
    auto& dst = ds.solutions[label];
    for (const auto& r : rows) {
      Dataset::SolutionRow row;
      row.N = r.at("N").get<long>();
      row.n = r.at("n").get<long>();
      row.tc0 = rat_from_string(r.at("tc0").get<std::string>());
      row.tc2 = rats_from_json(r.at("tc2"));
      dst.push_back(row);
    }
  }

  return ds;
}

void set_dataset_path(const std::string& path) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_path = path;
}

const Dataset& dataset() {
  static const Dataset ds = [] {
    std::string path;
    {
      std::lock_guard<std::mutex> lock(g_mutex);
      path = g_path;
    }
    if (path.empty()) {
      if (const char* env = std::getenv("M24SIEGEL_DATA")) path = env;
    }
#ifdef M24_DEFAULT_DATA_PATH
    if (path.empty()) path = M24_DEFAULT_DATA_PATH;
#endif
    if (path.empty()) throw std::runtime_error("no dataset path configured");
    return load_dataset(path);
  }();
  return ds;
}

}  // namespace m24
