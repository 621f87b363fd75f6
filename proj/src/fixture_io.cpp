#include "jumpnum/fixture_io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace jumpnum {

namespace {

std::string summary(const std::vector<Diagnostic>& diags) {
  std::string out = std::to_string(diags.size()) + " validation diagnostic(s)";
  if (!diags.empty()) out += "; first: " + to_string(diags.front());
  return out;
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

void only_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!ok.contains(key)) fail(path, "unknown key '" + key + "'");
  }
}

const Json& required(const Json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing required key '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::string as_string(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

bool as_bool(const Json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

std::vector<std::int64_t> as_int_array(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::map<std::string, std::int64_t> as_int_map(const Json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object of integers");
  std::map<std::string, std::int64_t> out;
  for (const auto& [key, value] : v.items()) out[key] = as_int(value, path + "." + key);
  return out;
}

const Json& as_array(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

PrimeDivisor parse_divisor(const Json& j, const std::string& path) {
  only_keys(j, path, {"id", "name", "mult", "discrepancy", "kind"});
  PrimeDivisor d;
  d.id = as_string(required(j, path, "id"), path + ".id");
  d.name = j.contains("name") ? as_string(j["name"], path + ".name") : d.id;
  d.mult = as_int(required(j, path, "mult"), path + ".mult");
  d.discrepancy = as_int(required(j, path, "discrepancy"), path + ".discrepancy");
  try {
    d.kind = divisor_kind_from_string(as_string(required(j, path, "kind"), path + ".kind"));
  } catch (const ParseError& e) {
    fail(path + ".kind", e.what());
  }
  return d;
}

Center parse_center(const Json& j, const std::string& path) {
  only_keys(j, path, {"label", "divisor", "dim", "delta", "infinitely_near_parent", "proximate_to"});
  Center c;
  c.label = as_string(required(j, path, "label"), path + ".label");
  c.divisor = as_string(required(j, path, "divisor"), path + ".divisor");
  c.dim = as_int(required(j, path, "dim"), path + ".dim");
  c.delta = j.contains("delta") ? as_int(j["delta"], path + ".delta") : 0;
  if (j.contains("infinitely_near_parent") && !j["infinitely_near_parent"].is_null()) {
    c.infinitely_near_parent = as_string(j["infinitely_near_parent"], path + ".infinitely_near_parent");
  }
  if (j.contains("proximate_to")) {
    const auto& arr = as_array(j["proximate_to"], path + ".proximate_to");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      c.proximate_to.push_back(as_string(arr[i], path + ".proximate_to[" + std::to_string(i) + "]"));
    }
  }
  return c;
}

BlowupHistory parse_history(const Json& j, const std::string& path) {
  only_keys(j, path, {"components", "centers"});
  BlowupHistory h;
  const auto& comps = as_array(required(j, path, "components"), path + ".components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string p = path + ".components[" + std::to_string(i) + "]";
    only_keys(comps[i], p, {"divisor", "d", "mu", "m", "m_after"});
    HistoryComponent c;
    c.divisor = as_string(required(comps[i], p, "divisor"), p + ".divisor");
    c.degree = as_int(required(comps[i], p, "d"), p + ".d");
    if (comps[i].contains("mu")) c.mu = as_int_map(comps[i]["mu"], p + ".mu");
    c.m = comps[i].contains("m") ? as_int(comps[i]["m"], p + ".m") : 0;
    if (comps[i].contains("m_after")) c.m_after = as_int_map(comps[i]["m_after"], p + ".m_after");
    h.components.push_back(std::move(c));
  }
  if (j.contains("centers")) h.center_m = as_int_map(j["centers"], path + ".centers");
  return h;
}

ExcDivLattice parse_lattice(const std::string& id, const Json& j, const std::string& path) {
  only_keys(j, path, {"n", "centers", "restrictions", "effective_cone", "curve_families", "blowup_history", "flags"});
  ExcDivLattice lat;
  lat.divisor_id = id;
  lat.n = as_int(required(j, path, "n"), path + ".n");
  if (j.contains("centers")) {
    const auto& arr = as_array(j["centers"], path + ".centers");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      lat.centers.push_back(parse_center(arr[i], path + ".centers[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("restrictions")) {
    const auto& obj = j["restrictions"];
    if (!obj.is_object()) fail(path + ".restrictions", "expected an object of integer arrays");
    for (const auto& [key, value] : obj.items()) {
      lat.restrictions.emplace_back(key, PicClass(as_int_array(value, path + ".restrictions." + key)));
    }
  }
  if (j.contains("effective_cone")) {
    const auto& arr = as_array(j["effective_cone"], path + ".effective_cone");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      lat.effective_cone.emplace_back(as_int_array(arr[i], path + ".effective_cone[" + std::to_string(i) + "]"));
    }
  }
  if (j.contains("curve_families")) {
    const auto& arr = as_array(j["curve_families"], path + ".curve_families");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + ".curve_families[" + std::to_string(i) + "]";
      only_keys(arr[i], p, {"name", "pairings"});
      lat.curve_families.push_back(
          {as_string(required(arr[i], p, "name"), p + ".name"), as_int_array(required(arr[i], p, "pairings"), p + ".pairings")});
    }
  }
  if (j.contains("blowup_history")) lat.history = parse_history(j["blowup_history"], path + ".blowup_history");
  if (j.contains("flags")) {
    const auto& f = j["flags"];
    const std::string p = path + ".flags";
    only_keys(f, p, {"created_by_point_blowup", "centers_in_hyperplane", "minimal_resolution", "effectivity_as_Q_divisor"});
    auto flag = [&](const char* key) { return f.contains(key) ? as_bool(f[key], p + "." + key) : false; };
    lat.flags.created_by_point_blowup = flag("created_by_point_blowup");
    lat.flags.centers_in_hyperplane = flag("centers_in_hyperplane");
    lat.flags.minimal_resolution = flag("minimal_resolution");
    lat.flags.effectivity_as_Q_divisor = flag("effectivity_as_Q_divisor");
  }
  return lat;
}

Json int_map_json(const std::map<std::string, std::int64_t>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

}  // namespace

ValidationFailed::ValidationFailed(std::vector<Diagnostic> diagnostics)
    : DataError(summary(diagnostics)), diagnostics_(std::move(diagnostics)) {}

ResolutionData fixture_from_json(const Json& doc) {
  const std::string root = "$";
  only_keys(doc, root, {"ambient_dim", "divisors", "dual_graph", "lattices", "flags", "provenance", "analysis"});
  ResolutionData data;
  data.ambient_dim = as_int(required(doc, root, "ambient_dim"), "$.ambient_dim");
  const auto& divs = as_array(required(doc, root, "divisors"), "$.divisors");
  for (std::size_t i = 0; i < divs.size(); ++i) {
    data.divisors.push_back(parse_divisor(divs[i], "$.divisors[" + std::to_string(i) + "]"));
  }
  if (doc.contains("dual_graph")) {
    const auto& edges = as_array(doc["dual_graph"], "$.dual_graph");
    std::vector<DualGraphEdge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string p = "$.dual_graph[" + std::to_string(i) + "]";
      only_keys(edges[i], p, {"a", "b", "intersection"});
      out.push_back({as_string(required(edges[i], p, "a"), p + ".a"), as_string(required(edges[i], p, "b"), p + ".b"),
                     edges[i].contains("intersection") ? as_int(edges[i]["intersection"], p + ".intersection") : 1});
    }
    data.dual_graph = std::move(out);
  }
  if (doc.contains("lattices")) {
    const auto& lats = doc["lattices"];
    if (!lats.is_object()) fail("$.lattices", "expected an object keyed by divisor id");
    for (const auto& [key, value] : lats.items()) data.lattices.emplace(key, parse_lattice(key, value, "$.lattices." + key));
  }
  if (doc.contains("flags")) {
    only_keys(doc["flags"], "$.flags", {"minimal_resolution"});
    if (doc["flags"].contains("minimal_resolution")) {
      data.flags.minimal_resolution = as_bool(doc["flags"]["minimal_resolution"], "$.flags.minimal_resolution");
    }
  }
  if (doc.contains("provenance")) data.provenance = as_string(doc["provenance"], "$.provenance");
  return data;
}

Json fixture_to_json(const ResolutionData& data) {
  Json doc = Json::object();
  doc["ambient_dim"] = data.ambient_dim;
  doc["divisors"] = Json::array();
  for (const auto& d : data.divisors) {
    doc["divisors"].push_back(
        {{"id", d.id}, {"name", d.name}, {"mult", d.mult}, {"discrepancy", d.discrepancy}, {"kind", to_string(d.kind)}});
  }
  if (data.dual_graph) {
    doc["dual_graph"] = Json::array();
    for (const auto& e : *data.dual_graph) doc["dual_graph"].push_back({{"a", e.a}, {"b", e.b}, {"intersection", e.intersection}});
  }
  if (!data.lattices.empty()) {
    Json lats = Json::object();
    for (const auto& [key, lat] : data.lattices) {
      Json l = Json::object();
      l["n"] = lat.n;
      l["centers"] = Json::array();
      for (const auto& c : lat.centers) {
        Json cj = {{"label", c.label}, {"divisor", c.divisor}, {"dim", c.dim}, {"delta", c.delta}};
        if (c.infinitely_near_parent) cj["infinitely_near_parent"] = *c.infinitely_near_parent;
        if (!c.proximate_to.empty()) cj["proximate_to"] = c.proximate_to;
        l["centers"].push_back(std::move(cj));
      }
      l["restrictions"] = Json::object();
      for (const auto& [id, cls] : lat.restrictions) l["restrictions"][id] = cls.coeffs;
      l["effective_cone"] = Json::array();
      for (const auto& g : lat.effective_cone) l["effective_cone"].push_back(g.coeffs);
      l["curve_families"] = Json::array();
      for (const auto& f : lat.curve_families) l["curve_families"].push_back({{"name", f.name}, {"pairings", f.pairings}});
      if (lat.history) {
        Json comps = Json::array();
        for (const auto& c : lat.history->components) {
          comps.push_back({{"divisor", c.divisor}, {"d", c.degree}, {"mu", int_map_json(c.mu)}, {"m", c.m},
                           {"m_after", int_map_json(c.m_after)}});
        }
        l["blowup_history"] = {{"components", std::move(comps)}, {"centers", int_map_json(lat.history->center_m)}};
      }
      l["flags"] = {{"created_by_point_blowup", lat.flags.created_by_point_blowup},
                    {"centers_in_hyperplane", lat.flags.centers_in_hyperplane},
                    {"minimal_resolution", lat.flags.minimal_resolution},
                    {"effectivity_as_Q_divisor", lat.flags.effectivity_as_Q_divisor}};
      lats[key] = std::move(l);
    }
    doc["lattices"] = std::move(lats);
  }
  doc["flags"] = {{"minimal_resolution", data.flags.minimal_resolution}};
  doc["provenance"] = data.provenance;
  return doc;
}

ResolutionData parse_fixture_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return fixture_from_json(doc);
}

std::filesystem::path resolve_fixture_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (const char* env = std::getenv(kFixturePathVariable); env && fs::path(path).is_relative()) {
    std::stringstream dirs(env);
    for (std::string dir; std::getline(dirs, dir, ':');) {
      if (dir.empty()) continue;
      fs::path candidate = fs::path(dir) / path;
      if (fs::exists(candidate)) return candidate;
    }
  }
  throw ParseError("fixture '" + path + "' not found (also searched " + kFixturePathVariable + ")");
}

ResolutionData load_fixture(const std::string& path, bool force) {
  const auto resolved = resolve_fixture_path(path);
  std::ifstream in(resolved, std::ios::binary);
  if (!in) throw ParseError("cannot read fixture '" + resolved.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  ResolutionData data;
  try {
    data = parse_fixture_text(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(resolved.string() + ": " + e.what());
  }
  if (!force) {
    auto diags = validate(data);
    if (!diags.empty()) throw ValidationFailed(std::move(diags));
  }
  return data;
}

}  // namespace jumpnum
