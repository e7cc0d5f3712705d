#include "mring/io.hpp"

#include <json.hpp>

#include "mring/error.hpp"

namespace mring {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

eset parse_set(const json& arr, int n, const char* what) {
  if (!arr.is_array()) fail(errc::parse_error, std::string(what) + " must be an array");
  eset s = 0;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) fail(errc::parse_error, std::string(what) + " holds a non-integer");
    const long long e = v.get<long long>();
    if (e < 1 || e > n)
      fail(errc::parse_error, "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    s |= sets::single(static_cast<int>(e));
  }
  return s;
}

}  // namespace

Matroid parse_matroid(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, e.what());
  }
  if (!j.is_object()) fail(errc::parse_error, "expected a JSON object");
  if (j.value("format", "") != "matroid/v1") fail(errc::parse_error, "missing format \"matroid/v1\"");
  if (!j.contains("n") || !j["n"].is_number_integer()) fail(errc::parse_error, "missing integer \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxGroundSet)
    fail(errc::parse_error, "n = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGroundSet));
  const bool has_bases = j.contains("bases");
  const bool has_cyclic = j.contains("cyclic_flats");
  if (has_bases == has_cyclic)
    fail(errc::parse_error, "exactly one of \"bases\" and \"cyclic_flats\" must be present");
  if (has_bases) {
    if (!j["bases"].is_array()) fail(errc::parse_error, "\"bases\" must be an array");
    std::vector<eset> bases;
    for (const auto& b : j["bases"]) bases.push_back(parse_set(b, n, "basis"));
    return Matroid::from_bases(n, std::move(bases));
  }
  if (!j["cyclic_flats"].is_array()) fail(errc::parse_error, "\"cyclic_flats\" must be an array");
  CyclicFlatList list;
  list.n = n;
  for (const auto& rec : j["cyclic_flats"]) {
    if (!rec.is_object() || !rec.contains("set") || !rec.contains("rank") ||
        !rec["rank"].is_number_integer())
      fail(errc::parse_error, "cyclic flat records need \"set\" and integer \"rank\"");
    list.records.push_back({parse_set(rec["set"], n, "cyclic flat"), rec["rank"].get<int>()});
  }
  std::sort(list.records.begin(), list.records.end());
  return from_cyclic_flats(list);
}

std::string serialize_matroid(const Matroid& m) {
  ordered_json j;
  j["format"] = "matroid/v1";
  j["n"] = m.n();
  ordered_json bases = ordered_json::array();
  for (eset b : m.bases()) bases.push_back(sets::elements(b));
  j["bases"] = std::move(bases);
  return j.dump();
}

std::string serialize_matroid_cyclic(const Matroid& m) {
  ordered_json j;
  j["format"] = "matroid/v1";
  j["n"] = m.n();
  ordered_json records = ordered_json::array();
  for (const auto& rec : cyclic_flats(m).records) {
    ordered_json r;
    r["set"] = sets::elements(rec.set);
    r["rank"] = rec.rank;
    records.push_back(std::move(r));
  }
  j["cyclic_flats"] = std::move(records);
  return j.dump();
}

}  // namespace mring
