#include "superlie/algebra_io.hpp"

#include <json.hpp>

#include <map>

namespace superlie {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json scalar_to_json(const GaussScalar& s) {
  ordered_json out;
  out["re"] = rational_str(s.re());
  out["im"] = rational_str(s.im());
  return out;
}

GaussScalar scalar_from_json(const ordered_json& j) {
  if (!j.is_object() || j.size() != 2 || !j.contains("re") || !j.contains("im"))
    throw ParseError("scalar must be an object with exactly \"re\" and \"im\"");
  if (!j["re"].is_string() || !j["im"].is_string())
    throw ParseError("scalar components must be strings");
  try {
    return GaussScalar(rational_parse(j["re"].get<std::string>()),
                       rational_parse(j["im"].get<std::string>()));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::map<std::string, std::size_t> name_index(const std::vector<std::string>& names) {
  std::map<std::string, std::size_t> out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (names[k].empty()) throw ParseError("empty basis element name");
    if (!out.emplace(names[k], k).second)
      throw ParseError("duplicate basis element name '" + names[k] + "'");
  }
  return out;
}

}  // namespace

std::vector<std::string> standard_names(const BasisSignature& sig) {
  std::vector<std::string> names;
  names.reserve(sig.dim());
  for (std::size_t k = 0; k < sig.even_count; ++k)
    names.push_back("e" + std::to_string(k + 1));
  for (std::size_t k = 0; k < sig.odd_count; ++k)
    names.push_back("f" + std::to_string(k + 1));
  return names;
}

std::string serialize_algebra(const BracketTable& table,
                              const std::vector<std::string>& names) {
  if (names.size() != table.dim())
    throw std::invalid_argument("serialize_algebra: name count mismatch");
  ordered_json j;
  j["arity"] = table.arity();
  j["even"] = ordered_json::array();
  j["odd"] = ordered_json::array();
  for (std::size_t k = 0; k < table.sig().even_count; ++k) j["even"].push_back(names[k]);
  for (std::size_t k = table.sig().even_count; k < table.dim(); ++k)
    j["odd"].push_back(names[k]);
  j["brackets"] = ordered_json::array();
  for (const auto& [key, value] : table.entries()) {
    ordered_json entry;
    entry["args"] = ordered_json::array();
    for (std::size_t idx : key) entry["args"].push_back(names[idx]);
    entry["value"] = ordered_json::object();
    for (std::size_t b = 0; b < value.size(); ++b)
      if (!value[b].is_zero()) entry["value"][names[b]] = scalar_to_json(value[b]);
    j["brackets"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

AlgebraFile parse_algebra(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  for (const auto& item : j.items())
    if (item.key() != "arity" && item.key() != "even" && item.key() != "odd" &&
        item.key() != "brackets")
      throw ParseError("unknown field '" + item.key() + "'");
  if (!j.contains("arity") || !j["arity"].is_number_unsigned())
    throw ParseError("missing or invalid \"arity\"");
  const std::size_t arity = j["arity"].get<std::size_t>();
  if (arity < 2) throw ParseError("arity must be at least 2");

  auto read_names = [&](const char* field) {
    if (!j.contains(field) || !j[field].is_array())
      throw ParseError(std::string("missing or invalid \"") + field + "\"");
    std::vector<std::string> out;
    for (const auto& n : j[field]) {
      if (!n.is_string()) throw ParseError("basis element names must be strings");
      out.push_back(n.get<std::string>());
    }
    return out;
  };
  std::vector<std::string> names = read_names("even");
  const std::size_t even_count = names.size();
  for (std::string& n : read_names("odd")) names.push_back(std::move(n));
  const BasisSignature sig{even_count, names.size() - even_count};
  const auto index_of = name_index(names);

  BracketTable table(arity, sig);
  if (!j.contains("brackets") || !j["brackets"].is_array())
    throw ParseError("missing or invalid \"brackets\"");
  for (const auto& entry : j["brackets"]) {
    if (!entry.is_object() || entry.size() != 2 || !entry.contains("args") ||
        !entry.contains("value"))
      throw ParseError("each bracket needs exactly \"args\" and \"value\"");
    if (!entry["args"].is_array() || entry["args"].size() != arity)
      throw ParseError("\"args\" must list exactly arity names");
    IndexTuple args;
    for (const auto& a : entry["args"]) {
      if (!a.is_string()) throw ParseError("\"args\" entries must be names");
      auto it = index_of.find(a.get<std::string>());
      if (it == index_of.end())
        throw ParseError("unknown basis element '" + a.get<std::string>() + "'");
      args.push_back(it->second);
    }
    if (!entry["value"].is_object())
      throw ParseError("\"value\" must map names to scalars");
    Vec value = zero_vec(sig.dim());
    for (const auto& item : entry["value"].items()) {
      auto it = index_of.find(item.key());
      if (it == index_of.end())
        throw ParseError("unknown basis element '" + item.key() + "'");
      if (!value[it->second].is_zero())
        throw ParseError("coordinate '" + item.key() + "' listed twice");
      value[it->second] = scalar_from_json(item.value());
    }
    try {
      table.add_entry(std::move(args), std::move(value));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return {std::move(table), std::move(names)};
}

std::string serialize_functional(const LinearFunctional& s,
                                 const std::vector<std::string>& names) {
  if (names.size() != s.dim())
    throw std::invalid_argument("serialize_functional: name count mismatch");
  ordered_json j;
  j["coeffs"] = ordered_json::object();
  for (std::size_t k = 0; k < s.dim(); ++k)
    if (!s.coeff(k).is_zero()) j["coeffs"][names[k]] = scalar_to_json(s.coeff(k));
  return j.dump(2) + "\n";
}

LinearFunctional parse_functional(const std::string& text,
                                  const std::vector<std::string>& names) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.size() != 1 || !j.contains("coeffs") ||
      !j["coeffs"].is_object())
    throw ParseError("functional file must be {\"coeffs\": {name: scalar, ...}}");
  const auto index_of = name_index(names);
  Vec coeffs = zero_vec(names.size());
  for (const auto& item : j["coeffs"].items()) {
    auto it = index_of.find(item.key());
    if (it == index_of.end())
      throw ParseError("unknown basis element '" + item.key() + "'");
    coeffs[it->second] = scalar_from_json(item.value());
  }
  return LinearFunctional(std::move(coeffs));
}

}  // namespace superlie
