#include "sigtorus/link_io.hpp"

#include <fstream>
#include <sstream>

#include "sigtorus/errors.hpp"

namespace sigtorus {

using nlohmann::json;

namespace {

std::int64_t get_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw SchemaError(what + " must be an integer");
  return j.get<std::int64_t>();
}

BigInt get_bigint(const json& j, const std::string& what) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError(what + " is not an integer string");
    }
  }
  throw SchemaError(what + " must be an integer");
}

IntMatrix parse_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + " must be an array of rows");
  const std::size_t rows = j.size();
  if (rows == 0) return IntMatrix(0, 0);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw DimensionMismatch(what + " has ragged rows");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = get_int(j[i][k], what + " entry");
  }
  return m;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComponentId parse_component(const json& j, const ColoredLink& link) {
  if (!j.is_string()) throw SchemaError("component ids are \"color.index\" strings");
  const std::string s = j.get<std::string>();
  const auto dot = s.find('.');
  if (dot == std::string::npos) throw SchemaError("component id '" + s + "' is not of the form color.index");
  std::size_t color = 0, index = 0;
  try {
    std::size_t used = 0;
    color = std::stoul(s.substr(0, dot), &used);
    if (used != dot) throw std::invalid_argument(s);
    index = std::stoul(s.substr(dot + 1), &used);
    if (used != s.size() - dot - 1) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw SchemaError("component id '" + s + "' is not of the form color.index");
  }
  if (color == 0 || index == 0) throw SchemaError("component ids are 1-based: '" + s + "'");
  ComponentId id{color - 1, index - 1};
  link.global_index(id);  // range check
  return id;
}

std::string component_string(ComponentId c) {
  return std::to_string(c.color + 1) + "." + std::to_string(c.index + 1);
}

std::vector<std::size_t> parse_color_subset(const std::string& key, std::size_t mu) {
  std::vector<std::size_t> colors;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      auto c = std::stoul(item, &used);
      if (used != item.size() || c == 0 || c > mu) throw std::invalid_argument(item);
      colors.push_back(c - 1);
    } catch (const std::exception&) {
      throw SchemaError("bad sublink key '" + key + "': expected comma-separated 1-based colors");
    }
  }
  if (colors.empty()) throw SchemaError("empty sublink key");
  return colors;
}

}  // namespace

LaurentPoly parse_laurent(const json& doc, std::size_t nvars) {
  if (!doc.is_array()) throw SchemaError("Laurent polynomial must be a list of {coeff, exp} records");
  LaurentPoly p(nvars);
  for (const auto& term : doc) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exp"))
      throw SchemaError("Laurent term needs \"coeff\" and \"exp\"");
    const auto& e = term["exp"];
    if (!e.is_array() || e.size() != nvars)
      throw DimensionMismatch("Laurent exponent must have " + std::to_string(nvars) + " entries");
    Exponent exp;
    for (const auto& x : e) exp.push_back(static_cast<int>(get_int(x, "exponent")));
    p.add_term(exp, get_bigint(term["coeff"], "coefficient"));
  }
  return p;
}

RationalFunction parse_rational_function(const json& doc, std::size_t nvars) {
  if (doc.is_array()) return RationalFunction(parse_laurent(doc, nvars));
  if (!doc.is_object() || !doc.contains("num")) throw SchemaError("rational function needs \"num\"");
  LaurentPoly num = parse_laurent(doc["num"], nvars);
  LaurentPoly den = doc.contains("den") ? parse_laurent(doc["den"], nvars) : LaurentPoly::constant(nvars, 1);
  if (den.is_zero()) throw SchemaError("rational function has a zero denominator");
  return RationalFunction(std::move(num), std::move(den));
}

ColoredLink parse_link(const json& doc) {
  if (!doc.is_object()) throw SchemaError("link document must be a JSON object");
  if (!doc.contains("mu")) throw SchemaError("missing field \"mu\"");
  const auto mu_raw = get_int(doc["mu"], "mu");
  if (mu_raw < 1 || mu_raw > 16) throw SchemaError("mu must be between 1 and 16");
  const auto mu = static_cast<std::size_t>(mu_raw);

  std::vector<std::size_t> per_color(mu, 1);
  if (doc.contains("components_per_color")) {
    const auto& c = doc["components_per_color"];
    if (!c.is_array() || c.size() != mu) throw SchemaError("components_per_color must list one count per color");
    for (std::size_t j = 0; j < mu; ++j) {
      auto v = get_int(c[j], "components_per_color entry");
      if (v < 1) throw SchemaError("components_per_color entries must be positive");
      per_color[j] = static_cast<std::size_t>(v);
    }
  }

  if (!doc.contains("seifert") || !doc["seifert"].is_object()) throw SchemaError("missing object \"seifert\"");
  std::map<SignVector, IntMatrix> matrices;
  for (const auto& [key, value] : doc["seifert"].items()) {
    SignVector eps = parse_sign_string(key);
    if (eps.size() != mu)
      throw SchemaError("Seifert key \"" + key + "\" has length " + std::to_string(eps.size()) + ", expected " +
                        std::to_string(mu));
    matrices.emplace(std::move(eps), parse_matrix(value, "Seifert matrix \"" + key + "\""));
  }
  ColoredLink link(per_color, SeifertSystem(mu, std::move(matrices)));

  if (doc.contains("linking")) {
    if (!doc["linking"].is_array()) throw SchemaError("\"linking\" must be a list");
    for (const auto& rec : doc["linking"]) {
      if (!rec.is_object() || !rec.contains("a") || !rec.contains("b") || !rec.contains("lk"))
        throw SchemaError("linking records need \"a\", \"b\" and \"lk\"");
      link.set_linking(parse_component(rec["a"], link), parse_component(rec["b"], link), get_int(rec["lk"], "lk"));
    }
  }
  if (doc.contains("conway") && !doc["conway"].is_null()) link.set_conway(parse_rational_function(doc["conway"], mu));
  if (doc.contains("rank_alexander") && !doc["rank_alexander"].is_null())
    link.set_rank_alexander(static_cast<int>(get_int(doc["rank_alexander"], "rank_alexander")));
  if (doc.contains("sublinks")) {
    if (!doc["sublinks"].is_object()) throw SchemaError("\"sublinks\" must be an object");
    for (const auto& [key, value] : doc["sublinks"].items())
      link.set_sublink(parse_color_subset(key, mu), parse_link(value));
  }
  if (doc.contains("underlying_oriented") && !doc["underlying_oriented"].is_null())
    link.set_underlying_oriented(parse_link(doc["underlying_oriented"]));
  return link;
}

ColoredLink load_link(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open link file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("link file " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_link(doc);
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json coeff;
    if (it->second >= INT64_MIN && it->second <= INT64_MAX)
      coeff = it->second.convert_to<std::int64_t>();
    else
      coeff = it->second.str();
    terms.push_back({{"coeff", coeff}, {"exp", it->first}});
  }
  return terms;
}

json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const ColoredLink& link) {
  json doc;
  doc["mu"] = link.colors();
  doc["components_per_color"] = link.components_per_color();
  json linking = json::array();
  for (std::size_t a = 0; a < link.component_count(); ++a)
    for (std::size_t b = a + 1; b < link.component_count(); ++b)
      if (auto lk = link.linking_global(a, b); lk != 0)
        linking.push_back(
            {{"a", component_string(link.component(a))}, {"b", component_string(link.component(b))}, {"lk", lk}});
  doc["linking"] = std::move(linking);
  json seifert = json::object();
  for (const auto& eps : all_sign_vectors(link.colors())) seifert[sign_string(eps)] = matrix_json(link.seifert().at(eps));
  doc["seifert"] = std::move(seifert);
  if (link.conway()) doc["conway"] = to_json(*link.conway());
  if (link.rank_supplied()) doc["rank_alexander"] = link.rank_alexander();
  if (!link.sublinks().empty()) {
    json subs = json::object();
    for (const auto& [colors, sub] : link.sublinks()) {
      std::string key;
      for (std::size_t k = 0; k < colors.size(); ++k) key += (k ? "," : "") + std::to_string(colors[k] + 1);
      subs[key] = to_json(*sub);
    }
    doc["sublinks"] = std::move(subs);
  }
  if (link.underlying_oriented()) doc["underlying_oriented"] = to_json(*link.underlying_oriented());
  return doc;
}

}  // namespace sigtorus
