#include "monpow/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace monpow {

using nlohmann::json;

namespace {

std::string strip_blanks(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

long parse_number(std::string_view s, std::string_view context) {
  long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw std::invalid_argument("expected an integer in '" + std::string(context) + "'");
  }
  return v;
}

struct Factor {
  std::size_t index;
  long exponent;
};

std::vector<Factor> factors(std::string_view raw) {
  const std::string text = strip_blanks(raw);
  if (text.empty()) throw std::invalid_argument("empty monomial");
  if (text == "1") return {};
  std::vector<Factor> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t star = std::min(text.find('*', pos), text.size());
    const std::string_view f = std::string_view(text).substr(pos, star - pos);
    if (f.size() < 2 || f[0] != 'x') throw std::invalid_argument("bad factor '" + std::string(f) + "' in '" + text + "'");
    const std::size_t caret = f.find('^');
    const long idx = parse_number(f.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1), text);
    const long e = caret == std::string_view::npos ? 1 : parse_number(f.substr(caret + 1), text);
    if (idx < 1) throw std::invalid_argument("variable index must be >= 1 in '" + text + "'");
    if (e < 0) throw std::invalid_argument("negative exponent in '" + text + "'");
    out.push_back({static_cast<std::size_t>(idx), e});
    pos = star + 1;
  }
  return out;
}

}  // namespace

std::size_t max_variable_index(std::string_view text) {
  std::size_t m = 0;
  for (const Factor& f : factors(text)) m = std::max(m, f.index);
  return m;
}

ExponentVector parse_monomial(std::string_view text, std::size_t n) {
  std::vector<int> e(n, 0);
  for (const Factor& f : factors(text)) {
    if (f.index > n) {
      throw std::invalid_argument("variable x" + std::to_string(f.index) + " outside the ring of " + std::to_string(n) +
                                  " variables");
    }
    e[f.index - 1] += static_cast<int>(f.exponent);
  }
  return ExponentVector(std::move(e));
}

MonomialIdeal parse_ideal_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("ideal file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("gens") || !doc["gens"].is_array()) {
    throw std::invalid_argument("ideal file must be an object with a \"gens\" array");
  }
  const json& gens = doc["gens"];
  std::size_t n = 0;
  if (doc.contains("vars")) {
    if (!doc["vars"].is_number_integer() || doc["vars"].get<long>() < 1) {
      throw std::invalid_argument("\"vars\" must be a positive integer");
    }
    n = doc["vars"].get<std::size_t>();
  } else {
    for (const json& g : gens) {
      if (!g.is_string()) throw std::invalid_argument("\"vars\" is required when generators are exponent arrays");
      n = std::max(n, max_variable_index(g.get<std::string>()));
    }
  }
  std::vector<ExponentVector> out;
  for (const json& g : gens) {
    if (g.is_string()) {
      out.push_back(parse_monomial(g.get<std::string>(), n));
    } else if (g.is_array()) {
      std::vector<int> e;
      for (const json& x : g) {
        if (!x.is_number_integer() || x.get<long>() < 0) {
          throw std::invalid_argument("exponents must be nonnegative integers");
        }
        e.push_back(x.get<int>());
      }
      if (e.size() != n) throw std::invalid_argument("exponent array length differs from \"vars\"");
      out.emplace_back(std::move(e));
    } else {
      throw std::invalid_argument("a generator must be an exponent array or a monomial string");
    }
  }
  return MonomialIdeal::minimalize(n, std::move(out));
}

std::string emit_ideal_json(const MonomialIdeal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(g.entries());
  return json{{"vars", I.vars()}, {"gens", gens}}.dump();
}

Hypergraph parse_hypergraph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("hypergraph file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") || !doc["edges"].is_array() ||
      !doc["vertices"].is_number_integer()) {
    throw std::invalid_argument("hypergraph file must be an object with \"vertices\" and \"edges\"");
  }
  std::vector<Edge> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_array()) throw std::invalid_argument("an edge must be an array of vertices");
    Edge edge;
    for (const json& v : e) {
      if (!v.is_number_integer()) throw std::invalid_argument("vertices must be integers");
      edge.push_back(v.get<int>());
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(doc["vertices"].get<int>(), std::move(edges));
}

std::string emit_hypergraph_json(const Hypergraph& H) {
  return json{{"vertices", H.vertices()}, {"edges", H.edges()}}.dump();
}

MonomialIdeal parse_generator_list(std::string_view text, std::optional<std::size_t> vars) {
  std::vector<std::string> items;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) items.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) items.push_back(std::move(cur));
  std::size_t n = vars.value_or(0);
  if (!vars)
    for (const auto& s : items) n = std::max(n, max_variable_index(s));
  if (n == 0) throw std::invalid_argument("generator list names no variables");
  std::vector<ExponentVector> gens;
  for (const auto& s : items) gens.push_back(parse_monomial(s, n));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

ExponentVector parse_vector(std::string_view text, std::optional<std::size_t> n) {
  std::vector<int> e;
  for (int v : parse_int_set(text)) {
    if (v < 0) throw std::invalid_argument("exponent vector entries must be >= 0");
    e.push_back(v);
  }
  if (n && e.size() != *n) {
    throw std::invalid_argument("vector '" + std::string(text) + "' has " + std::to_string(e.size()) +
                                " entries, expected " + std::to_string(*n));
  }
  return ExponentVector(std::move(e));
}

std::vector<int> parse_int_set(std::string_view raw) {
  const std::string text = strip_blanks(raw);
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(static_cast<int>(parse_number(std::string_view(text).substr(pos, comma - pos), text)));
    pos = comma + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace monpow
