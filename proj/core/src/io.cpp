#include "hypint/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hypint {
namespace {

using nlohmann::json;

Vec int_array(const json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("field '" + field + "' must be an array of integers");
  Vec out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("field '" + field + "' must contain only integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

Mat int_matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw InputError("field '" + field + "' must be a nonempty array of integer arrays");
  Mat out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_array(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

json big(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json big_matrix(const BigMat& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(big(x));
    out.push_back(r);
  }
  return out;
}

std::string after(const std::string& token, const std::string& key) {
  if (token.rfind(key, 0) != 0) throw InputError("series file: expected '" + key + "' in '" + token + "'");
  return token.substr(key.size());
}

}  // namespace

Vec parse_vector(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" ()");
    const auto e = item.find_last_not_of(" ()");
    if (b == std::string::npos) throw InputError("empty entry in vector '" + text + "'");
    const std::string s = item.substr(b, e - b + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw InputError("not an integer: '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty vector");
  return out;
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("document must be a JSON object");
  Document doc;
  const bool has_config = j.contains("points");
  const bool has_family = j.contains("C") || j.contains("D");
  if (has_config == has_family) throw InputError("document needs either field 'points' or fields 'C' and 'D'");
  if (has_config) {
    Mat points = int_matrix(j["points"], "points");
    if (!j.contains("aprime")) throw InputError("field 'aprime' is missing");
    Vec ap = int_array(j["aprime"], "aprime");
    std::vector<std::size_t> aprime;
    for (auto a : ap) {
      if (a < 1 || a > static_cast<std::int64_t>(points.size()))
        throw InputError("field 'aprime': index " + std::to_string(a) + " out of range 1.." + std::to_string(points.size()));
      aprime.push_back(static_cast<std::size_t>(a - 1));
    }
    std::optional<Vec> height;
    if (j.contains("height")) height = int_array(j["height"], "height");
    doc.config.emplace(std::move(points), aprime, height);
  } else {
    if (!j.contains("C") || !j.contains("D")) throw InputError("family needs both fields 'C' and 'D'");
    doc.family.emplace(int_matrix(j["C"], "C"), int_matrix(j["D"], "D"));
    doc.config.emplace(build_config(*doc.family));
  }
  if (j.contains("parameters")) {
    const json& ps = j["parameters"];
    if (!ps.is_array()) throw InputError("field 'parameters' must be an array of integer arrays");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      Vec u = int_array(ps[i], "parameters[" + std::to_string(i) + "]");
      if (u.size() != doc.config->n())
        throw InputError("field 'parameters[" + std::to_string(i) + "]' has length " + std::to_string(u.size()) +
                         ", expected " + std::to_string(doc.config->n()));
      doc.parameters.push_back(std::move(u));
    }
  }
  return doc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file '" + path + "'");
  out << text;
}

Document load_document(const std::string& path) { return parse_document(read_text_file(path)); }

std::string series_to_text(const SparseSeries& s, const LatticeConfig& cfg) {
  std::ostringstream out;
  out << "# series N=" << s.N << " M=" << s.M << " u=" << join(s.u) << " frontier=" << s.frontier << "\n";
  Vec order;
  for (std::size_t j = 0; j < cfg.N(); ++j) order.push_back(static_cast<std::int64_t>(cfg.original_index(j)) + 1);
  out << "# order " << join(order) << "\n";
  for (const auto& [e, c] : s.terms) out << "l=" << join(index_of(e, s.M)) << " e=" << join(e) << " c=" << c.get_str() << "\n";
  return out.str();
}

SparseSeries series_from_text(const std::string& text) {
  SparseSeries s;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, c, d, e;
    if (line[0] == '#') {
      ls >> a >> b;
      if (b != "series") continue;
      ls >> c >> d >> e;
      s.N = static_cast<std::size_t>(std::stoll(after(c, "N=")));
      s.M = static_cast<std::size_t>(std::stoll(after(d, "M=")));
      s.u = parse_vector(after(e, "u="));
      std::string f;
      ls >> f;
      s.frontier = std::stoll(after(f, "frontier="));
      header = true;
      continue;
    }
    if (!header) throw InputError("series file: term before header");
    ls >> a >> b >> c;
    Vec ex = parse_vector(after(b, "e="));
    if (ex.size() != s.N || parse_vector(after(a, "l=")) != index_of(ex, s.M))
      throw InputError("series file: inconsistent term '" + line + "'");
    Rat q;
    if (q.set_str(after(c, "c="), 10) != 0) throw InputError("series file: bad coefficient in '" + line + "'");
    q.canonicalize();
    s.terms[ex] = q;
  }
  if (!header) throw InputError("series file: missing header");
  return s;
}

std::string cone_to_json(const Cone& cone) {
  json j;
  j["ambient_dimension"] = cone.n;
  j["dimension"] = cone.dim();
  json gens = json::array();
  for (const auto& g : cone.generators) gens.push_back(g);
  j["generators"] = gens;
  j["span_basis"] = big_matrix(cone.span_basis);
  j["facets"] = big_matrix(cone.facets);
  j["lineality"] = cone.has_lineality;
  return j.dump();
}

std::string za_to_json(const ZAGroup& za) {
  json j;
  j["basis"] = big_matrix(za.basis);
  j["rank"] = za.rank;
  return j.dump();
}

}  // namespace hypint
