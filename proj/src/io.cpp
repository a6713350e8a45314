#include "qk/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qk/errors.hpp"

namespace qk {

namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

std::vector<int> as_int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected a list of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string key_text(const TensorKey& key) {
  std::string s = "(";
  for (std::size_t k = 0; k < key.size(); ++k) {
    if (k) s += ", ";
    s += key[k].to_string();
  }
  return s + ")";
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw InputError(path.string() + ": " + err.what());
  }
}

Quiver quiver_from_json(const Json& j) {
  const int n = as_int(field(j, "vertices"), "vertices");
  if (n < 0) throw InputError("vertices: must be non-negative");
  const Json& arrows = field(j, "arrows");
  if (!arrows.is_array()) throw InputError("arrows: expected a list of [tail, head] pairs");
  std::vector<Arrow> list;
  for (const auto& a : arrows) {
    auto th = as_int_list(a, "arrow");
    if (th.size() != 2) throw InputError("arrow: expected [tail, head]");
    list.push_back({th[0], th[1]});
  }
  return Quiver(n, std::move(list));
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.tail, a.head});
  return {{"vertices", q.num_vertices()}, {"arrows", arrows}};
}

std::pair<DimVector, OrbitSpec> orbit_from_json(const Quiver& q, const Json& j) {
  DimVector e = as_int_list(field(j, "dim"), "dim");
  if (static_cast<int>(e.size()) != q.num_vertices()) {
    throw InputError("dim: expected " + std::to_string(q.num_vertices()) + " entries");
  }
  const Json& mults = field(j, "mults");
  if (!mults.is_array()) throw InputError("mults: expected a list");
  std::vector<std::pair<DimVector, int>> list;
  for (const auto& item : mults) {
    DimVector root = as_int_list(field(item, "root"), "root");
    const int m = as_int(field(item, "m"), "m");
    if (m < 0) throw InputError("m: multiplicities must be non-negative");
    if (static_cast<int>(root.size()) != q.num_vertices()) {
      throw InputError("root: expected " + std::to_string(q.num_vertices()) + " entries");
    }
    list.emplace_back(std::move(root), m);
  }
  OrbitSpec orbit = make_orbit(q, std::move(list));
  validate_orbit(q, e, orbit);
  return {std::move(e), std::move(orbit)};
}

Json to_json(const DimVector& e, const OrbitSpec& orbit) {
  Json mults = Json::array();
  for (const auto& [root, m] : orbit.mults) mults.push_back({{"root", root}, {"m", m}});
  return {{"dim", e}, {"mults", mults}};
}

ResolutionPair pair_from_json(const Json& j) {
  ResolutionPair p{as_int_list(field(j, "i"), "i"), as_int_list(field(j, "r"), "r")};
  if (p.i.size() != p.r.size()) throw InputError("pair: \"i\" and \"r\" differ in length");
  return p;
}

Json to_json(const ResolutionPair& pair) { return {{"i", pair.i}, {"r", pair.r}}; }

QuiverRep rep_from_json(const Quiver& q, const Json& j) {
  QuiverRep rep;
  rep.dims = as_int_list(field(j, "dim"), "dim");
  if (static_cast<int>(rep.dims.size()) != q.num_vertices()) {
    throw InputError("dim: expected " + std::to_string(q.num_vertices()) + " entries");
  }
  for (int d : rep.dims) {
    if (d < 0) throw InputError("dim: entries must be non-negative");
  }
  const Json& maps = field(j, "maps");
  if (!maps.is_array() || maps.size() != q.arrows().size()) {
    throw InputError("maps: expected one matrix per arrow");
  }
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& a = q.arrows()[k];
    IntMatrix m(rep.dims[a.head - 1], rep.dims[a.tail - 1]);
    const Json& rows = maps[k];
    if (!rows.is_array() || static_cast<int>(rows.size()) != m.rows) {
      throw InputError("maps[" + std::to_string(k) + "]: expected " + std::to_string(m.rows) +
                       " rows");
    }
    for (int r = 0; r < m.rows; ++r) {
      auto row = as_int_list(rows[r], "matrix row");
      if (static_cast<int>(row.size()) != m.cols) {
        throw InputError("maps[" + std::to_string(k) + "]: expected " + std::to_string(m.cols) +
                         " columns");
      }
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = row[c];
    }
    rep.maps.push_back(std::move(m));
  }
  validate_rep(q, rep);
  return rep;
}

Json to_json(const QuiverRep& rep) {
  Json maps = Json::array();
  for (const auto& m : rep.maps) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
      rows.push_back(row);
    }
    maps.push_back(rows);
  }
  return {{"dim", rep.dims}, {"maps", maps}};
}

Json terms_to_json(const TensorElement& t) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : t.sorted_terms()) {
    Json mu = Json::array();
    for (const auto& p : key) mu.push_back(p.vec());
    terms.push_back({{"mu", mu}, {"coeff", coeff}});
  }
  return terms;
}

TensorElement terms_from_json(const Json& terms, std::size_t arity) {
  if (!terms.is_array()) throw InputError("terms: expected a list");
  TensorElement t(arity);
  for (const auto& item : terms) {
    const Json& mu = field(item, "mu");
    if (!mu.is_array() || mu.size() != arity) {
      throw InputError("mu: expected " + std::to_string(arity) + " partitions");
    }
    TensorKey key;
    for (const auto& p : mu) {
      try {
        key.emplace_back(as_int_list(p, "partition"));
      } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
      }
    }
    const Json& c = field(item, "coeff");
    if (!c.is_number_integer()) throw InputError("coeff: expected an integer");
    t.add(std::move(key), c.get<Coeff>());
  }
  return t;
}

Json to_json(const CoefficientTable& table, bool cohomological) {
  Json j;
  j["codim"] = table.codim;
  j["caveat"] = table.caveat.empty() ? Json(nullptr) : Json(table.caveat);
  j["pair"] = to_json(table.pair);
  j["terms"] = terms_to_json(cohomological ? cohomological_part(table) : table.tensor);
  return j;
}

std::string dump_table(const Json& j) {
  std::ostringstream out;
  out << "{\n  \"codim\": " << j.at("codim").dump() << ",\n  \"caveat\": " << j.at("caveat").dump()
      << ",\n  \"pair\": {\"i\": " << j.at("pair").at("i").dump()
      << ", \"r\": " << j.at("pair").at("r").dump() << "},\n  \"terms\": [";
  const Json& terms = j.at("terms");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    out << (k ? ",\n    " : "\n    ") << "{\"mu\": " << terms[k].at("mu").dump()
        << ", \"coeff\": " << terms[k].at("coeff").dump() << "}";
  }
  out << (terms.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

CoefficientTable table_from_json(const Json& j, std::size_t arity) {
  CoefficientTable table;
  table.codim = as_int(field(j, "codim"), "codim");
  if (j.contains("caveat") && j.at("caveat").is_string()) {
    table.caveat = j.at("caveat").get<std::string>();
  }
  if (j.contains("pair")) table.pair = pair_from_json(j.at("pair"));
  table.tensor = terms_from_json(field(j, "terms"), arity);
  return table;
}

std::string table_to_text(const CoefficientTable& table, bool cohomological) {
  const TensorElement t = cohomological ? cohomological_part(table) : table.tensor;
  std::ostringstream out;
  out << "codim  " << table.codim << "\n";
  out << "pair   " << table.pair.to_string() << "\n";
  if (!table.caveat.empty()) out << "caveat " << table.caveat << "\n";
  const auto terms = t.sorted_terms();
  std::size_t width = 5;
  for (const auto& [key, c] : terms) width = std::max(width, std::to_string(c).size());
  out << std::string(width - 5, ' ') << "coeff  degree  mu\n";
  for (const auto& [key, c] : terms) {
    const std::string cs = std::to_string(c);
    const std::string ds = std::to_string(degree(key));
    out << std::string(width - cs.size(), ' ') << cs << "  " << std::string(6 - std::min<std::size_t>(6, ds.size()), ' ')
        << ds << "  " << key_text(key) << "\n";
  }
  return out.str();
}

}  // namespace qk
