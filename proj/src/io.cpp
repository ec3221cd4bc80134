#include "silt/io.hpp"

#include <filesystem>
#include <fstream>
#include <json.hpp>

namespace silt {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

[[noreturn]] void bad(const std::string& file, const std::string& field, const std::string& why) {
  throw Error(ErrKind::Parse, file + ": " + field + ": " + why);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad(path, "-", "cannot open file");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    bad(path, "-", e.what());
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrKind::Parse, path + ": -: cannot open file for writing");
  out << text;
}

i64 field_modulus(const json& j, const std::string& file) {
  if (!j.contains("field") || !j["field"].contains("p") || !j["field"]["p"].is_number_integer())
    bad(file, "field.p", "missing or not an integer");
  return j["field"]["p"].get<i64>();
}

std::string resolve(const std::string& anchor, const std::string& ref) {
  fs::path p(ref);
  if (p.is_absolute()) return p.string();
  return (fs::path(anchor).parent_path() / p).string();
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows}, {"cols", m.cols}, {"p", m.p}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j, const std::string& file) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("p") || !j.contains("entries"))
    bad(file, "matrix", "needs rows, cols, p, entries");
  Matrix m(j["rows"].get<int>(), j["cols"].get<int>(), j["p"].get<i64>());
  const json& e = j["entries"];
  if (int(e.size()) != m.rows) bad(file, "matrix.entries", "row count mismatch");
  for (int r = 0; r < m.rows; ++r) {
    if (int(e[r].size()) != m.cols) bad(file, "matrix.entries", "column count mismatch");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = e[r][c].get<i64>();
  }
  return m;
}

// rows x cols integer grid without the header (shape known from context)
Matrix grid_from_json(const json& j, int rows, int cols, i64 p, const std::string& file,
                      const std::string& field) {
  Matrix m(rows, cols, p);
  if (!j.is_array() || int(j.size()) != rows) bad(file, field, "expected " + std::to_string(rows) + " rows");
  Fp fp(p);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || int(j[r].size()) != cols)
      bad(file, field, "expected " + std::to_string(cols) + " columns");
    for (int c = 0; c < cols; ++c) m.at(r, c) = fp.reduce(j[r][c].get<i64>());
  }
  return m;
}

json grid_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

// vertex multiset [{"vertex": label, "mult": n}, ...] -> flat vertex list
std::vector<int> vertex_list(const json& j, const AlgebraPtr& a, const std::string& file,
                             const std::string& field) {
  std::vector<int> out;
  if (!j.is_array()) bad(file, field, "expected a list of {vertex, mult}");
  for (const json& item : j) {
    if (!item.contains("vertex") || !item.contains("mult")) bad(file, field, "needs vertex and mult");
    int v = a->quiver().vertex_index(item["vertex"].get<std::string>());
    if (v < 0) bad(file, field, "unknown vertex " + item["vertex"].get<std::string>());
    int mult = item["mult"].get<int>();
    if (mult < 0) bad(file, field, "negative multiplicity");
    for (int k = 0; k < mult; ++k) out.push_back(v);
  }
  return out;
}

json vertex_multiset(const std::vector<int>& verts, const AlgebraPtr& a) {
  json out = json::array();
  size_t i = 0;
  while (i < verts.size()) {
    size_t j = i;
    while (j < verts.size() && verts[j] == verts[i]) ++j;
    out.push_back(json{{"vertex", a->quiver().vertices[verts[i]]}, {"mult", int(j - i)}});
    i = j;
  }
  return out;
}

json fact_json(const Fact& f) {
  json mats = json::array();
  for (const Matrix& m : f.mats) mats.push_back(matrix_json(m));
  return json{{"kind", f.kind}, {"note", f.note}, {"mats", std::move(mats)}, {"ints", f.ints}};
}

Fact fact_from_json(const json& j, const std::string& file) {
  Fact f;
  if (!j.contains("kind") || !j.contains("note")) bad(file, "fact", "needs kind and note");
  f.kind = j["kind"].get<std::string>();
  f.note = j["note"].get<std::string>();
  for (const json& m : j.value("mats", json::array())) f.mats.push_back(matrix_from_json(m, file));
  for (const json& x : j.value("ints", json::array())) f.ints.push_back(x.get<i64>());
  return f;
}

}  // namespace

AlgebraPtr load_algebra(const std::string& path, i64 p_override) {
  json j = read_json(path);
  i64 p = p_override > 0 ? p_override : field_modulus(j, path);

  Quiver q;
  if (!j.contains("vertices") || !j["vertices"].is_array()) bad(path, "vertices", "missing list");
  for (const json& v : j["vertices"]) q.vertices.push_back(v.get<std::string>());

  for (const json& aj : j.value("arrows", json::array())) {
    Arrow ar;
    if (!aj.contains("name") || !aj.contains("from") || !aj.contains("to"))
      bad(path, "arrows", "needs name, from, to");
    ar.name = aj["name"].get<std::string>();
    ar.from = q.vertex_index(aj["from"].get<std::string>());
    ar.to = q.vertex_index(aj["to"].get<std::string>());
    if (ar.from < 0 || ar.to < 0) bad(path, "arrows", "endpoint is not a listed vertex");
    q.arrows.push_back(std::move(ar));
  }

  std::vector<Relation> rels;
  for (const json& rj : j.value("relations", json::array())) {
    Relation rel;
    for (const json& tj : rj) {
      RelTerm term;
      if (!tj.contains("coeff") || !tj.contains("path")) bad(path, "relations", "needs coeff and path");
      term.coeff = tj["coeff"].get<i64>();
      for (const json& an : tj["path"]) {
        int idx = q.arrow_index(an.get<std::string>());
        if (idx < 0) bad(path, "relations", "unknown arrow " + an.get<std::string>());
        term.arrows.push_back(idx);
      }
      rel.push_back(std::move(term));
    }
    rels.push_back(std::move(rel));
  }

  if (!j.contains("length_cap") || !j["length_cap"].is_number_integer())
    bad(path, "length_cap", "missing or not an integer");
  try {
    return Algebra::build(std::move(q), std::move(rels), j["length_cap"].get<int>(), p);
  } catch (const Error& e) {
    if (e.kind == ErrKind::Parse || e.kind == ErrKind::NotAdmissible ||
        e.kind == ErrKind::CapTooSmall || e.kind == ErrKind::FieldTooSmall)
      throw;
    bad(path, "-", e.what());
  }
}

void save_algebra(const AlgebraPtr& a, const std::string& path) {
  const Quiver& q = a->quiver();
  json arrows = json::array();
  for (const Arrow& ar : q.arrows)
    arrows.push_back(json{{"name", ar.name}, {"from", q.vertices[ar.from]}, {"to", q.vertices[ar.to]}});
  json rels = json::array();
  for (const Relation& rel : a->relations()) {
    json rj = json::array();
    for (const RelTerm& t : rel) {
      json names = json::array();
      for (int idx : t.arrows) names.push_back(q.arrows[idx].name);
      rj.push_back(json{{"coeff", t.coeff}, {"path", std::move(names)}});
    }
    rels.push_back(std::move(rj));
  }
  json j{{"field", {{"p", a->p()}}},
         {"vertices", q.vertices},
         {"arrows", std::move(arrows)},
         {"relations", std::move(rels)},
         {"length_cap", a->length_cap()}};
  write_text(path, j.dump(2) + "\n");
}

Module load_module(const std::string& path, const AlgebraPtr& a) {
  json j = read_json(path);
  if (field_modulus(j, path) != a->p()) bad(path, "field.p", "modulus differs from the algebra");
  const Quiver& q = a->quiver();

  Module m;
  m.alg = a;
  m.dims.assign(a->n_vertices(), 0);
  if (!j.contains("dims") || !j["dims"].is_object()) bad(path, "dims", "missing object");
  for (auto it = j["dims"].begin(); it != j["dims"].end(); ++it) {
    int v = q.vertex_index(it.key());
    if (v < 0) bad(path, "dims", "unknown vertex " + it.key());
    int d = it.value().get<int>();
    if (d < 0) bad(path, "dims", "negative dimension");
    m.dims[v] = d;
  }

  const json maps = j.value("maps", json::object());
  for (auto it = maps.begin(); it != maps.end(); ++it)
    if (q.arrow_index(it.key()) < 0) bad(path, "maps", "unknown arrow " + it.key());
  for (int ai = 0; ai < a->n_arrows(); ++ai) {
    const Arrow& ar = q.arrows[ai];
    int rows = m.dims[ar.from], cols = m.dims[ar.to];
    if (maps.contains(ar.name))
      m.arrow_maps.push_back(grid_from_json(maps[ar.name], rows, cols, a->p(), path, "maps." + ar.name));
    else if (rows == 0 || cols == 0)
      m.arrow_maps.push_back(Matrix(rows, cols, a->p()));
    else
      bad(path, "maps", "missing matrix for arrow " + ar.name);
  }

  try {
    validate_module(m);
  } catch (const Error& e) {
    bad(path, "maps", e.what());
  }
  return m;
}

void save_module(const Module& m, const std::string& path, const std::string& algebra_ref) {
  const Quiver& q = m.alg->quiver();
  json dims = json::object();
  for (int v = 0; v < m.alg->n_vertices(); ++v) dims[q.vertices[v]] = m.dims[v];
  json maps = json::object();
  for (int ai = 0; ai < m.alg->n_arrows(); ++ai) maps[q.arrows[ai].name] = grid_json(m.arrow_maps[ai]);
  json j{{"field", {{"p", m.alg->p()}}},
         {"algebra", algebra_ref},
         {"dims", std::move(dims)},
         {"maps", std::move(maps)}};
  write_text(path, j.dump(2) + "\n");
}

Presentation load_presentation(const std::string& path, const AlgebraPtr& a) {
  json j = read_json(path);
  if (field_modulus(j, path) != a->p()) bad(path, "field.p", "modulus differs from the algebra");
  if (!j.contains("p_minus1") || !j.contains("p0") || !j.contains("map"))
    bad(path, "-", "needs p_minus1, p0, map");
  std::vector<int> pm1 = vertex_list(j["p_minus1"], a, path, "p_minus1");
  std::vector<int> p0 = vertex_list(j["p0"], a, path, "p0");

  const json& mj = j["map"];
  if (!mj.is_array() || mj.size() != pm1.size()) bad(path, "map", "one row per p_minus1 copy");
  std::vector<std::vector<Vec>> entries(pm1.size(), std::vector<Vec>(p0.size()));
  for (size_t i = 0; i < pm1.size(); ++i) {
    if (!mj[i].is_array() || mj[i].size() != p0.size()) bad(path, "map", "one entry per p0 copy");
    for (size_t k = 0; k < p0.size(); ++k) {
      const json& ej = mj[i][k];
      if (!ej.is_array() || int(ej.size()) != a->dim())
        bad(path, "map", "entries are coordinate vectors of length " + std::to_string(a->dim()));
      Vec c(a->dim());
      for (int g = 0; g < a->dim(); ++g) c[g] = a->field().reduce(ej[g].get<i64>());
      entries[i][k] = std::move(c);
    }
  }
  try {
    return make_presentation(a, pm1, p0, entries);
  } catch (const Error& e) {
    bad(path, "map", e.what());
  }
}

void save_presentation(const Presentation& s, const std::string& path,
                       const std::string& algebra_ref) {
  const AlgebraPtr& a = s.p0.mod.alg;
  json map = json::array();
  for (size_t i = 0; i < s.pm1.vertices.size(); ++i) {
    json row = json::array();
    for (size_t k = 0; k < s.p0.vertices.size(); ++k) row.push_back(s.entries[i][k]);
    map.push_back(std::move(row));
  }
  json j{{"field", {{"p", a->p()}}},
         {"algebra", algebra_ref},
         {"p_minus1", vertex_multiset(s.pm1.vertices, a)},
         {"p0", vertex_multiset(s.p0.vertices, a)},
         {"map", std::move(map)}};
  write_text(path, j.dump(2) + "\n");
}

IndSet load_indset(const std::string& path, const AlgebraPtr& a) {
  json j = read_json(path);
  if (field_modulus(j, path) != a->p()) bad(path, "field.p", "modulus differs from the algebra");
  if (!j.contains("modules") || !j["modules"].is_array()) bad(path, "modules", "missing list");
  std::vector<Module> mods;
  for (const json& mf : j["modules"]) mods.push_back(load_module(resolve(path, mf.get<std::string>()), a));
  IndSet ind = enumerate_indecomposables(a, IndStrategy::UserSupplied, mods);
  if (j.contains("hom_table") && ind.hom_table != j["hom_table"].get<std::vector<std::vector<int>>>())
    bad(path, "hom_table", "cached table disagrees with recomputation");
  if (j.contains("ext_table") && ind.ext_table != j["ext_table"].get<std::vector<std::vector<int>>>())
    bad(path, "ext_table", "cached table disagrees with recomputation");
  return ind;
}

void save_indset(const IndSet& ind, const std::string& path, const std::string& algebra_ref) {
  fs::path dir = fs::path(path).parent_path();
  fs::path stem = fs::path(path).stem();
  json files = json::array();
  for (int i = 0; i < ind.size(); ++i) {
    std::string name = stem.string() + "_u" + std::to_string(i) + ".json";
    save_module(ind.modules[i], (dir / name).string(), algebra_ref);
    files.push_back(name);
  }
  json j{{"field", {{"p", ind.alg->p()}}},
         {"algebra", algebra_ref},
         {"modules", std::move(files)},
         {"hom_table", ind.hom_table},
         {"ext_table", ind.ext_table},
         {"tau", ind.tau_map}};
  write_text(path, j.dump(2) + "\n");
}

std::string report_json(const Report& r) {
  json routes = json::array();
  for (const Route& rt : r.routes) {
    json facts = json::array();
    for (const Fact& f : rt.facts) facts.push_back(fact_json(f));
    routes.push_back(json{{"name", rt.name}, {"verdict", rt.verdict}, {"certificate", std::move(facts)}});
  }
  json witnesses = json::object();
  for (const auto& w : r.witnesses) witnesses[w.first] = w.second;
  json j{{"verdict", r.verdict}, {"routes", std::move(routes)}, {"witnesses", std::move(witnesses)}};
  return j.dump(2) + "\n";
}

std::string enumerate_json(const std::vector<SiltingClass>& classes,
                           const std::vector<std::string>& files) {
  if (files.size() != classes.size())
    throw Error(ErrKind::Internal, "one file name per enumerated class");
  json list = json::array();
  for (size_t k = 0; k < classes.size(); ++k)
    list.push_back(json{{"module", files[k]},
                        {"class", classes[k].cls.members},
                        {"ext_projectives", classes[k].ext_proj.members}});
  json j{{"verdict", true}, {"count", int(classes.size())}, {"classes", std::move(list)}};
  return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrKind::Parse, std::string("report: -: ") + e.what());
  }
  Report r;
  if (!j.contains("verdict") || !j.contains("routes"))
    throw Error(ErrKind::Parse, "report: -: needs verdict and routes");
  r.verdict = j["verdict"].get<bool>();
  for (const json& rj : j["routes"]) {
    Route& rt = r.add_route(rj.value("name", ""));
    rt.verdict = rj.value("verdict", false);
    for (const json& fj : rj.value("certificate", json::array()))
      rt.facts.push_back(fact_from_json(fj, "report"));
  }
  const json wits = j.value("witnesses", json::object());
  for (auto it = wits.begin(); it != wits.end(); ++it)
    r.witness(it.key(), it.value().get<std::string>());
  return r;
}

}  // namespace silt
