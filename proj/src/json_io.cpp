#include "yb/json_io.hpp"

#include <fstream>

namespace yb {

namespace {

InputError bad(const std::string& what) { return InputError("malformed input: " + what); }

std::vector<Scalar> coords_from_json(const json& arr, const ScalarField& f, int dim) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
    throw bad("coordinate array of length " + std::to_string(dim) + " expected");
  std::vector<Scalar> out;
  out.reserve(dim);
  for (const auto& e : arr) out.push_back(parse_scalar(e.get<std::string>(), f));
  return out;
}

json coords_to_json(std::span<const Scalar> coords) {
  json arr = json::array();
  for (const auto& c : coords) arr.push_back(c.str());
  return arr;
}

} // namespace

json field_to_json(const ScalarField& f) {
  switch (f.kind()) {
    case FieldKind::Rationals: return {{"kind", "rationals"}};
    case FieldKind::Cyclotomic: return {{"kind", "cyclotomic"}, {"m", f.order()}};
    case FieldKind::PrimeField: return {{"kind", "prime"}, {"p", f.characteristic()}};
  }
  throw bad("unknown field kind");
}

ScalarField field_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return ScalarField::rationals();
  if (kind == "cyclotomic") return ScalarField::cyclotomic(j.at("m").get<unsigned>());
  if (kind == "prime") return ScalarField::prime_field(j.at("p").get<std::uint64_t>());
  throw bad("unknown field kind '" + kind + "'");
}

json matrix_to_json(const LinearOperator& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return {{"field", field_to_json(m.field())}, {"n", m.dim()}, {"rows", std::move(rows)}};
}

LinearOperator matrix_from_json(const json& j) {
  ScalarField f = field_from_json(j.at("field"));
  const int n = j.at("n").get<int>();
  int base = n;
  for (int b = 1; b * b <= n; ++b)
    if (b * b == n) base = b;
  LinearOperator m(f, n, base);
  const json& rows = j.at("rows");
  if (static_cast<int>(rows.size()) != n) throw bad("row count");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) throw bad("column count in row " + std::to_string(r));
    for (int c = 0; c < n; ++c) m.set(r, c, parse_scalar(rows[r][c].get<std::string>(), f));
  }
  return m;
}

// ---------------------------------------------------------------------------

namespace {

json table_entries_to_json(int dim, const std::function<std::span<const Scalar>(int, int)>& get) {
  json arr = json::array();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      auto row = get(i, j);
      bool nonzero = false;
      for (const auto& s : row) nonzero = nonzero || !s.is_zero();
      if (!nonzero) continue;
      arr.push_back({{"i", i}, {"j", j}, {"coords", coords_to_json(row)}});
    }
  return arr;
}

} // namespace

json structure_to_json(const AnyStructure& s) {
  json j;
  if (const auto* a = std::get_if<AssociativeAlgebra>(&s)) {
    j["kind"] = "associative";
    j["field"] = field_to_json(a->field());
    j["dim"] = a->dim();
    j["basis_names"] = a->basis_names();
    j["mult"] = table_entries_to_json(a->dim(), [&](int i, int k) { return a->product(i, k); });
    j["unit"] = coords_to_json(a->unit());
  } else if (const auto* l = std::get_if<LieSuperalgebra>(&s)) {
    j["kind"] = "super";
    j["field"] = field_to_json(l->field());
    j["dim"] = l->dim();
    j["basis_names"] = l->basis_names();
    j["grades"] = l->grades();
    j["bracket"] = table_entries_to_json(l->dim(), [&](int i, int k) { return l->bracket_of(i, k); });
  } else {
    const auto& g = std::get<GThetaLieAlgebra>(s);
    j["kind"] = "gtheta";
    j["field"] = field_to_json(g.field());
    j["dim"] = g.dim();
    j["basis_names"] = g.basis_names();
    json grades = json::array();
    for (int i = 0; i < g.dim(); ++i) grades.push_back(g.grade(i));
    j["grades"] = std::move(grades);
    j["group"] = {{"orders", g.group().orders()}};
    j["theta_exponents"] = g.theta().exponents();
    j["bracket"] = table_entries_to_json(g.dim(), [&](int i, int k) { return g.bracket_of(i, k); });
  }
  return j;
}

AnyStructure structure_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  ScalarField f = field_from_json(j.at("field"));
  const int dim = j.at("dim").get<int>();
  std::vector<std::string> names;
  if (j.contains("basis_names")) names = j.at("basis_names").get<std::vector<std::string>>();

  auto fill = [&](const json& entries, auto&& setter) {
    for (const auto& e : entries) {
      const int i = e.at("i").get<int>();
      const int jj = e.at("j").get<int>();
      if (i < 0 || i >= dim || jj < 0 || jj >= dim) throw bad("structure-constant index out of range");
      setter(i, jj, coords_from_json(e.at("coords"), f, dim));
    }
  };

  if (kind == "associative") {
    AssociativeAlgebra a(f, dim, names);
    if (j.contains("mult")) fill(j.at("mult"), [&](int i, int jj, std::vector<Scalar> c) {
      a.set_product(i, jj, std::move(c));
    });
    a.set_unit(coords_from_json(j.at("unit"), f, dim));
    return a;
  }
  if (kind == "super") {
    std::vector<int> grades = j.at("grades").get<std::vector<int>>();
    LieSuperalgebra l(f, dim, std::move(grades), names);
    if (j.contains("bracket")) fill(j.at("bracket"), [&](int i, int jj, std::vector<Scalar> c) {
      l.set_bracket(i, jj, std::move(c));
    });
    return l;
  }
  if (kind == "gtheta") {
    FiniteAbelianGroup group(j.at("group").at("orders").get<std::vector<unsigned>>());
    std::vector<FiniteAbelianGroup::Elem> grades;
    for (const auto& g : j.at("grades")) grades.push_back(g.get<FiniteAbelianGroup::Elem>());
    ColorFunction theta(group, j.at("theta_exponents").get<std::vector<std::vector<long>>>());
    GThetaLieAlgebra l(f, dim, group, std::move(grades), std::move(theta), names);
    if (j.contains("bracket")) fill(j.at("bracket"), [&](int i, int jj, std::vector<Scalar> c) {
      l.set_bracket(i, jj, std::move(c));
    });
    return l;
  }
  throw bad("unknown structure kind '" + kind + "'");
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return j;
}

void save_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << "\n";
}

AnyStructure load_structure(const std::filesystem::path& path) {
  return structure_from_json(load_json(path));
}

AnyStructure resolve_structure_ref(const std::string& ref, const std::filesystem::path& base_dir) {
  for (const auto& name : catalog_names())
    if (name == ref) return catalog(ref);
  std::filesystem::path p(ref);
  if (p.is_relative()) p = base_dir / p;
  return load_structure(p);
}

// ---------------------------------------------------------------------------

namespace {

ParamTable table_from_json(const json& alpha, const json& beta, std::vector<Scalar> colors,
                           const ScalarField& f) {
  const std::size_t k = colors.size();
  auto values = [&](const json& t) {
    std::vector<Scalar> out;
    if (t.contains("by_second")) {
      const auto& vals = t.at("by_second");
      if (vals.size() != k) throw bad("by_second table needs one value per color");
      for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v)
          out.push_back(parse_scalar(vals[v].get<std::string>(), f));
    } else if (t.contains("pairs")) {
      const auto& rows = t.at("pairs");
      if (rows.size() != k) throw bad("pairs table needs |X| rows");
      for (const auto& row : rows) {
        if (row.size() != k) throw bad("pairs table needs |X| columns");
        for (const auto& v : row) out.push_back(parse_scalar(v.get<std::string>(), f));
      }
    } else {
      throw bad("table needs 'by_second' or 'pairs'");
    }
    return out;
  };
  ParamTable t;
  t.alpha = values(alpha);
  t.beta = values(beta);
  t.colors = std::move(colors);
  return t;
}

} // namespace

Recipe recipe_from_json(const json& j, const std::filesystem::path& base_dir) {
  Recipe r;
  r.family = family_from_name(j.at("family").get<std::string>());
  if (j.contains("structure") && !j.at("structure").is_null()) {
    r.structure_ref = j.at("structure").get<std::string>();
    r.structure = resolve_structure_ref(r.structure_ref, base_dir);
  }
  const json params = j.value("params", json::object());

  if (r.family == Family::Split) {
    r.split_field = params.contains("field") ? field_from_json(params.at("field"))
                                             : ScalarField::rationals();
    r.split_dim = params.at("n").get<int>();
    r.split_c_index = params.at("c_index").get<int>();
    auto load_map = [&](const char* key) {
      BilinearMap m = BilinearMap::zeros(*r.split_field, r.split_dim);
      if (params.contains(key))
        for (const auto& e : params.at(key))
          m.set(e.at("i").get<int>(), e.at("j").get<int>(),
                coords_from_json(e.at("coords"), *r.split_field, r.split_dim));
      return m;
    };
    r.split_f = load_map("f");
    r.split_g = load_map("g");
    return r;
  }

  const ScalarField& f = r.field();
  for (const char* key : {"alpha", "beta", "gamma", "p", "q", "s", "lambda", "mu", "eta"})
    if (params.contains(key)) r.params.emplace(key, parse_scalar(params.at(key).get<std::string>(), f));

  if (params.contains("z")) {
    const json& z = params.at("z");
    if (z.is_string() && z.get<std::string>() == "auto-center") {
      r.z_auto = true;
      r.z = auto_center(*r.structure);
    } else {
      r.z = coords_from_json(z, f, structure_dim(*r.structure));
    }
  }
  if (params.contains("colors"))
    for (const auto& c : params.at("colors")) r.colors.push_back(parse_scalar(c.get<std::string>(), f));

  if (params.contains("alpha_table") || params.contains("beta_table")) {
    if (!params.contains("alpha_table") || !params.contains("beta_table"))
      throw bad("super-colored recipes need both alpha_table and beta_table");
    r.table = table_from_json(params.at("alpha_table"), params.at("beta_table"), r.colors, f);
  }

  if (r.family == Family::WXZFromColored) {
    r.base_family = family_from_name(j.at("base_family").get<std::string>());
    if (params.contains("s_color")) r.color_s = parse_scalar(params.at("s_color").get<std::string>(), f);
    if (params.contains("t_color")) r.color_t = parse_scalar(params.at("t_color").get<std::string>(), f);
    if (!r.color_s && r.colors.size() >= 2) {
      r.color_s = r.colors[0];
      r.color_t = r.colors[1];
    }
  }
  return r;
}

Recipe load_recipe(const std::filesystem::path& path) {
  return recipe_from_json(load_json(path), path.parent_path());
}

json report_to_json(const CheckReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json witness;
  if (r.witness) {
    witness = {{"row", r.witness->row},
               {"col", r.witness->col},
               {"basis", r.witness->col_basis},
               {"lhs", r.witness->lhs},
               {"rhs", r.witness->rhs}};
  }
  return {{"check", r.check},
          {"params", std::move(params)},
          {"outcome", r.holds ? "holds" : "fails"},
          {"witness", std::move(witness)}};
}

json census_to_json(const SearchResult& r) {
  json sols = json::array();
  for (const auto& s : r.solutions) {
    json rows = json::array();
    for (int row = 0; row < 4; ++row) {
      json jr = json::array();
      for (int col = 0; col < 4; ++col) jr.push_back(static_cast<int>(s.entries[row * 4 + col]));
      rows.push_back(std::move(jr));
    }
    sols.push_back({{"index", s.index},
                    {"rows", std::move(rows)},
                    {"invertible", s.invertible},
                    {"family3", s.family3}});
  }
  std::size_t invertible_count = 0;
  for (const auto& s : r.solutions) invertible_count += s.invertible ? 1 : 0;
  return {{"field", "f" + std::to_string(r.p)},
          {"p", r.p},
          {"invertible_only", r.invertible_only},
          {"total_candidates", r.total},
          {"solution_count", r.solutions.size()},
          {"invertible_count", invertible_count},
          {"solutions", std::move(sols)}};
}

} // namespace yb
