#include "theta/json_io.hpp"

namespace theta::io {

namespace {

constexpr std::int64_t kSafeInteger = (std::int64_t{1} << 53);

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw DomainError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw DomainError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw DomainError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw DomainError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::int64_t> int_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw DomainError(std::string("field '") + key + "' must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw DomainError(std::string("field '") + key + "' must hold integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw DomainError(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw DomainError(std::string("field '") + key + "' must hold strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

Json rational_json(const Rational& r) { return rational_to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  throw DomainError("rationals are \"num/den\" strings");
}

Json integer_json(const Integer& x) {
  if (abs(x) <= kSafeInteger) return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw DomainError("'" + j.get<std::string>() + "' is not an integer");
    }
  }
  throw DomainError("integers are JSON numbers or decimal strings");
}

Json to_json(const DirectedModularGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) vertices.push_back({{"id", v.id}, {"genus", v.genus}, {"degree", v.degree}});
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"id", e.id}, {"source", e.source}, {"target", e.target}});
  return {{"vertices", vertices}, {"edges", edges}, {"pos_markings", g.pos_markings}, {"neg_markings", g.neg_markings}};
}

DirectedModularGraph graph_from_json(const Json& j) {
  DirectedModularGraph g;
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw DomainError("field 'vertices' must be an array");
  for (const auto& v : vertices) g.vertices.push_back({string_field(v, "id"), int_field(v, "genus"), int_field(v, "degree")});
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw DomainError("field 'edges' must be an array");
  for (const auto& e : edges) g.edges.push_back({string_field(e, "id"), string_field(e, "source"), string_field(e, "target")});
  g.pos_markings = string_list(j, "pos_markings");
  g.neg_markings = string_list(j, "neg_markings");
  const auto problems = validate(g);
  if (!problems.empty()) throw DomainError("invalid graph: " + problems.front());
  return g;
}

Json to_json(const StratumLabel& l) {
  return {{"degrees", l.degrees}, {"ranks", l.ranks}, {"j", l.j}};
}

StratumLabel label_from_json(const Json& j) {
  StratumLabel l;
  l.degrees = int_list(j, "degrees");
  l.ranks = int_list(j, "ranks");
  const std::int64_t idx = int_field(j, "j");
  if (idx < 0) throw DomainError("field 'j' must be nonnegative");
  l.j = static_cast<std::size_t>(idx);
  return l;
}

Json to_json(const WeightVector& w) {
  Json entries = Json::array();
  for (const auto& x : w.w) entries.push_back(rational_json(x));
  return {{"w", entries}, {"j_prime", w.j_prime}};
}

WeightVector weight_vector_from_json(const Json& j) {
  WeightVector w;
  const Json& entries = field(j, "w");
  if (!entries.is_array()) throw DomainError("field 'w' must be an array");
  for (const auto& x : entries) w.w.push_back(rational_from_json(x));
  const std::int64_t jp = int_field(j, "j_prime");
  if (jp < 1) throw DomainError("field 'j_prime' is 1-based");
  w.j_prime = static_cast<std::size_t>(jp);
  return w;
}

Json to_json(const CenterWeights& c) {
  Json v = Json::array();
  for (const auto& x : c.v) v.push_back(integer_json(x));
  Json out{{"v", v},
           {"wt_rk", integer_json(c.wt_rk)},
           {"wt_deg", rational_json(c.wt_deg)},
           {"wt_e", integer_json(c.wt_e)},
           {"wt_k", {integer_json(c.wt_k.lo), integer_json(c.wt_k.hi)}},
           {"wt_ev", {integer_json(c.wt_ev.lo), integer_json(c.wt_ev.hi)}},
           {"combined", {rational_json(c.combined.lo), rational_json(c.combined.hi)}}};
  out["wt_deg_piecewise"] = c.wt_deg_piecewise ? rational_json(*c.wt_deg_piecewise) : Json(nullptr);
  return out;
}

Json to_json(const AdmissibleResult& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    strata.push_back({{"weights", to_json(s.weights)}, {"label", to_json(s.label)}, {"max_weight", rational_json(s.max_weight)}});
  }
  return {{"radius", rational_json(r.radius)},
          {"lattice_radius", r.lattice_radius},
          {"lattice_points", r.lattice_points},
          {"count", r.strata.size()},
          {"strata", strata}};
}

Json to_json(const LaurentSeries& s) {
  Json terms = Json::array();
  for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it) {
    terms.push_back({{"exp", it->first}, {"coeff", to_string(it->second)}});
  }
  return {{"var", s.var() == SeriesVar::z ? "z" : "zeta"},
          {"max_exp", s.max_exp()},
          {"trunc", s.trunc()},
          {"terms", terms},
          {"text", to_string(s)}};
}

LaurentSeries series_from_json(const Json& j) {
  const std::string var = string_field(j, "var");
  if (var != "z" && var != "zeta") throw DomainError("series variable must be z or zeta");
  LaurentSeries s(int_field(j, "max_exp"), int_field(j, "trunc"), var == "z" ? SeriesVar::z : SeriesVar::zeta);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw DomainError("field 'terms' must be an array");
  for (const auto& t : terms) s.add_term(int_field(t, "exp"), parse_poly(string_field(t, "coeff")));
  return s;
}

Json to_json(const SplittingType& t) {
  return {{"rank", t.rank}, {"length", t.length}, {"kind", to_string(t.kind)}, {"rows", t.rows}};
}

SplittingType splitting_type_from_json(const Json& j) {
  ChainKind kind = ChainKind::kUnspecified;
  if (j.is_object() && j.contains("kind")) {
    const std::string k = string_field(j, "kind");
    if (k == "bridge") kind = ChainKind::kBridge;
    else if (k == "tail") kind = ChainKind::kTail;
    else if (k != "chain") throw DomainError("kind must be chain, bridge or tail");
  }
  const Json& rows_json = field(j, "rows");
  if (!rows_json.is_array()) throw DomainError("field 'rows' must be an array");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : rows_json) {
    if (!row.is_array()) throw DomainError("each row must be an array");
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw DomainError("row entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  return SplittingType(int_field(j, "rank"), int_field(j, "length"), std::move(rows), kind);
}

Json to_json(const WeightedFiltration& f) {
  Json jumps = Json::array();
  for (const auto& jump : f.jumps) {
    jumps.push_back({{"weight", rational_json(jump.weight)},
                     {"rank", jump.piece.rank},
                     {"degree", rational_json(jump.piece.degree)}});
  }
  Json out{{"jumps", jumps}};
  out["j"] = f.j ? Json(*f.j) : Json(nullptr);
  return out;
}

Json to_json(const NuValue& v) {
  return {{"numerator", rational_json(v.numerator)},
          {"radicand", rational_json(v.radicand)},
          {"signed_square", rational_json(v.signed_square())},
          {"value", v.value()}};
}

Json to_json(const std::optional<BiWeight>& w) {
  if (!w) return nullptr;
  return {{"q_weight", w->q_weight}, {"u_weight", w->u_weight}, {"text", to_string(*w)}};
}

Json to_json(const ConsistencyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"a", row.params.a},
                    {"d", row.params.d},
                    {"n", row.params.n},
                    {"closed_form", to_json(row.closed_form)},
                    {"oracle", to_json(row.oracle_resolved)},
                    {"oracle_literal", to_json(row.oracle_literal)},
                    {"match", row.match_resolved},
                    {"match_literal", row.match_literal}});
  }
  auto monomial = [](const std::optional<SeriesMonomial>& m) { return m ? Json(to_string(*m)) : Json(nullptr); };
  return {{"rows", rows},
          {"resolved_mismatches", r.resolved_mismatches},
          {"literal_mismatches", r.literal_mismatches},
          {"closed_over_sum", monomial(r.closed_over_sum)},
          {"base_over_sum", monomial(r.base_over_sum)},
          {"base_over_closed", monomial(r.base_over_closed)},
          {"difference_equation_holds", r.difference_equation_holds},
          {"diagnostics", r.diagnostics}};
}

}  // namespace theta::io
