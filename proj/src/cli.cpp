#include "theta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "theta/json_io.hpp"

namespace theta::cli {

namespace {

using io::Json;

constexpr std::uint64_t kDefaultSeed = 20240601;

// What a subcommand produces: a JSON payload and its human-readable form.
struct Outcome {
  Json payload;
  std::string text;
  std::vector<std::string> notes;
};

using Action = std::function<Outcome()>;

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("THETA_STRATA_SEED");
  if (raw == nullptr || *raw == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') throw DomainError(std::string("THETA_STRATA_SEED is not an integer: ") + raw);
  return v;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

Json parse_json_arg(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

template <class T>
std::string join_values(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << ')';
  return os.str();
}

std::string rationals_text(const std::vector<Rational>& xs) {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(rational_to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string biweight_text(const std::optional<BiWeight>& w) { return w ? to_string(*w) : "0"; }

const char* kSignNote =
    "q weight uses the line orientation of A^1; the coordinate-function weight would give "
    "-a(d-1)^2 - (d+1)m";
const char* kCutNote =
    "cut_edge attaches the new positive marking at the edge source and the negative one at the target";

// transfer / series / three-point / consistency-report

void add_transfer(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("transfer", "Two-point image of <n> in degree d");
  auto a = std::make_shared<std::int64_t>();
  auto d = std::make_shared<std::int64_t>();
  auto n = std::make_shared<std::int64_t>();
  sub->add_option("--a", *a, "level")->required();
  sub->add_option("--d", *d, "degree")->required();
  sub->add_option("--n", *n, "input character")->required();
  sub->callback([&action, a, d, n] {
    action = [a, d, n] {
      const TransferParams params(*a, *d, *n);
      const auto image = transfer_two_point(params);
      Outcome out;
      out.payload = {{"a", *a}, {"d", *d}, {"n", *n}, {"m", params.m()}, {"image", io::to_json(image)}};
      out.text = biweight_text(image) + "\n";
      out.notes.push_back(kSignNote);
      return out;
    };
  });
}

void add_series(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("series", "Two-point generating series in z^-1");
  struct Opts {
    std::int64_t a = 1, n = 0, trunc = 8;
    bool closed = false, sum = false, base = false, q1 = false, zeta = false;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--a", o->a, "level")->required();
  sub->add_option("--n", o->n, "input character")->required();
  sub->add_option("--trunc", o->trunc, "number of tracked z-degrees")->required();
  auto* closed = sub->add_flag("--closed", o->closed, "closed geometric form");
  auto* sum = sub->add_flag("--sum", o->sum, "degree-wise sum of transfer values (default)");
  auto* base = sub->add_flag("--base", o->base, "base-case identity, -a < n <= a");
  closed->excludes(sum)->excludes(base);
  sum->excludes(base);
  sub->add_flag("--q1", o->q1, "set q to 1");
  sub->add_flag("--zeta", o->zeta, "rewrite z^d as zeta^(2ad) and multiply by zeta^(n-a)");
  sub->callback([&action, o] {
    action = [o] {
      if (o->trunc < 1) throw DomainError("--trunc must be positive");
      Outcome out;
      SeriesPresentation kind = SeriesPresentation::kDegreeSum;
      if (o->closed) kind = SeriesPresentation::kClosedForm;
      if (o->base) kind = SeriesPresentation::kBaseCase;
      LaurentSeries s(0, 1);
      if (o->zeta) {
        if (kind != SeriesPresentation::kDegreeSum) throw DomainError("--zeta applies to the sum presentation");
        s = zeta_normalized(o->a, o->n, o->trunc);
        if (o->q1) s = set_q_to_one(s);
      } else if (kind == SeriesPresentation::kDegreeSum) {
        s = gen_series_sum(o->a, o->n, o->trunc, o->q1 ? QMode::kSetToOne : QMode::kRetain);
      } else {
        s = presentation_series(kind, o->a, o->n, o->trunc);
        const auto ratio = normalization_ratio(kind, SeriesPresentation::kDegreeSum, o->a, o->n, o->n, o->trunc);
        out.notes.push_back(to_string(kind) + " = " + (ratio ? to_string(*ratio) : std::string("(no monomial)")) +
                            " * sum, with q = 1");
      }
      out.payload = io::to_json(s);
      out.payload["presentation"] = to_string(kind);
      out.text = to_string(s) + "\n";
      return out;
    };
  });
}

void add_three_point(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("three-point", "Three-point map on u^m (x) u^n");
  auto v = std::make_shared<std::array<std::int64_t, 4>>();
  sub->add_option("--a", (*v)[0], "level")->required();
  sub->add_option("--m", (*v)[1], "first character")->required();
  sub->add_option("--n", (*v)[2], "second character")->required();
  sub->add_option("--trunc", (*v)[3], "number of tracked z-degrees")->required();
  sub->callback([&action, v] {
    action = [v] {
      if ((*v)[3] < 1) throw DomainError("--trunc must be positive");
      const auto s = transfer_three_point((*v)[0], (*v)[1], (*v)[2], (*v)[3]);
      Outcome out;
      out.payload = io::to_json(s);
      out.text = to_string(s) + "\n";
      return out;
    };
  });
}

void add_consistency(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("consistency-report", "Closed form against the invariants oracle");
  struct Opts {
    std::int64_t a = 1, n_min = -12, n_max = 12, d_min = -3, d_max = 3, trunc = 8;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--a", o->a, "level")->required();
  sub->add_option("--n-min", o->n_min, "smallest n")->capture_default_str();
  sub->add_option("--n-max", o->n_max, "largest n")->capture_default_str();
  sub->add_option("--d-min", o->d_min, "smallest d")->capture_default_str();
  sub->add_option("--d-max", o->d_max, "largest d")->capture_default_str();
  sub->add_option("--trunc", o->trunc, "series window for the normalization check")->capture_default_str();
  sub->callback([&action, o] {
    action = [o] {
      if (o->n_min > o->n_max || o->d_min > o->d_max) throw DomainError("empty parameter range");
      if (o->trunc < 1) throw DomainError("--trunc must be positive");
      const auto r = consistency_report(o->a, o->n_min, o->n_max, o->d_min, o->d_max, o->trunc);
      Outcome out;
      out.payload = io::to_json(r);
      std::ostringstream os;
      os << "a\td\tn\tclosed_form\toracle\tmatch\n";
      for (const auto& row : r.rows) {
        os << row.params.a << '\t' << row.params.d << '\t' << row.params.n << '\t' << biweight_text(row.closed_form)
           << '\t' << biweight_text(row.oracle_resolved) << '\t' << (row.match_resolved ? "yes" : "NO") << '\n';
      }
      auto mono = [](const std::optional<SeriesMonomial>& m) { return m ? to_string(*m) : std::string("none"); };
      os << "rows: " << r.rows.size() << ", mismatches: " << r.resolved_mismatches
         << " (coordinate-function q weight: " << r.literal_mismatches << ")\n";
      os << "closed / sum: " << mono(r.closed_over_sum) << '\n';
      os << "base / sum: " << mono(r.base_over_sum) << '\n';
      os << "base / closed: " << mono(r.base_over_closed) << '\n';
      os << "difference equation: " << (r.difference_equation_holds ? "holds" : "FAILS") << '\n';
      out.text = os.str();
      out.notes = r.diagnostics;
      out.notes.push_back(kSignNote);
      return out;
    };
  });
}

// strata

struct ParamOpts {
  std::optional<std::int64_t> N, g, n, p, d;
  bool any_shape() const { return N || g || n || p; }
  StrataParams build() const {
    if (!d) throw DomainError("--d is required");
    return StrataParams(N.value_or(1), g.value_or(0), n.value_or(0), p.value_or(0), *d);
  }
};

void add_param_options(CLI::App* sub, ParamOpts& o, bool required) {
  auto* N = sub->add_option("--N", o.N, "rank");
  auto* g = sub->add_option("--g", o.g, "genus");
  auto* n = sub->add_option("--n", o.n, "negative markings");
  auto* p = sub->add_option("--p", o.p, "positive markings");
  auto* d = sub->add_option("--d", o.d, "degree");
  if (required) {
    for (auto* opt : {N, g, n, p, d}) opt->required();
  }
}

std::string label_text(const StratumLabel& l) {
  return "degrees " + join_values(l.degrees) + " ranks " + join_values(l.ranks) + " j " + std::to_string(l.j);
}

std::string weights_text(const WeightVector& w) {
  return "w " + rationals_text(w.w) + " j' " + std::to_string(w.j_prime);
}

std::string interval_text(const std::string& lo, const std::string& hi) { return "[" + lo + ", " + hi + "]"; }

std::string center_text(const CenterWeights& c) {
  std::ostringstream os;
  os << "v " << join_values(c.v) << '\n';
  os << "wt_rk " << c.wt_rk << '\n';
  os << "wt_deg " << rational_to_string(c.wt_deg);
  if (c.wt_deg_piecewise) os << " (piecewise " << rational_to_string(*c.wt_deg_piecewise) << ")";
  os << '\n';
  os << "wt_e " << c.wt_e << '\n';
  os << "wt_k " << interval_text(c.wt_k.lo.str(), c.wt_k.hi.str()) << '\n';
  os << "wt_ev " << interval_text(c.wt_ev.lo.str(), c.wt_ev.hi.str()) << '\n';
  os << "combined " << interval_text(rational_to_string(c.combined.lo), rational_to_string(c.combined.hi)) << '\n';
  return os.str();
}

struct LineBundleOpts {
  std::int64_t a = 1, b = 0, kappa = 0;
};

void add_line_bundle_options(CLI::App* sub, LineBundleOpts& o, bool required) {
  auto* a = sub->add_option("--a", o.a, "level exponent");
  auto* b = sub->add_option("--b", o.b, "rank-line exponent");
  auto* k = sub->add_option("--kappa", o.kappa, "evaluation weight bound");
  if (required) {
    for (auto* opt : {a, b, k}) opt->required();
  } else {
    for (auto* opt : {a, b, k}) opt->capture_default_str();
  }
}

void add_strata(CLI::App& app, Action& action) {
  auto* strata = app.add_subcommand("strata", "Boundary strata and their weights");
  strata->require_subcommand(1);

  auto* en = strata->add_subcommand("enumerate", "Strata whose weight interval reaches 0");
  auto ep = std::make_shared<ParamOpts>();
  auto el = std::make_shared<LineBundleOpts>();
  add_param_options(en, *ep, true);
  add_line_bundle_options(en, *el, true);
  en->callback([&action, ep, el] {
    action = [ep, el] {
      const auto params = ep->build();
      const auto r = admissible_strata(params, el->a, el->b, el->kappa);
      Outcome out;
      out.payload = io::to_json(r);
      std::ostringstream os;
      os << "radius " << rational_to_string(r.radius) << '\n';
      os << "lattice radius " << r.lattice_radius << ", points scanned " << r.lattice_points << '\n';
      os << "admissible " << r.strata.size() << '\n';
      for (const auto& s : r.strata) {
        os << weights_text(s.weights) << " | " << label_text(s.label) << " | max " << rational_to_string(s.max_weight)
           << '\n';
      }
      out.text = os.str();
      return out;
    };
  });

  auto* we = strata->add_subcommand("weights", "Weight vector and center weights of a label");
  auto wlabel = std::make_shared<std::string>();
  auto wp = std::make_shared<ParamOpts>();
  auto wl = std::make_shared<LineBundleOpts>();
  we->add_option("--label", *wlabel, "label JSON {degrees, ranks, j}")->required();
  add_param_options(we, *wp, false);
  add_line_bundle_options(we, *wl, false);
  we->callback([&action, wlabel, wp, wl] {
    action = [wlabel, wp, wl] {
      const auto label = io::label_from_json(parse_json_arg(*wlabel, "--label"));
      std::int64_t rank = 0, deg = 0;
      for (auto r : label.ranks) rank += r;
      for (auto x : label.degrees) deg += x;
      ParamOpts p = *wp;
      if (!p.d) p.d = deg;
      const StrataParams params = p.any_shape() ? p.build() : params_with_rank(rank, *p.d);
      const auto w = label_to_weights(label, params);
      const auto c = center_weights(w, params, wl->a, wl->b, wl->kappa);
      Outcome out;
      out.payload = io::to_json(w);
      out.payload["center"] = io::to_json(c);
      out.text = weights_text(w) + "\n" + center_text(c);
      return out;
    };
  });

  auto* la = strata->add_subcommand("label", "Label encoded by a weight vector");
  auto lweights = std::make_shared<std::string>();
  auto lp = std::make_shared<ParamOpts>();
  la->add_option("--weights", *lweights, "weight vector JSON {w, j_prime}")->required();
  add_param_options(la, *lp, true);
  la->callback([&action, lweights, lp] {
    action = [lweights, lp] {
      const auto w = io::weight_vector_from_json(parse_json_arg(*lweights, "--weights"));
      const auto label = weights_to_label(w, lp->build());
      Outcome out;
      out.payload = io::to_json(label);
      out.text = label_text(label) + "\n";
      return out;
    };
  });
}

// hn

void add_hn(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("hn", "Slope filtration and its nu value");
  auto constituents = std::make_shared<std::string>();
  auto alpha = std::make_shared<std::string>("0");
  sub->add_option("--constituents", *constituents, "r1:d1,r2:d2,...")->required();
  sub->add_option("--alpha", *alpha, "slope shift, a rational")->capture_default_str();
  sub->callback([&action, constituents, alpha] {
    action = [constituents, alpha] {
      const auto obj = parse_constituents(*constituents);
      const Rational shift = parse_rational(*alpha);
      const auto f = hn_filtration(obj);
      const Piece total = total_of(obj);
      const auto cert = mu_max_gap_bound(obj);
      Outcome out;
      std::ostringstream os;
      os << "total rank " << total.rank << " degree " << rational_to_string(total.degree) << " slope "
         << rational_to_string(total.slope()) << '\n';
      for (const auto& jump : f.jumps) {
        os << "weight " << rational_to_string(jump.weight) << ": rank " << jump.piece.rank << " degree "
           << rational_to_string(jump.piece.degree) << " slope " << rational_to_string(jump.piece.slope()) << '\n';
      }
      out.payload = {{"filtration", io::to_json(f)}, {"semistable", f.jumps.size() == 1}};
      if (f.all_weights_zero()) {
        os << "semistable: nu undefined\n";
        out.payload["nu"] = nullptr;
      } else {
        const auto v = nu(f, total, shift);
        std::ostringstream dec;
        dec.precision(12);
        dec << v.value();
        os << "nu^2 (signed) " << rational_to_string(v.signed_square()) << ", nu " << dec.str() << '\n';
        out.payload["nu"] = io::to_json(v);
      }
      Json cert_json{{"gap", io::rational_json(cert.gap)},
                     {"max_slope_rank", cert.max_slope_rank},
                     {"holds", cert.holds}};
      cert_json["nu"] = cert.nu ? io::to_json(*cert.nu) : Json(nullptr);
      out.payload["gap_certificate"] = cert_json;
      out.payload["alpha"] = io::rational_json(shift);
      os << "gap mu_max - mu = " << rational_to_string(cert.gap);
      if (cert.nu) os << ", single-step nu^2 " << rational_to_string(cert.nu->signed_square());
      os << ", bound " << (cert.holds ? "holds" : "FAILS") << '\n';
      out.text = os.str();
      return out;
    };
  });
}

// chains

void add_chains(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("chains", "Admissible splitting types on a chain of rational curves");
  struct Opts {
    std::int64_t rank = 1, length = 1;
    bool count_only = false, canonical = false;
    std::string kind = "chain";
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--rank", o->rank, "N")->required();
  sub->add_option("--length", o->length, "number of components")->required();
  sub->add_flag("--count-only", o->count_only, "print only the count");
  sub->add_flag("--canonical", o->canonical, "identify types that differ by reordering summands");
  sub->add_option("--kind", o->kind, "chain, bridge or tail")
      ->check(CLI::IsMember({"chain", "bridge", "tail"}))
      ->capture_default_str();
  sub->callback([&action, o] {
    action = [o] {
      if (o->rank < 1 || o->length < 1) throw DomainError("rank and length must be positive");
      const Integer ie = inclusion_exclusion_count(o->rank, o->length);
      Outcome out;
      if (o->count_only && !o->canonical && o->rank > 12) {
        out.payload = {{"rank", o->rank}, {"length", o->length}, {"count", io::integer_json(ie)}};
        out.text = ie.str() + "\n";
        return out;
      }
      const auto ordered = enum_admissible(o->rank, o->length);
      const auto canonical = canonical_admissible(o->rank, o->length);
      const ChainKind kind = o->kind == "bridge" ? ChainKind::kBridge
                             : o->kind == "tail" ? ChainKind::kTail
                                                 : ChainKind::kUnspecified;
      const auto& listed = o->canonical ? canonical : ordered;
      out.payload = {{"rank", o->rank},
                     {"length", o->length},
                     {"count", listed.size()},
                     {"ordered_count", ordered.size()},
                     {"canonical_count", canonical.size()},
                     {"inclusion_exclusion", io::integer_json(ie)}};
      if (o->count_only) {
        out.text = std::to_string(listed.size()) + "\n";
        return out;
      }
      Json types = Json::array();
      std::ostringstream os;
      os << "ordered " << ordered.size() << ", canonical " << canonical.size() << ", inclusion-exclusion " << ie
         << '\n';
      for (auto t : listed) {
        t.kind = kind;
        types.push_back(io::to_json(t));
        std::vector<std::string> rows;
        for (const auto& row : t.rows) rows.push_back(join_values(row));
        os << join(rows, " ") << '\n';
      }
      out.payload["types"] = types;
      out.text = os.str();
      return out;
    };
  });
}

// graph

void add_graph(CLI::App& app, Action& action) {
  auto* graph = app.add_subcommand("graph", "Operations on directed modular graphs (JSON in, JSON out)");
  graph->require_subcommand(1);

  struct GraphOp {
    const char* name;
    const char* help;
    bool needs_edge;
    std::function<DirectedModularGraph(const DirectedModularGraph&, const std::string&)> op;
    const char* note;
  };
  const std::vector<GraphOp> ops = {
      {"cut", "Cut an edge into a marking pair", true, [](const auto& g, const auto& e) { return cut_edge(g, e); },
       kCutNote},
      {"contract", "Contract an edge", true, [](const auto& g, const auto& e) { return contract_edge(g, e); },
       nullptr},
      {"glue", "Glue the last marking pair into an edge", false, [](const auto& g, const auto&) { return glue(g); },
       nullptr},
      {"flip-neg", "Turn the last negative marking into a positive one", false,
       [](const auto& g, const auto&) { return flip_neg_to_pos(g); }, nullptr},
      {"flip-pos", "Turn the last positive marking into a negative one", false,
       [](const auto& g, const auto&) { return flip_pos_to_neg(g); }, nullptr},
  };
  for (const auto& item : ops) {
    auto* sub = graph->add_subcommand(item.name, item.help);
    auto in = std::make_shared<std::string>();
    auto edge = std::make_shared<std::string>();
    sub->add_option("--in", *in, "graph JSON file")->required();
    auto* e = sub->add_option("--edge", *edge, "edge id");
    if (item.needs_edge) e->required();
    sub->callback([&action, in, edge, op = item.op, note = item.note] {
      action = [in, edge, op, note] {
        const auto g = op(io::graph_from_json(read_json_file(*in)), *edge);
        Outcome out;
        out.payload = io::to_json(g);
        out.text = out.payload.dump(2) + "\n";
        if (note) out.notes.push_back(note);
        return out;
      };
    });
  }

  auto* genus = graph->add_subcommand("genus", "Arithmetic genus, degree and components");
  auto gin = std::make_shared<std::string>();
  genus->add_option("--in", *gin, "graph JSON file")->required();
  genus->callback([&action, gin] {
    action = [gin] {
      const auto g = io::graph_from_json(read_json_file(*gin));
      Outcome out;
      out.payload = {{"arithmetic_genus", arithmetic_genus(g)},
                     {"total_degree", total_degree(g)},
                     {"components", component_count(g)}};
      out.text = std::to_string(arithmetic_genus(g)) + "\n";
      return out;
    };
  });

  auto* val = graph->add_subcommand("validate", "Check a graph file and list its valences");
  auto vin = std::make_shared<std::string>();
  val->add_option("--in", *vin, "graph JSON file")->required();
  val->callback([&action, vin] {
    action = [vin] {
      const auto g = io::graph_from_json(read_json_file(*vin));
      Outcome out;
      Json vals = Json::object();
      std::ostringstream os;
      os << "valid\n";
      for (const auto& [id, v] : valences(g)) {
        vals[id] = {{"in", v.in}, {"out", v.out}};
        os << id << " in " << v.in << " out " << v.out << '\n';
      }
      out.payload = {{"valid", true}, {"valences", vals}};
      out.text = os.str();
      return out;
    };
  });

  auto* rnd = graph->add_subcommand("random", "Random well-formed graph, seeded by THETA_STRATA_SEED");
  auto max_vertices = std::make_shared<int>(8);
  rnd->add_option("--max-vertices", *max_vertices, "vertex bound")->check(CLI::Range(1, 64))->capture_default_str();
  rnd->callback([&action, max_vertices] {
    action = [max_vertices] {
      std::mt19937_64 rng(seed_from_env());
      Outcome out;
      out.payload = io::to_json(random_graph(rng, *max_vertices));
      out.text = out.payload.dump(2) + "\n";
      return out;
    };
  });
}

CommandResult usage_error(const std::string& message, const std::string& help) {
  CommandResult r;
  r.status = Status::kError;
  r.exit_code = 1;
  r.diagnostics = {message, help};
  return r;
}

CommandResult domain_error(const std::string& message) {
  CommandResult r;
  r.status = Status::kError;
  r.exit_code = 2;
  r.diagnostics = {message};
  return r;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact computations on moduli of bundles over nodal curves", "theta-strata"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  Action action;
  add_transfer(app, action);
  add_series(app, action);
  add_three_point(app, action);
  add_consistency(app, action);
  add_strata(app, action);
  add_hn(app, action);
  add_chains(app, action);
  add_graph(app, action);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CommandResult r;
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    r.output = target->help();
    return r;
  } catch (const CLI::ParseError& e) {
    const CLI::App* target = &app;
    while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
    return usage_error(e.what(), target->help());
  }

  try {
    if (!action) return usage_error("no command given", app.help());
    Outcome out = action();
    CommandResult r;
    r.output = json ? out.payload.dump(2) + "\n" : out.text;
    r.diagnostics = std::move(out.notes);
    return r;
  } catch (const DomainError& e) {
    return domain_error(e.what());
  } catch (const Json::exception& e) {
    return domain_error(e.what());
  } catch (const std::invalid_argument& e) {
    return domain_error(e.what());
  } catch (const std::out_of_range& e) {
    return domain_error(e.what());
  }
}

}  // namespace theta::cli
