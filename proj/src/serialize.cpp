#include "hinv/serialize.hpp"

#include <sstream>

namespace hinv {

namespace {

std::vector<int64_t> ints(const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string("expected an integer list for ") + what);
  std::vector<int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(std::string("expected integers in ") + what);
    out.push_back(x.get<int64_t>());
  }
  return out;
}

GroupElem elem_from_json(const FinAbGroup& G, const json& j, const char* what) {
  std::vector<int64_t> v = ints(j, what);
  if (v.size() != G.rank()) throw Error(std::string("wrong length for ") + what);
  return G.make(std::move(v));
}

std::vector<GroupElem> elems_from_json(const FinAbGroup& G, const json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string("expected a list for ") + what);
  std::vector<GroupElem> out;
  for (const auto& x : j) out.push_back(elem_from_json(G, x, what));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json triple_json(const PauliTriple& t, int64_t M, int64_t n) {
  return json{{"orbit", canonical_label(t.orbit)},
              {"lambda_a", to_json(RootOfUnity(M, t.la))},
              {"lambda_b", to_json(RootOfUnity(M, t.lb))},
              {"text", triple_to_string(t, M, n)}};
}

}  // namespace

json to_json(const RootOfUnity& r) { return json{{"M", r.order()}, {"e", r.exp()}}; }

RootOfUnity root_from_json(const json& j) {
  return RootOfUnity(field(j, "M").get<int64_t>(), field(j, "e").get<int64_t>());
}

json to_json(const CycNum& c) {
  json coeffs = json::array();
  for (const mpq_class& q : c.coeffs()) coeffs.push_back(q.get_str());
  return json{{"M", c.order()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const json& j) {
  const int64_t M = field(j, "M").get<int64_t>();
  std::vector<mpq_class> cs;
  for (const auto& s : field(j, "coeffs")) {
    mpq_class q;
    if (q.set_str(s.get<std::string>(), 10) != 0) throw Error("bad rational \"" + s.get<std::string>() + "\"");
    q.canonicalize();
    cs.push_back(q);
  }
  return CycNum(M, std::move(cs));
}

json to_json(const GroupElem& g) { return json(g.residues); }

json to_json(const GroupMap& f) {
  json out = json::array();
  for (size_t j = 0; j < f.source().rank(); ++j) out.push_back(to_json(f.image_of_generator(j)));
  return out;
}

GroupMap map_from_json(const FinAbGroup& source, const FinAbGroup& target, const json& images) {
  if (!images.is_array() || images.size() != source.rank()) throw Error("map needs one image per generator");
  std::vector<std::vector<int64_t>> cols;
  for (const auto& im : images) {
    std::vector<int64_t> v = ints(im, "map image");
    if (v.size() != target.rank()) throw Error("map image has the wrong length");
    cols.push_back(std::move(v));
  }
  GroupMap f(source, target, std::move(cols));
  if (!f.is_well_defined()) throw Error("map is not well defined");
  return f;
}

json to_json(const FactorSet& s) {
  json table = json::array();
  for (int64_t e : s.table_exps()) table.push_back(to_json(RootOfUnity(s.ambient(), e)));
  return json{{"group", s.group().descriptor()}, {"table", table}};
}

json to_json(const ModMatrix2& m) { return json{{m.e[0], m.e[1]}, {m.e[2], m.e[3]}}; }

json to_json(const CycMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return json{{"M", m.ambient()}, {"rows", rows}};
}

json to_json(const HomMapData& m) {
  json lam = json::array();
  for (const RootOfUnity& r : m.lambda) lam.push_back(to_json(r));
  return json{{"shape", m.shape.pair_orders},
              {"tau", to_json(m.tau)},
              {"lambda", lam},
              {"mode", m.mode == Mode::anti ? "anti" : "automorphism"}};
}

HomMapData hom_map_from_json(const json& j) {
  HomMapData m;
  m.shape.pair_orders = ints(field(j, "shape"), "shape");
  const FinAbGroup T = m.shape.group();
  m.tau = map_from_json(T, T, field(j, "tau"));
  for (const auto& r : field(j, "lambda")) m.lambda.push_back(root_from_json(r));
  if (m.lambda.size() != T.rank()) throw Error("lambda needs one value per generator");
  if (j.contains("mode")) {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "automorphism") m.mode = Mode::automorphism;
    else if (mode != "anti") throw Error("unknown mode \"" + mode + "\"");
  }
  return m;
}

json to_json(const WitnessData& w) {
  return json{{"phi", w.phi ? to_json(*w.phi) : json(nullptr)}, {"M", w.M}, {"chi", w.chi}};
}

json to_json(const ExpectedClassification& e, int64_t n, int64_t M) {
  json reps = json::array(), iso = json::array(), pairs = json::array();
  for (const auto& t : e.equiv_reps) reps.push_back(triple_json(t, M, n));
  for (const auto& list : e.iso_reps) {
    json l = json::array();
    for (const auto& t : list) l.push_back(triple_json(t, M, n));
    iso.push_back(l);
  }
  for (const auto& [a, b] : e.equivalent_pairs) pairs.push_back(json::array({triple_json(a, M, n), triple_json(b, M, n)}));
  return json{{"equivalence_classes", e.equiv_reps.size()},
              {"equivalence_representatives", reps},
              {"isomorphism_counts", e.iso_counts},
              {"isomorphism_representatives", iso},
              {"equivalent_pairs", pairs}};
}

json result_to_json(const ClassificationReport& r) {
  json orbits = json::array();
  for (size_t k = 0; k < r.orbits.size(); ++k) {
    const OrbitSummary& o = r.orbits[k];
    json reps = json::array();
    for (size_t i : o.iso_reps) reps.push_back(triple_json(r.records[i].triple, r.M, r.n));
    orbits.push_back(json{{"label", canonical_label(k)},
                          {"theta", to_json(o.theta)},
                          {"involutions", o.involutions},
                          {"isomorphism_classes", o.iso_reps.size()},
                          {"isomorphism_representatives", reps}});
  }
  json eq = json::array();
  for (size_t i : r.equiv_reps) {
    json t = triple_json(r.records[i].triple, r.M, r.n);
    t["kind"] = r.records[i].epsilon == 1 ? "orthogonal" : "symplectic";
    eq.push_back(t);
  }
  json invs = json::array();
  for (const InvolutionRecord& rec : r.records) {
    json t = triple_json(rec.triple, r.M, r.n);
    t["iso_class"] = rec.iso_class;
    t["equiv_class"] = rec.equiv_class;
    t["kind"] = rec.epsilon == 1 ? "orthogonal" : "symplectic";
    t["iso_witness"] = to_json(rec.iso_witness);
    t["equiv_witness"] = to_json(rec.equiv_witness);
    invs.push_back(t);
  }
  json crt = nullptr;
  if (r.crt) {
    crt = json{{"components", r.crt->components},
               {"predicted_equivalence_classes", r.crt->predicted_equivalence},
               {"predicted_isomorphism_counts", r.crt->predicted_iso},
               {"restrictions_ok", r.crt->restrictions_ok},
               {"reassembly_ok", r.crt->reassembly_ok}};
  }
  return json{{"n", r.n},
              {"M", r.M},
              {"orbits", orbits},
              {"equivalence_classes", r.equivalence_classes()},
              {"equivalence_representatives", eq},
              {"involutions", invs},
              {"crt", crt}};
}

std::string report_to_csv(const ClassificationReport& r) {
  std::ostringstream os;
  os << "orbit,lambda_a,lambda_b,iso_class,equiv_class\n";
  for (const InvolutionRecord& rec : r.records)
    os << canonical_label(rec.triple.orbit) << ',' << rec.triple.la << ',' << rec.triple.lb << ',' << rec.iso_class << ','
       << rec.equiv_class << '\n';
  return os.str();
}

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << ", lambda in mu_" << r.M << ", " << r.records.size() << " involutions\n";
  for (size_t k = 0; k < r.orbits.size(); ++k) {
    const OrbitSummary& o = r.orbits[k];
    os << canonical_label(k) << " = " << o.theta.to_string() << ": " << o.involutions << " involutions, "
       << o.iso_reps.size() << " isomorphism classes:";
    for (size_t i : o.iso_reps) os << ' ' << triple_to_string(r.records[i].triple, r.M, r.n);
    os << '\n';
  }
  os << r.equivalence_classes() << " equivalence classes:";
  for (size_t i : r.equiv_reps)
    os << ' ' << triple_to_string(r.records[i].triple, r.M, r.n) << (r.records[i].epsilon == 1 ? "[orth]" : "[symp]");
  os << '\n';
  if (r.crt) {
    os << "prime-power parts:";
    for (int64_t q : r.crt->components) os << ' ' << q;
    os << "; predicted " << r.crt->predicted_equivalence << " equivalence classes\n";
  }
  os << "match: " << (r.match ? "yes" : "no") << '\n';
  return os.str();
}

InvolutionDatum datum_from_json(const json& j) {
  InvolutionDatum d;
  d.G = FinAbGroup::parse(field(j, "G").get<std::string>());
  d.tau = map_from_json(d.G, d.G, field(j, "tau"));
  d.g0 = elem_from_json(d.G, field(j, "g0"), "g0");
  const json& p = field(j, "psi0");
  if (p.is_null()) {
    d.division = trivial_division(d.G);
  } else {
    d.division.psi0 = hom_map_from_json(p);
    d.division.shape = d.division.psi0.shape;
    d.division.embed = map_from_json(d.division.shape.group(), d.G, field(p, "embed"));
  }
  const json& g = field(j, "gamma");
  d.gamma.self_dual = elems_from_json(d.G, field(g, "self_dual"), "gamma.self_dual");
  d.gamma.dual_first = elems_from_json(d.G, field(g, "dual_first"), "gamma.dual_first");
  d.gamma.dual_second = elems_from_json(d.G, field(g, "dual_second"), "gamma.dual_second");
  const FinAbGroup T = d.division.shape.group();
  d.t_seq = j.contains("t_seq") ? elems_from_json(T, j.at("t_seq"), "t_seq") : std::vector<GroupElem>{};
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "orthogonal") d.kind = FormKind::orthogonal;
  else if (kind == "symplectic") d.kind = FormKind::symplectic;
  else throw Error("kind must be \"orthogonal\" or \"symplectic\"");
  return d;
}

json to_json(const InvolutionDatum& d) {
  json psi0 = nullptr;
  if (d.division.shape.pairs() > 0) {
    psi0 = to_json(d.division.psi0);
    psi0["embed"] = to_json(d.division.embed);
  }
  json ts = json::array();
  for (const GroupElem& t : d.t_seq) ts.push_back(to_json(t));
  auto list = [](const std::vector<GroupElem>& v) {
    json out = json::array();
    for (const GroupElem& g : v) out.push_back(to_json(g));
    return out;
  };
  return json{{"G", d.G.descriptor()},
              {"tau", to_json(d.tau)},
              {"g0", to_json(d.g0)},
              {"psi0", psi0},
              {"gamma", {{"self_dual", list(d.gamma.self_dual)},
                         {"dual_first", list(d.gamma.dual_first)},
                         {"dual_second", list(d.gamma.dual_second)}}},
              {"t_seq", ts},
              {"kind", kind_name(d.kind)}};
}

}  // namespace hinv
