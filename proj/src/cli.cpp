#include "hinv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "hinv/serialize.hpp"

namespace hinv {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

int64_t parse_int(const std::string& s) {
  size_t pos = 0;
  int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw Error("not an integer: \"" + s + "\"");
  }
  if (pos != s.size()) throw Error("not an integer: \"" + s + "\"");
  return v;
}

std::vector<int64_t> parse_int_list(const std::string& s) {
  std::vector<int64_t> out;
  for (const std::string& t : split(s, ',')) out.push_back(parse_int(t));
  return out;
}

// Generator images listed one after another.
GroupMap parse_images(const FinAbGroup& T, const std::string& s) {
  const std::vector<int64_t> v = parse_int_list(s);
  const size_t r = T.rank();
  if (v.size() != r * r) throw Error("--tau needs " + std::to_string(r * r) + " entries");
  std::vector<std::vector<int64_t>> cols(r);
  for (size_t j = 0; j < r; ++j) cols[j].assign(v.begin() + j * r, v.begin() + (j + 1) * r);
  GroupMap f(T, T, std::move(cols));
  if (!f.is_well_defined()) throw Error("tau is not well defined on " + T.descriptor());
  return f;
}

std::vector<RootOfUnity> parse_lambda(const std::string& s) {
  std::vector<RootOfUnity> out;
  for (const std::string& t : split(s, ',')) out.push_back(parse_root_literal(t));
  return out;
}

struct Outcome {
  json doc;
  std::string text;  // for --format text / csv
  int code = kExitTrue;
};

json envelope(const std::string& command, json input, json result, json expected, json match) {
  return json{{"command", command}, {"input", std::move(input)}, {"result", std::move(result)},
              {"expected", std::move(expected)}, {"match", std::move(match)}};
}

Outcome cmd_classify(const RunConfig& cfg) {
  const ClassificationReport r = classify_pauli(cfg.n, cfg.cap);
  Outcome o;
  o.doc = envelope("classify", json{{"n", cfg.n}, {"cap", cfg.cap}}, result_to_json(r),
                   to_json(r.expected, r.n, r.M), r.match);
  o.text = cfg.format == "csv" ? report_to_csv(r) : report_to_text(r);
  o.code = r.match ? kExitTrue : kExitFalse;
  return o;
}

Outcome cmd_orbit(const RunConfig& cfg) {
  const std::vector<int64_t> v = parse_int_list(cfg.matrix);
  if (v.size() != 4) throw Error("--matrix needs 4 entries a,b,c,d");
  if (cfg.n < 2 || cfg.n > cfg.cap) throw Error("n must lie in [2, cap]");
  const ModMatrix2 A = ModMatrix2::make(cfg.n, v[0], v[1], v[2], v[3]);
  const OrbitResult res = orbit_reduce(A);
  const bool ok = certify(A, res);
  json forms = json::array();
  const auto cf = canonical_forms(cfg.n);
  for (size_t k = 0; k < cf.size(); ++k) forms.push_back(json{{"label", canonical_label(k)}, {"theta", to_json(cf[k])}});
  Outcome o;
  o.doc = envelope("orbit", json{{"n", cfg.n}, {"matrix", to_json(A)}},
                   json{{"canonical", canonical_label(res.index)},
                        {"theta", to_json(res.theta)},
                        {"P", to_json(res.P)},
                        {"visited", res.visited},
                        {"verdict", ok}},
                   json{{"canonical_forms", forms}}, ok);
  o.text = canonical_label(res.index) + " " + res.theta.to_string() + " P=" + res.P.to_string() +
           (ok ? " certified\n" : " NOT certified\n");
  o.code = ok ? kExitTrue : kExitFalse;
  return o;
}

Outcome cmd_check(const RunConfig& cfg) {
  const FinAbGroup T = FinAbGroup::parse(cfg.group);
  if (T.cardinality() > kDefaultEnumerationCap) throw Error("group too large");
  HomMapData m;
  m.shape = SymplecticShape::from_group(T);
  m.tau = parse_images(T, cfg.tau);
  m.lambda = parse_lambda(cfg.lambda);
  if (m.lambda.size() != T.rank()) throw Error("--lambda needs one value per generator");
  if (cfg.mode == "automorphism") m.mode = Mode::automorphism;
  else if (cfg.mode != "anti") throw Error("--mode must be anti or automorphism");

  const bool aut = is_automorphism(T, m.tau);
  const bool valid = aut && check_homogeneous_map(m);
  json result{{"tau_is_automorphism", aut},
              {"congruences", aut && congruences_hold(m.shape, m.tau, m.mode)},
              {"power_conditions", power_conditions_hold(m)},
              {"valid", valid}};
  if (valid && m.mode == Mode::anti) result["involution"] = check_involution(m);
  else result["involution"] = nullptr;
  if (valid) {
    json table = json::array();
    for (const GroupElem& g : T.elements())
      table.push_back(json{{"g", to_json(g)}, {"tau_g", to_json(m.tau.apply(g))}, {"lambda", to_json(lambda_extend(m, g))}});
    result["lambda_table"] = table;
  }
  result["verdict"] = valid;
  Outcome o;
  o.doc = envelope("check", json{{"group", T.descriptor()}, {"map", to_json(m)}}, result, nullptr, nullptr);
  o.text = std::string(valid ? "valid" : "invalid") +
           (result["involution"].is_boolean() ? (result["involution"].get<bool>() ? ", involution" : ", not an involution") : "") +
           "\n";
  o.code = valid ? kExitTrue : kExitFalse;
  return o;
}

Outcome cmd_realize(const RunConfig& cfg) {
  if (cfg.n < 2 || cfg.n > cfg.cap) throw Error("n must lie in [2, cap]");
  const SymplecticShape shape = SymplecticShape::pauli(cfg.n);
  int64_t M = cfg.M == 0 ? cfg.n : cfg.M;
  std::optional<HomMapData> m;
  if (!cfg.tau.empty()) {
    HomMapData h;
    h.shape = shape;
    h.tau = parse_images(shape.group(), cfg.tau);
    h.lambda = parse_lambda(cfg.lambda);
    if (h.lambda.size() != 2) throw Error("--lambda needs two values");
    if (cfg.M == 0) M = minimal_ambient(h);
    m = h;
  }
  const RealizedAlgebra R = realize_division_algebra(shape, M);
  const FinAbGroup& T = R.T;
  const CycMatrix& Xa = R.X(T.generator(0));
  const CycMatrix& Xb = R.X(T.generator(1));
  const CycNum beta_ab = embed_root(M, bicharacter_beta(R.sigma, T.generator(0), T.generator(1)));
  const bool commute = Xa * Xb == (Xb * Xa).scaled(beta_ab);
  const bool cocycle = is_cocycle(R.sigma);
  bool verdict = commute && cocycle;
  json result{{"n", cfg.n},       {"M", M},
              {"dimension", R.dim}, {"X_a", to_json(Xa)},
              {"X_b", to_json(Xb)}, {"commutation", commute},
              {"cocycle", cocycle}};
  if (m) {
    const bool valid = check_homogeneous_map(*m);
    json mj{{"map", to_json(*m)}, {"valid", valid}};
    const RealizedMap f = realize_hom_map(R, *m, false);
    const bool props = verify_map_properties(R, f, m->tau, m->mode);
    mj["realized_anti_multiplicative"] = props;
    mj["square_is_identity"] = realized_square_is_identity(R, f);
    if (valid) {
      const CycMatrix Phi = find_form_matrix(R, f);
      mj["Phi"] = to_json(Phi);
      try {
        mj["kind"] = form_epsilon(Phi, scalar_division(M)) == 1 ? "orthogonal" : "symplectic";
      } catch (const Error&) {
        mj["kind"] = nullptr;
      }
    }
    verdict = verdict && props == valid;
    result["map"] = mj;
  }
  result["verdict"] = verdict;
  Outcome o;
  o.doc = envelope("realize", json{{"n", cfg.n}, {"M", M}}, result, nullptr, nullptr);
  o.text = "X_a = " + Xa.to_string() + "\nX_b = " + Xb.to_string() + "\n";
  o.code = verdict ? kExitTrue : kExitFalse;
  return o;
}

Outcome cmd_sec3(const RunConfig& cfg) {
  std::ifstream in(cfg.spec_file);
  if (!in) throw Error("cannot read " + cfg.spec_file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(std::string("bad JSON: ") + e.what());
  }
  const InvolutionDatum d = datum_from_json(j);
  const Sec3Outcome s = run_datum(d);
  const int want = d.kind == FormKind::orthogonal ? 1 : -1;
  const bool verdict = s.valid && s.psi_ok && s.epsilon == want;
  json result{{"valid", s.valid},
              {"problem", s.valid ? json(nullptr) : json(s.problem)},
              {"psi_ok", s.psi_ok},
              {"epsilon", s.valid ? json(s.epsilon) : json(nullptr)},
              {"verdict", verdict}};
  Outcome o;
  o.doc = envelope("sec3", to_json(d), result, json{{"epsilon", want}}, verdict);
  o.text = s.valid ? ("psi " + std::string(s.psi_ok ? "verified" : "FAILED") + ", epsilon = " + std::to_string(s.epsilon) + "\n")
                   : ("invalid datum: " + s.problem + "\n");
  o.code = verdict ? kExitTrue : kExitFalse;
  return o;
}

Outcome cmd_verify_tables(const RunConfig& cfg) {
  const int64_t n = cfg.n;
  if (n < 2 || n > cfg.cap) throw Error("n must lie in [2, cap]");
  const LocusScan scan = scan_locus(n);
  const size_t want_forms = canonical_forms(n).size();
  const bool pairwise = verify_pairwise_nonconjugate(n);
  bool verdict = scan.ok() && scan.forms_reached.size() == want_forms && pairwise;
  json result{{"locus_size", scan.locus_size},
              {"certified", scan.certified},
              {"forms_reached", scan.forms_reached.size()},
              {"pairwise_nonconjugate", pairwise}};

  int i = 0;
  while ((int64_t{1} << i) < n) ++i;
  if ((int64_t{1} << i) == n && i >= 2) {
    json rows = json::array();
    for (const TableCheck& r : conjugator_table_checks(i)) {
      rows.push_back(json{{"row", r.row}, {"tau", to_json(r.tau)}, {"P", to_json(r.P)}, {"target", to_json(r.target)}, {"ok", r.ok}});
      verdict = verdict && r.ok;
    }
    result["conjugator_table"] = rows;
  } else {
    result["conjugator_table"] = nullptr;
  }
  int64_t odd = n;
  while (odd % 2 == 0) odd /= 2;
  if (odd >= 3) {
    const bool sim = verify_odd_similarities(odd);
    result["odd_similarities"] = json{{"q", odd}, {"ok", sim}};
    verdict = verdict && sim;
  } else {
    result["odd_similarities"] = nullptr;
  }
  result["verdict"] = verdict;
  Outcome o;
  o.doc = envelope("verify-tables", json{{"n", n}}, result, json{{"forms", want_forms}}, verdict);
  o.text = std::to_string(scan.certified) + "/" + std::to_string(scan.locus_size) + " certified, " +
           std::to_string(scan.forms_reached.size()) + " forms reached; " + (verdict ? "ok" : "FAILED") + "\n";
  o.code = verdict ? kExitTrue : kExitFalse;
  return o;
}

}  // namespace

RootOfUnity parse_root_literal(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 3 || parts[0].empty() || parts[0][0] != 'z')
    throw Error("root literal must look like z<name>:<order>:<exp>, got \"" + s + "\"");
  const int64_t order = parse_int(parts[1]);
  if (order < 1) throw Error("root order must be positive");
  return RootOfUnity(order, parse_int(parts[2]));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Homogeneous involutions on graded matrix algebras", "hinv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "write the report to this file");
  app.add_option("--cap", cfg.cap, "largest modulus n accepted")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "classify the homogeneous involutions of the Pauli grading on Z_n^2");
  classify->add_option("--n", cfg.n)->required();
  auto* orbit = app.add_subcommand("orbit", "reduce a det -1, trace 0 matrix to its canonical form");
  orbit->add_option("--n", cfg.n)->required();
  orbit->add_option("--matrix", cfg.matrix, "a,b,c,d row-major")->required();
  auto* check = app.add_subcommand("check", "decide whether (tau, lambda) defines a homogeneous map");
  check->add_option("--group", cfg.group, "e.g. Z2^2 or Z4xZ4xZ2xZ2")->required();
  check->add_option("--tau", cfg.tau, "generator images, one after another")->required();
  check->add_option("--lambda", cfg.lambda, "z<name>:<order>:<exp>,...")->required();
  check->add_option("--mode", cfg.mode, "anti | automorphism");
  auto* realize = app.add_subcommand("realize", "generalized Pauli matrices, optionally a realized map");
  realize->add_option("--n", cfg.n)->required();
  realize->add_option("--M", cfg.M, "ambient order of the cyclotomic field");
  realize->add_option("--tau", cfg.tau, "generator images, one after another");
  realize->add_option("--lambda", cfg.lambda, "z<name>:<order>:<exp>,...");
  auto* sec3 = app.add_subcommand("sec3", "build and verify psi on M_k(D) from an involution datum");
  sec3->add_option("--spec", cfg.spec_file, "JSON datum file")->required();
  auto* tables = app.add_subcommand("verify-tables", "orbit scan and conjugator table replay for one n");
  tables->add_option("--n", cfg.n)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.format == "csv" && cfg.command != "classify") {
    err << "csv output is only available for classify\n";
    return kExitInput;
  }

  Outcome o;
  try {
    if (cfg.command == "classify") o = cmd_classify(cfg);
    else if (cfg.command == "orbit") o = cmd_orbit(cfg);
    else if (cfg.command == "check") o = cmd_check(cfg);
    else if (cfg.command == "realize") o = cmd_realize(cfg);
    else if (cfg.command == "sec3") o = cmd_sec3(cfg);
    else o = cmd_verify_tables(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const std::string body = cfg.format == "json" ? o.doc.dump(2) + "\n" : o.text;
  if (cfg.out.empty()) {
    out << body;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kExitInput;
    }
    f << body;
  }
  return o.code;
}

}  // namespace hinv
