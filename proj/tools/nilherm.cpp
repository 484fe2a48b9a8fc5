#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilherm/basic_constructors.hpp"
#include "nilherm/json_io.hpp"
#include "nilherm/replication.hpp"
#include "nilherm/representations.hpp"
#include "nilherm/salamon.hpp"
#include "nilherm/symmetric_pair.hpp"

#ifndef NILHERM_VERSION
#define NILHERM_VERSION "0.0.0"
#endif

using namespace nilherm;

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  int samples = 200;
  std::string metric_file;
  Index dim = -1;
  Index n = -1;
  bool emit_data = false;
  bool hypercomplex = false;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) { return parse_json_text(read_input(path)); }

Index parse_count(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<Index>(v);
  } catch (const std::logic_error&) {
    throw ParseError(std::string(what) + " must be an integer, got \"" + s + "\"");
  }
}

const std::string& arg(const std::vector<std::string>& args, std::size_t i, const char* what) {
  if (i >= args.size()) throw ParseError(std::string("missing argument: ") + what);
  return args[i];
}

Json triple_document(const MetricComplexTriple& t) {
  return document_json(Document{t.algebra(), t.J().matrix(), t.gram(), {}});
}

Json algebra_document(const LieAlgebra& l) { return document_json(Document{l, {}, {}, {}}); }

TwoStepType parse_type(const std::string& s) {
  TwoStepType t{};
  std::stringstream ss(s);
  std::string part;
  std::size_t i = 0;
  while (std::getline(ss, part, ',')) {
    if (i >= t.size()) throw ParseError("type has more than five entries");
    t[i++] = parse_count(part, "type entry");
  }
  if (i != t.size()) throw ParseError("type is r,p+,p-,a1,n");
  return t;
}

TwoStepExample parse_example(const std::string& s) {
  if (s == "abelian") return TwoStepExample::Abelian;
  if (s == "biinvariant") return TwoStepExample::BiInvariant;
  if (s == "minus-psi") return TwoStepExample::MinusWithPsi;
  if (s == "mixed") return TwoStepExample::Mixed;
  throw ParseError("example-2step kind is abelian, biinvariant, minus-psi or mixed");
}

Json cmd_construct(const std::string& kind, const std::vector<std::string>& args, const Options& o) {
  if (kind == "heisenberg") return algebra_document(heisenberg(parse_count(arg(args, 0, "m"), "m")));
  if (kind == "free") return algebra_document(free_two_step(parse_count(arg(args, 0, "r"), "r")));
  if (kind == "free-with-J") {
    const auto a = free_complex_structure(parse_count(arg(args, 0, "r"), "r"));
    const Index n = a.algebra.dim();
    return triple_document(MetricComplexTriple(a.algebra, a.J, hermitian_average(a.J, RMatrix::Identity(n, n))));
  }
  if (kind == "table1") {
    const Index row = parse_count(arg(args, 0, "row"), "row");
    if (row < 1 || row > 7) throw ParseError("table1 row must be between 1 and 7");
    return algebra_document(table1_algebra(static_cast<int>(row)));
  }
  if (kind == "standard-abelian")
    return triple_document(standard_abelian_triple(parse_count(arg(args, 0, "k"), "k"), parse_count(arg(args, 1, "m"), "m")));
  if (kind == "example-2step" || kind == "random-2step") {
    const Complex2StepData d = kind == "example-2step"
                                   ? example_2step_data(parse_example(arg(args, 0, "kind")), o.n < 0 ? 2 : o.n)
                                   : random_2step_data(parse_type(arg(args, 0, "type")), o.seed);
    return o.emit_data ? two_step_json(d) : triple_document(build_from_2step_data(d));
  }
  if (kind == "example-3step") {
    const Complex3StepData d = example_3step_data(o.n < 0 ? 3 : o.n);
    return o.emit_data ? three_step_json(d) : triple_document(build_from_3step_data(d));
  }
  if (kind == "from-2step-data") return triple_document(build_from_2step_data(two_step_from_json(read_json(arg(args, 0, "file")))));
  if (kind == "from-3step-data")
    return triple_document(build_from_3step_data(three_step_from_json(read_json(arg(args, 0, "file")))));
  if (kind == "symmetric-pair") {
    const std::string& which = arg(args, 0, "su2 or su2xsu2");
    if (which == "su2") return triple_document(su2_u1_hermitian_triple());
    if (which == "su2xsu2") {
      const auto p = symmetric_pair_nilalgebra(su2xsu2(), su2_diagonal());
      return document_json(Document{p.n.algebra, {}, p.n.gram, {}});
    }
    throw ParseError("symmetric-pair is su2 or su2xsu2");
  }
  if (kind == "natred") {
    const std::string& rep = arg(args, 0, "adjoint, quaternionic or rotation");
    const Index r = args.size() > 1 ? parse_count(args[1], "multiplicity") : 1;
    LieAlgebra h = su2();
    std::vector<RMatrix> pi;
    if (rep == "adjoint") pi = adjoint_rep(h);
    else if (rep == "quaternionic") pi = su2_quaternionic_rep();
    else if (rep == "rotation") {
      h = LieAlgebra(1, {}, "R");
      pi = rotation_rep();
    } else {
      throw ParseError("natred representation is adjoint, quaternionic or rotation");
    }
    const Index dh = h.dim(), dw = pi[0].rows();
    const IsotypicBlock block{pi, r, RMatrix::Identity(dw, dw)};
    if (o.hypercomplex) {
      const auto hc = natred_hypercomplex(h, RMatrix::Identity(dh, dh), {block});
      return document_json(Document{hc.algebra, hc.structure.j1.matrix(), hc.gram,
                                    std::array<RMatrix, 3>{hc.structure.j1.matrix(), hc.structure.j2.matrix(),
                                                           hc.structure.j3.matrix()}});
    }
    return triple_document(natred_complex(h, RMatrix::Identity(dh, dh), {block}));
  }
  throw ParseError("unknown construct kind \"" + kind + "\"");
}

struct Loaded {
  Document doc;
  std::optional<ComplexStructure> j;
  std::optional<RMatrix> metric;
  std::string metric_source;
};

Loaded load(const std::string& path, const Options& o) {
  Loaded l{document_from_json(read_json(path)), {}, {}, "none"};
  const Index n = l.doc.algebra.dim();
  if (!o.metric_file.empty()) {
    const Json m = read_json(o.metric_file);
    l.doc.metric = matrix_from_json(m.is_object() ? m.at("metric") : m, n, n);
    l.metric_source = "file";
  } else if (l.doc.metric) {
    l.metric_source = "document";
  }
  if (l.doc.metric) l.metric = *l.doc.metric;
  if (l.doc.J) {
    l.j = ComplexStructure(*l.doc.J);
    if (!l.doc.metric) {
      // Identity when it is Hermitian, otherwise its J-average I + J^T J.
      const RMatrix id = RMatrix::Identity(n, n);
      l.metric = is_hermitian(*l.j, id) ? id : hermitian_average(*l.j, id);
      l.metric_source = is_hermitian(*l.j, id) ? "identity" : "identity + J^T J";
    }
  }
  return l;
}

Json witness_json(const PairWitness& w) {
  return {{"indices", {w.i + 1, w.j + 1}}, {"value", vector_json(w.value)}};
}

Json cmd_analyze(const std::string& path, const Options& o) {
  const Loaded in = load(path, o);
  const LieAlgebra& l = in.doc.algebra;
  Json warnings = Json::array();
  Json out;
  Json alg = report_json(analyze_algebra(l));
  alg["two_step"] = is_two_step(l);
  out["algebra"] = alg;
  if (in.j) {
    const JClassification c = classify(l, *in.j);
    out["J"] = classification_json(c);
    Json m = {{"source", in.metric_source}};
    const bool hermitian = is_positive_definite(*in.metric) && is_hermitian(*in.j, *in.metric);
    m["hermitian"] = hermitian;
    if (!hermitian) {
      warnings.push_back("metric is not J-Hermitian; metric checks skipped");
    } else {
      const MetricComplexTriple t(l, *in.j, *in.metric);
      m["pluriclosed"] = is_pluriclosed(t);
      if (is_two_step(l) && c.integrable && c.j_nilpotent_step == 2) m["pluriclosed_2step_criterion"] = pluriclosed_criterion_2step(t);
      if (is_two_step(l) && c.abelian) m["pluriclosed_abelian_criterion"] = pluriclosed_criterion_abelian(t);
      if (is_two_step(l) && c.integrable) {
        const auto s = pluriclosed_center_sampling_check(t, o.seed, o.samples);
        Json rec = {{"inclusion_holds", s.inclusion_holds}, {"sampling_passed", s.sampling_passed},
                    {"seed", s.seed}, {"samples", s.samples}, {"kind", "sampling"}};
        if (s.counterexample) rec["counterexample"] = vector_json(*s.counterexample);
        m["center_criterion"] = rec;
      }
    }
    out["metric"] = m;
  }
  if (in.doc.hypercomplex) {
    const auto& h = *in.doc.hypercomplex;
    const HypercomplexStructure hs{ComplexStructure(h[0]), ComplexStructure(h[1]), ComplexStructure(h[2])};
    Json hk;
    const auto violation = validate_hypercomplex(l, hs);
    hk["hypercomplex"] = !violation;
    if (violation) hk["violated"] = violation->relation;
    const bool hh = in.metric && is_hyper_hermitian(hs, *in.metric);
    hk["hyper_hermitian"] = hh;
    if (!violation && hh) {
      hk["abelian"] = is_abelian_hypercomplex(l, hs);
      hk["hkt"] = is_hkt(l, hs, *in.metric);
    } else {
      warnings.push_back("hypercomplex triple invalid or metric not hyper-Hermitian; HKT check skipped");
    }
    out["hypercomplex"] = hk;
  }
  out["warnings"] = warnings;
  out["provenance"] = {{"input", path.empty() ? "-" : path}, {"seed", o.seed}, {"tool_version", NILHERM_VERSION}};
  return out;
}

Json cmd_check(const std::string& what, const std::string& path, const Options& o) {
  const Loaded in = load(path, o);
  const LieAlgebra& l = in.doc.algebra;
  Json out = {{"check", what}};
  auto need_j = [&]() -> const ComplexStructure& {
    if (!in.j) throw SemanticError("missing-J", "the document has no complex structure");
    return *in.j;
  };
  if (what == "integrable" || what == "abelian" || what == "biinvariant") {
    const ComplexStructure& j = need_j();
    const auto w = what == "integrable" ? nijenhuis_witness(l, j)
                   : what == "abelian"  ? abelian_witness(l, j)
                                        : biinvariant_witness(l, j);
    out["verdict"] = !w;
    if (w) out["witness"] = witness_json(*w);
  } else if (what == "step") {
    const auto s = j_nilpotent_step(l, need_j());
    out["verdict"] = s.has_value();
    out["step"] = s ? Json(*s) : Json(nullptr);
  } else if (what == "pluriclosed") {
    const MetricComplexTriple t(l, need_j(), *in.metric);
    const FourForm dc = dc_four_form(t);
    out["verdict"] = dc.is_zero();
    if (!dc.is_zero()) {
      const auto& [idx, value] = *dc.entries.begin();
      out["witness"] = {{"indices", {idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1}}, {"value", rational_json(value)}};
    }
    out["metric_source"] = in.metric_source;
  } else if (what == "hkt") {
    if (!in.doc.hypercomplex) throw SemanticError("missing-hypercomplex", "the document has no hypercomplex triple");
    if (!in.metric) throw SemanticError("missing-metric", "the document has no metric");
    const auto& h = *in.doc.hypercomplex;
    const HypercomplexStructure hs{ComplexStructure(h[0]), ComplexStructure(h[1]), ComplexStructure(h[2])};
    if (const auto v = validate_hypercomplex(l, hs)) throw SemanticError(v->relation, "not a hypercomplex structure");
    const auto w = hkt_violation(l, hs, *in.metric);
    out["verdict"] = !w;
    if (w)
      out["witness"] = {{"indices", {w->i + 1, w->j + 1, w->k + 1}},
                        {"values", {rational_json(w->values[0]), rational_json(w->values[1]), rational_json(w->values[2])}}};
  } else {
    throw ParseError("check is one of integrable, step, abelian, biinvariant, pluriclosed, hkt");
  }
  return out;
}

// "key.sub: value" lines.
void print_flat(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_flat(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_flat(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j, const Options& o) {
  if (o.json) std::cout << j.dump(2) << "\n";
  else print_flat(j, "", std::cout);
}

int cmd_verify(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_replication();
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  int passed = 0;
  Json arr = Json::array();
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    if (o.json) arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    else std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name << ": " << r.detail << "\n";
  }
  const bool ok = passed == static_cast<int>(results.size());
  if (o.json) std::cout << Json{{"checks", arr}, {"passed", passed}, {"total", results.size()}, {"ok", ok}}.dump(2) << "\n";
  else std::cout << "verify: " << passed << "/" << results.size() << " passed\n";
  std::cerr << "verify: " << total << " s\n";
  return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on 2-step nilpotent Lie algebras with complex structures and Hermitian metrics"};
  app.require_subcommand(1);
  Options o;
  if (const char* env = std::getenv("NILHERM_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::logic_error&) {
      std::cerr << "parse error: NILHERM_SEED must be a nonnegative integer\n";
      return 2;
    }
  }
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--seed", o.seed, "seed for sampling and random constructions (default 0, or NILHERM_SEED)");
  app.add_option("--samples", o.samples, "samples for the center criterion")->check(CLI::PositiveNumber);
  app.add_option("--metric", o.metric_file, "Gram matrix file overriding the document metric");
  app.add_option("--dim", o.dim, "expected dimension for parse");
  app.add_option("--n", o.n, "size parameter of the example families");
  app.add_flag("--emit-data", o.emit_data, "construct: print the assembly data instead of the triple");
  app.add_flag("--hypercomplex", o.hypercomplex, "construct natred: abelian hypercomplex assembly");
  app.fallthrough();

  std::string salamon, name;
  auto* parse = app.add_subcommand("parse", "Salamon tuple to algebra JSON");
  parse->add_option("salamon", salamon, "e.g. \"(0,0,12)\"")->required();
  parse->add_option("--name", name, "algebra name");

  std::string kind;
  std::vector<std::string> cargs;
  auto* construct = app.add_subcommand("construct", "build an algebra or triple");
  construct->add_option("kind", kind,
                        "heisenberg, free, free-with-J, table1, standard-abelian, example-2step, random-2step, "
                        "example-3step, from-2step-data, from-3step-data, symmetric-pair, natred")
      ->required();
  construct->add_option("args", cargs, "kind parameters");

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "report invariants of a document");
  analyze->add_option("file", file, "document (default: stdin)");

  std::string what;
  auto* check = app.add_subcommand("check", "verdict and witness for one property");
  check->add_option("what", what, "integrable, step, abelian, biinvariant, pluriclosed, hkt")->required();
  check->add_option("file", file, "document (default: stdin)");

  std::string target;
  auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
  verify->add_option("target", target, "paper")->required()->check(CLI::IsMember({"paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*parse) {
      std::cout << algebra_json(parse_salamon(salamon, o.dim, name)).dump(2) << "\n";
    } else if (*construct) {
      std::cout << cmd_construct(kind, cargs, o).dump(2) << "\n";
    } else if (*analyze) {
      emit(cmd_analyze(file, o), o);
    } else if (*check) {
      emit(cmd_check(what, file, o), o);
    } else if (*verify) {
      return cmd_verify(o);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    std::cerr << "semantic error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
