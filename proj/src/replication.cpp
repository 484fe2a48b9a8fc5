#include "nilherm/replication.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "nilherm/basic_constructors.hpp"
#include "nilherm/random.hpp"
#include "nilherm/representations.hpp"
#include "nilherm/salamon.hpp"
#include "nilherm/symmetric_pair.hpp"
#include "nilherm/three_step_data.hpp"

namespace nilherm {

namespace {

using Check = std::function<bool(std::ostringstream&)>;

MetricComplexTriple with_metric(const LieAlgebra& l, const ComplexStructure& j, const RMatrix& h) {
  return MetricComplexTriple(l, j, hermitian_average(j, h));
}

MetricComplexTriple with_identity_metric(const AlgebraWithJ& a) {
  const Index n = a.algebra.dim();
  return with_metric(a.algebra, a.J, RMatrix::Identity(n, n));
}

RMatrix random_metric(Index n, std::uint64_t seed) {
  Rng rng(seed);
  return rng.positive_definite(n, 1);
}

// Metric of n0 on v in the coordinates of v.basis().
RMatrix d_gram_on_v(const Complex2StepData& d) {
  const RMatrix& vb = d.v.basis();
  return vb.transpose() * d.g0 * vb;
}

// Check 1.
bool table_dims(std::ostringstream& out) {
  const std::array<std::pair<Index, Index>, 7> expected{{{3, 3}, {2, 2}, {2, 2}, {2, 2}, {2, 3}, {1, 2}, {1, 4}}};
  bool ok = true;
  for (int row = 1; row <= 7; ++row) {
    const LieAlgebra l = parse_salamon(table1_salamon(row), 6);
    const auto r = analyze_algebra(l);
    const bool good = r.dim == 6 && is_two_step(l) &&
                      std::make_pair(r.commutator_dim, r.center_dim) == expected[static_cast<std::size_t>(row - 1)];
    ok = ok && good;
    out << (row > 1 ? " " : "") << "(" << r.commutator_dim << "," << r.center_dim << ")" << (good ? "" : "!");
  }
  out << (ok ? ", all 2-step" : "");
  return ok;
}

// Check 2.
bool free_structures(std::ostringstream& out) {
  bool ok = true;
  for (Index r : {2, 3, 4, 5, 6, 7, 8}) {
    const auto a = free_complex_structure(r);
    const Index base = r + r * (r - 1) / 2;
    const bool padded = r % 4 == 1 || r % 4 == 2;
    const int expected = r % 4 == 3 ? 3 : 2;
    const bool integrable = is_integrable(a.algebra, a.J);
    const auto step = j_nilpotent_step(a.algebra, a.J);
    const bool good = integrable && step == expected && a.algebra.dim() == base + (padded ? 1 : 0);
    ok = ok && good;
    out << (r > 2 ? " " : "") << (padded ? "R+f" : "f") << r << ":" << (step ? std::to_string(*step) : "-")
        << (good ? "" : "!");
  }
  return ok;
}

// Check 3.
bool standard_abelian(std::ostringstream& out) {
  bool ok = true;
  for (Index k : {0, 1})
    for (Index m : {1, 2, 3}) {
      const auto t = standard_abelian_triple(k, m);
      const bool dc = is_pluriclosed(t);
      const bool six = pluriclosed_criterion_2step(t);
      const bool ab = pluriclosed_criterion_abelian(t);
      const bool good = dc == six && six == ab && dc == (m == 1);
      ok = ok && good;
      out << (k + m > 1 ? " " : "") << "(" << k << "," << m << "):" << (dc ? "skt" : "no") << (good ? "" : "!");
    }
  return ok;
}

// Check 4.
bool dc_oracle(std::ostringstream& out) {
  const auto& pool = triple_pool();
  Index agree = 0;
  std::string first_bad;
  for (const auto& nt : pool) {
    const FourForm expansion = dc_four_form(nt.triple);
    const FourForm oracle = chevalley_eilenberg_d(nt.triple.algebra(), torsion_three_form(nt.triple));
    if (expansion == oracle) ++agree;
    else if (first_bad.empty()) first_bad = nt.name;
  }
  out << agree << "/" << pool.size() << " triples agree entrywise";
  if (!first_bad.empty()) out << ", first mismatch " << first_bad;
  return agree == static_cast<Index>(pool.size()) && pool.size() >= 30;
}

// Check 5: psi perturbed off u(n) gives non-integrable almost complex structures.
bool s_integrability(std::ostringstream& out) {
  Index total = 0, integrable = 0, agree = 0, precondition = 0;
  const auto& cases = round_trip_cases();
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& [type, seed] = cases[c];
    const Complex2StepData base = random_2step_data(type, seed);
    const RMatrix gv = d_gram_on_v(base);
    for (int variant = 0; variant < 2; ++variant) {
      Complex2StepData d = base;
      if (variant == 1) {
        Rng rng(1000 + seed + 17 * c);
        const RMatrix p = inverse(gv) * rng.skew(gv.rows(), 2);
        auto& target = !d.psi_b.empty() ? d.psi_b.back() : d.psi_z1.back();
        target += p;
      }
      const MetricComplexTriple built = assemble_2step_unchecked(d);
      for (int metric = 0; metric < 2; ++metric) {
        const MetricComplexTriple t =
            metric == 0 ? built
                        : with_metric(built.algebra(), built.J(), random_metric(built.dim(), 7 * seed + c + 3));
        if (!classify(t.algebra(), t.J()).commutator_in_center) continue;
        ++precondition;
        const bool nij = is_integrable(t.algebra(), t.J());
        const bool via_s = integrability_via_S(t);
        ++total;
        integrable += nij ? 1 : 0;
        agree += nij == via_s ? 1 : 0;
      }
    }
  }
  out << agree << "/" << total << " agree (" << integrable << " integrable, " << total - integrable
      << " non-integrable)";
  return total >= 50 && agree == total && integrable > 0 && integrable < total && precondition == total;
}

// Check 6.
bool round_trips(std::ostringstream& out) {
  Index passed = 0;
  bool r0 = false, r1 = false, pp = false, pm = false, a1 = false;
  const auto& cases = round_trip_cases();
  for (const auto& [type, seed] : cases) {
    const Complex2StepData d = random_2step_data(type, seed);
    const MetricComplexTriple t = build_from_2step_data(d);
    const auto e = extract_2step_data(t);
    const MetricComplexTriple again = build_from_2step_data(e.data);
    const auto lay = layout_of(d);
    const Index n = t.dim();
    const bool good = type_of(d) == type && e.data == d && e.adapted_basis == RMatrix::Identity(n, n) &&
                      same_triple(again, t) && j_nilpotent_step(again.algebra(), again.J()) == 2 &&
                      commutator_ideal(again.algebra()).dim() == lay.r + 2 * lay.k &&
                      j_invariant_commutator(again.algebra(), again.J()).dim() == 2 * lay.k;
    if (!good) continue;
    ++passed;
    (type[0] == 0 ? r0 : r1) = true;
    pp = pp || type[1] > 0;
    pm = pm || type[2] > 0;
    a1 = a1 || type[3] > 0;
  }
  out << passed << "/" << cases.size() << " bit-exact";
  const bool coverage = r0 && r1 && pp && pm && a1;
  out << (coverage ? ", all type components covered" : ", type coverage incomplete");
  return passed == static_cast<Index>(cases.size()) && passed >= 20 && coverage;
}

// Check 7.
bool three_step(std::ostringstream& out) {
  const Complex3StepData d = example_3step_data(3);
  const MetricComplexTriple t = build_from_3step_data(d);
  const auto r = analyze_algebra(t.algebra());
  const auto f3 = analyze_algebra(free_two_step(3));
  const bool fingerprint = r.dim == 6 && r.commutator_dim == 3 && r.center_dim == 3 && r.step == 2 &&
                           f3.dim == r.dim && f3.commutator_dim == r.commutator_dim && f3.center_dim == r.center_dim &&
                           f3.first_betti == r.first_betti;
  const bool step3 = j_nilpotent_step(t.algebra(), t.J()) == 3;
  const auto e = extract_3step_data(t);
  const bool valid = validate_3step_data(e.data).empty();
  const bool trip = e.data == d && same_triple(build_from_3step_data(e.data), change_basis(t, e.adapted_basis));

  auto rejected = [](Complex3StepData bad, const std::string& clause) {
    const auto v = validate_3step_data(bad);
    if (v.empty() || v.front().clause != clause) return false;
    try {
      build_from_3step_data(bad);
    } catch (const SemanticError& err) {
      return err.clause() == clause;
    }
    return false;
  };
  Complex3StepData no_mu = d;
  for (auto& m : no_mu.mu) m.setZero();
  Complex3StepData no_rho = d;
  for (auto& m : no_rho.rho) m.setZero();
  const bool mu_rejected = rejected(no_mu, "(iii)");
  const bool rho_rejected = rejected(no_rho, "(i)");
  out << "(" << r.dim << "," << r.commutator_dim << "," << r.center_dim << "," << (r.step ? *r.step : -1) << ")"
      << (step3 ? " J-step 3" : " J-step wrong") << (trip ? ", round trip" : ", round trip failed")
      << (mu_rejected ? ", mu=0 -> (iii)" : ", mu=0 not rejected") << (rho_rejected ? ", rho=0 -> (i)" : ", rho=0 not rejected");
  return fingerprint && step3 && valid && trip && mu_rejected && rho_rejected;
}

// Check 8.
bool two_or_three(std::ostringstream& out) {
  std::vector<const MetricComplexTriple*> all;
  for (const auto& nt : triple_pool()) all.push_back(&nt.triple);
  std::vector<MetricComplexTriple> extra;
  for (const auto& [type, seed] : round_trip_cases()) extra.push_back(build_from_2step_data(random_2step_data(type, seed)));
  for (const auto& t : extra) all.push_back(&t);

  Index tested = 0, step2 = 0, step3 = 0, metrics = 0;
  bool ok = true;
  for (const MetricComplexTriple* t : all) {
    const LieAlgebra& l = t->algebra();
    if (!is_two_step(l) || !is_integrable(l, t->J())) continue;
    ++tested;
    const auto step = j_nilpotent_step(l, t->J());
    if (step == 2) {
      ++step2;
      continue;
    }
    if (step != 3) {
      ok = false;
      continue;
    }
    ++step3;
    const Subspace z = center(l);
    ok = ok && commutator_ideal(l).dim() >= 3 && !z.contains(t->J().apply(z)) &&
         j_invariant_commutator(l, t->J()).dim() > 0;
    const Index n = l.dim();
    for (const RMatrix& h : {RMatrix(t->gram()), RMatrix(RMatrix::Identity(n, n)), random_metric(n, 11),
                             random_metric(n, 12)}) {
      ++metrics;
      ok = ok && !is_pluriclosed(with_metric(l, t->J(), h));
    }
  }
  out << tested << " integrable J: " << step2 << " step 2, " << step3 << " step 3 (" << metrics
      << " metrics, none pluriclosed)";
  return ok && step3 > 0 && step2 > 0 && step2 + step3 == tested;
}

// Check 9.
bool hermitian_symmetric(std::ostringstream& out) {
  const auto t = su2_u1_hermitian_triple();
  const bool ab = is_abelian_structure(t.algebra(), t.J());
  const bool skt = is_pluriclosed(t);
  const bool criterion = pluriclosed_criterion_abelian(t);
  out << "dim " << t.dim() << (ab ? ", abelian" : ", not abelian") << (skt ? ", pluriclosed" : ", not pluriclosed");
  return t.dim() == 4 && ab && skt && criterion;
}

// Check 10.
bool natred(std::ostringstream& out) {
  const LieAlgebra h = su2();
  const RMatrix gh = RMatrix::Identity(3, 3);
  const auto ad = adjoint_rep(h);
  bool refused = false;
  try {
    natred_complex(h, gh, {IsotypicBlock{ad, 1, RMatrix::Identity(3, 3)}});
  } catch (const SemanticError& e) {
    refused = e.clause() == "NoInvariantComplexStructure";
  }
  const auto t = natred_complex(h, gh, {IsotypicBlock{ad, 2, RMatrix::Identity(3, 3)}});
  const bool two = is_abelian_structure(t.algebra(), t.J()) && is_hermitian(t.J(), t.gram());
  const auto q = su2_quaternionic_rep();
  const bool quaternionic = irreducible_type(q, RMatrix::Identity(4, 4)) == RepType::Quaternionic;
  const auto hc = natred_hypercomplex(h, gh, {IsotypicBlock{q, 1, RMatrix::Identity(4, 4)}});
  const auto base = analyze_algebra(naturally_reductive(h, q, gh, RMatrix::Identity(4, 4)).algebra);
  const bool hyper = !validate_hypercomplex(hc.algebra, hc.structure) &&
                     is_abelian_hypercomplex(hc.algebra, hc.structure) && is_hyper_hermitian(hc.structure, hc.gram);
  const bool hkt = hyper && is_hkt(hc.algebra, hc.structure, hc.gram);
  out << (refused ? "real r=1 refused" : "real r=1 not refused") << (two ? ", real r=2 abelian orthogonal" : ", real r=2 failed")
      << ", quaternionic r=1: dim " << base.dim << "+1" << (hyper ? " hypercomplex" : " invalid") << (hkt ? " HKT" : " not HKT");
  return refused && two && quaternionic && base.dim == 7 && base.center_dim == 3 && hc.algebra.dim() == 8 && hyper && hkt;
}

struct Entry {
  const char* name;
  bool (*check)(std::ostringstream&);
};

const std::array<Entry, kReplicationChecks> kEntries{{
    {"six-dimensional 2-step table", table_dims},
    {"complex structures on free 2-step algebras", free_structures},
    {"pluriclosed standard abelian triples", standard_abelian},
    {"dc expansion vs Chevalley-Eilenberg", dc_oracle},
    {"integrability via S vs Nijenhuis", s_integrability},
    {"2-step data round trip", round_trips},
    {"3-step data family", three_step},
    {"integrable J on 2-step algebras is 2- or 3-step", two_or_three},
    {"su(2)/u(1) pluriclosed abelian structure", hermitian_symmetric},
    {"naturally reductive complex and hypercomplex", natred},
}};

}  // namespace

const std::vector<std::pair<TwoStepType, std::uint64_t>>& round_trip_cases() {
  static const std::vector<std::pair<TwoStepType, std::uint64_t>> cases = [] {
    const std::vector<TwoStepType> types{{0, 1, 0, 0, 2}, {1, 0, 0, 0, 1}, {0, 0, 1, 0, 2}, {0, 0, 0, 1, 2},
                                         {1, 1, 0, 0, 2}, {1, 0, 1, 0, 2}, {1, 0, 0, 1, 2}, {2, 1, 1, 0, 2},
                                         {1, 1, 1, 1, 3}, {0, 1, 1, 1, 3}, {2, 0, 1, 0, 2}, {0, 2, 0, 0, 2},
                                         {1, 0, 0, 0, 2}, {3, 0, 0, 0, 2}};
    std::vector<std::pair<TwoStepType, std::uint64_t>> out;
    for (std::uint64_t seed : {0u, 1u})
      for (const auto& t : types) out.push_back({t, seed});
    return out;
  }();
  return cases;
}

const std::vector<NamedTriple>& triple_pool() {
  static const std::vector<NamedTriple> pool = [] {
    std::vector<NamedTriple> out;
    for (Index k : {0, 1})
      for (Index m : {1, 2, 3})
        out.push_back({"standard(" + std::to_string(k) + "," + std::to_string(m) + ")", standard_abelian_triple(k, m)});
    for (Index r = 2; r <= 7; ++r) out.push_back({"free " + std::to_string(r), with_identity_metric(free_complex_structure(r))});
    const auto f4 = free_complex_structure(4);
    for (std::uint64_t s : {1u, 2u})
      out.push_back({"free 4, metric " + std::to_string(s), with_metric(f4.algebra, f4.J, random_metric(f4.algebra.dim(), s))});
    const std::array<std::pair<TwoStepExample, const char*>, 4> examples{{{TwoStepExample::Abelian, "abelian"},
                                                                          {TwoStepExample::BiInvariant, "bi-invariant"},
                                                                          {TwoStepExample::MinusWithPsi, "minus+psi"},
                                                                          {TwoStepExample::Mixed, "mixed"}}};
    for (const auto& [kind, name] : examples)
      out.push_back({std::string("example ") + name, build_from_2step_data(example_2step_data(kind))});
    const auto& cases = round_trip_cases();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const TwoStepType type = cases[static_cast<std::size_t>(seed)].first;
      out.push_back({"random " + to_string(type) + " seed " + std::to_string(seed),
                     build_from_2step_data(random_2step_data(type, seed))});
    }
    for (Index n : {3, 4}) out.push_back({"3-step example n=" + std::to_string(n), build_from_3step_data(example_3step_data(n))});
    out.push_back({"su(2)/u(1)", su2_u1_hermitian_triple()});
    const LieAlgebra h = su2();
    out.push_back({"natred adjoint x2",
                   natred_complex(h, RMatrix::Identity(3, 3), {IsotypicBlock{adjoint_rep(h), 2, RMatrix::Identity(3, 3)}})});
    const auto hc = natred_hypercomplex(h, RMatrix::Identity(3, 3),
                                        {IsotypicBlock{su2_quaternionic_rep(), 1, RMatrix::Identity(4, 4)}});
    for (int a = 0; a < 3; ++a)
      out.push_back({"natred quaternionic J" + std::to_string(a + 1), MetricComplexTriple(hc.algebra, hc.structure[a], hc.gram)});
    return out;
  }();
  return pool;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kReplicationChecks) throw PreconditionError("criterion", "unknown check " + std::to_string(id));
  const Entry& e = kEntries[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream detail;
  try {
    r.passed = e.check(detail);
    r.detail = detail.str();
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = detail.str() + (detail.str().empty() ? "" : "; ") + "error: " + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_replication() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kReplicationChecks; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace nilherm
