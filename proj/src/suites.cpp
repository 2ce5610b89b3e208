#include "rikit/suites.hpp"

#include <algorithm>
#include <sstream>

#include "rikit/parser.hpp"

namespace rikit {

const char* suite_name(SuiteKind k) {
  switch (k) {
    case SuiteKind::Univ: return "univ";
    case SuiteKind::Smn: return "smn";
    case SuiteKind::Fix: return "fix";
    case SuiteKind::Fund: return "fund";
    case SuiteKind::Ana: return "ana";
    case SuiteKind::Galois: return "galois";
  }
  return "?";
}

bool suite_from_name(const std::string& name, SuiteKind& out) {
  for (SuiteKind k : {SuiteKind::Univ, SuiteKind::Smn, SuiteKind::Fix, SuiteKind::Fund,
                      SuiteKind::Ana, SuiteKind::Galois}) {
    if (name == suite_name(k)) {
      out = k;
      return true;
    }
  }
  return false;
}

namespace {

constexpr int kPass = 0, kFail = 1, kSkip = 2;

LawResult pass(const char* law) { return {law, kPass, ""}; }
LawResult skip(const char* law) { return {law, kSkip, ""}; }
LawResult fail(const char* law, std::string msg) { return {law, kFail, std::move(msg)}; }

LawResult outcome_law(const char* law, const Outcome& got, const Outcome& want) {
  if (want.is_out_of_fuel() && got.is_out_of_fuel()) return skip(law);
  if (outcome_eq(got, want)) return pass(law);
  return fail(law, std::string("got ") + show_outcome(got) + ", want " + show_outcome(want));
}

// One verdict per case for a law probed on several samples: any failure fails
// the case; a case that only skipped is a skip.
LawResult merge_samples(const char* law, const std::vector<LawResult>& samples) {
  int skips = 0;
  for (const LawResult& r : samples) {
    if (r.verdict == kFail) return r;
    if (r.verdict == kSkip) ++skips;
  }
  if (skips == static_cast<int>(samples.size())) return skip(law);
  return pass(law);
}

// A description run through the interpreter against the plain evaluator on
// the same application.
std::vector<LawResult> univ_case(std::uint64_t seed, int index, Fuel fuel) {
  Rng rng = Rng::for_case(seed, 0x1, index);
  UnaryGen g = gen_unary(rng);
  Code c = encode(g.term);
  std::vector<LawResult> samples;
  for (int k = 0; k < 5; ++k) {
    ValueRef a = gen_value(rng, g.arg);
    Outcome via_interp = interpret(c, a, fuel);
    Outcome via_eval = eval(tapp(g.term, lift(a)), fuel - 1);
    samples.push_back(outcome_law("universality", via_interp, via_eval));
  }
  return {merge_samples("universality", samples)};
}

std::vector<LawResult> smn_case(std::uint64_t seed, int index, Fuel fuel) {
  Rng rng = Rng::for_case(seed, 0x2, index);
  BinaryGen g = gen_binary(rng);
  Code gc = encode(g.term);
  ValueRef x = gen_value(rng, g.first);
  ValueRef a = gen_value(rng, g.second);

  std::vector<LawResult> out;
  Code sp = specialize(gc, x);
  out.push_back(outcome_law("specializer", interpret(sp, a, fuel), interpret2(gc, x, a, fuel)));

  // the specialized code embeds g verbatim in function position
  bool stable = sp.term->kind == TermKind::App && term_eq(sp.term->kids[0], gc.term);
  out.push_back(stable ? pass("syntactic-stability") : fail("syntactic-stability", print_term(sp.term)));

  // object-level spec agrees with the host-level specializer
  Outcome obj = eval(tprim(PrimOp::Spec, {tquote(gc.term), lift(x)}), fuel);
  if (obj.is_done() && as_code(obj.value) != nullptr &&
      term_eq(as_code(obj.value)->term, sp.term)) {
    out.push_back(pass("object-meta-agreement"));
  } else {
    out.push_back(fail("object-meta-agreement", show_outcome(obj)));
  }
  return out;
}

std::vector<LawResult> fix_case(std::uint64_t seed, int index, Fuel fuel) {
  Rng rng = Rng::for_case(seed, 0x3, index);
  UnaryGen g = gen_total_on_code(rng);
  Code gc = encode(g.term);
  Code gamma = kleene_fix(gc);

  std::vector<LawResult> out;
  std::vector<LawResult> samples;
  for (int k = 0; k < 3; ++k) {
    ValueRef a = gen_value(rng, g.arg);
    Outcome lhs = interpret(gamma, a, fuel);
    Outcome rhs = interpret2(gc, vcode(gamma), a, fuel);
    samples.push_back(outcome_law("fixpoint", lhs, rhs));
  }
  out.push_back(merge_samples("fixpoint", samples));

  // size quine: the fixpoint of (lam p (lam a (size p))) reports its own
  // node count, measured here by an independent traversal
  Code size_g = encode(tlam(tlam(tprim(PrimOp::Size, {tvar(1)}))));
  Code quine = kleene_fix(size_g);
  Outcome said = interpret(quine, gen_value(rng, Flavor::Int), fuel);
  BigInt actual(static_cast<long long>(term_size(quine.term)));
  if (said.is_done() && as_int(said.value) != nullptr && *as_int(said.value) == actual) {
    out.push_back(pass("size-quine"));
  } else {
    out.push_back(fail("size-quine", show_outcome(said) + " want " + actual.str()));
  }
  return out;
}

std::vector<LawResult> fund_case(std::uint64_t seed, int index, Fuel fuel) {
  Rng rng = Rng::for_case(seed, 0x4, index);
  BinaryGen t = gen_total_ternary_on_code(rng);
  Code tc = encode(t.term);
  std::vector<LawResult> samples;
  for (int k = 0; k < 3; ++k) {
    ValueRef x = gen_value(rng, t.first);
    ValueRef a = gen_value(rng, t.second);
    Code ex = self_confirming_at(tc, x);
    Outcome lhs = interpret3(tc, vcode(ex), x, a, fuel);
    Outcome rhs = interpret(ex, a, fuel);
    samples.push_back(outcome_law("self-confirmation", lhs, rhs));
  }
  return {merge_samples("self-confirmation", samples)};
}

std::vector<LawResult> ana_case(std::uint64_t seed, int index, Fuel fuel) {
  Rng rng = Rng::for_case(seed, 0x5, index);
  MealyMachine m = gen_mealy(rng);
  std::vector<Symbol> stream = gen_stream(rng, m, 50);
  Code q = compile_machine(m);
  BeliefFamily family = belief_of(q);
  TraceReport report = simulate_and_check(m, family, stream, fuel);

  std::vector<LawResult> out;
  bool outputs = true, beliefs = true;
  for (const TraceStep& s : report.steps) {
    outputs = outputs && s.outputs_match;
    beliefs = beliefs && s.next_belief_matches;
  }
  if (report.steps.size() != stream.size()) outputs = beliefs = false;
  out.push_back(outputs ? pass("output-equality")
                        : fail("output-equality",
                               "divergence at step " +
                                   std::to_string(report.first_divergence.value_or(0))));
  out.push_back(beliefs ? pass("next-belief-equality")
                        : fail("next-belief-equality",
                               "divergence at step " +
                                   std::to_string(report.first_divergence.value_or(0))));

  // projection coherence: the stateful decomposition agrees with running the
  // compiled process on the paired input directly
  Symbol s0 = m.initial();
  Symbol i0 = stream.empty() ? m.inputs()[0] : stream[0];
  Outcome direct = interpret(q, vpair(vsym(s0), vsym(i0)), fuel);
  bool coherent = direct.is_done() && as_pair(direct.value) != nullptr &&
                  as_sym(as_pair(direct.value)->second) != nullptr &&
                  *as_sym(as_pair(direct.value)->second) == m.output(s0, i0) &&
                  as_sym(as_pair(direct.value)->first) != nullptr &&
                  *as_sym(as_pair(direct.value)->first) == m.next_state(s0, i0);
  out.push_back(coherent ? pass("projection-coherence")
                         : fail("projection-coherence", show_outcome(direct)));
  return out;
}

std::vector<LawResult> galois_case(std::uint64_t seed, int index, Fuel) {
  Rng rng = Rng::for_case(seed, 0x6, index);
  int worlds = rng.range(1, 5);
  DynamicFrame f = gen_frame(rng, worlds, rng.range(1, 3));

  bool equivalence = true, interior = true, closure = true, monotone = true;
  Pred top = f.all_worlds();
  for (const std::string& e : f.event_names()) {
    for (Pred a = 0; a <= top; ++a) {
      Pred sp_a = f.sp(a, e);
      for (Pred b = 0; b <= top; ++b) {
        bool left = pred_subset(sp_a, b);
        bool mid = f.hoare(a, e, b);
        bool right = pred_subset(a, f.wp(e, b));
        equivalence = equivalence && left == right && mid == left;
        if ((a | b) == b) {  // a subset of b: monotonicity probes
          monotone = monotone && pred_subset(sp_a, f.sp(b, e)) &&
                     pred_subset(f.wp(e, a), f.wp(e, b));
        }
      }
      closure = closure && pred_subset(a, f.wp(e, sp_a));
      interior = interior && pred_subset(f.sp(f.wp(e, a), e), a);
    }
  }
  std::vector<LawResult> out;
  out.push_back(equivalence ? pass("galois-equivalence") : fail("galois-equivalence", "frame mismatch"));
  out.push_back(interior ? pass("interior") : fail("interior", "interior law failed"));
  out.push_back(closure ? pass("closure") : fail("closure", "closure law failed"));
  out.push_back(monotone ? pass("monotonicity") : fail("monotonicity", "monotonicity failed"));
  return out;
}

}  // namespace

std::vector<LawResult> run_case(SuiteKind kind, std::uint64_t seed, int index, Fuel fuel) {
  switch (kind) {
    case SuiteKind::Univ: return univ_case(seed, index, fuel);
    case SuiteKind::Smn: return smn_case(seed, index, fuel);
    case SuiteKind::Fix: return fix_case(seed, index, fuel);
    case SuiteKind::Fund: return fund_case(seed, index, fuel);
    case SuiteKind::Ana: return ana_case(seed, index, fuel);
    case SuiteKind::Galois: return galois_case(seed, index, fuel);
  }
  return {};
}

bool SuiteReport::ok() const {
  for (const LawCount& l : laws) {
    if (l.fail > 0) return false;
  }
  return !laws.empty();
}

std::string SuiteReport::render_text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  out << "cases: " << cases << "  seed: " << seed << "\n";
  for (const LawCount& l : laws) {
    int total = l.pass + l.fail;
    out << "law " << l.law << ": " << l.pass << "/" << total << " pass";
    if (l.skip > 0) out << " (" << l.skip << " skipped)";
    out << "\n";
  }
  for (const CaseFailure& f : failures) {
    out << "FAIL case " << f.index << " [" << f.law << "] " << f.message << "\n";
  }
  out << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

SuiteReport run_suite(SuiteKind kind, const SuiteConfig& config) {
  std::vector<std::vector<LawResult>> results(config.cases);

  if (config.mode == RunMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < config.cases; ++i) {
      results[i] = run_case(kind, config.seed, i, config.fuel);
    }
  } else {
    for (int i = 0; i < config.cases; ++i) {
      results[i] = run_case(kind, config.seed, i, config.fuel);
    }
  }

  // Fold in case order, so the report is independent of scheduling.
  SuiteReport report;
  report.suite = suite_name(kind);
  report.cases = config.cases;
  report.seed = config.seed;
  for (int i = 0; i < config.cases; ++i) {
    for (const LawResult& r : results[i]) {
      auto it = std::find_if(report.laws.begin(), report.laws.end(),
                             [&](const LawCount& l) { return l.law == r.law; });
      if (it == report.laws.end()) {
        report.laws.push_back(LawCount{r.law, 0, 0, 0});
        it = report.laws.end() - 1;
      }
      if (r.verdict == kPass) ++it->pass;
      if (r.verdict == kFail) {
        ++it->fail;
        if (report.failures.size() < 10) report.failures.push_back({i, r.law, r.message});
      }
      if (r.verdict == kSkip) ++it->skip;
    }
  }
  return report;
}

}  // namespace rikit
