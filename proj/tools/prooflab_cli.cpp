// Command-line front end: checking, generation, translation, search, and
// the benchmark harness.  Exit codes: 0 ok, 1 check violation / negative
// verdict, 2 usage or parse errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "prooflab/builder.hpp"
#include "prooflab/chu.hpp"
#include "prooflab/cutfree.hpp"
#include "prooflab/experiment.hpp"
#include "prooflab/hard_formulas.hpp"
#include "prooflab/horn.hpp"
#include "prooflab/search.hpp"
#include "prooflab/vass.hpp"

using namespace prooflab;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << content;
}

FregeSystem parse_system(const std::string& name) {
  auto sys = system_from_name(name);
  if (!sys) throw ParseError("unknown Frege system '" + name + "'", 0);
  return *sys;
}

struct CliState {
  int exit_code = kOk;
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"prooflab: sequent calculi, translations, and proof search"};
  app.require_subcommand(1);
  CliState st;

  // ---- check -------------------------------------------------------------
  std::string check_file, check_calc;
  auto* c_check = app.add_subcommand("check", "check a proof file");
  c_check->add_option("file", check_file)->required();
  c_check->add_option("--calculus", check_calc, "re-tag before checking");
  c_check->callback([&] {
    Proof p = proof_from_json(slurp(check_file));
    if (!check_calc.empty()) p.calculus = calculus_from_string(check_calc);
    CheckResult r = check_proof(p);
    std::cout << check_message(r) << "\n";
    if (check_ok(r)) {
      const ProofMetrics& m = check_metrics(r);
      std::cout << "size=" << m.size << " lines=" << m.lines
                << " nodes=" << m.node_count
                << " tree_like=" << (m.tree_like ? "yes" : "no") << "\n";
    } else {
      st.exit_code = kViolation;
    }
  });

  // ---- gen ---------------------------------------------------------------
  std::string gen_family, gen_out;
  uint32_t gen_n = 1, gen_k = 0, gen_m = 1;
  bool gen_stats = false;
  auto* c_gen = app.add_subcommand("gen", "generate a formula family member");
  c_gen->add_option("family", gen_family,
                    "clique|color|clique-color|alpha|beta|theta|theta-star|theta-bot")
      ->required();
  c_gen->add_option("--n", gen_n)->required();
  c_gen->add_option("--k", gen_k, "defaults to floor(sqrt(n))");
  c_gen->add_option("--m", gen_m, "colors, for the color family");
  c_gen->add_flag("--stats", gen_stats, "emit clause/size counts as CSV");
  c_gen->add_option("--out", gen_out);
  c_gen->callback([&] {
    uint32_t k = gen_k ? gen_k : default_k(gen_n);
    Formula f;
    size_t clauses = 0;
    if (gen_family == "clique") {
      clauses = clique_clauses(gen_n, k).size();
      f = clique_formula(gen_n, k);
    } else if (gen_family == "color") {
      clauses = color_clauses(gen_n, gen_m).size();
      f = color_formula(gen_n, gen_m);
    } else if (gen_family == "clique-color") {
      f = clique_color_implication(gen_n, k);
    } else if (gen_family == "alpha") {
      f = alpha(gen_n, k);
    } else if (gen_family == "beta") {
      f = beta(gen_n, k);
    } else if (gen_family == "theta") {
      f = theta(gen_n, k);
    } else if (gen_family == "theta-star") {
      f = theta_star(gen_n, k);
    } else if (gen_family == "theta-bot") {
      f = theta_bot(gen_n);
    } else {
      throw ParseError("unknown family '" + gen_family + "'", 0);
    }
    if (gen_stats) {
      std::ostringstream csv;
      csv << "family,n,k,m,clauses,size,atoms\n";
      csv << gen_family << "," << gen_n << "," << k << "," << gen_m << ","
          << clauses << "," << f.size() << "," << var_ids(f).size() << "\n";
      emit(gen_out, csv.str());
    } else {
      emit(gen_out, to_string(f));
    }
  });

  // ---- chu ---------------------------------------------------------------
  auto* c_chu = app.add_subcommand("chu", "polarity translation tools");
  c_chu->require_subcommand(1);
  std::string chu_d = "bot", chu_nf = "bot", chu_out;

  std::string ctf_formula, ctf_polarity = "t";
  auto* c_ctf = c_chu->add_subcommand("translate-formula");
  c_ctf->add_option("formula", ctf_formula)->required();
  c_ctf->add_option("--polarity", ctf_polarity, "t or s");
  c_ctf->add_option("--d", chu_d);
  c_ctf->add_option("--n-formula", chu_nf);
  c_ctf->add_option("--out", chu_out);
  c_ctf->callback([&] {
    ChuTranslator tr({parse_formula(chu_d), parse_formula(chu_nf)});
    Formula f = parse_formula(ctf_formula);
    emit(chu_out, to_string(ctf_polarity == "s" ? tr.s(f) : tr.t(f)));
  });

  std::string ctp_file, ctp_system = "CFLe-F";
  auto* c_ctp = c_chu->add_subcommand("translate-proof");
  c_ctp->add_option("file", ctp_file, "Frege proof in the text format")->required();
  c_ctp->add_option("--system", ctp_system);
  c_ctp->add_option("--d", chu_d);
  c_ctp->add_option("--n-formula", chu_nf);
  c_ctp->add_option("--out", chu_out);
  c_ctp->callback([&] {
    FregeProof fp = frege_from_text(slurp(ctp_file));
    ChuParams prm{parse_formula(chu_d), parse_formula(chu_nf)};
    Proof out = translate_frege_proof(fp, prm, parse_system(ctp_system));
    emit(chu_out, proof_to_json(out));
  });

  std::string cc_formula;
  auto* c_cc = c_chu->add_subcommand("classify");
  c_cc->add_option("formula", cc_formula)->required();
  c_cc->callback([&] {
    std::cout << conservativity_name(
                     classify_conservative(parse_formula(cc_formula)))
              << "\n";
  });

  std::string cp_file, cp_system = "MALL-F";
  auto* c_cp = c_chu->add_subcommand("pipeline");
  c_cp->add_option("file", cp_file)->required();
  c_cp->add_option("--system", cp_system);
  c_cp->add_option("--out", chu_out);
  c_cp->callback([&] {
    FregeProof fp = frege_from_text(slurp(cp_file));
    Proof out = conservativity_pipeline(fp, parse_system(cp_system));
    emit(chu_out, proof_to_json(out));
  });

  // ---- horn --------------------------------------------------------------
  auto* c_horn = app.add_subcommand("horn", "implicational Horn tools");
  c_horn->require_subcommand(1);
  std::string horn_seq, horn_out;

  auto* c_hc = c_horn->add_subcommand("check");
  c_hc->add_option("sequent", horn_seq)->required();
  c_hc->callback([&] {
    bool v = horn_valid(parse_sequent(horn_seq));
    std::cout << (v ? "valid" : "invalid") << "\n";
    if (!v) st.exit_code = kViolation;
  });

  std::vector<std::string> horn_vass_args;
  auto* c_hp = c_horn->add_subcommand("prove");
  c_hp->add_option("sequent", horn_seq);
  c_hp->add_option("--from-vass", horn_vass_args,
                   "machine file, source state, target state")
      ->expected(3);
  c_hp->add_option("--out", horn_out);
  c_hp->callback([&] {
    Sequent s;
    if (!horn_vass_args.empty()) {
      Vass v = vass_from_text(slurp(horn_vass_args[0]));
      auto qi = v.state_id(horn_vass_args[1]);
      auto ri = v.state_id(horn_vass_args[2]);
      if (!qi || !ri) throw ParseError("unknown state", 0);
      s = encode_sequent(v, *qi, *ri);
    } else if (!horn_seq.empty()) {
      s = parse_sequent(horn_seq);
    } else {
      throw ParseError("need a sequent or --from-vass", 0);
    }
    Proof p = unit_prop_prove(s);
    emit(horn_out, proof_to_json(p));
  });

  // ---- vass --------------------------------------------------------------
  auto* c_vass = app.add_subcommand("vass", "counter machine tools");
  c_vass->require_subcommand(1);
  std::string vass_file, vass_from, vass_to, vass_mode = "plain", vass_out;
  uint64_t vass_cap = 8, vass_max = 50000;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("machine", vass_file)->required();
    sub->add_option("--component-cap", vass_cap);
    sub->add_option("--max-configs", vass_max);
    sub->add_option("--out", vass_out);
  };

  auto parse_mode = [&]() {
    if (vass_mode == "plain") return StepMode::Plain;
    if (vass_mode == "contractive") return StepMode::Contractive;
    if (vass_mode == "expansion") return StepMode::Expansion;
    throw ParseError("mode must be plain|contractive|expansion", 0);
  };

  auto* c_vr = c_vass->add_subcommand("reach");
  add_common(c_vr);
  c_vr->add_option("--from", vass_from)->required();
  c_vr->add_option("--to", vass_to)->required();
  c_vr->add_option("--mode", vass_mode);
  c_vr->callback([&] {
    Vass v = vass_from_text(slurp(vass_file));
    auto qi = v.state_id(vass_from), ri = v.state_id(vass_to);
    if (!qi || !ri) throw ParseError("unknown state", 0);
    Config from{*qi, std::vector<uint64_t>(v.dim, 0)};
    Config to{*ri, std::vector<uint64_t>(v.dim, 0)};
    ReachBounds bounds{vass_cap, vass_max};
    auto r = reach_bfs(v, from, to, parse_mode(), bounds);
    std::cout << (r.found ? "reachable"
                          : (r.complete ? "unreachable-within-bounds"
                                        : "exhausted-incomplete"))
              << " visited=" << r.visited << "\n";
    if (r.found) {
      for (const RunStep& stp : r.run->steps) {
        switch (stp.kind) {
          case RunStep::Rule: std::cout << "step rule " << stp.index << "\n"; break;
          case RunStep::Contract:
            std::cout << "step contract " << stp.index << "\n";
            break;
          case RunStep::Expand:
            std::cout << "step expand " << stp.index << "\n";
            break;
        }
      }
    } else {
      st.exit_code = kViolation;
    }
  });

  auto* c_vc = c_vass->add_subcommand("cover");
  add_common(c_vc);
  c_vc->add_option("--from", vass_from)->required();
  c_vc->add_option("--to", vass_to)->required();
  c_vc->callback([&] {
    Vass v = vass_from_text(slurp(vass_file));
    auto qi = v.state_id(vass_from), ri = v.state_id(vass_to);
    if (!qi || !ri) throw ParseError("unknown state", 0);
    Config from{*qi, std::vector<uint64_t>(v.dim, 0)};
    ReachBounds bounds{vass_cap, vass_max};
    auto r = cover_bfs(v, from, *ri, {}, bounds);
    std::cout << (r.found ? "coverable"
                          : (r.complete ? "not-coverable-within-bounds"
                                        : "exhausted-incomplete"))
              << " visited=" << r.visited << "\n";
    if (!r.found) st.exit_code = kViolation;
  });

  auto* c_vred = c_vass->add_subcommand("reduce");
  add_common(c_vred);
  c_vred->add_option("--target", vass_to)->required();
  c_vred->callback([&] {
    Vass v = vass_from_text(slurp(vass_file));
    auto ri = v.state_id(vass_to);
    if (!ri) throw ParseError("unknown state", 0);
    emit(vass_out, vass_to_text(cover_reduce(v, *ri)));
  });

  auto* c_venc = c_vass->add_subcommand("encode");
  add_common(c_venc);
  c_venc->add_option("--q", vass_from)->required();
  c_venc->add_option("--r", vass_to)->required();
  c_venc->callback([&] {
    Vass v = vass_from_text(slurp(vass_file));
    auto qi = v.state_id(vass_from), ri = v.state_id(vass_to);
    if (!qi || !ri) throw ParseError("unknown state", 0);
    emit(vass_out, to_string(encode_sequent(v, *qi, *ri)));
  });

  auto* c_vrp = c_vass->add_subcommand("run-to-proof");
  add_common(c_vrp);
  c_vrp->add_option("--q", vass_from)->required();
  c_vrp->add_option("--r", vass_to)->required();
  c_vrp->add_option("--mode", vass_mode, "run search mode (default expansion)");
  c_vrp->callback([&] {
    Vass v = vass_from_text(slurp(vass_file));
    auto qi = v.state_id(vass_from), ri = v.state_id(vass_to);
    if (!qi || !ri) throw ParseError("unknown state", 0);
    Config from{*qi, std::vector<uint64_t>(v.dim, 0)};
    Config to{*ri, std::vector<uint64_t>(v.dim, 0)};
    ReachBounds bounds{vass_cap, vass_max};
    StepMode mode = vass_mode == "plain" ? StepMode::Plain : StepMode::Expansion;
    auto r = reach_bfs(v, from, to, mode, bounds);
    if (!r.found) {
      std::cout << "no run within bounds\n";
      st.exit_code = kViolation;
      return;
    }
    emit(vass_out, proof_to_json(run_to_proof(v, *r.run)));
  });

  // ---- cutfree -----------------------------------------------------------
  auto* c_cf = app.add_subcommand("cutfree", "structural-axiom pipeline");
  c_cf->require_subcommand(1);
  std::string cf_formula, cf_goal = "em", cf_file, cf_out;
  uint32_t cf_n = 2;

  auto* c_l33 = c_cf->add_subcommand("lemma33");
  c_l33->add_option("formula", cf_formula)->required();
  c_l33->add_option("--goal", cf_goal, "unit|zero|em|dup");
  c_l33->add_option("--out", cf_out);
  c_l33->callback([&] {
    StructuralGoal g;
    if (cf_goal == "unit") g = StructuralGoal::Unit;
    else if (cf_goal == "zero") g = StructuralGoal::Zero;
    else if (cf_goal == "em") g = StructuralGoal::Em;
    else if (cf_goal == "dup") g = StructuralGoal::Dup;
    else throw ParseError("goal must be unit|zero|em|dup", 0);
    emit(cf_out, proof_to_json(structural_axiom_proof(parse_formula(cf_formula), g)));
  });

  auto* c_tr = c_cf->add_subcommand("translate");
  c_tr->add_option("file", cf_file)->required();
  c_tr->add_option("--out", cf_out);
  c_tr->callback([&] {
    Proof p = proof_from_json(slurp(cf_file));
    emit(cf_out, proof_to_json(translate_lknn_to_g(p)));
  });

  auto* c_ded = c_cf->add_subcommand("deduce");
  c_ded->add_option("file", cf_file)->required();
  c_ded->add_option("--out", cf_out);
  c_ded->callback([&] {
    Proof p = proof_from_json(slurp(cf_file));
    DeductionResult d = feasible_deduction(p);
    std::cout << "sigma:";
    for (Formula f : d.sigma.canonical_elements())
      std::cout << " " << csv_quote(to_string(f));
    std::cout << "\n";
    emit(cf_out, proof_to_json(d.proof));
  });

  auto* c_sn = c_cf->add_subcommand("assemble-sn");
  c_sn->add_option("--n", cf_n)->required();
  c_sn->add_option("--proof", cf_file, "nnf proof JSON; searched when absent");
  c_sn->add_option("--out", cf_out);
  c_sn->callback([&] {
    Proof input;
    if (!cf_file.empty()) {
      input = proof_from_json(slurp(cf_file));
    } else {
      Sequent target;
      target.ante.add(clique_formula(cf_n, default_k(cf_n) + 1));
      target.succ.add(colorbar_formula(cf_n, default_k(cf_n)));
      auto dec = lknn_decide(target);
      if (!dec.proof) throw std::runtime_error("oracle found no nnf proof");
      input = *dec.proof;
    }
    SnResult sn = assemble_sn(cf_n, input);
    std::cout << "S_n: " << to_string(sn.s_n) << "\n";
    emit(cf_out, proof_to_json(sn.proof));
  });

  // ---- search ------------------------------------------------------------
  auto* c_search = app.add_subcommand("search", "proof search oracles");
  c_search->require_subcommand(1);
  std::string se_calc = "FL_e", se_seq, se_formula, se_out;
  uint64_t se_cap = 30;
  bool se_analytic = false;

  auto* c_sd = c_search->add_subcommand("decide");
  c_sd->add_option("sequent", se_seq)->required();
  c_sd->add_option("--calculus", se_calc);
  c_sd->add_option("--out", se_out);
  c_sd->callback([&] {
    auto r = decide_contraction_free(calculus_from_string(se_calc),
                                     parse_sequent(se_seq));
    std::cout << (r.provable ? "provable" : "not-provable") << "\n";
    if (r.provable) emit(se_out, proof_to_json(*r.proof));
    else st.exit_code = kViolation;
  });

  auto* c_sb = c_search->add_subcommand("bounded");
  c_sb->add_option("sequent", se_seq)->required();
  c_sb->add_option("--calculus", se_calc);
  c_sb->add_option("--size-cap", se_cap);
  c_sb->add_flag("--analytic-cut", se_analytic);
  c_sb->add_option("--out", se_out);
  c_sb->callback([&] {
    SearchBudget budget;
    budget.max_nodes = se_cap;
    auto r = bounded_search(calculus_from_string(se_calc),
                            parse_sequent(se_seq), budget, se_analytic);
    std::cout << (r.found ? "found"
                          : (r.complete ? "exhausted" : "exhausted-incomplete"))
              << " (node cap " << se_cap << ")\n";
    if (r.found) emit(se_out, proof_to_json(*r.proof));
    else st.exit_code = kViolation;
  });

  auto* c_st = c_search->add_subcommand("taut");
  c_st->add_option("formula", se_formula)->required();
  c_st->callback([&] {
    bool v = boolean_valid(parse_formula(se_formula));
    std::cout << (v ? "tautology" : "not-a-tautology") << "\n";
    if (!v) st.exit_code = kViolation;
  });

  // ---- bench -------------------------------------------------------------
  std::string bench_name, bench_out;
  uint64_t bench_seed = 1;
  uint32_t bench_samples = 0;
  bool bench_timings = false;
  auto* c_bench = app.add_subcommand("bench", "experiment harness (CSV)");
  c_bench->add_option("experiment", bench_name,
                      "chu-axioms|horn|vass-reduction|duality")
      ->required();
  c_bench->add_option("--seed", bench_seed);
  c_bench->add_option("--samples", bench_samples);
  c_bench->add_flag("--timings", bench_timings,
                    "append wall time (breaks byte-for-byte determinism)");
  c_bench->add_option("--out", bench_out);
  c_bench->callback([&] {
    ExperimentSpec spec;
    spec.name = bench_name;
    spec.seed = bench_seed;
    spec.samples = bench_samples;
    spec.timings = bench_timings;
    emit(bench_out, run_experiment(spec));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return st.exit_code;
}
