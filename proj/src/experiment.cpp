#include "prooflab/experiment.hpp"

#include <chrono>
#include <sstream>

#include "prooflab/chu.hpp"
#include "prooflab/horn.hpp"
#include "prooflab/vass.hpp"

namespace prooflab {

namespace {

using Clock = std::chrono::steady_clock;

struct Csv {
  std::ostringstream out;
  bool timings;
  Clock::time_point t0;

  explicit Csv(bool tm) : timings(tm) {}

  void header(const std::string& cols) {
    out << cols;
    if (timings) out << ",wall_ms";
    out << "\n";
  }
  void begin_row() { t0 = Clock::now(); }
  void end_row(const std::string& cols) {
    out << cols;
    if (timings) {
      auto ms = std::chrono::duration_cast<std::chrono::microseconds>(
                    Clock::now() - t0)
                    .count();
      out << "," << (ms / 1000.0);
    }
    out << "\n";
  }
};

std::vector<std::pair<FregeAxiom, FregeSystem>> axiom_cases() {
  std::vector<std::pair<FregeAxiom, FregeSystem>> cases;
  for (FregeAxiom ax : system_axioms(FregeSystem::CFLe_F))
    cases.emplace_back(ax, FregeSystem::CFLe_F);
  cases.emplace_back(FregeAxiom::Top, FregeSystem::MALL_F);
  cases.emplace_back(FregeAxiom::Bot, FregeSystem::MALL_F);
  cases.emplace_back(FregeAxiom::W, FregeSystem::CFLew_F);
  for (FregeAxiom ax : {FregeAxiom::BangW, FregeAxiom::BangC, FregeAxiom::BangK,
                        FregeAxiom::BangT, FregeAxiom::Bang4})
    cases.emplace_back(ax, FregeSystem::CLL_F);
  return cases;
}

int count_metavars(FregeAxiom ax) {
  auto ids = var_ids(axiom_schema(ax));
  return static_cast<int>(ids.size());
}

std::string chu_axioms_experiment(const ExperimentSpec& spec) {
  Csv csv(spec.timings);
  csv.header("case,system,instance_size,proof_lines,proof_size,lines_per_size,check");
  uint32_t per_size = spec.samples ? spec.samples : 10;
  Rng rng(spec.seed);
  for (auto [ax, sys] : axiom_cases()) {
    Lang lang = system_lang(sys);
    ChuParams prm{sys == FregeSystem::CFLe_F ? Formula::zero() : Formula::bot(),
                  sys == FregeSystem::CFLe_F ? Formula::zero() : Formula::bot()};
    for (uint32_t size : {5u, 10u, 20u, 50u, 100u}) {
      for (uint32_t s = 0; s < per_size; ++s) {
        csv.begin_row();
        FregeSubst subst;
        Formula metas[3] = {meta_A(), meta_B(), meta_C()};
        int mv = count_metavars(ax);
        for (int m = 0; m < mv; ++m)
          subst.bind(metas[m], random_formula(lang, 1 + rng() % size, rng, 4));
        Formula inst = apply_subst(axiom_schema(ax), subst);
        Proof pr = translate_axiom(ax, subst, prm, sys);
        auto r = check_proof(pr);
        std::ostringstream row;
        uint64_t lines = check_ok(r) ? check_metrics(r).lines : 0;
        uint64_t psize = check_ok(r) ? check_metrics(r).size : 0;
        row << axiom_name(ax) << "," << system_name(sys) << "," << inst.size()
            << "," << lines << "," << psize << ","
            << static_cast<double>(lines) / static_cast<double>(inst.size())
            << "," << (check_ok(r) ? "ok" : "violation");
        csv.end_row(row.str());
      }
    }
  }
  return csv.out.str();
}

std::string horn_experiment(const ExperimentSpec& spec) {
  Csv csv(spec.timings);
  csv.header("target_size,sequent_size,valid,proof_size,proof_lines,size_ratio_quadratic,check");
  uint32_t samples = spec.samples ? spec.samples : 120;
  Rng rng(spec.seed);
  for (uint32_t i = 0; i < samples; ++i) {
    csv.begin_row();
    uint32_t target = 10 + (i * 1997) % 1990;
    Sequent s = random_horn_sequent(target, 12, rng, true);
    bool valid = horn_valid(s);
    std::ostringstream row;
    if (!valid) {
      row << target << "," << s.symbol_size() << ",0,0,0,0,skipped";
    } else {
      Proof p = unit_prop_prove(s);
      auto r = check_proof(p);
      double input = static_cast<double>(s.symbol_size());
      double ratio =
          check_ok(r) ? static_cast<double>(check_metrics(r).size) / (input * input)
                      : 0.0;
      row << target << "," << s.symbol_size() << ",1,"
          << (check_ok(r) ? check_metrics(r).size : 0) << ","
          << (check_ok(r) ? check_metrics(r).lines : 0) << "," << ratio << ","
          << (check_ok(r) ? "ok" : "violation");
    }
    csv.end_row(row.str());
  }
  return csv.out.str();
}

std::string vass_reduction_experiment(const ExperimentSpec& spec) {
  Csv csv(spec.timings);
  csv.header("machine,dim,states,rules,coverable,contractive_reachable,agree");
  uint32_t samples = spec.samples ? spec.samples : 200;
  Rng rng(spec.seed);
  ReachBounds bounds;
  for (uint32_t i = 0; i < samples; ++i) {
    csv.begin_row();
    Vass v;
    v.dim = 1 + rng() % 3;
    uint32_t ns = 2 + rng() % 3;
    for (uint32_t k = 0; k < ns; ++k)
      v.add_state(std::string(1, static_cast<char>('a' + k)));
    uint32_t nr = 1 + rng() % 6;
    for (uint32_t k = 0; k < nr; ++k) {
      std::vector<int64_t> delta(v.dim, 0);
      delta[rng() % v.dim] = rng() % 2 ? 1 : -1;
      v.add_rule(rng() % ns, std::move(delta), rng() % ns);
    }
    uint32_t q = rng() % ns, r = rng() % ns;
    Config from;
    from.state = q;
    from.vec.assign(v.dim, 0);
    auto cov = cover_bfs(v, from, r, {}, bounds);
    Vass red = cover_reduce(v, r);
    Config target;
    target.state = static_cast<uint32_t>(red.states.size() - 1);
    target.vec.assign(red.dim, 0);
    auto cre = reach_bfs(red, from, target, StepMode::Contractive, bounds);
    std::ostringstream row;
    row << i << "," << v.dim << "," << ns << "," << nr << "," << cov.found
        << "," << cre.found << "," << (cov.found == cre.found ? 1 : 0);
    csv.end_row(row.str());
  }
  return csv.out.str();
}

std::string duality_experiment(const ExperimentSpec& spec) {
  Csv csv(spec.timings);
  csv.header("language,formula_size,proof,lines,lines_per_size,check");
  uint32_t samples = spec.samples ? spec.samples : 200;
  Rng rng(spec.seed);
  struct Cfg {
    Lang lang;
    CalcName base;
    const char* name;
  };
  Cfg cfgs[3] = {{Lang::Lu, CalcName::FL_e, "unbounded"},
                 {Lang::Lb, CalcName::IMALL, "bounded"},
                 {Lang::Lbang, CalcName::ILL, "exponential"}};
  for (const Cfg& cfg : cfgs) {
    ChuParams prm{Formula::atom("d"), Formula::atom("n")};
    if (cfg.lang != Lang::Lu) prm = {Formula::bot(), Formula::bot()};
    Calculus tgt = Calculus::igd(cfg.base, prm.D, prm.N);
    for (uint32_t i = 0; i < samples / 3; ++i) {
      csv.begin_row();
      Formula a = random_formula(cfg.lang, 1 + rng() % 20, rng, 4);
      DualityProofs dp = prove_duality(a, prm, tgt);
      auto r = check_proof(dp.absorb);
      std::ostringstream row;
      uint64_t lines = check_ok(r) ? check_metrics(r).lines : 0;
      row << cfg.name << "," << a.size() << ",absorb," << lines << ","
          << static_cast<double>(lines) / static_cast<double>(a.size()) << ","
          << (check_ok(r) ? "ok" : "violation");
      csv.end_row(row.str());
    }
  }
  return csv.out.str();
}

} // namespace

std::vector<std::string> experiment_names() {
  return {"chu-axioms", "horn", "vass-reduction", "duality"};
}

std::string run_experiment(const ExperimentSpec& spec) {
  if (spec.name == "chu-axioms") return chu_axioms_experiment(spec);
  if (spec.name == "horn") return horn_experiment(spec);
  if (spec.name == "vass-reduction") return vass_reduction_experiment(spec);
  if (spec.name == "duality") return duality_experiment(spec);
  throw std::invalid_argument("unknown experiment '" + spec.name + "'");
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

} // namespace prooflab
