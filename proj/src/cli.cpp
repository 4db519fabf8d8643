#include "porder/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "porder/error.hpp"
#include "porder/io.hpp"

namespace porder::cli {
namespace {

using io::Json;

struct Options {
  std::string output = "pretty";
  std::string relation;
  std::string topology;
  std::string probe;
  std::size_t max_k = 4;
  std::size_t max_n = 8;
  double epsilon = 1.0;
  double pair_min = -3.0;
  double pair_max = 3.0;
  double pair_step = 0.05;
  std::size_t alpha_count = 601;
  std::string csv;
};

struct Inputs {
  io::LoadedRelation relation;
  FiniteTopology topology;
};

Inputs load_inputs(const Options& opt) {
  io::LoadedRelation rel = io::parse_relation(io::read_json_file(opt.relation));
  Json topo_doc = opt.topology.empty() ? Json() : io::read_json_file(opt.topology);
  FiniteTopology topo = io::parse_topology(topo_doc, rel.ground);
  return Inputs{std::move(rel), std::move(topo)};
}

// The partial order a relation file denotes: P itself for weak input,
// Q with the diagonal for strict input.
Relation partial_order_of(const io::LoadedRelation& rel) {
  if (rel.kind == io::RelationKind::Weak) return rel.weak;
  return rel.strict | Relation::identity(rel.ground);
}

struct Outcome {
  Json result;
  int code = kOk;
};

Outcome cmd_check(const Options& opt) {
  const Inputs in = load_inputs(opt);
  const auto& rel = in.relation;
  Json weak{{"pairs", io::pairs_to_json(rel.weak)},
            {"properties", io::to_json(properties(rel.weak))},
            {"topology", io::to_json(relation_topology_report(rel.weak, in.topology))}};
  Json strict{{"pairs", io::pairs_to_json(rel.strict)},
              {"properties", io::to_json(properties(rel.strict))},
              {"topology", io::to_json(relation_topology_report(rel.strict, in.topology))}};
  return {Json{{"kind", rel.kind == io::RelationKind::Weak ? "weak" : "strict"},
               {"weak", std::move(weak)},
               {"strict", std::move(strict)}}};
}

Outcome cmd_realize(const Options& opt) {
  const Inputs in = load_inputs(opt);
  const Relation p = partial_order_of(in.relation);
  const Realizer r = build_realizer(p);
  const bool ok = verify_realizer(p, r);
  Json out = io::orders_to_json(r.orders);
  out["verified"] = ok;
  return {std::move(out), ok ? kOk : kVerificationFailure};
}

Outcome cmd_dimension(const Options& opt) {
  const Inputs in = load_inputs(opt);
  const Relation p = partial_order_of(in.relation);
  const SearchBudget budget{opt.max_k, opt.max_n};
  const DimensionResult d = order_dimension(p, budget);
  const std::optional<DimensionResult> dt = open_order_dimension(p, in.topology, budget);
  Json out{{"dimension", d.dimension},
           {"witness", io::orders_to_json(d.witness)},
           {"open_dimension", dt ? Json(dt->dimension) : Json()},
           {"open_witness", dt ? io::orders_to_json(dt->witness) : Json()},
           {"topology_discrete", in.topology.is_discrete()},
           {"agree", dt && dt->dimension == d.dimension},
           {"budget", Json{{"max_k", budget.max_k}, {"max_n", budget.max_n}}}};
  return {std::move(out)};
}

Outcome cmd_embed(const Options& opt) {
  const Inputs in = load_inputs(opt);
  const MultiUtility v = build_multi_embedding(in.relation.weak, in.topology);
  const bool ok = verify_existential_embedding(in.relation.weak, v);
  return {Json{{"embedding", io::to_json(v)}, {"verified", ok}},
          ok ? kOk : kVerificationFailure};
}

Outcome cmd_pareto(const Options& opt) {
  if (!opt.probe.empty()) {
    const io::ProbeInput probe = io::parse_probe(io::read_json_file(opt.probe));
    const auto violation = continuous_pareto_probe(probe.family, probe.epsilon);
    return {Json{{"violation", violation ? io::to_json(*violation) : Json()}}};
  }
  if (opt.relation.empty()) {
    throw Error(ErrorKind::InvalidInput, "pareto needs --relation or --probe");
  }
  const Inputs in = load_inputs(opt);
  const Relation& q = in.relation.strict;
  const MultiUtility v = build_pareto_representation(q);
  const bool ok = verify_pareto_embedding(q, v);
  const Realizer r = build_realizer(q | Relation::identity(q.ground()));
  const DecompositionReport d = decomposition_check(q, r);
  return {Json{{"representation", io::to_json(v)},
               {"verified", ok},
               {"decomposition", io::to_json(d, *q.ground())}},
          ok && d.holds() ? kOk : kVerificationFailure};
}

Outcome cmd_hasse(const Options& opt) {
  const Inputs in = load_inputs(opt);
  const MultiUtility v = build_multi_embedding(in.relation.weak, in.topology);
  return {io::to_json(hasse_projection(v, in.relation.strict), *in.relation.ground)};
}

Outcome cmd_semiorder(const Options& opt) {
  if (!(opt.epsilon > 0.0)) throw Error(ErrorKind::NonpositiveEpsilon, "--epsilon must be positive");
  if (opt.alpha_count < 2) throw Error(ErrorKind::InvalidInput, "--alpha-count must be at least 2");
  const GridSpec pairs{opt.pair_min, opt.pair_max, opt.pair_step};
  const double eps = opt.epsilon;
  const double alpha_lo = opt.pair_min - eps;
  const double alpha_step =
      (opt.pair_max + eps - alpha_lo) / static_cast<double>(opt.alpha_count - 1);
  std::vector<double> alphas(opt.alpha_count);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    alphas[i] = alpha_lo + static_cast<double>(i) * alpha_step;
  }
  const SemiorderFamily family = SemiorderFamily::make(eps, alphas);

  std::ofstream csv;
  if (!opt.csv.empty()) {
    csv.open(opt.csv);
    if (!csv) throw Error(ErrorKind::InvalidInput, "cannot write '" + opt.csv + "'");
    csv << "x,y,in_P,witness_alpha,margin\n";
    csv.precision(17);
  }
  const FamilyReport report = verify_family_on_grid(family, pairs, [&](const PairRecord& r) {
    if (!csv.is_open()) return;
    csv << r.x << ',' << r.y << ',' << (r.in_p ? 1 : 0) << ',';
    if (r.witness) csv << *r.witness;
    csv << ',' << r.margin << '\n';
  });

  // Only alpha = x witnesses the boundary pair (x, x + eps).
  std::size_t boundary_checked = 0;
  std::size_t boundary_held = 0;
  for (double x : pairs.points()) {
    ++boundary_checked;
    const auto w = boundary_witnesses(x, eps, alphas);
    if (std::all_of(w.begin(), w.end(),
                    [&](double a) { return std::abs(a - x) <= alpha_step; })) {
      ++boundary_held;
    }
  }
  const BoundaryPair witness = countable_failure_witness(alphas, eps);
  const bool defeats = defeats_subfamily(witness, alphas, eps);

  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(Json{{"x", f.x}, {"y", f.y}, {"in_P", f.in_p}, {"margin", f.margin}});
  }
  const bool ok = report.ok() && boundary_held == boundary_checked && defeats;
  Json out{{"epsilon", eps},
           {"pair_grid", Json{{"min", pairs.min}, {"max", pairs.max}, {"step", pairs.step}}},
           {"alpha_grid", Json{{"count", alphas.size()}, {"min", alphas.front()},
                               {"max", alphas.back()}, {"step", alpha_step}}},
           {"tolerance", kSemiorderTolerance},
           {"pairs_checked", report.pairs_checked},
           {"in_P", report.in_p},
           {"not_in_P", report.not_in_p},
           {"passed", report.passed},
           {"failed", report.failed},
           {"min_witness_margin", report.min_witness_margin},
           {"min_exclusion_margin", report.min_exclusion_margin},
           {"failures", std::move(failures)},
           {"boundary_uniqueness", Json{{"checked", boundary_checked}, {"held", boundary_held}}},
           {"countable_failure",
            Json{{"x", witness.x}, {"y", witness.y}, {"defeats_alpha_grid", defeats}}},
           {"verified", ok}};
  return {std::move(out), ok ? kOk : kVerificationFailure};
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SearchBudgetExceeded:
      return kBudgetExceeded;
    case ErrorKind::VerificationFailure:
    case ErrorKind::ToleranceViolation:
    case ErrorKind::InternalContractViolation:
      return kVerificationFailure;
    default:
      return kValidationError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-utility representations of finite orders", "porder"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--output", opt.output, "JSON layout")
      ->check(CLI::IsMember({"pretty", "compact"}));

  auto add_relation = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--relation", opt.relation, "relation JSON file");
    if (required) o->required();
    sub->add_option("--topology", opt.topology, "topology JSON file (default: discrete)");
  };
  auto* check = app.add_subcommand("check", "relation properties and topology report");
  add_relation(check, true);
  auto* realize = app.add_subcommand("realize", "realizer with incomparability coverage");
  add_relation(realize, true);
  auto* dimension = app.add_subcommand("dimension", "order dimension and open-order dimension");
  add_relation(dimension, true);
  dimension->add_option("--max-k", opt.max_k, "largest realizer size searched");
  dimension->add_option("--max-n", opt.max_n, "largest ground set searched");
  auto* embed = app.add_subcommand("embed", "continuous existential multi-utility");
  add_relation(embed, true);
  auto* pareto = app.add_subcommand("pareto", "Pareto representation or continuous-family probe");
  add_relation(pareto, false);
  pareto->add_option("--probe", opt.probe, "probe JSON file");
  auto* semiorder = app.add_subcommand("semiorder", "verify the semiorder utility family");
  semiorder->add_option("--epsilon", opt.epsilon, "semiorder threshold")->capture_default_str();
  semiorder->add_option("--pair-min", opt.pair_min, "lower end of the pair grid")->capture_default_str();
  semiorder->add_option("--pair-max", opt.pair_max, "upper end of the pair grid")->capture_default_str();
  semiorder->add_option("--pair-step", opt.pair_step, "pair grid spacing")->capture_default_str();
  semiorder->add_option("--alpha-count", opt.alpha_count, "number of family members")->capture_default_str();
  semiorder->add_option("--csv", opt.csv, "write per-pair rows as CSV");
  auto* hasse = app.add_subcommand("hasse", "2D Hasse projection of the embedding");
  add_relation(hasse, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kValidationError;
  }

  Outcome outcome;
  try {
    if (check->parsed()) outcome = cmd_check(opt);
    else if (realize->parsed()) outcome = cmd_realize(opt);
    else if (dimension->parsed()) outcome = cmd_dimension(opt);
    else if (embed->parsed()) outcome = cmd_embed(opt);
    else if (pareto->parsed()) outcome = cmd_pareto(opt);
    else if (semiorder->parsed()) outcome = cmd_semiorder(opt);
    else if (hasse->parsed()) outcome = cmd_hasse(opt);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  out << outcome.result.dump(opt.output == "pretty" ? 2 : -1) << '\n';
  return outcome.code;
}

}  // namespace porder::cli
