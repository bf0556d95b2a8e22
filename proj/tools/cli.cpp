#include "cli.hpp"

#include "dgq/dgq.hpp"

#include <CLI11.hpp>

#include <climits>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace dgq::cli {

namespace {

using io::Json;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InvalidInput("expected a comma-separated list of integers, got '" + s + "'");
    }
  }
  return out;
}

std::string element_text(const Element& u, const GradedQuiver& q) {
  if (u.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : u) {
    Rational a = c;
    if (first) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    first = false;
    a = abs(a);
    if (a != 1 || p.is_idempotent()) s += to_string(a) + (p.is_idempotent() ? "" : " ");
    if (p.is_idempotent()) {
      s += "e" + std::to_string(p.source());
      continue;
    }
    for (std::size_t i = 0; i < p.arrows().size(); ++i) s += (i ? "*" : "") + q.arrow(p.arrows()[i]).label;
  }
  return s;
}

std::string report_table(const CheckReport& r, int indent = 0) {
  std::ostringstream os;
  os << std::string(indent, ' ') << std::left << std::setw(32 - indent) << r.check << " " << r.status();
  if (!r.witness.empty()) os << "  " << r.witness;
  os << "\n";
  for (const auto& p : r.parts) os << report_table(p, indent + 2);
  return os.str();
}

std::string model_table(const DgModel& m) {
  const GradedQuiver& q = m.quiver();
  std::ostringstream os;
  os << "vertices:";
  for (VertexId v : q.vertices()) os << " " << v;
  os << "\nprovenance: " << to_string(m.provenance);
  if (m.truncated_at) os << " (truncated at Adams degree " << *m.truncated_at << ")";
  os << "\n";
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Arrow& x = q.arrow(a);
    os << x.id << " : " << x.source << " -> " << x.target << "  (" << x.hdeg << ", " << x.adeg << ")  d = "
       << element_text(m.differential.on_arrow(a), q) << "\n";
  }
  return os.str();
}

std::string presentation_table(const PresentedAlgebra& p) {
  std::ostringstream os;
  os << "vertices:";
  for (VertexId v : p.quiver.vertices()) os << " " << v;
  os << "\narrows:";
  for (const Arrow& a : p.quiver.arrows()) os << " " << a.id << "(" << a.source << "->" << a.target << ")";
  os << "\nrelators:\n";
  for (const Element& r : p.relators) os << "  " << element_text(r, p.quiver) << "\n";
  return os.str();
}

std::string cohomology_table(const CohomologyTable& t) {
  std::ostringstream os;
  os << std::setw(6) << "h\\a";
  for (int a = 0; a <= t.nadams; ++a) os << std::setw(8) << a;
  os << std::setw(10) << "total" << "\n";
  for (int h = 0; h >= t.hmin; --h) {
    os << std::setw(6) << h;
    for (int a = 0; a <= t.nadams; ++a) os << std::setw(8) << t.dim(h, a);
    os << std::setw(10) << t.total(h) << "\n";
  }
  return os.str();
}

class Output {
 public:
  Output(const JobSpec& job, std::ostream& out) : job_(job), out_(out) {}

  void emit(const Json& json, const std::string& table) {
    const std::string text = job_.format == "table" ? table : io::dump(json);
    if (job_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(job_.out);
    if (!f) throw InvalidInput("cannot write '" + job_.out + "'");
    f << text;
  }

 private:
  const JobSpec& job_;
  std::ostream& out_;
};

/// Runs the requested --verify checks on a model; writes the reports and
/// returns whether all passed.
bool verify_model(const DgModel& m, const JobSpec& job, std::ostream& err) {
  if (job.verify.empty()) return true;
  std::vector<CheckReport> reports;
  const int bound = job.adams_max.value_or(INT_MAX);
  for (const auto& v : job.verify) {
    if (v == "dsq") {
      reports.push_back(check_d_squared(m.differential, bound));
    } else if (v == "grading") {
      reports.push_back(check_grading(m.differential, m.adams_graded));
    } else {
      throw InvalidInput("unknown check '" + v + "' (expected dsq or grading)");
    }
  }
  bool ok = true;
  Json all = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed;
    all.push_back(io::to_json(r));
    err << r.check << ": " << r.status() << (r.witness.empty() ? "" : " (" + r.witness + ")") << "\n";
  }
  if (!job.report.empty()) io::write_file(job.report, all);
  return ok;
}

void warn(const std::vector<std::string>& warnings, const JobSpec& job, std::ostream& err) {
  for (const auto& w : warnings) {
    if (job.strict) throw InvalidInput(w);
    err << "warning: " << w << "\n";
  }
}

HomologyOptions homology_options(const JobSpec& job) {
  HomologyOptions o;
  o.threads = job.threads;
  return o;
}

int run_model_poly(const JobSpec& job, Output& out, std::ostream& err) {
  if (job.n < 1) throw InvalidInput("--n must be at least 1");
  const DgModel m = polynomial_model(job.n);
  out.emit(io::to_json(m), model_table(m));
  return verify_model(m, job, err) ? 0 : 1;
}

int run_model_mckay(const JobSpec& job, Output& out, std::ostream& err) {
  const McKayData data = McKayData::make(job.m, job.weights);
  warn(data.warnings(), job, err);
  if (job.presentation) {
    const QuadraticPresentation qp = mckay_presentation(data);
    PresentedAlgebra p{qp.quiver, qp.relators};
    if (job.delete_zero) p.relators.push_back(Element::idempotent(0));
    out.emit(io::to_json(p), presentation_table(p));
    return 0;
  }
  DgModel m = mckay_model(data);
  if (job.delete_zero) m = delete_vertex(m, 0);
  out.emit(io::to_json(m), model_table(m));
  return verify_model(m, job, err) ? 0 : 1;
}

int run_ginzburg(const JobSpec& job, Output& out, std::ostream& err) {
  if (job.quiver.empty()) throw InvalidInput("ginzburg needs --quiver");
  const GradedQuiver q = io::quiver_from_json(io::read_file(job.quiver));
  Superpotential w = job.potential.empty() ? Superpotential::make(q, Element{}, job.weight)
                                           : io::potential_from_json(io::read_file(job.potential), q, job.weight);
  if (job.delete_vertex) w = restrict_potential(w, *job.delete_vertex);
  if (job.jacobian) {
    const PresentedAlgebra p = jacobian_presentation(w);
    out.emit(io::to_json(p), presentation_table(p));
    return 0;
  }
  const GinzburgModel g = ginzburg_model(w);
  if (!g.model.adams_graded) {
    warn({"the potential is not homogeneous of weight above every arrow; the model is graded by path length only"}, job, err);
  }
  out.emit(io::to_json(g.model), model_table(g.model));
  return verify_model(g.model, job, err) ? 0 : 1;
}

int run_cohomology(const JobSpec& job, Output& out) {
  if (job.model.empty()) throw InvalidInput("cohomology needs --model");
  const DgModel m = io::model_from_json(io::read_file(job.model));
  const CohomologyTable t = cohomology_dims(m, job.hmin, job.adams_max.value_or(8), homology_options(job));
  out.emit(io::to_json(t), cohomology_table(t));
  return 0;
}

int run_compare_h0(const JobSpec& job, Output& out) {
  if (job.model.empty() || job.target.empty()) throw InvalidInput("compare-h0 needs --model and --presentation");
  const DgModel m = io::model_from_json(io::read_file(job.model));
  const PresentedAlgebra p = io::presentation_from_json(io::read_file(job.target));
  const GeneratorMap map = job.map.empty() ? GeneratorMap::identity(h0_presentation(m).quiver) : io::map_from_json(io::read_file(job.map));
  const CheckReport r = compare_h0(m, p, map, job.adams_max.value_or(6), homology_options(job));
  out.emit(io::to_json(r), report_table(r));
  return r.passed ? 0 : 1;
}

int run_cy_check(const JobSpec& job, Output& out, std::ostream& err) {
  const McKayData data = McKayData::make(job.m, job.weights);
  warn(data.warnings(), job, err);
  const int nadams = job.adams_max.value_or(5);
  const SplitModel s = split(delete_vertex(mckay_model(data), 0), data);

  Json report{{"closure", io::to_json(s.closure)}};
  std::string table = report_table(s.closure);
  bool ok = s.closure.passed;
  if (s.closure.passed) {
    const CheckReport k = check_c_koszul_and_model(s, nadams, homology_options(job));
    report["koszul_truncated"] = io::to_json(k);
    table += report_table(k);
    ok = ok && k.passed;
  } else {
    report["koszul_truncated"] = io::to_json(CheckReport::fail("koszul_truncated", "not attempted: closure fails"));
  }
  const bool sum_ok = data.weight(full_subset(data.n())) == data.m;
  if (!s.closure.passed || !sum_ok || !data.satisfies_hypotheses()) {
    const std::string why = !s.closure.passed ? "not attempted: closure fails"
                            : !sum_ok         ? "weight condition sum(a_i) = m fails"
                                              : kHypothesisWarning;
    report["omega"] = {{"degree", io::to_json(CheckReport::fail("degree", why))},
                       {"closed", io::to_json(CheckReport::fail("closed", why))},
                       {"nondegenerate", io::to_json(CheckReport::fail("nondegenerate", why))}};
    table += "omega                       refused  " + why + "\n";
    ok = false;
  } else {
    const OmegaReport o = build_and_check_omega(s);
    report["omega"] = io::to_json(o);
    table += report_table(o.degree_check) + report_table(o.closed) + report_table(o.nondegenerate);
    ok = ok && o.passed();
  }
  report["scope"] = kCyScopeNote;
  out.emit(report, table);
  return ok ? 0 : 1;
}

int run_verify(const JobSpec& job, Output& out) {
  if (job.model.empty()) throw InvalidInput("verify needs --model");
  const DgModel m = io::model_from_json(io::read_file(job.model));
  JobSpec j = job;
  if (j.verify.empty()) j.verify = {"dsq", "grading"};
  std::vector<CheckReport> reports;
  for (const auto& v : j.verify) {
    if (v == "dsq") {
      reports.push_back(check_d_squared(m.differential, j.adams_max.value_or(INT_MAX)));
    } else if (v == "grading") {
      reports.push_back(check_grading(m.differential, m.adams_graded));
    } else {
      throw InvalidInput("unknown check '" + v + "' (expected dsq or grading)");
    }
  }
  Json all = Json::array();
  std::string table;
  bool ok = true;
  for (const auto& r : reports) {
    all.push_back(io::to_json(r));
    table += report_table(r);
    ok = ok && r.passed;
  }
  out.emit(all, table);
  return ok ? 0 : 1;
}

}  // namespace

std::optional<JobSpec> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  JobSpec job;
  CLI::App app("Exact DG path algebras: models, cohomology and verification", "dgq");
  app.require_subcommand(1);
  app.add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("-o,--out", job.out, "Write the result here instead of stdout");
  app.add_option("--threads", job.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--strict", job.strict, "Treat hypothesis warnings as errors");

  std::string weights, verify;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("-o,--out", job.out, "Write the result here instead of stdout");
    sub->add_option("--threads", job.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--strict", job.strict, "Treat hypothesis warnings as errors");
  };
  auto add_verify = [&](CLI::App* sub) {
    sub->add_option("--verify", verify, "Comma-separated checks: dsq, grading");
    sub->add_option("--report", job.report, "Write verification reports (JSON) here");
  };

  auto* poly = app.add_subcommand("model-poly", "Koszul model of k[x1..xn]");
  poly->add_option("--n", job.n, "Number of variables")->required();
  add_common(poly);
  add_verify(poly);

  auto* mckay = app.add_subcommand("model-mckay", "Model of the skew group algebra for Z/m with weights");
  mckay->add_option("--m", job.m, "Group order")->required();
  mckay->add_option("--weights", weights, "a1,...,an")->required();
  mckay->add_flag("--delete-zero", job.delete_zero, "Delete vertex 0");
  mckay->add_flag("--presentation", job.presentation, "Emit the commutation presentation instead of the model");
  add_common(mckay);
  add_verify(mckay);

  auto* ginz = app.add_subcommand("ginzburg", "Ginzburg model of a quiver with potential");
  ginz->add_option("--quiver", job.quiver, "Quiver JSON")->required();
  ginz->add_option("--potential", job.potential, "Potential JSON (default: zero)");
  ginz->add_option("--delete-vertex", job.delete_vertex, "Restrict the potential away from this vertex first");
  ginz->add_option("--weight", job.weight, "Adams weight of the potential");
  ginz->add_flag("--jacobian", job.jacobian, "Emit the Jacobian presentation instead of the model");
  add_common(ginz);
  add_verify(ginz);

  auto* coh = app.add_subcommand("cohomology", "Bigraded cohomology dimensions");
  coh->add_option("--model", job.model, "Model JSON")->required();
  coh->add_option("--hmin", job.hmin, "Lowest homological degree")->check(CLI::Range(INT_MIN / 4, 0));
  coh->add_option("--adams-max", job.adams_max, "Highest Adams degree (default 8)");
  add_common(coh);

  auto* cmp = app.add_subcommand("compare-h0", "Compare H0 of a model with a presented algebra");
  cmp->add_option("--model", job.model, "Model JSON")->required();
  cmp->add_option("--presentation", job.target, "Presentation JSON")->required();
  cmp->add_option("--map", job.map, "Generator map JSON (default: identity)");
  cmp->add_option("--adams-max", job.adams_max, "Highest Adams degree (default 6)");
  add_common(cmp);

  auto* cy = app.add_subcommand("cy-check", "Finite checks of the Calabi-Yau structure on a deleted McKay model");
  cy->add_option("--m", job.m, "Group order")->required();
  cy->add_option("--weights", weights, "a1,...,an")->required();
  cy->add_option("--adams-max", job.adams_max, "Truncation for the Koszul check (default 5)");
  add_common(cy);

  auto* ver = app.add_subcommand("verify", "Run checks on a model file");
  ver->add_option("--model", job.model, "Model JSON")->required();
  ver->add_option("--check", verify, "Comma-separated checks: dsq, grading (default both)");
  ver->add_option("--adams-max", job.adams_max, "Truncate d^2 above this Adams degree");
  add_common(ver);

  std::vector<const char*> argv{"dgq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw InvalidInput(e.what());
  }
  job.command = app.get_subcommands().front()->get_name();
  if (!weights.empty()) job.weights = parse_int_list(weights);
  std::stringstream ss(verify);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) job.verify.push_back(item);
  }
  return job;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.threads == 0) throw InvalidInput("--threads must be positive");
  if (job.format != "json" && job.format != "table") throw InvalidInput("--format must be json or table");
  Output o(job, out);
  if (job.command == "model-poly") return run_model_poly(job, o, err);
  if (job.command == "model-mckay") return run_model_mckay(job, o, err);
  if (job.command == "ginzburg") return run_ginzburg(job, o, err);
  if (job.command == "cohomology") return run_cohomology(job, o);
  if (job.command == "compare-h0") return run_compare_h0(job, o);
  if (job.command == "cy-check") return run_cy_check(job, o, err);
  if (job.command == "verify") return run_verify(job, o);
  throw InvalidInput("unknown command '" + job.command + "'");
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto job = parse_args(args, out);
    if (!job) return 0;
    return run(*job, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(Exit::invalid_input);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return static_cast<int>(Exit::resource_limit);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(Exit::check_failed);
  }
}

}  // namespace dgq::cli
