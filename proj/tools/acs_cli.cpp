#include "acs/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace acs;

ManifoldDescriptor load_manifold(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return builtin(source.substr(8));
  std::ifstream in(source);
  if (!in) throw Error("cannot open '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure_file(buf.str());
}

std::string default_metric(int n) {
  std::string s = "diag:";
  for (int i = 0; i < n; ++i) s += i ? ",1" : "1";
  return s;
}

void emit(const Json& report, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << report.dump(2) << "\n";
}

struct Options {
  std::string manifold;
  std::string metric;
  std::string report;
  int p = 0, q = 1;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  bool serial = false;
  bool validate = false;
};

int run(const std::string& command, const Options& o) {
  const ManifoldDescriptor desc = load_manifold(o.manifold);
  if (command == "parse") {
    std::cout << render(desc);
    if (o.validate) {
      auto acs = build_structure(desc);
      acs->require_jacobi();
      std::cout << "# valid: d^2 = 0, " << (acs->is_integrable() ? "integrable" : "non-integrable") << "\n";
    }
    return 0;
  }
  std::ostream discard(nullptr);
  std::ostream& out = o.report == "-" ? discard : std::cout;
  auto acs = build_structure(desc);
  acs->require_jacobi();
  const int n = acs->n();
  Json report = report_header(command, desc, command == "classify-batch" ? std::optional(o.seed) : std::nullopt);

  if (command == "relations") {
    const RelationReport r = acs->check_relations();
    for (const auto& x : r.relations)
      out << (x.holds ? "pass  " : "FAIL  ") << x.identity << "\n";
    out << "integrable " << (acs->is_integrable() ? "yes" : "no") << "\n";
    report["result"] = to_json(r, *acs);
    emit(report, o.report);
    return r.all_hold() ? 0 : 4;
  }
  if (command == "obstruction") {
    const ObstructionCertificate c = almost_kahler_obstruction(*acs);
    out << "closed J-compatible real 2-forms: " << c.compatible_closed_forms.size() << "\n";
    if (c.found) {
      out << "certificate (" << c.stage << "): v =";
      for (const auto& x : c.vector) out << " " << x.get_str();
      out << "\nomega(v, Jv) = 0 for every such form, so no compatible almost-Kahler metric exists\n";
    } else {
      out << "no certificate found\n";
    }
    report["result"] = to_json(c);
    emit(report, o.report);
    return 0;
  }
  if (command == "classify-batch") {
    const auto metrics = sample_metrics(n, o.samples, o.seed);
    const auto reports =
        classify_batch(acs, desc.omega_scale, metrics, o.serial ? Execution::Serial : Execution::Parallel);
    const BatchSummary s = summarize(reports);
    Json j = to_json(s);
    out << j.dump(2) << "\n";
    report["result"] = j;
    emit(report, o.report);
    return 0;
  }

  const HermitianMetric metric = parse_metric(o.metric.empty() ? default_metric(n) : o.metric, n);
  const HermitianGeometry g(acs, metric, desc.omega_scale);
  if (command == "harmonic") {
    const HarmonicBasis h = g.harmonic_space(o.p, o.q);
    out << "harmonic (" << o.p << "," << o.q << ") dimension " << h.dimension() << " (invariant part)\n";
    for (const auto& f : h.basis) out << "  " << g.render(f) << "\n";
    report["result"] = to_json(g, h);
    emit(report, o.report);
    return 0;
  }
  const MetricReport r = classify(g);
  out << describe(g, r);
  report["result"] = to_json(g, r);
  emit(report, o.report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant forms on Lie algebras with almost complex structures"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub, bool metric) {
    sub->add_option("--manifold", o.manifold, "builtin:NAME or a .alg structure file")->required();
    if (metric) sub->add_option("--metric", o.metric, "diag:..., herm:... or cdiag:c*exp(a),...");
    sub->add_option("--report", o.report, "write a JSON report to this path (- for stdout)");
  };
  auto* check = app.add_subcommand("check", "classify one metric");
  add_common(check, true);
  auto* relations = app.add_subcommand("relations", "verify the bidegree identities of d^2 = 0");
  add_common(relations, false);
  auto* harmonic = app.add_subcommand("harmonic", "invariant delbar-harmonic (p,q)-forms");
  add_common(harmonic, true);
  harmonic->add_option("--p", o.p)->required();
  harmonic->add_option("--q", o.q)->required();
  auto* batch = app.add_subcommand("classify-batch", "classify seeded random constant metrics");
  add_common(batch, false);
  batch->add_option("--samples", o.samples)->required();
  batch->add_option("--seed", o.seed)->required();
  batch->add_flag("--serial", o.serial, "use the serial reference path");
  auto* obstruction = app.add_subcommand("obstruction", "search an almost-Kahler nonexistence certificate");
  add_common(obstruction, false);
  auto* parse = app.add_subcommand("parse", "parse and render a structure file");
  parse->add_option("--manifold,file", o.manifold, "builtin:NAME or a .alg structure file")->required();
  parse->add_flag("--validate", o.validate, "also build the structure and check d^2 = 0");

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const JacobiViolation& e) {
    std::cerr << "invalid structure: " << e.what() << "\n";
    return 2;
  } catch (const InvalidMetric& e) {
    std::cerr << "invalid metric: " << e.what() << "\n";
    return 3;
  } catch (const NotPositiveDefinite& e) {
    std::cerr << "invalid metric: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
