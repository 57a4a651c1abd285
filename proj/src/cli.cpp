#include "sfh/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "sfh/builders.hpp"
#include "sfh/domains.hpp"
#include "sfh/homology.hpp"
#include "sfh/shd.hpp"

namespace sfh {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return out.str();
}

namespace {

// Reads and parses; on failure fills the report and returns nullopt.
std::optional<Diagram> load(const std::string& path, RunReport& report) {
  std::string text;
  try {
    text = read_text(path);
  } catch (const IoError& e) {
    report.err += "error: " + std::string(e.what()) + "\n";
    report.exit_status = exit_io;
    return std::nullopt;
  }
  try {
    return parse(text);
  } catch (const ParseError& e) {
    report.err += path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                  "parse error: " + e.what() + "\n";
  } catch (const DiagramError& e) {
    for (const Diagnostic& d : e.diagnostics()) {
      report.err += path + ": invalid [" + d.code + "] " + d.message;
      if (!d.ids.empty()) {
        report.err += " (ids";
        for (int id : d.ids) report.err += " " + std::to_string(id);
        report.err += ")";
      }
      report.err += "\n";
    }
  }
  report.exit_status = exit_invalid;
  return std::nullopt;
}

std::string format_ranks(const std::map<Integer, long>& ranks) {
  if (ranks.empty()) return "-";
  std::string out;
  for (const auto& [g, r] : ranks) {
    if (!out.empty()) out += ',';
    out += g.get_str() + ":" + std::to_string(r);
  }
  return out;
}

void write_result(const Diagram& diagram, const SfhResult& result, const ComputeOptions& options,
                  const std::string& digest, std::ostringstream& out) {
  const auto expected = diagram.metadata().expectations.find("total");
  const bool has_expectation = expected != diagram.metadata().expectations.end();
  if (options.format == OutputFormat::tsv) {
    out << "record\tclass\td\tgrading\tvalue\n";
    if (!diagram.metadata().name.empty()) out << "name\t\t\t\t" << diagram.metadata().name << '\n';
    out << "digest\t\t\t\t" << digest << '\n';
    out << "generators\t\t\t\t" << result.generator_count << '\n';
    out << "periodic_rank\t\t\t\t" << result.periodic_rank << '\n';
    if (result.handles_removed > 0) out << "handles_removed\t\t\t\t" << result.handles_removed << '\n';
    for (const ClassResult& c : result.classes) {
      for (const auto& [g, r] : c.ranks) out << "rank\t" << c.id << '\t' << c.modulus << '\t' << g << '\t' << r << '\n';
      if (options.spinc) {
        for (const Generator& g : c.generators) out << "member\t" << c.id << '\t' << c.modulus << "\t\t" << to_string(g) << '\n';
      }
      if (options.gradings) {
        for (std::size_t i = 0; i < c.generators.size(); ++i)
          out << "grading\t" << c.id << '\t' << c.modulus << '\t' << c.gradings[i] << '\t' << to_string(c.generators[i])
              << '\n';
      }
    }
    out << "total\t\t\t\t" << result.total << '\n';
    if (has_expectation) out << "expected\t\t\t\t" << expected->second << '\n';
    return;
  }
  if (!diagram.metadata().name.empty()) out << "name " << diagram.metadata().name << '\n';
  out << "digest " << digest << '\n';
  out << "generators " << result.generator_count << '\n';
  out << "periodic_rank " << result.periodic_rank << '\n';
  if (result.handles_removed > 0) out << "handles_removed " << result.handles_removed << '\n';
  for (const ClassResult& c : result.classes) {
    out << "class " << c.id << " d " << c.modulus << " ranks " << format_ranks(c.ranks) << '\n';
    if (options.spinc) {
      out << "  members";
      for (const Generator& g : c.generators) out << ' ' << to_string(g);
      out << '\n';
    }
    if (options.gradings) {
      for (std::size_t i = 0; i < c.generators.size(); ++i)
        out << "  grading " << to_string(c.generators[i]) << ' ' << c.gradings[i] << '\n';
    }
  }
  out << "total " << result.total << '\n';
  if (has_expectation)
    out << "expected " << expected->second << (expected->second == std::to_string(result.total) ? " ok" : " MISMATCH")
        << '\n';
}

}  // namespace

RunReport cmd_validate(const std::string& path) {
  RunReport report;
  report.command = "validate";
  const auto diagram = load(path, report);
  if (!diagram) return report;
  report.digest = sha256_hex(serialize(*diagram));
  std::ostringstream out;
  out << "valid\n";
  out << "digest " << report.digest << '\n';
  out << "vertices " << diagram->vertices().size() << '\n';
  out << "crossings " << diagram->crossings().size() << '\n';
  out << "edges " << diagram->edges().size() << '\n';
  out << "regions " << diagram->regions().size() << '\n';
  out << "interior_regions " << diagram->interior_regions().size() << '\n';
  out << "alpha " << diagram->d_alpha() << '\n';
  out << "beta " << diagram->d_beta() << '\n';
  out << "boundary " << diagram->boundary_count() << '\n';
  out << "euler " << euler_characteristic(*diagram) << '\n';
  const BalanceReport balance = is_balanced(*diagram);
  out << "balanced " << (balance.balanced ? "yes" : "no") << '\n';
  for (const auto& d : balance.diagnostics) out << "  " << d << '\n';
  report.out = out.str();
  return report;
}

RunReport compute_report(const Diagram& diagram, const ComputeOptions& options) {
  RunReport report;
  report.command = "compute";
  report.digest = sha256_hex(serialize(diagram));
  std::ostringstream out;
  try {
    const SfhResult result = sfh(diagram);
    write_result(diagram, result, options, report.digest, out);
  } catch (const NotBalanced& e) {
    report.err += "error: diagram is not balanced\n";
    for (const auto& d : e.diagnostics()) report.err += "  " + d + "\n";
    report.exit_status = exit_invalid;
  } catch (const NotAdmissible& e) {
    out << "not admissible\n";
    out << "witness " << format_domain(diagram, e.witness()) << '\n';
    report.err += "error: " + std::string(e.what()) + "\n";
    report.exit_status = exit_inadmissible;
  } catch (const NotNice& e) {
    out << "not nice\n";
    out << "regions";
    for (int id : e.regions()) out << ' ' << id;
    out << '\n';
    report.err += "error: " + std::string(e.what()) + "\n";
    report.exit_status = exit_not_nice;
  }
  report.out = out.str();
  return report;
}

RunReport cmd_compute(const std::string& path, const ComputeOptions& options) {
  RunReport report;
  report.command = "compute";
  const auto diagram = load(path, report);
  if (!diagram) return report;
  return compute_report(*diagram, options);
}

RunReport cmd_example(const ExampleRequest& request) {
  RunReport report;
  report.command = "example";
  if (request.list) {
    std::ostringstream out;
    for (const ExampleInfo& info : example_catalog()) {
      out << info.name;
      if (!info.usage.empty()) out << ' ' << info.usage;
      out << "\n  " << info.summary << '\n';
      if (info.arity > 0) {
        out << "  range";
        for (std::size_t i = 0; i < info.arity; ++i) out << ' ' << info.minimum[i] << ".." << info.maximum[i];
        out << '\n';
      }
      const auto total = info.expected_total(info.sample);
      out << "  expected total";
      if (info.arity > 0) {
        out << " at";
        for (int p : info.sample) out << ' ' << p;
      }
      out << ": " << (total ? std::to_string(*total) : std::string("none (rejected)")) << '\n';
    }
    report.out = out.str();
    return report;
  }
  Diagram diagram = [&] {
    try {
      return build_example(request.name, request.params);
    } catch (const BuildError& e) {
      report.err += "error: " + std::string(e.what()) + "\n";
      report.exit_status = exit_usage;
      return product_diagram(0, 1);
    }
  }();
  if (report.exit_status != exit_ok) return report;
  if (request.compute) {
    RunReport computed = compute_report(diagram, request.options);
    computed.command = "example";
    return computed;
  }
  const std::string text = serialize(diagram);
  report.digest = sha256_hex(text);
  if (request.output == "-") {
    report.out = text;
  } else {
    std::ofstream file(request.output, std::ios::binary);
    file << text;
    file.close();
    if (!file) {
      report.err += "error: cannot write " + request.output + "\n";
      report.exit_status = exit_io;
    }
  }
  return report;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Sutured Floer homology of balanced sutured Heegaard diagrams (two-element field coefficients)", "sfh"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a .shd diagram's invariants");
  validate->add_option("path", validate_path, "diagram file, or - for standard input")->required();

  std::string compute_path;
  ComputeOptions compute_options;
  std::string compute_format = "table";
  auto* compute = app.add_subcommand("compute", "Compute graded ranks per Spin^c class");
  compute->add_option("path", compute_path, "diagram file, or - for standard input")->required();
  compute->add_flag("--spinc", compute_options.spinc, "list the generators of each class");
  compute->add_flag("--gradings", compute_options.gradings, "list the relative grading of each generator");
  compute->add_option("--format", compute_format, "table or tsv")->check(CLI::IsMember({"table", "tsv"}));

  ExampleRequest example_request;
  std::vector<std::string> example_words;
  std::string example_format = "table";
  bool emit = false;
  auto* example = app.add_subcommand("example", "Emit or compute a built-in example diagram");
  example->add_option("words", example_words, "builder name followed by integer parameters");
  example->add_flag("--list", example_request.list, "list the builders");
  auto* emit_flag = example->add_flag("--emit", emit, "write the canonical .shd text (default)");
  auto* compute_flag = example->add_flag("--compute", example_request.compute, "compute instead of emitting");
  emit_flag->excludes(compute_flag);
  example->add_option("-o,--output", example_request.output, "output path for --emit (- for standard output)");
  example->add_flag("--spinc", example_request.options.spinc, "with --compute: list class members");
  example->add_flag("--gradings", example_request.options.gradings, "with --compute: list gradings");
  example->add_option("--format", example_format, "with --compute: table or tsv")
      ->check(CLI::IsMember({"table", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  RunReport report;
  if (*validate) {
    report = cmd_validate(validate_path);
  } else if (*compute) {
    compute_options.format = compute_format == "tsv" ? OutputFormat::tsv : OutputFormat::table;
    report = cmd_compute(compute_path, compute_options);
  } else {
    example_request.options.format = example_format == "tsv" ? OutputFormat::tsv : OutputFormat::table;
    if (!example_request.list) {
      if (example_words.empty()) {
        std::cerr << "error: example needs a builder name or --list\n";
        return exit_usage;
      }
      example_request.name = example_words.front();
      for (std::size_t i = 1; i < example_words.size(); ++i) {
        const std::string& w = example_words[i];
        int value = 0;
        const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
        if (ec != std::errc() || ptr != w.data() + w.size()) {
          std::cerr << "error: parameter '" << w << "' is not an integer\n";
          return exit_usage;
        }
        example_request.params.push_back(value);
      }
    }
    report = cmd_example(example_request);
  }
  std::cout << report.out;
  std::cerr << report.err;
  return report.exit_status;
}

}  // namespace sfh
