#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "admintm/engine.hpp"
#include "admintm/error.hpp"
#include "admintm/io_schema.hpp"
#include "admintm/profile.hpp"
#include "admintm/report.hpp"
#include "admintm/version.hpp"
#include "wizard.hpp"

namespace admintm::cli {

namespace {

struct Flags {
  std::string profile;
  std::string overlay;
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "markdown";
  std::string group_by = "category";
  bool reproducible = false;
  bool no_not_applicable = false;
  bool force = false;
};

// Thrown for well-formed invocations that cannot proceed (missing flag
// combinations, refusing to overwrite).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, path + ": cannot open for writing");
  out << text;
  if (!out.flush()) throw Error(ErrorCode::Io, path + ": write failed");
}

void emit(const Flags& flags, std::ostream& out, const std::string& text) {
  if (flags.output.empty()) {
    out << text;
  } else {
    write_file(flags.output, text);
  }
}

// Prefixes parse errors with the offending path.
Document load(const std::string& path, DocumentKind kind) {
  const std::string text = read_file(path);
  try {
    return parse(text, kind);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

SoftwareProfile load_profile(const std::string& path) { return load(path, DocumentKind::Profile).profile(); }

GraphOverlay load_overlay(const std::string& path) {
  if (path.empty()) return {};
  return load(path, DocumentKind::GraphOverlay).overlay();
}

ThreatModelResult load_result(const std::string& path, std::ostream& err) {
  Document doc = load(path, DocumentKind::Result);
  if (doc.stale_taxonomy) {
    err << "warning: " << path << " was produced with taxonomy '" << doc.result().taxonomy_version
        << "', current is '" << taxonomy().version() << "'\n";
  }
  return doc.result();
}

ThreatModelResult run_pipeline(const SoftwareProfile& profile, const GraphOverlay& overlay, bool reproducible) {
  ThreatModelResult result = model_threats(profile, overlay.edits);
  if (!reproducible) result.created_at = utc_timestamp_now();
  return result;
}

SoftwareProfile template_profile() {
  SoftwareProfile p;
  p.name = "my-ai-software";
  p.input_modalities = {InputModality::Image};
  return p;
}

template <typename E>
E parse_choice(const std::string& flag, const std::string& text) {
  auto v = enum_from_name<E>(text);
  if (!v) throw UsageError(flag + ": unsupported value '" + text + "'");
  return *v;
}

// ---------------------------------------------------------------------------

int cmd_init(const Flags& f, std::ostream& out) {
  if (f.profile.empty() && f.overlay.empty()) throw UsageError("init: give -p and/or -g to name the files to write");
  for (const auto* path : {&f.profile, &f.overlay}) {
    if (!path->empty() && !f.force && std::filesystem::exists(*path)) {
      throw UsageError("init: " + *path + " exists (use --force to overwrite)");
    }
  }
  if (!f.profile.empty()) {
    write_file(f.profile, serialize(Document::of(template_profile())));
    out << "wrote " << f.profile << "\n";
  }
  if (!f.overlay.empty()) {
    write_file(f.overlay, serialize(Document::of(GraphOverlay{})));
    out << "wrote " << f.overlay << "\n";
  }
  return kOk;
}

int cmd_questions(std::ostream& out) {
  const auto& qs = question_set();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto& q = qs[i];
    out << (i + 1) << ". " << q.key << " (" << enum_name(q.answer_kind) << ")\n";
    out << "   " << q.prompt << "\n";
    out << "   options:";
    for (const auto& o : q.options) out << " " << o;
    if (q.default_flag) out << " (default " << (*q.default_flag ? "yes" : "no") << ")";
    out << "\n";
  }
  return kOk;
}

int cmd_validate(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.profile.empty() && f.overlay.empty() && f.inputs.empty()) {
    throw UsageError("validate: give at least one of -p, -g, -i");
  }
  std::optional<SoftwareProfile> profile;
  if (!f.profile.empty()) {
    profile = load_profile(f.profile);
    out << f.profile << ": ok (profile)\n";
  }
  GraphOverlay overlay;
  if (!f.overlay.empty()) {
    overlay = load_overlay(f.overlay);
    out << f.overlay << ": ok (graph_overlay, " << overlay.edits.size() << " edits)\n";
  }
  for (const auto& path : f.inputs) {
    ThreatModelResult r = load_result(path, err);
    out << path << ": ok (result, " << r.findings.size() << " findings)\n";
  }
  if (profile || !overlay.edits.empty()) {
    ProcessGraph graph = profile ? customised_graph(*profile, overlay.edits)
                                 : expand_wildcards(apply_edits(default_graph(), overlay.edits));
    ValidationResult check = validate(graph);
    if (!check.ok()) {
      for (const auto& v : check.violations) err << "graph: " << enum_name(v.kind) << ": " << v.message << "\n";
      return kInvalidInput;
    }
    out << "graph: ok (" << graph.nodes().size() << " nodes, " << graph.edges().size() << " edges)\n";
  }
  return kOk;
}

int cmd_enumerate(const Flags& f, std::ostream& out) {
  const SoftwareProfile profile = load_profile(f.profile);
  const GraphOverlay overlay = load_overlay(f.overlay);
  emit(f, out, serialize(Document::of(run_pipeline(profile, overlay, f.reproducible))));
  return kOk;
}

ReportOptions report_options(const Flags& f) {
  ReportOptions options;
  options.format = parse_choice<ReportFormat>("--format", f.format);
  options.group_by = parse_choice<GroupBy>("--group-by", f.group_by);
  options.include_not_applicable = !f.no_not_applicable;
  return options;
}

int cmd_report(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.inputs.size() != 1) throw UsageError("report: give exactly one -i result document");
  const ReportOptions options = report_options(f);
  emit(f, out, render(load_result(f.inputs.front(), err), options));
  return kOk;
}

int cmd_compare(const Flags& f, std::ostream& out, std::ostream& err) {
  std::vector<ThreatModelResult> results;
  for (const auto& path : f.inputs) results.push_back(load_result(path, err));
  emit(f, out, compare(results));
  return kOk;
}

int cmd_wizard(const Flags& f, std::istream& in, std::ostream& out, std::ostream& err, Terminal terminal) {
  const ReportOptions options = report_options(f);
  const GraphOverlay overlay = load_overlay(f.overlay);
  Wizard wizard(in, err, terminal.color);
  std::optional<SoftwareProfile> profile = wizard.run();
  if (!profile) {
    err << "\nwizard: input ended before the answers were confirmed\n";
    return kInvalidInput;
  }
  ThreatModelResult result = run_pipeline(*profile, overlay, f.reproducible);
  if (!f.profile.empty()) write_file(f.profile, serialize(Document::of(*profile)));
  if (!f.output.empty()) write_file(f.output, serialize(Document::of(result)));
  out << render(result, options);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        Terminal terminal) {
  Flags f;
  CLI::App app{"Threat modelling for AI-based software: attacks on dataset, model and input.", "admin-tm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto profile_opt = [&](CLI::App* cmd, const std::string& what) {
    return cmd->add_option("-p,--profile", f.profile, what);
  };
  auto overlay_opt = [&](CLI::App* cmd) {
    return cmd->add_option("-g,--overlay", f.overlay, "graph overlay document");
  };
  auto output_opt = [&](CLI::App* cmd, const std::string& what) {
    return cmd->add_option("-o,--output", f.output, what);
  };
  auto report_opts = [&](CLI::App* cmd) {
    cmd->add_option("-f,--format", f.format, "markdown, json or summary")
        ->check(CLI::IsMember({"markdown", "json", "summary"}))
        ->capture_default_str();
    cmd->add_option("--group-by", f.group_by, "category or stride")
        ->check(CLI::IsMember({"category", "stride"}))
        ->capture_default_str();
    cmd->add_flag("--no-not-applicable", f.no_not_applicable, "omit not_applicable findings");
  };

  auto* init = app.add_subcommand("init", "write a template profile and an empty overlay");
  profile_opt(init, "profile document to create");
  overlay_opt(init);
  init->add_flag("--force", f.force, "overwrite existing files");

  auto* questions = app.add_subcommand("questions", "print the applicability questionnaire");

  auto* validate_cmd = app.add_subcommand("validate", "check profile, overlay and result documents");
  profile_opt(validate_cmd, "profile document");
  overlay_opt(validate_cmd);
  validate_cmd->add_option("-i,--input", f.inputs, "result document(s)");

  auto* enumerate = app.add_subcommand("enumerate", "run the threat model and write a result document");
  profile_opt(enumerate, "profile document")->required();
  overlay_opt(enumerate);
  output_opt(enumerate, "result document (default: stdout)");
  enumerate->add_flag("--reproducible", f.reproducible, "omit created_at for byte-stable output");

  auto* report = app.add_subcommand("report", "render a result document");
  report->add_option("-i,--input", f.inputs, "result document")->required();
  output_opt(report, "report file (default: stdout)");
  report_opts(report);

  auto* compare_cmd = app.add_subcommand("compare", "side-by-side table of two or more results");
  compare_cmd->add_option("-i,--input", f.inputs, "result documents")->required();
  output_opt(compare_cmd, "table file (default: stdout)");

  auto* wizard = app.add_subcommand("wizard", "answer the questionnaire interactively and print the report");
  profile_opt(wizard, "save the answered profile here");
  overlay_opt(wizard);
  output_opt(wizard, "save the result document here");
  wizard->add_flag("--reproducible", f.reproducible, "omit created_at from the saved result");
  report_opts(wizard);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto selected = app.get_subcommands();
    out << (selected.empty() ? app.help() : selected.back()->help());
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    const auto selected = app.get_subcommands();
    err << "error: " << e.what() << "\n\n" << (selected.empty() ? app.help() : selected.back()->help());
    return kInvalidInput;
  }

  try {
    if (init->parsed()) return cmd_init(f, out);
    if (questions->parsed()) return cmd_questions(out);
    if (validate_cmd->parsed()) return cmd_validate(f, out, err);
    if (enumerate->parsed()) return cmd_enumerate(f, out);
    if (report->parsed()) return cmd_report(f, out, err);
    if (compare_cmd->parsed()) return cmd_compare(f, out, err);
    if (wizard->parsed()) return cmd_wizard(f, in, out, err, terminal);
    err << app.help();
    return kInvalidInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return is_schema_error(e.code()) ? kSchemaError : kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace admintm::cli
