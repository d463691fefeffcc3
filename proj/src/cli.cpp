#include "nucube/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nucube/encoding.hpp"
#include "nucube/erasure.hpp"
#include "nucube/replay.hpp"
#include "nucube/rewrite.hpp"
#include "nucube/syntax.hpp"
#include "nucube/trace_json.hpp"
#include "nucube/typing.hpp"

namespace nucube {

namespace {

using nlohmann::json;

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string system = "C";
  std::string mode = "nu";
  std::size_t fuel = 0;
  bool audit = false;
  std::string format = "text";
  bool trace = false;
};

void add_check_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--system", o.system, "arrow, 2, P, P2, w_, w, Pw_ or C")->capture_default_str();
  cmd->add_option("--mode", o.mode, "nu or lambda")->capture_default_str();
  cmd->add_option("--fuel", o.fuel, "reduction step budget");
  cmd->add_flag("--audit", o.audit, "explore every restriction branch");
  cmd->add_option("--format", o.format, "text or json")->capture_default_str();
  cmd->add_flag("--trace", o.trace, "print the derivation");
}

Fuel fuel_from(std::size_t flag) {
  Fuel f;
  if (flag > 0) {
    f.max_steps = flag;
  } else if (const char* env = std::getenv("NUCUBE_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v == 0) throw UsageError{"NUCUBE_FUEL must be a positive integer"};
    f.max_steps = static_cast<std::size_t>(v);
  }
  return f;
}

CheckConfig config_from(const Options& o) {
  auto name = parse_system_name(o.system);
  if (!name) throw UsageError{"unknown system '" + o.system + "'"};
  if (o.mode != "nu" && o.mode != "lambda") throw UsageError{"mode must be nu or lambda"};
  if (o.format != "text" && o.format != "json") throw UsageError{"format must be text or json"};
  return CheckConfig{SystemId{*name, o.mode == "nu" ? Mode::NuCube : Mode::LambdaCube}, fuel_from(o.fuel), o.audit};
}

void print_derivation_text(const DerivationPtr& d, std::ostream& out) {
  json j = derivation_to_json(d);
  for (const json& n : j["nodes"]) {
    out << "  [" << n["id"].get<std::size_t>() << "] (" << n["rule"].get<std::string>() << ") ";
    std::string ctx = n["context"].get<std::string>();
    if (!ctx.empty()) out << ctx << " ";
    out << "|- " << n["subject"].get<std::string>() << " : " << n["type"].get<std::string>();
    if (!n["premises"].empty()) {
      out << "  <=";
      for (const json& p : n["premises"]) out << " " << p.get<std::size_t>();
    }
    if (n.contains("satisfaction")) {
      const json& s = n["satisfaction"];
      out << "  {holds=" << (s["holds"].get<bool>() ? "yes" : "no") << ", branches=" << s["branch_count"] << "}";
    }
    out << "\n";
  }
}

std::string sort_text(std::optional<Sort> s) { return s ? std::string(s == Sort::Star ? "*" : "@") : "none"; }

// Shared by `check` and `corpus check`.
int run_judgement(const Context& ctx, const Term& subject, const std::optional<Term>& type, const Options& o,
                  const CheckConfig& cfg, std::ostream& out) {
  Checker checker(cfg);
  bool json_out = o.format == "json";
  try {
    checker.check_context(ctx);
    DerivationPtr d;
    Term result_type;
    if (type) {
      d = checker.check_judgement(ctx, subject, *type);
      result_type = *type;
    } else {
      Typed t = checker.synth_type(ctx, subject);
      d = t.derivation;
      result_type = t.type;
    }
    std::optional<Sort> sort = checker.sort_of(ctx, subject);
    ReplayResult replay = validate_derivation(d, cfg.system, cfg.fuel);
    if (!replay.ok) {
      // a checker bug, not a user error; report it as a judgement failure
      if (json_out) {
        out << json{{"status", "error"}, {"kind", "ReplayFailed"}, {"message", replay.failure}}.dump(2) << "\n";
      } else {
        out << "error[ReplayFailed]: " << replay.failure << "\n";
      }
      return kExitJudgement;
    }
    Judgement j{ctx, subject, result_type};
    if (json_out) {
      json doc = {{"status", "ok"},
                  {"judgement", print_judgement(j)},
                  {"context", print_context(ctx)},
                  {"subject", print_term(subject)},
                  {"type", print_term(result_type)},
                  {"sort", sort ? json(sort_text(sort)) : json(nullptr)},
                  {"nodes", derivation_node_count(d)},
                  {"derivation", derivation_to_json(d)}};
      out << doc.dump(2) << "\n";
    } else {
      out << "ok: " << print_judgement(j) << "\n";
      out << "sort: " << sort_text(sort) << "\n";
      out << "derivation: " << derivation_node_count(d) << " nodes, replayed\n";
      if (o.trace) print_derivation_text(d, out);
    }
    return kExitOk;
  } catch (const FuelExhausted&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    const TypeError* te = dynamic_cast<const TypeError*>(&e);
    if (json_out) {
      json doc = {{"status", "error"}, {"kind", to_string(e.kind())}, {"message", e.what()}};
      if (te && te->report()) doc["satisfaction"] = report_to_json(*te->report());
      if (te && te->element()) doc["element"] = *te->element() + 1;
      out << doc.dump(2) << "\n";
    } else {
      out << "error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
      if (te && te->report()) {
        out << "  restriction check: " << te->report()->branch_count << " branch(es) explored\n";
      }
    }
    return kExitJudgement;
  }
}

int cmd_check(const std::string& ctx_path, const std::string& term_path, const std::string& type_path,
              const Options& o, std::ostream& out) {
  CheckConfig cfg = config_from(o);
  Context ctx = parse_context(read_file(ctx_path));
  Term subject = parse_term(read_file(term_path), ctx);
  std::optional<Term> type;
  if (!type_path.empty()) type = parse_term(read_file(type_path), ctx);
  return run_judgement(ctx, subject, type, o, cfg, out);
}

int cmd_normalize(const std::string& term_path, const std::string& ctx_path, std::size_t fuel_flag, bool trace,
                  const std::string& format, std::ostream& out, std::ostream& err) {
  if (format != "text" && format != "json") throw UsageError{"format must be text or json"};
  Fuel fuel = fuel_from(fuel_flag);
  Context ctx;
  if (!ctx_path.empty()) ctx = parse_context(read_file(ctx_path));
  Term t = parse_term(read_file(term_path), ctx);
  json steps = json::array();
  TraceSink sink;
  if (trace) {
    sink = [&](const TraceStep& s) {
      if (format == "json") {
        steps.push_back({{"step", s.index}, {"path", s.path}, {"size_before", s.size_before},
                         {"size_after", s.size_after}});
      } else {
        out << "step " << s.index << " at [";
        for (std::size_t k = 0; k < s.path.size(); ++k) out << (k ? "," : "") << s.path[k];
        out << "] size " << s.size_before << " -> " << s.size_after << "\n";
      }
    };
  }
  ReductionOutcome r = try_normalize(t, fuel, sink);
  if (format == "json") {
    json doc = {{"status", r.normal ? "ok" : "fuel_exhausted"},
                {"steps", r.steps_used},
                {r.normal ? "normal_form" : "partial", print_term(r.result)}};
    if (trace) doc["trace"] = steps;
    out << doc.dump(2) << "\n";
  } else if (r.normal) {
    out << print_term(r.result) << "\n";
  } else {
    err << "nucube: fuel exhausted after " << r.steps_used << " steps (term size " << r.result->size() << ")\n";
  }
  return r.normal ? kExitOk : kExitFuel;
}

int cmd_erase(const std::string& term_path, const std::string& ctx_path, const std::string& format,
              std::ostream& out) {
  if (format != "text" && format != "json") throw UsageError{"format must be text or json"};
  Context ctx;
  if (!ctx_path.empty()) ctx = parse_context(read_file(ctx_path));
  Term t = parse_term(read_file(term_path), ctx);
  try {
    ErasureResult e = erase(t);
    if (format == "json") {
      out << json{{"status", "ok"}, {"pure", print_pure(e.pure)}, {"dropped_nodes", e.dropped_nodes}}.dump(2)
          << "\n";
    } else {
      out << print_pure(e.pure) << "\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotErasable) throw;
    if (format == "json") {
      out << json{{"status", "error"}, {"kind", to_string(e.kind())}, {"message", e.what()}}.dump(2) << "\n";
    } else {
      out << "error[" << to_string(e.kind()) << "]: " << e.what() << "\n";
    }
    return kExitJudgement;
  }
}

int cmd_corpus_check(const std::vector<std::string>& names, const Options& o, std::ostream& out) {
  CheckConfig cfg = config_from(o);
  const auto& table = corpus();
  std::vector<std::string> todo = names;
  if (todo.empty()) {
    for (const auto& [name, entry] : table) todo.push_back(name);
  }
  int worst = kExitOk;
  for (const std::string& name : todo) {
    auto it = table.find(name);
    if (it == table.end()) throw UsageError{"no corpus entry named '" + name + "'"};
    if (o.format == "text" && todo.size() > 1) out << name << ": ";
    int code = run_judgement(it->second.context, it->second.subject, it->second.type, o, cfg, out);
    worst = std::max(worst, code);
  }
  return worst;
}

int cmd_corpus_export(const std::string& dir, std::ostream& out) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw UsageError{"cannot create '" + dir + "': " + ec.message()};
  for (const auto& [name, e] : corpus()) {
    auto write = [&](const std::string& ext, const std::string& text) {
      fs::path p = fs::path(dir) / (name + ext);
      std::ofstream f(p);
      if (!f) throw UsageError{"cannot write '" + p.string() + "'"};
      f << text << "\n";
    };
    write(".ctx", print_context(e.context));
    write(".term", print_term(e.subject));
    write(".type", print_term(e.type));
    out << name << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nucube: type checker for the lambda- and nu-cubes"};
  app.name("nucube");
  app.require_subcommand(1);

  Options check_opts;
  std::string ctx_path, term_path, type_path;
  CLI::App* check = app.add_subcommand("check", "check a judgement, or synthesize a type when TYPE is omitted");
  add_check_options(check, check_opts);
  check->add_option("CTX", ctx_path, "context file")->required();
  check->add_option("TERM", term_path, "term file")->required();
  check->add_option("TYPE", type_path, "type file");

  std::size_t norm_fuel = 0;
  bool norm_trace = false;
  std::string norm_ctx, norm_term, norm_format = "text";
  CLI::App* normalize_cmd = app.add_subcommand("normalize", "leftmost-outermost beta normal form");
  normalize_cmd->add_option("--fuel", norm_fuel, "reduction step budget");
  normalize_cmd->add_flag("--trace", norm_trace, "print every contraction");
  normalize_cmd->add_option("--context", norm_ctx, "context file for variable classes");
  normalize_cmd->add_option("--format", norm_format, "text or json");
  normalize_cmd->add_option("TERM", norm_term, "term file")->required();

  std::string erase_ctx, erase_term, erase_format = "text";
  CLI::App* erase_cmd = app.add_subcommand("erase", "type erasure to a pure lambda term");
  erase_cmd->add_option("--context", erase_ctx, "context file for variable classes");
  erase_cmd->add_option("--format", erase_format, "text or json");
  erase_cmd->add_option("TERM", erase_term, "term file")->required();

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "built-in example judgements");
  corpus_cmd->require_subcommand(1);
  CLI::App* corpus_list = corpus_cmd->add_subcommand("list", "list entry names");
  Options corpus_opts;
  std::vector<std::string> corpus_names;
  CLI::App* corpus_check = corpus_cmd->add_subcommand("check", "check entries (all when none are named)");
  add_check_options(corpus_check, corpus_opts);
  corpus_check->add_option("NAME", corpus_names, "entry names");
  std::string export_dir;
  CLI::App* corpus_export = corpus_cmd->add_subcommand("export", "write .ctx/.term/.type files");
  corpus_export->add_option("DIR", export_dir, "output directory")->required();

  std::vector<std::string> argv_store{"nucube"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "nucube: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(ctx_path, term_path, type_path, check_opts, out);
    if (normalize_cmd->parsed()) return cmd_normalize(norm_term, norm_ctx, norm_fuel, norm_trace, norm_format, out, err);
    if (erase_cmd->parsed()) return cmd_erase(erase_term, erase_ctx, erase_format, out);
    if (corpus_list->parsed()) {
      for (const auto& [name, e] : corpus()) out << name << "\t" << e.note << "\n";
      return kExitOk;
    }
    if (corpus_check->parsed()) return cmd_corpus_check(corpus_names, corpus_opts, out);
    if (corpus_export->parsed()) return cmd_corpus_export(export_dir, out);
  } catch (const UsageError& e) {
    err << "nucube: " << e.message << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "nucube: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FuelExhausted& e) {
    err << "nucube: fuel exhausted: " << e.what() << "\n";
    return kExitFuel;
  } catch (const Error& e) {
    err << "nucube: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitJudgement;
  } catch (const std::exception& e) {
    err << "nucube: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "nucube: no command\n";
  return kExitUsage;
}

}  // namespace nucube
