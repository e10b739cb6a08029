#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gabriel/gabriel.hpp"

namespace gabriel::cli {

enum ExitCode : int {
  success = 0,
  verification_failed = 1,
  input_error = 2,
  precondition_error = 3,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_modular:
    case ErrorKind::not_basic:
    case ErrorKind::too_large:
      return precondition_error;
    default:
      return input_error;
  }
}

struct InputOptions {
  std::string path;
  std::string kind;
  std::size_t params = 0;
  std::uint64_t seed = 0;
};

struct LoadedLattice {
  IntervalSpace space;
  std::string name;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LoadedLattice load_file(const std::string& path) {
  auto doc = parse_lattice_text(read_file(path));
  return {IntervalSpace(to_lattice(doc)), doc.name};
}

inline LoadedLattice load(const InputOptions& in) {
  bool has_path = !in.path.empty();
  bool has_kind = !in.kind.empty();
  if (has_path == has_kind) throw UsageError("give exactly one input: a lattice file or --kind");
  if (has_path) return load_file(in.path);
  GeneratorSpec spec{parse_generator_kind(in.kind), in.params, in.seed};
  return {IntervalSpace(generate(spec)), generated_name(spec)};
}

inline Element element_named(const Lattice& lattice, const std::string& name) {
  auto e = lattice.find(name);
  if (!e) throw Error(ErrorKind::unknown_element, "no element named '" + name + "'");
  return *e;
}

inline Interval parse_interval(const Lattice& lattice, const std::string& text, char sep) {
  auto pos = text.find(sep);
  if (pos == std::string::npos) {
    throw Error(ErrorKind::invalid_argument, "interval '" + text + "' must look like a" + sep + "b");
  }
  Interval i{element_named(lattice, text.substr(0, pos)), element_named(lattice, text.substr(pos + 1))};
  if (!lattice.leq(i.lower, i.upper)) {
    throw Error(ErrorKind::invalid_argument, "'" + text + "' is not an interval: lower is not below upper");
  }
  return i;
}

/// Parses "a:b,c:d" into a set.
inline IntervalSet parse_interval_list(const IntervalSpace& space, const std::string& text) {
  auto s = IntervalSet::empty(space);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    s.insert(space.table().index(parse_interval(space.lattice(), item, ':')));
  }
  if (s.none()) throw Error(ErrorKind::invalid_argument, "empty interval list");
  return s;
}

inline std::string format_interval(const Lattice& lattice, Interval i) {
  return "[" + lattice.name(i.lower) + "," + lattice.name(i.upper) + "]";
}

inline std::string format_set(const IntervalSpace& space, const IntervalSet& s) {
  std::string out;
  s.for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += format_interval(space.lattice(), space[i]);
  });
  return out;
}

inline std::string format_flags(const ClassFlags& f) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += name;
  };
  add(f.abstract, "abstract");
  add(f.basic, "basic");
  add(f.congruence, "congruence");
  add(f.pre_division, "pre_division");
  add(f.division, "division");
  return out.empty() ? "none" : out;
}

inline int run_check(const LoadedLattice& in, std::ostream& out) {
  const auto& l = in.space.lattice();
  out << "lattice " << in.name << ": " << l.size() << " elements, " << l.covers().size()
      << " covers\n";
  out << "bottom: " << l.name(l.bottom()) << "\ntop: " << l.name(l.top()) << "\n";
  const auto& verdict = is_modular(l);
  if (verdict.modular) {
    out << "modular: yes\n";
  } else {
    const auto& w = *verdict.witness;
    out << "modular: no (witness a=" << l.name(w[0]) << " b=" << l.name(w[1]) << " c=" << l.name(w[2])
        << ")\n";
  }
  return success;
}

inline int run_intervals(const LoadedLattice& in, std::ostream& out) {
  const auto& space = in.space;
  out << space.size() << " intervals\n";
  for (std::size_t i = 0; i < space.size(); ++i) {
    out << i << ' ' << format_interval(space.lattice(), space[i]);
    if (space[i].trivial()) out << " trivial";
    out << '\n';
  }
  return success;
}

inline int run_closure(const LoadedLattice& in, const std::string& set_text, const std::string& op,
                       bool allow_nonmodular, std::ostream& out) {
  require_modular(in.space.lattice(), allow_nonmodular);
  const auto& space = in.space;
  auto s = parse_interval_list(space, set_text);
  IntervalSet result;
  if (op == "basic") result = basic_closure(space, s);
  else if (op == "dvs") result = dvs(space, s);
  else if (op == "fa-exists") result = forall_exists(space, s);
  else if (op == "smp") result = smp(space, s);
  else if (op == "crt") result = crt(space, s);
  else if (op == "gab") result = gab(space, s);
  else throw UsageError("unknown --op '" + op + "'");
  if (!space.lattice().modular()) out << "warning: lattice is not modular\n";
  out << op << ": " << result.count() << " intervals\n";
  out << "flags: " << format_flags(classify(space, result)) << "\n";
  out << format_set(space, result) << "\n";
  return success;
}

inline int run_filtration(const LoadedLattice& in, const std::string& seed_text, bool allow_nonmodular,
                          std::ostream& out) {
  const auto& space = in.space;
  auto seed = seed_text.empty() ? IntervalSet::trivial(space) : parse_interval_list(space, seed_text);
  auto f = gab_filtration(space, seed, allow_nonmodular);
  if (f.modularity_overridden) out << "warning: lattice is not modular\n";
  for (std::size_t k = 0; k < f.stages.size(); ++k) {
    out << "stage " << k << " (" << f.stages[k].count() << " intervals): "
        << format_set(space, f.stages[k]) << "\n";
  }
  out << "stabilization_index: " << f.stabilization_index << "\n";
  return success;
}

inline int run_gdim(const LoadedLattice& in, const std::string& interval_text, const std::string& method_text,
                    bool allow_nonmodular, std::ostream& out) {
  const auto& space = in.space;
  const auto& l = space.lattice();
  Method method;
  if (method_text == "filtration") method = Method::filtration;
  else if (method_text == "construction") method = Method::construction;
  else throw UsageError("unknown --method '" + method_text + "'");
  if (!interval_text.empty()) {
    auto i = parse_interval(l, interval_text, ',');
    out << gdim(space, i, method, allow_nonmodular) << "\n";
    return success;
  }
  auto table = dimension_table(space, method, allow_nonmodular);
  for (std::size_t i = 0; i < space.size(); ++i) {
    out << l.name(space[i].lower) << ' ' << l.name(space[i].upper) << ' ' << table.dimension[i] << "\n";
  }
  out << "lattice: " << table.lattice_dimension << "\n";
  return success;
}

inline int verify_one(const LoadedLattice& in, std::size_t threshold, std::string& json) {
  VerifyOptions opts;
  opts.exhaustion_threshold = threshold;
  auto report = verify_theorems(in.space, in.name, opts);
  json = write_report(report);
  return report.all_pass() ? success : verification_failed;
}

// Runs every *.lat file in a directory concurrently; output is ordered by
// file name.
inline int run_verify_directory(const std::string& dir, std::size_t threshold, std::ostream& out) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".lat") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  struct Outcome {
    int code = success;
    nlohmann::ordered_json entry;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, [f, threshold] {
      Outcome o;
      o.entry["file"] = f.filename().string();
      try {
        auto loaded = load_file(f.string());
        VerifyOptions opts;
        opts.exhaustion_threshold = threshold;
        auto report = verify_theorems(loaded.space, loaded.name, opts);
        o.code = report.all_pass() ? success : verification_failed;
        o.entry["report"] = report_to_json(report);
      } catch (const Error& e) {
        o.code = exit_code_for(e.kind());
        o.entry["error"] = e.what();
      }
      return o;
    }));
  }
  auto all = nlohmann::ordered_json::array();
  int worst = success;
  auto rank = [](int code) {
    switch (code) {
      case input_error: return 3;
      case precondition_error: return 2;
      case verification_failed: return 1;
      default: return 0;
    }
  };
  for (auto& j : jobs) {
    auto o = j.get();
    if (rank(o.code) > rank(worst)) worst = o.code;
    all.push_back(std::move(o.entry));
  }
  out << all.dump(2) << "\n";
  return worst;
}

inline const char* grammar =
    "usage:\n"
    "  gabriel check <in>\n"
    "  gabriel intervals <in>\n"
    "  gabriel closure <in> --set <a:b,...> --op <basic|dvs|fa-exists|smp|crt|gab> [--allow-nonmodular]\n"
    "  gabriel filtration <in> [--seed <a:b,...>] [--allow-nonmodular]\n"
    "  gabriel gdim <in> [--interval a,b] [--method filtration|construction] [--allow-nonmodular]\n"
    "  gabriel verify <in|dir> [--threshold n]\n"
    "  gabriel gen --kind <chain|boolean|divisor|diamond|subspace|downset> --params <n> [--seed n]\n"
    "  gabriel export-dot <in>\n"
    "<in> is a lattice file, or --kind/--params[/--lattice-seed] to generate one.\n"
    "Every subcommand accepts --out <path>.\n"
    "exit codes: 0 success, 1 verification failure, 2 input error, 3 precondition error\n";

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gabriel dimension toolkit for finite modular lattices", "gabriel"};
  app.require_subcommand(1);

  InputOptions input;
  std::string out_path;
  std::size_t threshold = default_exhaustion_threshold;
  bool allow_nonmodular = false;
  std::string set_text, op, seed_text, interval_text, method_text = "filtration";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input.path, "lattice text file");
    sub->add_option("--kind", input.kind, "generator kind");
    sub->add_option("--params", input.params, "generator parameter");
    sub->add_option("--lattice-seed", input.seed, "generator seed (downset)");
    sub->add_option("--out", out_path, "write output to this file");
  };

  auto* check = app.add_subcommand("check", "lattice axioms and modularity verdict");
  add_input(check);
  auto* intervals = app.add_subcommand("intervals", "list the interval table");
  add_input(intervals);
  auto* closure = app.add_subcommand("closure", "apply one closure operator");
  add_input(closure);
  closure->add_option("--set", set_text, "interval list a:b,c:d")->required();
  closure->add_option("--op", op, "basic|dvs|fa-exists|smp|crt|gab")->required();
  closure->add_flag("--allow-nonmodular", allow_nonmodular);
  auto* filtration = app.add_subcommand("filtration", "Gab filtration stages");
  add_input(filtration);
  filtration->add_option("--seed", seed_text, "basic seed set a:b,c:d");
  filtration->add_flag("--allow-nonmodular", allow_nonmodular);
  auto* gdim_cmd = app.add_subcommand("gdim", "Gabriel dimension table");
  add_input(gdim_cmd);
  gdim_cmd->add_option("--interval", interval_text, "single interval a,b");
  gdim_cmd->add_option("--method", method_text, "filtration|construction");
  gdim_cmd->add_flag("--allow-nonmodular", allow_nonmodular);
  auto* verify = app.add_subcommand("verify", "run the full identity suite, JSON report");
  add_input(verify);
  verify->add_option("--threshold", threshold, "exhaustion threshold on |I(A)|");
  auto* gen = app.add_subcommand("gen", "emit a generated lattice as text");
  gen->add_option("--kind", input.kind, "generator kind")->required();
  gen->add_option("--params", input.params, "generator parameter")->required();
  gen->add_option("--seed", input.seed, "seed (downset)");
  gen->add_option("--out", out_path, "write output to this file");
  auto* dot = app.add_subcommand("export-dot", "Graphviz DOT of the Hasse diagram");
  add_input(dot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << grammar;
    return success;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << grammar;
    return input_error;
  }

  std::ostringstream buffer;
  int code = success;
  try {
    if (gen->parsed()) {
      GeneratorSpec spec{parse_generator_kind(input.kind), input.params, input.seed};
      buffer << write_lattice_text(to_document(generate(spec), generated_name(spec)));
    } else if (verify->parsed() && !input.path.empty() && input.kind.empty() &&
               std::filesystem::is_directory(input.path)) {
      code = run_verify_directory(input.path, threshold, buffer);
    } else {
      auto loaded = load(input);
      if (check->parsed()) code = run_check(loaded, buffer);
      else if (intervals->parsed()) code = run_intervals(loaded, buffer);
      else if (closure->parsed()) code = run_closure(loaded, set_text, op, allow_nonmodular, buffer);
      else if (filtration->parsed()) code = run_filtration(loaded, seed_text, allow_nonmodular, buffer);
      else if (gdim_cmd->parsed())
        code = run_gdim(loaded, interval_text, method_text, allow_nonmodular, buffer);
      else if (verify->parsed()) {
        std::string json;
        code = verify_one(loaded, threshold, json);
        buffer << json;
      } else if (dot->parsed()) {
        buffer << export_dot(loaded.space.lattice(), loaded.name);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << grammar;
    return input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return input_error;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace gabriel::cli
