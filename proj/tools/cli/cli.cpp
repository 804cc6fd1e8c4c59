#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <vknot/vknot.hpp>

#include "verify.hpp"

namespace vknot::cli {

namespace {

struct Options {
  std::string format;
  std::uint64_t seed = 1;
  std::optional<std::size_t> count;
  std::optional<std::size_t> max_chords;
  std::size_t jobs = 1;
  bool check = false;

  std::vector<std::string> inputs;
  std::vector<std::string> codes;
  std::string suite = "all";
  std::string f;
  std::string g = "0";
  std::size_t chords_exact = 0;
  std::optional<std::size_t> chords;
  std::optional<std::size_t> walk;
  std::string moves;
  std::string start;
  std::string transcript = "-";
};

inline constexpr std::size_t kMaxVerifyChords = 16;

// Exit with a message: thrown inside commands, caught by run().
struct Failure {
  int code;
  std::string message;
};

bool json_output(const Options& o, bool json_by_default) {
  return o.format.empty() ? json_by_default : o.format == "json";
}

struct Source {
  std::string label;
  std::unique_ptr<std::istream> owned;
  std::istream* stream;
};

Source open_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {"<stdin>", nullptr, &in};
  }
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) {
    throw Failure{kInputError, "cannot open '" + path + "'"};
  }
  std::istream* raw = file.get();
  return {path, std::move(file), raw};
}

GaussDiagram parse_or_fail(const InputLine& line, const std::string& label) {
  try {
    return parse_gauss_line(line);
  } catch (const ParseError& e) {
    throw Failure{kInputError, label + ": " + e.what()};
  }
}

std::string render_report(const InvariantReport& r, bool json) {
  return json ? report_to_json(r).dump() + '\n' : report_to_text(r);
}

// Computes reports for a batch of diagrams with `jobs` workers; results keep
// the batch order.
std::vector<std::string> render_batch(const std::vector<GaussDiagram>& batch, bool json,
                                      std::size_t jobs) {
  std::vector<std::string> out(batch.size());
  auto work = [&](std::atomic<std::size_t>& next) {
    for (std::size_t k = next++; k < batch.size(); k = next++) {
      out[k] = render_report(compute_report(batch[k]), json);
    }
  };
  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::min(jobs, batch.size());
  if (workers <= 1) {
    work(next);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back(work, std::ref(next));
  }
  for (auto& t : pool) {
    t.join();
  }
  return out;
}

int cmd_compute(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const bool json = json_output(o, true);
  const std::size_t batch_size = o.jobs > 1 ? 64 * o.jobs : 1;
  std::vector<GaussDiagram> batch;
  bool first_block = true;
  auto flush = [&] {
    for (auto& text : render_batch(batch, json, o.jobs)) {
      if (!json && !first_block) {
        out << '\n';
      }
      first_block = false;
      out << text;
    }
    batch.clear();
  };
  auto consume = [&](Source& source) {
    LineReader reader(*source.stream);
    while (auto line = reader.next()) {
      if (line->blank) {
        err << "warning: " << source.label << ": line " << line->number << ": empty line skipped\n";
        continue;
      }
      GaussDiagram d;
      try {
        d = parse_or_fail(*line, source.label);
      } catch (const Failure&) {
        flush();
        throw;
      }
      batch.push_back(std::move(d));
      if (batch.size() >= batch_size) {
        flush();
      }
    }
  };
  for (std::size_t k = 0; k < o.codes.size(); ++k) {
    std::istringstream text(o.codes[k]);
    Source source{"--code #" + std::to_string(k + 1), nullptr, &text};
    consume(source);
  }
  std::vector<std::string> inputs = o.inputs;
  if (inputs.empty() && o.codes.empty()) {
    inputs.push_back("-");
  }
  for (const auto& path : inputs) {
    Source source = open_source(path, in);
    consume(source);
  }
  flush();
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteOptions so;
  so.count = o.count.value_or(1000);
  so.seed = o.seed;
  so.max_chords = o.max_chords.value_or(8);
  if (so.max_chords > kMaxVerifyChords) {
    throw Failure{kInputError, "--max-chords above " + std::to_string(kMaxVerifyChords) +
                                   " is not supported by verify"};
  }
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    names.push_back(o.suite);
  }
  const bool json = json_output(o, false);
  bool failed = false;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, so);
    failed = failed || r.failures > 0;
    if (json) {
      Json j = Json::object();
      j["suite"] = r.name;
      j["seed"] = so.seed;
      j["cases"] = r.cases;
      j["failures"] = r.failures;
      j["coverage"] = r.coverage;
      out << j.dump() << '\n';
    } else {
      out << r.name << ": " << r.cases << " cases, " << r.failures << " failures"
          << (r.failures ? "  FAIL" : "  ok") << '\n';
      if (!r.coverage.empty()) {
        out << "  coverage:";
        for (const auto& [key, count] : r.coverage) {
          out << ' ' << key << '=' << count;
        }
        out << '\n';
      }
    }
    for (const auto& report : r.reports) {
      err << r.name << ' ' << report << '\n';
    }
  }
  return failed ? kPropertyViolation : kSuccess;
}

LaurentPolynomial parse_poly_arg(const std::string& text, const std::string& which) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw Failure{kInputError, which + ": " + e.what()};
  }
}

int cmd_realize(const Options& o, std::ostream& out, std::ostream& err) {
  const auto f = parse_poly_arg(o.f, "f");
  const auto g = parse_poly_arg(o.g, "g");
  const GaussDiagram d = realize(f, g);
  const std::string code = serialize(d);
  if (o.check) {
    const auto p = v_polys(parse_gauss(code));
    if (p.v1 != f || p.v2 != g) {
      throw Failure{kInternalFailure, "check failed: printed diagram has V1 = " + format_poly(p.v1) +
                                          ", V2 = " + format_poly(p.v2)};
    }
    err << "check: ok (" << d.chord_count() << " chords)\n";
  }
  if (json_output(o, false)) {
    Json j = Json::object();
    j["gauss_code"] = code;
    j["n"] = d.chord_count();
    j["v1"] = poly_to_json(f);
    j["v2"] = poly_to_json(g);
    out << j.dump() << '\n';
  } else {
    out << code << '\n';
  }
  return kSuccess;
}

GaussDiagram first_diagram(const std::string& path, std::istream& in) {
  Source source = open_source(path, in);
  LineReader reader(*source.stream);
  while (auto line = reader.next()) {
    if (!line->blank) {
      return parse_or_fail(*line, source.label);
    }
  }
  throw Failure{kInputError, source.label + ": no diagram"};
}

int cmd_delta_bound(const Options& o, std::istream& in, std::ostream& out) {
  const auto a = first_diagram(o.inputs.at(0), in);
  const auto b = first_diagram(o.inputs.at(1), in);
  const auto report = delta_bound(a, b);
  if (json_output(o, true)) {
    out << delta_bound_to_json(report).dump() << '\n';
  } else {
    out << delta_bound_to_text(report);
  }
  return kSuccess;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const std::size_t cap = o.max_chords.value_or(kDefaultEnumerationCap);
  const bool json = json_output(o, false);
  const std::size_t limit = o.count.value_or(static_cast<std::size_t>(-1));
  std::size_t emitted = 0;
  if (limit == 0) {
    return kSuccess;
  }
  for_each_diagram(
      o.chords_exact,
      [&](const GaussDiagram& d) {
        if (json) {
          out << report_to_json(compute_report(d)).dump() << '\n';
        } else {
          out << serialize(d) << '\n';
        }
        return ++emitted < limit;
      },
      cap);
  return kSuccess;
}

std::vector<MoveKind> parse_kinds(const std::string& text) {
  if (text.empty()) {
    return equivalence_moves(DiagramClass::Virtual);
  }
  std::vector<MoveKind> kinds;
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    try {
      kinds.push_back(parse_move_kind(name));
    } catch (const ParseError& e) {
      throw Failure{kInputError, std::string("--moves: ") + e.what()};
    }
  }
  return kinds;
}

int cmd_random(const Options& o, std::ostream& out) {
  Rng rng(o.seed);
  const std::size_t max_chords = o.max_chords.value_or(8);
  auto chords = [&] { return o.chords ? *o.chords : static_cast<std::size_t>(rng.below(max_chords + 1)); };
  if (o.walk) {
    const auto kinds = parse_kinds(o.moves);
    GaussDiagram start;
    if (!o.start.empty()) {
      start = parse_or_fail(InputLine{1, o.start, false}, "--start");
    } else {
      start = random_diagram(chords(), rng);
    }
    const auto result = random_walk(start, kinds, *o.walk, rng);
    for (const auto& line : result.transcript) {
      out << line << '\n';
    }
    out << "# skipped " << result.skipped << '\n';
    for (const auto& [key, count] : result.coverage) {
      out << "# coverage " << key << ' ' << count << '\n';
    }
    return kSuccess;
  }
  const bool json = json_output(o, false);
  const std::size_t count = o.count.value_or(10);
  for (std::size_t k = 0; k < count; ++k) {
    const auto d = random_diagram(chords(), rng);
    if (json) {
      out << report_to_json(compute_report(d)).dump() << '\n';
    } else {
      out << serialize(d) << '\n';
    }
  }
  return kSuccess;
}

// With --check every step must respect the invariance contract of its kind.
std::string check_step(const ReplayStep& step) {
  if (!step.site) {
    return {};
  }
  const auto before = v_polys(step.before);
  const auto after = v_polys(step.after);
  switch (kind_of(*step.site)) {
    case MoveKind::R1Insert:
    case MoveKind::R1Delete:
    case MoveKind::R2Insert:
    case MoveKind::R2Delete:
    case MoveKind::R3:
      return before == after ? std::string{} : "V1/V2 changed";
    case MoveKind::Welded:
      return derivative_at_one(before.v1) == derivative_at_one(after.v1) ? std::string{}
                                                                          : "V1'(1) changed";
    case MoveKind::Delta: {
      const auto d1 = after.v1 - before.v1;
      const auto d2 = after.v2 - before.v2;
      return d1 == d2 && one_norm(d1) == 1 ? std::string{} : "Delta difference is not one monomial";
    }
    case MoveKind::Virtualize:
    case MoveKind::CrossingChange:
      break;
  }
  return {};
}

int cmd_replay(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Source source = open_source(o.transcript, in);
  std::vector<std::string> lines;
  std::vector<std::size_t> numbers;
  LineReader reader(*source.stream);
  while (auto line = reader.next()) {
    if (!line->blank) {
      lines.push_back(line->text);
      numbers.push_back(line->number);
    }
  }
  if (lines.empty()) {
    throw Failure{kInputError, source.label + ": empty transcript"};
  }
  std::vector<ReplayStep> steps;
  try {
    steps = replay(lines);
  } catch (const ParseError& e) {
    throw Failure{kInputError, source.label + ": " + e.what()};
  } catch (const MoveError& e) {
    throw Failure{kPropertyViolation, source.label + ": " + e.what()};
  }
  bool violated = false;
  if (o.check) {
    for (const auto& step : steps) {
      const std::string problem = check_step(step);
      if (!problem.empty()) {
        violated = true;
        err << source.label << ": line " << numbers[step.step] << ": " << problem << '\n';
      }
    }
  }
  const GaussDiagram final_diagram = steps.empty() ? parse_gauss(lines[0].substr(lines[0].find('|') + 1))
                                                   : steps.back().after;
  if (json_output(o, false)) {
    Json j = Json::object();
    j["steps"] = steps.size();
    j["gauss_code"] = serialize(final_diagram);
    j["checked"] = o.check;
    out << j.dump() << '\n';
  } else {
    out << serialize(final_diagram) << '\n';
  }
  return violated ? kPropertyViolation : kSuccess;
}

// Polynomials such as "-t^3" look like short flags to the parser, so the
// positional arguments of `realize` are moved behind "--".
std::vector<std::string> protect_polynomials(const std::vector<std::string>& args) {
  const auto sub = std::find(args.begin(), args.end(), "realize");
  if (sub == args.end()) {
    return args;
  }
  static const std::vector<std::string> kValued{"--format", "--seed", "--count", "--max-chords",
                                                "--jobs"};
  std::vector<std::string> out(args.begin(), sub + 1);
  std::vector<std::string> positional;
  for (auto it = sub + 1; it != args.end(); ++it) {
    if (*it == "--") {
      positional.insert(positional.end(), it + 1, args.end());
      break;
    }
    const bool option = *it == "-h" || (it->size() > 1 && it->rfind("--", 0) == 0);
    if (!option) {
      positional.push_back(*it);
      continue;
    }
    out.push_back(*it);
    if (std::find(kValued.begin(), kValued.end(), *it) != kValued.end() && it + 1 != args.end()) {
      out.push_back(*++it);
    }
  }
  if (!positional.empty()) {
    out.push_back("--");
    out.insert(out.end(), positional.begin(), positional.end());
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Invariants of long virtual knots given as Gauss diagrams", "vknot"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("VKNOT_FORMAT");
  app.add_option("--seed", o.seed, "Random seed")->envname("VKNOT_SEED");
  app.add_option("--count", o.count, "Number of cases or diagrams")->envname("VKNOT_COUNT");
  app.add_option("--max-chords", o.max_chords, "Chord-count cap")->envname("VKNOT_MAX_CHORDS");
  app.add_option("--jobs", o.jobs, "Worker threads for compute")
      ->check(CLI::PositiveNumber)
      ->envname("VKNOT_JOBS");
  app.add_flag("--check", o.check, "Recompute and confirm results")->envname("VKNOT_CHECK");

  auto* compute = app.add_subcommand("compute", "Invariant report for each input diagram");
  compute->add_option("inputs", o.inputs, "Files with one Gauss code per line ('-' for stdin)");
  compute->add_option("--code", o.codes, "Inline Gauss code (repeatable)");

  auto* verify = app.add_subcommand("verify", "Run a randomized property suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("suite", o.suite, "Suite name or 'all'")->check(CLI::IsMember(suites));

  auto* realize_cmd = app.add_subcommand("realize", "Diagram with prescribed V1 and V2");
  realize_cmd->add_option("f", o.f, "V1 polynomial, e.g. '-t^3-2*t'")->required();
  realize_cmd->add_option("g", o.g, "V2 polynomial (default 0)");

  auto* bound = app.add_subcommand("delta-bound", "Lower bound on the Delta-move distance");
  bound->add_option("inputs", o.inputs, "Two files, one diagram each")->expected(2)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Every diagram with n chords");
  enumerate->add_option("n", o.chords_exact, "Chord count")->required();

  auto* random = app.add_subcommand("random", "Random diagrams or a random move walk");
  random->add_option("--chords", o.chords, "Exact chord count (default: uniform in 0..max-chords)");
  random->add_option("--walk", o.walk, "Emit the transcript of a walk of this length");
  random->add_option("--moves", o.moves, "Comma-separated move kinds for --walk");
  random->add_option("--start", o.start, "Start diagram for --walk");

  auto* replay_cmd = app.add_subcommand("replay", "Re-apply a walk transcript");
  replay_cmd->add_option("transcript", o.transcript, "Transcript file ('-' for stdin)");

  const std::vector<std::string> effective = protect_polynomials(args);
  std::vector<const char*> argv;
  for (const auto& a : effective) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  // CLI11 drops environment values that fail validation; report them instead.
  for (const CLI::Option* opt : app.get_options()) {
    const std::string& name = opt->get_envname();
    const char* value = name.empty() ? nullptr : std::getenv(name.c_str());
    if (value != nullptr && *value != '\0' && opt->count() == 0) {
      err << "error: " << name << ": invalid value '" << value << "'\n";
      return kInputError;
    }
  }

  try {
    if (compute->parsed()) {
      return cmd_compute(o, in, out, err);
    }
    if (verify->parsed()) {
      return cmd_verify(o, out, err);
    }
    if (realize_cmd->parsed()) {
      return cmd_realize(o, out, err);
    }
    if (bound->parsed()) {
      return cmd_delta_bound(o, in, out);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(o, out);
    }
    if (random->parsed()) {
      return cmd_random(o, out);
    }
    if (replay_cmd->parsed()) {
      return cmd_replay(o, in, out, err);
    }
  } catch (const Failure& f) {
    out.flush();
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const MoveError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kInternalFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalFailure;
  }
  return kInputError;
}

}  // namespace vknot::cli
