#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "document.hpp"
#include "leapcycles/constructor.hpp"
#include "leapcycles/leaper.hpp"
#include "leapcycles/oracle.hpp"
#include "leapcycles/verifier.hpp"

namespace leapcycles::cli {

namespace {

constexpr const char* kMaxDimEnv = "LEAPER_CYCLES_MAX_K";

class UsageError : public Error {
 public:
  using Error::Error;
};

unsigned resolve_max_dim(const std::optional<unsigned>& flag) {
  if (flag) {
    if (*flag == 0 || *flag > kWordBits) {
      throw UsageError("--max-k must be in [1, " + std::to_string(kWordBits) + "]");
    }
    return *flag;
  }
  if (const char* env = std::getenv(kMaxDimEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > kWordBits) {
      throw UsageError(std::string(kMaxDimEnv) + " must be an integer in [1, " + std::to_string(kWordBits) + "]");
    }
    return static_cast<unsigned>(v);
  }
  return kDefaultMaxDim;
}

std::string leaper_label(const LeaperSpec& spec) {
  if (spec.name()) return *spec.name();
  if (auto n = leaper_name(spec.a(), spec.b())) return std::string(*n);
  return "(" + std::to_string(spec.a()) + "," + std::to_string(spec.b()) + ")";
}

// Leaper from --leaper/--name or --a/--b; nullopt when neither is given.
std::optional<LeaperSpec> leaper_from(const std::string& name, const std::optional<unsigned>& a,
                                      const std::optional<unsigned>& b) {
  if (!name.empty()) {
    if (a || b) throw UsageError("give either a leaper name or --a/--b, not both");
    return leaper_by_name(name);
  }
  if (a.has_value() != b.has_value()) throw UsageError("--a and --b must be given together");
  if (!a) return std::nullopt;
  if (*a > *b) return LeaperSpec(*b, *a);
  return LeaperSpec(*a, *b);
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + output + "' for writing");
  f << text;
  if (!f) throw UsageError("failed writing '" + output + "'");
}

std::string render(const CycleDocument& doc, const std::string& format) {
  if (format == "json") {
    CycleDocument ints = doc;
    ints.encoding = Encoding::Ints;
    return write_json(ints);
  }
  CycleDocument copy = doc;
  copy.encoding = format == "ints" ? Encoding::Ints : Encoding::Tuples;
  return write_text(copy);
}

struct ConstructArgs {
  std::optional<unsigned> k, h, a, b, max_k;
  std::string leaper, format = "tuples", output;
};

int do_construct(const ConstructArgs& args, std::ostream& out) {
  const unsigned max_dim = resolve_max_dim(args.max_k);
  const auto leaper = leaper_from(args.leaper, args.a, args.b);
  if (leaper && args.h) throw UsageError("--h conflicts with a leaper choice");
  if (!leaper && !args.h) throw UsageError("construct needs --h or a leaper (--leaper, --a/--b)");
  const Dimension k(*args.k);
  const StepClass h = leaper ? leaper_step(*leaper) : StepClass(*args.h);

  // Leaper parity verdicts are stated for the piece, not for h alone.
  if (leaper) {
    auto verdict = leaper_feasible(*leaper, k);
    if (!verdict.feasible()) {
      out << "infeasible " << to_string(verdict.status) << ": " << verdict.detail << "\n";
      return kExitNegative;
    }
  }
  auto result = construct(k, h, max_dim);
  if (auto* verdict = std::get_if<FeasibilityVerdict>(&result)) {
    out << "infeasible " << to_string(verdict->status) << ": " << verdict->detail << "\n";
    return kExitNegative;
  }
  const auto& cert = std::get<CycleCertificate>(result);
  CycleDocument doc{k.value(), h.value(), Encoding::Tuples,
                    std::vector<Word>(cert.path.words().begin(), cert.path.words().end()), true};
  emit(render(doc, args.format), args.output, out);
  if (!args.output.empty()) {
    out << "wrote k=" << doc.k << " h=" << doc.h << " vertices=" << doc.cycle.size() << " to " << args.output
        << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::optional<unsigned> h, max_k;
  std::string input;
};

int do_verify(const VerifyArgs& args, std::ostream& out) {
  const unsigned max_dim = resolve_max_dim(args.max_k);
  std::ifstream f(args.input, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + args.input + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const CycleDocument doc = parse_document(buf.str());
  const Dimension k(doc.k);
  require_capacity(k, max_dim);
  const StepClass h(args.h.value_or(doc.h));
  const auto report = verify_cycle(k, doc.cycle, h);
  out << (report.valid ? "valid" : "invalid") << " k=" << doc.k << " h=" << h.value()
      << " vertices=" << doc.cycle.size();
  if (!report.valid) out << " violations=" << report.violations.size();
  out << "\n";
  for (const auto& v : report.violations) out << "  " << describe(v) << "\n";
  return report.valid ? kExitOk : kExitNegative;
}

struct OracleArgs {
  std::optional<unsigned> k, h;
  bool count = false, witness = false;
  unsigned threads = 1;
  std::string format = "tuples", output;
};

int do_oracle(const OracleArgs& args, std::ostream& out) {
  const Dimension k(*args.k);
  const StepClass h(*args.h);
  OracleOptions options;
  options.threads = args.threads;

  std::optional<std::uint64_t> count;
  std::uint64_t nodes = 0;
  bool exists = false;
  std::optional<VertexPath> witness;
  if (args.count) {
    const auto r = oracle_count(k, h, options);
    count = r.count;
    exists = r.exists;
    nodes = r.nodes_explored;
  }
  if (!args.count || args.witness) {
    auto r = oracle_exists(k, h, args.witness, options);
    exists = r.exists;
    if (!args.count) nodes = r.nodes_explored;
    witness = std::move(r.witness);
  }
  out << "k=" << k.value() << " h=" << h.value() << " exists=" << (exists ? "true" : "false");
  if (count) out << " count=" << *count;
  out << " nodes_explored=" << nodes << "\n";
  if (witness) {
    const bool valid = verify_cycle(*witness, h).valid;
    CycleDocument doc{k.value(), h.value(), Encoding::Tuples,
                      std::vector<Word>(witness->words().begin(), witness->words().end()), true};
    out << "witness verified=" << (valid ? "true" : "false") << "\n";
    emit(render(doc, args.format), args.output, out);
  }
  return exists ? kExitOk : kExitNegative;
}

struct LeaperArgs {
  std::optional<unsigned> a, b, k;
  std::string name;
};

int do_leaper(const LeaperArgs& args, std::ostream& out) {
  const auto spec = leaper_from(args.name, args.a, args.b);
  if (!spec) {
    if (args.k) throw UsageError("--k needs a leaper (--name or --a/--b)");
    out << std::left << std::setw(12) << "name" << " a b  h min_k\n";
    for (const auto& e : leaper_catalog()) {
      const LeaperSpec s(e.a, e.b, std::string(e.name));
      const auto kmin = min_dimension(s);
      out << std::left << std::setw(12) << e.name << " " << e.a << " " << e.b << " " << std::right << std::setw(2)
          << leaper_step(s).value() << " " << (kmin ? std::to_string(*kmin) : "never") << "\n";
    }
    return kExitOk;
  }
  const unsigned h = leaper_step(*spec).value();
  out << "leaper=" << leaper_label(*spec) << " a=" << spec->a() << " b=" << spec->b() << " h=" << h;
  if (!args.k) {
    const auto verdict = leaper_verdict(*spec);
    out << " min_k=" << (verdict.min_dim ? std::to_string(*verdict.min_dim) : "never") << "\n";
    out << "reason: " << verdict.reason << "\n";
    return verdict.min_dim ? kExitOk : kExitNegative;
  }
  const auto verdict = leaper_feasible(*spec, Dimension(*args.k));
  out << " k=" << *args.k << " status=" << to_string(verdict.status) << "\n";
  out << "reason: " << verdict.detail << "\n";
  return verdict.feasible() ? kExitOk : kExitNegative;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed change-h Hamiltonian cycles in {0,1}^k and fairy-chess leaper tours", "leaper-cycles"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  ConstructArgs cargs;
  auto* construct_cmd = app.add_subcommand("construct", "Build a verified change-h Hamiltonian cycle");
  construct_cmd->add_option("--k", cargs.k, "Dimension k")->required();
  construct_cmd->add_option("--h", cargs.h, "Coordinates flipped per move");
  construct_cmd->add_option("--leaper", cargs.leaper, "Catalog leaper name (h = a^2+b^2)");
  construct_cmd->add_option("--a", cargs.a, "Leaper component a");
  construct_cmd->add_option("--b", cargs.b, "Leaper component b");
  construct_cmd->add_option("--format", cargs.format, "Output format")
      ->check(CLI::IsMember({"tuples", "ints", "json"}));
  construct_cmd->add_option("--output", cargs.output, "Write the document here instead of stdout");
  construct_cmd->add_option("--max-k", cargs.max_k, "Override the dimension cap");

  VerifyArgs vargs;
  auto* verify_cmd = app.add_subcommand("verify", "Check a cycle document");
  verify_cmd->add_option("input", vargs.input, "Cycle document (text or JSON)")->required();
  verify_cmd->add_option("--h", vargs.h, "Step class; defaults to the document header");
  verify_cmd->add_option("--max-k", vargs.max_k, "Override the dimension cap");

  OracleArgs oargs;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force search at small k");
  oracle_cmd->add_option("--k", oargs.k, "Dimension k")->required();
  oracle_cmd->add_option("--h", oargs.h, "Coordinates flipped per move")->required();
  oracle_cmd->add_flag("--count", oargs.count, "Count undirected cycles");
  oracle_cmd->add_flag("--witness", oargs.witness, "Print the first cycle found");
  oracle_cmd->add_option("--threads", oargs.threads, "Worker threads (results do not depend on it)")
      ->check(CLI::Range(1U, 256U));
  oracle_cmd->add_option("--format", oargs.format, "Witness format")->check(CLI::IsMember({"tuples", "ints", "json"}));
  oracle_cmd->add_option("--output", oargs.output, "Write the witness here instead of stdout");

  LeaperArgs largs;
  auto* leaper_cmd = app.add_subcommand("leaper", "Leaper feasibility; lists the catalog without arguments");
  leaper_cmd->add_option("--name,--leaper", largs.name, "Catalog leaper name");
  leaper_cmd->add_option("--a", largs.a, "Leaper component a");
  leaper_cmd->add_option("--b", largs.b, "Leaper component b");
  leaper_cmd->add_option("--k", largs.k, "Dimension to decide");

  std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (construct_cmd->parsed()) return do_construct(cargs, out);
    if (verify_cmd->parsed()) return do_verify(vargs, out);
    if (oracle_cmd->parsed()) return do_oracle(oargs, out);
    if (leaper_cmd->parsed()) return do_leaper(largs, out);
  } catch (const ParseError& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace leapcycles::cli
