// nas: generate and check maximal negative-avoiding sequences.
//
// Exit codes: 0 success / valid, 1 verification failure, 2 usage or parse
// error, 3 resource guard.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nas/construct.hpp"
#include "nas/error.hpp"
#include "nas/format.hpp"
#include "nas/verify.hpp"
#include "nas/weight_sets.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int exit_code_for(nas::ErrorKind kind) {
  return kind == nas::ErrorKind::SearchSpaceTooLarge ? kExitResource : kExitUsage;
}

std::string render(const nas::CyclicSequence& s, const std::string& format) {
  if (format == "compact") return nas::format_compact(s.symbols());
  return nas::format_csv(s.symbols());
}

std::string render_any(const nas::CyclicSequence& s) {
  return s.k() <= 10 ? nas::format_compact(s.symbols()) : nas::format_csv(s.symbols());
}

void print_report(std::ostream& out, const nas::VerifyReport& r, std::uint32_t k, std::size_t n) {
  out << "k=" << k << " n=" << n << " period=" << r.period << " bound=" << r.bound << "\n"
      << "window_ok=" << std::boolalpha << r.window_ok << "\n"
      << "nas_ok=" << r.nas_ok << "\n"
      << "maximal=" << r.maximal << "\n";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out << "counterexample=" << nas::to_string(c.kind) << " windows " << c.first_index << " ("
        << nas::format_spaced(c.first_window) << ") and " << c.second_index << " ("
        << nas::format_spaced(c.second_window) << ")\n";
  }
}

struct Options {
  unsigned k = 0;
  std::size_t n = 0;
  std::string format = "compact";
  std::string which = "E";
  std::string pairing = "negation";
  bool dot = false;
  std::string seq;
  std::string file;
};

int run_generate(const Options& o) {
  if (o.format == "compact" && o.k > 10) {
    std::cerr << "error: compact format requires k <= 10\n";
    return kExitUsage;
  }
  const nas::CyclicSequence s = nas::construct_maximal(o.k, o.n);
  if (o.format == "json") {
    const nas::VerifyReport r = nas::is_maximal_nas(s);
    nlohmann::json j;
    j["k"] = o.k;
    j["n"] = o.n;
    j["period"] = s.period();
    j["bound"] = r.bound;
    j["maximal"] = r.maximal;
    j["sequence"] = std::vector<nas::Symbol>(s.symbols().begin(), s.symbols().end());
    std::cout << j.dump() << "\n";
  } else {
    std::cout << render(s, o.format) << "\n";
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  std::string text = o.seq;
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) {
      std::cerr << "error: cannot read " << o.file << "\n";
      return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) {
    std::cerr << "error: pass --seq or --file\n";
    return kExitUsage;
  }
  const nas::CyclicSequence s(o.k, o.n, nas::parse_symbols(text, o.k));
  const nas::VerifyReport r = nas::is_maximal_nas(s);
  print_report(std::cout, r, o.k, o.n);
  return r.nas_ok ? kExitOk : kExitViolation;
}

int run_bound(const Options& o) {
  std::cout << nas::max_period_bound(o.k, o.n) << "\n";
  return kExitOk;
}

int run_dump(const Options& o) {
  nas::Subgraph g = o.which == "E"   ? nas::build_E(o.k, o.n)
                    : o.which == "H" ? nas::build_H(o.k, o.n)
                    : o.which == "W" ? nas::build_W(o.k, o.n)
                                     : nas::build_Z(o.k, o.n);
  std::cout << (o.dot ? nas::dump_dot(g) : nas::dump_edges(g));
  return kExitOk;
}

int run_oracle(const Options& o) {
  const auto pairing = o.pairing == "complement" ? nas::Pairing::Complement : nas::Pairing::Negation;
  const bool binary = pairing == nas::Pairing::Complement;
  const nas::OracleResult r = nas::oracle_max_period(o.k, o.n, pairing, {.collect_all = binary});
  std::cout << "max_period=" << r.max_period << "\n";
  if (r.witness) std::cout << "witness=" << render_any(*r.witness) << "\n";
  if (binary) {
    std::set<std::string> classes;
    for (const auto& s : r.all_maximal) classes.insert(render_any(nas::binary_equivalence_class(s)));
    std::cout << "maximal_sequences=" << r.all_maximal.size() << "\n"
              << "classes_up_to_rotation_reversal_complement=" << classes.size() << "\n";
    for (const auto& c : classes) std::cout << "class=" << c << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal negative-avoiding sequence toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_kn = [&o](CLI::App* cmd) {
    cmd->add_option("--k", o.k, "Alphabet size")->required();
    cmd->add_option("--n", o.n, "Span (window length)")->required();
  };

  auto* generate = app.add_subcommand("generate", "Construct a maximal NAS_k(n)");
  add_kn(generate);
  generate->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"compact", "csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Check a sequence against the NAS properties");
  add_kn(verify);
  verify->add_option("--seq", o.seq, "Sequence, compact (k <= 10) or comma/space separated");
  verify->add_option("--file", o.file, "Read the sequence from a file");

  auto* bound = app.add_subcommand("bound", "Print the maximum possible period");
  add_kn(bound);

  auto* dump = app.add_subcommand("dump", "Print the edges of a construction graph");
  add_kn(dump);
  dump->add_option("--which", o.which, "Edge set")->check(CLI::IsMember({"E", "H", "W", "Z"}));
  dump->add_flag("--dot", o.dot, "Emit Graphviz DOT");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive maximum-period search");
  add_kn(oracle);
  oracle->add_option("--pairing", o.pairing, "Forbidden pairing")
      ->check(CLI::IsMember({"negation", "complement"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return run_generate(o);
    if (*verify) return run_verify(o);
    if (*bound) return run_bound(o);
    if (*dump) return run_dump(o);
    if (*oracle) return run_oracle(o);
  } catch (const nas::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
