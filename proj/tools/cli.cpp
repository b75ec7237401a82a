#include "cli.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "itenc/codec.hpp"
#include "itenc/enumerate.hpp"
#include "itenc/lba.hpp"
#include "itenc/perm.hpp"
#include "itenc/stack_machine.hpp"

namespace itenc::cli {

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// "132" (one digit per rank) or "1 3 2" for patterns longer than nine.
Permutation parse_pattern(const std::string& text) {
  if (text.find(' ') != std::string::npos) return parse_permutation(text);
  if (text.empty()) throw std::invalid_argument("empty pattern");
  std::string spaced;
  for (char c : text) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad pattern token '" + text + "'");
    if (!spaced.empty()) spaced += ' ';
    spaced += c;
  }
  try {
    return parse_permutation(spaced);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("pattern '" + text + "' is not a permutation of 1.." +
                                std::to_string(text.size()));
  }
}

Basis parse_basis(const std::string& pattern, const std::string& list) {
  std::vector<Permutation> patterns;
  if (!pattern.empty()) patterns.push_back(parse_pattern(pattern));
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) patterns.push_back(parse_pattern(item));
  if (patterns.empty()) throw std::invalid_argument("no pattern given (use --pattern or --basis)");
  return Basis(std::move(patterns));
}

Codeword legal_codeword(const std::string& text) {
  Codeword w = parse_codeword(text);
  if (const auto v = validate(w); !v) throw IllegalCodeword(w, v.reason);
  return w;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad size range '" + text + "'");
  }
}

const char* verdict(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Insert-and-translate encoding of permutations and its tape acceptors", "itenc"};
  app.require_subcommand(1, 1);

  std::string word;
  auto* decode_cmd = app.add_subcommand("decode", "Print the permutation a codeword builds");
  decode_cmd->add_option("codeword", word)->required();

  std::vector<std::string> perm_tokens;
  auto* encode_cmd = app.add_subcommand("encode", "Print the codeword of a permutation");
  encode_cmd->add_option("perm", perm_tokens, "ranks, e.g. 3 4 2 1 5")->required();

  bool trace = false;
  std::string machine = "direct";
  auto* validate_cmd = app.add_subcommand("validate", "Decide codeword legality");
  validate_cmd->add_option("codeword", word)->required();
  validate_cmd->add_option("--machine", machine)->check(CLI::IsMember({"direct", "lba", "stack"}));
  validate_cmd->add_flag("--trace", trace, "machine trace on standard error");

  std::string pattern, basis_list, perm_text;
  bool oracle = false;
  auto* check_cmd = app.add_subcommand("check", "Decide whether a codeword avoids a basis");
  check_cmd->add_option("--pattern", pattern);
  check_cmd->add_option("--basis", basis_list, "comma-separated patterns, e.g. 123,3142");
  check_cmd->add_option("codeword", word);
  auto* perm_opt = check_cmd->add_option("--perm", perm_text);
  check_cmd->add_flag("--oracle", oracle, "use the brute-force containment oracle");
  check_cmd->add_flag("--trace", trace, "tape trace on standard error");

  std::size_t n_max = 0;
  bool csv = false, json = false;
  unsigned jobs = 1;
  std::size_t cap = 8;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count avoiders by length, two ways");
  enumerate_cmd->add_option("--basis", basis_list)->required();
  enumerate_cmd->add_option("--n-max", n_max)->required();
  auto* csv_flag = enumerate_cmd->add_flag("--csv", csv);
  enumerate_cmd->add_flag("--json", json)->excludes(csv_flag);
  enumerate_cmd->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));
  enumerate_cmd->add_option("--cap", cap, "largest length either path may enumerate");

  std::size_t n = 0;
  std::size_t bivariate_cap = 10;
  auto* bivariate_cmd = app.add_subcommand("bivariate", "Codewords by number of t letters");
  bivariate_cmd->add_option("--n", n)->required();
  bivariate_cmd->add_option("--cap", bivariate_cap);

  std::string sim_machine;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run the primes or partition machine");
  simulate_cmd->add_option("--machine", sim_machine)
      ->required()
      ->check(CLI::IsMember({"primes", "partitions"}));
  simulate_cmd->add_option("--n", n);
  simulate_cmd->add_option("--word", word);
  simulate_cmd->add_flag("--trace", trace);

  std::string suite, sizes = "10..40";
  auto* bench_cmd = app.add_subcommand("bench", "Tape steps and cells per input size");
  bench_cmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"legality", "compare", "avoid"}));
  bench_cmd->add_option("--sizes", sizes, "a..b");
  bench_cmd->add_option("--pattern", pattern, "pattern for the avoid suite (default 12)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  std::ostream* tr = trace ? &err : nullptr;
  try {
    if (*decode_cmd) {
      out << to_string(decode(legal_codeword(word))) << '\n';
      return kAccept;
    }

    if (*encode_cmd) {
      std::string joined;
      for (const auto& t : perm_tokens) joined += t + ' ';
      out << encode(parse_permutation(joined)).str() << '\n';
      return kAccept;
    }

    if (*validate_cmd) {
      const Codeword w = parse_codeword(word);
      const auto direct = validate(w);
      bool legal = direct.legal;
      if (machine == "lba") legal = lba::tape_check_legal(w, tr).value;
      if (machine == "stack") legal = stackauto::accepts_E(w.str(), tr);
      if (legal)
        out << "true\n";
      else
        out << "false " << reason_code(direct.reason) << '\n';
      return legal ? kAccept : kReject;
    }

    if (*check_cmd) {
      const Basis basis = parse_basis(pattern, basis_list);
      if ((perm_opt->count() > 0) == !word.empty())
        throw InputError("check takes exactly one of <codeword> or --perm");
      bool avoids = false;
      if (perm_opt->count()) {
        const Permutation p = parse_permutation(perm_text);
        avoids = oracle || p.empty() ? avoids_basis(p, basis)
                                     : lba::tape_accepts_basis(encode(p), basis, tr).value;
      } else {
        const Codeword w = legal_codeword(word);
        avoids = oracle ? avoids_basis(decode(w), basis) : lba::tape_accepts_basis(w, basis, tr).value;
      }
      out << (avoids ? "avoid" : "contain") << '\n';
      return avoids ? kAccept : kReject;
    }

    if (*enumerate_cmd) {
      const Basis basis = parse_basis("", basis_list);
      const auto table = sequence(basis, n_max, {cap, cap}, jobs);
      if (csv) {
        out << table.to_csv();
      } else if (json) {
        out << table.to_json();
      } else {
        out << "n\tbrute\tcodeword\n";
        for (const auto& r : table.rows())
          out << r.n << '\t' << r.bruteforce << '\t' << r.via_codewords << '\n';
      }
      return kAccept;
    }

    if (*bivariate_cmd) {
      if (n == 0) throw InputError("--n must be positive");
      out << bivariate_csv(count_codewords_bivariate(n, bivariate_cap));
      return kAccept;
    }

    if (*simulate_cmd) {
      if (sim_machine == "primes") {
        if (n == 0) throw InputError("--machine primes needs --n >= 1");
        const auto run = lba::tape_is_prime(n, tr);
        out << verdict(run.value) << " steps=" << run.metrics.steps
            << " cells=" << run.metrics.max_cells_touched << '\n';
        return run.value ? kAccept : kReject;
      }
      const bool ok = stackauto::accepts_partition_lang(word, tr);
      out << verdict(ok) << '\n';
      return ok ? kAccept : kReject;
    }

    if (*bench_cmd) {
      const auto [lo, hi] = parse_range(sizes);
      if (lo == 0 || lo > hi || (suite == "compare" && lo < 2))
        throw InputError("bad size range '" + sizes + "'");
      const Permutation q = parse_pattern(pattern.empty() ? "12" : pattern);
      out << "size,steps,max_cells\n";
      for (std::size_t size = lo; size <= hi; ++size) {
        const Codeword w = lba::scaling_word(size);
        TapeMetrics m;
        if (suite == "legality") m = lba::tape_check_legal(w).metrics;
        if (suite == "compare") m = lba::tape_compare(w, 0, w.size() - 1).metrics;
        if (suite == "avoid") m = lba::tape_accepts_avoiding(w, q).metrics;
        out << size << ',' << m.steps << ',' << m.max_cells_touched << '\n';
      }
      return kAccept;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace itenc::cli
