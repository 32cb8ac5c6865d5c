// Command-line front end.  Exit codes: 0 success, 1 semantic negative
// (unequal, a failing check, not cartesian), 2 usage or parse error.
//
// A standalone "--" separates word and permutation operands; everything after
// the first "--" is split into raw groups before CLI11 sees the arguments.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "aoperad/acceptance.hpp"
#include "aoperad/braid.hpp"
#include "aoperad/monad.hpp"
#include "aoperad/operad_io.hpp"
#include "aoperad/perm.hpp"
#include "aoperad/product.hpp"
#include "aoperad/pseudocomm.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* const kFormats = R"(Formats:
  braid word    whitespace-separated nonzero integers, k for s_k and -k for its
                inverse, strand count given by -n; the empty word is the identity
  permutation   one-line image, 1-based: "1 3 5 2 4 6"
  --args FILE   one inner braid per line as "K: word" (K strands), '#' comments
  operad FILE   JSON with fields group ("trivial" | "symmetric"), max_arity,
                levels (arity -> labels), action (arity -> one label image list
                per adjacent transposition; absent means trivial), unit, and
                compose records {n, ks, args: [outer, inputs...], result}
  class         [p; x1,...,xn]
Exit codes: 0 success, 1 negative result, 2 usage or parse error.)";

std::string join(const std::vector<std::string>& tokens, const std::string& separator = " ") {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out += (i ? separator : "") + tokens[i];
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    out.push_back(item);
  }
  if (!text.empty() && text.back() == ',') {
    out.emplace_back();
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  for (const auto& item : split_commas(text)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || item.front() == '-' || item.front() == '+') {
      throw aoperad::ParseError("--sizes: '" + item + "' is not a size");
    }
    sizes.push_back(v);
  }
  return sizes;
}

// Inner braids for `braid mu`: one "K: word" per line.
std::vector<aoperad::BraidWord> read_braid_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw aoperad::ParseError(path + ": cannot open file");
  }
  std::vector<aoperad::BraidWord> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto where = path + ":" + std::to_string(number) + ": ";
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw aoperad::ParseError(where + "expected 'K: word'");
    }
    const auto head = line.substr(0, colon);
    std::size_t used = 0;
    unsigned long strands = 0;
    try {
      strands = std::stoul(head, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || head.find_first_not_of(" \t", used) != std::string::npos) {
      throw aoperad::ParseError(where + "'" + head + "' is not a strand count");
    }
    try {
      out.push_back(aoperad::parse_word(line.substr(colon + 1), strands));
    } catch (const aoperad::ParseError& e) {
      throw aoperad::ParseError(where + e.what());
    }
  }
  return out;
}

aoperad::BraidWord word_operand(const std::vector<std::string>& tokens, std::size_t strands, const char* what) {
  try {
    return aoperad::parse_word(join(tokens), strands);
  } catch (const aoperad::ParseError& e) {
    throw aoperad::ParseError(std::string(what) + ": " + e.what());
  }
}

aoperad::Permutation perm_operand(const std::vector<std::string>& tokens, const std::string& what) {
  try {
    return aoperad::parse_permutation(join(tokens));
  } catch (const aoperad::ParseError& e) {
    throw aoperad::ParseError(what + ": " + e.what());
  }
}

int print_report(const aoperad::Report& r) {
  std::cout << r.text();
  return r.all_passed() ? kOk : kNegative;
}

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "es");
}

template <class E>
int operad_free(const aoperad::FiniteGOperad<E>& P, const std::vector<std::string>& carrier, std::size_t bound) {
  bound = std::min(bound, P.max_arity());
  const auto algebra = aoperad::free_algebra(P, carrier.size(), bound);
  std::cout << "free " << P.name() << "-algebra on {" << join(carrier, ", ") << "}, arities <= " << bound << "\n";
  for (std::size_t n = 0; n <= bound; ++n) {
    std::cout << "arity " << n << ": " << plural(algebra.count(n), "class") << "\n";
    for (const auto& c : algebra.classes) {
      if (c.op.arity == n) {
        std::cout << "  " << aoperad::format_class(P, c, std::span<const std::string>(carrier)) << "\n";
      }
    }
  }
  return kOk;
}

template <class E>
int operad_cartesian(const aoperad::FiniteGOperad<E>& P) {
  const auto c = aoperad::cartesian_condition(P);
  if (c.holds) {
    std::cout << "CARTESIAN: YES\n";
    std::cout << "every stabilizer lies in the kernel of the projection, arities <= " << P.max_arity() << "\n";
    return kOk;
  }
  std::cout << "CARTESIAN: NO\n";
  std::cout << "witness: arity " << c.witness->arity << ", label " << c.witness->label << " is fixed by "
            << c.witness->element << ", which projects to a non-identity permutation\n";
  return kNegative;
}

template <class E>
int operad_compose(const aoperad::FiniteGOperad<E>& X, const aoperad::FiniteGOperad<E>& Y, std::size_t bound) {
  const auto XY = aoperad::compose_collections(X.collection, Y.collection, bound);
  std::cout << X.name() << " o " << Y.name() << ", arities <= " << bound << "\n";
  for (std::size_t n = 0; n <= bound; ++n) {
    std::cout << "arity " << n << ": " << plural(XY.collection.size(n), "class") << "\n";
    for (const auto& label : XY.collection.levels[n]) {
      std::cout << "  " << label << "\n";
    }
  }
  return kOk;
}

int verify_all(const aoperad::AcceptanceOptions& options) {
  const auto criteria = aoperad::acceptance_criteria(options);
  std::vector<std::future<aoperad::CriterionResult>> running;
  for (const auto& c : criteria) {
    running.push_back(std::async(std::launch::async, [&c] { return aoperad::run_criterion(c, false); }));
  }
  bool ok = true;
  for (auto& f : running) {
    const auto r = f.get();
    ok = ok && r.passed;
    std::cout << aoperad::format_result(r, false) << "\n";
  }
  return ok ? kOk : kNegative;
}

struct Cli {
  std::vector<std::vector<std::string>> groups;  // operands after each "--"

  std::size_t strands = 0;
  std::vector<std::string> words;
  std::string sizes;
  std::string args_file;
  std::string render_format = "ascii";

  std::vector<std::string> numbers;
  std::size_t m = 0;
  std::size_t n = 0;
  std::string family;
  std::string group;
  std::size_t bound = 3;
  std::uint64_t seed = 1;
  std::size_t budget = 1000;

  std::string file;
  std::string file2;
  std::string carrier;

  void expect_groups(std::size_t count, const std::string& command) const {
    if (groups.size() != count) {
      throw UsageError(command + ": expected " + std::to_string(count) + " '--' separated operand group" +
                       (count == 1 ? "" : "s") + " after the first, got " + std::to_string(groups.size()));
    }
  }
};

int run(int argc, char** argv) {
  Cli cli;
  std::vector<std::string> head;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--") {
      cli.groups.emplace_back();
    } else if (cli.groups.empty()) {
      head.push_back(arg);
    } else {
      cli.groups.back().push_back(arg);
    }
  }

  CLI::App app{"Action operads, G-operads and the braid pseudo-commutativity checks", "aoperad"};
  app.footer(kFormats);
  app.require_subcommand(1);
  std::function<int()> action;

  auto* braid = app.add_subcommand("braid", "braid word computations")->require_subcommand(1);
  auto word_command = [&](const std::string& name, const std::string& description) {
    auto* sub = braid->add_subcommand(name, description);
    sub->add_option("-n", cli.strands, "number of strands")->required();
    sub->add_option("word", cli.words, "braid word");
    return sub;
  };
  word_command("eq", "decide W1 = W2 in the braid group: eq -n N W1 -- W2")->callback([&] {
    action = [&] {
      cli.expect_groups(1, "braid eq");
      const auto u = word_operand(cli.words, cli.strands, "W1");
      const auto v = word_operand(cli.groups[0], cli.strands, "W2");
      const bool same = aoperad::equal(u, v);
      std::cout << (same ? "equal" : "not equal") << "\n";
      return same ? kOk : kNegative;
    };
  });
  word_command("reduce", "handle-reduced form of W")->callback([&] {
    action = [&] {
      cli.expect_groups(0, "braid reduce");
      std::cout << aoperad::format_word(aoperad::handle_reduce(word_operand(cli.words, cli.strands, "W"))) << "\n";
      return kOk;
    };
  });
  word_command("pi", "underlying permutation of W")->callback([&] {
    action = [&] {
      cli.expect_groups(0, "braid pi");
      std::cout << aoperad::format_permutation(
                       aoperad::underlying_permutation(word_operand(cli.words, cli.strands, "W")))
                << "\n";
      return kOk;
    };
  });
  word_command("cable", "replace strand i of W by K_i parallel strands")
      ->callback([&] {
        action = [&] {
          cli.expect_groups(0, "braid cable");
          const auto sizes = parse_sizes(cli.sizes);
          std::cout << aoperad::format_word(aoperad::cable(word_operand(cli.words, cli.strands, "W"), sizes)) << "\n";
          return kOk;
        };
      })
      ->add_option("--sizes", cli.sizes, "block sizes K1,K2,...")
      ->required();
  word_command("mu", "operadic composite mu(W; inner braids from FILE)")
      ->callback([&] {
        action = [&] {
          cli.expect_groups(0, "braid mu");
          const auto fs = read_braid_args(cli.args_file);
          const auto g = word_operand(cli.words, cli.strands, "W");
          if (fs.size() != g.strands()) {
            throw aoperad::ParseError(cli.args_file + ": expected " + std::to_string(g.strands()) +
                                      " inner braids, found " + std::to_string(fs.size()));
          }
          std::cout << aoperad::format_word(aoperad::mu_br(g, fs)) << "\n";
          return kOk;
        };
      })
      ->add_option("--args", cli.args_file, "file of inner braids")
      ->required();
  word_command("render", "draw W")
      ->callback([&] {
        action = [&] {
          cli.expect_groups(0, "braid render");
          const auto w = word_operand(cli.words, cli.strands, "W");
          std::cout << (cli.render_format == "dot" ? aoperad::render_dot(w) : aoperad::render_ascii(w));
          return kOk;
        };
      })
      ->add_option("--format", cli.render_format, "ascii or dot")
      ->check(CLI::IsMember({"ascii", "dot"}));

  auto* perm = app.add_subcommand("perm", "permutation computations")->require_subcommand(1);
  perm->add_subcommand("tau", "the transpose permutation tau(M,N)")
      ->callback([&] {
        action = [&] {
          cli.expect_groups(0, "perm tau");
          std::cout << aoperad::format_permutation(aoperad::tau(cli.m, cli.n)) << "\n";
          return kOk;
        };
      })
      ->add_option("M", cli.m)
      ->required();
  perm->get_subcommand("tau")->add_option("N", cli.n)->required();
  auto perm_command = [&](const std::string& name, const std::string& description) {
    auto* sub = perm->add_subcommand(name, description);
    sub->add_option("permutation", cli.numbers, "one-line image");
    return sub;
  };
  perm_command("inv", "inverse of P")->callback([&] {
    action = [&] {
      cli.expect_groups(0, "perm inv");
      std::cout << aoperad::format_permutation(aoperad::inverse(perm_operand(cli.numbers, "P"))) << "\n";
      return kOk;
    };
  });
  perm_command("compose", "P o Q, Q acting first: compose P -- Q")->callback([&] {
    action = [&] {
      cli.expect_groups(1, "perm compose");
      const auto p = perm_operand(cli.numbers, "P");
      const auto q = perm_operand(cli.groups[0], "Q");
      std::cout << aoperad::format_permutation(aoperad::compose(p, q)) << "\n";
      return kOk;
    };
  });
  perm_command("mu", "operadic composite: mu S -- T1 -- ... -- Tn")->callback([&] {
    action = [&] {
      const auto s = perm_operand(cli.numbers, "S");
      if (cli.groups.size() != s.size()) {
        throw UsageError("perm mu: S has arity " + std::to_string(s.size()) + " but " +
                         std::to_string(cli.groups.size()) + " inputs were given");
      }
      std::vector<aoperad::Permutation> ts;
      for (std::size_t i = 0; i < cli.groups.size(); ++i) {
        ts.push_back(perm_operand(cli.groups[i], "T" + std::to_string(i + 1)));
      }
      std::cout << aoperad::format_permutation(aoperad::mu_sigma(s, ts)) << "\n";
      return kOk;
    };
  });

  auto* tmn = app.add_subcommand("tmn", "the braid t(M,N) of a pseudo-commutative family");
  tmn->add_option("--family", cli.family, "positive or negative")
      ->required()
      ->check(CLI::IsMember({"positive", "negative"}));
  tmn->add_option("M", cli.m)->required();
  tmn->add_option("N", cli.n)->required();
  tmn->callback([&] {
    action = [&] {
      cli.expect_groups(0, "tmn");
      const auto t = cli.family == "positive" ? aoperad::t_positive(cli.m, cli.n) : aoperad::t_negative(cli.m, cli.n);
      std::cout << aoperad::format_word(t) << "\n";
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "run verification suites")->require_subcommand(1);
  auto* pscomm = verify->add_subcommand("pscomm", "pseudo-commutativity report for braid or symmetric groups");
  pscomm->add_option("--group", cli.group, "braid or symmetric")
      ->required()
      ->check(CLI::IsMember({"braid", "symmetric"}));
  pscomm->add_option("--bound", cli.bound, "index bound B >= 1")->check(CLI::Range(1, 4));
  pscomm->callback([&] {
    action = [&] {
      cli.expect_groups(0, "verify pscomm");
      const auto r = cli.group == "braid" ? aoperad::braid_theorem_report(cli.bound)
                                          : aoperad::symmetric_theorem_report(cli.bound);
      return print_report(r);
    };
  });
  auto* all = verify->add_subcommand("all", "every acceptance suite, one PASS/FAIL line each");
  all->add_option("--seed", cli.seed, "seed for randomized suites");
  all->add_option("--budget", cli.budget, "random instances per randomized suite")->check(CLI::Range(1, 1000000));
  all->callback([&] {
    action = [&] {
      cli.expect_groups(0, "verify all");
      return verify_all({cli.seed, cli.budget});
    };
  });

  auto* operad = app.add_subcommand("operad", "finite G-operads from definition files")->require_subcommand(1);
  operad->add_subcommand("check", "operad axioms of FILE")->callback([&] {
    action = [&] {
      cli.expect_groups(0, "operad check");
      return std::visit([](const auto& P) { return print_report(aoperad::check_operad(P)); },
                        aoperad::load_operad_file(cli.file));
    };
  });
  operad->add_subcommand("free", "free algebra classes on a carrier")->callback([&] {
    action = [&] {
      cli.expect_groups(0, "operad free");
      const auto carrier = split_commas(cli.carrier);
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        if (carrier[i].empty() || std::count(carrier.begin(), carrier.begin() + i, carrier[i]) != 0) {
          throw UsageError("--carrier: element " + std::to_string(i + 1) + " ('" + carrier[i] +
                           "') is empty or repeated");
        }
      }
      return std::visit([&](const auto& P) { return operad_free(P, carrier, cli.bound); },
                        aoperad::load_operad_file(cli.file));
    };
  });
  operad->add_subcommand("cartesian", "is the free-algebra monad cartesian")->callback([&] {
    action = [&] {
      cli.expect_groups(0, "operad cartesian");
      return std::visit([](const auto& P) { return operad_cartesian(P); }, aoperad::load_operad_file(cli.file));
    };
  });
  operad->add_subcommand("compose", "composition product of two collections")->callback([&] {
    action = [&] {
      cli.expect_groups(0, "operad compose");
      const auto x = aoperad::load_operad_file(cli.file);
      const auto y = aoperad::load_operad_file(cli.file2);
      if (x.index() != y.index()) {
        throw UsageError("operad compose: the two files declare different groups");
      }
      return std::visit(
          [&](const auto& X) {
            using P = std::decay_t<decltype(X)>;
            return operad_compose(X, std::get<P>(y), cli.bound);
          },
          x);
    };
  });
  for (auto* sub : operad->get_subcommands({})) {
    sub->add_option("FILE", cli.file, "operad definition file")->required();
  }
  operad->get_subcommand("free")->add_option("--carrier", cli.carrier, "carrier elements a,b,...")->required();
  operad->get_subcommand("free")->add_option("--bound", cli.bound, "largest arity")->check(CLI::Range(0, 8));
  operad->get_subcommand("compose")->add_option("FILE_Y", cli.file2, "second operad definition file")->required();
  operad->get_subcommand("compose")
      ->add_option("--bound", cli.bound, "largest arity")
      ->check(CLI::Range(0, static_cast<int>(aoperad::kMaxProductBound)));

  try {
    std::reverse(head.begin(), head.end());
    app.parse(head);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return action();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const aoperad::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
