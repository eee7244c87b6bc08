#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bsq/bs.hpp"
#include "bsq/classify.hpp"
#include "bsq/homsearch.hpp"
#include "bsq/quandle.hpp"
#include "bsq/word.hpp"

// Exit codes: 0 success/affirmative, 1 negative verdict, 2 usage or parse
// error, 3 resource limit.
namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

bsq::BsPresentation presentation(std::int64_t m, std::int64_t n) {
  return bsq::BsPresentation(m, n);  // rejects zero parameters
}

bsq::PinchOrder order_from_name(const std::string& name) {
  if (name == "left") return bsq::PinchOrder::LeftmostFirst;
  if (name == "right") return bsq::PinchOrder::RightmostFirst;
  throw std::invalid_argument("order must be 'left' or 'right'");
}

int run_reduce(std::int64_t m, std::int64_t n, const std::string& word,
               const std::string& file, const std::string& order) {
  bsq::BsPresentation p = presentation(m, n);
  bsq::PinchOrder ord = order_from_name(order);
  if (!file.empty()) {
    std::ifstream stream;
    std::istream* in = &std::cin;
    if (file != "-") {
      stream.open(file);
      if (!stream) throw std::invalid_argument("cannot open file: " + file);
      in = &stream;
    }
    std::string line;
    while (std::getline(*in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::cout << bsq::render_word(bsq::pinch_reduce(bsq::parse_word(line), p, ord))
                << '\n';
    }
    return kExitOk;
  }
  std::cout << bsq::render_word(bsq::pinch_reduce(bsq::parse_word(word), p, ord))
            << '\n';
  return kExitOk;
}

int run_eq(std::int64_t m, std::int64_t n, const std::string& w1,
           const std::string& w2) {
  bsq::BsPresentation p = presentation(m, n);
  bool eq = bsq::equal(bsq::parse_word(w1), bsq::parse_word(w2), p);
  std::cout << (eq ? "equal" : "not-equal") << '\n';
  return eq ? kExitOk : kExitNegative;
}

int run_classify(std::int64_t m, std::int64_t n) {
  std::cout << bsq::render_classification(bsq::classify(m, n));
  return kExitOk;
}

int run_separate(std::int64_t m, std::int64_t n, const std::string& w1,
                 const std::string& w2, int dmax) {
  bsq::BsPresentation p = presentation(m, n);
  auto witness =
      bsq::separate(bsq::parse_word(w1), bsq::parse_word(w2), p, dmax);
  if (!witness) {
    std::cout << "none found\n";
    return kExitNegative;
  }
  std::cout << "degree=" << witness->degree << '\n';
  std::cout << "alpha=" << bsq::render_perm(witness->alpha) << '\n';
  std::cout << "beta=" << bsq::render_perm(witness->beta) << '\n';
  return kExitOk;
}

int run_witness(const std::string& kind, std::int64_t m, std::int64_t n,
                std::int64_t window) {
  bsq::WitnessReport report;
  if (kind == "case1")
    report = bsq::verify_case1_witness(presentation(m, n));
  else if (kind == "case2")
    report = bsq::verify_case2_witness(presentation(m, n));
  else if (kind == "conjz")
    report = bsq::conj_z_demo(window);
  else
    throw std::invalid_argument("witness kind must be case1, case2 or conjz");
  std::cout << report.render();
  return report.pass() ? kExitOk : kExitNegative;
}

int run_axioms(const std::string& file) {
  std::ifstream stream;
  std::istream* in = &std::cin;
  if (file != "-") {
    stream.open(file);
    if (!stream) throw std::invalid_argument("cannot open file: " + file);
    in = &stream;
  }
  bsq::FiniteQuandle q = bsq::read_quandle(*in);
  bsq::AxiomReport report = bsq::check_axioms(q);
  std::cout << "size=" << q.size << '\n';
  for (const auto& f : report.failures) {
    std::cout << "violation=axiom" << f.axiom << " x=" << f.x;
    if (f.y >= 0) std::cout << " y=" << f.y;
    if (f.z >= 0) std::cout << " z=" << f.z;
    std::cout << '\n';
  }
  std::cout << "result=" << (report.pass() ? "pass" : "fail") << '\n';
  return report.pass() ? kExitOk : kExitNegative;
}

int run_genquandle(const std::string& kind, const std::vector<std::int64_t>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("wrong number of parameters for " + kind);
  };
  bsq::FiniteQuandle q;
  if (kind == "trivial") {
    need(1);
    q = bsq::trivial_quandle(static_cast<int>(params[0]));
  } else if (kind == "conj-cyclic") {
    need(1);
    q = bsq::conj_quandle(bsq::cyclic_group(static_cast<int>(params[0])));
  } else if (kind == "conj-sym") {
    need(1);
    q = bsq::conj_quandle(bsq::symmetric_group(static_cast<int>(params[0])));
  } else if (kind == "dehn-sym") {
    need(2);
    auto dehn = bsq::dehn_quandle_finite(
        bsq::symmetric_group(static_cast<int>(params[0])),
        {static_cast<int>(params[1])});
    q = dehn.quandle;
  } else {
    throw std::invalid_argument(
        "kind must be trivial, conj-cyclic, conj-sym or dehn-sym");
  }
  bsq::write_quandle(std::cout, q);
  return kExitOk;
}

int run_closure(std::int64_t m, std::int64_t n, int depth, std::int64_t limit,
                const std::vector<std::string>& words) {
  bsq::BsPresentation p = presentation(m, n);
  std::vector<bsq::GroupWord> gens;
  for (const auto& w : words) gens.push_back(bsq::parse_word(w));
  bsq::ClosureLimits limits;
  if (limit > 0) limits.max_elements = static_cast<std::size_t>(limit);
  for (const auto& e : bsq::bounded_closure_bs(p, gens, depth, limits))
    std::cout << bsq::render_word(e) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problem, quandle and residual-finiteness toolkit for "
               "Baumslag-Solitar groups"};
  app.require_subcommand(1);

  std::int64_t m = 0, n = 0, window = 10, limit = 0;
  int dmax = 4, depth = 1;
  std::string word, word2, file, order = "left", kind;
  std::vector<std::string> words;
  std::vector<std::int64_t> params;

  CLI::App* reduce = app.add_subcommand("reduce", "pinch-reduce a word");
  reduce->add_option("-m", m, "relation exponent m")->required();
  reduce->add_option("-n", n, "relation exponent n")->required();
  reduce->add_option("word", word, "word over a, b");
  reduce->add_option("--file", file, "read words line by line ('-' = stdin)");
  reduce->add_option("--order", order, "pinch scan order: left or right");

  CLI::App* eq = app.add_subcommand("eq", "decide equality of two words");
  eq->add_option("-m", m, "relation exponent m")->required();
  eq->add_option("-n", n, "relation exponent n")->required();
  eq->add_option("word1", word, "left word")->required();
  eq->add_option("word2", word2, "right word")->required();

  CLI::App* classify = app.add_subcommand("classify", "residual finiteness and Hopf classification");
  classify->add_option("m", m, "relation exponent m")->required();
  classify->add_option("n", n, "relation exponent n")->required();

  CLI::App* separate = app.add_subcommand("separate", "search a finite quotient separating two words");
  separate->add_option("-m", m, "relation exponent m")->required();
  separate->add_option("-n", n, "relation exponent n")->required();
  separate->add_option("word1", word, "first word")->required();
  separate->add_option("word2", word2, "second word")->required();
  separate->add_option("--dmax", dmax, "largest degree to try");

  CLI::App* witness = app.add_subcommand("witness", "verify a non-injectivity witness report");
  witness->add_option("kind", kind, "case1, case2 or conjz")->required();
  witness->add_option("-m", m, "relation exponent m");
  witness->add_option("-n", n, "relation exponent n");
  witness->add_option("-N", window, "window radius for conjz");

  CLI::App* axioms = app.add_subcommand("axioms", "check the quandle axioms on a table file");
  axioms->add_option("file", file, "quandle file ('-' = stdin)")->required();

  CLI::App* genquandle = app.add_subcommand("genquandle", "emit a quandle table file");
  genquandle->add_option("kind", kind, "trivial, conj-cyclic, conj-sym or dehn-sym")->required();
  genquandle->add_option("params", params, "size/degree parameters");

  CLI::App* closure = app.add_subcommand("closure", "bounded-depth quandle closure in Conj(BS(m,n))");
  closure->add_option("-m", m, "relation exponent m")->required();
  closure->add_option("-n", n, "relation exponent n")->required();
  closure->add_option("--depth", depth, "closure depth");
  closure->add_option("--limit", limit, "element cap");
  closure->add_option("generators", words, "generator words")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (reduce->parsed()) {
      if (word.empty() && file.empty())
        throw std::invalid_argument("reduce needs a word or --file");
      return run_reduce(m, n, word, file, order);
    }
    if (eq->parsed()) return run_eq(m, n, word, word2);
    if (classify->parsed()) return run_classify(m, n);
    if (separate->parsed()) return run_separate(m, n, word, word2, dmax);
    if (witness->parsed()) return run_witness(kind, m, n, window);
    if (axioms->parsed()) return run_axioms(file);
    if (genquandle->parsed()) return run_genquandle(kind, params);
    if (closure->parsed()) return run_closure(m, n, depth, limit, words);
  } catch (const bsq::LimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
