// rhombic: exact engine for rhombic staircase tableaux, the two-species ASEP,
// its transfer matrices, and homogeneous Koornwinder moments.
//
// Exit codes: 0 success / verification passed, 1 failed verification or
// computational error (pole, singular denominator, reducible chain),
// 2 usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rhombic/identities.hpp"
#include "rhombic/json_io.hpp"
#include "rhombic/moments.hpp"
#include "rhombic/parallel.hpp"
#include "rhombic/transfer.hpp"

namespace {

using namespace rhombic;

struct SizeArg {
  int n = 1;
  int r = 0;
};

SizeArg parse_size(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--size", "expected \"N,r\", got '" + text + "'");
  try {
    SizeArg s{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    if (s.n < 0 || s.r < 0 || s.r > s.n)
      throw CLI::ValidationError("--size", "need 0 <= r <= N");
    return s;
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("--size", "expected \"N,r\", got '" + text + "'");
  }
}

TypeWord parse_type(const std::string& text) {
  std::vector<int> letters;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token != "0" && token != "1" && token != "2")
      throw CLI::ValidationError("--type", "letters must be 0, 1 or 2; got '" + token + "'");
    letters.push_back(token[0] - '0');
  }
  if (letters.empty()) throw CLI::ValidationError("--type", "empty type word");
  return TypeWord(letters);
}

Params parse_params(const std::string& text) {
  Params p;
  bool seen[5] = {false, false, false, false, false};
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    auto eq = token.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--params", "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    Rational value;
    try {
      value = parse_rational(token.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--params", e.what());
    }
    if (key == "alpha") { p.alpha = value; seen[0] = true; }
    else if (key == "beta") { p.beta = value; seen[1] = true; }
    else if (key == "gamma") { p.gamma = value; seen[2] = true; }
    else if (key == "delta") { p.delta = value; seen[3] = true; }
    else if (key == "q") { p.q = value; seen[4] = true; }
    else if (key == "u") { p.u = value; }
    else throw CLI::ValidationError("--params", "unknown parameter '" + key + "'");
  }
  static const char* names[] = {"alpha", "beta", "gamma", "delta", "q"};
  for (int i = 0; i < 5; ++i)
    if (!seen[i])
      throw CLI::ValidationError("--params", std::string("missing parameter '") + names[i] + "'");
  return p;
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

void print_report_line(const VerifyReport& rep) {
  if (rep.pass) {
    std::cout << "PASS " << rep.name << " (" << rep.cases << " cases, 0 counterexamples)\n";
  } else {
    std::cout << "FAIL " << rep.name << " (" << rep.cases << " cases, "
              << rep.counterexamples.size() << "+ counterexamples)\n";
    for (const auto& ce : rep.counterexamples) std::cout << "  counterexample: " << ce << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rhombic staircase tableaux / two-species ASEP engine"};
  app.require_subcommand(1);
  int threads = default_thread_count();
  app.add_option("--threads", threads, "worker threads for sweeps")->capture_default_str();

  std::string type_text, size_text, params_text, format = "text";
  std::string xi_text = "1", name = "all", route = "both", engine_name = "dfs";
  long long steps = 1000000;
  std::uint64_t seed = 42;
  int trials = 5, max_norm = 5;
  VerifyBounds bounds{};

  // tableaux
  auto* tableaux = app.add_subcommand("tableaux", "enumerate or count rhombic staircase tableaux");
  tableaux->require_subcommand(1);
  auto* tab_enum = tableaux->add_subcommand("enumerate", "list all tableaux of one type");
  tab_enum->add_option("--type", type_text, "type word, e.g. 2,1")->required();
  tab_enum->add_option("--engine", engine_name, "dfs|naive")->capture_default_str();
  tab_enum->add_option("--format", format, "json|text")->capture_default_str();
  auto* tab_count = tableaux->add_subcommand(
      "count", "count tableaux; with --size also checks the q=1 closed forms");
  auto* count_size = tab_count->add_option("--size", size_text, "N,r");
  tab_count->add_option("--type", type_text, "single type word")->excludes(count_size);
  tab_count->add_option("--format", format, "json|text")->capture_default_str();

  // partition
  auto* partition = app.add_subcommand("partition", "fugacity partition function Z_{N,r}(xi)");
  partition->add_option("--size", size_text, "N,r")->required();
  partition->add_option("--params", params_text,
                        "alpha=..,beta=..,gamma=..,delta=..,q=..[,u=..]");
  partition->add_option("--xi", xi_text, "fugacity (rational)")->capture_default_str();
  partition->add_option("--format", format, "json|text")->capture_default_str();

  // stationary
  auto* stationary =
      app.add_subcommand("stationary", "stationary distribution of the two-species ASEP");
  stationary->require_subcommand(1);
  auto* st_exact = stationary->add_subcommand("exact", "exact kernel solve of the transition matrix");
  st_exact->add_option("--size", size_text, "N,r")->required();
  st_exact->add_option("--params", params_text, "chain parameters")->required();
  st_exact->add_option("--format", format, "csv|json")->capture_default_str();
  auto* st_formula = stationary->add_subcommand(
      "formula", "tableaux formula; per-state weight polynomials, or the law at a point");
  st_formula->add_option("--size", size_text, "N,r")->required();
  st_formula->add_option("--params", params_text, "evaluate and normalize at this point");
  st_formula->add_option("--format", format, "csv|json|text")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "machine-check the symbolic identities");
  verify->require_subcommand(1);
  auto* v_ansatz = verify->add_subcommand("ansatz", "Matrix Ansatz relations (I)-(V)");
  v_ansatz->add_option("--max-norm", max_norm, "bound on the lambda subscript")
      ->capture_default_str();
  auto* v_ident = verify->add_subcommand("identities", "transfer-matrix identity registry");
  v_ident->add_option("--name", name, "identity name or 'all'")->capture_default_str();
  v_ident->add_option("--max-index", bounds.max_index, "index bound")->capture_default_str();
  v_ident->add_option("--max-t", bounds.max_t, "superscript bound")->capture_default_str();
  v_ident->add_option("--max-word-len", bounds.max_word_len, "|X| bound")->capture_default_str();
  v_ident->add_option("--max-norm", bounds.max_norm, "||Y|| bound")->capture_default_str();
  auto* v_stat = verify->add_subcommand("stationarity", "symbolic zero balance at every state");
  v_stat->add_option("--size", size_text, "N,r")->required();
  auto* v_mom =
      verify->add_subcommand("moments", "determinant vs tableaux moments at random tuples");
  v_mom->add_option("--size", size_text, "N,r")->required();
  v_mom->add_option("--trials", trials, "tuples to test")->capture_default_str();
  v_mom->add_option("--seed", seed, "RNG seed")->capture_default_str();

  // moment
  auto* moment =
      app.add_subcommand("moment", "homogeneous Koornwinder moment K_{(N-r,0^r)}(xi)");
  moment->add_option("--size", size_text, "N,r")->required();
  moment->add_option("--params", params_text, "parameter point")->required();
  moment->add_option("--xi", xi_text, "fugacity (rational)")->capture_default_str();
  moment->add_option("--route", route, "det|tableaux|both")->capture_default_str();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo run of the chain");
  simulate->add_option("--size", size_text, "N,r")->required();
  simulate->add_option("--params", params_text, "chain parameters in [0,1]")->required();
  simulate->add_option("--steps", steps, "number of steps")->capture_default_str();
  simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();
  simulate->add_option("--format", format, "csv|json|text")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (tab_enum->parsed()) {
      const TypeWord type = parse_type(type_text);
      const Engine engine = engine_name == "naive" ? Engine::Naive : Engine::Dfs;
      auto all = enumerate_tableaux(type, engine);
      if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : all) arr.push_back(tableau_to_json(t));
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << all.size() << " tableaux of type " << type.digits() << "\n";
        for (const auto& t : all) {
          std::cout << "  " << Polynomial(weight(t)).to_text() << "  [";
          bool first = true;
          for (std::size_t i = 0; i < t.labels.size(); ++i) {
            if (t.labels[i] == Label::Empty) continue;
            const TileInfo& tile = t.tiling.tiles[i];
            if (!first) std::cout << " ";
            std::cout << tile_kind_name(tile.kind) << "(" << tile.pos << "," << tile.height
                      << ")=" << label_name(t.labels[i]);
            first = false;
          }
          std::cout << "]\n";
        }
      }
      return 0;
    }
    if (tab_count->parsed()) {
      if (!size_text.empty()) {
        const SizeArg s = parse_size(size_text);
        const Census c = q1_census(s.n, s.r, threads);
        if (format == "json") {
          std::cout << nlohmann::json{{"count", c.count.str()},
                                      {"expected", c.expected_count.str()},
                                      {"closed_form_match", c.closed_form_match}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << "count " << c.count.str() << " expected " << c.expected_count.str()
                    << " closed_form_match " << (c.closed_form_match ? "true" : "false")
                    << "\n";
        }
        return c.closed_form_match ? 0 : 1;
      }
      if (type_text.empty()) throw CLI::ValidationError("count", "need --size or --type");
      std::cout << count_tableaux(parse_type(type_text)) << "\n";
      return 0;
    }
    if (partition->parsed()) {
      const SizeArg s = parse_size(size_text);
      const Polynomial z = partition_function(s.n, s.r, true, threads);
      if (!params_text.empty()) {
        const Params p = parse_params(params_text);
        const Rational xi = parse_rational_flag("--xi", xi_text);
        std::cout << rational_to_string(z.evaluate(param_point(p, xi))) << "\n";
      } else if (format == "json") {
        std::cout << polynomial_to_json(z).dump(2) << "\n";
      } else {
        std::cout << z.to_text() << "\n";
      }
      return 0;
    }
    if (st_exact->parsed()) {
      const SizeArg s = parse_size(size_text);
      const DistributionVector dist =
          stationary_exact({s.n, s.r, parse_params(params_text), false});
      if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < dist.states.size(); ++i)
          arr.push_back({{"state", dist.states[i].digits()},
                         {"probability", rational_to_string(dist.probs[i])},
                         {"approx", rational_to_double(dist.probs[i])}});
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << distribution_to_csv(dist);
      }
      return 0;
    }
    if (st_formula->parsed()) {
      const SizeArg s = parse_size(size_text);
      auto weights = tableaux_stationary(s.n, s.r);
      if (params_text.empty()) {
        if (format == "json") {
          nlohmann::json obj;
          for (const auto& [state, poly] : weights)
            obj[state.digits()] = polynomial_to_json(poly);
          std::cout << obj.dump(2) << "\n";
        } else {
          for (const auto& [state, poly] : weights)
            std::cout << state.digits() << ": " << poly.to_text() << "\n";
        }
        return 0;
      }
      const Params p = parse_params(params_text);
      const auto point = param_point(p, 1);
      DistributionVector dist;
      Rational total = 0;
      for (const auto& [state, poly] : weights) {
        dist.states.push_back(state);
        dist.probs.push_back(poly.evaluate(point));
        total += dist.probs.back();
      }
      for (Rational& prob : dist.probs) prob /= total;
      std::cout << distribution_to_csv(dist);
      return 0;
    }
    if (v_ansatz->parsed()) {
      const VerifyReport rep = verify_ansatz(max_norm, threads);
      if (rep.pass)
        std::cout << "PASS relations I-V, 0 counterexamples (" << rep.cases << " cases)\n";
      else
        print_report_line(rep);
      return rep.pass ? 0 : 1;
    }
    if (v_ident->parsed()) {
      bool all_pass = true;
      const std::vector<std::string> names =
          name == "all" ? identity_names() : std::vector<std::string>{name};
      for (const std::string& n : names) {
        const VerifyReport rep = verify_identity(n, bounds);
        print_report_line(rep);
        all_pass = all_pass && rep.pass;
      }
      return all_pass ? 0 : 1;
    }
    if (v_stat->parsed()) {
      const SizeArg s = parse_size(size_text);
      const VerifyReport rep = verify_stationarity_symbolic(s.n, s.r);
      print_report_line(rep);
      return rep.pass ? 0 : 1;
    }
    if (v_mom->parsed()) {
      const SizeArg s = parse_size(size_text);
      const MomentReport rep = cross_check(s.n, s.r, trials, seed);
      std::cout << moment_report_to_json(rep).dump(2) << "\n";
      return rep.all_equal && rep.positivity ? 0 : 1;
    }
    if (moment->parsed()) {
      const SizeArg s = parse_size(size_text);
      MomentSpec spec{s.n, s.r, parse_rational_flag("--xi", xi_text),
                      parse_params(params_text)};
      if (route == "det") {
        std::cout << rational_to_string(moment_det(spec)) << "\n";
      } else if (route == "tableaux") {
        std::cout << rational_to_string(moment_tableaux(spec)) << "\n";
      } else {
        const Rational det = moment_det(spec);
        const Rational tab = moment_tableaux(spec);
        std::cout << "det      = " << rational_to_string(det) << "\n"
                  << "tableaux = " << rational_to_string(tab) << "\n"
                  << "equal    = " << (det == tab ? "true" : "false") << "\n";
        return det == tab ? 0 : 1;
      }
      return 0;
    }
    if (simulate->parsed()) {
      const SizeArg s = parse_size(size_text);
      const McResult mc = mc_simulate({s.n, s.r, parse_params(params_text), true}, steps, seed);
      if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < mc.states.size(); ++i)
          arr.push_back({{"state", mc.states[i].digits()}, {"empirical", mc.empirical[i]}});
        std::cout << nlohmann::json{{"tv_distance", mc.tv_distance}, {"empirical", arr}}.dump(2)
                  << "\n";
      } else if (format == "csv") {
        std::cout << "state,empirical\n";
        for (std::size_t i = 0; i < mc.states.size(); ++i)
          std::cout << mc.states[i].digits() << "," << double_to_string(mc.empirical[i]) << "\n";
        std::cout << "tv_distance," << double_to_string(mc.tv_distance) << "\n";
      } else {
        for (std::size_t i = 0; i < mc.states.size(); ++i)
          std::cout << mc.states[i].digits() << "  " << double_to_string(mc.empirical[i]) << "\n";
        std::cout << "tv_distance = " << double_to_string(mc.tv_distance) << "\n";
      }
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
