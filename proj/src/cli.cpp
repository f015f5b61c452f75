#include "pbw/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "pbw/enveloping.hpp"
#include "pbw/errors.hpp"
#include "pbw/factorization.hpp"
#include "pbw/lyndon.hpp"
#include "pbw/pbw_dual.hpp"
#include "pbw/serialize.hpp"
#include "pbw/stuffle.hpp"
#include "pbw/trace.hpp"

#ifndef PBW_CONFIG_DIR
#define PBW_CONFIG_DIR "configs"
#endif

namespace pbw::cli {

namespace {

struct Options {
  bool json = false;
  bool parallel = false;
  std::string alphabet = "ab";
  std::string word;
  std::string theta;
  std::string config;
  std::string check = "theorem1";
  std::string product_order = "decreasing";
  std::string emit_tensors;
  std::string perturb;
  std::size_t max_len = 4;
  std::size_t degree = 4;
  unsigned max_weight = 4;
  std::string lyndon_rule = "right-factor";
  std::string normal_form = "lex-min";
  std::string lyndon_dual = "recursion";
  bool no_connectedness = false;
};

int emit(const Report& r, const Options& opt, std::ostream& out) {
  if (opt.json)
    out << to_json(r).dump(2) << "\n";
  else
    out << to_text(r);
  return r.passed() ? 0 : 1;
}

// Alphabet for a word given on the command line: explicit, or the sorted
// distinct symbols of the word.
AlphabetRef alphabet_for(const Options& opt, CLI::App* sub) {
  if (sub->count("--alphabet") > 0) return make_alphabet(opt.alphabet);
  std::string letters = opt.word;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return make_alphabet(letters.empty() ? std::string("a") : letters);
}

std::string resolve_config(const std::string& path) {
  if (std::filesystem::exists(path)) return path;
  const std::string builtin = std::string(PBW_CONFIG_DIR) + "/" + path + (path.ends_with(".json") ? "" : ".json");
  if (std::filesystem::exists(builtin)) return builtin;
  return path;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact PBW bases, dual families and factorization checks", "pbwfact"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Emit the report as JSON");
  app.add_flag("--parallel", opt.parallel, "Run independent checks concurrently");

  auto* lyndon = app.add_subcommand("lyndon", "Lyndon words");
  auto* lyndon_list = lyndon->add_subcommand("list", "List Lyndon words up to a length");
  lyndon->require_subcommand(1);
  lyndon_list->add_option("--alphabet", opt.alphabet, "Ordered letters")->capture_default_str();
  lyndon_list->add_option("--max-len", opt.max_len, "Maximum length")->capture_default_str();

  auto* pbw = app.add_subcommand("pbw", "PBW family P_w");
  pbw->require_subcommand(1);
  auto* pbw_show = pbw->add_subcommand("show", "Print P_w");
  pbw_show->add_option("--word", opt.word, "Word")->required();
  pbw_show->add_option("--alphabet", opt.alphabet, "Ordered letters (default: letters of the word)");
  auto* pbw_verify = pbw->add_subcommand("verify", "Triangularity and duality audit");
  pbw_verify->add_option("--alphabet", opt.alphabet, "Ordered letters")->capture_default_str();
  pbw_verify->add_option("--max-len", opt.max_len, "Maximum length")->capture_default_str();

  auto* dual = app.add_subcommand("dual", "Dual family S_w");
  dual->require_subcommand(1);
  auto* dual_show = dual->add_subcommand("show", "Print S_w");
  dual_show->add_option("--word", opt.word, "Word")->required();
  dual_show->add_option("--alphabet", opt.alphabet, "Ordered letters (default: letters of the word)");

  auto* verify = app.add_subcommand("verify", "Factorization identities");
  verify->require_subcommand(1);
  auto* verify_sf_cmd = verify->add_subcommand("sf", "Free factorization of the diagonal series");
  verify_sf_cmd->add_option("--alphabet", opt.alphabet, "Ordered letters")->capture_default_str();
  verify_sf_cmd->add_option("--degree", opt.degree, "Truncation degree")->capture_default_str();
  verify_sf_cmd->add_option("--emit-tensors", opt.emit_tensors, "Write both tensors to this JSON file");
  verify_sf_cmd->add_option("--product-order", opt.product_order, "decreasing|increasing")
      ->check(CLI::IsMember({"decreasing", "increasing"}))
      ->capture_default_str();

  auto* stuffle_cmd = app.add_subcommand("stuffle", "Quasi-shuffle algebra on Y");
  stuffle_cmd->require_subcommand(1);
  auto* stuffle_verify = stuffle_cmd->add_subcommand("verify", "Duality, Hopf axioms, projector");
  stuffle_verify->add_option("--max-weight", opt.max_weight, "Maximum weight")->capture_default_str();
  auto* stuffle_logstar = stuffle_cmd->add_subcommand("logstar", "Expansion of log_*(I) at a word");
  stuffle_logstar->add_option("--word", opt.word, "Word as indices, e.g. 4 or 1,3")->required();

  auto* trace = app.add_subcommand("trace", "Partially commutative case");
  trace->require_subcommand(1);
  auto* trace_verify = trace->add_subcommand("verify", "Factorization over M(X, theta)");
  trace_verify->add_option("--alphabet", opt.alphabet, "Ordered letters")->capture_default_str();
  trace_verify->add_option("--theta", opt.theta, "Commuting pairs, e.g. a,c or ac,bd");
  trace_verify->add_option("--degree", opt.degree, "Truncation degree")->capture_default_str();
  trace_verify->add_option("--lyndon-rule", opt.lyndon_rule, "right-factor|conjugacy")
      ->check(CLI::IsMember({"right-factor", "conjugacy"}))
      ->capture_default_str();
  trace_verify->add_option("--normal-form", opt.normal_form, "lex-min|lex-max")
      ->check(CLI::IsMember({"lex-min", "lex-max"}))
      ->capture_default_str();
  trace_verify->add_option("--lyndon-dual", opt.lyndon_dual, "recursion|inversion")
      ->check(CLI::IsMember({"recursion", "inversion"}))
      ->capture_default_str();
  trace_verify->add_flag("--no-connectedness", opt.no_connectedness,
                         "Drop the connectedness filter (conjugacy rule only)");
  trace_verify->add_option("--product-order", opt.product_order, "decreasing|increasing")
      ->check(CLI::IsMember({"decreasing", "increasing"}))
      ->capture_default_str();

  auto* lie = app.add_subcommand("lie", "Enveloping algebras from structure constants");
  lie->require_subcommand(1);
  auto* lie_verify = lie->add_subcommand("verify", "Radford multiplicativity, canonical-element factorization, Radford-to-PBW");
  lie_verify->add_option("--config", opt.config, "Lie algebra JSON (path or built-in name)")->required();
  lie_verify->add_option("--degree", opt.degree, "Truncation degree")->capture_default_str();
  lie_verify->add_option("--check", opt.check, "radford|theorem1|theorem2")
      ->check(CLI::IsMember({"radford", "theorem1", "theorem2"}))
      ->capture_default_str();
  lie_verify->add_option("--product-order", opt.product_order, "decreasing|increasing")
      ->check(CLI::IsMember({"decreasing", "increasing"}))
      ->capture_default_str();
  lie_verify->add_option("--perturb", opt.perturb, "i,j: use the family with B^[2e_i] = B^{2e_i} + B^{e_j}");

  for (auto* sub : {lyndon, pbw, dual, verify, stuffle_cmd, trace, lie}) {
    sub->fallthrough();
    for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (lyndon_list->parsed()) {
      Alphabet a(opt.alphabet);
      for (const auto& w : lyndon_up_to(a, opt.max_len)) out << a.format(w) << "\n";
      return 0;
    }
    if (pbw_show->parsed() || dual_show->parsed()) {
      auto* sub = pbw_show->parsed() ? pbw_show : dual_show;
      auto a = alphabet_for(opt, sub);
      PbwFamily family(a);
      const Word w = a->parse(opt.word);
      const Poly p = pbw_show->parsed() ? family.pbw_P(w).poly : family.dual_S(w).poly;
      if (opt.json)
        out << nlohmann::json{{"word", opt.word}, {"poly", to_json(p)}}.dump(2) << "\n";
      else
        out << p.to_string() << "\n";
      return 0;
    }
    if (pbw_verify->parsed()) {
      PbwFamily family(make_alphabet(opt.alphabet));
      Report r = family.check_duality(opt.max_len, opt.parallel);
      r.suite = "pbw-verify";
      r.absorb(family.check_triangularity(opt.max_len));
      return emit(r, opt, out);
    }
    if (verify_sf_cmd->parsed()) {
      Alphabet a(opt.alphabet);
      const TruncationDegree n{opt.degree};
      const ProductOrder order = parse_product_order(opt.product_order);
      Report r = verify_sf(a, n, order);
      if (!opt.emit_tensors.empty()) {
        std::ofstream f(opt.emit_tensors);
        if (!f) throw std::invalid_argument("cannot write " + opt.emit_tensors);
        f << nlohmann::json{{"lhs", to_json(a, diagonal_series(a, n))},
                            {"rhs", to_json(a, schuetzenberger_product(a, n, order))}}
                 .dump(2)
          << "\n";
      }
      return emit(r, opt, out);
    }
    if (stuffle_verify->parsed()) return emit(verify_stuffle(opt.max_weight), opt, out);
    if (stuffle_logstar->parsed()) {
      const YWord w = YWord::parse(opt.word);
      const YPoly p = log_star_identity(w);
      if (opt.json)
        out << nlohmann::json{{"word", w.to_string()}, {"expansion", to_json(p)}, {"primitive", check_primitive(p)}}
                   .dump(2)
            << "\n";
      else
        out << "log_*(I)(" << w.to_string() << ") = " << to_string(p) << "\n";
      return 0;
    }
    if (trace_verify->parsed()) {
      Alphabet a(opt.alphabet);
      Independence theta = Independence::parse(a, opt.theta);
      TraceOptions topt;
      topt.rule = parse_lyndon_rule(opt.lyndon_rule);
      topt.normal_form = parse_normal_form(opt.normal_form);
      topt.dual = parse_lyndon_dual(opt.lyndon_dual);
      if (opt.no_connectedness && topt.rule != LyndonRule::conjugacy)
        throw std::invalid_argument("--no-connectedness requires --lyndon-rule conjugacy");
      topt.connectedness = !opt.no_connectedness;
      TraceMonoid m(a, theta, topt);
      return emit(m.verify_sf_trace(opt.degree, parse_product_order(opt.product_order) == ProductOrder::decreasing),
                  opt, out);
    }
    if (lie_verify->parsed()) {
      Enveloping u(load_lie_algebra_file(resolve_config(opt.config)));
      const auto degree = static_cast<unsigned>(opt.degree);
      Report r;
      if (opt.check == "radford") {
        r = u.verify_radford_multiplicativity(degree);
      } else if (opt.check == "theorem1") {
        r = u.verify_theorem1(degree, parse_product_order(opt.product_order));
      } else {
        RadfordFamily family;
        if (opt.perturb.empty()) {
          family = pbw_family(u, degree);
        } else {
          auto comma = opt.perturb.find(',');
          if (comma == std::string::npos) throw std::invalid_argument("--perturb expects i,j");
          family = perturbed_family(u, degree, std::stoul(opt.perturb.substr(0, comma)),
                                    std::stoul(opt.perturb.substr(comma + 1)));
        }
        r = u.radford_to_pbw_experiment(family);
      }
      r.parameters["config"] = opt.config;
      return emit(r, opt, out);
    }
  } catch (const LieConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // The structure the suite relies on does not exist for this input.
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace pbw::cli
