#include "powersums/cli.hpp"

#include <algorithm>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "powersums/engine.hpp"
#include "powersums/format.hpp"
#include "powersums/oracle.hpp"

namespace powersums {

namespace {

struct OutputOptions {
  std::string format = "plain";
  std::string vars = "xy";
  VarStyle style() const { return vars == "AB" ? VarStyle::ab : VarStyle::xy; }
};

using Fields = std::vector<std::pair<std::string, nlohmann::ordered_json>>;

nlohmann::ordered_json wrap_document(const std::string& kind, const Fields& fields,
                                     nlohmann::ordered_json body) {
  nlohmann::ordered_json doc;
  doc["kind"] = kind;
  for (const auto& [key, value] : fields) doc[key] = value;
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  return doc;
}

void emit(const OutputOptions& opt, std::ostream& out, const std::string& kind,
          const Fields& fields, const UniPoly& p) {
  if (opt.format == "json")
    out << wrap_document(kind, fields, to_json(p)).dump() << "\n";
  else if (opt.format == "latex")
    out << to_latex(p) << "\n";
  else
    out << to_plain(p) << "\n";
}

void emit(const OutputOptions& opt, std::ostream& out, const std::string& kind,
          const Fields& fields, const BiPoly& p) {
  if (opt.format == "json")
    out << wrap_document(kind, fields, to_json(p, opt.style())).dump() << "\n";
  else if (opt.format == "latex")
    out << to_latex(p, opt.style()) << "\n";
  else
    out << to_plain(p, opt.style()) << "\n";
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power-sum polynomials: closed forms, S_1/S_2 representations, "
               "Faulhaber decompositions, relation polynomials, and brute-force verification",
               "powersum"};
  app.require_subcommand(1);

  OutputOptions opt;
  unsigned long max_k = 200;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}))
      ->capture_default_str();
  app.add_option("--vars", opt.vars, "Symbols for bivariate output")
      ->check(CLI::IsMember({"xy", "AB"}))
      ->capture_default_str();
  app.add_option("--max-k", max_k, "Largest accepted power index")->capture_default_str();

  unsigned long k_arg = 0, i_arg = 0, j_arg = 0, kmax_arg = 0;
  unsigned long n_max = 200;
  unsigned jobs = 1;

  auto* closed = app.add_subcommand("closed-form", "S_k(n) as a polynomial in n");
  closed->add_option("k", k_arg, "power index")->required();

  auto* gpoly = app.add_subcommand("g-poly", "g_k with S_k(n) = g_k(S_1(n), S_2(n))");
  gpoly->add_option("k", k_arg, "power index (>= 1)")->required();

  auto* fa = app.add_subcommand("faulhaber-a", "Faulhaber form of an odd power sum in S_1");
  fa->add_option("k", k_arg, "odd power index")->required();

  auto* ef = app.add_subcommand("even-factor", "S_k = S_2 * q(S_1) for even k");
  ef->add_option("k", k_arg, "even power index (>= 2)")->required();

  auto* greedy = app.add_subcommand("greedy", "top-down degree decomposition of S_k");
  greedy->add_option("k", k_arg, "power index")->required();

  auto* relation = app.add_subcommand("relation", "integer T(x,y) with T(S_i(n), S_j(n)) = 0");
  relation->add_option("i", i_arg, "first power index (>= 1)")->required();
  relation->add_option("j", j_arg, "second power index (>= 1, distinct)")->required();

  auto* verify = app.add_subcommand("verify", "sweep S_k against direct summation");
  verify->add_option("k", k_arg, "power index")->required();
  verify->add_option("--n-max", n_max, "largest n checked")->capture_default_str();
  verify->add_option("--jobs", jobs, "parallel sweep workers")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* termcount = app.add_subcommand("termcount", "recursion term counts for k = 3..k-max");
  termcount->add_option("k-max", kmax_arg, "largest power index (>= 3)")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const unsigned long largest = std::max({k_arg, i_arg, j_arg, kmax_arg});
  if (largest > max_k) {
    err << "error: power index " << largest << " exceeds --max-k " << max_k << "\n";
    return 2;
  }
  const unsigned k = static_cast<unsigned>(k_arg);

  try {
    PowerSumTable table;

    if (closed->parsed()) {
      emit(opt, out, "closed-form", {{"k", k}}, halfterm_power_sum(k, table));
    } else if (gpoly->parsed()) {
      if (k < 1) {
        err << "error: g-poly requires k >= 1\n";
        return 2;
      }
      emit(opt, out, "g-poly", {{"k", k}}, g_poly(k, table));
    } else if (fa->parsed()) {
      if (k % 2 == 0) {
        err << "error: faulhaber-a requires odd k\n";
        return 2;
      }
      emit(opt, out, "faulhaber-A", {{"k", k}}, faulhaber_in_a(k, table));
    } else if (ef->parsed()) {
      if (k < 2 || k % 2) {
        err << "error: even-factor requires even k >= 2\n";
        return 2;
      }
      emit(opt, out, "even-factor", {{"k", k}}, faulhaber_even_factor(k, table));
    } else if (greedy->parsed()) {
      const DecompResult res = decompose_greedy_ab(halfterm_power_sum(k, table));
      if (res.ok()) {
        emit(opt, out, "greedy", {{"k", k}, {"status", "success"}}, res.value);
        return 0;
      }
      if (opt.format == "json") {
        nlohmann::ordered_json doc = wrap_document(
            "greedy", {{"k", k}, {"status", "obstructed"}}, nlohmann::ordered_json::object());
        doc["residual"] = to_json(res.residual);
        out << doc.dump() << "\n";
      } else {
        out << "obstructed: residual " << to_plain(res.residual) << "\n";
      }
      return 1;
    } else if (relation->parsed()) {
      if (i_arg < 1 || j_arg < 1 || i_arg == j_arg) {
        err << "error: relation requires two distinct indices >= 1\n";
        return 2;
      }
      emit(opt, out, "relation", {{"i", i_arg}, {"j", j_arg}},
           relation_polynomial(static_cast<unsigned>(i_arg), static_cast<unsigned>(j_arg), table));
    } else if (verify->parsed()) {
      const SweepReport report = verify_poly(k, halfterm_power_sum(k, table), n_max, jobs);
      if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["kind"] = "verify";
        doc["k"] = k;
        doc["n_max"] = n_max;
        auto arr = nlohmann::ordered_json::array();
        for (const SweepMismatch& m : report.mismatches)
          arr.push_back({{"n", m.n}, {"expected", m.expected.get_str()}, {"got", m.got.to_string()}});
        doc["mismatches"] = std::move(arr);
        out << doc.dump() << "\n";
      } else if (report.ok()) {
        out << "OK k=" << k << " n=0.." << n_max << "\n";
      } else {
        out << "FAIL k=" << k << " n=0.." << n_max << " mismatches=" << report.mismatches.size()
            << "\n";
        for (const SweepMismatch& m : report.mismatches)
          out << "n=" << m.n << " expected=" << m.expected << " got=" << m.got << "\n";
      }
      return report.ok() ? 0 : 1;
    } else if (termcount->parsed()) {
      if (kmax_arg < 3) {
        err << "error: termcount requires k-max >= 3\n";
        return 2;
      }
      if (opt.format == "json") {
        nlohmann::ordered_json doc;
        doc["kind"] = "termcount";
        doc["k_max"] = kmax_arg;
        auto rows = nlohmann::ordered_json::array();
        for (unsigned kk = 3; kk <= kmax_arg; ++kk) {
          const TermCountReport r = term_count_report(kk);
          rows.push_back({{"k", kk}, {"pascal", r.pascal_terms}, {"halfterm", r.halfterm_terms}});
        }
        doc["rows"] = std::move(rows);
        out << doc.dump() << "\n";
      } else {
        for (unsigned kk = 3; kk <= kmax_arg; ++kk) {
          const TermCountReport r = term_count_report(kk);
          out << "k=" << kk << " pascal=" << r.pascal_terms << " halfterm=" << r.halfterm_terms
              << "\n";
        }
      }
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace powersums
