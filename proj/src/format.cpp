#include "powersums/format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace powersums {

namespace {

struct Term {
  unsigned xe = 0;
  unsigned ye = 0;
  Rational coeff;
};

std::vector<Term> display_terms(const UniPoly& p) {
  std::vector<Term> out;
  for (const auto& [e, c] : p.terms()) out.push_back({e, 0, c});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.xe > b.xe; });
  return out;
}

std::vector<Term> display_terms(const BiPoly& p) {
  std::vector<Term> out;
  for (const auto& [ab, c] : p.terms()) out.push_back({ab.first, ab.second, c});
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    const unsigned wa = 2 * a.xe + 3 * a.ye;
    const unsigned wb = 2 * b.xe + 3 * b.ye;
    if (wa != wb) return wa > wb;
    return a.ye > b.ye;
  });
  return out;
}

std::string power_plain(std::string_view var, unsigned e) {
  if (e == 0) return {};
  std::string s(var);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

std::string power_latex(std::string_view var, unsigned e) {
  if (e == 0) return {};
  std::string s(var);
  if (e > 1) s += e > 9 ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  return s;
}

std::string coeff_plain(const Rational& magnitude) { return magnitude.to_string(); }

std::string coeff_latex(const Rational& magnitude) {
  if (magnitude.is_integer()) return magnitude.numerator().get_str();
  return "\\frac{" + magnitude.numerator().get_str() + "}{" + magnitude.denominator().get_str() + "}";
}

std::pair<std::string_view, std::string_view> style_vars(VarStyle style) {
  return style == VarStyle::xy ? std::pair<std::string_view, std::string_view>{"x", "y"}
                               : std::pair<std::string_view, std::string_view>{"A", "B"};
}

std::string render(const std::vector<Term>& terms, std::string_view xvar, std::string_view yvar,
                   bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms) {
    const bool negative = t.coeff.sign() < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    const Rational magnitude = abs(t.coeff);
    std::string mono = latex ? power_latex(xvar, t.xe) : power_plain(xvar, t.xe);
    mono += latex ? power_latex(yvar, t.ye) : power_plain(yvar, t.ye);

    if (mono.empty()) {
      out += latex ? coeff_latex(magnitude) : coeff_plain(magnitude);
    } else if (magnitude == Rational(1)) {
      out += mono;
    } else if (latex) {
      out += coeff_latex(magnitude) + mono;
    } else {
      out += coeff_plain(magnitude) + " " + mono;
    }
  }
  return out;
}

nlohmann::ordered_json terms_to_json(const std::vector<Term>& terms, bool bivariate,
                                     std::string_view xvar, std::string_view yvar) {
  nlohmann::ordered_json doc;
  doc["variables"] = bivariate ? nlohmann::ordered_json::array({xvar, yvar})
                               : nlohmann::ordered_json::array({xvar});
  auto arr = nlohmann::ordered_json::array();
  for (const Term& t : terms) {
    nlohmann::ordered_json jt;
    jt["exp"] = bivariate ? nlohmann::ordered_json::array({t.xe, t.ye})
                          : nlohmann::ordered_json::array({t.xe});
    jt["num"] = t.coeff.numerator().get_str();
    jt["den"] = t.coeff.denominator().get_str();
    arr.push_back(std::move(jt));
  }
  doc["terms"] = std::move(arr);
  return doc;
}

Rational coeff_from_json(const nlohmann::json& jt) {
  if (!jt.contains("num") || !jt.contains("den"))
    throw std::invalid_argument("polynomial document: term without num/den");
  return Rational(mpz_class(jt.at("num").get<std::string>()),
                  mpz_class(jt.at("den").get<std::string>()));
}

}  // namespace

std::string to_plain(const UniPoly& p, std::string_view var) {
  return render(display_terms(p), var, "", false);
}

std::string to_plain(const BiPoly& p, VarStyle style) {
  const auto [xvar, yvar] = style_vars(style);
  return render(display_terms(p), xvar, yvar, false);
}

std::string to_latex(const UniPoly& p, std::string_view var) {
  return render(display_terms(p), var, "", true);
}

std::string to_latex(const BiPoly& p, VarStyle style) {
  const auto [xvar, yvar] = style_vars(style);
  return render(display_terms(p), xvar, yvar, true);
}

nlohmann::ordered_json to_json(const UniPoly& p, std::string_view var) {
  return terms_to_json(display_terms(p), false, var, "");
}

nlohmann::ordered_json to_json(const BiPoly& p, VarStyle style) {
  const auto [xvar, yvar] = style_vars(style);
  return terms_to_json(display_terms(p), true, xvar, yvar);
}

UniPoly unipoly_from_json(const nlohmann::json& doc) {
  if (!doc.contains("variables") || !doc.at("variables").is_array() ||
      doc.at("variables").size() != 1 || !doc.contains("terms"))
    throw std::invalid_argument("polynomial document: expected one variable and a terms array");
  UniPoly p;
  for (const auto& jt : doc.at("terms")) {
    const auto& exp = jt.at("exp");
    if (!exp.is_array() || exp.size() != 1)
      throw std::invalid_argument("polynomial document: univariate term needs one exponent");
    p.add_term(exp.at(0).get<unsigned>(), coeff_from_json(jt));
  }
  return p;
}

BiPoly bipoly_from_json(const nlohmann::json& doc) {
  if (!doc.contains("variables") || !doc.at("variables").is_array() ||
      doc.at("variables").size() != 2 || !doc.contains("terms"))
    throw std::invalid_argument("polynomial document: expected two variables and a terms array");
  BiPoly p;
  for (const auto& jt : doc.at("terms")) {
    const auto& exp = jt.at("exp");
    if (!exp.is_array() || exp.size() != 2)
      throw std::invalid_argument("polynomial document: bivariate term needs two exponents");
    p.add_term(exp.at(0).get<unsigned>(), exp.at(1).get<unsigned>(), coeff_from_json(jt));
  }
  return p;
}

}  // namespace powersums
