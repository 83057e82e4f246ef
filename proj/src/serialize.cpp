#include "wtaut/serialize.hpp"

#include <sstream>

#include "wtaut/errors.hpp"

namespace wtaut {

namespace {

Json poly_strings(const MultiPoly& p) { return {{"text", to_string(p)}, {"terms", poly_to_json(p)}}; }

std::string latex_variable(const Variable& v) {
  switch (v.family()) {
    case Family::Lambda: return "\\lambda_{" + std::to_string(v.index()) + "}";
    case Family::Psi: return "\\psi";
    case Family::Kappa: return "\\kappa_{" + std::to_string(v.index()) + "}";
    case Family::X: return "x_{" + std::to_string(v.index()) + "}";
    case Family::U: return "u";
    case Family::Z: return "z_{" + std::to_string(v.index()) + "}";
    case Family::Y: return "y_{" + std::to_string(v.index()) + "}";
  }
  return v.name();
}

std::string latex_magnitude(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_list(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (const auto& [v, e] : m.factors()) exps[v.name()] = e;
    out.push_back({{"coeff", to_string(c)}, {"exps", exps}});
  }
  return out;
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw DataError("polynomial JSON must be a list of terms");
  MultiPoly out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exps") || !term["coeff"].is_string() ||
        !term["exps"].is_object())
      throw DataError("polynomial term must be {\"coeff\": string, \"exps\": object}");
    Monomial m;
    for (const auto& [name, e] : term["exps"].items()) {
      if (!e.is_number_unsigned()) throw DataError("exponent of " + name + " must be a non-negative integer");
      m = m * Monomial(Variable::parse(name), e.get<unsigned>());
    }
    out.add_term(m, parse_rational(term["coeff"].get<std::string>()));
  }
  return out;
}

std::string poly_to_latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      out += latex_magnitude(mag);
      continue;
    }
    if (mag != 1) out += latex_magnitude(mag) + " ";
    bool first_factor = true;
    for (const auto& [v, e] : m.factors()) {
      if (!first_factor) out += " ";
      first_factor = false;
      out += latex_variable(v);
      if (e > 1) out += "^{" + std::to_string(e) + "}";
    }
  }
  return out;
}

Json semigroup_record(const NumericalSemigroup& h) {
  auto s = weierstrass_sequence(h);
  return {{"genus", h.genus()},
          {"gaps", h.gaps()},
          {"sequence_head", s.head()},
          {"partition_gr_gm1", partition_from_sequence(s).parts()},
          {"partition_hprime", hprime_partition(s, h.genus()).parts()}};
}

Json cycle_record(const CycleClass& c) {
  Json j = {{"genus", c.genus},
            {"partition", c.partition.parts()},
            {"codim", c.codimension()},
            {"class_pointed", poly_to_json(c.class_pointed)},
            {"class_pointed_text", to_string(c.class_pointed)},
            {"class_pointed_x", poly_to_json(c.class_pointed_x)},
            {"class_unpointed", poly_to_json(c.class_unpointed)},
            {"class_unpointed_text", to_string(c.class_unpointed)},
            {"realizable", c.realizable},
            {"virtual", c.is_virtual},
            {"shift", c.unshifted ? "unshifted" : "shifted"},
            {"normalization", c.normalization}};
  j["gaps"] = c.semigroup ? Json(c.semigroup->gaps()) : Json(nullptr);
  return j;
}

Json pullback_record(const PullbackClass& c) {
  Json j = {{"genus", c.genus},
            {"mode", c.mode == Mode::CM ? "CM" : "smooth"},
            {"value_x", poly_strings(c.value_x)},
            {"value_lambda", poly_strings(c.value_lambda)}};
  if (c.partition) j["partition"] = c.partition->parts();
  if (!c.partition) j["power"] = c.power;
  return j;
}

Json hilbert_record(const HilbertReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"degree", row.degree},
                    {"lower", row.lower},
                    {"upper", row.upper},
                    {"ambient", row.ambient},
                    {"generators", row.generators}});
  return {{"genus", r.genus}, {"max_degree", r.max_degree}, {"rows", rows}, {"notes", r.notes}};
}

std::string hilbert_csv(const HilbertReport& r) {
  std::ostringstream out;
  out << "# genus=" << r.genus << "\n# max_degree=" << r.max_degree << "\n";
  for (const auto& note : r.notes) out << "# note=" << note << "\n";
  out << "degree,lower,upper,ambient,generators\n";
  for (const auto& row : r.rows)
    out << row.degree << ',' << row.lower << ',' << row.upper << ',' << row.ambient << ',' << row.generators << '\n';
  return out.str();
}

std::string hilbert_latex(const HilbertReport& r) {
  std::ostringstream out;
  out << "\\begin{tabular}{r|rrrr}\n$d$ & $h_d(A/I_{ev})$ & $h_d(A/I)$ & $\\dim A_d$ & generators \\\\\n\\hline\n";
  for (const auto& row : r.rows)
    out << row.degree << " & " << row.lower << " & " << row.upper << " & " << row.ambient << " & " << row.generators
        << " \\\\\n";
  out << "\\end{tabular}\n";
  return out.str();
}

std::string cycle_table_latex(const std::vector<CycleClass>& cycles) {
  std::ostringstream out;
  out << "\\begin{tabular}{llrll}\ngaps & $\\mu$ & codim & $[W]$ & $[W']$ \\\\\n\\hline\n";
  for (const auto& c : cycles) {
    out << (c.semigroup ? latex_list(c.semigroup->gaps()) : std::string("--")) << " & " << latex_list(c.partition.parts())
        << " & " << c.codimension() << " & $" << poly_to_latex(c.class_pointed) << "$ & $"
        << poly_to_latex(c.class_unpointed) << "$ \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

std::string csv_list(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace wtaut
