#include "wtaut/poly.hpp"

#include <algorithm>
#include <cctype>

#include "wtaut/errors.hpp"

namespace wtaut {

// ---------------------------------------------------------------- Variable

int Variable::weight() const {
  switch (family_) {
    case Family::Lambda:
    case Family::Kappa:
      return static_cast<int>(index_);
    default:
      return 1;
  }
}

std::string Variable::name() const {
  switch (family_) {
    case Family::Lambda: return "lambda" + std::to_string(index_);
    case Family::Psi: return "psi";
    case Family::Kappa: return "kappa" + std::to_string(index_);
    case Family::X: return "x" + std::to_string(index_);
    case Family::U: return "u";
    case Family::Z: return "z" + std::to_string(index_);
    case Family::Y: return "y" + std::to_string(index_);
  }
  return "?";
}

Variable Variable::parse(const std::string& name) {
  if (name == "psi") return psi();
  if (name == "u") return u();
  static const std::pair<const char*, Family> prefixes[] = {
      {"lambda", Family::Lambda}, {"kappa", Family::Kappa}, {"x", Family::X},
      {"z", Family::Z},           {"y", Family::Y}};
  for (const auto& [prefix, family] : prefixes) {
    std::string_view p(prefix);
    if (name.size() > p.size() && name.compare(0, p.size(), p) == 0) {
      std::string digits = name.substr(p.size());
      if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
          digits.size() > 9)
        break;
      auto index = static_cast<std::uint32_t>(std::stoul(digits));
      // kappa starts at 0, the indexed root families at 1
      if (family != Family::Kappa && index == 0) break;
      return {family, index};
    }
  }
  throw DataError("unknown variable '" + name + "'");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Variable v, unsigned e) {
  if (e > 0) {
    factors_.emplace_back(v, e);
    degree_ = v.weight() * static_cast<int>(e);
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.degree_ += v.weight() * static_cast<int>(e);
  }
  return m;
}

unsigned Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& key) { return f.first < key; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial r;
  auto it = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    while (it != factors_.end() && it->first < v) ++it;
    unsigned sub = (it != factors_.end() && it->first == v) ? it->second : 0;
    if (e > sub) {
      r.factors_.emplace_back(v, e - sub);
      r.degree_ += v.weight() * static_cast<int>(e - sub);
    }
  }
  return r;
}

Monomial Monomial::without(Variable v) const {
  Monomial r;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    r.factors_.push_back(f);
    r.degree_ += f.first.weight() * static_cast<int>(f.second);
  }
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return fa.size() > fb.size();
}

// --------------------------------------------------------------- MultiPoly

namespace {

// mpq_class(n, d) does not reduce; arithmetic results always are
Rational canonical(const Rational& c) {
  Rational q = c;
  q.canonicalize();
  return q;
}

}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), canonical(c));
}

MultiPoly::MultiPoly(Variable v) { terms_.emplace(Monomial(v), Rational(1)); }

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, canonical(c));
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const { return coeff(Monomial()); }

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    if (c.get_den() != 1) it->second.canonicalize();
  } else if (c.get_den() != 1) {
    it->second += canonical(c);
    if (it->second == 0) terms_.erase(it);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int MultiPoly::low_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool MultiPoly::is_homogeneous() const { return degree() == low_degree(); }

unsigned MultiPoly::degree_in(Variable v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::set<Variable> MultiPoly::variables() const {
  std::set<Variable> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) vars.insert(f.first);
  return vars;
}

MultiPoly MultiPoly::component(int d) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_constant()) return a * b.constant_term();
  if (a.is_constant()) return b * a.constant_term();
  Rational prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& [m, coef] : terms_) coef *= c;
  }
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::map_coefficients(const std::function<Rational(const Rational&)>& f) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Rational v = f(c);
    if (v != 0) r.terms_.emplace_hint(r.terms_.end(), m, v);
  }
  return r;
}

MultiPoly pow(const MultiPoly& p, long e) {
  if (e < 0) throw DataError("non-polynomial operation: negative exponent");
  MultiPoly result(1);
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const Substitution& sigma) {
  // powers[v][e] caches image(v)^e
  std::map<Variable, std::vector<MultiPoly>> powers;
  auto power_of = [&](Variable v, unsigned e) -> const MultiPoly& {
    auto& table = powers[v];
    if (table.empty()) {
      table.emplace_back(1);
      table.push_back(sigma.at(v));
    }
    while (table.size() <= e) table.push_back(table.back() * table[1]);
    return table[e];
  };
  MultiPoly result;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    MultiPoly image(c);
    for (const auto& [v, e] : m.factors()) {
      if (sigma.count(v))
        image = image * power_of(v, e);
      else
        kept.emplace_back(v, e);
    }
    if (image.is_zero()) continue;
    if (!kept.empty()) image = image * MultiPoly(Monomial::from_factors(std::move(kept)), 1);
    result += image;
  }
  return result;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw DataError("division by zero polynomial");
  if (d.is_constant()) return p * (1 / d.constant_term());
  const auto& [dm, dc] = d.leading();
  MultiPoly rem = p;
  MultiPoly quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    if (!dm.divides(rm)) return std::nullopt;
    MultiPoly t(dm.cofactor_in(rm), rc / dc);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

namespace {

template <class T>
std::vector<T> elementary_table(int a, const std::vector<T>& values) {
  // table[k] = e_k of the values processed so far
  std::vector<T> table(static_cast<std::size_t>(a) + 1, T(0));
  table[0] = T(1);
  for (const auto& v : values)
    for (int k = a; k >= 1; --k) table[k] += table[k - 1] * v;
  return table;
}

template <class T>
std::vector<T> complete_table(int a, const std::vector<T>& values) {
  std::vector<T> table(static_cast<std::size_t>(a) + 1, T(0));
  table[0] = T(1);
  for (const auto& v : values)
    for (int k = 1; k <= a; ++k) table[k] += table[k - 1] * v;
  return table;
}

}  // namespace

MultiPoly elementary(int a, const std::vector<MultiPoly>& values) {
  if (a < 0) return {};
  return elementary_table(a, values)[a];
}

MultiPoly complete(int a, const std::vector<MultiPoly>& values) {
  if (a < 0) return {};
  return complete_table(a, values)[a];
}

Rational elementary(int a, const std::vector<Rational>& values) {
  if (a < 0) return 0;
  return elementary_table(a, values)[a];
}

Rational complete(int a, const std::vector<Rational>& values) {
  if (a < 0) return 0;
  return complete_table(a, values)[a];
}

std::vector<Monomial> weighted_monomials(const std::vector<Variable>& vars, int d) {
  for (const auto& v : vars)
    if (v.weight() <= 0) throw DataError("weighted_monomials needs positive weights, got " + v.name());
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<Monomial::Factor> current;
  auto recurse = [&](auto&& self, std::size_t k, int remaining) -> void {
    if (k == vars.size()) {
      if (remaining == 0) out.push_back(Monomial::from_factors(current));
      return;
    }
    int w = vars[k].weight();
    for (int e = 0; e * w <= remaining; ++e) {
      current.emplace_back(vars[k], static_cast<unsigned>(e));
      self(self, k + 1, remaining - e * w);
      current.pop_back();
    }
  };
  recurse(recurse, 0, d);
  std::sort(out.begin(), out.end(), MonomialOrder());
  return out;
}

// --------------------------------------------------------------- text form

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (const auto& [v, e] : m.factors()) {
      if (!mono.empty()) mono += "*";
      mono += v.name();
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  MultiPoly parse() {
    MultiPoly result;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += term() * Rational(sign);
      skip();
    }
    return result;
  }

 private:
  MultiPoly term() {
    MultiPoly t(1);
    while (true) {
      skip();
      t = t * atom();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  MultiPoly atom() {
    if (pos_ >= s_.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      return parse_rational(std::string_view(s_).substr(start, pos_ - start));
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Variable v = Variable::parse(s_.substr(start, pos_ - start));
      unsigned e = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        std::size_t es = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (es == pos_) fail("expected exponent");
        e = static_cast<unsigned>(std::stoul(s_.substr(es, pos_ - es)));
      }
      return MultiPoly(Monomial(v, e), 1);
    }
    fail(std::string("unexpected character '") + s_[pos_] + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw DataError("cannot parse polynomial '" + s_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace wtaut
