#include "rquant/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rquant {

Universe make_universe(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw std::invalid_argument("duplicate parameter '" + names[i] + "'");
    }
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

const Universe& empty_universe() {
  static const Universe empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

namespace {

bool is_prefix(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

std::optional<std::uint32_t> index_of(const std::vector<std::string>& names, const std::string& name) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names.begin());
}

}  // namespace

Universe merge_universes(const Universe& a, const Universe& b) {
  if (a == b || b->empty()) return a;
  if (a->empty()) return b;
  if (is_prefix(*b, *a)) return a;
  if (is_prefix(*a, *b)) return b;
  std::vector<std::string> merged = *a;
  for (const auto& name : *b) {
    if (!index_of(*a, name)) merged.push_back(name);
  }
  if (merged.size() == a->size()) return a;
  return std::make_shared<const std::vector<std::string>>(std::move(merged));
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [var, exp] : factors) d += exp;
  return d;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
  const auto& fa = a.factors;
  const auto& fb = b.factors;
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first ? 1 : -1;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second ? 1 : -1;
  }
  if (i < fa.size()) return 1;
  if (i < fb.size()) return -1;
  return 0;
}

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    if (a.factors[i].first == b.factors[j].first) {
      out.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
      ++i;
      ++j;
    } else if (a.factors[i].first < b.factors[j].first) {
      out.factors.push_back(a.factors[i++]);
    } else {
      out.factors.push_back(b.factors[j++]);
    }
  }
  for (; i < a.factors.size(); ++i) out.factors.push_back(a.factors[i]);
  for (; j < b.factors.size(); ++j) out.factors.push_back(b.factors[j]);
  return out;
}

Poly::Poly(Rational constant) : vars_(empty_universe()) {
  if (!constant.is_zero()) terms_.push_back(Term{Monomial{}, std::move(constant)});
}

Poly Poly::variable(const std::string& name) { return variable(name, make_universe({name})); }

Poly Poly::variable(const std::string& name, const Universe& universe) {
  const auto idx = index_of(*universe, name);
  if (!idx) throw std::invalid_argument("parameter '" + name + "' is not in the universe");
  Monomial m;
  m.factors.emplace_back(*idx, 1U);
  return Poly(universe, {Term{std::move(m), Rational(1)}});
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

std::optional<Rational> Poly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (is_constant()) return terms_.front().coeff;
  return std::nullopt;
}

std::vector<std::string> Poly::used_params() const {
  std::vector<bool> used(vars_->size(), false);
  for (const auto& t : terms_) {
    for (const auto& [var, exp] : t.monomial.factors) used[var] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (used[i]) out.push_back((*vars_)[i]);
  }
  return out;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

void Poly::normalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_monomials(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms = std::move(out);
}

Poly Poly::with_universe(const Universe& universe) const {
  if (universe == vars_) return *this;
  if (is_prefix(*vars_, *universe)) return Poly(universe, terms_);
  std::vector<std::uint32_t> remap(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    const auto idx = index_of(*universe, (*vars_)[i]);
    if (idx) {
      remap[i] = *idx;
      continue;
    }
    for (const auto& t : terms_) {
      for (const auto& [var, exp] : t.monomial.factors) {
        if (var == i) throw std::invalid_argument("parameter '" + (*vars_)[i] + "' missing from target universe");
      }
    }
    remap[i] = 0;  // unused
  }
  std::vector<Term> terms = terms_;
  for (auto& t : terms) {
    for (auto& f : t.monomial.factors) f.first = remap[f.first];
    std::sort(t.monomial.factors.begin(), t.monomial.factors.end());
  }
  normalize(terms);
  return Poly(universe, std::move(terms));
}

void Poly::add_scaled(const Poly& o, const Rational& factor) {
  if (o.terms_.empty()) return;
  const Universe u = merge_universes(vars_, o.vars_);
  Poly lhs = with_universe(u);
  const Poly rhs = o.with_universe(u);
  std::vector<Term> out;
  out.reserve(lhs.terms_.size() + rhs.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.terms_.size() || j < rhs.terms_.size()) {
    int c = 0;
    if (i == lhs.terms_.size()) {
      c = -1;
    } else if (j == rhs.terms_.size()) {
      c = 1;
    } else {
      c = compare_monomials(lhs.terms_[i].monomial, rhs.terms_[j].monomial);
    }
    if (c > 0) {
      out.push_back(std::move(lhs.terms_[i++]));
    } else if (c < 0) {
      out.push_back(Term{rhs.terms_[j].monomial, rhs.terms_[j].coeff * factor});
      ++j;
    } else {
      Rational sum = lhs.terms_[i].coeff + rhs.terms_[j].coeff * factor;
      if (!sum.is_zero()) out.push_back(Term{std::move(lhs.terms_[i].monomial), std::move(sum)});
      ++i;
      ++j;
    }
  }
  vars_ = u;
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  add_scaled(o, Rational(1));
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly(merge_universes(a.vars_, b.vars_), {});
  const Universe u = merge_universes(a.vars_, b.vars_);
  if (b.is_constant()) return a.with_universe(u) *= b.terms_.front().coeff;
  if (a.is_constant()) return b.with_universe(u) *= a.terms_.front().coeff;
  const Poly lhs = a.with_universe(u);
  const Poly rhs = b.with_universe(u);
  std::vector<Poly::Term> terms;
  terms.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& x : lhs.terms_) {
    for (const auto& y : rhs.terms_) {
      terms.push_back(Poly::Term{multiply_monomials(x.monomial, y.monomial), x.coeff * y.coeff});
    }
  }
  Poly::normalize(terms);
  return Poly(u, std::move(terms));
}

Poly operator-(Poly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.vars_ == b.vars_) {
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
    }
    return true;
  }
  const Universe u = merge_universes(a.vars_, b.vars_);
  const Poly x = a.with_universe(u);
  const Poly y = b.with_universe(u);
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (x.terms_[i].coeff != y.terms_[i].coeff || !(x.terms_[i].monomial == y.terms_[i].monomial)) return false;
  }
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = negative ? -t.coeff : t.coeff;
    if (t.monomial.is_one()) {
      os << magnitude.str();
      continue;
    }
    if (!magnitude.is_one()) os << magnitude.str() << '*';
    bool first_factor = true;
    for (const auto& [var, exp] : t.monomial.factors) {
      if (!first_factor) os << '*';
      first_factor = false;
      os << (*vars_)[var];
      if (exp > 1) os << '^' << exp;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Universe& universe) : text_(text), fixed_(universe != nullptr) {
    if (universe) names_ = *universe;
  }

  Poly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    std::vector<std::pair<Monomial, Rational>> terms;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_space();
    }
    terms.push_back(parse_term(negative));
    skip_space();
    while (!at_end()) {
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      skip_space();
      terms.push_back(parse_term(op == '-'));
      skip_space();
    }
    const Universe u = make_universe(names_);
    Poly out = Poly(0);
    for (auto& [mono, coeff] : terms) {
      Poly term(coeff);
      for (const auto& [var, exp] : mono.factors) {
        const Poly v = Poly::variable(names_[var], u);
        for (std::uint32_t e = 0; e < exp; ++e) term *= v;
      }
      out += term;
    }
    return out.with_universe(u);
  }

 private:
  std::pair<Monomial, Rational> parse_term(bool negative) {
    Rational coeff(negative ? -1 : 1);
    std::map<std::uint32_t, std::uint32_t> exps;
    while (true) {
      skip_space();
      if (at_end()) fail("unexpected end of input");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::string name = parse_ident();
        std::uint32_t exp = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          get();
          skip_space();
          exp = static_cast<std::uint32_t>(std::stoul(parse_digits()));
          if (exp == 0) fail("zero exponent");
        }
        exps[lookup(name)] += exp;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      if (!at_end() && peek() == '*') {
        get();
        continue;
      }
      break;
    }
    Monomial m;
    for (const auto& [var, exp] : exps) m.factors.emplace_back(var, exp);
    return {std::move(m), std::move(coeff)};
  }

  Rational parse_number() {
    std::string text = parse_digits();
    skip_space();
    if (!at_end() && peek() == '/') {
      get();
      skip_space();
      text += "/" + parse_digits();
    }
    try {
      return Rational::parse(text);
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  std::string parse_digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    if (out.empty()) fail("expected digits");
    return out;
  }

  std::string parse_ident() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) out += get();
    return out;
  }

  std::uint32_t lookup(const std::string& name) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return static_cast<std::uint32_t>(i);
    }
    if (fixed_) fail("unknown parameter '" + name + "'");
    names_.push_back(name);
    return static_cast<std::uint32_t>(names_.size() - 1);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("Poly::parse: " + msg + " in '" + std::string(text_) + "' at " +
                                std::to_string(pos_));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool fixed_;
  std::vector<std::string> names_;
};

}  // namespace

Poly Poly::parse(std::string_view text, const Universe& universe) {
  Poly p = PolyParser(text, universe).parse();
  return universe ? p.with_universe(universe) : p;
}

Poly substitute(const Poly& p, const std::map<std::string, Rational>& bindings) {
  std::map<std::string, Poly> as_polys;
  for (const auto& [name, value] : bindings) as_polys.emplace(name, Poly(value));
  return substitute(p, as_polys);
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings) {
  const auto& names = p.params();
  std::vector<const Poly*> image(names.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto it = bindings.find(names[i]);
    if (it != bindings.end()) {
      image[i] = &it->second;
      any = true;
    }
  }
  if (!any) return p;

  Poly out(p.vars_, {});
  for (const auto& t : p.terms_) {
    Monomial kept;
    Poly factor(t.coeff);
    for (const auto& [var, exp] : t.monomial.factors) {
      if (image[var] == nullptr) {
        kept.factors.emplace_back(var, exp);
        continue;
      }
      for (std::uint32_t e = 0; e < exp; ++e) factor *= *image[var];
    }
    out += Poly(p.vars_, {Poly::Term{std::move(kept), Rational(1)}}) * factor;
  }
  return out;
}

void unify_universes(std::vector<Poly>& polys) {
  Universe u = empty_universe();
  for (const auto& p : polys) u = merge_universes(u, p.universe());
  for (auto& p : polys) p = p.with_universe(u);
}

}  // namespace rquant
