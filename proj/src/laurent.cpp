#include "theta/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace theta {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::u: return "u";
    case Var::q: return "q";
    case Var::zeta: return "zeta";
  }
  return "?";
}

std::optional<Var> var_from_name(std::string_view name) {
  for (Var v : kAllVars) {
    if (var_name(v) == name) return v;
  }
  return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] + other.exps_[i];
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = -exps_[i];
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

LaurentPoly::LaurentPoly(const Monomial& m, Integer coeff) {
  if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  LaurentPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
  return out;
}

bool LaurentPoly::free_of(Var v) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [v](const auto& t) { return t.first.exponent(v) == 0; });
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(std::int64_t max_exp, std::int64_t trunc, SeriesVar var)
    : max_exp_(max_exp), trunc_(trunc), var_(var) {
  if (trunc < 1) throw DomainError("series truncation order must be positive");
}

LaurentSeries LaurentSeries::constant(const LaurentPoly& c, std::int64_t trunc, SeriesVar var) {
  LaurentSeries s(0, trunc, var);
  s.add_term(0, c);
  return s;
}

LaurentPoly LaurentSeries::coefficient(std::int64_t d) const {
  if (!tracks(d)) {
    throw DomainError("coefficient of exponent " + std::to_string(d) +
                      " lies outside the tracked window");
  }
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

std::optional<std::int64_t> LaurentSeries::leading_exp() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first;
}

void LaurentSeries::add_term(std::int64_t d, const LaurentPoly& c) {
  if (d > max_exp_ || d < min_tracked()) {
    throw DomainError("exponent " + std::to_string(d) + " outside series window");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
  LaurentSeries out(max_exp_ + k, trunc_, var_);
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d + k, c);
  return out;
}

LaurentSeries LaurentSeries::times(const Monomial& m) const {
  LaurentSeries out(max_exp_, trunc_, var_);
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, c.times(m));
  return out;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& [d, c] : out.coeffs_) c = -c;
  return out;
}

namespace {

void require_same_var(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.var() != b.var()) throw DomainError("series in different variables");
}

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
  require_same_var(a, b);
  const std::int64_t hi = std::max(a.max_exp(), b.max_exp());
  const std::int64_t lo = std::max(a.min_tracked(), b.min_tracked());
  LaurentSeries out(hi, hi - lo + 1, a.var());
  for (const auto& [d, c] : a.coeffs()) {
    if (d >= lo) out.add_term(d, c);
  }
  for (const auto& [d, c] : b.coeffs()) {
    if (d >= lo) out.add_term(d, subtract ? -c : c);
  }
  return out;
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, false);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return combine(a, b, true);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_var(a, b);
  LaurentSeries out(a.max_exp_ + b.max_exp_, std::min(a.trunc_, b.trunc_), a.var_);
  const std::int64_t lo = out.min_tracked();
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) {
      if (da + db >= lo) out.add_term(da + db, ca * cb);
    }
  }
  return out;
}

LaurentSeries series_mul(const LaurentSeries& s, const LaurentSeries& t) { return s * t; }

bool LaurentSeries::equals_on_overlap(const LaurentSeries& other) const {
  if (var_ != other.var_) return false;
  const std::int64_t lo = std::max(min_tracked(), other.min_tracked());
  auto restricted = [lo](const std::map<std::int64_t, LaurentPoly>& m) {
    return std::vector<std::pair<std::int64_t, LaurentPoly>>(m.lower_bound(lo), m.end());
  };
  return restricted(coeffs_) == restricted(other.coeffs_);
}

LaurentSeries geom_invert(const LaurentPoly& g, std::int64_t trunc) {
  if (trunc < 1) throw DomainError("geom_invert: truncation order must be positive");
  LaurentSeries out(0, trunc);
  LaurentPoly power(1);
  for (std::int64_t k = 0; k < trunc; ++k) {
    out.add_term(-k, power);
    power *= g;
  }
  return out;
}

LaurentPoly set_q_to_one(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial stripped = m;
    stripped.set_exponent(Var::q, 0);
    out.add_term(stripped, c);
  }
  return out;
}

LaurentSeries set_q_to_one(const LaurentSeries& s) {
  LaurentSeries out(s.max_exp(), s.trunc(), s.var());
  for (const auto& [d, c] : s.coeffs()) out.add_term(d, set_q_to_one(c));
  return out;
}

LaurentSeries adjoin_zeta(const LaurentSeries& s, std::int64_t a) {
  if (a < 1) throw DomainError("adjoin_zeta: a must be positive");
  if (s.var() != SeriesVar::z) throw DomainError("adjoin_zeta: input must be a z-series");
  const std::int64_t scale = 2 * a;
  LaurentSeries out(scale * s.max_exp(), scale * s.trunc(), SeriesVar::zeta);
  for (const auto& [d, c] : s.coeffs()) {
    if (!c.free_of(Var::zeta)) throw DomainError("adjoin_zeta: input already involves zeta");
    out.add_term(scale * d, c);
  }
  return out;
}

LaurentSeries descend_zeta(const LaurentSeries& s, std::int64_t a) {
  if (a < 1) throw DomainError("descend_zeta: a must be positive");
  if (s.var() != SeriesVar::zeta) throw DomainError("descend_zeta: input must be a zeta-series");
  const std::int64_t scale = 2 * a;
  if (s.max_exp() % scale != 0 || s.trunc() % scale != 0) {
    throw DomainError("descend_zeta: window is not aligned to multiples of 2a");
  }
  LaurentSeries out(s.max_exp() / scale, s.trunc() / scale, SeriesVar::z);
  for (const auto& [d, c] : s.coeffs()) {
    if (d % scale != 0) throw DomainError("descend_zeta: exponent not divisible by 2a");
    out.add_term(d / scale, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

void append_power(std::vector<std::string>& factors, std::string_view name, std::int64_t e) {
  if (e == 0) return;
  std::string f(name);
  if (e != 1) f += "^" + std::to_string(e);
  factors.push_back(std::move(f));
}

std::string format_term(const Integer& coeff, std::optional<std::pair<std::string_view, std::int64_t>> series,
                        const Monomial& m) {
  std::vector<std::string> factors;
  if (series) append_power(factors, series->first, series->second);
  for (Var v : kAllVars) append_power(factors, var_name(v), m.exponent(v));

  if (factors.empty()) return coeff.str();
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) body += "*";
    body += factors[i];
  }
  if (coeff == 1) return body;
  if (coeff == -1) return "-" + body;
  return coeff.str() + "*" + body;
}

std::string_view series_var_name(SeriesVar v) { return v == SeriesVar::z ? "z" : "zeta"; }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " + ";
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string to_string(const Monomial& m) { return format_term(1, std::nullopt, m); }

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::string> parts;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    parts.push_back(format_term(it->second, std::nullopt, it->first));
  }
  return join(parts);
}

std::string to_string(const LaurentSeries& s) {
  const std::string_view name = series_var_name(s.var());
  std::vector<std::string> parts;
  for (auto dit = s.coeffs().rbegin(); dit != s.coeffs().rend(); ++dit) {
    const auto& terms = dit->second.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      parts.push_back(format_term(it->second, std::make_pair(name, dit->first), it->first));
    }
  }
  if (parts.empty()) parts.emplace_back("0");
  parts.push_back("O(" + std::string(name) + "^" + std::to_string(s.min_tracked() - 1) + ")");
  return join(parts);
}

std::string to_string(const SeriesMonomial& m, SeriesVar var) {
  return format_term(1, std::make_pair(series_var_name(var), m.series_exp), m.coeff);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::int64_t parse_int64(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw DomainError("malformed exponent '" + text + "'");
  }
  if (used != text.size()) throw DomainError("malformed exponent '" + text + "'");
  return v;
}

struct ParsedTerm {
  Integer coeff = 1;
  std::optional<std::pair<SeriesVar, std::int64_t>> series;
  Monomial mono;
};

ParsedTerm parse_term(const std::string& raw) {
  if (raw.empty()) throw DomainError("empty term");
  ParsedTerm t;
  std::string text = raw;
  if (text.front() == '-' && text.size() > 1 && !std::isdigit(static_cast<unsigned char>(text[1]))) {
    t.coeff = -1;
    text.erase(0, 1);
  }
  for (const std::string& factor : split(text, '*')) {
    if (factor.empty()) throw DomainError("empty factor in term '" + raw + "'");
    const char lead = factor.front();
    if (std::isdigit(static_cast<unsigned char>(lead)) || lead == '-') {
      try {
        t.coeff *= Integer(factor);
      } catch (const std::exception&) {
        throw DomainError("malformed coefficient '" + factor + "'");
      }
      continue;
    }
    std::string name = factor;
    std::int64_t e = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      e = parse_int64(factor.substr(caret + 1));
    }
    if (name == "z") {
      if (t.series) throw DomainError("repeated series variable in '" + raw + "'");
      t.series = std::make_pair(SeriesVar::z, e);
    } else if (auto v = var_from_name(name)) {
      t.mono.set_exponent(*v, t.mono.exponent(*v) + e);
    } else {
      throw DomainError("unknown variable '" + name + "'");
    }
  }
  return t;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text) {
  LaurentPoly out;
  for (const std::string& piece : split(text, '+')) {
    ParsedTerm t = parse_term(piece);
    if (t.series) throw DomainError("polynomial text must not involve z");
    out.add_term(t.mono, t.coeff);
  }
  return out;
}

LaurentSeries parse_series(std::string_view text) {
  std::vector<std::string> pieces = split(text, '+');
  if (pieces.empty() || pieces.back().rfind("O(", 0) != 0 || pieces.back().back() != ')') {
    throw DomainError("series text must end with an O(x^k) marker");
  }
  const std::string order = pieces.back().substr(2, pieces.back().size() - 3);
  pieces.pop_back();

  const auto caret = order.find('^');
  if (caret == std::string::npos) throw DomainError("malformed order marker");
  const std::string name = order.substr(0, caret);
  SeriesVar var;
  if (name == "z") {
    var = SeriesVar::z;
  } else if (name == "zeta") {
    var = SeriesVar::zeta;
  } else {
    throw DomainError("unknown series variable '" + name + "'");
  }
  const std::int64_t untracked = parse_int64(order.substr(caret + 1));

  std::vector<std::pair<std::int64_t, ParsedTerm>> terms;
  for (const std::string& piece : pieces) {
    if (piece == "0") continue;
    ParsedTerm t = parse_term(piece);
    std::int64_t d = 0;
    if (t.series) {
      d = t.series->second;
    } else if (var == SeriesVar::zeta) {
      // In a zeta-series the series variable is spelled like a coefficient variable.
      d = t.mono.exponent(Var::zeta);
      t.mono.set_exponent(Var::zeta, 0);
    }
    if (t.series && var != SeriesVar::z) throw DomainError("mixed series variables");
    terms.emplace_back(d, std::move(t));
  }

  std::int64_t max_exp = untracked + 1;
  for (const auto& [d, t] : terms) max_exp = std::max(max_exp, d);
  LaurentSeries out(max_exp, max_exp - untracked, var);
  for (const auto& [d, t] : terms) out.add_term(d, LaurentPoly(t.mono, t.coeff));
  return out;
}

}  // namespace theta
