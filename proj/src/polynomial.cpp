#include "walg/polynomial.hpp"

#include <map>
#include <sstream>

#include "walg/errors.hpp"

namespace walg {

std::vector<int> PolyChart::degrees() const {
  std::vector<int> out;
  out.reserve(vars.size());
  for (const auto& v : vars) out.push_back(v.degree);
  return out;
}

bool operator==(const PolyChart& a, const PolyChart& b) {
  if (a.name != b.name || a.vars.size() != b.vars.size()) return false;
  for (std::size_t i = 0; i < a.vars.size(); ++i) {
    const auto& x = a.vars[i];
    const auto& y = b.vars[i];
    if (x.name != y.name || x.weight != y.weight || x.degree != y.degree || x.origin != y.origin)
      return false;
  }
  return true;
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

ChartPtr make_kazhdan_chart(std::string name, const std::vector<std::string>& labels,
                            const std::vector<int>& weights) {
  if (labels.size() != weights.size()) throw DimensionMismatch("make_kazhdan_chart");
  std::vector<ChartVariable> vars;
  for (std::size_t i = 0; i < labels.size(); ++i)
    vars.push_back({labels[i], weights[i], weights[i] + 2, i});
  return make_chart(std::move(name), std::move(vars));
}

ChartPtr make_chart(std::string name, std::vector<ChartVariable> vars) {
  auto c = std::make_shared<PolyChart>();
  c->name = std::move(name);
  c->vars = std::move(vars);
  return c;
}

KazhdanPolynomial::KazhdanPolynomial(ChartPtr chart, PolyTerms terms)
    : chart_(std::move(chart)), terms_(std::move(terms)) {
  for (const auto& [e, c] : terms_.terms())
    if (e.size() != chart_->size()) throw ChartMismatch("exponent length differs from chart");
}

KazhdanPolynomial KazhdanPolynomial::constant(ChartPtr chart, const Rational& c) {
  const std::size_t n = chart->size();
  return monomial(std::move(chart), Exponents(n, 0), c);
}

KazhdanPolynomial KazhdanPolynomial::variable(ChartPtr chart, std::size_t i) {
  Exponents e(chart->size(), 0);
  e.at(i) = 1;
  return monomial(std::move(chart), std::move(e));
}

KazhdanPolynomial KazhdanPolynomial::monomial(ChartPtr chart, Exponents e, const Rational& c) {
  if (e.size() != chart->size()) throw ChartMismatch("exponent length differs from chart");
  KazhdanPolynomial p(std::move(chart));
  p.terms_.add_term(e, c);
  return p;
}

int KazhdanPolynomial::monomial_degree(const Exponents& e) const {
  int deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] * chart_->vars[i].degree;
  return deg;
}

std::optional<int> KazhdanPolynomial::degree() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_.terms()) {
    const int d = monomial_degree(e);
    if (!best || d > *best) best = d;
  }
  return best;
}

bool KazhdanPolynomial::is_homogeneous() const {
  std::optional<int> seen;
  for (const auto& [e, c] : terms_.terms()) {
    const int d = monomial_degree(e);
    if (seen && *seen != d) return false;
    seen = d;
  }
  return true;
}

KazhdanPolynomial KazhdanPolynomial::homogeneous_part(int n) const {
  return {chart_, terms_.filter([&](const Exponents& e) { return monomial_degree(e) == n; })};
}

KazhdanPolynomial KazhdanPolynomial::derivative(std::size_t i) const {
  KazhdanPolynomial out(chart_);
  for (const auto& [e, c] : terms_.terms()) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    out.terms_.add_term(f, c * e[i]);
  }
  return out;
}

KazhdanPolynomial KazhdanPolynomial::pow(unsigned k) const {
  KazhdanPolynomial result = constant(chart_, 1);
  KazhdanPolynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

KazhdanPolynomial KazhdanPolynomial::substitute(
    const ChartPtr& target, const std::vector<KazhdanPolynomial>& images) const {
  if (images.size() != chart_->size()) throw ChartMismatch("substitute: one image per variable");
  for (const auto& im : images)
    if (!same_chart(im.chart(), target)) throw ChartMismatch("substitute: images on different charts");
  std::vector<std::vector<KazhdanPolynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const KazhdanPolynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(constant(target, 1));
    while (p.size() <= k) p.push_back(p.back() * images[i]);
    return p[k];
  };
  KazhdanPolynomial out(target);
  for (const auto& [e, c] : terms_.terms()) {
    KazhdanPolynomial term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

void KazhdanPolynomial::require_same_chart(const KazhdanPolynomial& o) const {
  if (!same_chart(chart_, o.chart_)) throw ChartMismatch("polynomials on different charts");
}

KazhdanPolynomial& KazhdanPolynomial::operator+=(const KazhdanPolynomial& o) {
  require_same_chart(o);
  terms_ += o.terms_;
  return *this;
}

KazhdanPolynomial& KazhdanPolynomial::operator-=(const KazhdanPolynomial& o) {
  require_same_chart(o);
  terms_ -= o.terms_;
  return *this;
}

KazhdanPolynomial& KazhdanPolynomial::operator*=(const Rational& s) {
  terms_ *= s;
  return *this;
}

KazhdanPolynomial operator*(const KazhdanPolynomial& a, const KazhdanPolynomial& b) {
  a.require_same_chart(b);
  KazhdanPolynomial out(a.chart_);
  const std::size_t n = a.chart_->size();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_.terms())
    for (const auto& [eb, cb] : b.terms_.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.terms_.add_term(e, ca * cb);
    }
  return out;
}

bool operator==(const KazhdanPolynomial& a, const KazhdanPolynomial& b) {
  return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_;
}

std::string KazhdanPolynomial::to_string() const {
  if (terms_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& t = terms_.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto& [e, coeff] = *it;
    Rational c = coeff;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    bool any = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      mono << chart_->vars[i].name;
      if (e[i] > 1) mono << "^" << e[i];
      any = true;
    }
    if (!any) os << c.get_str();
    else if (c != 1) os << c.get_str() << "*" << mono.str();
    else os << mono.str();
    first = false;
  }
  return os.str();
}

namespace {

void enumerate(const std::vector<int>& degrees, std::size_t i, int left, Exponents& e,
               std::vector<Exponents>& out) {
  if (i == degrees.size()) {
    if (left == 0) out.push_back(e);
    return;
  }
  for (int k = left / degrees[i]; k >= 0; --k) {
    e[i] = static_cast<std::uint16_t>(k);
    enumerate(degrees, i + 1, left - k * degrees[i], e, out);
  }
  e[i] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(const std::vector<int>& degrees, int n) {
  for (int d : degrees)
    if (d <= 0) throw InvalidInput("monomials_of_degree needs positive degrees");
  std::vector<Exponents> out;
  if (n < 0) return out;
  Exponents e(degrees.size(), 0);
  enumerate(degrees, 0, n, e, out);
  return out;
}

std::vector<std::size_t> hilbert_series(const std::vector<int>& degrees, int n_max) {
  if (n_max < 0) return {};
  std::vector<std::size_t> coeffs(static_cast<std::size_t>(n_max) + 1, 0);
  coeffs[0] = 1;
  for (int d : degrees) {
    if (d <= 0) throw InvalidInput("hilbert_series needs positive degrees");
    for (int n = d; n <= n_max; ++n) coeffs[n] += coeffs[n - d];
  }
  return coeffs;
}

}  // namespace walg
