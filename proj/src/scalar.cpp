#include "gaut/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace gaut {

namespace {

// canonical form: no trailing zero exponents
void trim(ParamPoly::Exp& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

int exp_total(const ParamPoly::Exp& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// graded lex, a "greater" means earlier in the term list
bool exp_greater(const ParamPoly::Exp& a, const ParamPoly::Exp& b) {
  int da = exp_total(a), db = exp_total(b);
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

int ParamPoly::total_degree() const {
  return terms.empty() ? -1 : exp_total(terms[0].first);
}

void ParamPoly::normalize_sort() {
  for (auto& t : terms) trim(t.first);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return exp_greater(a.first, b.first); });
  std::vector<std::pair<Exp, Rat>> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  terms = std::move(out);
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r;
  r.terms.reserve(terms.size() + o.terms.size());
  size_t i = 0, j = 0;
  while (i < terms.size() && j < o.terms.size()) {
    if (terms[i].first == o.terms[j].first) {
      Rat c = terms[i].second + o.terms[j].second;
      if (c != 0) r.terms.push_back({terms[i].first, c});
      ++i, ++j;
    } else if (exp_greater(terms[i].first, o.terms[j].first)) {
      r.terms.push_back(terms[i++]);
    } else {
      r.terms.push_back(o.terms[j++]);
    }
  }
  while (i < terms.size()) r.terms.push_back(terms[i++]);
  while (j < o.terms.size()) r.terms.push_back(o.terms[j++]);
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  ParamPoly r;
  if (is_zero() || o.is_zero()) return r;
  // constant fast paths cover the pure-Q case
  if (is_constant()) return o.scaled(constant_value());
  if (o.is_constant()) return scaled(o.constant_value());
  for (const auto& a : terms)
    for (const auto& b : o.terms) {
      Exp e = a.first;
      if (e.size() < b.first.size()) e.resize(b.first.size(), 0);
      for (size_t k = 0; k < b.first.size(); ++k) e[k] += b.first[k];
      r.terms.push_back({std::move(e), a.second * b.second});
    }
  r.normalize_sort();
  return r;
}

ParamPoly ParamPoly::scaled(const Rat& c) const {
  ParamPoly r;
  if (c == 0) return r;
  r.terms = terms;
  for (auto& t : r.terms) t.second *= c;
  return r;
}

namespace {

int nvars_of(const ParamPoly& p) {
  size_t n = 0;
  for (auto& t : p.terms) n = std::max(n, t.first.size());
  return (int)n;
}

// univariate polynomial division with remainder over Q
void divmod_uni(const ParamPoly& a, const ParamPoly& b, ParamPoly& q, ParamPoly& r) {
  q = ParamPoly();
  r = a;
  int db = b.total_degree();
  assert(db >= 0);
  Rat lb = b.terms[0].second;
  while (!r.is_zero() && r.total_degree() >= db) {
    int k = r.total_degree() - db;
    Rat c = r.terms[0].second / lb;
    ParamPoly m;
    ParamPoly::Exp e;
    if (k > 0) e.push_back(k);
    m.terms.push_back({e, c});
    q = q + m;
    r = r - m * b;
  }
}

}  // namespace

ParamPoly ParamPoly::divexact(const ParamPoly& d) const {
  assert(!d.is_zero());
  if (d.is_constant()) return scaled(Rat(1) / d.constant_value());
  if (is_zero()) return ParamPoly();
  if (nvars_of(*this) <= 1 && nvars_of(d) <= 1) {
    ParamPoly q, r;
    divmod_uni(*this, d, q, r);
    assert(r.is_zero());
    return q;
  }
  // multivariate exact division by long division on the leading term
  ParamPoly q, r = *this;
  const Exp& lde = d.terms[0].first;
  while (!r.is_zero()) {
    Exp e = r.terms[0].first;
    if (e.size() < lde.size()) e.resize(lde.size(), 0);
    for (size_t k = 0; k < lde.size(); ++k) {
      e[k] -= lde[k];
      assert(e[k] >= 0);
    }
    while (!e.empty() && e.back() == 0) e.pop_back();
    ParamPoly m;
    m.terms.push_back({e, r.terms[0].second / d.terms[0].second});
    q = q + m;
    r = r - m * d;
  }
  return q;
}

namespace {

// gcd of the monomial parts: componentwise min over all exponent vectors
ParamPoly::Exp monomial_content(const ParamPoly& p) {
  ParamPoly::Exp m;
  bool first = true;
  for (auto& t : p.terms) {
    if (first) {
      m = t.first;
      first = false;
    } else {
      if (m.size() > t.first.size()) m.resize(t.first.size());
      for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], k < t.first.size() ? t.first[k] : 0);
    }
  }
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

ParamPoly shift_down(const ParamPoly& p, const ParamPoly::Exp& m) {
  if (m.empty()) return p;
  ParamPoly r = p;
  for (auto& t : r.terms)
    for (size_t k = 0; k < m.size(); ++k) t.first[k] -= m[k];
  return r;
}

}  // namespace

ParamPoly param_gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return ParamPoly(Rat(1));
  int n = std::max(nvars_of(a), nvars_of(b));
  if (n <= 1) {
    // monic Euclid over Q[a]
    ParamPoly f = a, g = b;
    while (!g.is_zero()) {
      ParamPoly q, r;
      divmod_uni(f, g, q, r);
      f = g;
      g = r;
    }
    return f.scaled(Rat(1) / f.terms[0].second);  // monic
  }
  // multivariate: only the monomial content (keeps fractions exact, if not
  // always fully reduced -- fine at desk scale, zero tests stay decidable)
  ParamPoly::Exp ma = monomial_content(a), mb = monomial_content(b);
  ParamPoly::Exp m(std::min(ma.size(), mb.size()), 0);
  for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(ma[k], mb[k]);
  ParamPoly g;
  g.terms.push_back({m, Rat(1)});
  g.normalize_sort();
  return g;
}

Rat Scalar::rational_value() const {
  assert(is_constant());
  if (num.is_zero()) return Rat(0);
  return num.constant_value() / den.constant_value();
}

void Scalar::reduce() {
  assert(!den.is_zero());
  if (num.is_zero()) {
    den = ParamPoly(Rat(1));
    return;
  }
  if (num.is_constant() && den.is_constant()) {
    Rat v = num.constant_value() / den.constant_value();
    num = ParamPoly(v);
    den = ParamPoly(Rat(1));
    return;
  }
  ParamPoly g = param_gcd(num, den);
  if (!g.is_constant() || g.constant_value() != 1) {
    num = num.divexact(g);
    den = den.divexact(g);
  }
  // canonical form: monic denominator
  Rat lc = den.terms[0].second;
  if (lc != 1) {
    den = den.scaled(Rat(1) / lc);
    num = num.scaled(Rat(1) / lc);
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (is_constant() && o.is_constant()) return Scalar(rational_value() + o.rational_value());
  return Scalar(num * o.den + o.num * den, den * o.den);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num = -r.num;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  if (is_constant() && o.is_constant()) return Scalar(rational_value() * o.rational_value());
  return Scalar(num * o.num, den * o.den);
}

Scalar Scalar::operator/(const Scalar& o) const {
  assert(!o.is_zero());
  if (is_zero()) return Scalar();
  if (is_constant() && o.is_constant()) return Scalar(rational_value() / o.rational_value());
  return Scalar(num * o.den, den * o.num);
}

Scalar Scalar::inv() const {
  assert(!is_zero());
  if (is_constant()) return Scalar(Rat(1) / rational_value());
  return Scalar(den, num);
}

std::string ParamPoly::str(const std::vector<std::string>& params) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms) {
    Rat c = t.second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    Rat ac = abs(c);
    std::string mono;
    for (size_t k = 0; k < t.first.size(); ++k) {
      if (t.first[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += params[k];
      if (t.first[k] > 1) mono += "^" + std::to_string(t.first[k]);
    }
    if (mono.empty()) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

std::string Scalar::str(const std::vector<std::string>& params) const {
  if (den.is_constant() && den.constant_value() == 1) {
    if (num.is_constant()) return num.is_zero() ? "0" : num.constant_value().get_str();
    return num.terms.size() == 1 ? num.str(params) : "(" + num.str(params) + ")";
  }
  std::string n = num.terms.size() == 1 ? num.str(params) : "(" + num.str(params) + ")";
  std::string d = den.terms.size() == 1 ? den.str(params) : "(" + den.str(params) + ")";
  return n + "/" + d;
}

}  // namespace gaut
