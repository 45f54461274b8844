#include "gaut/poly.hpp"

#include <algorithm>
#include <cassert>

namespace gaut {

int exp_degree(const Exp& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

Exp exp_add(const Exp& a, const Exp& b) {
  assert(a.size() == b.size());
  Exp r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool exp_divides(const Exp& a, const Exp& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp exp_sub(const Exp& a, const Exp& b) {
  assert(a.size() == b.size());
  Exp r = a;
  for (size_t i = 0; i < b.size(); ++i) {
    r[i] -= b[i];
    assert(r[i] >= 0);
  }
  return r;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
  assert(a.size() == b.size());
  Exp r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

bool exp_disjoint(const Exp& a, const Exp& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

bool grlex_greater(const Exp& a, const Exp& b) {
  int da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial Polynomial::constant(const Scalar& c, int nvars) {
  Polynomial p;
  if (!c.is_zero()) p.terms.push_back({Exp(nvars, 0), c});
  return p;
}

Polynomial Polynomial::monomial(const Exp& e, const Scalar& c) {
  Polynomial p;
  if (!c.is_zero()) p.terms.push_back({e, c});
  return p;
}

Polynomial Polynomial::variable(int i, int nvars) {
  Exp e(nvars, 0);
  e[i] = 1;
  return monomial(e, Scalar(1));
}

int Polynomial::total_degree() const {
  return terms.empty() ? -1 : exp_degree(terms[0].first);
}

Scalar Polynomial::coeff(const Exp& e) const {
  for (const auto& t : terms)
    if (t.first == e) return t.second;
  return Scalar();
}

void Polynomial::normalize_sort() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
  std::vector<std::pair<Exp, Scalar>> out;
  for (auto& t : terms) {
    if (t.second.is_zero()) continue;
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.terms.reserve(terms.size() + o.terms.size());
  size_t i = 0, j = 0;
  while (i < terms.size() && j < o.terms.size()) {
    if (terms[i].first == o.terms[j].first) {
      Scalar c = terms[i].second + o.terms[j].second;
      if (!c.is_zero()) r.terms.push_back({terms[i].first, c});
      ++i, ++j;
    } else if (grlex_greater(terms[i].first, o.terms[j].first)) {
      r.terms.push_back(terms[i++]);
    } else {
      r.terms.push_back(o.terms[j++]);
    }
  }
  while (i < terms.size()) r.terms.push_back(terms[i++]);
  while (j < o.terms.size()) r.terms.push_back(o.terms[j++]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  if (is_zero() || o.is_zero()) return r;
  for (const auto& a : terms)
    for (const auto& b : o.terms)
      r.terms.push_back({exp_add(a.first, b.first), a.second * b.second});
  r.normalize_sort();
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r;
  if (c.is_zero()) return r;
  r.terms = terms;
  for (auto& t : r.terms) t.second *= c;
  return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value, int nvars) const {
  (void)nvars;
  Polynomial result;
  for (const auto& t : terms) {
    int k = t.first[var];
    Exp rest = t.first;
    rest[var] = 0;
    Polynomial piece = Polynomial::monomial(rest, t.second);
    for (int i = 0; i < k; ++i) piece = piece * value;
    result = result + piece;
  }
  return result;
}

Polynomial Polynomial::compose(const Polynomial& f, const std::vector<Polynomial>& images,
                               int nvars_out) {
  Polynomial result;
  for (const auto& t : f.terms) {
    Polynomial piece = Polynomial::constant(t.second, nvars_out);
    for (size_t v = 0; v < t.first.size(); ++v)
      for (int i = 0; i < t.first[v]; ++i) piece = piece * images[v];
    result = result + piece;
  }
  return result;
}

Polynomial Polynomial::remap(const std::vector<int>& map, int nvars_out) const {
  Polynomial r;
  for (const auto& t : terms) {
    Exp e(nvars_out, 0);
    for (size_t v = 0; v < t.first.size(); ++v) {
      if (t.first[v] == 0) continue;
      assert(map[v] >= 0 && map[v] < nvars_out);
      e[map[v]] += t.first[v];
    }
    r.terms.push_back({std::move(e), t.second});
  }
  r.normalize_sort();
  return r;
}

}  // namespace gaut
