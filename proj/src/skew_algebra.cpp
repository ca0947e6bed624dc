#include "skewdg/skew_algebra.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "skewdg/errors.hpp"

namespace skewdg {

SkewMonomial SkewMonomial::letter(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw InputError("letter x" + std::to_string(i) + " out of range");
  SkewMonomial m = one(n);
  m.exponents[i - 1] = 1;
  return m;
}

unsigned SkewMonomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

SignedMonomial normalize_word(const std::vector<std::size_t>& letters, std::size_t n) {
  SkewMonomial m = SkewMonomial::one(n);
  // inversions: for each letter, count earlier letters strictly greater.
  std::vector<unsigned> seen(n + 1, 0);
  unsigned long inv = 0;
  for (std::size_t l : letters) {
    if (l < 1 || l > n) throw InputError("letter x" + std::to_string(l) + " out of range");
    for (std::size_t g = l + 1; g <= n; ++g) inv += seen[g];
    ++seen[l];
    ++m.exponents[l - 1];
  }
  return {inv % 2 ? -1 : 1, std::move(m)};
}

SignedMonomial mono_mul(const SkewMonomial& a, const SkewMonomial& b) {
  if (a.n() != b.n()) throw InputError("mono_mul: mismatched n");
  std::size_t n = a.n();
  unsigned long count = 0;
  unsigned long suffix = 0;  // sum of a_i for i > j
  SkewMonomial p = a;
  for (std::size_t j = n; j-- > 0;) {
    count += suffix * b.exponents[j];
    suffix += a.exponents[j];
    p.exponents[j] += b.exponents[j];
  }
  return {count % 2 ? -1 : 1, std::move(p)};
}

SkewElement SkewElement::constant(std::size_t n, const Scalar& c) {
  SkewElement e(n);
  e.add_term(SkewMonomial::one(n), c);
  return e;
}

SkewElement SkewElement::monomial(const SkewMonomial& m, const Scalar& c) {
  SkewElement e(m.n());
  e.add_term(m, c);
  return e;
}

SkewElement SkewElement::letter(std::size_t n, std::size_t i, const Scalar& c) {
  return monomial(SkewMonomial::letter(n, i), c);
}

SkewElement SkewElement::linear(const Vec& coeffs) {
  SkewElement e(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.add_term(SkewMonomial::letter(coeffs.size(), i + 1), coeffs[i]);
  return e;
}

int SkewElement::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return -1;
  return static_cast<int>(d);
}

Scalar SkewElement::coefficient(const SkewMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

SkewElement SkewElement::component(unsigned d) const {
  SkewElement out(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

void SkewElement::add_term(const SkewMonomial& m, const Scalar& c) {
  if (m.n() != n_) throw InputError("monomial over a different n");
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void SkewElement::check_n(const SkewElement& o) const {
  if (n_ != o.n_) throw InputError("mixing elements over different n");
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  check_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
  check_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SkewElement& SkewElement::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

SkewElement SkewElement::operator-() const {
  SkewElement e = *this;
  return e *= Scalar(-1);
}

std::string monomial_str(const SkewMonomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.n(); ++i) {
    if (!m.exponents[i]) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (m.exponents[i] > 1) s += '^' + std::to_string(m.exponents[i]);
  }
  return s.empty() ? "1" : s;
}

std::string SkewElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool neg = sgn(c) < 0;
    Scalar a = abs(c);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool unit = m.degree() == 0;
    if (unit)
      out += a.get_str();
    else if (a == 1)
      out += monomial_str(m);
    else
      out += a.get_str() + "*" + monomial_str(m);
  }
  return out;
}

SkewElement elt_mul(const SkewElement& u, const SkewElement& v) {
  if (u.n() != v.n()) throw InputError("elt_mul: mismatched n");
  SkewElement out(u.n());
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) {
      auto p = mono_mul(a, b);
      out.add_term(p.monomial, Scalar(p.sign > 0 ? ca * cb : Scalar(-(ca * cb))));
    }
  return out;
}

static void fill_basis(std::size_t n, unsigned d, std::size_t pos, std::vector<unsigned>& cur,
                       std::vector<SkewMonomial>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.emplace_back(cur);
    return;
  }
  for (unsigned a = d + 1; a-- > 0;) {
    cur[pos] = a;
    fill_basis(n, d - a, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<SkewMonomial> graded_basis(std::size_t n, unsigned d) {
  std::vector<SkewMonomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(n, 0);
  fill_basis(n, d, 0, cur, out);
  return out;
}

std::size_t graded_dim(std::size_t n, unsigned d) {
  if (n == 0) return d == 0 ? 1 : 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n + d - 1, n - 1);
  return c.get_ui();
}

BasisIndex::BasisIndex(std::size_t n, unsigned d) : basis_(graded_basis(n, d)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i].exponents, i);
}

std::size_t BasisIndex::index(const SkewMonomial& m) const {
  auto it = index_.find(m.exponents);
  if (it == index_.end()) throw InternalError("monomial " + monomial_str(m) + " not in this graded piece");
  return it->second;
}

Vec BasisIndex::coords(const SkewElement& u) const {
  Vec v(basis_.size());
  for (const auto& [m, c] : u.terms()) v[index(m)] = c;
  return v;
}

SkewElement BasisIndex::element(const Vec& coords) const {
  std::size_t n = basis_.empty() ? 0 : basis_[0].n();
  SkewElement e(n);
  for (std::size_t i = 0; i < coords.size(); ++i) e.add_term(basis_[i], coords[i]);
  return e;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  std::size_t n;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("cannot parse element '" + std::string(s) + "' at " + std::to_string(pos) + ": " + why);
  }
  unsigned long number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return std::stoul(std::string(s.substr(start, pos - start)));
  }
  Scalar rational() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    return parse_scalar(s.substr(start, pos - start));
  }
  // term := factor ('*' factor)*
  SkewElement term() {
    Scalar coef = 1;
    std::vector<std::size_t> word;
    for (;;) {
      skip();
      if (pos >= s.size()) fail("expected factor");
      char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= rational();
      } else if (c == 'x') {
        ++pos;
        std::size_t letter = number();
        unsigned long e = 1;
        skip();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          skip();
          e = number();
        }
        for (unsigned long k = 0; k < e; ++k) word.push_back(letter);
      } else {
        fail("unexpected character");
      }
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    auto nm = normalize_word(word, n);
    return SkewElement::monomial(nm.monomial, nm.sign > 0 ? coef : Scalar(-coef));
  }
  SkewElement parse() {
    SkewElement out(n);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected + or -");
      }
      SkewElement t = term();
      if (sign < 0) t *= Scalar(-1);
      out += t;
      first = false;
    }
    if (first) fail("empty element");
    return out;
  }
};

}  // namespace

SkewElement parse_element(std::string_view text, std::size_t n) {
  Parser p{text, 0, n};
  return p.parse();
}

}  // namespace skewdg
