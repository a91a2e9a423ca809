#include "forkalg/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace forkalg {

Laurent Laurent::term(int e, const Int& coeff) {
  Laurent r;
  if (coeff != 0) r.c_[e] = coeff;
  return r;
}

Int Laurent::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (auto& [e, c] : o.c_) {
    Int& v = r.c_[e];
    v += c;
    if (v == 0) r.c_.erase(e);
  }
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (auto& [e1, c1] : c_)
    for (auto& [e2, c2] : o.c_) {
      Int& v = r.c_[e1 + e2];
      v += c1 * c2;
      if (v == 0) r.c_.erase(e1 + e2);
    }
  return r;
}

Laurent Laurent::shifted(int e) const {
  Laurent r;
  for (auto& [d, c] : c_) r.c_[d + e] = c;
  return r;
}

Laurent Laurent::truncated(int D) const {
  Laurent r;
  for (auto& [e, c] : c_)
    if (e <= D) r.c_[e] = c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

Int Laurent::at_one() const {
  Int s = 0;
  for (auto& [e, c] : c_) s += c;
  return s;
}

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : c_) {
    Int a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

Laurent qnum2(int k) {
  Laurent r;
  for (int i = 0; i < k; ++i) r += Laurent::q(2 * i);
  return r;
}

Laurent qfact2(int k) {
  Laurent r(1);
  for (int i = 1; i <= k; ++i) r *= qnum2(i);
  return r;
}

namespace {

// Dense polynomial helpers for reduction of fractions.  Coefficient vectors
// are indexed from degree 0 and keep no trailing zeros.

using Poly = std::vector<Int>;

void strip(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int content(const Poly& p) {
  Int g = 0;
  for (auto& c : p) { g = gcd(g, c); if (g == 1) break; }
  return g;
}

Poly divide_content(Poly p, const Int& g) {
  if (g != 1 && g != 0)
    for (auto& c : p) c /= g;
  return p;
}

Poly primitive(Poly p) {
  strip(p);
  if (p.empty()) return p;
  Int g = content(p);
  p = divide_content(std::move(p), g);
  if (p.back() < 0)
    for (auto& c : p) c = -c;
  return p;
}

// Pseudo-remainder of a by b (b nonzero): lc(b)^(deg a - deg b + 1) * a mod b.
Poly prem(Poly a, const Poly& b) {
  strip(a);
  int db = (int)b.size() - 1;
  while ((int)a.size() - 1 >= db) {
    int da = (int)a.size() - 1;
    Int lc = a.back();
    for (auto& c : a) c *= b.back();
    for (int i = 0; i <= db; ++i) a[da - db + i] -= lc * b[i];
    strip(a);
  }
  return a;
}

// Gcd of primitive polynomials, primitive with positive leading coefficient.
Poly pgcd(Poly a, Poly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  while (!b.empty()) {
    Poly r = primitive(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Exact division, valid when b | a.
Poly pdiv(Poly a, const Poly& b) {
  Poly q;
  strip(a);
  int db = (int)b.size() - 1;
  if ((int)a.size() - 1 >= db) q.assign(a.size() - b.size() + 1, 0);
  while ((int)a.size() - 1 >= db) {
    int da = (int)a.size() - 1;
    Int c = a.back() / b.back();
    q[da - db] = c;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    strip(a);
  }
  return q;
}

Poly to_poly(const Laurent& l, int shift) {
  Poly p;
  if (l.is_zero()) return p;
  p.assign(l.hi() - shift + 1, 0);
  for (auto& [e, c] : l.terms()) p[e - shift] = c;
  return p;
}

Laurent to_laurent(const Poly& p, int shift) {
  Laurent r;
  for (int i = 0; i < (int)p.size(); ++i)
    if (p[i] != 0) r += Laurent::term(i + shift, p[i]);
  return r;
}

}  // namespace

QRat::QRat(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw std::domain_error("QRat: zero denominator");
  if (num.is_zero()) { num_ = Laurent(); den_ = Laurent(1); return; }

  // Pull the powers of q out of den so it becomes a polynomial with nonzero
  // constant term; num absorbs the shift and may stay a genuine Laurent.
  int nlo = num.lo(), dlo = den.lo();
  Poly pn = to_poly(num, nlo);
  Poly pd = to_poly(den, dlo);

  Poly g = pgcd(pn, pd);
  if ((int)g.size() - 1 >= 1 || (!g.empty() && g[0] != 1)) {
    pn = pdiv(std::move(pn), g);
    pd = pdiv(std::move(pd), g);
  }
  Int cn = content(pn), cd = content(pd);
  Int c = gcd(cn, cd);
  pn = divide_content(std::move(pn), c);
  pd = divide_content(std::move(pd), c);
  if (pd.back() < 0) {
    for (auto& x : pn) x = -x;
    for (auto& x : pd) x = -x;
  }
  num_ = to_laurent(pn, nlo - dlo);
  den_ = to_laurent(pd, 0);
}

bool QRat::is_laurent() const {
  return den_ == Laurent(1);
}

QRat QRat::operator-() const { return QRat(-num_, den_); }

QRat QRat::operator+(const QRat& o) const {
  return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
  return QRat(num_ * o.num_, den_ * o.den_);
}

QRat QRat::operator/(const QRat& o) const {
  if (o.is_zero()) throw std::domain_error("QRat: division by zero");
  return QRat(num_ * o.den_, den_ * o.num_);
}

Laurent QRat::series_truncate(int D) const {
  if (num_.is_zero()) return Laurent();
  // den_ has nonzero constant term by canonical form.  Expand 1/den_ as a
  // power series by the defining recursion and check integrality as we go.
  Int c0 = den_.coeff(0);
  int base = num_.lo();
  int len = D - base + 1;
  if (len <= 0) return Laurent();
  std::vector<Int> s(len, 0);
  for (int d = 0; d < len; ++d) {
    Int acc = num_.coeff(base + d);
    for (auto& [e, c] : den_.terms())
      if (e > 0 && e <= d) acc -= c * s[d - e];
    if (acc % c0 != 0)
      throw std::domain_error("series_truncate: non-integral expansion");
    s[d] = acc / c0;
  }
  Laurent r;
  for (int d = 0; d < len; ++d)
    if (s[d] != 0) r += Laurent::term(base + d, s[d]);
  return r;
}

std::string QRat::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace forkalg
