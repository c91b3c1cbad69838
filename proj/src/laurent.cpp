#include "latspan/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "latspan/errors.hpp"

namespace latspan {

namespace {

void check_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars != b.vars) throw ValidationError("laurent: mismatched variable counts");
}

void insert_term(std::map<ExpVec, BigInt>& terms, const ExpVec& e, const BigInt& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

LaurentPoly LaurentPoly::zero(int vars) {
  LaurentPoly f;
  f.vars = vars;
  return f;
}

LaurentPoly LaurentPoly::constant(int vars, BigInt c) {
  LaurentPoly f;
  f.vars = vars;
  if (c != 0) f.terms.emplace(ExpVec(vars, 0), std::move(c));
  return f;
}

LaurentPoly LaurentPoly::monomial(int vars, ExpVec exps, BigInt coeff) {
  if (int(exps.size()) != vars) throw ValidationError("laurent: exponent vector length != vars");
  LaurentPoly f;
  f.vars = vars;
  if (coeff != 0) f.terms.emplace(std::move(exps), std::move(coeff));
  return f;
}

BigInt LaurentPoly::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms) s += c;
  return s;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_vars(a, b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms) insert_term(out.terms, e, c);
  return out;
}

LaurentPoly neg(const LaurentPoly& a) {
  LaurentPoly out;
  out.vars = a.vars;
  for (const auto& [e, c] : a.terms) out.terms.emplace(e, -c);
  return out;
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return add(a, neg(b)); }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_vars(a, b);
  LaurentPoly out;
  out.vars = a.vars;
  ExpVec e(a.vars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (int k = 0; k < a.vars; ++k) e[k] = ea[k] + eb[k];
      insert_term(out.terms, e, ca * cb);
    }
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }
LaurentPoly operator-(const LaurentPoly& a) { return neg(a); }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.vars == b.vars && a.terms == b.terms;
}

LaurentPoly reciprocal(const LaurentPoly& f) {
  LaurentPoly out;
  out.vars = f.vars;
  ExpVec e(f.vars);
  for (const auto& [ef, c] : f.terms) {
    for (int k = 0; k < f.vars; ++k) e[k] = -ef[k];
    out.terms.emplace(e, c);
  }
  return out;
}

bool unit_equivalent(const LaurentPoly& f, const LaurentPoly& g) {
  check_same_vars(f, g);
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.terms.size() != g.terms.size()) return false;

  // A unit shift translates every exponent uniformly, so it maps the
  // lexicographically smallest exponent of g to that of f.
  const auto& [ef, cf] = *f.terms.begin();
  const auto& [eg, cg] = *g.terms.begin();
  int sign;
  if (cf == cg) {
    sign = 1;
  } else if (cf == -cg) {
    sign = -1;
  } else {
    return false;
  }
  ExpVec shift(f.vars);
  for (int k = 0; k < f.vars; ++k) shift[k] = ef[k] - eg[k];

  ExpVec e(f.vars);
  for (const auto& [eg2, cg2] : g.terms) {
    for (int k = 0; k < f.vars; ++k) e[k] = eg2[k] + shift[k];
    auto it = f.terms.find(e);
    if (it == f.terms.end()) return false;
    if (sign > 0 ? it->second != cg2 : it->second != -cg2) return false;
  }
  return true;
}

namespace {

#ifdef LATSPAN_EXTENDED_EVAL
using EvalComplex = std::complex<long double>;
#else
using EvalComplex = std::complex<double>;
#endif

EvalComplex ipow(EvalComplex base, unsigned long long e) {
  EvalComplex r(1.0, 0.0);
  while (e != 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

EvalComplex unit_power(const EvalComplex& c, long long e) {
  // |c| = 1, so the inverse is the conjugate.
  if (e >= 0) return ipow(c, (unsigned long long)e);
  return ipow(std::conj(c), (unsigned long long)(-(e + 1)) + 1ULL);
}

}  // namespace

std::complex<double> evaluate(const LaurentPoly& f, std::span<const std::complex<double>> point) {
  if (int(point.size()) != f.vars) throw ValidationError("evaluate: point dimension != vars");
  for (const auto& c : point)
    if (std::abs(std::abs(c) - 1.0) > 1e-12)
      throw ValidationError("evaluate: point is off the unit torus");

  EvalComplex acc(0.0, 0.0);
  for (const auto& [e, coeff] : f.terms) {
    EvalComplex mono(1.0, 0.0);
    for (int k = 0; k < f.vars; ++k)
      mono *= unit_power(EvalComplex(point[k].real(), point[k].imag()), e[k]);
    acc += double(coeff.get_d()) * mono;
  }
  return {double(acc.real()), double(acc.imag())};
}

namespace {

// Rendering order: constant first, then terms grouped by their first active
// variable; within a group, smaller |exponent| first and the positive power
// before the negative, recursing on the remaining variables.
bool render_less(const ExpVec& a, const ExpVec& b, std::size_t pos) {
  std::size_t fa = pos, fb = pos;
  while (fa < a.size() && a[fa] == 0) ++fa;
  while (fb < b.size() && b[fb] == 0) ++fb;
  bool za = fa == a.size(), zb = fb == b.size();
  if (za || zb) return za && !zb;
  if (fa != fb) return fa < fb;
  long long ma = std::llabs(a[fa]), mb = std::llabs(b[fb]);
  if (ma != mb) return ma < mb;
  if (a[fa] != b[fb]) return a[fa] > b[fb];  // positive power first
  return render_less(a, b, fa + 1);
}

std::string render_magnitude(const ExpVec& e, const BigInt& abs_coeff) {
  std::ostringstream os;
  bool all_zero = true;
  for (long long x : e)
    if (x != 0) all_zero = false;
  if (all_zero) {
    os << abs_coeff.get_str();
    return os.str();
  }
  bool lead = true;
  if (abs_coeff != 1) {
    os << abs_coeff.get_str();
    lead = false;
  }
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!lead) os << "*";
    lead = false;
    os << "x" << (k + 1);
    if (e[k] != 1) os << "^" << e[k];
  }
  return os.str();
}

}  // namespace

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<const std::pair<const ExpVec, BigInt>*> order;
  order.reserve(f.terms.size());
  for (const auto& t : f.terms) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const auto* x, const auto* y) { return render_less(x->first, y->first, 0); });

  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    bool negative = t->second < 0;
    BigInt mag = negative ? BigInt(-t->second) : t->second;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    os << render_magnitude(t->first, mag);
  }
  return os.str();
}

LaurentMatrix::LaurentMatrix(int size, int vars)
    : size(size), vars(vars), entries(std::size_t(size) * size, LaurentPoly::zero(vars)) {}

LaurentPoly determinant(const LaurentMatrix& m) {
  int n = m.size;
  if (n == 0) return LaurentPoly::constant(m.vars, 1);
  if (n > 16) throw ValidationError("determinant: size guard exceeded (n <= 16)");

  // minor[S] = det of rows 0..|S|-1 on the column set S, built in mask order.
  std::vector<LaurentPoly> minor(std::size_t(1) << n);
  minor[0] = LaurentPoly::constant(m.vars, 1);
  for (std::size_t mask = 1; mask < minor.size(); ++mask) {
    int row = __builtin_popcountll(mask) - 1;
    LaurentPoly acc = LaurentPoly::zero(m.vars);
    int pos = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      const LaurentPoly& entry = m.at(row, j);
      if (!entry.is_zero()) {
        LaurentPoly part = mul(entry, minor[mask ^ (std::size_t(1) << j)]);
        acc = ((row + pos) % 2 == 0) ? add(acc, part) : sub(acc, part);
      }
      ++pos;
    }
    minor[mask] = std::move(acc);
  }
  return minor.back();
}

}  // namespace latspan
