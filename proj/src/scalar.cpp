#include "grouplike/scalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace grouplike {

// ---------------------------------------------------------------------------
// rationals

Rat parse_rat(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail("ParseError", "empty rational");
  auto bad = [&]() -> void { fail("ParseError", "bad rational '" + text + "'"); };
  size_t slash = s.find('/');
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto check = [&](const std::string& part, bool sign_ok) {
    if (part.empty()) bad();
    size_t i = (sign_ok && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
  };
  check(ns, true);
  check(ds, false);
  Int n(ns), d(ds);
  if (d == 0) bad();
  return Rat(n, d);
}

std::string gauss_str(const GaussRat& c) {
  if (c.is_zero()) return "0";
  std::string out;
  if (c.re != 0) out += rat_str(c.re);
  if (c.im != 0) {
    if (!out.empty() && c.im > 0) out += "+";
    if (c.im == -1)
      out += "-";
    else if (c.im != 1)
      out += rat_str(c.im);
    out += "i";
  }
  return out;
}

// ---------------------------------------------------------------------------
// angle formatting and parsing

namespace {

// One symbolic term "p*sym/q" with the conventional shortenings.
void append_term(std::string& out, const Rat& c, const char* sym) {
  if (c == 0) return;
  Rat a = c < 0 ? -c : c;
  if (out.empty())
    out += (c < 0 ? "-" : "");
  else
    out += (c < 0 ? "-" : "+");
  if (!sym) {
    out += rat_str(a);
    return;
  }
  Int n = num(a), d = den(a);
  if (n != 1) out += n.str() + "*";
  out += sym;
  if (d != 1) out += "/" + d.str();
}

} // namespace

std::string angle_str(const Angle& a) {
  std::string out;
  append_term(out, a.r0, nullptr);
  append_term(out, a.rlam, "lam");
  append_term(out, a.rpi, "2pi");
  append_term(out, a.ra1, "a1");
  append_term(out, a.ra2, "a2");
  return out.empty() ? "0" : out;
}

Angle parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail("ParseError", "empty angle expression");

  Angle result;
  size_t i = 0;
  while (i < s.size()) {
    Rat sign(1);
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      if (i == s.size()) fail("ParseError", "dangling sign in angle '" + text + "'");
    }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string chunk = s.substr(i, j - i);
    i = j;

    // Symbol search order matters: "2pi" must win over the leading digit and
    // over "pi"; "pi" alone means half of a full turn.
    static const std::array<std::pair<const char*, int>, 5> syms = {
        {{"2pi", 2}, {"lam", 1}, {"a1", 3}, {"a2", 4}, {"pi", 2}}};
    const char* found = nullptr;
    int slot = 0;
    size_t pos = std::string::npos;
    for (const auto& [name, sl] : syms) {
      size_t p = chunk.find(name);
      if (p != std::string::npos) {
        found = name;
        slot = sl;
        pos = p;
        break;
      }
    }

    Rat coeff;
    if (!found) {
      coeff = sign * parse_rat(chunk);
      slot = 0;
    } else {
      std::string pre = chunk.substr(0, pos);
      std::string post = chunk.substr(pos + std::string(found).size());
      Rat c(1);
      if (!pre.empty()) {
        if (pre.back() == '*') pre.pop_back();
        if (pre.empty()) fail("ParseError", "bad angle term in '" + text + "'");
        c = parse_rat(pre);
      }
      if (!post.empty()) {
        if (post[0] != '/') fail("ParseError", "bad angle term in '" + text + "'");
        Rat d = parse_rat(post.substr(1));
        if (d == 0) fail("ParseError", "zero denominator in '" + text + "'");
        c /= d;
      }
      if (std::string(found) == "pi") c /= 2; // pi = (1/2) * 2pi
      coeff = sign * c;
    }

    switch (slot) {
      case 0: result.r0 += coeff; break;
      case 1: result.rlam += coeff; break;
      case 2: result.rpi += coeff; break;
      case 3: result.ra1 += coeff; break;
      case 4: result.ra2 += coeff; break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// lattice congruence

namespace {

std::array<Rat, 5> coords(const Angle& a) { return {a.r0, a.rlam, a.rpi, a.ra1, a.ra2}; }

/* Row-style Hermite reduction of an integer matrix. Only the echelon shape is
 * needed for membership testing: rows with strictly increasing leading
 * columns, positive leading entries. */
std::vector<std::vector<Int>> hermite_rows(std::vector<std::vector<Int>> rows) {
  const size_t ncols = 5;
  size_t t = 0;
  for (size_t c = 0; c < ncols && t < rows.size(); ++c) {
    size_t pivot = t;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[t], rows[pivot]);
    for (size_t i = t + 1; i < rows.size(); ++i) {
      while (rows[i][c] != 0) {
        Int q = rows[t][c] / rows[i][c];
        for (size_t j = 0; j < ncols; ++j) rows[t][j] -= q * rows[i][j];
        std::swap(rows[t], rows[i]);
      }
    }
    if (rows[t][c] < 0)
      for (auto& v : rows[t]) v = -v;
    ++t;
  }
  rows.resize(t);
  return rows;
}

} // namespace

bool angle_congruent(const Angle& a, const Angle& b, const std::vector<Angle>& lattice_gens) {
  if (lattice_gens.empty()) fail("EmptyLattice", "angle_congruent needs at least one generator");

  // Clear denominators so membership becomes an integer-lattice question.
  Int scale(1);
  auto bump = [&](const Angle& t) {
    for (const Rat& x : coords(t)) scale = boost::multiprecision::lcm(scale, den(x));
  };
  Angle diff = a - b;
  bump(diff);
  for (const Angle& g : lattice_gens) bump(g);

  auto to_int = [&](const Angle& t) {
    std::vector<Int> v;
    for (const Rat& x : coords(t)) v.push_back(num(x) * (scale / den(x)));
    return v;
  };

  std::vector<std::vector<Int>> rows;
  for (const Angle& g : lattice_gens) rows.push_back(to_int(g));
  rows = hermite_rows(std::move(rows));

  std::vector<Int> z = to_int(diff);
  for (const auto& row : rows) {
    size_t c = 0;
    while (c < 5 && row[c] == 0) ++c;
    if (c == 5) continue;
    if (z[c] == 0) continue;
    if (z[c] % row[c] != 0) return false;
    Int q = z[c] / row[c];
    for (size_t j = 0; j < 5; ++j) z[j] -= q * row[j];
  }
  return std::all_of(z.begin(), z.end(), [](const Int& v) { return v == 0; });
}

// ---------------------------------------------------------------------------
// scalars

Scalar Scalar::from_coeff(const GaussRat& c) {
  Scalar s;
  if (!c.is_zero()) s.terms_[Phase::one()] = c;
  return s;
}

Scalar Scalar::unit_phase(const Angle& exponent) { return term(GaussRat(Rat(1)), exponent); }

Scalar Scalar::term(const GaussRat& c, const Angle& exponent) {
  Scalar s;
  if (!c.is_zero()) s.terms_[Phase::of(exponent)] = c;
  return s;
}

bool Scalar::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [p, c] = *terms_.begin();
  return c.re == 1 && c.im == 0 && p.is_one();
}

Scalar Scalar::conj() const {
  Scalar out;
  for (const auto& [p, c] : terms_) {
    Phase q = p.inverse();
    auto it = out.terms_.find(q);
    if (it == out.terms_.end())
      out.terms_[q] = c.conj();
    else {
      it->second = it->second + c.conj();
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

Scalar Scalar::monomial_inverse() const {
  if (!is_monomial()) fail("NotInvertible", "scalar is not a single term: " + str());
  const auto& [p, c] = *terms_.begin();
  return term(c.inverse(), -p.exp);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar out = a;
  for (const auto& [p, c] : b.terms_) {
    auto it = out.terms_.find(p);
    if (it == out.terms_.end()) {
      out.terms_[p] = c;
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

Scalar operator-(const Scalar& a) {
  Scalar out = a;
  for (auto& [p, c] : out.terms_) c = -c;
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      Phase p = pa * pb;
      GaussRat c = ca * cb;
      auto it = out.terms_.find(p);
      if (it == out.terms_.end()) {
        if (!c.is_zero()) out.terms_[p] = c;
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

bool operator<(const Scalar& a, const Scalar& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    const GaussRat &x = ia->second, &y = ib->second;
    if (x.re != y.re) return x.re < y.re;
    if (x.im != y.im) return x.im < y.im;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    std::string cs = gauss_str(c);
    bool needs_parens = cs.find('+') != std::string::npos ||
                        cs.find('-', 1) != std::string::npos;
    if (!first) out += " + ";
    first = false;
    if (p.is_one()) {
      out += needs_parens ? "(" + cs + ")" : cs;
      continue;
    }
    std::string ph = "e^{i(" + angle_str(p.exp) + ")}";
    if (cs == "1")
      out += ph;
    else if (cs == "-1")
      out += "-" + ph;
    else
      out += (needs_parens ? "(" + cs + ")" : cs) + "*" + ph;
  }
  return out;
}

// ---------------------------------------------------------------------------
// scalar fractions

ScalarFrac::ScalarFrac(Scalar n, Scalar d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) fail("DivisionByZero", "scalar fraction with zero denominator");
  normalize();
}

void ScalarFrac::normalize() {
  if (num_.is_zero()) {
    den_ = Scalar(1);
    return;
  }
  // Cancel the invertible part: scale so the denominator's first term is 1.
  const auto& [p, c] = *den_.terms().begin();
  Scalar u = Scalar::term(c.inverse(), -p.exp);
  num_ = num_ * u;
  den_ = den_ * u;
}

std::optional<Scalar> ScalarFrac::as_scalar() const {
  if (den_.is_one()) return num_;
  return std::nullopt;
}

ScalarFrac ScalarFrac::inverse() const {
  if (num_.is_zero()) fail("DivisionByZero", "inverse of zero scalar fraction");
  return ScalarFrac(den_, num_);
}

ScalarFrac operator+(const ScalarFrac& a, const ScalarFrac& b) {
  if (a.den_ == b.den_) return ScalarFrac(a.num_ + b.num_, a.den_);
  return ScalarFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ScalarFrac operator-(const ScalarFrac& a) { return ScalarFrac(-a.num_, a.den_); }

ScalarFrac operator-(const ScalarFrac& a, const ScalarFrac& b) { return a + (-b); }

ScalarFrac operator*(const ScalarFrac& a, const ScalarFrac& b) {
  return ScalarFrac(a.num_ * b.num_, a.den_ * b.den_);
}

ScalarFrac operator/(const ScalarFrac& a, const ScalarFrac& b) { return a * b.inverse(); }

bool operator==(const ScalarFrac& a, const ScalarFrac& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ScalarFrac::str() const {
  if (auto s = as_scalar()) return s->str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace grouplike
