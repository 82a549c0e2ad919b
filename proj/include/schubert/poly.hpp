#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "schubert/perm.hpp"

namespace schubert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ZeroPolynomial : std::domain_error {
  ZeroPolynomial() : std::domain_error("operation undefined on the zero polynomial") {}
};

/// Reverse lexicographic comparison: the largest index where the vectors
/// differ decides, and the bigger entry there is the bigger monomial.
inline std::strong_ordering revlex_compare(const ExponentVec& a,
                                           const ExponentVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("revlex_compare: length mismatch");
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] <=> b[k];
  return std::strong_ordering::equal;
}

/// Orders a term map from the revlex-largest monomial down.
struct RevlexDescending {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const {
    return revlex_compare(a, b) > 0;
  }
};

template <class Coeff>
class BasicPolynomial {
 public:
  using coefficient_type = Coeff;
  using TermMap = std::map<ExponentVec, Coeff, RevlexDescending>;

  explicit BasicPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  BasicPolynomial(std::size_t nvars, TermMap terms)
      : nvars_(nvars), terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
    for (const auto& [e, c] : terms_)
      if (e.size() != nvars_)
        throw std::invalid_argument("exponent length does not match nvars");
  }

  static BasicPolynomial constant(std::size_t nvars, Coeff c) {
    TermMap t;
    t.emplace(ExponentVec(nvars), std::move(c));
    return BasicPolynomial(nvars, std::move(t));
  }

  static BasicPolynomial monomial(const ExponentVec& e, Coeff c = Coeff(1)) {
    TermMap t;
    t.emplace(e, std::move(c));
    return BasicPolynomial(e.size(), std::move(t));
  }

  /// x_k for 1-based k.
  static BasicPolynomial variable(std::size_t nvars, std::size_t k) {
    ExponentVec e(nvars);
    e[k - 1] = 1;
    return monomial(e);
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coefficient(const ExponentVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Same polynomial viewed in n variables; dropped variables must be absent.
  BasicPolynomial with_nvars(std::size_t n) const {
    if (n == nvars_) return *this;
    TermMap t;
    for (const auto& [e, c] : terms_) t.emplace(e.resized(n), c);
    return BasicPolynomial(n, std::move(t));
  }

  friend BasicPolynomial operator+(const BasicPolynomial& f,
                                   const BasicPolynomial& g) {
    check_nvars(f, g);
    TermMap t = f.terms_;
    for (const auto& [e, c] : g.terms_) t[e] += c;
    return BasicPolynomial(f.nvars_, std::move(t));
  }

  friend BasicPolynomial operator-(const BasicPolynomial& f) {
    TermMap t = f.terms_;
    for (auto& [e, c] : t) c = -c;
    return BasicPolynomial(f.nvars_, std::move(t));
  }

  friend BasicPolynomial operator-(const BasicPolynomial& f,
                                   const BasicPolynomial& g) {
    return f + (-g);
  }

  friend BasicPolynomial operator*(const BasicPolynomial& f,
                                   const BasicPolynomial& g) {
    check_nvars(f, g);
    TermMap t;
    for (const auto& [a, c] : f.terms_)
      for (const auto& [b, d] : g.terms_) {
        ExponentVec e(f.nvars_);
        for (std::size_t k = 0; k < f.nvars_; ++k) e[k] = a[k] + b[k];
        t[std::move(e)] += c * d;
      }
    return BasicPolynomial(f.nvars_, std::move(t));
  }

  friend BasicPolynomial operator*(const Coeff& s, const BasicPolynomial& f) {
    TermMap t = f.terms_;
    for (auto& [e, c] : t) c *= s;
    return BasicPolynomial(f.nvars_, std::move(t));
  }

  friend bool operator==(const BasicPolynomial& f, const BasicPolynomial& g) {
    return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
  }

 private:
  static void check_nvars(const BasicPolynomial& f, const BasicPolynomial& g) {
    if (f.nvars_ != g.nvars_)
      throw std::invalid_argument("polynomial nvars mismatch: " +
                                  std::to_string(f.nvars_) + " vs " +
                                  std::to_string(g.nvars_));
  }

  std::size_t nvars_;
  TermMap terms_;
};

using Polynomial = BasicPolynomial<Integer>;
using RationalPolynomial = BasicPolynomial<Rational>;

template <class C>
ExponentVec leading_exponent(const BasicPolynomial<C>& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  return f.terms().begin()->first;
}

template <class C>
ExponentVec smallest_exponent(const BasicPolynomial<C>& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  return f.terms().rbegin()->first;
}

/// Divides each coefficient by the product of the factorials of its exponents.
inline RationalPolynomial normalize_N(const Polynomial& f) {
  RationalPolynomial::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    Integer denom = 1;
    for (int a : e)
      for (int k = 2; k <= a; ++k) denom *= k;
    t.emplace(e, Rational(c, denom));
  }
  return RationalPolynomial(f.nvars(), std::move(t));
}

inline Integer eval_all_ones(const Polynomial& f) {
  Integer s = 0;
  for (const auto& [e, c] : f.terms()) s += c;
  return s;
}

// Serialization: header "nvars=<n> terms=<k>", then one "a1 ... an : c" line
// per term in descending revlex order.
inline void write_polynomial(std::ostream& os, const Polynomial& f) {
  os << "nvars=" << f.nvars() << " terms=" << f.size() << '\n';
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t k = 0; k < e.size(); ++k) os << (k ? " " : "") << e[k];
    os << " : " << c << '\n';
  }
}

inline std::string serialize(const Polynomial& f) {
  std::ostringstream os;
  write_polynomial(os, f);
  return os.str();
}

inline Polynomial read_polynomial(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing polynomial header");
  std::size_t nvars = 0, count = 0;
  {
    std::istringstream hs(line);
    std::string a, b;
    hs >> a >> b;
    if (a.rfind("nvars=", 0) != 0 || b.rfind("terms=", 0) != 0)
      throw ParseError("bad polynomial header '" + line + "'");
    try {
      nvars = std::stoul(a.substr(6));
      count = std::stoul(b.substr(6));
    } catch (const std::exception&) {
      throw ParseError("bad polynomial header '" + line + "'");
    }
  }
  Polynomial::TermMap t;
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(is, line)) throw ParseError("truncated polynomial");
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("bad term '" + line + "'");
    std::istringstream es(line.substr(0, colon));
    std::vector<int> e;
    int x;
    while (es >> x) e.push_back(x);
    if (e.size() != nvars) throw ParseError("bad term arity '" + line + "'");
    auto cs = line.substr(colon + 1);
    while (!cs.empty() && cs.front() == ' ') cs.erase(cs.begin());
    Integer c;
    try {
      c = Integer(cs);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + line + "'");
    }
    t.emplace(ExponentVec(std::move(e)), std::move(c));
  }
  return Polynomial(nvars, std::move(t));
}

inline Polynomial deserialize(const std::string& s) {
  std::istringstream is(s);
  return read_polynomial(is);
}

/// Human-readable form, e.g. "x1^2*x2 + x1*x3 - 2". Terms are listed with
/// larger powers of earlier variables first.
template <class C>
std::string to_text(const BasicPolynomial<C>& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<ExponentVec, C>> terms(f.terms().begin(),
                                               f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    C mag = c < 0 ? C(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == 1;
    if (!unit || e.is_zero()) os << mag;
    bool star = !unit;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << (star ? "*" : "") << 'x' << k + 1;
      if (e[k] > 1) os << '^' << e[k];
      star = true;
    }
  }
  return os.str();
}

}  // namespace schubert
