#include "hnil/graded_algebra.hpp"

#include "hnil/errors.hpp"

#include <stdexcept>

namespace hnil {

bool Monomial::is_unit() const {
  for (int e : exponents) {
    if (e != 0) return false;
  }
  return true;
}

Signature::Signature(std::vector<GeneratorSymbol> generators, std::optional<int> truncation)
    : generators_(std::move(generators)), truncation_(truncation) {}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw SignatureError("unknown generator " + std::string(name));
}

int Signature::degree(const Monomial& m) const {
  if (m.exponents.size() != generators_.size()) {
    throw SignatureError("monomial does not belong to this signature");
  }
  int d = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) d += m.exponents[i] * generators_[i].degree;
  return d;
}

Monomial Signature::generator(std::size_t i) const {
  Monomial m = unit();
  m.exponents.at(i) = 1;
  return m;
}

std::vector<Monomial> Signature::degree_basis(int k) const { return degree_basis(k, size()); }

namespace {

void enumerate(const Signature& sig, std::size_t prefix, std::size_t i, int remaining, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (i == prefix) {
    if (remaining == 0) out.push_back(Monomial{exps});
    return;
  }
  const int deg = sig[i].degree;
  int max_exp = remaining / deg;
  if (sig[i].odd() && max_exp > 1) max_exp = 1;
  for (int e = max_exp; e >= 0; --e) {
    exps[i] = e;
    enumerate(sig, prefix, i + 1, remaining - e * deg, exps, out);
  }
  exps[i] = 0;
}

}  // namespace

std::vector<Monomial> Signature::degree_basis(int k, std::size_t prefix) const {
  if (k < 0) return {};
  if (!within_budget(k)) {
    throw BudgetError("degree " + std::to_string(k) + " exceeds truncation degree " + std::to_string(*truncation_));
  }
  std::vector<Monomial> out;
  std::vector<int> exps(size(), 0);
  enumerate(*this, prefix, 0, k, exps, out);
  return out;
}

SignaturePtr make_signature(std::vector<GeneratorSymbol> generators, std::optional<int> truncation) {
  return std::make_shared<const Signature>(std::move(generators), truncation);
}

SignedMonomial multiply_monomials(const Signature& sig, const Monomial& a, const Monomial& b) {
  const std::size_t n = sig.size();
  if (a.exponents.size() != n || b.exponents.size() != n) {
    throw SignatureError("monomial does not belong to this signature");
  }
  SignedMonomial out{1, Monomial{std::vector<int>(n, 0)}};
  // Moving each odd factor of b leftwards past the odd factors of a that come
  // after it in declaration order costs one sign per crossing.
  int odd_in_a_after = 0;
  for (std::size_t i = n; i-- > 0;) {
    if (sig[i].odd()) {
      if (a.exponents[i] && b.exponents[i]) return {0, sig.unit()};
      if (b.exponents[i] && (odd_in_a_after % 2)) out.sign = -out.sign;
      odd_in_a_after += a.exponents[i];
    }
    out.monomial.exponents[i] = a.exponents[i] + b.exponents[i];
  }
  return out;
}

SignedMonomial normalize_monomial(const Signature& sig, const std::vector<std::pair<std::size_t, int>>& factors) {
  SignedMonomial acc{1, sig.unit()};
  for (const auto& [gen, exp] : factors) {
    if (gen >= sig.size()) throw SignatureError("generator index out of range");
    if (exp < 0) throw std::invalid_argument("normalize_monomial: negative exponent");
    if (exp == 0) continue;
    if (sig[gen].odd() && exp > 1) return {0, sig.unit()};
    Monomial power = sig.unit();
    power.exponents[gen] = exp;
    auto step = multiply_monomials(sig, acc.monomial, power);
    if (step.sign == 0) return {0, sig.unit()};
    acc.sign *= step.sign;
    acc.monomial = std::move(step.monomial);
  }
  return acc;
}

SignedMonomial normalize_monomial(const Signature& sig, const std::vector<std::pair<std::string, int>>& factors) {
  std::vector<std::pair<std::size_t, int>> indexed;
  indexed.reserve(factors.size());
  for (const auto& [name, exp] : factors) indexed.emplace_back(sig.index_of(name), exp);
  return normalize_monomial(sig, indexed);
}

Element Element::one(SignaturePtr sig) {
  Element e(sig);
  e.terms_.emplace(sig->unit(), 1);
  return e;
}

Element Element::generator(SignaturePtr sig, std::size_t i) {
  Element e(sig);
  e.add_term(sig->generator(i), 1);
  return e;
}

Element Element::generator(SignaturePtr sig, std::string_view name) {
  const std::size_t i = sig->index_of(name);
  return generator(std::move(sig), i);
}

Element Element::monomial(SignaturePtr sig, Monomial m, Rational coefficient) {
  Element e(std::move(sig));
  e.sig_->degree(m);  // shape check
  e.add_term(m, coefficient);
  return e;
}

Element Element::from_coordinates(SignaturePtr sig, const std::vector<Monomial>& basis, const Vector& coordinates) {
  if (basis.size() != coordinates.size()) throw std::invalid_argument("from_coordinates: size mismatch");
  Element e(std::move(sig));
  for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], coordinates[i]);
  return e;
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int dm = sig_->degree(m);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

std::optional<int> Element::max_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int dm = sig_->degree(m);
    if (!d || dm > *d) d = dm;
  }
  return d;
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Vector Element::coordinates(const std::vector<Monomial>& basis) const {
  Vector v(basis.size());
  std::size_t matched = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = terms_.find(basis[i]);
    if (it != terms_.end()) {
      v[i] = it->second;
      ++matched;
    }
  }
  if (matched != terms_.size()) {
    throw InvariantError("element " + format_element(*this) + " has terms outside the given basis");
  }
  return v;
}

Element Element::embedded(const SignaturePtr& target) const {
  Element out(target);
  if (!sig_) return out;
  if (target->size() < sig_->size()) throw SignatureError("embedding into a smaller signature");
  for (std::size_t i = 0; i < sig_->size(); ++i) {
    if ((*sig_)[i].name != (*target)[i].name || (*sig_)[i].degree != (*target)[i].degree) {
      throw SignatureError("target signature does not extend " + (*sig_)[i].name);
    }
  }
  for (const auto& [m, c] : terms_) {
    Monomial wide = target->unit();
    std::copy(m.exponents.begin(), m.exponents.end(), wide.exponents.begin());
    if (!target->within_budget(target->degree(wide))) continue;
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

void Element::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SignaturePtr Element::adopt(const Element& other) {
  if (!sig_) {
    sig_ = other.sig_;
  } else if (other.sig_ && other.sig_ != sig_ && !(*other.sig_ == *sig_)) {
    throw SignatureError("elements belong to different signatures");
  }
  return sig_;
}

Element& Element::operator+=(const Element& other) {
  adopt(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  adopt(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  Element out(a.sig_);
  out.adopt(b);
  if (a.is_zero() || b.is_zero()) return out;
  const Signature& sig = *out.sig_;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto p = multiply_monomials(sig, ma, mb);
      if (p.sign == 0 || !sig.within_budget(sig.degree(p.monomial))) continue;
      out.add_term(p.monomial, p.sign * ca * cb);
    }
  }
  return out;
}

Element multiply(const Element& u, const Element& v) { return u * v; }

Element apply_leibniz(const std::vector<Element>& values, int map_degree, const Element& u, Budget budget) {
  const SignaturePtr& sig_ptr = u.signature();
  Element out(sig_ptr);
  if (u.is_zero()) return out;
  const Signature& sig = *sig_ptr;
  if (values.size() != sig.size()) throw SignatureError("derivation values do not match the signature");

  const bool odd_map = map_degree % 2 != 0;
  for (const auto& [m, c] : u.terms()) {
    if (budget == Budget::strict && !sig.within_budget(sig.degree(m) + map_degree)) {
      throw BudgetError("result degree " + std::to_string(sig.degree(m) + map_degree) +
                        " exceeds truncation degree " + std::to_string(*sig.truncation()));
    }
    int degree_before = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const int e = m.exponents[i];
      if (e > 0 && !values[i].is_zero()) {
        Monomial left = sig.unit();
        Monomial right = sig.unit();
        for (std::size_t k = 0; k < i; ++k) left.exponents[k] = m.exponents[k];
        left.exponents[i] = e - 1;
        for (std::size_t k = i + 1; k < sig.size(); ++k) right.exponents[k] = m.exponents[k];
        // Every copy of g_i sits behind factors of the same total parity when
        // g_i is even, and odd g_i occur once, so the run contributes e times.
        Rational coeff = c * e;
        if (odd_map && degree_before % 2 != 0) coeff = -coeff;
        out += Element::monomial(sig_ptr, left, coeff) * values[i] * Element::monomial(sig_ptr, right);
      }
      degree_before += e * sig[i].degree;
    }
  }
  return out;
}

std::string format_monomial(const Signature& sig, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const int e = m.exponents[i];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += sig[i].name;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string format_element(const Element& u) {
  if (u.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? Rational(-c) : c;
    if (m.is_unit()) {
      s += format_rational(mag);
    } else {
      if (mag != 1) s += format_rational(mag) + '*';
      s += format_monomial(*u.signature(), m);
    }
  }
  return s;
}

}  // namespace hnil
