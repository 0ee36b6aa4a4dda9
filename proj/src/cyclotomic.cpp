/* Copyright (C) 2026 The chartwist authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#include "chartwist/cyclotomic.hpp"

#include "chartwist/error.hpp"
#include "chartwist/modular.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace chartwist {

namespace {

struct PrimePower {
  int p;
  int q; // p^k
};

std::vector<PrimePower> factor(int n) {
  std::vector<PrimePower> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    int q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.push_back({p, q});
  }
  if (n > 1)
    out.push_back({n, n});
  return out;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long inverse_mod(long a, long n) {
  long t = 0, nt = 1, r = n, nr = mod(a, n);
  while (nr != 0) {
    long qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  return mod(t, n);
}

// Component of exponent e (mod n) in the Z/q factor: e = sum_q (n/q) a_q.
long component(long e, int n, const PrimePower &pp) {
  long m = n / pp.q;
  return mod(e * inverse_mod(m % pp.q, pp.q), pp.q);
}

// Rewrites coeffs (indexed by exponent mod n) over the Zumbroich basis.
void zumbroich_reduce(int n, std::vector<Rational> &c) {
  if (n == 1)
    return;
  for (const auto &pp : factor(n)) {
    long m = n / pp.q;
    long step = pp.q / pp.p; // q/p
    for (long e = 0; e < n; ++e) {
      if (sgn(c[e]) == 0)
        continue;
      long a = component(e, n, pp);
      if (pp.p == 2) {
        if (a < pp.q / 2)
          continue;
        long target = mod(e - m * (pp.q / 2), n);
        c[target] -= c[e];
        c[e] = 0;
      } else {
        if (a >= step)
          continue;
        for (long i = 1; i < pp.p; ++i)
          c[mod(e + m * step * i, n)] -= c[e];
        c[e] = 0;
      }
    }
  }
}

// One conductor-descent step; returns false when n is already minimal.
bool descend(int &n, std::vector<Rational> &c) {
  if (n == 1)
    return false;
  if (n % 4 == 2) {
    std::vector<Rational> out(n / 2);
    for (int e = 0; e < n; ++e)
      if (sgn(c[e]) != 0)
        out[e / 2] += c[e]; // basis exponents are even here
    n /= 2;
    c = std::move(out);
    zumbroich_reduce(n, c);
    return true;
  }
  for (const auto &pp : factor(n)) {
    const int p = pp.p;
    if (pp.q != p || p == 2) {
      // p^2 | n: the subfield is spanned by exponents divisible by p.
      bool ok = true;
      for (int e = 0; e < n && ok; ++e)
        if (sgn(c[e]) != 0 && e % p != 0)
          ok = false;
      if (!ok)
        continue;
      std::vector<Rational> out(n / p);
      for (int e = 0; e < n; e += p)
        out[e / p] = c[e];
      n /= p;
      c = std::move(out);
      zumbroich_reduce(n, c);
      return true;
    }
    // p || n, p odd: coefficients must agree along each zeta_p fibre.
    const long m = n / p;
    bool ok = true;
    std::vector<Rational> out(n / p);
    std::vector<char> seen(n, 0);
    for (long e = 0; e < n && ok; ++e) {
      if (sgn(c[e]) == 0 || seen[e])
        continue;
      long a = component(e, n, pp);
      long base = mod(e - m * a, n);
      const Rational &ref = c[mod(base + m, n)];
      for (long i = 1; i < p; ++i) {
        long f = mod(base + m * i, n);
        seen[f] = 1;
        if (c[f] != ref) {
          ok = false;
          break;
        }
      }
      if (ok)
        out[base / p] = -ref;
    }
    if (!ok)
      continue;
    n /= p;
    c = std::move(out);
    zumbroich_reduce(n, c);
    return true;
  }
  return false;
}

} // namespace

Cyclotomic::Cyclotomic(long value) {
  if (value != 0)
    terms_.emplace_back(0, Rational(value));
}

Cyclotomic::Cyclotomic(const Rational &value) {
  if (sgn(value) != 0) {
    terms_.emplace_back(0, value);
    terms_[0].second.canonicalize(); // mpq_class(num, den) does not reduce
  }
}

Cyclotomic Cyclotomic::root_of_unity(int n, long k) {
  if (n <= 0)
    throw Error(ErrorCode::InvalidArgument, "root_of_unity: n must be positive");
  std::vector<Rational> c(n);
  c[mod(k, n)] = 1;
  return from_dense(n, std::move(c));
}

Cyclotomic Cyclotomic::from_dense(int n, std::vector<Rational> coeffs) {
  if (n <= 0 || static_cast<int>(coeffs.size()) != n)
    throw Error(ErrorCode::InvalidArgument, "from_dense: size mismatch");
  for (auto &q : coeffs)
    q.canonicalize();
  Cyclotomic out;
  out.assign_canonical(n, coeffs);
  return out;
}

void Cyclotomic::assign_canonical(int n, std::vector<Rational> &c) {
  zumbroich_reduce(n, c);
  while (descend(n, c)) {
  }
  conductor_ = n;
  terms_.clear();
  for (int e = 0; e < n; ++e)
    if (sgn(c[e]) != 0)
      terms_.emplace_back(e, std::move(c[e]));
  if (terms_.empty())
    conductor_ = 1;
}

std::vector<Rational> Cyclotomic::dense(int n) const {
  if (n % conductor_ != 0)
    throw Error(ErrorCode::InvalidArgument, "dense: conductor does not divide n");
  std::vector<Rational> c(n);
  const int scale = n / conductor_;
  for (const auto &[e, q] : terms_)
    c[e * scale] = q;
  return c;
}

bool Cyclotomic::is_integer() const {
  return is_rational() &&
         (terms_.empty() || terms_[0].second.get_den() == 1);
}

bool Cyclotomic::is_nonneg_integer() const {
  return is_integer() && (terms_.empty() || sgn(terms_[0].second) > 0);
}

bool Cyclotomic::is_one() const {
  return conductor_ == 1 && terms_.size() == 1 && terms_[0].second == 1;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational())
    throw Error(ErrorCode::NotAnInteger, "value " + to_string() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Integer Cyclotomic::to_integer() const {
  if (!is_integer())
    throw Error(ErrorCode::NotAnInteger, "value " + to_string() + " is not an integer");
  return terms_.empty() ? Integer(0) : terms_[0].second.get_num();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto &t : out.terms_)
    t.second = -t.second;
  return out;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  if (conductor_ == 1 && o.conductor_ == 1) {
    terms_[0].second += o.terms_[0].second;
    if (sgn(terms_[0].second) == 0)
      terms_.clear();
    return *this;
  }
  int n = std::lcm(conductor_, o.conductor_);
  std::vector<Rational> c = dense(n);
  const int scale = n / o.conductor_;
  for (const auto &[e, q] : o.terms_)
    c[e * scale] += q;
  assign_canonical(n, c);
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) { return *this += -o; }

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o) {
  if (is_zero())
    return *this;
  if (o.is_zero()) {
    terms_.clear();
    conductor_ = 1;
    return *this;
  }
  if (o.conductor_ == 1) {
    for (auto &t : terms_)
      t.second *= o.terms_[0].second;
    return *this;
  }
  if (conductor_ == 1) {
    Rational s = terms_[0].second;
    *this = o;
    for (auto &t : terms_)
      t.second *= s;
    return *this;
  }
  const int n = std::lcm(conductor_, o.conductor_);
  const int sa = n / conductor_, sb = n / o.conductor_;
  std::vector<Rational> c(n);
  for (const auto &[ea, qa] : terms_)
    for (const auto &[eb, qb] : o.terms_)
      c[(ea * sa + eb * sb) % n] += qa * qb;
  assign_canonical(n, c);
  return *this;
}

Cyclotomic &Cyclotomic::operator/=(const Cyclotomic &o) {
  return *this *= o.inverse();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero())
    throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational())
    return Cyclotomic(Rational(1) / terms_[0].second);
  // x^-1 = (prod of the other Galois conjugates) / norm
  Cyclotomic others(1L);
  for (int k = 2; k < conductor_; ++k)
    if (std::gcd(k, conductor_) == 1)
      others *= galois(k);
  Cyclotomic norm = *this * others;
  return others * Cyclotomic(Rational(1) / norm.to_rational());
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(long k) const {
  if (conductor_ == 1)
    return *this;
  if (std::gcd(mod(k, conductor_), static_cast<long>(conductor_)) != 1)
    throw Error(ErrorCode::NotCoprime, "galois: exponent not coprime to conductor");
  std::vector<Rational> c(conductor_);
  for (const auto &[e, q] : terms_)
    c[mod(static_cast<long>(e) * k, conductor_)] += q;
  return from_dense(conductor_, std::move(c));
}

int Cyclotomic::compare(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.conductor_ != b.conductor_)
    return a.conductor_ < b.conductor_ ? -1 : 1;
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int ea = i < a.terms_.size() ? a.terms_[i].first : a.conductor_;
    int eb = j < b.terms_.size() ? b.terms_[j].first : b.conductor_;
    int e = std::min(ea, eb);
    Rational qa = ea == e ? a.terms_[i].second : Rational(0);
    Rational qb = eb == e ? b.terms_[j].second : Rational(0);
    if (qa != qb)
      return qa > qb ? -1 : 1;
    if (ea == e)
      ++i;
    if (eb == e)
      ++j;
  }
  return 0;
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty())
    return "0";
  if (is_rational())
    return terms_[0].second.get_str();
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, q] : terms_) {
    std::string root = "E(" + std::to_string(conductor_) + ")";
    if (e != 1)
      root += "^" + std::to_string(e);
    if (e == 0)
      root = "";
    Rational mag = abs(q);
    if (sgn(q) < 0)
      os << (first ? "-" : "-");
    else if (!first)
      os << "+";
    if (root.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << root;
    else
      os << mag.get_str() << "*" << root;
    first = false;
  }
  return os.str();
}

nlohmann::ordered_json Cyclotomic::to_json() const {
  nlohmann::ordered_json j;
  j["conductor"] = conductor_;
  auto terms = nlohmann::ordered_json::array();
  for (const auto &[e, q] : terms_)
    terms.push_back({e, q.get_num().get_str() + "/" + q.get_den().get_str()});
  j["terms"] = std::move(terms);
  return j;
}

Cyclotomic Cyclotomic::from_json(const nlohmann::json &j) {
  try {
    int n = j.at("conductor").get<int>();
    if (n <= 0)
      throw Error(ErrorCode::ParseError, "cyclotomic: conductor must be positive");
    std::vector<Rational> c(n);
    for (const auto &t : j.at("terms")) {
      long e = t.at(0).get<long>();
      Rational q(t.at(1).get<std::string>());
      q.canonicalize();
      c[mod(e, n)] += q;
    }
    return from_dense(n, std::move(c));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::ParseError, std::string("cyclotomic: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw Error(ErrorCode::ParseError, "cyclotomic: malformed rational");
  }
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<int>()(conductor_);
  for (const auto &[e, q] : terms_) {
    h = h * 1000003u ^ std::hash<int>()(e);
    h = h * 1000003u ^ std::hash<std::string>()(q.get_str());
  }
  return h;
}

std::uint64_t reduce_mod_p(const Cyclotomic &x, std::uint64_t p, int n,
                           std::uint64_t omega) {
  if (n % x.conductor() != 0)
    throw Error(ErrorCode::InvalidArgument, "reduce_mod_p: conductor does not divide n");
  const modp::Field f(p);
  const std::uint64_t scale = static_cast<std::uint64_t>(n / x.conductor());
  std::uint64_t acc = 0;
  for (const auto &[e, q] : x.terms()) {
    std::uint64_t num = f.from_integer(q.get_num());
    std::uint64_t den = f.from_integer(q.get_den());
    if (den == 0)
      throw Error(ErrorCode::DivisionByZero, "reduce_mod_p: p divides a denominator");
    std::uint64_t term = f.mul(num, f.inv(den));
    acc = f.add(acc, f.mul(term, f.pow(omega, scale * static_cast<std::uint64_t>(e))));
  }
  return acc;
}

} // namespace chartwist
