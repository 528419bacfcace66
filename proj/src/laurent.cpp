#include "lensball/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lensball {

LaurentPoly LaurentPoly::monomial(int exp, std::int64_t coef) {
  LaurentPoly p;
  if (coef != 0) {
    p.lo_ = exp;
    p.coef_.push_back(coef);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, std::int64_t>& terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

std::int64_t LaurentPoly::coef(int exp) const {
  if (coef_.empty() || exp < lo_ || exp > max_exp()) return 0;
  return coef_[static_cast<std::size_t>(exp - lo_)];
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < coef_.size(); ++i)
    if (coef_[i] != 0) out[lo_ + static_cast<int>(i)] = coef_[i];
  return out;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coef_.size() && coef_[first] == 0) ++first;
  if (first == coef_.size()) {
    coef_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = coef_.size();
  while (coef_[last - 1] == 0) --last;
  coef_ = std::vector<std::int64_t>(coef_.begin() + static_cast<std::ptrdiff_t>(first),
                                    coef_.begin() + static_cast<std::ptrdiff_t>(last));
  lo_ += static_cast<int>(first);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.coef_.empty()) return *this;
  if (coef_.empty()) return *this = o;
  const int lo = std::min(lo_, o.lo_), hi = std::max(max_exp(), o.max_exp());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coef_.size(); ++i) c[static_cast<std::size_t>(lo_ - lo) + i] += coef_[i];
  for (std::size_t i = 0; i < o.coef_.size(); ++i) c[static_cast<std::size_t>(o.lo_ - lo) + i] += o.coef_[i];
  lo_ = lo;
  coef_ = std::move(c);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.coef_.empty() || b.coef_.empty()) return r;
  r.lo_ = a.lo_ + b.lo_;
  r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coef_.size(); ++j) r.coef_[i + j] += a.coef_[i] * b.coef_[j];
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.coef_.empty()) r.lo_ += k;
  return r;
}

LaurentPoly LaurentPoly::inverted() const { return substituted(-1); }

LaurentPoly LaurentPoly::substituted(int k) const {
  if (k == 0) throw std::domain_error("LaurentPoly::substituted: k must be nonzero");
  LaurentPoly r;
  for (auto& [e, c] : terms()) r += monomial(e * k, c);
  return r;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  LaurentPoly rem = *this, q;
  const std::int64_t lead = d.coef_.back();
  while (!rem.is_zero()) {
    if (rem.coef_.size() < d.coef_.size() || rem.coef_.back() % lead != 0)
      throw std::domain_error("LaurentPoly: inexact division");
    const LaurentPoly t = monomial(rem.max_exp() - d.max_exp(), rem.coef_.back() / lead);
    q += t;
    rem -= t * d;
  }
  return q;
}

std::string LaurentPoly::str(const std::string& var, int exp_denominator) const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (exp_denominator == 2 && e % 2 != 0)
      os << "^(" << e << "/2)";
    else if (const int ee = exp_denominator == 2 ? e / 2 : e; ee != 1)
      os << "^" << ee;
  }
  return os.str();
}

}  // namespace lensball
