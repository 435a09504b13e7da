#include "cnchar/series.hpp"

#include <stdexcept>

namespace cnchar {

TruncatedSeries::TruncatedSeries(int truncation, int colours) : truncation_(truncation), colours_(colours) {
  if (truncation < 0) throw std::invalid_argument("negative truncation");
  if (colours < 0) throw std::invalid_argument("negative colour count");
}

TruncatedSeries TruncatedSeries::one(int truncation, int colours) {
  TruncatedSeries s(truncation, colours);
  s.add_term(0, ColourMonomial::zero(colours), 1);
  return s;
}

Integer TruncatedSeries::coefficient(int q, const ColourMonomial& mono) const {
  auto it = terms_.find({q, mono});
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedSeries::add_term(int q, const ColourMonomial& mono, const Integer& c) {
  if (mono.size() != colours_) throw std::invalid_argument("monomial has wrong number of colours");
  if (q < 0) throw std::invalid_argument("negative q-degree");
  if (q > truncation_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q, mono}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o) const {
  if (truncation_ != o.truncation_) throw std::invalid_argument("truncation mismatch");
  if (colours_ != o.colours_) throw std::invalid_argument("colour count mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_compatible(o);
  for (const auto& [t, c] : o.terms_) add_term(t.first, t.second, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_compatible(o);
  for (const auto& [t, c] : o.terms_) add_term(t.first, t.second, -c);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b);
  TruncatedSeries r(a.truncation_, a.colours_);
  for (const auto& [ta, ca] : a.terms_)
    for (const auto& [tb, cb] : b.terms_) {
      int q = ta.first + tb.first;
      if (q > a.truncation_) continue;
      r.add_term(q, ta.second + tb.second, ca * cb);
    }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Integer& c) const {
  TruncatedSeries r(truncation_, colours_);
  for (const auto& [t, v] : terms_) r.add_term(t.first, t.second, v * c);
  return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b);
  return a.terms_ == b.terms_;
}

TruncatedSeries TruncatedSeries::forget_colours() const {
  TruncatedSeries r(truncation_, 0);
  for (const auto& [t, v] : terms_) r.add_term(t.first, ColourMonomial::zero(0), v);
  return r;
}

TruncatedSeries TruncatedSeries::lift(int colours) const {
  if (colours_ != 0) throw std::invalid_argument("lift needs a colourless series");
  TruncatedSeries r(truncation_, colours);
  for (const auto& [t, v] : terms_) r.add_term(t.first, ColourMonomial::zero(colours), v);
  return r;
}

std::vector<Integer> TruncatedSeries::q_coefficients() const {
  std::vector<Integer> out(static_cast<std::size_t>(truncation_ + 1));
  for (const auto& [t, v] : terms_) out[static_cast<std::size_t>(t.first)] += v;
  return out;
}

nlohmann::json TruncatedSeries::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& [t, v] : terms_)
    arr.push_back({{"q", t.first}, {"colour", t.second.exponents}, {"coeff", v.str()}});
  return arr;
}

TruncatedSeries TruncatedSeries::from_json(const nlohmann::json& j, int truncation, int colours) {
  TruncatedSeries s(truncation, colours);
  for (const auto& term : j) {
    ColourMonomial mono{term.at("colour").get<std::vector<int>>()};
    s.add_term(term.at("q").get<int>(), mono, Integer(term.at("coeff").get<std::string>()));
  }
  return s;
}

TruncatedSeries pochhammer(int j, int mod, int truncation) {
  if (j < 1 || mod < 1) throw std::invalid_argument("pochhammer needs positive exponents");
  auto r = TruncatedSeries::one(truncation, 0);
  const auto zero = ColourMonomial::zero(0);
  for (int e = j; e <= truncation; e += mod) {
    // multiply by (1 - q^e) in place, from the top degree down
    auto coeffs = r.q_coefficients();
    TruncatedSeries next(truncation, 0);
    for (int d = 0; d <= truncation; ++d) {
      Integer c = coeffs[static_cast<std::size_t>(d)];
      if (d >= e) c -= coeffs[static_cast<std::size_t>(d - e)];
      next.add_term(d, zero, c);
    }
    r = std::move(next);
  }
  return r;
}

TruncatedSeries inverse_pochhammer(int j, int mod, int truncation) {
  if (j < 1 || mod < 1) throw std::invalid_argument("pochhammer needs positive exponents");
  std::vector<Integer> c(static_cast<std::size_t>(truncation + 1));
  c[0] = 1;
  for (int e = j; e <= truncation; e += mod)
    for (int d = e; d <= truncation; ++d) c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - e)];
  TruncatedSeries r(truncation, 0);
  for (int d = 0; d <= truncation; ++d) r.add_term(d, ColourMonomial::zero(0), c[static_cast<std::size_t>(d)]);
  return r;
}

TruncatedSeries inverse_euler(int truncation) { return inverse_pochhammer(1, 1, truncation); }

std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
  auto diff = a - b;
  if (diff.is_zero()) return std::nullopt;
  const auto& [t, v] = *diff.terms().begin();
  return SeriesMismatch{t.first, t.second, a.coefficient(t.first, t.second), b.coefficient(t.first, t.second)};
}

nlohmann::json mismatch_json(const std::optional<SeriesMismatch>& m) {
  if (!m) return {{"status", "ok"}};
  return {{"status", "mismatch"},
          {"first_mismatch_degree", m->degree},
          {"colour", m->colour.exponents},
          {"lhs_coeff", m->lhs.str()},
          {"rhs_coeff", m->rhs.str()}};
}

CountAccumulator::CountAccumulator(int truncation, int colours)
    : truncation_(truncation), colours_(colours), cells_(static_cast<std::size_t>(truncation + 1)) {
  if (colours > 8) throw std::invalid_argument("at most 8 colours are supported");
}

CountAccumulator::Packed CountAccumulator::pack(const ColourMonomial& mono) {
  if (mono.size() > 8) throw std::invalid_argument("at most 8 colours are supported");
  Packed p{};
  for (int j = 0; j < mono.size(); ++j) p[static_cast<std::size_t>(j)] = static_cast<std::int16_t>(mono.exponents[static_cast<std::size_t>(j)]);
  return p;
}

std::size_t CountAccumulator::Hash::operator()(const Packed& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto v : p) {
    h ^= static_cast<std::uint16_t>(v);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

TruncatedSeries CountAccumulator::to_series() const {
  TruncatedSeries s(truncation_, colours_);
  for (int q = 0; q <= truncation_; ++q)
    for (const auto& [p, count] : cells_[static_cast<std::size_t>(q)]) {
      ColourMonomial mono{std::vector<int>(p.begin(), p.begin() + colours_)};
      s.add_term(q, mono, Integer(count));
    }
  return s;
}

}  // namespace cnchar
