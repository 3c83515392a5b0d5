// Copyright 2026 The mdlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Multidimensional periodic sequences stored as one fundamental period.
//
// Layout: row-major with axis 1 slowest and axis n fastest, so the linear
// index of m is m_1*(T_2...T_n) + m_2*(T_3...T_n) + ... + m_n.

#ifndef MDLC_SEQARRAY_HPP
#define MDLC_SEQARRAY_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mdlc/error.hpp"
#include "mdlc/gf.hpp"
#include "mdlc/monomial.hpp"
#include "mdlc/polynomial.hpp"
#include "mdlc/rng.hpp"

namespace mdlc::seq {

using Periods = std::vector<std::uint32_t>;

class PeriodicArray {
 public:
  PeriodicArray() = default;

  /// Zero array of the given shape.
  PeriodicArray(FieldSpec field, Periods periods) : field_(std::move(field)), periods_(std::move(periods)) {
    if (periods_.empty()) throw DimensionError("periods must be non-empty");
    std::size_t total = 1;
    for (auto t : periods_) {
      if (t < 1) throw DimensionError("periods must be positive");
      total *= t;
    }
    strides_.assign(periods_.size(), 1);
    for (std::size_t i = periods_.size() - 1; i-- > 0;) strides_[i] = strides_[i + 1] * periods_[i + 1];
    data_.assign(total, field_.zero());
  }

  PeriodicArray(FieldSpec field, Periods periods, std::vector<FieldElement> data)
      : PeriodicArray(std::move(field), std::move(periods)) {
    if (data.size() != data_.size())
      throw DimensionError("data length " + std::to_string(data.size()) +
                           " does not match period product " + std::to_string(data_.size()));
    for (const auto& x : data)
      if (!field_.is_canonical(x)) throw FieldError("element is not canonical in the field");
    data_ = std::move(data);
  }

  /// Prime-field convenience constructor from residues.
  static PeriodicArray from_ints(const FieldSpec& field, Periods periods,
                                 const std::vector<std::uint64_t>& values) {
    std::vector<FieldElement> d;
    d.reserve(values.size());
    for (auto v : values) {
      if (v >= field.p()) throw FieldError("residue " + std::to_string(v) + " out of range");
      d.push_back(field.from_int(v));
    }
    return PeriodicArray(field, std::move(periods), std::move(d));
  }

  const FieldSpec& field() const noexcept { return field_; }
  const Periods& periods() const noexcept { return periods_; }
  std::size_t dimension() const noexcept { return periods_.size(); }
  std::size_t volume() const noexcept { return data_.size(); }
  const std::vector<FieldElement>& data() const noexcept { return data_; }

  const FieldElement& operator[](std::size_t linear) const { return data_[linear]; }
  void set(std::size_t linear, const FieldElement& v) { data_[linear] = v; }

  /// Linear index of (m_1 mod T_1, ..., m_n mod T_n).
  std::size_t linear_index(const ExponentVector& m) const {
    if (m.size() != periods_.size()) throw DimensionError("index has wrong dimension");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < periods_.size(); ++i) idx += (m[i] % periods_[i]) * strides_[i];
    return idx;
  }

  ExponentVector coordinates(std::size_t linear) const {
    ExponentVector m(periods_.size());
    for (std::size_t i = 0; i < periods_.size(); ++i) {
      m[i] = static_cast<std::uint32_t>(linear / strides_[i]);
      linear %= strides_[i];
    }
    return m;
  }

  const std::vector<std::size_t>& strides() const noexcept { return strides_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const PeriodicArray& a, const PeriodicArray& b) {
    return a.field_ == b.field_ && a.periods_ == b.periods_ && a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  Periods periods_;
  std::vector<std::size_t> strides_;
  std::vector<FieldElement> data_;
};

/// s(m) of the periodic extension; defined on all of N_0^n.
inline FieldElement at(const PeriodicArray& s, const ExponentVector& m) {
  return s[s.linear_index(m)];
}

/// The sequence Ps with Ps(m) = sum_j a_j s(m + j), over the fundamental box.
inline PeriodicArray apply_polynomial(const PolynomialFq& P, const PeriodicArray& s) {
  if (P.dimension() != s.dimension()) throw DimensionError("polynomial and array dimensions differ");
  const auto& f = s.field();
  PeriodicArray out(f, s.periods());
  for (std::size_t lin = 0; lin < s.volume(); ++lin) {
    const ExponentVector m = s.coordinates(lin);
    FieldElement acc = f.zero();
    for (const auto& [j, a] : P.terms()) {
      if (!f.is_canonical(a)) throw FieldError("polynomial coefficient is not in the array's field");
      acc = f.add(acc, f.mul(a, at(s, m + j)));
    }
    out.set(lin, acc);
  }
  return out;
}

inline std::size_t hamming_distance(const PeriodicArray& s, const PeriodicArray& t) {
  if (s.periods() != t.periods() || !(s.field() == t.field()))
    throw DimensionError("arrays differ in shape or field");
  std::size_t d = 0;
  for (std::size_t i = 0; i < s.volume(); ++i) d += s[i] != t[i];
  return d;
}

inline bool pairwise_coprime(const Periods& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (std::gcd(t[i], t[j]) != 1) return false;
  return true;
}

/// t(m) = s(m mod T_1, ..., m mod T_n) for pairwise coprime periods.
inline PeriodicArray crt_fold(const PeriodicArray& s) {
  if (!pairwise_coprime(s.periods()))
    throw CoprimalityError("periods are not pairwise coprime");
  const std::size_t N = s.volume();
  PeriodicArray t(s.field(), {static_cast<std::uint32_t>(N)});
  ExponentVector m(s.dimension());
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t i = 0; i < s.dimension(); ++i) m[i] = static_cast<std::uint32_t>(k % s.periods()[i]);
    t.set(k, at(s, m));
  }
  return t;
}

/// Array whose entries are drawn independently and uniformly from F_q, in
/// linear-index order, each coefficient by rejection sampling from SplitMix64.
inline PeriodicArray random_array(const FieldSpec& field, const Periods& periods, std::uint64_t seed) {
  SplitMix64 rng(seed);
  PeriodicArray s(field, periods);
  for (std::size_t i = 0; i < s.volume(); ++i) s.set(i, field.random(rng));
  return s;
}

// ---------------------------------------------------------------------------
// File format: {"field":{"p":..,"e":..[,"modulus":[..]]},"periods":[..],"data":[..]}

using ordered_json = nlohmann::ordered_json;

inline ordered_json field_to_json(const FieldSpec& f) {
  ordered_json j;
  j["p"] = f.p();
  j["e"] = f.e();
  if (f.e() > 1) j["modulus"] = f.modulus();
  return j;
}

inline FieldSpec field_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw FormatError("field: expected an object");
  if (!j.contains("p") || !j["p"].is_number_unsigned()) throw FormatError("field.p: expected a non-negative integer");
  if (!j.contains("e") || !j["e"].is_number_unsigned()) throw FormatError("field.e: expected a non-negative integer");
  const auto p = j["p"].get<std::uint64_t>();
  const auto e = j["e"].get<std::uint64_t>();
  std::optional<std::vector<std::uint64_t>> modulus;
  if (e > 1) {
    if (!j.contains("modulus") || !j["modulus"].is_array())
      throw FormatError("field.modulus: required when e > 1");
    std::vector<std::uint64_t> m;
    for (std::size_t i = 0; i < j["modulus"].size(); ++i) {
      const auto& c = j["modulus"][i];
      if (!c.is_number_unsigned()) throw FormatError("field.modulus[" + std::to_string(i) + "]: expected integer");
      m.push_back(c.get<std::uint64_t>());
    }
    modulus = std::move(m);
  } else if (j.contains("modulus")) {
    throw FormatError("field.modulus: only allowed when e > 1");
  }
  if (e > gf::kMaxDegree) throw FormatError("field.e: " + std::to_string(e) + " outside [1, 16]");
  try {
    return FieldSpec::make(p, static_cast<unsigned>(e), modulus);
  } catch (const FieldError& err) {
    throw FormatError(std::string("field: ") + err.what());
  }
}

inline Periods periods_from_json(const ordered_json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("periods: expected a non-empty array");
  Periods t;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned() || j[i].get<std::uint64_t>() < 1 ||
        j[i].get<std::uint64_t>() > UINT32_MAX)
      throw FormatError("periods[" + std::to_string(i) + "]: expected a positive integer");
    t.push_back(j[i].get<std::uint32_t>());
  }
  return t;
}

inline ordered_json element_to_json(const FieldSpec& f, const FieldElement& x) {
  if (f.e() == 1) return ordered_json(x[0]);
  return ordered_json(f.to_coeffs(x));
}

inline FieldElement element_from_json(const FieldSpec& f, const ordered_json& v, const std::string& where) {
  if (f.e() == 1) {
    if (!v.is_number_unsigned()) throw FormatError(where + ": expected a non-negative integer");
    const auto x = v.get<std::uint64_t>();
    if (x >= f.p())
      throw FormatError(where + ": entry " + std::to_string(x) + " out of range [0, " +
                        std::to_string(f.p() - 1) + "]");
    return f.from_int(x);
  }
  if (!v.is_array() || v.size() != f.e())
    throw FormatError(where + ": expected an array of " + std::to_string(f.e()) + " coefficients");
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_unsigned() || v[i].get<std::uint64_t>() >= f.p())
      throw FormatError(where + "[" + std::to_string(i) + "]: coefficient out of range [0, " +
                        std::to_string(f.p() - 1) + "]");
    c.push_back(v[i].get<std::uint64_t>());
  }
  return f.from_coeffs(c);
}

inline ordered_json to_json(const PeriodicArray& s) {
  ordered_json j;
  j["field"] = field_to_json(s.field());
  j["periods"] = s.periods();
  ordered_json data = ordered_json::array();
  for (const auto& x : s.data()) data.push_back(element_to_json(s.field(), x));
  j["data"] = std::move(data);
  return j;
}

inline PeriodicArray from_json(const ordered_json& j) {
  if (!j.is_object()) throw FormatError("document: expected an object");
  for (const char* key : {"field", "periods", "data"})
    if (!j.contains(key)) throw FormatError(std::string("document: missing key '") + key + "'");
  const FieldSpec f = field_from_json(j["field"]);
  const Periods t = periods_from_json(j["periods"]);
  const auto& data = j["data"];
  if (!data.is_array()) throw FormatError("data: expected an array");
  std::size_t expected = 1;
  for (auto x : t) expected *= x;
  if (data.size() != expected)
    throw FormatError("data: length " + std::to_string(data.size()) + " does not match periods product " +
                      std::to_string(expected));
  std::vector<FieldElement> values;
  values.reserve(expected);
  for (std::size_t i = 0; i < data.size(); ++i)
    values.push_back(element_from_json(f, data[i], "data[" + std::to_string(i) + "]"));
  return PeriodicArray(f, t, std::move(values));
}

/// Canonical serialization: fixed key order, no whitespace.
inline std::string serialize(const PeriodicArray& s) { return to_json(s).dump(); }

inline PeriodicArray parse(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
  return from_json(j);
}

inline PeriodicArray read_array(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

inline void write_array(const PeriodicArray& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out << serialize(s);
}

}  // namespace mdlc::seq

#endif  // MDLC_SEQARRAY_HPP
