#pragma once

#include <variant>

#include <json.hpp>

#include "clonebound/bound_optimizer.hpp"
#include "clonebound/cloner_family.hpp"
#include "clonebound/pauli_algebra.hpp"
#include "clonebound/signaling_sim.hpp"

namespace clonebound {

using AnyClonerParams = std::variant<ClonerParams, GeneralClonerParams>;

// Matrices are nested row arrays of [re, im] pairs.
template <std::size_t N>
nlohmann::json matrix_to_json(const SquareMatrix<N>& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < N; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < N; ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

template <std::size_t N>
SquareMatrix<N> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != N) throw nlohmann::json::other_error::create(501, "matrix has wrong row count", &j);
  SquareMatrix<N> m;
  for (std::size_t r = 0; r < N; ++r) {
    const auto& row = j.at(r);
    if (!row.is_array() || row.size() != N)
      throw nlohmann::json::other_error::create(501, "matrix row has wrong length", &row);
    for (std::size_t c = 0; c < N; ++c) {
      const auto& e = row.at(c);
      if (!e.is_array() || e.size() != 2)
        throw nlohmann::json::other_error::create(501, "matrix entry must be [re, im]", &e);
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

void to_json(nlohmann::json& j, const BlochVector& v);
void from_json(const nlohmann::json& j, BlochVector& v);

void to_json(nlohmann::json& j, const ClonerParams& p);
void from_json(const nlohmann::json& j, ClonerParams& p);

void to_json(nlohmann::json& j, const GeneralClonerParams& p);
void from_json(const nlohmann::json& j, GeneralClonerParams& p);

void to_json(nlohmann::json& j, const PauliCoefficients& c);

void to_json(nlohmann::json& j, const BoundResult& r);

void to_json(nlohmann::json& j, const SignalReport& r);

nlohmann::json params_to_json(const AnyClonerParams& p);

// {"eta", "t": number, "t_xy"} -> ClonerParams, {"eta", "t": 3x3 array} ->
// GeneralClonerParams. Unknown keys and missing fields are errors
// (nlohmann::json::exception).
AnyClonerParams params_from_json(const nlohmann::json& j);

}  // namespace clonebound
