#ifndef WEDGEOPS_SERIALIZATION_HPP
#define WEDGEOPS_SERIALIZATION_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "wedgeops/trigpoly.hpp"

namespace wedgeops {

/// Series format:
///   { "valdim": m, "kmin": k, "coeffs": [ [[re, im], ...] x m per k ] }
/// Matrix symbols carry "rows"/"cols" instead of "valdim", with each
/// coefficient a rows x cols array of [re, im] pairs. All numbers must be
/// finite; round-trips through text are bit-exact.
nlohmann::json to_json(const VecTrigPoly& f);
VecTrigPoly series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MatSymbol& g);
MatSymbol symbol_from_json(const nlohmann::json& j);

VecTrigPoly load_series(const std::string& path);
void save_series(const VecTrigPoly& f, const std::string& path);

}  // namespace wedgeops

#endif
