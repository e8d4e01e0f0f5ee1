#pragma once

#include <string>

#include <json.hpp>

#include "qsb/holo_series.hpp"
#include "qsb/slice_bergman.hpp"
#include "qsb/slice_series.hpp"

namespace qsb {

/// Quaternions serialize as [w, x, y, z] everywhere.
nlohmann::json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Frame& f);
Frame frame_from_json(const nlohmann::json& j);

/// {"frame": [[...i...],[...j...],[...k...]], "radius": 1.0, "coeffs": [[w,x,y,z], ...]}
nlohmann::json to_json(const HoloSeries& f);
HoloSeries holo_from_json(const nlohmann::json& j);

/// {"radius": 1.0, "coeffs": [[w,x,y,z], ...]}
nlohmann::json to_json(const SliceSeries& f);
SliceSeries slice_from_json(const nlohmann::json& j);

/// {"N": n, "gram": [[...]], "coeff": [[...]]}; the quadrature rule is not
/// persisted, so a reloaded kernel evaluates but cannot be rebuilt.
nlohmann::json to_json(const FirstKindKernel& k);
FirstKindKernel first_kind_from_json(const nlohmann::json& j);

/// Parses a file, mapping every failure onto ParseError.
nlohmann::json load_json_file(const std::string& path);

void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace qsb
