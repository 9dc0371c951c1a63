#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "greenbound/linalg.hpp"

namespace greenbound {

/// Matrix JSON: {"n": N, "entries": [[[re, im], ...], ...]}, N rows of N
/// [re, im] pairs in row-major order. Throws InvalidInput on any deviation.
[[nodiscard]] ComplexMatrix matrix_from_json(const nlohmann::json& doc);
[[nodiscard]] ComplexMatrix parse_matrix_json(const std::string& text);
[[nodiscard]] ComplexMatrix read_matrix_file(const std::filesystem::path& path);

[[nodiscard]] nlohmann::json matrix_to_json(const ComplexMatrix& a);

}  // namespace greenbound
