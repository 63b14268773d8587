#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "anyon/category.hpp"
#include "anyon/dimer.hpp"
#include "anyon/partial_transpose.hpp"

namespace anyon {

// Category document:
// {
//   "format": "anyon-category/1",
//   "name": "...",
//   "labels": [{"name": "I", "dual": 0, "qdim": 1.0, "twist": [re, im], "fs": [re, im]}, ...],
//   "fusion": [[a, b, c, N], ...],                  nonzero entries only
//   "F": [{"a":, "b":, "c":, "d":, "rows":, "cols":, "entries": [[re, im], ...]}, ...],
//   "R": [{"a":, "b":, "c":, "entries": [[re, im], ...]}, ...]
// }
// Labels are referenced by position; matrices are row-major. The F table
// grows like n^5, so export is limited to kMaxExportLabels labels.
inline constexpr int kMaxExportLabels = 25;
nlohmann::json category_to_json(const Category& cat);
Category category_from_json(const nlohmann::json& doc);

Category load_category(const std::string& path);
void save_category(const Category& cat, const std::string& path);

// FNV-1a over the name, labels and fusion rules.
std::string category_hash(const Category& cat);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& entries, std::size_t rows, std::size_t cols);

nlohmann::json dimer_to_json(const DimerState& s);
DimerState dimer_from_json(std::shared_ptr<const Category> cat, const nlohmann::json& doc);

nlohmann::json pt_to_json(const PTResult& pt, const Category& cat);

}  // namespace anyon
