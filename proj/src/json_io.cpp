#include "anyon/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "anyon/errors.hpp"

namespace anyon {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "anyon-category/1";

json cplx_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

cplx cplx_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InvalidInput("complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

template <class T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InvalidInput(where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidInput(where + ": field '" + key + "' has the wrong type");
  }
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json e = json::array();
  for (const cplx& v : m.entries()) e.push_back(cplx_to_json(v));
  return e;
}

CMatrix matrix_from_json(const json& entries, std::size_t rows, std::size_t cols) {
  if (!entries.is_array() || entries.size() != rows * cols)
    throw InvalidInput("matrix needs " + std::to_string(rows * cols) + " entries");
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.entries()[i] = cplx_from_json(entries[i]);
  return m;
}

json category_to_json(const Category& cat) {
  const int n = cat.size();
  if (n > kMaxExportLabels)
    throw Unsupported("category " + cat.name() + " has " + std::to_string(n) + " labels; export supports at most " +
                      std::to_string(kMaxExportLabels));
  json doc;
  doc["format"] = kFormat;
  doc["name"] = cat.name();
  json labels = json::array();
  for (const Label& l : cat.labels())
    labels.push_back({{"name", l.name}, {"dual", l.dual}, {"qdim", l.qdim}, {"twist", cplx_to_json(l.twist)},
                      {"fs", cplx_to_json(l.fs)}});
  doc["labels"] = labels;
  json fusion = json::array(), F = json::array(), R = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (cat.N(a, b, c) > 0) {
          fusion.push_back({a, b, c, cat.N(a, b, c)});
          R.push_back({{"a", a}, {"b", b}, {"c", c}, {"entries", matrix_to_json(cat.r(a, b, c))}});
        }
        for (int d = 0; d < n; ++d) {
          if (cat.f_rows(a, b, c, d) == 0) continue;
          const CMatrix& m = cat.f(a, b, c, d);
          F.push_back({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"rows", m.rows()}, {"cols", m.cols()},
                       {"entries", matrix_to_json(m)}});
        }
      }
  doc["fusion"] = fusion;
  doc["F"] = F;
  doc["R"] = R;
  return doc;
}

Category category_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("category document must be a JSON object");
  if (doc.contains("format") && doc["format"] != kFormat)
    throw InvalidInput("unsupported category format " + doc["format"].dump());
  const std::string name = doc.value("name", std::string("custom"));
  if (!doc.contains("labels") || !doc["labels"].is_array() || doc["labels"].empty())
    throw InvalidInput("category document needs a non-empty 'labels' array");

  std::vector<Label> labels;
  for (std::size_t i = 0; i < doc["labels"].size(); ++i) {
    const json& lj = doc["labels"][i];
    const std::string where = "label " + std::to_string(i);
    Label l;
    l.id = static_cast<int>(i);
    l.name = field<std::string>(lj, "name", where);
    l.dual = field<int>(lj, "dual", where);
    l.qdim = field<double>(lj, "qdim", where);
    l.twist = lj.contains("twist") ? cplx_from_json(lj["twist"]) : cplx(1.0);
    l.fs = lj.contains("fs") ? cplx_from_json(lj["fs"]) : cplx(1.0);
    labels.push_back(l);
  }
  const int n = static_cast<int>(labels.size());
  auto check_id = [&](int x, const std::string& where) {
    if (x < 0 || x >= n) throw InvalidInput(where + ": label index " + std::to_string(x) + " out of range");
    return x;
  };

  FusionRules fusion(n);
  if (!doc.contains("fusion") || !doc["fusion"].is_array()) throw InvalidInput("category document needs 'fusion'");
  for (const json& e : doc["fusion"]) {
    if (!e.is_array() || e.size() != 4) throw InvalidInput("fusion entries must be [a, b, c, N]");
    const std::string where = "fusion entry " + e.dump();
    fusion.set(check_id(e[0].get<int>(), where), check_id(e[1].get<int>(), where), check_id(e[2].get<int>(), where),
               e[3].get<int>());
  }

  auto sym = std::make_shared<TableSymbols>();
  for (const json& fj : doc.value("F", json::array())) {
    const std::string where = "F block " + fj.value("a", json()).dump() + "," + fj.value("b", json()).dump() + "," +
                              fj.value("c", json()).dump() + "," + fj.value("d", json()).dump();
    int a = check_id(field<int>(fj, "a", where), where), b = check_id(field<int>(fj, "b", where), where);
    int c = check_id(field<int>(fj, "c", where), where), d = check_id(field<int>(fj, "d", where), where);
    auto rows = field<std::size_t>(fj, "rows", where), cols = field<std::size_t>(fj, "cols", where);
    if (!fj.contains("entries")) throw InvalidInput(where + ": missing field 'entries'");
    sym->f[{a, b, c, d}] = matrix_from_json(fj["entries"], rows, cols);
  }
  for (const json& rj : doc.value("R", json::array())) {
    const std::string where = "R block";
    int a = check_id(field<int>(rj, "a", where), where), b = check_id(field<int>(rj, "b", where), where);
    int c = check_id(field<int>(rj, "c", where), where);
    if (!rj.contains("entries")) throw InvalidInput(where + ": missing field 'entries'");
    sym->r[{a, b, c}] = matrix_from_json(rj["entries"], fusion(a, b, c), fusion(b, a, c));
  }
  return Category(name, labels, fusion, sym);
}

Category load_category(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return category_from_json(doc);
}

void save_category(const Category& cat, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << category_to_json(cat).dump(1) << "\n";
}

std::string category_hash(const Category& cat) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  };
  mix(cat.name());
  char buf[64];
  for (const Label& l : cat.labels()) {
    std::snprintf(buf, sizeof buf, "|%s:%d:%.17g", l.name.c_str(), l.dual, l.qdim);
    mix(buf);
  }
  for (int a = 0; a < cat.size(); ++a)
    for (int b = 0; b < cat.size(); ++b)
      for (int c = 0; c < cat.size(); ++c)
        if (cat.N(a, b, c)) {
          std::snprintf(buf, sizeof buf, "|%d,%d,%d,%d", a, b, c, cat.N(a, b, c));
          mix(buf);
        }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json dimer_to_json(const DimerState& s) {
  const Category& cat = s.category();
  json channels = json::array();
  for (const auto& [f, m] : s.blocks())
    channels.push_back({{"label", cat.label(f).name}, {"rows", m.rows()}, {"entries", matrix_to_json(m)}});
  return {{"category", cat.name()},
          {"category_hash", category_hash(cat)},
          {"a", cat.label(s.a()).name},
          {"b", cat.label(s.b()).name},
          {"channels", channels}};
}

DimerState dimer_from_json(std::shared_ptr<const Category> cat, const json& doc) {
  const std::string where = "dimer";
  if (doc.contains("category_hash") && doc["category_hash"].get<std::string>() != category_hash(*cat))
    throw InvalidInput("dimer was written for a different category");
  const int a = cat->find(field<std::string>(doc, "a", where));
  const int b = cat->find(field<std::string>(doc, "b", where));
  std::map<int, CMatrix> p;
  for (const json& cj : doc.value("channels", json::array())) {
    const int f = cat->find(field<std::string>(cj, "label", where));
    const auto rows = field<std::size_t>(cj, "rows", where);
    p[f] = matrix_from_json(cj.at("entries"), rows, rows);
  }
  return DimerState::make(std::move(cat), a, b, std::move(p));
}

json pt_to_json(const PTResult& pt, const Category& cat) {
  json channels = json::array();
  for (const auto& [c, m] : pt.m)
    channels.push_back({{"label", cat.label(c).name},
                        {"weight", pt.weight.at(c)},
                        {"trace_norm", trace_norm(m)},
                        {"rows", m.rows()},
                        {"entries", matrix_to_json(m)}});
  return {{"side", pt.side == Side::A ? "A" : "B"}, {"aln", pt.aln()}, {"channels", channels}};
}

}  // namespace anyon
