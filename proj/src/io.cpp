#include "rkhs/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rkhs {

using nlohmann::json;

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  fail(ErrorKind::io, "CSV has no column '" + std::string(name) + "'");
}

const std::string& CsvTable::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata)
    if (k == key) return v;
  fail(ErrorKind::io, "CSV metadata has no key '" + std::string(key) + "'");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const CsvTable& table) {
  os << "# schema=" << kCsvSchema << '\n';
  os << '#';
  for (const auto& [k, v] : table.metadata) os << ' ' << k << '=' << v;
  os << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::io, "bad number '" + s + "' in CSV");
  }
  if (used != s.size()) fail(ErrorKind::io, "bad number '" + s + "' in CSV");
  return v;
}

}  // namespace

CsvTable read_csv(std::istream& is) {
  CsvTable t;
  std::string line;
  if (!std::getline(is, line) || line != std::string("# schema=") + kCsvSchema)
    fail(ErrorKind::io, "missing '# schema=rkhs-v1' header");
  if (!std::getline(is, line) || line.empty() || line[0] != '#')
    fail(ErrorKind::io, "missing metadata line");
  std::istringstream meta(line.substr(1));
  for (std::string kv; meta >> kv;) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail(ErrorKind::io, "bad metadata entry '" + kv + "'");
    t.metadata.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!std::getline(is, line)) fail(ErrorKind::io, "missing column header");
  t.columns = split(line, ',');
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != t.columns.size()) fail(ErrorKind::io, "CSV row has the wrong number of cells");
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_number(c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_csv_file(const std::string& path, const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  write_text_file(path, os.str());
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open '" + path + "'");
  return read_csv(in);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorKind::io, "write to '" + path + "' failed");
}

json to_json(const KernelSpec& spec) {
  json j{{"family", std::string(family_name(spec.family))}};
  switch (spec.family) {
    case KernelFamily::rbf: j["gamma"] = spec.gamma; break;
    case KernelFamily::mittag_leffler: j["q"] = spec.q; break;
    case KernelFamily::touchard: j["p"] = spec.p; break;
    default: break;
  }
  return j;
}

KernelSpec kernel_from_json(const json& j) {
  try {
    KernelSpec k;
    k.family = parse_family(j.at("family").get<std::string>());
    if (j.contains("gamma")) k.gamma = j.at("gamma").get<double>();
    if (j.contains("q")) k.q = j.at("q").get<double>();
    if (j.contains("p")) k.p = j.at("p").get<int>();
    k.validate();
    return k;
  } catch (const json::exception& e) {
    fail(ErrorKind::io, std::string("bad kernel spec: ") + e.what());
  }
}

namespace {

std::string kernel_meta(const KernelSpec& k) { return to_json(k).dump(); }

std::vector<Complex> read_complex(const CsvTable& t, const char* re, const char* im) {
  const std::size_t cr = t.column(re), ci = t.column(im);
  std::vector<Complex> v;
  v.reserve(t.rows.size());
  for (const auto& row : t.rows) v.emplace_back(row[cr], row[ci]);
  return v;
}

json complex_array(const ComplexVector& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back({z.real(), z.imag()});
  return a;
}

ComplexVector complex_from_json(const json& a) {
  ComplexVector v;
  for (const auto& e : a) v.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  return v;
}

}  // namespace

CsvTable to_table(const LabeledDataset& data, const KernelSpec& kernel) {
  CsvTable t;
  t.metadata = {{"kind", "dataset"}, {"lambda", format_double(data.lambda())},
                {"kernel", kernel_meta(kernel)}};
  t.columns = {"re_z", "im_z", "re_w", "im_w"};
  for (std::size_t i = 0; i < data.size(); ++i)
    t.rows.push_back({data.inputs()[i].real(), data.inputs()[i].imag(), data.outputs()[i].real(),
                      data.outputs()[i].imag()});
  return t;
}

LabeledDataset dataset_from_table(const CsvTable& t) {
  return LabeledDataset(read_complex(t, "re_z", "im_z"), read_complex(t, "re_w", "im_w"),
                        parse_number(t.meta("lambda")));
}

CsvTable to_table(const CoefficientExpansion& e) {
  CsvTable t;
  t.metadata = {{"kind", "expansion"}, {"kernel", kernel_meta(e.kernel())}};
  t.columns = {"re_z", "im_z", "re_alpha", "im_alpha"};
  for (std::size_t i = 0; i < e.size(); ++i)
    t.rows.push_back({e.centers()[i].real(), e.centers()[i].imag(), e.coefficients()[i].real(),
                      e.coefficients()[i].imag()});
  return t;
}

CoefficientExpansion expansion_from_table(const CsvTable& t) {
  KernelSpec k;
  try {
    k = kernel_from_json(json::parse(t.meta("kernel")));
  } catch (const json::exception& e) {
    fail(ErrorKind::io, std::string("bad kernel metadata: ") + e.what());
  }
  return CoefficientExpansion(read_complex(t, "re_z", "im_z"), read_complex(t, "re_alpha", "im_alpha"), k);
}

json to_json(const LabeledDataset& data, const KernelSpec& kernel) {
  return {{"kernel", to_json(kernel)},
          {"lambda", data.lambda()},
          {"inputs", complex_array(data.inputs())},
          {"outputs", complex_array(data.outputs())}};
}

json to_json(const CoefficientExpansion& e) {
  return {{"kernel", to_json(e.kernel())},
          {"centers", complex_array(e.centers())},
          {"coefficients", complex_array(e.coefficients())}};
}

LabeledDataset dataset_from_json(const json& j) {
  try {
    return LabeledDataset(complex_from_json(j.at("inputs")), complex_from_json(j.at("outputs")),
                          j.at("lambda").get<double>());
  } catch (const json::exception& e) {
    fail(ErrorKind::io, std::string("bad dataset JSON: ") + e.what());
  }
}

CoefficientExpansion expansion_from_json(const json& j) {
  try {
    return CoefficientExpansion(complex_from_json(j.at("centers")),
                                complex_from_json(j.at("coefficients")),
                                kernel_from_json(j.at("kernel")));
  } catch (const json::exception& e) {
    fail(ErrorKind::io, std::string("bad expansion JSON: ") + e.what());
  }
}

json to_json(const OutputFormulaReport& r) {
  json per_entry = json::array();
  for (std::size_t k = 0; k < r.w_oracle.size(); ++k) {
    const Complex f = r.w_formula[k], o = r.w_oracle[k];
    json e{{"k", k},
           {"w_formula", {f.real(), f.imag()}},
           {"w_oracle", {o.real(), o.imag()}},
           {"rel_err", std::abs(f - o) / std::max(1.0, std::abs(o))}};
    if (r.resolved) {
      const Complex v = r.resolved->w_formula[k];
      e["w_resolved"] = {v.real(), v.imag()};
    }
    per_entry.push_back(std::move(e));
  }
  json j{{"family", r.family},   {"n", r.n},
         {"a", r.a},             {"lambda", r.lambda},
         {"tolerance", r.tolerance}, {"max_rel_err", r.max_rel_err},
         {"verdict", r.match ? "match" : "mismatch"}, {"per_entry", std::move(per_entry)}};
  if (r.resolved)
    j["resolved"] = {{"max_rel_err", r.resolved->max_rel_err},
                     {"verdict", r.resolved->match ? "match" : "mismatch"}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace rkhs
