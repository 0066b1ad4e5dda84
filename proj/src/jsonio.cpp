#include "ghz/jsonio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ghz {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::pair<int, int> line_column(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void reject_unknown(const json& obj, const std::vector<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      fail("unknown member \"" + key + "\" in " + where);
  }
}

int require_int(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) fail("missing member \"" + key + "\" in " + where);
  if (!obj[key].is_number_integer())
    fail("member \"" + key + "\" in " + where + " must be an integer");
  return obj[key].get<int>();
}

std::vector<int> int_array(const json& val, const std::string& what) {
  if (!val.is_array()) fail(what + " must be an array of integers");
  std::vector<int> out;
  out.reserve(val.size());
  for (const auto& item : val) {
    if (!item.is_number_integer()) fail(what + " must contain only integers");
    out.push_back(item.get<int>());
  }
  return out;
}

Base base_from_string(const std::string& s, const std::string& where) {
  if (s == "I") return Base::I;
  if (s == "X") return Base::X;
  if (s == "Y") return Base::Y;
  if (s == "Z") return Base::Z;
  fail("member \"base\" in " + where + " must be one of \"I\", \"X\", \"Y\", \"Z\"");
}

}  // namespace

std::string word_string(const EntryWord& w) {
  if (w.base == Base::I) return "I";
  std::string s(1, base_char(w.base));
  if (w.exp != 1) s += std::to_string(w.exp);
  return s;
}

TableDocument parse_table_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    fail("JSON syntax error at line " + std::to_string(line) + ", column " +
         std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) fail("the document must be a JSON object");
  reject_unknown(doc, {"schema_version", "label", "d", "parties", "rows", "expected"},
                 "the document");

  if (!doc.contains("schema_version")) fail("missing member \"schema_version\" in the document");
  if (!doc["schema_version"].is_string() || doc["schema_version"].get<std::string>() != "1")
    fail("unsupported schema_version (expected the string \"1\")");

  std::string label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail("member \"label\" must be a string");
    label = doc["label"].get<std::string>();
  }

  const int d = require_int(doc, "d", "the document");
  const int parties = require_int(doc, "parties", "the document");
  if (d < 2) fail("member \"d\" must be at least 2");
  if (parties < 1) fail("member \"parties\" must be at least 1");
  const Dimension dim{d};

  if (!doc.contains("rows") || !doc["rows"].is_array() || doc["rows"].empty())
    fail("member \"rows\" must be a nonempty array");
  std::vector<std::vector<EntryWord>> rows;
  rows.reserve(doc["rows"].size());
  for (size_t r = 0; r < doc["rows"].size(); ++r) {
    const json& jrow = doc["rows"][r];
    const std::string where = "rows[" + std::to_string(r) + "]";
    if (!jrow.is_array()) fail(where + " must be an array of entries");
    if (static_cast<int>(jrow.size()) != parties)
      fail(where + " must have exactly " + std::to_string(parties) + " entries");
    std::vector<EntryWord> row;
    row.reserve(parties);
    for (size_t c = 0; c < jrow.size(); ++c) {
      const json& cell = jrow[c];
      const std::string cw = where + "[" + std::to_string(c) + "]";
      if (!cell.is_object()) fail(cw + " must be an object {\"base\", \"exp\"}");
      reject_unknown(cell, {"base", "exp"}, cw);
      if (!cell.contains("base") || !cell["base"].is_string())
        fail("member \"base\" in " + cw + " must be a string");
      const Base b = base_from_string(cell["base"].get<std::string>(), cw);
      const int e = require_int(cell, "exp", cw);
      if (e < 0 || e >= d)
        fail("member \"exp\" in " + cw + " must lie in 0.." + std::to_string(d - 1));
      if (b == Base::I && e != 0) fail("identity entries in " + cw + " must have exp 0");
      try {
        row.push_back(make_word(e == 0 ? Base::I : b, e, dim));
      } catch (const std::invalid_argument& ex) {
        fail(cw + ": " + ex.what());
      }
    }
    rows.push_back(std::move(row));
  }

  TableDocument out{ParadoxTable(dim, parties, std::move(rows), label), {}};

  if (doc.contains("expected")) {
    const json& exp = doc["expected"];
    if (!exp.is_object()) fail("member \"expected\" must be an object");
    reject_unknown(exp, {"phase_exp", "eigenvalues"}, "\"expected\"");
    if (exp.contains("phase_exp")) {
      if (!exp["phase_exp"].is_number_integer()) fail("\"expected.phase_exp\" must be an integer");
      out.expected.phase_exp = exp["phase_exp"].get<int>();
    }
    if (exp.contains("eigenvalues")) {
      out.expected.eigenvalues = int_array(exp["eigenvalues"], "\"expected.eigenvalues\"");
      if (static_cast<int>(out.expected.eigenvalues->size()) != out.table.row_count())
        fail("\"expected.eigenvalues\" must have one entry per row");
    }
  }
  return out;
}

TableDocument load_table_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_table_document(buf.str());
  } catch (const std::invalid_argument& e) {
    fail(path + ": " + e.what());
  }
}

std::string table_document_to_json(const ParadoxTable& t, const ExpectedBlock& expected) {
  json doc;
  doc["schema_version"] = "1";
  if (!t.label.empty()) doc["label"] = t.label;
  doc["d"] = t.dim.d;
  doc["parties"] = t.parties;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json jr = json::array();
    for (const EntryWord& w : row) {
      json cell;
      cell["base"] = std::string(1, base_char(w.base));
      cell["exp"] = w.exp;
      jr.push_back(std::move(cell));
    }
    rows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(rows);
  if (!expected.empty()) {
    json exp;
    if (expected.phase_exp) exp["phase_exp"] = *expected.phase_exp;
    if (expected.eigenvalues) exp["eigenvalues"] = *expected.eigenvalues;
    doc["expected"] = std::move(exp);
  }
  return doc.dump(2) + "\n";
}

void save_table_document(const std::string& path, const ParadoxTable& t,
                         const ExpectedBlock& expected) {
  std::ofstream out(path);
  if (!out) fail("cannot open " + path + " for writing");
  out << table_document_to_json(t, expected);
}

std::string render_table(const ParadoxTable& t) {
  std::ostringstream out;
  out << (t.label.empty() ? std::string("table") : t.label) << "  (d=" << t.dim.d
      << ", parties=" << t.parties << ", lines=" << t.row_count() << ")\n";

  std::vector<size_t> width(t.parties, 1);
  for (const auto& row : t.rows) {
    for (int j = 0; j < t.parties; ++j) {
      const std::string s = row[j].base == Base::I ? "1" : word_string(row[j]);
      width[j] = std::max(width[j], s.size());
    }
  }
  for (int r = 0; r < t.row_count(); ++r) {
    out << "  ";
    for (int j = 0; j < t.parties; ++j) {
      const EntryWord& w = t.rows[r][j];
      const std::string s = w.base == Base::I ? "1" : word_string(w);
      out << s;
      if (j + 1 < t.parties) out << std::string(width[j] - s.size() + 1, ' ');
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace ghz
