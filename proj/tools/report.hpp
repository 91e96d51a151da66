#pragma once

// Serialization of tables and anomaly certificates.
//
// A table row is {"type": name, "a": string or null, "entries": [...]} with
// one entry {"i", "j", "k", "value"} per independent structure constant mu^i_jk
// (1-based indices, zeros included). Values use the canonical expression
// syntax, so they parse back exactly.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "opbianchi/quantum_bianchi.hpp"

namespace opbianchi::report {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

/// Row of a table after serialization; values are kept as text.
struct TableRow {
  std::string type;
  std::optional<std::string> a;
  std::array<std::string, 9> values;  // order of kIndependentEntries
};

TableRow make_row(const BianchiType& t, const StructureTensor<Rational>& mu);
TableRow make_row(const BianchiType& t, const PolyStructureTensor& mu);
TableRow make_row(const BianchiType& t, const QuantumStructureTensor& mu);

struct TableDocument {
  std::string table;  // bianchi, deformed or quantum
  std::optional<Rational> omega;
  std::optional<Rational> p0;
  std::vector<TableRow> rows;
};

std::string render(const TableDocument& doc, Format format);

nlohmann::ordered_json to_json(const TableDocument& doc);
/// Throws std::invalid_argument on schema violations.
TableDocument table_from_json(const nlohmann::ordered_json& j);

/// Tensors rebuilt from a parsed row, using radicand 2 p0 for "s".
StructureTensor<Rational> rational_tensor(const TableRow& row);
PolyStructureTensor poly_tensor(const TableRow& row, const Rational& radicand);
QuantumStructureTensor quantum_tensor(const TableRow& row, const Rational& radicand);

nlohmann::ordered_json to_json(const AnomalyCertificate& cert);
std::string render_text(const AnomalyCertificate& cert);

}  // namespace opbianchi::report
